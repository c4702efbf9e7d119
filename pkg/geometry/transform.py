"""
아핀 변환 x -> scale * x + translate (축별 양수 배율)
"""

from fractions import Fraction
from functools import singledispatch
from typing import Sequence, Union

from errors import ConfigError
from models import Box, Instance, Point, RectilinearNetwork, Segment, as_rational
from .network import segment_key

ScaleLike = Union[int, str, Fraction, Sequence]


def _normalize(scale: ScaleLike, translate, d: int):
    if isinstance(scale, (list, tuple)):
        factors = tuple(as_rational(s) for s in scale)
    else:
        factors = (as_rational(scale),) * d
    if len(factors) != d:
        raise ConfigError(f"배율 개수({len(factors)})가 차원({d})과 다름")
    if any(f <= 0 for f in factors):
        raise ConfigError(f"배율은 양수여야 함: {factors}")

    if translate is None:
        shift = (Fraction(0),) * d
    elif isinstance(translate, Point):
        shift = translate.coords
    else:
        shift = tuple(as_rational(t) for t in translate)
    if len(shift) != d:
        raise ConfigError(f"평행이동 차원({len(shift)})이 차원({d})과 다름")
    return factors, shift


def transform(obj, scale: ScaleLike = 1, translate=None):
    """Point / Box / Segment / RectilinearNetwork / Instance 에 같은 변환 적용"""
    d = _dimension_of(obj)
    if d is None:
        return obj
    factors, shift = _normalize(scale, translate, d)
    return _apply(obj, factors, shift)


def _dimension_of(obj):
    if isinstance(obj, (Point, Box, Segment, Instance)):
        return obj.d
    if isinstance(obj, RectilinearNetwork):
        return obj.d
    raise TypeError(f"변환할 수 없는 타입: {type(obj).__name__}")


@singledispatch
def _apply(obj, factors, shift):
    raise TypeError(f"변환할 수 없는 타입: {type(obj).__name__}")


@_apply.register
def _(obj: Point, factors, shift):
    return Point(tuple(f * c + s for f, c, s in zip(factors, obj.coords, shift)))


@_apply.register
def _(obj: Box, factors, shift):
    t, u = obj.pair
    return Box.from_terminals(_apply(t, factors, shift), _apply(u, factors, shift))


@_apply.register
def _(obj: Segment, factors, shift):
    return Segment(a=_apply(obj.a, factors, shift), b=_apply(obj.b, factors, shift), axis=obj.axis)


@_apply.register
def _(obj: RectilinearNetwork, factors, shift):
    # 축별 양수 배율은 순서와 병합 상태를 보존
    moved = [_apply(s, factors, shift) for s in obj.segments]
    if not obj.canonical:
        moved.sort(key=segment_key)
    return RectilinearNetwork(tuple(moved), canonical=obj.canonical)


@_apply.register
def _(obj: Instance, factors, shift):
    pairs = tuple(_apply(box, factors, shift) for box in obj.pairs)
    separators = tuple(f * s + t for f, s, t in zip(factors, obj.separators, shift))
    return obj.with_pairs(pairs, separators)
