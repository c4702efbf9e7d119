"""
tight 계열 A(n), n = 2^k - 1
최상위 단위 정사각형 S_n = [-1,0]^2 와 재귀적으로 축소한 두 복사본
  - A_right: A(m) 을 한 변 ε 로 축소, bounding box 가 [ε, 2ε]^2
  - A_left : A(m) 을 한 변 1-ε 로 축소, S_n 안 가운데 (여백 ε/2)
모든 쌍은 대각선을 따라가는 단조 경로 하나로 연결되며, 그 길이를 최상위 대각선 거리로 나누면 1+2ε
"""

from fractions import Fraction
from typing import List, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import ConfigError
from models import Instance, Point, as_rational
from geometry.network import network_length, union_networks
from geometry.transform import transform
from arborescence.helly import canonical_m_path
from .base import BaseGenerator, GeneratedInstance

DEFAULT_EPSILON = Fraction(1, 16)
TOP_DIAGONAL = Fraction(2)

_LOWER = Point.of(-1, -1)
_UPPER = Point.of(0, 0)


def _arrangement(k: int, eps: Fraction) -> Tuple[List[Tuple[Point, Point]], List[Point]]:
    """(쌍 목록, 인증서 경유점 목록)"""
    if k == 0:
        return [], []
    if k == 1:
        return [(_LOWER, _UPPER)], [_LOWER, _UPPER]

    pairs, chain = _arrangement(k - 1, eps)
    side = Fraction(1) if k == 2 else 1 + 2 * eps
    placed = {}
    for name, size, corner in (("left", 1 - eps, -1 + eps / 2), ("right", eps, eps)):
        factor = size / side
        # (-1,-1) 모서리를 corner 로 옮김
        shift = (corner + factor, corner + factor)
        placed[name] = (
            [(transform(t, factor, shift), transform(u, factor, shift)) for t, u in pairs],
            [transform(p, factor, shift) for p in chain],
        )

    left_pairs, left_chain = placed["left"]
    right_pairs, right_chain = placed["right"]
    return (
        [(_LOWER, _UPPER)] + left_pairs + right_pairs,
        [_LOWER] + left_chain + [_UPPER] + right_chain,
    )


def gen_tight(k: int, eps=DEFAULT_EPSILON) -> GeneratedInstance:
    """A(2^k - 1) 과 그 인증서 (단조 경로)"""
    eps = as_rational(eps)
    if not isinstance(k, int) or k < 0:
        raise ConfigError(f"k 는 0 이상의 정수: {k!r}")
    if not 0 < eps < Fraction(1, 4):
        raise ConfigError(f"ε 는 0 < ε < 1/4 이어야 함: {eps}")

    pairs, chain = _arrangement(k, eps)
    inst = Instance.from_pairs(2, pairs, provenance=f"tight k={k} eps={eps}")
    certificate = union_networks(*(canonical_m_path(a, b) for a, b in zip(chain, chain[1:])))
    return GeneratedInstance(
        instance=inst,
        certificate=certificate,
        normalized_length=network_length(certificate) / TOP_DIAGONAL if k else Fraction(0),
    )


class TightGenerator(BaseGenerator):
    """tight 계열 생성기"""

    def __init__(self, k: int, epsilon=DEFAULT_EPSILON):
        self.k = k
        self.epsilon = epsilon

    @property
    def family_name(self) -> str:
        return "tight"

    def generate(self) -> GeneratedInstance:
        return gen_tight(self.k, self.epsilon)
