"""
테스트 공용 hypothesis 전략과 seed 기반 생성 헬퍼
"""

import random
from fractions import Fraction

from hypothesis import strategies as st

from models import Box, Instance, Point, Segment


def coords(lo=-8, hi=8):
    return st.integers(min_value=lo, max_value=hi).map(Fraction)


def points(d=2, lo=-8, hi=8):
    return st.tuples(*([coords(lo, hi)] * d)).map(Point)


@st.composite
def axis_segments(draw, d=2, lo=-6, hi=6):
    """축 평행 선분 (길이 0 포함)"""
    a = draw(points(d, lo, hi))
    axis = draw(st.integers(min_value=0, max_value=d - 1))
    other = draw(coords(lo, hi))
    return Segment.between(a, a.replace(axis, other))


def networks(d=2, lo=-6, hi=6, max_size=8):
    return st.lists(axis_segments(d, lo, hi), max_size=max_size)


def intervals(lo=-10, hi=10):
    return st.tuples(coords(lo, hi), coords(lo, hi)).map(lambda t: (min(t), max(t)))


@st.composite
def crossing_boxes(draw, lo=-6, hi=6):
    """y축 (x=0) 을 가로지르는 2차원 box"""
    left = draw(st.integers(min_value=lo, max_value=0))
    right = draw(st.integers(min_value=0, max_value=hi))
    y1 = draw(st.integers(min_value=lo, max_value=hi))
    y2 = draw(st.integers(min_value=lo, max_value=hi))
    return Box.from_terminals(Point.of(left, y1), Point.of(right, y2))


def random_instance(rng: random.Random, n: int, d: int = 2, lo: int = -32, hi: int = 32) -> Instance:
    pairs = [
        (Point.of(*(rng.randint(lo, hi) for _ in range(d))), Point.of(*(rng.randint(lo, hi) for _ in range(d))))
        for _ in range(n)
    ]
    return Instance.from_pairs(d, pairs)


def random_crossing_instance(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> Instance:
    """모든 쌍이 x=0 을 가로지르는 작은 2차원 인스턴스 (분리 좌표 s1 = 0)"""
    pairs = []
    for _ in range(n):
        t = Point.of(rng.randint(lo, 0), rng.randint(lo, hi))
        u = Point.of(rng.randint(0, hi), rng.randint(lo, hi))
        pairs.append((t, u))
    return Instance.from_pairs(2, pairs, separators=(Fraction(0),))
