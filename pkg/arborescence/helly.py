"""
Helly min-point 과 canonical M-path
세 box B(o,t), B(o,t'), B(t,t') 는 쌍마다 교차하므로 공통점이 존재 (성분별 중앙값)
"""

from typing import List, Optional

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import PreconditionError
from models import Box, Point, RectilinearNetwork, Segment, check_same_dimension
from geometry.network import canonicalize


def helly_min_point(t: Point, u: Point, o: Point) -> Point:
    """성분별 중앙값 = B(o,t) ∩ B(o,t') ∩ B(t,t') 의 한 점"""
    check_same_dimension(t, u, o)
    return Point(tuple(sorted(c)[1] for c in zip(t.coords, u.coords, o.coords)))


def staircase(a: Point, b: Point) -> List[Segment]:
    """축 순서 0..d-1 로 이동하는 계단 경로 (길이 = L1 거리)"""
    check_same_dimension(a, b)
    segments = []
    cur = a
    for axis in range(a.d):
        if cur[axis] == b[axis]:
            continue
        nxt = cur.replace(axis, b[axis])
        segments.append(Segment.between(cur, nxt))
        cur = nxt
    return segments


def canonical_m_path(a: Point, b: Point, via: Optional[Point] = None) -> RectilinearNetwork:
    """a -> via -> b 계단 경로, via 는 B(a,b) 안에 있어야 함"""
    if via is None:
        return canonicalize(RectilinearNetwork(tuple(staircase(a, b))))
    if not Box.from_terminals(a, b).contains(via):
        raise PreconditionError(f"경유점 {via} 가 B({a}, {b}) 밖에 있음")
    return canonicalize(RectilinearNetwork(tuple(staircase(a, via) + staircase(via, b))))
