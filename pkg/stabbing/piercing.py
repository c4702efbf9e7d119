"""
구간 piercing
닫힌 y-구간 집합을 찌르는 점 집합과 그 최소성 유지
"""

from bisect import bisect_left
from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Optional, Sequence, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import PreconditionError


class Interval(NamedTuple):
    lo: Fraction
    hi: Fraction

    def contains(self, y: Fraction) -> bool:
        return self.lo <= y <= self.hi


IntervalSet = Sequence[Interval]
Piercing = Tuple[Fraction, ...]


def _hits(sorted_points: Sequence[Fraction], iv: Interval) -> bool:
    k = bisect_left(sorted_points, iv.lo)
    return k < len(sorted_points) and sorted_points[k] <= iv.hi


def pierces(points: Iterable[Fraction], intervals: IntervalSet) -> bool:
    pts = sorted(points)
    return all(_hits(pts, iv) for iv in intervals)


def minimal_piercing(intervals: IntervalSet) -> Piercing:
    """최소 개수 piercing (상단 끝점 순 greedy)"""
    chosen = []
    last: Optional[Fraction] = None
    for iv in sorted(intervals, key=lambda iv: (iv.hi, iv.lo)):
        if last is None or last < iv.lo:
            last = iv.hi
            chosen.append(last)
    return tuple(chosen)


def prune_piercing(points: Iterable[Fraction], intervals: IntervalSet) -> Piercing:
    """아래에서 위로 훑으며 빼도 여전히 찌르는 점을 제거 -> 포함 관계 최소"""
    kept = sorted(set(points))
    if not all(_hits(kept, iv) for iv in intervals):
        raise PreconditionError("주어진 점 집합이 구간들을 찌르지 않음")
    for p in list(kept):
        rest = [q for q in kept if q != p]
        if all(_hits(rest, iv) for iv in intervals):
            kept = rest
    return tuple(kept)


def witness_intervals(points: Piercing, intervals: IntervalSet) -> Dict[Fraction, Optional[Interval]]:
    """각 점마다 그 점 하나만 찌르는 구간 (없으면 None)"""
    witnesses: Dict[Fraction, Optional[Interval]] = {p: None for p in points}
    for iv in intervals:
        inside = [p for p in points if iv.contains(p)]
        if len(inside) == 1 and witnesses[inside[0]] is None:
            witnesses[inside[0]] = iv
    return witnesses
