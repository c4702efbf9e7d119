"""
최소 stabbing (oracle, 작은 입력 전용)
한 선분이 찌르는 box 묶음은 공통 y 가 있어야 하고 묶음의 x 범위 전체를 덮어야 함
-> 모든 집합 분할을 열거하여 x 범위 폭 합의 최솟값
"""

from fractions import Fraction
from typing import Iterator, List, Sequence

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import SizeCapError
from models import Box, Point, Segment
from .sweep import Stabbing


def _partitions(items: List[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]
        yield [[head]] + part


def exact_min_stabbing(boxes: Sequence[Box], max_boxes: int = 6) -> Stabbing:
    """총 길이 최소의 수평 stabbing"""
    if len(boxes) > max_boxes:
        raise SizeCapError(f"exact_min_stabbing 은 box {max_boxes}개까지 (입력 {len(boxes)}개)")
    if not boxes:
        return Stabbing()

    best_cost, best_segments = None, None
    for part in _partitions(list(range(len(boxes)))):
        cost = Fraction(0)
        segments = []
        for group in part:
            members = [boxes[i] for i in group]
            y = max(b.lo[1] for b in members)
            if y > min(b.hi[1] for b in members):
                break
            x_lo = min(b.lo[0] for b in members)
            x_hi = max(b.hi[0] for b in members)
            cost += x_hi - x_lo
            segments.append(Segment(a=Point((x_lo, y)), b=Point((x_hi, y)), axis=0))
        else:
            if best_cost is None or cost < best_cost:
                best_cost, best_segments = cost, segments
    return Stabbing(tuple(sorted(best_segments)))
