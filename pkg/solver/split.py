"""
중앙값 분할
j번째 좌표의 하위 중앙값 m 으로 쌍을 왼쪽/가운데/오른쪽으로 나눔
"""

from dataclasses import dataclass
from fractions import Fraction

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import PreconditionError
from models import Instance


@dataclass(frozen=True)
class SplitResult:
    left: Instance               # 두 좌표 모두 < m
    mid: Instance                # m 을 (약하게) 가로지름, 분리 좌표 s_j = m 추가
    right: Instance              # 두 좌표 모두 > m
    median: Fraction
    axis: int


def median_split(inst: Instance, axis: int) -> SplitResult:
    """축 axis 기준 분할, inst 는 axis 개의 분리 좌표를 가져야 함 (0-based)"""
    if inst.is_empty():
        raise PreconditionError("빈 인스턴스는 분할할 수 없음")
    if inst.level != axis:
        raise PreconditionError(f"{axis}-분리 인스턴스가 아님 (분리 좌표 {inst.level}개)")

    coords = sorted(c for box in inst.pairs for c in (box.lo[axis], box.hi[axis]))
    m = coords[inst.n - 1]

    left, mid, right = [], [], []
    for box in inst.pairs:
        # median 에 닿는 box 는 가운데로
        if box.hi[axis] < m:
            left.append(box)
        elif box.lo[axis] > m:
            right.append(box)
        else:
            mid.append(box)

    return SplitResult(
        left=inst.with_pairs(left),
        mid=inst.with_pairs(mid, inst.separators + (m,)),
        right=inst.with_pairs(right),
        median=m,
        axis=axis,
    )
