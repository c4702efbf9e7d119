"""
수평 stabbing 스윕 (y축을 가로지르는 직사각형)
오른쪽 부분들의 단면 구간 집합은 x 가 커질수록 줄어들므로 piercing 에서 점을 빼기만 함
각 점의 궤적은 y축에 붙은 수평 선분 [0, 소멸 x]
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import PreconditionError
from models import Box, Point, RectilinearNetwork, Segment
from geometry.network import canonicalize, network_length
from .piercing import Interval, Piercing, minimal_piercing, prune_piercing

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


@dataclass
class Stabbing:
    """수평 선분 집합"""
    segments: Tuple[Segment, ...] = ()

    @property
    def network(self) -> RectilinearNetwork:
        return canonicalize(RectilinearNetwork(self.segments))

    @property
    def cost(self) -> Fraction:
        return network_length(RectilinearNetwork(self.segments))


@dataclass(frozen=True)
class SweepEvent:
    """이벤트 x 직후의 상태"""
    x: Fraction
    active: Tuple[Interval, ...]     # 단면 I_x (x 를 넘어 계속되는 오른쪽 부분들)
    piercing: Piercing               # 정리된 P_x
    removed: Piercing                # 이번 이벤트에서 빠진 점 (궤적 종료)


@dataclass
class HalfplaneSweep:
    stabbing: Stabbing
    initial: Piercing
    events: List[SweepEvent] = field(default_factory=list)


def _check_crossing(boxes: Iterable[Box]) -> None:
    for box in boxes:
        if box.d != 2:
            raise PreconditionError(f"stabbing 은 2차원 전용: {box.d}차원")
        if not box.straddles(0, ZERO):
            raise PreconditionError(f"y축을 가로지르지 않는 box: {box.lo} - {box.hi}")


def sweep_halfplane(boxes: Sequence[Box]) -> HalfplaneSweep:
    """x >= 0 부분을 스윕하며 이벤트 기록과 함께 stabbing 계산"""
    _check_crossing(boxes)
    parts = sorted((box.hi[0], Interval(box.lo[1], box.hi[1])) for box in boxes)
    if not parts:
        return HalfplaneSweep(Stabbing(), ())

    piercing = minimal_piercing([iv for _, iv in parts])
    sweep = HalfplaneSweep(Stabbing(), piercing)
    traces: List[Segment] = []

    # 같은 x 의 오른쪽 변들은 하나의 이벤트
    for x in sorted({right for right, _ in parts}):
        active = tuple(iv for right, iv in parts if right > x)
        pruned = prune_piercing(piercing, active)
        removed = tuple(y for y in piercing if y not in pruned)
        for y in removed:
            if x > 0:
                traces.append(Segment(a=Point((ZERO, y)), b=Point((x, y)), axis=0))
        sweep.events.append(SweepEvent(x=x, active=active, piercing=pruned, removed=removed))
        piercing = pruned

    sweep.stabbing = Stabbing(tuple(sorted(traces)))
    logger.debug(f"halfplane sweep: box {len(parts)}개, 초기 P {len(sweep.initial)}개, 궤적 {len(traces)}개")
    return sweep


def sweep_stab_halfplane(boxes: Sequence[Box]) -> Stabbing:
    """오른쪽 부분 R+ 를 찌르는 stabbing (비용 <= 2 * opt_hor)"""
    return sweep_halfplane(boxes).stabbing


def reflect_x(box: Box) -> Box:
    t, u = box.pair
    return Box.from_terminals(Point((-t[0], t[1])), Point((-u[0], u[1])))


def _mirror(seg: Segment) -> Segment:
    return Segment.between(Point((-seg.a[0], seg.a[1])), Point((-seg.b[0], seg.b[1])))


def stab_both(boxes: Sequence[Box]) -> Stabbing:
    """양쪽 부분을 각각 스윕하고 결과를 y축 반대편으로 복제 (비용 <= 4 * opt_hor)"""
    _check_crossing(boxes)
    right = list(sweep_stab_halfplane(boxes).segments)
    left = [_mirror(s) for s in sweep_stab_halfplane([reflect_x(b) for b in boxes]).segments]
    mirrored = [_mirror(s) for s in right + left]
    return Stabbing(tuple(sorted(set(right + left + mirrored))))


def unstabbed(stabbing: Stabbing, boxes: Iterable[Box]) -> List[Box]:
    """어떤 수평 선분도 x 범위 전체를 가로지르지 않는 box 목록"""
    merged = [s for s in stabbing.network.segments if s.axis == 0]
    missed = []
    for box in boxes:
        # 폭 0 인 box (y축 위의 수직 쌍) 는 궤적 없이도 arborescence 로 연결됨
        if box.lo[0] == box.hi[0]:
            continue
        ok = any(
            box.lo[1] <= s.a[1] <= box.hi[1] and s.a[0] <= box.lo[0] and box.hi[0] <= s.b[0]
            for s in merged
        )
        if not ok:
            missed.append(box)
    return missed
