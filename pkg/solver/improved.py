"""
개선된 2차원 x-분리 알고리즘
y축을 가로지르는 쌍들을 연결 성분별로
  - 수평 stabbing S (양쪽 스윕 + 반사)
  - 아래쪽 터미널 L 을 top(I) 로 잇는 arborescence A_up
  - 위쪽 터미널 H 를 bot(I) 로 잇는 arborescence A_down
의 합집합으로 연결
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import ConfigError, PreconditionError
from models import Box, Instance, Point, RectilinearNetwork
from geometry.network import network_length, union_networks
from geometry.transform import transform
from arborescence.shortcut import RsaInstance, solve_rsa
from stabbing.piercing import Interval
from stabbing.sweep import Stabbing, stab_both
from .config import SolverConfig

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


@dataclass(frozen=True)
class AxisComponent:
    """y-구간이 이어진 box 묶음과 병합 구간 I"""
    instance: Instance
    interval: Interval


@dataclass
class ComponentTrace:
    """성분 하나의 구성 요소 (y축이 x=0 인 좌표계)"""
    component: AxisComponent
    stabbing: Stabbing
    top: Point
    bot: Point
    low: Tuple[Point, ...]       # L
    high: Tuple[Point, ...]      # H
    a_up: RectilinearNetwork
    a_down: RectilinearNetwork

    @property
    def network(self) -> RectilinearNetwork:
        return union_networks(self.a_up, self.a_down, self.stabbing.network)

    @property
    def bound(self) -> Fraction:
        """||A_up|| + ||A_down|| + ||S||"""
        return network_length(self.a_up) + network_length(self.a_down) + self.stabbing.cost


@dataclass
class XSeparatedTrace:
    separator: Fraction          # 원래 좌표계의 s_1
    components: List[ComponentTrace] = field(default_factory=list)

    @property
    def network(self) -> RectilinearNetwork:
        """원래 좌표계로 되돌린 합집합"""
        shifted = union_networks(*(c.network for c in self.components))
        return transform(shifted, 1, (self.separator, ZERO))


def connected_components_on_axis(inst: Instance) -> List[AxisComponent]:
    """y축을 가로지르는 box 들을 y-구간 연결성으로 분할
    모두 x=0 을 지나므로 y-구간이 이어지면 box 합집합도 연결됨
    """
    for box in inst.pairs:
        if not box.straddles(0, ZERO):
            raise PreconditionError(f"y축을 가로지르지 않는 box: {box.lo} - {box.hi}")

    components: List[AxisComponent] = []
    members: List[Box] = []
    lo = hi = None
    for box in sorted(inst.pairs, key=lambda b: (b.lo[1], b.hi[1], b)):
        if members and box.lo[1] > hi:
            components.append(AxisComponent(inst.with_pairs(members), Interval(lo, hi)))
            members = []
        if not members:
            lo, hi = box.lo[1], box.hi[1]
        members.append(box)
        hi = max(hi, box.hi[1])
    if members:
        components.append(AxisComponent(inst.with_pairs(members), Interval(lo, hi)))
    return components


def split_low_high(boxes: Sequence[Box]) -> Tuple[Tuple[Point, ...], Tuple[Point, ...]]:
    """쌍마다 y 가 작은 쪽은 L, 큰 쪽은 H (같으면 사전순 앞 터미널이 L)"""
    low, high = set(), set()
    for box in boxes:
        t, u = box.pair
        if u[1] < t[1]:
            t, u = u, t
        low.add(t)
        high.add(u)
    return tuple(sorted(low)), tuple(sorted(high))


def _solve_component(comp: AxisComponent, cfg: SolverConfig) -> ComponentTrace:
    boxes = comp.instance.pairs
    top = Point((ZERO, comp.interval.hi))
    bot = Point((ZERO, comp.interval.lo))
    low, high = split_low_high(boxes)

    stabbing = stab_both(boxes)
    a_up = solve_rsa(RsaInstance.of(low, top), cfg.rsa_backend, cfg.rsa_strategy, cfg.steiner_caps)
    a_down = solve_rsa(RsaInstance.of(high, bot), cfg.rsa_backend, cfg.rsa_strategy, cfg.steiner_caps)
    return ComponentTrace(comp, stabbing, top, bot, low, high, a_up, a_down)


def build_x_separated(inst: Instance, cfg: SolverConfig = SolverConfig()) -> XSeparatedTrace:
    """성분별 구성 요소를 모두 기록하며 계산"""
    if inst.d != 2:
        raise ConfigError(f"x-분리 개선 알고리즘은 2차원 전용 (입력 {inst.d}차원)")
    if inst.level < 1:
        raise PreconditionError("x 분리 좌표 s_1 이 없음")
    s1 = inst.separators[0]
    trace = XSeparatedTrace(separator=s1)
    if inst.is_empty():
        return trace

    shifted = transform(inst, 1, (-s1, ZERO))
    for comp in connected_components_on_axis(shifted):
        trace.components.append(_solve_component(comp, cfg))

    logger.debug(f"x-분리 (s1={s1}): 쌍 {inst.n}개, 성분 {len(trace.components)}개")
    return trace


def solve_x_separated_improved(inst: Instance, cfg: SolverConfig = SolverConfig()) -> RectilinearNetwork:
    return build_x_separated(inst, cfg).network
