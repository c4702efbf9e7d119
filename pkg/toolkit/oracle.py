"""
정확한 GMMN (oracle, 아주 작은 2차원 입력 전용)
Hanan 격자 위에서 쌍마다 단조 경로 하나씩 고르는 branch-and-bound
마지막 쌍은 이미 고른 간선을 비용 0 으로 보는 DAG 최단 경로로 완성
결과는 Hanan 격자로 제한한 최적값 opt_H
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import InfeasibleOutputError, SizeCapError
from models import Instance, Point, RectilinearNetwork, Segment
from geometry.hanan import HananGrid
from geometry.metrics import manhattan_distance, max_pair_distance
from geometry.network import canonicalize
from verifier.feasibility import verify_instance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleCaps:
    max_pairs: int = 3
    max_hanan: int = 6           # 축별 좌표 개수 상한


@dataclass(frozen=True)
class OracleResult:
    network: RectilinearNetwork
    cost: Fraction
    opt_hor: Fraction            # 수평(축 0) 선분 길이 합
    opt_ver: Fraction            # 수직(축 1) 선분 길이 합


class _Search:
    """branch-and-bound 상태"""

    def __init__(self, grid: HananGrid, pairs: List[Tuple[Point, Point]], lower: Fraction):
        self.grid = grid
        self.pairs = pairs
        self.lower = lower
        self.best_cost: Optional[Fraction] = None
        self.best_edges: FrozenSet[Segment] = frozenset()

    def _complete(self, used: FrozenSet[Segment], cost: Fraction) -> None:
        t, u = self.pairs[-1]
        extra, path = self.grid.cheapest_monotone_path(t, u, lambda e: Fraction(0) if e in used else e.length)
        total = cost + extra
        if self.best_cost is None or total < self.best_cost:
            self.best_cost = total
            self.best_edges = used | frozenset(path)

    def greedy(self) -> None:
        """쌍을 차례로 가장 싼 경로로 잇는 초기 해"""
        used: FrozenSet[Segment] = frozenset()
        cost = Fraction(0)
        for t, u in self.pairs[:-1]:
            extra, path = self.grid.cheapest_monotone_path(t, u, lambda e: Fraction(0) if e in used else e.length)
            used = used | frozenset(path)
            cost += extra
        self._complete(used, cost)

    def done(self) -> bool:
        return self.best_cost is not None and self.best_cost <= self.lower

    def run(self, i: int = 0, used: FrozenSet[Segment] = frozenset(), cost: Fraction = Fraction(0)) -> None:
        if self.done() or (self.best_cost is not None and cost >= self.best_cost):
            return
        if i == len(self.pairs) - 1:
            self._complete(used, cost)
            return
        t, u = self.pairs[i]
        for path in self.grid.monotone_paths(t, u):
            new = frozenset(e for e in path if e not in used)
            self.run(i + 1, used | new, cost + sum((e.length for e in new), Fraction(0)))
            if self.done():
                return


def exact_gmmn(inst: Instance, caps: OracleCaps = OracleCaps()) -> OracleResult:
    """Hanan 격자 위 최소 feasible 네트워크"""
    if inst.d != 2:
        raise SizeCapError(f"exact_gmmn 은 2차원 전용 (입력 {inst.d}차원)")
    pairs = sorted({box.pair for box in inst.pairs})
    if len(pairs) > caps.max_pairs:
        raise SizeCapError(f"exact_gmmn 은 쌍 {caps.max_pairs}개까지 (입력 {len(pairs)}개)")
    if not pairs:
        return OracleResult(RectilinearNetwork(), Fraction(0), Fraction(0), Fraction(0))

    grid = HananGrid.from_points([p for pair in pairs for p in pair])
    if max(grid.shape) > caps.max_hanan:
        raise SizeCapError(f"Hanan 격자 {grid.shape} 가 축별 제한 {caps.max_hanan} 초과")

    # 경로가 많은 쌍을 마지막(DP 로 완성)에 둠
    pairs.sort(key=lambda p: (manhattan_distance(*p), p))
    search = _Search(grid, pairs, max_pair_distance(inst))
    search.greedy()
    search.run()

    edges = sorted(search.best_edges)
    network = canonicalize(RectilinearNetwork(tuple(edges)))
    report = verify_instance(network, inst)
    if not report.feasible:
        raise InfeasibleOutputError("exact_gmmn 결과가 검증을 통과하지 못함", report)

    hor = sum((e.length for e in edges if e.axis == 0), Fraction(0))
    ver = sum((e.length for e in edges if e.axis == 1), Fraction(0))
    logger.debug(f"exact_gmmn: 쌍 {len(pairs)}개, 격자 {grid.shape}, opt_H={search.best_cost}")
    return OracleResult(network=network, cost=search.best_cost, opt_hor=hor, opt_ver=ver)
