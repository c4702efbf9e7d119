"""
M-path 존재 여부 검증
네트워크가 각 터미널 쌍을 Manhattan 경로로 잇는지 확인
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from models import Box, Instance, Point, RectilinearNetwork
from .arrangement import ArrangementGraph

logger = logging.getLogger(__name__)

OFF_NETWORK = "terminal-off-network"
NO_PATH = "no-monotone-path"


@dataclass(frozen=True)
class Violation:
    """위반 쌍과 사유"""
    pair: Box
    reason: str                  # terminal-off-network | no-monotone-path
    missing: Tuple[Point, ...] = ()  # 네트워크 밖에 있는 터미널


@dataclass
class FeasibilityReport:
    """인스턴스 전체 검증 결과"""
    checked: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return not self.violations

    def to_lines(self) -> List[str]:
        """CLI 출력용 key-value 텍스트"""
        lines = [
            f"status: {'feasible' if self.feasible else 'infeasible'}",
            f"pairs_checked: {self.checked}",
            f"violations: {len(self.violations)}",
        ]
        for v in self.violations:
            t, u = v.pair.pair
            lines.append(f"violation: {v.reason} {t} {u}")
        return lines


def has_m_path(net: RectilinearNetwork, pair: Tuple[Point, Point]) -> bool:
    """두 터미널이 네트워크 안의 M-path 로 연결되는지"""
    t, u = pair
    if t == u:
        return True
    graph = ArrangementGraph(net, query_points=(t, u))
    return graph.monotone_path(t, u) is not None


def verify_instance(net: RectilinearNetwork, inst: Instance) -> FeasibilityReport:
    """모든 쌍을 검사하여 위반 목록 작성"""
    terminals = inst.terminals()
    graph = ArrangementGraph(net, query_points=terminals)
    report = FeasibilityReport(checked=inst.n)

    for box in inst.pairs:
        t, u = box.pair
        missing = tuple(p for p in (t, u) if p not in graph.graph)
        if missing:
            report.violations.append(Violation(pair=box, reason=OFF_NETWORK, missing=missing))
        elif graph.monotone_path(t, u) is None:
            report.violations.append(Violation(pair=box, reason=NO_PATH))

    if report.violations:
        logger.debug(f"검증 실패: {len(report.violations)}/{inst.n} 쌍")
    return report
