"""
근사 비율 측정
알고리즘별 출력 비용을 기준값(oracle / 인증서 / 하한)과 비교
"""

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import ConfigError, InfeasibleOutputError, PreconditionError
from models import Instance, RectilinearNetwork
from geometry.metrics import max_pair_distance
from geometry.network import network_length
from geometry.rational import approx_decimal, format_rational
from solver.config import SolverConfig
from solver.pipeline import solve_gmmn
from verifier.feasibility import verify_instance
from .oracle import OracleCaps, exact_gmmn

logger = logging.getLogger(__name__)

ORACLE = "oracle"
CERTIFICATE = "certificate"
LOWER_BOUND = "lower-bound"
REFERENCES = (ORACLE, CERTIFICATE, LOWER_BOUND)

COLUMNS = ("instance", "n", "d", "alg", "cost", "ref", "ratio")


@dataclass(frozen=True)
class RatioCase:
    """측정 대상 인스턴스 (tight 계열은 인증서 동반)"""
    name: str
    instance: Instance
    certificate: Optional[RectilinearNetwork] = None


@dataclass(frozen=True)
class RatioRow:
    instance: str
    n: int
    d: int
    algorithm: str
    cost: Fraction
    reference: Fraction
    reference_kind: str
    ratio: Fraction
    runtime: float               # 초, 표에는 출력하지 않음

    @property
    def proven(self) -> bool:
        """기준값이 최적값(또는 Hanan 최적값)인지"""
        return self.reference_kind == ORACLE

    def to_line(self) -> str:
        return "\t".join([
            self.instance, str(self.n), str(self.d), self.algorithm,
            format_rational(self.cost), format_rational(self.reference),
            approx_decimal(self.ratio),
        ])


@dataclass
class RatioReport:
    rows: List[RatioRow] = field(default_factory=list)

    def to_lines(self) -> List[str]:
        """탭 구분 표 (헤더 + 행), 인스턴스 이름순"""
        ordered = sorted(self.rows, key=lambda r: (r.instance, r.algorithm))
        return ["\t".join(COLUMNS)] + [r.to_line() for r in ordered]

    def ratios(self, algorithm: str) -> List[Fraction]:
        return [r.ratio for r in self.rows if r.algorithm == algorithm]


def algorithm_label(cfg: SolverConfig) -> str:
    return f"{cfg.algorithm}/{cfg.rsa_backend.value}"


def reference_cost(
    case: RatioCase,
    reference: str,
    oracle_caps: OracleCaps = OracleCaps(),
) -> Fraction:
    if reference == LOWER_BOUND:
        return max_pair_distance(case.instance)
    if reference == ORACLE:
        return exact_gmmn(case.instance, oracle_caps).cost
    if reference == CERTIFICATE:
        if case.certificate is None:
            raise PreconditionError(f"인증서가 없는 인스턴스: {case.name}")
        return network_length(case.certificate)
    raise ConfigError(f"알 수 없는 기준: {reference} (가능: {', '.join(REFERENCES)})")


def ratio_report(
    cases: Sequence[RatioCase],
    algorithms: Sequence[SolverConfig],
    reference: str = LOWER_BOUND,
    oracle_caps: OracleCaps = OracleCaps(),
) -> RatioReport:
    """각 (인스턴스, 알고리즘) 조합을 풀고 검증한 뒤 비율 기록"""
    report = RatioReport()
    for case in cases:
        if case.instance.is_empty():
            raise PreconditionError(f"빈 인스턴스: {case.name}")
        ref = reference_cost(case, reference, oracle_caps)
        if ref <= 0:
            raise PreconditionError(f"기준값이 0 인 인스턴스: {case.name}")

        for cfg in algorithms:
            label = algorithm_label(cfg)
            start = time.perf_counter()
            network = solve_gmmn(case.instance, cfg)
            runtime = time.perf_counter() - start

            checked = verify_instance(network, case.instance)
            if not checked.feasible:
                raise InfeasibleOutputError(f"{case.name} / {label} 출력이 infeasible", checked)

            cost = network_length(network)
            report.rows.append(RatioRow(
                instance=case.name,
                n=case.instance.n,
                d=case.instance.d,
                algorithm=label,
                cost=cost,
                reference=ref,
                reference_kind=reference,
                ratio=cost / ref,
                runtime=runtime,
            ))
            logger.info(f"      {case.name} {label}: 비율 {approx_decimal(cost / ref)} ({runtime:.2f}s)")

    return report
