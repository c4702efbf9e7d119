"""
GMMN 솔버 파이프라인
축 0..d-1 순서로 중앙값 분할을 재귀 적용하여 leaf 작업으로 분해하고,
leaf 마다 RSA (또는 2차원 x-분리 개선 알고리즘) 로 풀어 합집합
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import InfeasibleOutputError
from models import Instance, RectilinearNetwork
from geometry.network import union_networks
from verifier.feasibility import FeasibilityReport, verify_instance
from .config import IMPROVED_2D, SolverConfig
from .improved import solve_x_separated_improved
from .separated import solve_d_separated
from .split import median_split

logger = logging.getLogger(__name__)

D_SEPARATED = "d-separated"
X_SEPARATED = "x-separated"


@dataclass(frozen=True)
class LeafTask:
    """분해 결과 하나: 분리 좌표가 채워진 부분 인스턴스"""
    kind: str                    # d-separated | x-separated
    instance: Instance
    depth: int                   # 재귀 깊이 (모든 축 합산)


def decompose(inst: Instance, cfg: SolverConfig = SolverConfig()) -> List[LeafTask]:
    """왼쪽 -> 가운데 -> 오른쪽 순서로 leaf 작업 나열 (순서 고정)"""
    cfg.check_dimension(inst.d)
    tasks: List[LeafTask] = []
    stack: List[Tuple[Instance, int]] = [(inst, 0)]
    while stack:
        sub, depth = stack.pop()
        if sub.is_empty():
            continue
        j = sub.level
        if j == sub.d:
            tasks.append(LeafTask(D_SEPARATED, sub, depth))
            continue
        if cfg.algorithm == IMPROVED_2D and j == 1:
            tasks.append(LeafTask(X_SEPARATED, sub, depth))
            continue
        split = median_split(sub, j)
        # 스택이므로 역순으로 넣음
        stack.append((split.right, depth + 1))
        stack.append((split.mid, depth + 1))
        stack.append((split.left, depth + 1))
    return tasks


def solve_leaf(task: LeafTask, cfg: SolverConfig) -> RectilinearNetwork:
    if task.kind == X_SEPARATED:
        return solve_x_separated_improved(task.instance, cfg)
    return solve_d_separated(task.instance, cfg)


def _solve_leaf_job(args: Tuple[LeafTask, SolverConfig]) -> RectilinearNetwork:
    return solve_leaf(*args)


def solve_gmmn(inst: Instance, cfg: SolverConfig = SolverConfig()) -> RectilinearNetwork:
    """인스턴스 전체를 풀어 정규화된 네트워크 반환"""
    tasks = decompose(inst, cfg)
    logger.debug(f"분해: 쌍 {inst.n}개 → leaf {len(tasks)}개 ({cfg.algorithm})")

    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as executor:
            # map 은 입력 순서대로 결과를 돌려줌
            parts = list(executor.map(_solve_leaf_job, [(t, cfg) for t in tasks]))
    else:
        parts = [solve_leaf(t, cfg) for t in tasks]

    network = union_networks(*parts)
    if cfg.self_check:
        self_check(network, inst)
    return network


def self_check(network: RectilinearNetwork, inst: Instance) -> FeasibilityReport:
    """출력이 모든 쌍을 M-연결하는지 확인, 실패하면 버그로 취급"""
    report = verify_instance(network, inst)
    if not report.feasible:
        raise InfeasibleOutputError(
            f"솔버 출력이 {len(report.violations)}/{inst.n} 쌍을 연결하지 못함", report
        )
    return report
