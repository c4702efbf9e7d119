"""
정확한 RSA (oracle)
Hanan 격자를 root 에서 멀어지는 방향의 DAG 로 보고 최소 방향 Steiner 트리 계산
"""

from dataclasses import dataclass

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import InfeasibleOutputError, SizeCapError
from models import Instance, RectilinearNetwork, Segment
from geometry.hanan import HananGrid
from geometry.network import canonicalize
from verifier.feasibility import verify_instance
from .dreyfus_wagner import min_steiner_edges
from .shortcut import RsaInstance


@dataclass(frozen=True)
class ExactRsaCaps:
    max_terminals: int = 5
    max_hanan: int = 7           # 축별 좌표 개수 상한


def exact_rsa(inst: RsaInstance, caps: ExactRsaCaps = ExactRsaCaps()) -> RectilinearNetwork:
    """모든 터미널을 root 에 M-연결하는 Hanan 격자 위 최소 네트워크"""
    terms = [t for t in inst.terminals if t != inst.root]
    if len(terms) > caps.max_terminals:
        raise SizeCapError(f"exact_rsa 는 터미널 {caps.max_terminals}개까지 (입력 {len(terms)}개)")
    if not terms:
        return RectilinearNetwork()

    grid = HananGrid.from_points(terms, extra=[inst.root])
    if max(grid.shape) > caps.max_hanan:
        raise SizeCapError(f"Hanan 격자 {grid.shape} 가 축별 제한 {caps.max_hanan} 초과")

    _, edges = min_steiner_edges(grid.outward_graph(inst.root), inst.root, terms)
    network = canonicalize(RectilinearNetwork(tuple(Segment.between(u, v) for u, v in edges)))

    report = verify_instance(network, rsa_pairs(inst))
    if not report.feasible:
        raise InfeasibleOutputError("exact_rsa 결과가 검증을 통과하지 못함", report)
    return network


def rsa_pairs(inst: RsaInstance) -> Instance:
    """RSA 조건을 GMMN 쌍 {(t, o)} 로 표현 (검증용)"""
    return Instance.from_pairs(inst.d, [(t, inst.root) for t in inst.terminals])
