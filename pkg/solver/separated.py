"""
d-분리 인스턴스 -> RSA
모든 box 가 분리점 s 를 포함하므로 모든 터미널을 s 에 M-연결하면 feasible
"""

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import PreconditionError
from models import Instance, Point, RectilinearNetwork
from geometry.transform import transform
from arborescence.shortcut import RsaInstance, solve_rsa
from .config import SolverConfig


def solve_d_separated(inst: Instance, cfg: SolverConfig = SolverConfig()) -> RectilinearNetwork:
    if inst.is_empty():
        return RectilinearNetwork()
    if inst.level != inst.d:
        raise PreconditionError(f"d-분리 인스턴스가 아님 (분리 좌표 {inst.level}/{inst.d}개)")
    s = Point(inst.separators)
    outside = [box for box in inst.pairs if not box.contains(s)]
    if outside:
        raise PreconditionError(f"분리점 {s} 를 포함하지 않는 쌍 {len(outside)}개")

    # s 를 원점으로 옮겨 RSA 를 풀고 되돌림
    shifted = transform(inst, 1, Point(tuple(-c for c in s.coords)))
    rsa = RsaInstance.of(shifted.terminals(), Point.origin(inst.d))
    network = solve_rsa(rsa, cfg.rsa_backend, cfg.rsa_strategy, cfg.steiner_caps)
    return transform(network, 1, s)
