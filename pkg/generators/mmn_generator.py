"""
MMN -> GMMN
점 집합의 모든 순서 없는 쌍을 터미널 쌍으로 사용
"""

import random
from itertools import combinations
from typing import Iterable, List

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import ConfigError, PreconditionError
from models import Instance, Point, check_same_dimension
from .base import BaseGenerator, GeneratedInstance


def mmn_from_points(points: Iterable[Point]) -> Instance:
    distinct = sorted(set(points))
    if len(distinct) < 2:
        raise PreconditionError(f"서로 다른 점이 2개 이상 필요 (입력 {len(distinct)}개)")
    d = check_same_dimension(*distinct)
    return Instance.from_pairs(d, combinations(distinct, 2), provenance=f"mmn points={len(distinct)}")


def random_points(count: int, d: int = 2, coord_range=(-32, 32), seed: int = 0) -> List[Point]:
    """MMN 용 무작위 점 목록 (중복은 mmn_from_points 에서 제거)"""
    lo, hi = coord_range
    if count < 1 or d < 2 or lo > hi:
        raise ConfigError(f"잘못된 점 생성 파라미터: count={count}, d={d}, range=[{lo},{hi}]")
    rng = random.Random(seed)
    return [Point.of(*(rng.randint(lo, hi) for _ in range(d))) for _ in range(count)]


class MmnGenerator(BaseGenerator):
    """점 목록 기반 MMN 계열 생성기"""

    def __init__(self, points: Iterable[Point], seed=None):
        self.points = list(points)
        self.seed = seed

    @property
    def family_name(self) -> str:
        return "mmn"

    def generate(self) -> GeneratedInstance:
        inst = mmn_from_points(self.points)
        if self.seed is not None:
            inst = Instance(inst.d, inst.pairs, seed=self.seed, provenance=inst.provenance)
        return GeneratedInstance(inst)
