"""
무작위 인스턴스
random.Random(seed) (Mersenne Twister) 로 정수 좌표를 균등 추출
"""

import logging
import random

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import ConfigError, PreconditionError
from models import Instance, Point
from .base import BaseGenerator, GeneratedInstance

logger = logging.getLogger(__name__)


def gen_random(n: int, d: int = 2, coord_range=(-32, 32), seed: int = 0) -> Instance:
    """seed 가 같으면 같은 인스턴스"""
    lo, hi = coord_range
    if n < 1:
        raise ConfigError(f"n 은 1 이상: {n}")
    if d < 2:
        raise ConfigError(f"d 는 2 이상: {d}")
    if lo > hi:
        raise ConfigError(f"빈 좌표 범위: [{lo}, {hi}]")

    rng = random.Random(seed)
    pairs = [
        (Point.of(*(rng.randint(lo, hi) for _ in range(d))), Point.of(*(rng.randint(lo, hi) for _ in range(d))))
        for _ in range(n)
    ]
    inst = Instance.from_pairs(
        d, pairs, seed=seed, provenance=f"random n={n} d={d} range=[{lo},{hi}]"
    )
    if inst.n < n:
        logger.warning(f"터미널이 같은 쌍 {n - inst.n}개 제외")
    if inst.is_empty():
        raise PreconditionError("empty instance: 모든 쌍의 두 터미널이 같음")
    return inst


class RandomGenerator(BaseGenerator):
    """무작위 계열 생성기"""

    def __init__(self, n: int, d: int = 2, coord_min: int = -32, coord_max: int = 32, seed: int = 0):
        self.n = n
        self.d = d
        self.coord_range = (coord_min, coord_max)
        self.seed = seed

    @property
    def family_name(self) -> str:
        return "random"

    def generate(self) -> GeneratedInstance:
        return GeneratedInstance(gen_random(self.n, self.d, self.coord_range, self.seed))
