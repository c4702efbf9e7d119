"""
솔버 설정
config.yaml 의 solver 섹션과 CLI 플래그에서 생성
"""

from dataclasses import dataclass, field, replace
from typing import Optional

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import ConfigError
from arborescence.shortcut import STRATEGIES, ALL_ORTHANT
from arborescence.steiner import SteinerBackend, SteinerCaps

RECURSIVE_D = "recursive-d"
IMPROVED_2D = "improved-2d"
ALGORITHMS = (RECURSIVE_D, IMPROVED_2D)


@dataclass(frozen=True)
class SolverConfig:
    algorithm: str = RECURSIVE_D
    rsa_backend: SteinerBackend = SteinerBackend.MST
    rsa_strategy: str = ALL_ORTHANT
    jobs: int = 1                # 1 이면 순차 실행
    self_check: bool = True      # 출력 네트워크를 검증기로 자체 점검
    steiner_caps: SteinerCaps = field(default_factory=SteinerCaps)

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"알 수 없는 알고리즘: {self.algorithm} (가능: {', '.join(ALGORITHMS)})")
        if self.rsa_strategy not in STRATEGIES:
            raise ConfigError(f"알 수 없는 RSA 전략: {self.rsa_strategy}")
        if self.jobs < 1:
            raise ConfigError(f"jobs 는 1 이상: {self.jobs}")
        object.__setattr__(self, "rsa_backend", SteinerBackend.from_tag(self.rsa_backend))

    @classmethod
    def from_dict(cls, solver: Optional[dict] = None, steiner: Optional[dict] = None) -> "SolverConfig":
        """config.yaml 의 solver / steiner 섹션으로 생성"""
        solver = solver or {}
        steiner = steiner or {}
        try:
            return cls(
                algorithm=solver.get("algorithm", RECURSIVE_D),
                rsa_backend=solver.get("rsa_backend", "mst"),
                rsa_strategy=solver.get("rsa_strategy", ALL_ORTHANT),
                jobs=int(solver.get("jobs", 1)),
                self_check=bool(solver.get("self_check", True)),
                steiner_caps=SteinerCaps(
                    max_points=int(steiner.get("exact_max_points", 8)),
                    max_grid_vertices=int(steiner.get("exact_max_grid_vertices", 256)),
                ),
            )
        except (TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"solver 설정 오류: {e}") from e

    def override(self, **changes) -> "SolverConfig":
        """None 이 아닌 값만 덮어씀 (CLI 플래그용)"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def check_dimension(self, d: int) -> None:
        if self.algorithm == IMPROVED_2D and d != 2:
            raise ConfigError(f"improved-2d 는 2차원 전용 (입력 {d}차원)")
