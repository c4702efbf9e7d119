"""
Steiner 트리 -> RSA 네트워크 (Euler 순회 shortcutting)
한 단계마다 shortcut 사이클의 가벼운 절반을 취하고, 그 절반의 min-point 들과 root 로 반복
결과 길이 <= ceil(log2 n) * ||B||, 깊이 <= ceil(log2 n)  (n = |T ∪ {o}|)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import BoundViolationError, ConfigError
from models import Point, RectilinearNetwork, Segment, check_same_dimension
from geometry.metrics import manhattan_distance
from geometry.network import canonicalize, network_length, union_networks
from .helly import helly_min_point, staircase
from .steiner import SteinerBackend, SteinerCaps, euler_order, steiner_tree

logger = logging.getLogger(__name__)

ALL_ORTHANT = "all-orthant"
PER_ORTHANT = "per-orthant"
STRATEGIES = (ALL_ORTHANT, PER_ORTHANT)


@dataclass(frozen=True)
class RsaInstance:
    """RSA 인스턴스: 터미널 집합 T 와 root o"""
    terminals: Tuple[Point, ...]
    root: Point

    @classmethod
    def of(cls, terminals: Iterable[Point], root: Point) -> "RsaInstance":
        terms = tuple(sorted(set(terminals)))
        check_same_dimension(root, *terms)
        return cls(terminals=terms, root=root)

    @property
    def d(self) -> int:
        return self.root.d

    def points(self) -> Tuple[Point, ...]:
        """T ∪ {o} (사전순)"""
        return tuple(sorted(set(self.terminals) | {self.root}))


@dataclass
class ShortcutLevel:
    """shortcutting 한 단계의 기록"""
    cycle: List[Point]           # 이번 단계 사이클 순서 (root 가 맨 앞)
    cycle_length: Fraction       # shortcut 사이클 길이 (M-path 길이의 합)
    half_lengths: Tuple[Fraction, Fraction]
    kept: int                    # 0 = C0 (짝수 번째 쌍), 1 = C1


@dataclass
class Arborescence:
    """RSA 결과와 분석용 부가 정보"""
    network: RectilinearNetwork
    tree_length: Fraction        # ||B||
    n: int                       # |T ∪ {o}|
    levels: List[ShortcutLevel] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def length(self) -> Fraction:
        return network_length(self.network)

    @property
    def bound(self) -> Fraction:
        return ceil_log2(self.n) * self.tree_length


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length() if n > 1 else 0


def build_arborescence(
    inst: RsaInstance,
    backend: SteinerBackend = SteinerBackend.MST,
    caps: SteinerCaps = SteinerCaps(),
) -> Arborescence:
    """Steiner 트리를 만들고 shortcutting 으로 arborescence 구성"""
    o = inst.root
    points = inst.points()
    if len(points) == 1:
        return Arborescence(network=RectilinearNetwork(), tree_length=Fraction(0), n=1)

    b = steiner_tree(points, backend, caps)
    cycle = euler_order(b.tree, o, points)
    result = Arborescence(network=RectilinearNetwork(), tree_length=b.length, n=len(points))

    halves: List[RectilinearNetwork] = []
    while len(cycle) > 1:
        m = len(cycle)
        pairs = [
            [(cycle[i], cycle[(i + 1) % m]) for i in range(0, m, 2)],
            [(cycle[i], cycle[(i + 1) % m]) for i in range(1, m, 2)],
        ]
        nets, mins = [], []
        for half in pairs:
            # 절반마다 한 번만 정규화 (via 는 Helly 점이므로 B(t,u) 안)
            pieces: List[Segment] = []
            points_of_half = []
            for t, u in half:
                via = helly_min_point(t, u, o)
                pieces.extend(staircase(t, via))
                pieces.extend(staircase(via, u))
                points_of_half.append(via)
            nets.append(canonicalize(RectilinearNetwork(tuple(pieces))))
            mins.append(points_of_half)

        lengths = (network_length(nets[0]), network_length(nets[1]))
        cycle_length = sum(
            (manhattan_distance(t, u) for half in pairs for t, u in half), Fraction(0)
        )
        kept = 0 if lengths[0] <= lengths[1] else 1
        if cycle_length > 2 * b.length or lengths[kept] > b.length:
            raise BoundViolationError(
                f"shortcut 단계 상한 위반: 사이클 {cycle_length}, 절반 {lengths[kept]}, ||B|| {b.length}"
            )
        result.levels.append(ShortcutLevel(cycle, cycle_length, lengths, kept))
        halves.append(nets[kept])

        # root 는 항상 다음 사이클에 포함 (마지막에 root 하나만 남도록)
        nxt = list(dict.fromkeys(mins[kept]))
        if o not in nxt:
            nxt.insert(0, o)
        k = nxt.index(o)
        cycle = nxt[k:] + nxt[:k]

    result.network = union_networks(*halves)
    if result.length > result.bound or result.depth > ceil_log2(result.n):
        raise BoundViolationError(
            f"RSA 상한 위반: 길이 {result.length} > {result.bound} 또는 깊이 {result.depth}"
        )
    logger.debug(
        f"RSA: 터미널 {len(inst.terminals)}개, ||B||={b.length}, ||A||={result.length}, 깊이 {result.depth}"
    )
    return result


def rsa_shortcut(
    inst: RsaInstance,
    backend: SteinerBackend = SteinerBackend.MST,
    caps: SteinerCaps = SteinerCaps(),
) -> RectilinearNetwork:
    """모든 orthant 를 한 번에 처리하는 RSA 근사"""
    return build_arborescence(inst, backend, caps).network


def orthant_groups(inst: RsaInstance) -> Dict[Tuple[bool, ...], List[Point]]:
    """root 기준 orthant 별 터미널 (좌표가 같으면 양의 쪽)"""
    groups: Dict[Tuple[bool, ...], List[Point]] = {}
    for t in inst.terminals:
        key = tuple(t[i] >= inst.root[i] for i in range(inst.d))
        groups.setdefault(key, []).append(t)
    return dict(sorted(groups.items()))


def rsa_per_orthant(
    inst: RsaInstance,
    backend: SteinerBackend = SteinerBackend.MST,
    caps: SteinerCaps = SteinerCaps(),
) -> RectilinearNetwork:
    """orthant 마다 따로 shortcutting 후 합집합"""
    parts = [
        build_arborescence(RsaInstance.of(terms, inst.root), backend, caps).network
        for terms in orthant_groups(inst).values()
    ]
    return union_networks(*parts)


def solve_rsa(
    inst: RsaInstance,
    backend: SteinerBackend = SteinerBackend.MST,
    strategy: str = ALL_ORTHANT,
    caps: SteinerCaps = SteinerCaps(),
) -> RectilinearNetwork:
    """설정된 전략으로 RSA 네트워크 계산"""
    if strategy == ALL_ORTHANT:
        return rsa_shortcut(inst, backend, caps)
    if strategy == PER_ORTHANT:
        return rsa_per_orthant(inst, backend, caps)
    raise ConfigError(f"알 수 없는 RSA 전략: {strategy}")
