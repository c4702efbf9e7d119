"""
직교(rectilinear) Steiner 트리 백엔드
- mst: L1 최소 신장 트리, 각 간선을 계단 경로로 임베딩 (RSMT 의 3/2 이내)
- exact-small: Hanan 격자 위 최소 Steiner 트리 (작은 입력 전용)
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Set, Tuple

import networkx as nx

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import ConfigError, SizeCapError
from models import Point, RectilinearNetwork, Segment, check_same_dimension
from geometry.hanan import HananGrid
from geometry.metrics import manhattan_distance
from geometry.network import canonicalize
from .dreyfus_wagner import min_steiner_edges
from .helly import staircase

logger = logging.getLogger(__name__)


class SteinerBackend(str, Enum):
    MST = "mst"
    EXACT_SMALL = "exact-small"

    @classmethod
    def from_tag(cls, tag) -> "SteinerBackend":
        if isinstance(tag, cls):
            return tag
        aliases = {"mst": cls.MST, "mst-rectilinear": cls.MST, "exact-small": cls.EXACT_SMALL, "exact": cls.EXACT_SMALL}
        try:
            return aliases[str(tag).lower()]
        except KeyError:
            raise ConfigError(f"알 수 없는 Steiner 백엔드: {tag}")


@dataclass(frozen=True)
class SteinerCaps:
    """exact-small 백엔드 크기 제한"""
    max_points: int = 8
    max_grid_vertices: int = 256


@dataclass
class SteinerTree:
    """Steiner 트리 B: 네트워크와 Euler 순회용 트리 그래프"""
    network: RectilinearNetwork
    tree: nx.Graph               # 노드 = 점, weight = 간선 길이
    length: Fraction             # 트리 간선 길이의 합 (= Euler 순회 길이 / 2)
    backend: SteinerBackend


def steiner_tree(
    points: Iterable[Point],
    backend: SteinerBackend = SteinerBackend.MST,
    caps: SteinerCaps = SteinerCaps(),
) -> SteinerTree:
    """점 집합을 잇는 직교 Steiner 트리"""
    pts = sorted(set(points))
    if not pts:
        raise ValueError("빈 점 집합")
    check_same_dimension(*pts)
    backend = SteinerBackend.from_tag(backend)

    if len(pts) == 1:
        tree = nx.Graph()
        tree.add_node(pts[0])
        return SteinerTree(RectilinearNetwork(), tree, Fraction(0), backend)

    if backend is SteinerBackend.EXACT_SMALL:
        return _exact_small(pts, caps)
    return _mst_rectilinear(pts)


def _mst_rectilinear(pts: List[Point]) -> SteinerTree:
    g = nx.Graph()
    g.add_nodes_from(pts)
    if pts[0].d == 2:
        candidates = l1_candidate_edges_2d(pts)
    else:
        candidates = [(i, j) for i in range(len(pts)) for j in range(i + 1, len(pts))]
    for i, j in sorted(candidates):
        g.add_edge(pts[i], pts[j], weight=manhattan_distance(pts[i], pts[j]))

    mst = nx.minimum_spanning_tree(g, weight="weight", algorithm="kruskal")
    segments: List[Segment] = []
    length = Fraction(0)
    for u, v, w in sorted((min(u, v), max(u, v), w) for u, v, w in mst.edges(data="weight")):
        segments.extend(staircase(u, v))
        length += w

    logger.debug(f"MST: 점 {len(pts)}개, 후보 간선 {g.number_of_edges()}개, 길이 {length}")
    return SteinerTree(canonicalize(RectilinearNetwork(tuple(segments))), mst, length, SteinerBackend.MST)


def l1_candidate_edges_2d(pts: Sequence[Point]) -> Set[Tuple[int, int]]:
    """2차원 L1 MST 후보 간선: 각 점의 8개 octant 별 최근접 이웃 (O(n log n) 개)
    네 번의 좌표 변환마다 x+y 순으로 훑으며 아직 짝이 없는 점들을 -y 키로 관리
    """
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    edges: Set[Tuple[int, int]] = set()

    for k in range(4):
        order = sorted(range(len(pts)), key=lambda i: (xs[i] + ys[i], i))
        keys: List[Fraction] = []
        owner: Dict[Fraction, int] = {}
        for i in order:
            pos = bisect_left(keys, -ys[i])
            while pos < len(keys):
                j = owner[keys[pos]]
                dx, dy = xs[i] - xs[j], ys[i] - ys[j]
                if dy > dx:
                    break
                edges.add((min(i, j), max(i, j)))
                del owner[keys[pos]]
                del keys[pos]
            key = -ys[i]
            pos = bisect_left(keys, key)
            if pos == len(keys) or keys[pos] != key:
                keys.insert(pos, key)
            owner[key] = i
        if k % 2:
            xs = [-x for x in xs]
        else:
            xs, ys = ys, xs

    return edges


def _exact_small(pts: List[Point], caps: SteinerCaps) -> SteinerTree:
    if len(pts) > caps.max_points:
        raise SizeCapError(f"exact-small 백엔드는 점 {caps.max_points}개까지 (입력 {len(pts)}개)")
    grid = HananGrid.from_points(pts)
    if grid.vertex_count > caps.max_grid_vertices:
        raise SizeCapError(f"Hanan 격자 정점 {grid.vertex_count}개 > 제한 {caps.max_grid_vertices}")

    g = grid.graph()
    _, edges = min_steiner_edges(g, pts[0], pts[1:])
    tree = nx.Graph()
    tree.add_nodes_from(pts)
    segments = sorted({Segment.between(u, v) for u, v in edges})
    for seg in segments:
        tree.add_edge(seg.a, seg.b, weight=seg.length)
    length = sum((s.length for s in segments), Fraction(0))
    return SteinerTree(canonicalize(RectilinearNetwork(tuple(segments))), tree, length, SteinerBackend.EXACT_SMALL)


def euler_order(tree: nx.Graph, root: Point, terminals: Iterable[Point]) -> List[Point]:
    """트리를 root 에서 DFS (자식은 사전순) 하며 터미널의 첫 방문 순서"""
    wanted = set(terminals) | {root}
    order: List[Point] = []
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        if u in wanted:
            order.append(u)
        for v in sorted(tree.neighbors(u), reverse=True):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return order
