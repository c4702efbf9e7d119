"""
Dreyfus-Wagner 동적계획: 그래프 위 최소 Steiner 트리 (방향 그래프면 root 에서 나가는 arborescence)
Hanan 격자 위 정확해 계산에 사용, 터미널 수에 지수적이므로 작은 입력 전용
"""

import math
from typing import Dict, Hashable, List, Sequence, Set, Tuple

import networkx as nx

Edge = Tuple[Hashable, Hashable]


def min_steiner_edges(graph: nx.Graph, root: Hashable, terminals: Sequence[Hashable]) -> Tuple[float, Set[Edge]]:
    """root 와 terminals 를 잇는 최소 가중치 간선 집합과 그 비용"""
    terms = sorted({t for t in terminals if t != root})
    if not terms:
        return 0, set()

    nodes = list(graph.nodes)
    dist: Dict[Hashable, Dict[Hashable, object]] = dict(nx.all_pairs_dijkstra_path_length(graph, weight="weight"))
    k = len(terms)
    full = (1 << k) - 1

    def d(u, v):
        return dist[u].get(v, math.inf)

    dp: List[Dict[Hashable, object]] = [dict() for _ in range(full + 1)]
    via: List[Dict[Hashable, Hashable]] = [dict() for _ in range(full + 1)]
    split: List[Dict[Hashable, int]] = [dict() for _ in range(full + 1)]

    for i, t in enumerate(terms):
        for v in nodes:
            dp[1 << i][v] = d(v, t)

    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        low = mask & -mask
        # u 에서 두 부분트리로 갈라지는 최선의 분할
        joined: Dict[Hashable, object] = {}
        for u in nodes:
            best, best_sub = math.inf, 0
            sub = (mask - 1) & mask
            while sub:
                if sub & low:
                    cost = dp[sub][u] + dp[mask ^ sub][u]
                    if cost < best:
                        best, best_sub = cost, sub
                sub = (sub - 1) & mask
            joined[u] = best
            split[mask][u] = best_sub
        for v in nodes:
            best, best_u = math.inf, None
            for u in nodes:
                if joined[u] == math.inf:
                    continue
                cost = d(v, u) + joined[u]
                if cost < best:
                    best, best_u = cost, u
            dp[mask][v] = best
            via[mask][v] = best_u

    total = dp[full][root]
    if total == math.inf:
        raise ValueError("root 에서 도달할 수 없는 터미널이 있음")

    edges: Set[Edge] = set()

    def add_path(u, v):
        if u == v:
            return
        path = nx.dijkstra_path(graph, u, v, weight="weight")
        edges.update(zip(path, path[1:]))

    def build(mask, v):
        if mask & (mask - 1) == 0:
            add_path(v, terms[mask.bit_length() - 1])
            return
        u = via[mask][v]
        add_path(v, u)
        sub = split[mask][u]
        build(sub, u)
        build(mask ^ sub, u)

    build(full, root)
    return total, edges
