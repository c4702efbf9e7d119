"""
네트워크가 유도하는 arrangement 그래프
정점 = 선분 끝점 + 선분 교차점 + 네트워크 위에 등록된 질의점
간선 = 각 선분 위 연속한 정점 사이의 부분 선분 (정확한 길이)
"""

import logging
from bisect import bisect_left, bisect_right
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from models import Point, RectilinearNetwork, Segment
from geometry.metrics import manhattan_distance
from geometry.network import canonicalize

logger = logging.getLogger(__name__)


class ArrangementGraph:
    """arrangement 그래프와 단조(monotone) 도달성 탐색"""

    def __init__(self, net: RectilinearNetwork, query_points: Iterable[Point] = ()):
        self.network = canonicalize(net)
        self.graph = nx.Graph()
        # 직선별 선분 (정규화 후 서로소이므로 시작 좌표로 정렬 가능)
        self._lines: Dict[tuple, List[Segment]] = defaultdict(list)
        for seg in self.network.segments:
            self._lines[seg.line_key].append(seg)
        self._starts: Dict[tuple, List[Fraction]] = {}
        for key, runs in self._lines.items():
            runs.sort(key=lambda s: s.a[s.axis])
            self._starts[key] = [s.a[s.axis] for s in runs]

        splits: Dict[Segment, Set[Fraction]] = {
            seg: {seg.a[seg.axis], seg.b[seg.axis]} for seg in self.network.segments
        }
        self._add_intersections(splits)
        # 터미널이 선분 내부에 있을 수 있으므로 정점으로 등록
        for p in query_points:
            for seg in self._segments_through(p):
                splits[seg].add(p[seg.axis])

        for seg, coords in splits.items():
            ordered = sorted(coords)
            prev = seg.a.replace(seg.axis, ordered[0])
            self.graph.add_node(prev)
            for c in ordered[1:]:
                cur = seg.a.replace(seg.axis, c)
                self.graph.add_edge(prev, cur, weight=c - prev[seg.axis], axis=seg.axis)
                prev = cur

        logger.debug(
            f"arrangement: 선분 {len(self.network)}개 → 정점 {self.graph.number_of_nodes()}개, "
            f"간선 {self.graph.number_of_edges()}개"
        )

    def _add_intersections(self, splits: Dict[Segment, Set[Fraction]]) -> None:
        """서로 다른 축의 선분 쌍 교차점 (정확한 유리수)"""
        by_axis: Dict[int, List[Segment]] = defaultdict(list)
        for seg in self.network.segments:
            by_axis[seg.axis].append(seg)

        for i, k in combinations(sorted(by_axis), 2):
            # i, k 를 제외한 좌표가 같아야 교차 가능
            buckets: Dict[tuple, List[Tuple[Fraction, Segment]]] = defaultdict(list)
            for seg_k in by_axis[k]:
                buckets[_other_coords(seg_k.a, i, k)].append((seg_k.a[i], seg_k))
            for bucket in buckets.values():
                bucket.sort()

            for seg_i in by_axis[i]:
                bucket = buckets.get(_other_coords(seg_i.a, i, k))
                if not bucket:
                    continue
                keys = [c for c, _ in bucket]
                lo = bisect_left(keys, seg_i.a[i])
                hi = bisect_right(keys, seg_i.b[i])
                for _, seg_k in bucket[lo:hi]:
                    if seg_k.a[k] <= seg_i.a[k] <= seg_k.b[k]:
                        splits[seg_i].add(seg_k.a[i])
                        splits[seg_k].add(seg_i.a[k])

    def _segments_through(self, p: Point) -> List[Segment]:
        found = []
        for axis in range(p.d):
            key = (axis, p.coords[:axis] + p.coords[axis + 1:])
            runs = self._lines.get(key)
            if not runs:
                continue
            k = bisect_right(self._starts[key], p[axis]) - 1
            if k >= 0 and runs[k].contains(p):
                found.append(runs[k])
        return found

    def on_network(self, p: Point) -> bool:
        return p in self.graph or bool(self._segments_through(p))

    def monotone_path(self, source: Point, target: Point) -> Optional[List[Point]]:
        """source 에서 target 으로 각 축 좌표가 target 쪽으로만 움직이는 경로 (BFS)
        그런 경로가 있으면 그것이 곧 M-path
        """
        if source == target:
            return [source]
        if source not in self.graph or target not in self.graph:
            return None

        parent = {source: None}
        queue = [source]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            # 축 순서 고정으로 탐색 순서 결정
            for v in sorted(self.graph.neighbors(u), key=lambda w: (self.graph[u][w]["axis"], w)):
                if v in parent or not _moves_toward(u, v, target, self.graph[u][v]["axis"]):
                    continue
                parent[v] = u
                if v == target:
                    return self._trace(parent, source, target)
                queue.append(v)
        return None

    def _trace(self, parent: dict, source: Point, target: Point) -> List[Point]:
        path = [target]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        length = sum((self.graph[a][b]["weight"] for a, b in zip(path, path[1:])), Fraction(0))
        assert length == manhattan_distance(source, target), "단조 경로 길이가 L1 거리와 다름"
        return path


def _other_coords(p: Point, i: int, k: int) -> tuple:
    return tuple(c for axis, c in enumerate(p.coords) if axis != i and axis != k)


def _moves_toward(u: Point, v: Point, target: Point, axis: int) -> bool:
    """u->v 이동이 axis 방향으로 target 좌표를 넘지 않고 가까워지는지"""
    lo, hi = sorted((u[axis], target[axis]))
    return v[axis] != u[axis] and lo <= v[axis] <= hi
