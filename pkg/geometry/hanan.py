"""
Hanan 격자: 모든 터미널 좌표를 지나는 축 평행 직선들이 만드는 격자
정확해 계산기(oracle)들이 공통으로 사용
"""

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from models import Point, Segment, check_same_dimension


@dataclass(frozen=True)
class HananGrid:
    """축별로 정렬된 서로 다른 좌표들"""
    axes: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def from_points(cls, points: Iterable[Point], extra: Iterable[Point] = ()) -> "HananGrid":
        """extra 는 분리 좌표(원점 등)처럼 격자에 포함시킬 추가 점"""
        pts = list(points) + list(extra)
        d = check_same_dimension(*pts)
        axes = tuple(tuple(sorted({p[i] for p in pts})) for i in range(d))
        return cls(axes=axes)

    @property
    def d(self) -> int:
        return len(self.axes)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.axes)

    @property
    def vertex_count(self) -> int:
        return prod(self.shape)

    def contains(self, p: Point) -> bool:
        return all(p[i] in self.axes[i] for i in range(self.d))

    def vertices(self) -> Iterator[Point]:
        for coords in product(*self.axes):
            yield Point(coords)

    def edges(self) -> Iterator[Segment]:
        """이웃한 격자점 사이의 단위 간선"""
        for p in self.vertices():
            for axis in range(self.d):
                nxt = self._step(p, axis, +1)
                if nxt is not None:
                    yield Segment(a=p, b=nxt, axis=axis)

    def _step(self, p: Point, axis: int, direction: int) -> Optional[Point]:
        coords = self.axes[axis]
        k = bisect_left(coords, p[axis]) + direction
        if 0 <= k < len(coords):
            return p.replace(axis, coords[k])
        return None

    def graph(self) -> nx.Graph:
        """무향 격자 그래프, weight = 정확한 간선 길이"""
        g = nx.Graph()
        g.add_nodes_from(self.vertices())
        for seg in self.edges():
            g.add_edge(seg.a, seg.b, weight=seg.length, axis=seg.axis)
        return g

    def outward_graph(self, root: Point) -> nx.DiGraph:
        """root 에서 멀어지는 방향으로만 향하는 격자 DAG
        root 에서 출발하는 방향 경로 = root 에서 나가는 M-path
        """
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices())
        for seg in self.edges():
            a, b, axis = seg.a, seg.b, seg.axis
            if b[axis] <= root[axis]:
                g.add_edge(b, a, weight=seg.length, axis=axis)
            else:
                g.add_edge(a, b, weight=seg.length, axis=axis)
        return g

    def monotone_paths(self, a: Point, b: Point) -> Iterator[Tuple[Segment, ...]]:
        """a 에서 b 로 가는 모든 단조 격자 경로 (간선 튜플)"""
        if a == b:
            yield ()
            return
        for axis in range(self.d):
            if a[axis] == b[axis]:
                continue
            direction = 1 if b[axis] > a[axis] else -1
            nxt = self._step(a, axis, direction)
            edge = Segment.between(a, nxt)
            for rest in self.monotone_paths(nxt, b):
                yield (edge,) + rest

    def cheapest_monotone_path(
        self,
        a: Point,
        b: Point,
        cost: Callable[[Segment], Fraction],
    ) -> Tuple[Fraction, List[Segment]]:
        """간선 비용 cost 에 대한 a->b 최소비용 단조 경로 (box 안 DAG 동적계획)"""
        order: List[Point] = []
        ranges = []
        for axis in range(self.d):
            lo, hi = sorted((a[axis], b[axis]))
            coords = [c for c in self.axes[axis] if lo <= c <= hi]
            if a[axis] > b[axis]:
                coords.reverse()
            ranges.append(coords)
        for coords in product(*ranges):
            order.append(Point(coords))

        best = {a: (Fraction(0), None)}
        # product 순서는 a 에서 b 방향 위상 정렬
        for p in order:
            if p not in best:
                continue
            base, _ = best[p]
            for axis in range(self.d):
                if p[axis] == b[axis]:
                    continue
                direction = 1 if b[axis] > a[axis] else -1
                nxt = self._step(p, axis, direction)
                edge = Segment.between(p, nxt)
                value = base + cost(edge)
                if nxt not in best or value < best[nxt][0]:
                    best[nxt] = (value, (p, edge))

        path: List[Segment] = []
        p = b
        while best[p][1] is not None:
            prev, edge = best[p][1]
            path.append(edge)
            p = prev
        path.reverse()
        return best[b][0], path
