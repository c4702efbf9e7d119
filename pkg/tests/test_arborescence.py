import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from errors import ConfigError, PreconditionError, SizeCapError
from models import Box, Point
from geometry import manhattan_distance, network_length
from arborescence import (
    ALL_ORTHANT, PER_ORTHANT, RsaInstance, SteinerBackend, SteinerCaps,
    build_arborescence, canonical_m_path, exact_rsa, helly_min_point, rsa_pairs,
    rsa_shortcut, solve_rsa, steiner_tree,
)
import arborescence.shortcut as shortcut_module
import geometry.network as network_module
from arborescence.exact import ExactRsaCaps
from arborescence.shortcut import ceil_log2, orthant_groups
from arborescence.steiner import l1_candidate_edges_2d
from verifier import verify_instance
from gmmn_strategies import points


def rsa_is_feasible(net, inst):
    return verify_instance(net, rsa_pairs(inst)).feasible


def random_rsa(rng, count, d=2, lo=-32, hi=32):
    terms = [Point.of(*(rng.randint(lo, hi) for _ in range(d))) for _ in range(count)]
    return RsaInstance.of(terms, Point.origin(d))


class TestHelly:
    def test_median_point(self):
        assert helly_min_point(Point.of(3, 5), Point.of(-2, 4), Point.of(0, 0)) == Point.of(0, 4)

    def test_terminal_at_root(self):
        o = Point.of(0, 0)
        assert helly_min_point(o, Point.of(7, -3), o) == o

    def test_degenerate_box(self):
        t = Point.of(1, 1, 1)
        assert helly_min_point(t, t, Point.origin(3)) == t

    @given(points(), points(), points())
    def test_in_all_three_boxes(self, t, u, o):
        m = helly_min_point(t, u, o)
        for a, b in ((o, t), (o, u), (t, u)):
            assert Box.from_terminals(a, b).contains(m)


class TestCanonicalMPath:
    def test_length(self):
        assert network_length(canonical_m_path(Point.of(0, 0), Point.of(2, 3))) == 5

    def test_via_point(self):
        net = canonical_m_path(Point.of(3, 5), Point.of(-2, 4), Point.of(0, 4))
        assert network_length(net) == 6
        assert any(s.contains(Point.of(0, 4)) for s in net.segments)

    def test_same_point(self):
        assert len(canonical_m_path(Point.of(1, 1), Point.of(1, 1))) == 0

    def test_via_outside_box(self):
        with pytest.raises(PreconditionError):
            canonical_m_path(Point.of(0, 0), Point.of(1, 1), Point.of(2, 0))


class TestSteinerTree:
    def test_single_point(self):
        tree = steiner_tree([Point.of(1, 2)])
        assert len(tree.network) == 0
        assert tree.length == 0

    def test_two_points(self):
        a, b = Point.of(0, 0), Point.of(3, -4)
        tree = steiner_tree([a, b])
        assert network_length(tree.network) == 7

    def test_square_and_center_exact(self):
        pts = [Point.of(0, 0), Point.of(1, 0), Point.of(0, 1), Point.of(1, 1), Point.of("1/2", "1/2")]
        tree = steiner_tree(pts, SteinerBackend.EXACT_SMALL)
        assert tree.length == 3
        assert network_length(tree.network) == 3

    def test_exact_size_cap(self):
        pts = [Point.of(i, i * i % 7) for i in range(5)]
        with pytest.raises(SizeCapError):
            steiner_tree(pts, SteinerBackend.EXACT_SMALL, SteinerCaps(max_points=4))

    def test_backend_tags(self):
        assert SteinerBackend.from_tag("exact") is SteinerBackend.EXACT_SMALL
        with pytest.raises(ConfigError):
            SteinerBackend.from_tag("ilp")

    @pytest.mark.parametrize("seed", range(10))
    def test_octant_candidates_keep_mst_weight(self, seed):
        rng = random.Random(seed)
        pts = sorted({Point.of(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(40)})
        sparse = nx.Graph()
        for i, j in l1_candidate_edges_2d(pts):
            sparse.add_edge(i, j, weight=manhattan_distance(pts[i], pts[j]))
        full = nx.complete_graph(len(pts))
        for i, j in full.edges:
            full[i][j]["weight"] = manhattan_distance(pts[i], pts[j])
        assert nx.is_connected(sparse)
        assert (
            nx.minimum_spanning_tree(sparse).size(weight="weight")
            == nx.minimum_spanning_tree(full).size(weight="weight")
        )

    def test_three_dimensional_tree_spans(self):
        pts = [Point.of(0, 0, 0), Point.of(1, 2, 3), Point.of(-1, 0, 2)]
        tree = steiner_tree(pts)
        assert set(tree.tree.nodes) == set(pts)
        assert network_length(tree.network) <= tree.length


class TestRsaShortcut:
    def test_root_only(self):
        o = Point.of(0, 0)
        assert len(rsa_shortcut(RsaInstance.of([o], o))) == 0

    def test_two_axis_terminals(self):
        inst = RsaInstance.of([Point.of(5, 0), Point.of(0, 5)], Point.of(0, 0))
        net = rsa_shortcut(inst)
        assert network_length(net) == 10
        assert rsa_is_feasible(net, inst)

    def test_eight_points_two_orthants(self):
        rng = random.Random(8)
        terms = [Point.of(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(4)]
        terms += [Point.of(rng.randint(-20, -1), rng.randint(-20, -1)) for _ in range(4)]
        inst = RsaInstance.of(terms, Point.of(0, 0))
        arb = build_arborescence(inst)
        assert arb.length <= arb.depth * arb.tree_length
        assert rsa_is_feasible(arb.network, inst)

    def test_per_orthant_strategy(self):
        inst = random_rsa(random.Random(3), 12)
        assert len(orthant_groups(inst)) > 1
        net = solve_rsa(inst, strategy=PER_ORTHANT)
        assert rsa_is_feasible(net, inst)

    def test_unknown_strategy(self):
        with pytest.raises(ConfigError):
            solve_rsa(random_rsa(random.Random(0), 2), strategy="bottom-up")

    def test_exact_backend_is_feasible(self):
        inst = random_rsa(random.Random(5), 4, lo=-5, hi=5)
        net = rsa_shortcut(inst, SteinerBackend.EXACT_SMALL)
        assert rsa_is_feasible(net, inst)

    def test_merge_work_per_level(self, monkeypatch):
        """단계마다 절반 두 개, 마지막 합집합 한 번만 병합"""
        merges = []
        original = network_module.canonicalize

        def counting(net):
            if not net.canonical:
                merges.append(len(net))
            return original(net)

        monkeypatch.setattr(network_module, "canonicalize", counting)
        monkeypatch.setattr(shortcut_module, "canonicalize", counting)
        inst = random_rsa(random.Random(9), 9)
        arb = build_arborescence(inst)
        assert arb.depth >= 1
        assert len(merges) <= 2 * arb.depth + 1
        assert arb.network.canonical
        assert rsa_is_feasible(arb.network, inst)

    @pytest.mark.parametrize("seed", range(40))
    def test_length_and_depth_bounds(self, seed):
        rng = random.Random(seed)
        d = rng.choice([2, 3])
        inst = random_rsa(rng, rng.randint(1, 32), d)
        arb = build_arborescence(inst)
        assert arb.length <= ceil_log2(arb.n) * arb.tree_length
        assert arb.depth <= ceil_log2(len(inst.terminals) + 1)
        assert rsa_is_feasible(arb.network, inst)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(200))
    def test_length_and_depth_bounds_full(self, seed):
        rng = random.Random(1000 + seed)
        d = rng.choice([2, 3])
        for strategy in (ALL_ORTHANT, PER_ORTHANT):
            inst = random_rsa(rng, rng.randint(1, 64), d)
            arb = build_arborescence(inst)
            assert arb.length <= arb.bound
            assert arb.depth <= ceil_log2(len(inst.terminals) + 1)
            assert rsa_is_feasible(solve_rsa(inst, strategy=strategy), inst)

    def test_ceil_log2(self):
        assert [ceil_log2(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]


class TestExactRsa:
    def test_single_terminal(self):
        inst = RsaInstance.of([Point.of(3, -2)], Point.of(0, 0))
        assert network_length(exact_rsa(inst)) == 5

    def test_shared_staircase(self):
        inst = RsaInstance.of([Point.of(1, 1), Point.of(2, 2)], Point.of(0, 0))
        assert network_length(exact_rsa(inst)) == 4

    def test_two_axis_terminals(self):
        inst = RsaInstance.of([Point.of(5, 0), Point.of(0, 5)], Point.of(0, 0))
        assert network_length(exact_rsa(inst)) == 10

    def test_size_cap(self):
        inst = random_rsa(random.Random(0), 6, lo=-5, hi=5)
        with pytest.raises(SizeCapError):
            exact_rsa(inst, ExactRsaCaps(max_terminals=3))

    @pytest.mark.parametrize("seed", range(15))
    def test_never_longer_than_shortcut(self, seed):
        rng = random.Random(seed)
        inst = random_rsa(rng, rng.randint(1, 4), lo=-3, hi=3)
        exact = network_length(exact_rsa(inst))
        assert exact <= network_length(rsa_shortcut(inst))
        assert exact >= max((manhattan_distance(t, inst.root) for t in inst.terminals), default=Fraction(0))
