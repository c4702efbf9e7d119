import random
from fractions import Fraction

import pytest

from errors import ConfigError, PreconditionError
from models import Instance, Point
from geometry import canonicalize, max_pair_distance, network_length, transform
from arborescence import RsaInstance, exact_rsa, rsa_shortcut
from generators import gen_tight, mmn_from_points
from solver import (
    D_SEPARATED, IMPROVED_2D, RECURSIVE_D, X_SEPARATED, SolverConfig,
    build_x_separated, connected_components_on_axis, decompose, median_split,
    solve_d_separated, solve_gmmn, solve_x_separated_improved, split_low_high,
)
from toolkit import exact_gmmn
from verifier import verify_instance
from gmmn_strategies import random_crossing_instance, random_instance

RECURSIVE = SolverConfig()
IMPROVED = SolverConfig(algorithm=IMPROVED_2D)


def pairs_instance(d, *pairs, separators=()):
    return Instance.from_pairs(d, [(Point.of(*t), Point.of(*u)) for t, u in pairs], separators=separators)


def feasible(net, inst):
    return verify_instance(net, inst).feasible


class TestSolverConfig:
    def test_defaults(self):
        assert RECURSIVE.algorithm == RECURSIVE_D
        assert RECURSIVE.jobs == 1

    def test_from_dict(self):
        cfg = SolverConfig.from_dict({"algorithm": "improved-2d", "rsa_backend": "exact-small", "jobs": 2})
        assert cfg.algorithm == IMPROVED_2D
        assert cfg.rsa_backend.value == "exact-small"

    @pytest.mark.parametrize("raw", [{"algorithm": "greedy"}, {"jobs": 0}, {"rsa_backend": "ilp"}, {"jobs": "many"}])
    def test_invalid(self, raw):
        with pytest.raises(ConfigError):
            SolverConfig.from_dict(raw)

    def test_improved_requires_2d(self):
        inst = pairs_instance(3, ((0, 0, 0), (1, 1, 1)))
        with pytest.raises(ConfigError):
            solve_gmmn(inst, IMPROVED)

    def test_override_keeps_unset(self):
        cfg = IMPROVED.override(algorithm=None, jobs=3)
        assert cfg.algorithm == IMPROVED_2D
        assert cfg.jobs == 3


class TestMedianSplit:
    def test_example(self):
        inst = pairs_instance(2, ((1, 0), (2, 0)), ((3, 0), (4, 1)))
        split = median_split(inst, 0)
        assert split.median == 2
        assert split.left.is_empty()
        assert [b.lo[0] for b in split.mid.pairs] == [1]
        assert [b.lo[0] for b in split.right.pairs] == [3]
        assert split.mid.separators == (Fraction(2),)

    def test_single_pair(self):
        inst = pairs_instance(2, ((0, 0), (5, 5)))
        split = median_split(inst, 0)
        assert split.mid.n == 1 and split.left.is_empty() and split.right.is_empty()

    def test_all_crossing(self):
        inst = pairs_instance(2, ((-1, 0), (1, 0)), ((-2, 3), (2, 1)), ((0, 0), (3, 3)))
        split = median_split(inst, 0)
        assert split.median == 0
        assert split.mid.n == 3

    def test_empty(self):
        with pytest.raises(PreconditionError):
            median_split(Instance(d=2), 0)

    def test_wrong_level(self):
        with pytest.raises(PreconditionError):
            median_split(pairs_instance(2, ((0, 0), (1, 1))), 1)

    @pytest.mark.parametrize("seed", range(20))
    def test_soundness(self, seed):
        rng = random.Random(seed)
        inst = random_instance(rng, rng.randint(1, 40))
        if inst.is_empty():
            return
        split = median_split(inst, 0)
        assert split.left.n <= inst.n / 2
        assert split.right.n <= inst.n / 2
        assert split.left.n + split.mid.n + split.right.n == inst.n
        assert split.mid.separation_violations() == []
        assert all(b.hi[0] < split.median for b in split.left.pairs)
        assert all(b.lo[0] > split.median for b in split.right.pairs)

    @pytest.mark.parametrize("seed", range(20))
    def test_soundness_second_axis(self, seed):
        rng = random.Random(seed)
        inst = random_crossing_instance(rng, rng.randint(1, 40), lo=-8, hi=8)
        split = median_split(inst, 1)
        m = split.median
        assert split.left.n <= inst.n / 2
        assert split.right.n <= inst.n / 2
        assert split.left.n + split.mid.n + split.right.n == inst.n
        assert split.mid.separators == (Fraction(0), m)
        assert split.mid.separation_violations() == []
        assert all(b.lo[1] <= m <= b.hi[1] for b in split.mid.pairs)
        assert all(b.hi[1] < m for b in split.left.pairs)
        assert all(b.lo[1] > m for b in split.right.pairs)
        assert split.left.separators == (Fraction(0),)
        assert split.right.separators == (Fraction(0),)


class TestSolveDSeparated:
    def test_single_pair(self):
        inst = pairs_instance(2, ((-1, -2), (3, 1)), separators=(Fraction(0), Fraction(0)))
        net = solve_d_separated(inst)
        assert network_length(net) == 7
        assert feasible(net, inst)

    def test_crossing_pairs(self):
        inst = pairs_instance(2, ((-1, -1), (1, 1)), ((-1, 1), (1, -1)), separators=(Fraction(0), Fraction(0)))
        net = solve_d_separated(inst)
        assert feasible(net, inst)
        rsa = RsaInstance.of(inst.terminals(), Point.of(0, 0))
        assert network_length(exact_rsa(rsa)) == 6
        assert network_length(net) <= 2 * network_length(rsa_shortcut(rsa))

    def test_three_dimensional(self):
        inst = pairs_instance(3, ((-1, -1, -1), (2, 1, 3)), separators=(Fraction(0),) * 3)
        net = solve_d_separated(inst)
        assert network_length(net) == 9
        assert feasible(net, inst)

    def test_box_missing_separator_point(self):
        inst = pairs_instance(2, ((1, 1), (2, 2)), separators=(Fraction(0), Fraction(0)))
        with pytest.raises(PreconditionError):
            solve_d_separated(inst)

    def test_not_fully_separated(self):
        with pytest.raises(PreconditionError):
            solve_d_separated(pairs_instance(2, ((0, 0), (1, 1)), separators=(Fraction(0),)))


class TestComponents:
    def test_two_components(self):
        inst = pairs_instance(2, ((-1, 0), (1, 1)), ((-1, 2), (1, 3)))
        comps = connected_components_on_axis(inst)
        assert len(comps) == 2

    def test_overlapping_merge(self):
        inst = pairs_instance(2, ((-1, 0), (1, 2)), ((-1, 1), (1, 3)))
        comps = connected_components_on_axis(inst)
        assert len(comps) == 1
        assert comps[0].interval == (0, 3)

    def test_single_box(self):
        comps = connected_components_on_axis(pairs_instance(2, ((-1, 4), (2, -1))))
        assert comps[0].interval == (-1, 4)

    def test_touching_intervals_merge(self):
        inst = pairs_instance(2, ((-1, 0), (1, 1)), ((-1, 1), (1, 2)))
        assert len(connected_components_on_axis(inst)) == 1

    def test_non_crossing(self):
        with pytest.raises(PreconditionError):
            connected_components_on_axis(pairs_instance(2, ((1, 0), (2, 1))))


class TestImprovedXSeparated:
    def test_single_pair(self):
        inst = pairs_instance(2, ((-1, 0), (1, 2)), separators=(Fraction(0),))
        trace = build_x_separated(inst)
        net = trace.network
        assert feasible(net, inst)
        assert network_length(net) <= sum(c.bound for c in trace.components)
        assert exact_gmmn(inst).cost == 4
        assert network_length(net) >= 4

    def test_horizontal_pair_tie(self):
        inst = pairs_instance(2, ((-2, 1), (3, 1)), separators=(Fraction(0),))
        low, high = split_low_high(inst.pairs)
        assert low == (Point.of(-2, 1),)
        assert high == (Point.of(3, 1),)
        assert feasible(solve_x_separated_improved(inst), inst)

    def test_shifted_separator(self):
        inst = pairs_instance(2, ((1, 0), (5, 3)), ((2, 4), (4, -1)), separators=(Fraction(3),))
        assert feasible(solve_x_separated_improved(inst), inst)

    def test_needs_2d(self):
        with pytest.raises(ConfigError):
            build_x_separated(pairs_instance(3, ((0, 0, 0), (1, 1, 1)), separators=(Fraction(0),)))

    def test_needs_separator(self):
        with pytest.raises(PreconditionError):
            build_x_separated(pairs_instance(2, ((0, 0), (1, 1))))

    def test_non_straddling(self):
        with pytest.raises(PreconditionError):
            build_x_separated(pairs_instance(2, ((1, 0), (2, 1)), separators=(Fraction(0),)))


def _rsa_ratio(net, inst: RsaInstance) -> Fraction:
    exact = network_length(exact_rsa(inst))
    if exact == 0:
        return Fraction(1)
    return network_length(net) / exact


def _oracle_cases(count, seed):
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        inst = random_crossing_instance(rng, rng.randint(1, 3))
        if not inst.is_empty():
            cases.append(inst)
    return cases


def _check_component_ratio(inst):
    trace = build_x_separated(inst)
    assert feasible(trace.network, inst)
    for comp in trace.components:
        opt = exact_gmmn(comp.component.instance)
        beta = max(
            _rsa_ratio(comp.a_up, RsaInstance.of(comp.low, comp.top)),
            _rsa_ratio(comp.a_down, RsaInstance.of(comp.high, comp.bot)),
        )
        assert network_length(comp.network) <= (2 * beta + max(2 * beta, 4)) * opt.cost


@pytest.mark.parametrize("inst", _oracle_cases(20, 7))
def test_component_cost_within_parametric_ratio(inst):
    _check_component_ratio(inst)


@pytest.mark.slow
@pytest.mark.parametrize("inst", _oracle_cases(200, 77))
def test_component_cost_within_parametric_ratio_full(inst):
    _check_component_ratio(inst)


class TestSolveGmmn:
    @pytest.mark.parametrize("cfg", [RECURSIVE, IMPROVED])
    def test_single_pair(self, cfg):
        inst = pairs_instance(2, ((0, 0), (3, 2)))
        net = solve_gmmn(inst, cfg)
        assert feasible(net, inst)

    def test_single_pair_recursive_is_staircase(self):
        inst = pairs_instance(2, ((0, 3), (4, 0)))
        assert network_length(solve_gmmn(inst)) == 7

    def test_empty_instance(self):
        assert len(solve_gmmn(Instance(d=2))) == 0

    @pytest.mark.parametrize("cfg", [RECURSIVE, IMPROVED])
    def test_mmn_of_four_points(self, cfg):
        inst = mmn_from_points([Point.of(0, 0), Point.of(4, 1), Point.of(1, 5), Point.of(3, 3)])
        assert inst.n == 6
        net = solve_gmmn(inst, cfg)
        assert feasible(net, inst)
        assert network_length(net) >= max_pair_distance(inst)

    def test_three_dimensional_mmn(self):
        rng = random.Random(1)
        pts = [Point.of(*(rng.randint(-5, 5) for _ in range(3))) for _ in range(5)]
        inst = mmn_from_points(pts)
        assert feasible(solve_gmmn(inst), inst)

    @pytest.mark.parametrize("k, floor", [(2, 2), (3, 3)])
    def test_tight_family_lower_bound(self, k, floor):
        generated = gen_tight(k)
        net = solve_gmmn(generated.instance, IMPROVED)
        assert feasible(net, generated.instance)
        assert network_length(net) >= floor

    def test_decompose_leaf_kinds(self):
        inst = random_instance(random.Random(2), 20)
        assert {t.kind for t in decompose(inst, RECURSIVE)} == {D_SEPARATED}
        assert {t.kind for t in decompose(inst, IMPROVED)} == {X_SEPARATED}
        assert sum(t.instance.n for t in decompose(inst, RECURSIVE)) == inst.n

    def test_left_and_right_stay_apart(self):
        inst = random_instance(random.Random(9), 30)
        split = median_split(inst, 0)
        left = solve_gmmn(split.left)
        right = solve_gmmn(split.right)
        assert all(p[0] <= split.median for s in left.segments for p in (s.a, s.b))
        assert all(p[0] >= split.median for s in right.segments for p in (s.a, s.b))

    def test_parallel_matches_sequential(self):
        inst = random_instance(random.Random(5), 24)
        assert solve_gmmn(inst, RECURSIVE.override(jobs=2)) == solve_gmmn(inst, RECURSIVE)

    @pytest.mark.parametrize("seed", range(30))
    def test_feasible_on_random(self, seed):
        rng = random.Random(seed)
        d = rng.choice([2, 3, 4])
        inst = random_instance(rng, rng.randint(1, 16), d)
        configs = [RECURSIVE, IMPROVED] if d == 2 else [RECURSIVE]
        for cfg in configs:
            assert feasible(solve_gmmn(inst, cfg), inst)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(1000))
    def test_feasible_on_random_full(self, seed):
        rng = random.Random(10_000 + seed)
        d = rng.choice([2, 3, 4])
        inst = random_instance(rng, rng.randint(1, 64), d)
        configs = [RECURSIVE, IMPROVED] if d == 2 else [RECURSIVE]
        for cfg in configs:
            assert feasible(solve_gmmn(inst, cfg), inst)

    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(2), Fraction(3)])
    def test_scale_and_translation_equivariance(self, seed, alpha):
        rng = random.Random(seed)
        inst = random_instance(rng, rng.randint(1, 12))
        shift = Point.of(rng.randint(-5, 5), rng.randint(-5, 5))
        for cfg in (RECURSIVE, IMPROVED):
            moved = solve_gmmn(transform(inst, alpha, shift), cfg)
            assert canonicalize(moved) == canonicalize(transform(solve_gmmn(inst, cfg), alpha, shift))
