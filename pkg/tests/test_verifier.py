from hypothesis import assume, given, strategies as st

from models import Instance, Point, RectilinearNetwork, Segment
from geometry import HananGrid, network_length, union_networks
from arborescence import canonical_m_path
from generators import gen_tight
from verifier import ArrangementGraph, has_m_path, verify_instance
from verifier.feasibility import NO_PATH, OFF_NETWORK
from gmmn_strategies import networks, points


def seg(a, b):
    return Segment.between(Point.of(*a), Point.of(*b))


L_PATH = RectilinearNetwork.of([seg((-1, -1), (0, -1)), seg((0, -1), (0, 0))])


class TestHasMPath:
    def test_l_path(self):
        assert has_m_path(L_PATH, (Point.of(-1, -1), Point.of(0, 0)))

    def test_u_shaped_detour_is_not_monotone(self):
        net = RectilinearNetwork.of([seg((0, 0), (0, 1)), seg((0, 1), (2, 1)), seg((2, 1), (2, 0))])
        assert network_length(net) == 4
        assert not has_m_path(net, (Point.of(0, 0), Point.of(2, 0)))

    def test_terminal_inside_segment(self):
        net = RectilinearNetwork.of([seg((0, 0), (4, 0))])
        assert has_m_path(net, (Point.of(1, 0), Point.of(3, 0)))

    def test_crossing_without_shared_endpoint(self):
        net = RectilinearNetwork.of([seg((0, 1), (2, 1)), seg((1, 0), (1, 2))])
        assert has_m_path(net, (Point.of(0, 1), Point.of(1, 2)))
        assert not has_m_path(net, (Point.of(0, 1), Point.of(1, 3)))

    def test_same_point_is_connected(self):
        assert has_m_path(RectilinearNetwork(), (Point.of(5, 5), Point.of(5, 5)))

    def test_three_dimensional_staircase(self):
        a, b = Point.of(0, 0, 0), Point.of(1, 2, 3)
        assert has_m_path(canonical_m_path(a, b), (a, b))

    def test_tight_certificate_connects_every_pair(self):
        generated = gen_tight(3)
        assert generated.instance.n == 7
        for box in generated.instance.pairs:
            assert has_m_path(generated.certificate, box.pair)

    @given(points(), points())
    def test_staircase_always_connects(self, a, b):
        assert has_m_path(canonical_m_path(a, b), (a, b))

    @given(networks(lo=0, hi=3), networks(lo=0, hi=3), points(lo=0, hi=3), points(lo=0, hi=3))
    def test_monotone_in_network(self, small, extra, a, b):
        """네트워크에 선분을 더해도 연결된 쌍은 계속 연결"""
        net = RectilinearNetwork.of(small)
        assume(has_m_path(net, (a, b)))
        assert has_m_path(union_networks(net, RectilinearNetwork.of(extra)), (a, b))

    @given(networks(lo=0, hi=5, max_size=6), points(lo=0, hi=5), points(lo=0, hi=5))
    def test_matches_grid_path_enumeration(self, segments, a, b):
        """6x6 격자의 단조 경로를 모두 나열한 결과와 같은지"""
        net = RectilinearNetwork.of(segments)
        grid = HananGrid.from_points([Point.of(i, i) for i in range(6)])

        def on_network(p):
            return any(s.contains(p) for s in net.segments)

        def edge_on_network(e):
            mid = Point(tuple((x + y) / 2 for x, y in zip(e.a.coords, e.b.coords)))
            return on_network(e.a) and on_network(e.b) and on_network(mid)

        if a == b:
            expected = True
        else:
            expected = any(all(edge_on_network(e) for e in path) for path in grid.monotone_paths(a, b))
        assert has_m_path(net, (a, b)) == expected


class TestVerifyInstance:
    def test_empty_network_violates_every_pair(self):
        inst = Instance.from_pairs(2, [(Point.of(0, 0), Point.of(1, 1)), (Point.of(2, 0), Point.of(0, 3))])
        report = verify_instance(RectilinearNetwork(), inst)
        assert not report.feasible
        assert len(report.violations) == 2
        assert {v.reason for v in report.violations} == {OFF_NETWORK}

    def test_missing_segment_is_detected(self):
        generated = gen_tight(3)
        segments = generated.certificate.segments
        assert verify_instance(generated.certificate, generated.instance).feasible
        tampered = RectilinearNetwork(segments[1:])
        report = verify_instance(tampered, generated.instance)
        assert not report.feasible

    def test_no_path_reason(self):
        net = RectilinearNetwork.of([seg((0, 0), (0, 1)), seg((0, 1), (2, 1)), seg((2, 1), (2, 0))])
        inst = Instance.from_pairs(2, [(Point.of(0, 0), Point.of(2, 0))])
        report = verify_instance(net, inst)
        assert [v.reason for v in report.violations] == [NO_PATH]

    def test_report_lines(self):
        inst = Instance.from_pairs(2, [(Point.of(-1, -1), Point.of(0, 0))])
        lines = verify_instance(L_PATH, inst).to_lines()
        assert lines[0] == "status: feasible"
        assert "violations: 0" in lines


class TestArrangementGraph:
    def test_intersection_becomes_vertex(self):
        graph = ArrangementGraph(RectilinearNetwork.of([seg((0, 1), (2, 1)), seg((1, 0), (1, 2))]))
        assert Point.of(1, 1) in graph.graph
        assert graph.graph.number_of_edges() == 4

    def test_monotone_path_length_is_distance(self):
        graph = ArrangementGraph(L_PATH)
        path = graph.monotone_path(Point.of(-1, -1), Point.of(0, 0))
        assert path == [Point.of(-1, -1), Point.of(0, -1), Point.of(0, 0)]

    @given(st.lists(points(lo=0, hi=4), min_size=2, max_size=5))
    def test_query_points_on_network(self, pts):
        net = union_networks(*(canonical_m_path(a, b) for a, b in zip(pts, pts[1:])))
        graph = ArrangementGraph(net, query_points=pts)
        assume(len(net) > 0)
        assert all(graph.on_network(p) for p in pts)
