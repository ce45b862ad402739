import random

import pytest

from divgraph import (
    Divisor,
    Graph,
    RationalFunction,
    canonical_divisor,
    firing_divisor,
    principal_divisor,
)
from divgraph.errors import GraphMismatch, UnknownVertexId

from conftest import cycle, single_vertex


class TestDivisorBasics:
    def test_degree(self, triangle_doubled, binary2):
        assert Divisor(triangle_doubled, (-2, 3, -1)).degree == 0
        assert Divisor(binary2, (1, 1)).degree == 2
        assert Divisor.zero(binary2).degree == 0

    def test_restrict(self, triangle_doubled):
        d = Divisor(triangle_doubled, (-2, 3, -1))
        assert d.restrict({"v1", "v3"}) == -3
        assert d.restrict(set()) == 0
        assert d.restrict(set(triangle_doubled.vertex_ids)) == d.degree

    def test_indexing(self, triangle_doubled):
        d = Divisor(triangle_doubled, (-2, 3, -1))
        assert d["v2"] == 3
        with pytest.raises(UnknownVertexId):
            d["vx"]

    def test_arithmetic(self, binary2):
        a = Divisor(binary2, (1, 2))
        b = Divisor(binary2, (3, -1))
        assert (a + b).coeffs == (4, 1)
        assert (a - b).coeffs == (-2, 3)
        assert (-a).coeffs == (-1, -2)
        assert (2 * a).coeffs == (2, 4)

    def test_cross_graph_arithmetic_rejected(self, binary2, triangle_doubled):
        a = Divisor(binary2, (1, 2))
        b = Divisor(triangle_doubled, (1, 2, 3))
        with pytest.raises(GraphMismatch):
            a + b

    def test_wrong_length_rejected(self, binary2):
        with pytest.raises(GraphMismatch):
            Divisor(binary2, (1, 2, 3))

    def test_effective(self, binary2):
        assert Divisor(binary2, (0, 2)).is_effective()
        assert not Divisor(binary2, (-1, 2)).is_effective()


class TestOrders:
    def test_constant_function_vanishes(self, triangle_doubled):
        f = RationalFunction(triangle_doubled, (7, 7, 7))
        assert all(f.order_at(v) == 0 for v in triangle_doubled.vertex_ids)
        assert f.divisor() == Divisor.zero(triangle_doubled)

    def test_indicator_orders(self, triangle_doubled):
        f = RationalFunction(triangle_doubled, (0, 1, 0))
        assert f.order_at("v2") == 3
        assert f.order_at("v1") == -2
        assert f.order_at("v3") == -1

    def test_path_drop(self):
        g = Graph(["v1", "v2"], [("v1", "v2")])
        f = RationalFunction(g, (0, 5))
        assert (f.order_at("v1"), f.order_at("v2")) == (-5, 5)

    def test_loops_contribute_nothing(self):
        with_loop = Graph(["a", "b"], [("a", "b"), ("a", "a")])
        plain = Graph(["a", "b"], [("a", "b")])
        for values in ((0, 3), (2, -1)):
            fa = RationalFunction(with_loop, values)
            fb = RationalFunction(plain, values)
            assert fa.order_at("a") == fb.order_at("a")


class TestPrincipalDivisors:
    def test_degree_zero_exhaustive_small(self, triangle_doubled):
        for a in range(-2, 3):
            for b in range(-2, 3):
                f = RationalFunction(triangle_doubled, (a, b, 0))
                assert f.divisor().degree == 0

    def test_constant_shift_invariance(self, triangle_doubled):
        f = RationalFunction(triangle_doubled, (1, 4, -2))
        shifted = RationalFunction(triangle_doubled, (8, 11, 5))
        assert f.divisor() == shifted.divisor()

    def test_additivity_random(self, triangle_doubled):
        rng = random.Random(7)
        for _ in range(50):
            u = RationalFunction(
                triangle_doubled, tuple(rng.randint(-5, 5) for _ in range(3))
            )
            v = RationalFunction(
                triangle_doubled, tuple(rng.randint(-5, 5) for _ in range(3))
            )
            assert (u + v).divisor() == u.divisor() + v.divisor()
            assert (-u).divisor() == -u.divisor()

    def test_min_set_inequality_random(self, triangle_doubled):
        g = triangle_doubled
        rng = random.Random(13)
        for _ in range(200):
            values = tuple(rng.randint(-4, 4) for _ in range(3))
            if len(set(values)) == 1:
                continue
            f = RationalFunction(g, values)
            div = f.divisor()
            low = min(values)
            zs = {v for v, val in zip(g.vertex_ids, values) if val == low}
            cut = g.intersection(zs, set(g.vertex_ids) - zs)
            assert div.restrict(zs) <= -cut
            assert all(div[v] <= 0 for v in zs)

    def test_principal_divisor_helper(self, triangle_doubled):
        f = RationalFunction(triangle_doubled, (0, 1, 0))
        assert principal_divisor(f) == f.divisor()


class TestFiringDivisors:
    def test_worked_column(self, triangle_doubled):
        assert firing_divisor(triangle_doubled, "v2").coeffs == (2, -3, 1)

    def test_binary_column(self, binary2):
        assert firing_divisor(binary2, "v1").coeffs == (-3, 3)

    def test_single_vertex(self):
        g = single_vertex(1, loops=1)
        assert firing_divisor(g, "v").coeffs == (0,)

    def test_equals_divisor_of_negated_indicator(self, triangle_doubled):
        g = triangle_doubled
        for v in g.vertex_ids:
            f = RationalFunction(g, tuple(-1 if u == v else 0 for u in g.vertex_ids))
            assert f.divisor() == firing_divisor(g, v)

    def test_moves_sum_to_zero(self, triangle_doubled):
        total = Divisor.zero(triangle_doubled)
        for v in triangle_doubled.vertex_ids:
            total = total + firing_divisor(triangle_doubled, v)
        assert total == Divisor.zero(triangle_doubled)


class TestCanonicalDivisor:
    def test_binary(self, binary2):
        assert canonical_divisor(binary2).coeffs == (1, 1)

    def test_cycles_are_canonical_free(self):
        for n in range(3, 7):
            g = cycle(n)
            assert canonical_divisor(g).coeffs == (0,) * n

    def test_single_weighted_vertex(self):
        for g in range(0, 5):
            graph = single_vertex(g)
            assert canonical_divisor(graph).coeffs == (2 * g - 2,)

    def test_triangle_doubled(self, triangle_doubled):
        assert canonical_divisor(triangle_doubled).coeffs == (1, 1, 0)

    def test_degree_is_2g_minus_2(self, weight_loop_mix, two_weight_one):
        for g in (weight_loop_mix, two_weight_one):
            assert canonical_divisor(g).degree == 2 * g.genus() - 2
