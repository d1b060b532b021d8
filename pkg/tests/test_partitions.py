import pytest

from cmscan import partitions as pt
from cmscan.polycore import parse_poly

P = parse_poly


class TestPartitions:
    def test_enumeration_order(self):
        assert pt.partitions(3) == ((3,), (2, 1), (1, 1, 1))
        assert pt.partitions(0) == ((),)

    def test_counts(self):
        # partition numbers p(0..9)
        want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
        assert [len(pt.partitions(n)) for n in range(10)] == want

    def test_max_part(self):
        assert pt.partitions(4, max_part=2) == ((2, 2), (2, 1, 1),
                                                (1, 1, 1, 1))

    def test_validation(self):
        with pytest.raises(ValueError):
            pt.check_partition((1, 2))
        with pytest.raises(ValueError):
            pt.check_partition((2, 0))


class TestHooksAndStatistics:
    def test_hook_lengths(self):
        assert pt.hook_lengths((2, 1)) == (3, 1, 1)
        assert pt.hook_lengths((3, 2)) == (4, 3, 2, 1, 1)
        assert pt.hook_lengths(()) == ()

    def test_conjugate(self):
        assert pt.conjugate((3, 1)) == (2, 1, 1)
        assert pt.conjugate(pt.conjugate((4, 2, 1))) == (4, 2, 1)

    def test_weighted_size(self):
        assert pt.weighted_size((2, 2)) == 2
        assert pt.weighted_size((1, 1, 1)) == 3
        assert pt.weighted_size((5,)) == 0

    def test_hook_poly(self):
        assert pt.hook_poly((1, 1)).reduce() == P("1 - t") * P("1 - t^2")

    def test_tableau_counts(self):
        assert pt.standard_tableau_count((2, 1)) == 2
        assert pt.standard_tableau_count((2, 2)) == 2
        assert pt.standard_tableau_count((3, 2)) == 5
        assert pt.standard_tableau_count(()) == 1

    def test_t_factorial(self):
        assert pt.t_factorial(3).reduce() == (
            P("1 - t") * P("1 - t^2") * P("1 - t^3"))


class TestMultipartitions:
    def test_enumeration_order_m2_n2(self):
        assert pt.multipartitions(2, 2) == (
            ((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1)))

    def test_total_count(self):
        # sum over compositions of n into m parts of products of p(k)
        assert len(pt.multipartitions(3, 2)) == 9
        assert len(pt.multipartitions(2, 3)) == 10

    def test_sizes(self):
        for mp in pt.multipartitions(3, 4):
            assert pt.multipartition_size(mp) == 4


class TestShiftOrbits:
    def test_shift_moves_components(self):
        mp = ((1,), (2,), (3,))
        assert pt.shift(mp, 1) == ((3,), (1,), (2,))
        assert pt.shift(pt.shift(mp, 1), 2) == mp

    def test_orbit_and_stabiliser(self):
        orbit = pt.orbit_of(((1,), (1,)), 2, 1)
        assert orbit.size() == 1 and orbit.stab_order == 2
        orbit = pt.orbit_of(((2,), ()), 2, 1)
        assert orbit.size() == 2 and orbit.stab_order == 1
        assert orbit.canonical == ((2,), ())

    def test_orbits_partition_the_multipartitions(self):
        m, p, n = 4, 2, 3
        d = m // p
        seen = set()
        total = 0
        for mp in pt.multipartitions(m, n):
            if mp in seen:
                continue
            orbit = pt.orbit_of(mp, p, d)
            assert orbit.size() * orbit.stab_order == p
            seen.update(orbit.members)
            total += orbit.size()
        assert total == len(pt.multipartitions(m, n))

    def test_shift_preserves_size(self):
        for mp in pt.multipartitions(3, 3):
            assert pt.multipartition_size(pt.shift(mp, 1)) == 3


class TestWeightPolynomials:
    def test_index_weight(self):
        # r(mu) = sum_i i * |mu^i| with components indexed from 0
        assert pt.index_weight(((1,), (1,), ())) == 1
        assert pt.index_weight(((), (), (2,))) == 4

    def test_orbit_weight_poly(self):
        orbit = pt.orbit_of(((1,), (1,), ()), 3, 1)
        assert pt.orbit_weight_poly(orbit) == P("t + t^2 + t^3")
        orbit = pt.orbit_of(((1,), (1,), (), ()), 4, 1)
        assert pt.orbit_weight_poly(orbit) == P("t + 2*t^3 + t^5")

    def test_hook_quotient(self):
        gp = pt.hook_quotient(((1,), (1, 1), ()))
        assert gp.reduce() == P("t + t^2 + t^3")


class TestTextFormat:
    def test_render(self):
        assert pt.render_multipartition(((2, 2), (), (1,))) == "2,2|-|1"
        assert pt.render_multipartition(((),)) == "-"

    def test_parse(self):
        assert pt.parse_multipartition("2,2|-|1") == ((2, 2), (), (1,))
        assert pt.parse_multipartition("-") == ((),)

    def test_round_trip(self):
        for mp in pt.multipartitions(3, 4):
            assert pt.parse_multipartition(pt.render_multipartition(mp)) == mp

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            pt.parse_multipartition("2,|1")
        with pytest.raises(ValueError):
            pt.parse_multipartition("1,2|-")
