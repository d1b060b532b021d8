from fractions import Fraction

import pytest

from cmscan import groups as gr
from cmscan import linalg
from cmscan.cyclo import CycloNumber
from cmscan.fakedeg import GroupSpec
from cmscan.polycore import parse_poly

P = parse_poly


def reflection_count(m, p, n):
    """n(n-1)m/2 transposition-type plus n(d-1) diagonal reflections."""
    return n * (n - 1) * m // 2 + n * (m // p - 1)


class TestMonomialElements:
    def test_identity(self):
        e = gr.MonomialElement.identity(3, 2)
        assert e.is_identity()
        assert e.matrix() == linalg.identity(2, 3)

    def test_product_matches_matrix_product(self):
        g = GroupSpec(4, 2, 2)
        els = list(gr.elements(g))
        for x in els[::5]:
            for y in els[::7]:
                assert (x * y).matrix() == linalg.mat_mul(x.matrix(),
                                                          y.matrix())

    def test_inverse(self):
        g = GroupSpec(6, 3, 2)
        for w in gr.elements(g):
            assert (w * w.inv()).is_identity()
            assert (w.inv() * w).is_identity()

    def test_trace_agrees_with_matrix(self):
        g = GroupSpec(3, 1, 2)
        for w in gr.elements(g):
            mat = w.matrix()
            diag = mat[0][0] + mat[1][1]
            assert w.trace() == diag
            assert w.trace_inverse() == w.inv().trace()

    def test_validation(self):
        with pytest.raises(ValueError):
            gr.MonomialElement(3, (0, 0), (0, 0))  # not a permutation
        with pytest.raises(ValueError):
            gr.MonomialElement(3, (0, 1), (0, 3))  # exponent out of range

    def test_cycles(self):
        w = gr.MonomialElement(2, (1, 2, 0, 3), (1, 0, 1, 0))
        assert w.cycles() == [[0, 1, 2], [3]]


class TestEnumeration:
    @pytest.mark.parametrize("spec", [(1, 1, 3), (2, 1, 3), (3, 3, 2),
                                      (4, 2, 2), (6, 6, 3)])
    def test_count_is_group_order(self, spec):
        g = GroupSpec(*spec)
        assert sum(1 for _ in gr.elements(g)) == g.order

    def test_identity_comes_first(self):
        first = next(gr.elements(GroupSpec(4, 2, 3)))
        assert first.is_identity()

    def test_closure(self):
        g = GroupSpec(3, 3, 2)
        els = set(gr.elements(g))
        assert all(x * y in els for x in els for y in els)

    def test_order_bound(self):
        with pytest.raises(gr.GroupTooLargeError):
            list(gr.elements(GroupSpec(12, 1, 5)))
        with pytest.raises(gr.GroupTooLargeError):
            list(gr.elements(GroupSpec(2, 1, 3), max_order=10))


class TestReflections:
    @pytest.mark.parametrize("spec", [(1, 1, 3), (2, 1, 2), (3, 1, 2),
                                      (3, 3, 2), (4, 2, 2), (4, 4, 2),
                                      (2, 2, 3)])
    def test_reflection_count(self, spec):
        g = GroupSpec(*spec)
        found = sum(1 for w in gr.elements(g) if gr.is_reflection(w))
        assert found == reflection_count(*spec)

    def test_identity_is_not_a_reflection(self):
        assert not gr.is_reflection(gr.MonomialElement.identity(4, 2))

    def test_class_structure_g312(self):
        g = GroupSpec(3, 1, 2)
        classes = gr.reflection_classes(g)
        data = {(c.size, c.zeta) for c in classes}
        z = CycloNumber.zeta
        assert data == {(3, CycloNumber.from_rational(3, -1)),
                        (2, z(3, 1)), (2, z(3, 2))}

    def test_class_structure_g422(self):
        g = GroupSpec(4, 2, 2)
        classes = gr.reflection_classes(g)
        assert sorted(c.size for c in classes) == [2, 2, 2]
        assert sum(c.size for c in classes) == reflection_count(4, 2, 2)
        for c in classes:
            assert c.zeta == CycloNumber.from_rational(4, -1)

    def test_classes_are_closed_under_conjugation(self):
        g = GroupSpec(3, 3, 2)
        (cls,) = gr.reflection_classes(g)
        members = set(cls.elements)
        for x in gr.elements(g):
            for s in members:
                assert x * s * x.inv() in members


class TestNaturalCharacter:
    def test_norms(self):
        assert gr.character_norm(GroupSpec(1, 1, 3)) == 2
        assert gr.character_norm(GroupSpec(2, 2, 2)) == 2
        assert gr.character_norm(GroupSpec(3, 3, 2)) == 1
        assert gr.character_norm(GroupSpec(2, 1, 3)) == 1

    def test_irreducibility_flag(self):
        assert gr.is_irreducible_natural(GroupSpec(4, 2, 2))
        assert not gr.is_irreducible_natural(GroupSpec(1, 1, 4))


class TestOmega:
    def test_pairing_and_antisymmetry(self):
        x = gr.SymplecticVector.from_rationals(4, (1, 0), (0, 0))
        y = gr.SymplecticVector.from_rationals(4, (0, 0), (1, 0))
        one = CycloNumber.one(4)
        assert gr.omega(x, y) == -one
        assert gr.omega(y, x) == one
        assert gr.omega(x, x).is_zero()

    def test_restricted_form_projects_out_fixed_space(self):
        s = gr.MonomialElement(2, (0, 1), (1, 0))  # diag(-1, 1)
        x = gr.SymplecticVector.from_rationals(2, (1, 1), (0, 0))
        y = gr.SymplecticVector.from_rationals(2, (0, 0), (1, 1))
        fixed = gr.SymplecticVector.from_rationals(2, (0, 1), (0, 0))
        assert gr.omega_restricted(s, x, y) == CycloNumber.from_rational(2, -1)
        assert gr.omega_restricted(s, fixed, y).is_zero()

    def test_restricted_form_requires_reflection(self):
        w = gr.MonomialElement(2, (0, 1), (1, 1))  # diag(-1, -1)
        x = gr.SymplecticVector.from_rationals(2, (1, 0), (0, 0))
        with pytest.raises(ValueError):
            gr.omega_restricted(w, x, x)


class TestClassSums:
    @pytest.mark.parametrize("spec", [(3, 3, 2), (4, 4, 2), (3, 1, 2),
                                      (4, 2, 2), (2, 2, 3), (3, 3, 3),
                                      (2, 1, 3)])
    def test_scalar_is_size_over_rank(self, spec):
        g = GroupSpec(*spec)
        for cls in gr.reflection_classes(g):
            lam = gr.omega_class_sum(g, cls)
            assert lam == Fraction(cls.size, g.n)

    def test_reducible_refusal(self):
        g = GroupSpec(2, 2, 2)
        (cls, *_) = gr.reflection_classes(g)
        with pytest.raises(gr.ReducibleRepresentationError):
            gr.omega_class_sum(g, cls)

    def test_symmetric_group_natural_representation_refused(self):
        g = GroupSpec(1, 1, 3)
        (cls,) = gr.reflection_classes(g)
        with pytest.raises(gr.ReducibleRepresentationError):
            gr.omega_class_sum(g, cls)


class TestMolien:
    def test_rank_one(self):
        # invariants of <zeta_4> acting on one variable: C[x^4]
        got = gr.molien_series(GroupSpec(4, 1, 1), truncate=9)
        assert got == P("1 + t^4 + t^8")

    @pytest.mark.parametrize("spec", [(1, 1, 3), (2, 1, 2), (3, 3, 2),
                                      (4, 2, 2), (4, 4, 3), (6, 1, 2)])
    def test_matches_invariant_degrees(self, spec):
        g = GroupSpec(*spec)
        assert gr.molien_series(g, truncate=24) == gr.degrees_series(
            g, truncate=24)

    def test_degrees_series_hand_check(self):
        # G(3,3,2) has degrees (3, 2): 1/((1-t^2)(1-t^3))
        got = gr.degrees_series(GroupSpec(3, 3, 2), truncate=7)
        assert got == P("1 + t^2 + t^3 + t^4 + t^5 + 2*t^6 + t^7")

    def test_respects_order_bound(self):
        with pytest.raises(gr.GroupTooLargeError):
            gr.molien_series(GroupSpec(2, 1, 3), max_order=10)
