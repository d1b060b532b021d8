import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmscan.polycore import (
    CycloFactorisation, GradedProduct, LaurentPoly, NotPolynomialError,
    cyclotomic, parse_poly, render_poly, series_quotient,
)

P = parse_poly


class TestParseRender:
    def test_parse_accepts_both_orders(self):
        assert P("t^8 + 2*t^5") == P("2*t^5 + t^8")

    def test_unit_coefficients_elided(self):
        assert render_poly(P("1*t^3 + 1*t + 1")) == "t^3 + t + 1"

    def test_descending_render(self):
        assert render_poly(P("1 + t + t^4")) == "t^4 + t + 1"

    def test_negative_exponents(self):
        p = P("t^-2 + 3")
        assert p.coeff(-2) == 1 and p.coeff(0) == 3
        assert render_poly(p) == "3 + t^-2"

    def test_signs(self):
        p = P("-t^2 + 4*t - 1")
        assert p.coeff(2) == -1 and p.coeff(1) == 4 and p.coeff(0) == -1
        assert render_poly(p) == "-t^2 + 4*t - 1"

    def test_zero(self):
        assert P("0").is_zero()
        assert render_poly(LaurentPoly.zero()) == "0"

    @pytest.mark.parametrize("bad", ["", "t +", "t^^2", "t^2 t", "x + 1",
                                     "1 2", "+ + t"])
    def test_malformed_rejected(self, bad):
        with pytest.raises(ValueError):
            P(bad)

    @given(st.dictionaries(st.integers(-6, 30), st.integers(-9, 9),
                           max_size=8))
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, coeffs):
        p = LaurentPoly(coeffs)
        assert P(render_poly(p)) == p


class TestArithmetic:
    def test_ring_ops(self):
        a, b = P("t + 1"), P("t - 1")
        assert a * b == P("t^2 - 1")
        assert a + b == P("2*t")
        assert a - b == P("2")
        assert a * 0 == LaurentPoly.zero()
        assert (a + 2) == P("t + 3")
        assert a ** 3 == P("t^3 + 3*t^2 + 3*t + 1")

    def test_shift_and_degrees(self):
        p = P("t^5 + t^2")
        assert p.trailing_degree() == 2 and p.degree() == 5
        assert p.shift(-2) == P("t^3 + 1")

    def test_content_and_at_one(self):
        p = P("6*t^2 + 4*t + 2")
        assert p.content() == 2
        assert p.at_one() == 12

    def test_evaluate(self):
        assert P("t^2 + t + 1")(2) == 7


class TestDivision:
    def test_frozen_indivisible_remainder(self):
        # 5th vs primitive 6th roots of unity: never divisible
        q, r = divmod(P("1 + t + t^2 + t^3 + t^4"), P("1 - t + t^2"))
        assert r == P("t - 1")
        assert q * P("1 - t + t^2") + r == P("1 + t + t^2 + t^3 + t^4")

    def test_frozen_divisible(self):
        num = P("1 + t") * P("1 + t + t^2 + t^3")
        assert num / P("1 + t^2") == P("1 + t") ** 2

    def test_truediv_raises_on_inexact(self):
        with pytest.raises(ValueError):
            P("t^2 + 1") / P("t + 1")

    def test_early_stop_on_leading_coefficient(self):
        q, r = divmod(P("t^2 + 1"), P("2*t + 1"))
        assert not r.is_zero()

    def test_trailing_shift_normalization(self):
        q, r = divmod(P("t^4 + t^3"), P("t"))
        assert (q, r) == (P("t^3 + t^2"), LaurentPoly.zero())

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(P("t"), LaurentPoly.zero())

    @given(
        st.dictionaries(st.integers(0, 8), st.integers(-5, 5), max_size=5),
        st.dictionaries(st.integers(0, 5), st.integers(-5, 5), min_size=1,
                        max_size=4),
    )
    @settings(max_examples=200, deadline=None)
    def test_product_division_round_trip(self, ac, bc):
        a, b = LaurentPoly(ac), LaurentPoly(bc)
        if b.is_zero():
            return
        assert divmod(a * b, b) == (a, LaurentPoly.zero())


class TestCyclotomic:
    def test_small_values(self):
        assert cyclotomic(1) == P("t - 1")
        assert cyclotomic(2) == P("t + 1")
        assert cyclotomic(6) == P("t^2 - t + 1")
        assert cyclotomic(12) == P("t^4 - t^2 + 1")

    def test_product_identity(self):
        for a in range(1, 61):
            product = LaurentPoly.one()
            for k in range(1, a + 1):
                if a % k == 0:
                    product = product * cyclotomic(k)
            assert product == P(f"t^{a} - 1"), a


class TestGradedProduct:
    def test_reduce_quotient(self):
        gp = GradedProduct.of(4) * GradedProduct.of(2).inv()
        assert gp.reduce() == P("1 + t^2")

    def test_reduce_reports_offending_cyclotomic(self):
        gp = GradedProduct.of(2) * GradedProduct.of(4).inv()
        with pytest.raises(NotPolynomialError) as err:
            gp.reduce()
        assert err.value.cyclotomic_index == 4

    def test_reduce_with_cancels_hidden_factors(self):
        # (1 - t^2)/(1 - t^4) alone is not a polynomial, but multiplying
        # by 1 + t^2 first makes it one.
        gp = GradedProduct.of(2) * GradedProduct.of(4).inv()
        assert gp.reduce_with(P("1 + t^2")) == LaurentPoly.one()

    def test_scalar_shift_substitute(self):
        gp = GradedProduct.of(2).scaled(-1).shifted(3)
        assert gp.reduce() == P("-t^3 + t^5")
        assert GradedProduct.of(2).substitute(3).reduce() == P("1 - t^6")

    def test_agreement_with_expand_then_divide(self):
        num = GradedProduct.of(6) * GradedProduct.of(4)
        den = GradedProduct.of(2) * GradedProduct.of(2)
        both = num * den.inv()
        expanded = (P("1 - t^6") * P("1 - t^4")) / (P("1 - t^2") ** 2)
        assert both.reduce() == expanded

    def test_inverse_of_nonunit_scalar_rejected(self):
        with pytest.raises(ValueError):
            GradedProduct.of(2).scaled(2).inv()

    def test_factorisation_signs(self):
        fact, sign = (GradedProduct.of(1) * GradedProduct.of(2)
                      ).cyclotomic_factorisation()
        assert isinstance(fact, CycloFactorisation)
        assert fact.as_dict() == {1: 2, 2: 1}
        assert sign == 1  # (1-t)(1-t^2) = (t-1)(t+1)(t-1) * (-1)^2


class TestSeriesQuotient:
    def test_exact_division_embeds(self):
        assert series_quotient(P("1 - t^2"), P("1 - t"), 4) == P("1 + t")

    def test_geometric_square(self):
        got = series_quotient(LaurentPoly.one(), P("1 - t") ** 2, 3)
        assert got == P("1 + 2*t + 3*t^2 + 4*t^3")

    def test_rejects_nonintegral(self):
        with pytest.raises(ValueError):
            series_quotient(LaurentPoly.one(), P("2 - t"), 3)

    def test_rejects_zero_constant_term(self):
        with pytest.raises(ValueError):
            series_quotient(LaurentPoly.one(), P("t"), 3)
