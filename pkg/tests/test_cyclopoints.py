import math

import pytest

from cyclochar.cyclopoints import (
    CycloPoint,
    bivariate_gcd,
    g2_adjoint_poly,
    seven_variants,
    solve,
    variant_cyclo_orders,
)
from cyclochar.errors import PositiveDimensional, ZeroPolynomial
from cyclochar.laurent import BiLaurentPoly, cyclo_factor, eval_at_roots
from cyclochar.parsing import parse_bivariate

H = g2_adjoint_poly()

# reference variant table: i -> (x-order indices, y-order indices),
# cross-checked by exact evaluation of every candidate
EXPECTED_COLUMNS = {
    1: ({2, 4}, {8}),
    2: ({8}, {2, 4}),
    3: ({8}, {8}),
    4: ({3, 7, 15}, {5, 7}),
    5: ({7}, {2, 42}),
    6: ({42}, {3}),
    7: ({42}, {2, 42}),
}


@pytest.fixture(scope="module")
def g2_report():
    return solve(H)


class TestAdjointPoly:
    def test_coefficients(self):
        assert H.coefficient(3, 2) == 2
        assert H.coefficient(0, 0) == 1
        assert H.coefficient(0, 1) == 1
        assert H.coefficient(6, 4) == 1
        assert H.coefficient_sum() == 14
        assert len(H.coeffs) == 13

    def test_parse_matches(self):
        text = ("y^4*x^6 + y^3*(x^6+x^5+x^4+x^3) + y^2*(x^4+2*x^3+x^2)"
                " + y*(x^3+x^2+x) + y + 1")
        assert parse_bivariate(text) == H


class TestSevenVariants:
    def test_count_and_order(self):
        vs = seven_variants(H)
        assert len(vs) == 7
        assert vs[0] == H.substitute(y_sign=-1)
        assert vs[3] == H.substitute(x_pow=2, y_pow=2)
        assert vs[6] == H.substitute(x_sign=-1, x_pow=2, y_sign=-1, y_pow=2)

    def test_h4_y_degree_doubles(self):
        h4 = seven_variants(H)[3]
        assert max(j for _, j in h4.coeffs) == 8

    def test_constant_fixed(self):
        c = BiLaurentPoly({(0, 0): 5})
        assert seven_variants(c) == [c] * 7

    def test_h3_even_parity_coefficient(self):
        h3 = seven_variants(H)[2]
        assert h3.coefficient(6, 4) == H.coefficient(6, 4)
        assert h3.coefficient(6, 3) == -H.coefficient(6, 3)


class TestVariantOrders:
    @pytest.mark.parametrize("i", sorted(EXPECTED_COLUMNS))
    def test_reference_table(self, i):
        hi = seven_variants(H)[i - 1]
        x_expected, y_expected = EXPECTED_COLUMNS[i]
        assert variant_cyclo_orders(H, hi, "x") == x_expected
        assert variant_cyclo_orders(H, hi, "y") == y_expected

    def test_positive_dimensional_raises(self):
        f = parse_bivariate("x - y")
        with pytest.raises(PositiveDimensional):
            variant_cyclo_orders(f, seven_variants(f)[3], "x")


class TestBivariateGcd:
    def test_shared_line(self):
        g = bivariate_gcd(parse_bivariate("x - y"), parse_bivariate("x^2 - y^2"))
        assert g in (parse_bivariate("x - y"), parse_bivariate("y - x"))

    def test_coprime(self):
        g = bivariate_gcd(parse_bivariate("x - y"), parse_bivariate("x + y"))
        assert set(g.coeffs) == {(0, 0)}

    def test_self_gcd(self):
        assert bivariate_gcd(H, H) == H

    def test_content_only_component(self):
        f = parse_bivariate("(x - 1)*(y + 2)")
        g = parse_bivariate("(x - 1)*(y^2 + 3)")
        assert bivariate_gcd(f, g) == parse_bivariate("x - 1")

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            bivariate_gcd(H, BiLaurentPoly.zero())

    def test_laurent_inputs_stripped(self):
        f = parse_bivariate("x^-1*y^-2*(x - y)")
        g = parse_bivariate("x^3*(x - y)*(x + y)")
        got = bivariate_gcd(f, g)
        assert got in (parse_bivariate("x - y"), parse_bivariate("y - x"))


class TestSolve:
    def test_element_orders(self, g2_report):
        assert g2_report.element_orders() == (7, 8, 15, 42)
        assert g2_report.positive_dimensional == ()

    def test_variant_columns_match_table(self, g2_report):
        for i, xs, ys in g2_report.variant_columns:
            assert set(xs) == EXPECTED_COLUMNS[i][0]
            assert set(ys) == EXPECTED_COLUMNS[i][1]

    def test_orbit_counts_per_order(self, g2_report):
        counts = {}
        for p in g2_report.points:
            counts[p.element_order] = counts.get(p.element_order, 0) + 1
        assert counts == {7: 2, 8: 6, 15: 3, 42: 3}

    def test_known_couples_appear(self, g2_report):
        reps = {(p.modulus, p.a, p.b) for p in g2_report.points}
        # known couples that are already canonical orbit representatives
        assert (7, 1, 1) in reps
        assert (7, 1, 3) in reps          # the couple behind H(x, x^3)
        assert (15, 1, 3) in reps
        assert (15, 1, 9) in reps
        assert (42, 1, 11) in reps        # the couple behind H(x, x^11)
        assert (42, 1, 28) in reps

    def test_every_point_reevaluates_to_zero(self, g2_report):
        for p in g2_report.points:
            assert eval_at_roots(H, p.modulus, p.a, p.b).is_zero()
            assert math.lcm(p.order_x, p.order_y) == p.modulus

    def test_galois_closure_exhaustive(self, g2_report):
        for p in g2_report.points:
            for j in range(1, p.modulus + 1):
                if math.gcd(j, p.modulus) == 1:
                    assert eval_at_roots(
                        H, p.modulus, (j * p.a) % p.modulus, (j * p.b) % p.modulus
                    ).is_zero()

    def test_orbit_sizes(self, g2_report):
        for p, size in zip(g2_report.points, g2_report.orbit_sizes):
            orbit = {
                ((j * p.a) % p.modulus, (j * p.b) % p.modulus)
                for j in range(1, p.modulus + 1)
                if math.gcd(j, p.modulus) == 1
            }
            assert len(orbit) == size
            assert min(orbit) == (p.a, p.b)

    def test_restriction_cross_check(self, g2_report):
        # zeros on the curve y = x^3 have x-order in {7, 8, 15}
        restriction_orders = set(cyclo_factor(H.restrict(1, 3)).indices())
        assert restriction_orders == {7, 8, 15}
        for p in g2_report.points:
            for j in range(1, p.modulus + 1):
                if math.gcd(j, p.modulus) == 1 and (3 * j * p.a - j * p.b) % p.modulus == 0:
                    assert p.order_x in restriction_orders
                    break

    def test_determinism(self, g2_report):
        again = solve(H)
        assert again == g2_report

    def test_single_trivial_point(self):
        rep = solve(parse_bivariate("x + y - 2"))
        assert [(p.modulus, p.a, p.b) for p in rep.points] == [(1, 0, 0)]
        assert rep.element_orders() == (1,)
        assert rep.orbit_sizes == (1,)

    def test_positive_dimensional_reported_not_fatal(self):
        rep = solve(parse_bivariate("x - y"))
        assert rep.points == ()
        assert set(rep.positive_dimensional) == {3, 4, 7}

    def test_zero_poly(self):
        with pytest.raises(ZeroPolynomial):
            solve(BiLaurentPoly.zero())

    def test_cyclopoint_ordering_is_canonical(self, g2_report):
        assert list(g2_report.points) == sorted(g2_report.points)


class TestCycloPointLabel:
    def test_labels(self):
        p = CycloPoint(8, 4, 1, 2, 8)
        assert p.label() == "(z8^4, z8)"
        assert CycloPoint(1, 0, 0, 1, 1).label() == "(1, 1)"
