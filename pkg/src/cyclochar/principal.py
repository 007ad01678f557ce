"""Characters restricted to the principal one-parameter subgroup.

The restriction of the irreducible character with highest weight lambda to
the one-parameter subgroup t -> f(t), f = 2 rho^vee, is

    t**(-<lambda, 2 rho^vee>) * prod (t**(2n'_i) - 1) / (t**(2n_i) - 1)

with n'_i = <lambda + rho, a_i^vee> and n_i = <rho, a_i^vee> over the
positive coroots.  The quotient is assembled as a truncated power series in
linear passes per binomial and then certified exact by multiplying back,
which keeps the rank-8 sweeps fast without giving up exactness.
"""

from __future__ import annotations

import dataclasses

from . import _dense
from .errors import (
    InexactDivision,
    NonCyclotomicRemainder,
    ProductNotLarger,
    ZeroWeight,
)
from .laurent import LaurentPoly, cyclo_factor, divides_cyclotomic
from .rootsys import DominantWeight, RootSystem, epsilon_trivial, weight_pairings, weyl_dim


@dataclasses.dataclass(frozen=True)
class PrincipalCharacter:
    """An irreducible character evaluated on the principal torus.

    poly_u is the same polynomial in u = t**2 when the central element
    f(-1) is trivial (only even powers of t occur then); otherwise None.
    """

    type: object  # CartanType
    weight: DominantWeight
    numerator_exponents: tuple[int, ...]
    denominator_exponents: tuple[int, ...]
    poly_t: LaurentPoly
    epsilon_trivial: bool
    poly_u: LaurentPoly | None

    def dimension(self) -> int:
        return self.poly_t.coefficient_sum()

    @property
    def order_variable(self) -> str:
        return "u" if self.epsilon_trivial else "t"

    def natural_poly(self) -> LaurentPoly:
        return self.poly_u if self.epsilon_trivial else self.poly_t


def binomial_quotient(numer: list[int], denom: list[int]) -> LaurentPoly:
    """Exact polynomial prod(t**a - 1) / prod(t**b - 1).

    Computed as a power series truncated at the known degree and certified
    by multiplying the denominator back; raises InexactDivision when the
    quotient is not a polynomial.
    """
    if any(a < 1 for a in numer) or any(b < 1 for b in denom):
        raise ValueError("exponents must be positive")
    deg = sum(numer) - sum(denom)
    if deg < 0:
        raise InexactDivision("denominator degree exceeds numerator degree")
    full = [1]
    for a in numer:
        full = _dense.mul_binomial(full, a)
    quot = full[: deg + 1]
    for b in denom:
        quot = _dense.series_div_binomial(quot, b, deg)
    check = list(quot)
    for b in denom:
        check = _dense.mul_binomial(check, b)
    if _dense.trim(check) != full:
        raise InexactDivision("binomial quotient is not a polynomial")
    return LaurentPoly.from_dense(0, _dense.trim(quot))


def principal_character(rs: RootSystem, weight: DominantWeight) -> PrincipalCharacter:
    """Exact value of chi_lambda on the principal one-parameter subgroup."""
    nprime = tuple(weight_pairings(rs, weight))
    nden = tuple(rs.rho_pairings)
    if any(a < b for a, b in zip(nprime, nden)):
        raise InexactDivision("numerator exponent below denominator exponent")
    if not weight.is_zero() and all(a == b for a, b in zip(nprime, nden)):
        raise InexactDivision("nonzero weight with no strict exponent increase")
    shift = sum(nprime) - sum(nden)
    quot = binomial_quotient([2 * a for a in nprime], [2 * b for b in nden])
    poly_t = quot.shift(-shift)
    if poly_t.coefficient_sum() != weyl_dim(rs, weight):
        raise InexactDivision(f"{rs.type}: character value at 1 differs from the Weyl dimension")
    eps = epsilon_trivial(rs)
    poly_u = None
    if eps:
        poly_u = poly_t.compress(2)
    return PrincipalCharacter(
        type=rs.type,
        weight=weight,
        numerator_exponents=nprime,
        denominator_exponents=nden,
        poly_t=poly_t,
        epsilon_trivial=eps,
        poly_u=poly_u,
    )


def sl2_character(n: int) -> LaurentPoly:
    """g_n = (t**n - t**-n)/(t - 1/t), the n-dimensional SL2 character."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return LaurentPoly({n - 1 - 2 * j: 1 for j in range(n)})


def _g_chain(coeffs: list[int], offset: int, factors: tuple[int, ...]) -> tuple[list[int], int]:
    """Multiply a dense polynomial by prod g_n over factors, in linear passes:
    g_n = t**(1-n) (t**2n - 1)/(t**2 - 1)."""
    for n in factors:
        coeffs = _dense.mul_binomial(coeffs, 2 * n)
        coeffs = _dense.divexact_binomial(coeffs, 2)
        offset += 1 - n
    return coeffs, offset


def tensor_identity_check(rs: RootSystem, weight: DominantWeight,
                          pc: PrincipalCharacter | None = None) -> bool:
    """True iff poly_t * prod g_{n_i} equals prod g_{n'_i} exactly.

    This is the character identity between the pullback representation
    tensored with the rho-factor and the (lambda+rho)-factor, checked as an
    equality of Laurent polynomials.
    """
    if pc is None:
        pc = principal_character(rs, weight)
    val, coeffs = pc.poly_t.dense()
    lhs, off_l = _g_chain(coeffs, val, pc.denominator_exponents)
    rhs, off_r = _g_chain([1], 0, pc.numerator_exponents)
    return off_l == off_r and lhs == rhs


def explicit_zero_order(rs: RootSystem, weight: DominantWeight,
                        pc: PrincipalCharacter | None = None) -> int:
    """The order m = <2 lambda + 2 rho, beta^vee> at which the character is
    guaranteed to vanish, beta^vee the highest coroot; the divisibility of
    poly_t by Phi_m is asserted before returning."""
    if weight.is_zero():
        raise ZeroWeight("the trivial character never vanishes")
    m = 2 * weight_pairings(rs, weight)[rs.highest_coroot_index]
    if pc is None:
        pc = principal_character(rs, weight)
    if not divides_cyclotomic(pc.poly_t, m):
        raise NonCyclotomicRemainder(f"Phi_{m} does not divide the character")
    return m


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _prime_factors(n: int) -> set[int]:
    out = set()
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.add(n)
    return out


def prime_power_zero(numer: list[int], denom: list[int]) -> tuple[int, int]:
    """A prime power ell**m with Phi_{ell**m} dividing
    prod(t**n'_i - 1)/prod(t**n_i - 1), given prod n'_i > prod n_i.

    ell is the smallest prime whose total valuation rises from denominator
    to numerator, m the smallest level where strictly more numerator
    exponents than denominator exponents are divisible by ell**m.
    """
    if any(a < 1 for a in numer) or any(b < 1 for b in denom):
        raise ValueError("exponents must be positive integers")
    prod_n = 1
    for a in numer:
        prod_n *= a
    prod_d = 1
    for b in denom:
        prod_d *= b
    if prod_n <= prod_d:
        raise ProductNotLarger(f"{prod_n} <= {prod_d}")
    primes = set()
    for a in numer:
        primes |= _prime_factors(a)
    for ell in sorted(primes):
        if sum(_valuation(a, ell) for a in numer) > sum(_valuation(b, ell) for b in denom):
            m = 1
            while True:
                q = ell ** m
                w = sum(1 for a in numer if a % q == 0) - sum(1 for b in denom if b % q == 0)
                if w > 0:
                    return ell, m
                m += 1
    raise AssertionError("valuation argument guarantees a qualifying prime")


def zero_orders(pc: PrincipalCharacter) -> list[tuple[int, int]]:
    """Cyclotomic factorization of the character in its natural variable.

    The indices are the orders of the group elements at which the character
    vanishes: orders of u = t**2 when the principal map kills -1, orders of
    t itself otherwise.  The remainder must be a unit, else the character
    failed to factor into cyclotomics, which theory forbids.
    """
    if pc.weight.is_zero():
        raise ZeroWeight("the trivial character has no zeros")
    cf = cyclo_factor(pc.natural_poly())
    if not cf.remainder.is_unit_constant():
        raise NonCyclotomicRemainder(
            f"non-cyclotomic remainder {cf.remainder} for {pc.type}, weight {pc.weight}"
        )
    return list(cf.factors)


def t_orders(pc: PrincipalCharacter, orders: list[tuple[int, int]] | None = None) -> list[int]:
    """Orders of the torus parameter t at the character's zeros: twice the
    u-order when the kernel is {1, -1}, the natural order otherwise."""
    if orders is None:
        orders = zero_orders(pc)
    if pc.epsilon_trivial:
        return [2 * d for d, _ in orders]
    return [d for d, _ in orders]
