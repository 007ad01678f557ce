"""Symmetric Laurent polynomials positive on the unit circle, and the
S-character axioms (pointwise real >= 0, inner product 1 with the trivial
character) checked on exact class data.

The positivity decision converts f(e^{i theta}) = a0 + sum 2 a_n cos(n theta)
to a polynomial in c = cos(theta) through the Chebyshev basis and isolates
its real roots on [-1, 1]; nothing is ever decided by floating point.
"""

from __future__ import annotations

import dataclasses
import functools
from fractions import Fraction

from . import realroots
from .errors import (
    HypothesisViolated,
    InconsistentClassData,
    IsTrivial,
    NotAnSCharacter,
    NotASquare,
    NotClassifiable,
    NotSymmetric,
)
from .laurent import CycloElement, LaurentPoly, cos_minimal_poly
from .parsing import parse_univariate
from .principal import sl2_character


class SymmetricLaurent:
    """A Laurent polynomial with integer coefficients and a_n = a_{-n}.

    The symmetry is exactly the condition that all values on the unit
    circle are real.
    """

    __slots__ = ("poly",)

    def __init__(self, poly: LaurentPoly | dict[int, int]):
        if isinstance(poly, dict):
            poly = LaurentPoly(poly)
        for e, c in poly.coeffs.items():
            if poly.coefficient(-e) != c:
                raise NotSymmetric(f"coefficient mismatch at exponents {e}, {-e}")
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, *args):
        raise AttributeError("SymmetricLaurent is immutable")

    def a(self, n: int) -> int:
        return self.poly.coefficient(n)

    def __eq__(self, other):
        if isinstance(other, SymmetricLaurent):
            return self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"SymmetricLaurent('{self.poly}')"

    def cos_coefficients(self) -> list[int]:
        """Integer coefficients of p(c) with f(e^{i theta}) = p(cos theta)."""
        if self.poly.is_zero():
            return []
        top = max(self.poly.max_exp, 0)
        out = [0] * (top + 1)
        out[0] = self.a(0)
        for n in range(1, top + 1):
            c = self.a(n)
            if c:
                for i, tc in enumerate(realroots.chebyshev_t(n)):
                    out[i] += 2 * c * tc
        while out and out[-1] == 0:
            out.pop()
        return out


def _coerce(f: SymmetricLaurent | LaurentPoly | dict) -> SymmetricLaurent:
    if isinstance(f, SymmetricLaurent):
        return f
    return SymmetricLaurent(f)


@dataclasses.dataclass(frozen=True)
class PositivityReport:
    """Outcome of the circle-positivity decision; when negative, the witness
    is a rational interval in c = cos(theta) on which the value is < 0."""

    is_positive: bool
    negative_interval: tuple[Fraction, Fraction] | None

    def __bool__(self) -> bool:
        return self.is_positive


def is_positive_on_circle(f: SymmetricLaurent | LaurentPoly) -> PositivityReport:
    """Exact decision whether f >= 0 everywhere on the unit circle."""
    f = _coerce(f)
    ok, witness = realroots.nonneg_on_interval(f.cos_coefficients(), Fraction(-1), Fraction(1))
    return PositivityReport(ok, witness)


def partial_sums(f: SymmetricLaurent | LaurentPoly, m: int) -> tuple[int, int]:
    """(S+, S-) = (m(a0 + 2 a_m), m(a0 - 2 a_m)), the sums of f over the
    2m-th roots of unity split by the sign of t**m.

    Requires a_n = 0 for every n > m divisible by m, the support condition
    that kills all other terms of the root-of-unity sums.
    """
    f = _coerce(f)
    if m < 1:
        raise ValueError("m must be >= 1")
    if not f.poly.is_zero():
        for n in range(2 * m, f.poly.max_exp + 1, m):
            if f.a(n):
                raise HypothesisViolated(f"a_{n} = {f.a(n)} is nonzero with {m} | {n}")
    a0, am = f.a(0), f.a(m)
    return m * (a0 + 2 * am), m * (a0 - 2 * am)


def g_plus(m: int) -> LaurentPoly:
    """t**-m + 2 + t**m."""
    return LaurentPoly({-m: 1, 0: 2, m: 1})


def g_minus(m: int) -> LaurentPoly:
    """-t**-m + 2 - t**m."""
    return LaurentPoly({-m: -1, 0: 2, m: -1})


def classify_a0_2(f: SymmetricLaurent | LaurentPoly) -> tuple[int, str]:
    """Identify a positive non-constant integer f with a0 = 2 as
    t**-m + 2 + t**m (sign '+') or -t**-m + 2 - t**m (sign '-').

    Any hypothesis failure raises NotClassifiable.
    """
    try:
        f = _coerce(f)
    except NotSymmetric as exc:
        raise NotClassifiable(f"not symmetric: {exc}") from exc
    if f.poly.is_constant():
        raise NotClassifiable("constant polynomial")
    if f.a(0) != 2:
        raise NotClassifiable(f"constant coefficient is {f.a(0)}, not 2")
    if not is_positive_on_circle(f):
        raise NotClassifiable("not positive on the unit circle")
    m = f.poly.max_exp
    if f.poly == g_plus(m):
        return m, "+"
    if f.poly == g_minus(m):
        return m, "-"
    raise NotClassifiable("matches neither t^-m + 2 + t^m nor -t^-m + 2 - t^m")


def su2_mean(f: SymmetricLaurent | LaurentPoly) -> int:
    """The inner product with the trivial character over SU2: by the Weyl
    integration formula this is half the constant coefficient of
    f * (-t**-2 + 2 - t**2), i.e. a0 - a2."""
    f = _coerce(f)
    return f.a(0) - f.a(2)


def su2_decompose(f: SymmetricLaurent | LaurentPoly) -> int:
    """Write a candidate S-character restriction as g_n**2 and return n.

    Requires positivity on the circle and mean 1 (else NotAnSCharacter);
    f * (-t**-2 + 2 - t**2) must then be -t**-2n + 2 - t**2n for some n
    (else NotASquare), and f = g_n**2 is verified by exact squaring.
    """
    f = _coerce(f)
    if su2_mean(f) != 1:
        raise NotAnSCharacter(f"mean is {su2_mean(f)}, not 1")
    if not is_positive_on_circle(f):
        raise NotAnSCharacter("not positive on the unit circle")
    big = f.poly * g_minus(2)
    m = big.max_exp
    if big != g_minus(m) or m % 2:
        raise NotASquare("f * (-t^-2 + 2 - t^2) is not of the form -t^-2n + 2 - t^2n")
    n = m // 2
    g = sl2_character(n)
    if f.poly != g * g:
        raise NotASquare(f"verification f = g_{n}^2 failed")
    return n


@dataclasses.dataclass(frozen=True)
class TorusRejection:
    """Certificate that a torus class function with constant term 1 is not
    an S-character: a separating one-parameter direction and a negativity
    witness for the restricted circle polynomial."""

    direction: tuple[int, ...]
    restriction: SymmetricLaurent
    negative_interval: tuple[Fraction, Fraction]


def torus_reject(f: dict[tuple[int, ...], int]) -> TorusRejection:
    """Reject a nontrivial symmetric torus class function with n_0 = 1.

    The direction y = (1, M, M**2, ...) with M exceeding twice the largest
    support difference keeps all support exponents distinct, so the
    restriction has constant term 1; a positive non-constant integer
    polynomial on the circle needs constant term >= 2, so the positivity
    check must fail and its witness certifies the rejection.
    """
    clean = {tuple(int(x) for x in e): int(c) for e, c in f.items() if c}
    if not clean:
        raise ValueError("empty class function")
    arity = len(next(iter(clean)))
    if any(len(e) != arity for e in clean):
        raise ValueError("inconsistent exponent arity")
    zero = (0,) * arity
    if clean.get(zero) != 1:
        raise ValueError("constant term must be 1")
    for e, c in clean.items():
        neg = tuple(-x for x in e)
        if clean.get(neg) != c:
            raise NotSymmetric(f"coefficient mismatch at {e} and {neg}")
    if clean == {zero: 1}:
        raise IsTrivial("the trivial character needs no rejection")
    spreads = [
        max(e[i] for e in clean) - min(e[i] for e in clean) for i in range(arity)
    ]
    m = 1 + 2 * max(spreads)
    direction = tuple(m ** i for i in range(arity))
    restricted: dict[int, int] = {}
    for e, c in clean.items():
        k = sum(x * y for x, y in zip(e, direction))
        if k in restricted:
            raise AssertionError("separating direction failed to separate")
        restricted[k] = c
    f_y = SymmetricLaurent(restricted)
    report = is_positive_on_circle(f_y)
    if report.is_positive:
        raise AssertionError("positive restriction with constant term 1 is impossible")
    return TorusRejection(direction, f_y, report.negative_interval)


# ---------------------------------------------------------------------------
# S-characters of finite groups from class data
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _cos_basis(j: int) -> tuple[int, ...]:
    """Coefficients of q_j(s) = z**j + z**-j as a polynomial in s = z + 1/z."""
    if j == 0:
        return (2,)
    if j == 1:
        return (0, 1)
    prev, cur = _cos_basis(j - 2), _cos_basis(j - 1)
    out = [0] * (j + 1)
    for i, c in enumerate(cur):
        out[i + 1] += c
    for i, c in enumerate(prev):
        out[i] -= c
    return tuple(out)


def cyclo_sign(v: CycloElement) -> int:
    """Sign (-1, 0, +1) of a real cyclotomic value under z = exp(2 pi i/N).

    Rational values short-circuit; otherwise the value is rewritten as a
    rational polynomial in s = 2 cos(2 pi/N) and its sign is read off at the
    largest real root of the minimal polynomial of s.
    """
    if v.is_zero():
        return 0
    if not v.is_real():
        raise ValueError("sign of a non-real value")
    if v.is_rational():
        r = v.rational_value()
        return 1 if r > 0 else -1
    coeffs = [Fraction(0)]
    for j, c in enumerate(v.residue):
        if not c:
            continue
        if j == 0:
            coeffs[0] += c
            continue
        basis = _cos_basis(j)
        while len(coeffs) < len(basis):
            coeffs.append(Fraction(0))
        for i, b in enumerate(basis):
            coeffs[i] += Fraction(c, 2) * b
    psi = realroots.from_ints(cos_minimal_poly(v.modulus))
    intervals = realroots.isolate_roots(psi, Fraction(-2), Fraction(2))
    lo, hi = intervals[-1]  # 2cos(2 pi/N) is the largest root
    return realroots.sign_at_unique_root(coeffs, psi, lo, hi)


@dataclasses.dataclass(frozen=True)
class FiniteClassFunction:
    """Conjugacy-class sizes and exact class-function values over a common
    cyclotomic modulus; the group order is the size total."""

    class_sizes: tuple[int, ...]
    values: tuple[CycloElement, ...]

    def __post_init__(self):
        if len(self.class_sizes) != len(self.values):
            raise InconsistentClassData("sizes and values differ in length")
        if not self.class_sizes:
            raise InconsistentClassData("no classes")
        if any(s < 1 for s in self.class_sizes):
            raise InconsistentClassData("class sizes must be positive")
        moduli = {v.modulus for v in self.values}
        if len(moduli) != 1:
            raise InconsistentClassData(f"mixed cyclotomic moduli {sorted(moduli)}")

    @staticmethod
    def from_rational(sizes, values) -> FiniteClassFunction:
        return FiniteClassFunction(
            tuple(sizes), tuple(CycloElement.from_int(1, v) for v in values)
        )

    @property
    def group_order(self) -> int:
        return sum(self.class_sizes)

    @property
    def modulus(self) -> int:
        return self.values[0].modulus


@dataclasses.dataclass(frozen=True)
class SCheckReport:
    is_positive: bool
    mean_is_one: bool
    zero_classes: tuple[int, ...]
    nonreal_classes: tuple[int, ...]
    negative_classes: tuple[int, ...]
    is_trivial: bool

    @property
    def is_s_character(self) -> bool:
        return self.is_positive and self.mean_is_one


def finite_s_check(cf: FiniteClassFunction) -> SCheckReport:
    """Check the two S-character axioms on exact class data and list the
    zero classes.

    Data passing both axioms with f != 1 but exhibiting no zero class
    cannot come from a virtual character, so that combination raises
    InconsistentClassData rather than being reported.
    """
    nonreal = []
    negative = []
    zeros = []
    for i, v in enumerate(cf.values):
        if not v.is_real():
            nonreal.append(i)
            continue
        s = cyclo_sign(v)
        if s == 0:
            zeros.append(i)
        elif s < 0:
            negative.append(i)
    total = CycloElement.from_int(cf.modulus, 0)
    for size, v in zip(cf.class_sizes, cf.values):
        total = total + v.scale(size)
    mean_is_one = total == CycloElement.from_int(cf.modulus, cf.group_order)
    is_positive = not nonreal and not negative
    is_trivial = all(v == CycloElement.from_int(cf.modulus, 1) for v in cf.values)
    if is_positive and mean_is_one and not is_trivial and not zeros:
        raise InconsistentClassData(
            "both S-character axioms hold for a nontrivial class function "
            "with no zero class; such values cannot come from a virtual character"
        )
    return SCheckReport(
        is_positive=is_positive,
        mean_is_one=mean_is_one,
        zero_classes=tuple(zeros),
        nonreal_classes=tuple(nonreal),
        negative_classes=tuple(negative),
        is_trivial=is_trivial,
    )


def load_class_data(text: str) -> FiniteClassFunction:
    """Parse the two-column class-data format.

    An optional directive line `root <var> <N>` declares the variable used
    in value expressions to stand for a primitive N-th root of unity; each
    remaining nonempty line is `<size> <value expression>`.  Without a
    directive, values are evaluated with modulus 1 (any variable collapses
    to 1).  Lines starting with '#' are comments.
    """
    var = "t"
    modulus = 1
    sizes: list[int] = []
    values: list[CycloElement] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if parts[0] == "root":
            fields = line.split()
            if len(fields) != 3 or values:
                raise InconsistentClassData(f"malformed root directive: {raw!r}")
            var = fields[1]
            modulus = int(fields[2])
            if modulus < 1:
                raise InconsistentClassData("root order must be >= 1")
            continue
        if len(parts) != 2:
            raise InconsistentClassData(f"expected '<size> <expression>': {raw!r}")
        try:
            size = int(parts[0])
        except ValueError as exc:
            raise InconsistentClassData(f"bad class size in {raw!r}") from exc
        poly = parse_univariate(parts[1], var)
        sizes.append(size)
        values.append(CycloElement.from_laurent(poly, modulus))
    return FiniteClassFunction(tuple(sizes), tuple(values))
