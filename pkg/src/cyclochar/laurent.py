"""Exact Laurent-polynomial arithmetic over the integers.

Univariate and bivariate sparse Laurent polynomials, cyclotomic polynomials
and cyclotomic-factor extraction, Sylvester resultants by fraction-free
elimination, and exact evaluation at roots of unity inside Z[z]/(Phi_N(z)).
Coefficients are Python ints throughout, so nothing here can overflow.
"""

from __future__ import annotations

import dataclasses
import functools
import math

from . import _dense
from .errors import (
    DegenerateDegree,
    InexactDivision,
    ZeroPolynomial,
)


class LaurentPoly:
    """A Laurent polynomial in one variable with integer coefficients.

    Stored as a map exponent -> coefficient with zero coefficients never
    kept, so equality and hashing are structural.  Instances are immutable;
    all operations return fresh objects.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[e] = v
        self._c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly()

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly({0: 1})

    @staticmethod
    def term(coeff: int, exp: int = 0) -> LaurentPoly:
        return LaurentPoly({exp: coeff})

    @staticmethod
    def variable() -> LaurentPoly:
        return LaurentPoly({1: 1})

    @staticmethod
    def from_dense(val: int, coeffs: list[int]) -> LaurentPoly:
        return LaurentPoly({val + i: c for i, c in enumerate(coeffs)})

    # -- structure ---------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def coefficient(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def support(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or self._c.keys() == {0}

    def is_unit_constant(self) -> bool:
        return self._c.get(0) in (1, -1) and len(self._c) == 1

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self._c.get(0, 0)

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no valuation")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(self._c)

    def degree_span(self) -> int:
        """max_exp - min_exp, the degree after stripping the monomial shift."""
        return self.max_exp - self.min_exp

    def coefficient_sum(self) -> int:
        """The value at t = 1."""
        return sum(self._c.values())

    def dense(self) -> tuple[int, list[int]]:
        """(valuation, coefficient list from the valuation up); ((0, []) for 0)."""
        if not self._c:
            return 0, []
        lo = self.min_exp
        out = [0] * (self.max_exp - lo + 1)
        for e, c in self._c.items():
            out[e - lo] = c
        return lo, out

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) - c
        return LaurentPoly(out)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly.term(other) - self

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._c.items()})
        out: dict[int, int] = {}
        a, b = self._c, other._c
        if len(b) < len(a):
            a, b = b, a
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if self.is_monomial():
                (e, c), = self._c.items()
                if c in (1, -1):
                    return LaurentPoly({e * n: c if n % 2 else 1})
            raise ValueError("negative powers only for unit monomials")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        return LaurentPoly({e + k: c for e, c in self._c.items()})

    def mirror(self) -> LaurentPoly:
        """Substitute t -> 1/t."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def stretch(self, k: int) -> LaurentPoly:
        """Substitute t -> t**k for k >= 1."""
        if k < 1:
            raise ValueError("stretch factor must be >= 1")
        return LaurentPoly({e * k: c for e, c in self._c.items()})

    def compress(self, k: int) -> LaurentPoly:
        """Inverse of stretch: requires every exponent divisible by k."""
        out = {}
        for e, c in self._c.items():
            if e % k:
                raise ValueError(f"exponent {e} not divisible by {k}")
            out[e // k] = c
        return LaurentPoly(out)

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient self/other; raises InexactDivision otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        va, a = self.dense()
        vb, b = other.dense()
        q = _dense.divexact(a, b)
        return LaurentPoly.from_dense(va - vb, q)

    def divisible_by(self, other: LaurentPoly) -> bool:
        if other.is_zero():
            return self.is_zero()
        if self.is_zero():
            return True
        _, a = self.dense()
        _, b = other.dense()
        return _dense.divides(b, a)

    # -- printing ----------------------------------------------------------

    def to_str(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                v = var if e == 1 else f"{var}^{e}"
                body = v if mag == 1 else f"{mag}*{v}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


# ---------------------------------------------------------------------------
# Euler phi and cyclotomic polynomials
# ---------------------------------------------------------------------------


def euler_phi(n: int) -> int:
    """Euler's totient by trial factorization."""
    if n < 1:
        raise ValueError("phi is defined for positive integers")
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out -= out // m
    return out


_PHI_TABLE: list[int] = [0, 1]


def phi_table(limit: int) -> list[int]:
    """Sieve of phi values up to limit (cached, grows monotonically)."""
    global _PHI_TABLE
    if limit < len(_PHI_TABLE):
        return _PHI_TABLE
    t = list(range(limit + 1))
    for p in range(2, limit + 1):
        if t[p] == p:  # prime
            for m in range(p, limit + 1, p):
                t[m] -= t[m] // p
    _PHI_TABLE = t
    return t


def cyclo_index_limit(max_degree: int) -> int:
    """A bound B such that phi(d) <= max_degree implies d <= B.

    Uses phi(d) >= sqrt(d/2) for small budgets and the Rosser-Schoenfeld
    lower bound phi(d) > d / (e^gamma ln ln d + 3/ln ln d) for large ones.
    """
    d = max_degree
    if d < 1:
        return 0
    hard = 2 * d * d + 1
    cand = max(8 * d, 16)
    while cand < hard:
        ll = math.log(math.log(cand))
        if cand / (1.7810724179901979 * ll + 3.0 / ll) > d:
            return cand
        cand *= 2
    return hard


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> LaurentPoly:
    """The d-th cyclotomic polynomial Phi_d, monic of degree phi(d).

    Computed by exact division of t**d - 1 by the product of the Phi_e over
    proper divisors e of d.
    """
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    p = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            _, q = cyclotomic(e).dense()
            p = _dense.divexact(p, q)
    return LaurentPoly.from_dense(0, p)


def divides_cyclotomic(f: LaurentPoly, d: int) -> bool:
    """True when Phi_d divides f, via folding modulo t**d - 1.

    Phi_d | f iff Phi_d | (f mod (t**d - 1)), and the fold costs one pass
    over the support however large f is.
    """
    if f.is_zero():
        return True
    _, p = f.dense()
    folded = _dense.trim(_dense.fold(p, d))
    _, phi_d = cyclotomic(d).dense()
    return _dense.divides(phi_d, folded)


# ---------------------------------------------------------------------------
# Cyclotomic factor extraction
# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class CycloFactorization:
    """t**shift times a product of cyclotomic polynomials times a remainder
    with nonzero constant term and no cyclotomic factor left."""

    shift: int
    factors: tuple[tuple[int, int], ...]  # (index d, multiplicity), d ascending
    remainder: LaurentPoly

    def indices(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.factors)

    def reassemble(self) -> LaurentPoly:
        out = LaurentPoly.term(1, self.shift)
        for d, mult in self.factors:
            out = out * cyclotomic(d) ** mult
        return out * self.remainder

    def is_unit_remainder(self) -> bool:
        return self.remainder.is_unit_constant()


_CYCLO_AT_CACHE: dict[tuple[int, int], int] = {}


def _cyclotomic_at(d: int, s: int) -> int:
    """Phi_d(s) for an integer point s >= 2, via prod (s**e - 1)**mu(d/e)."""
    try:
        return _CYCLO_AT_CACHE[(d, s)]
    except KeyError:
        pass
    num, den = 1, 1
    m = d
    primes = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        primes.append(m)
    for mask in range(1 << len(primes)):
        q = 1
        bits = 0
        mm = mask
        i = 0
        while mm:
            if mm & 1:
                q *= primes[i]
                bits += 1
            mm >>= 1
            i += 1
        val = s ** (d // q) - 1
        if bits % 2 == 0:
            num *= val
        else:
            den *= val
    out = num // den
    _CYCLO_AT_CACHE[(d, s)] = out
    return out


def _cyclo_divisors_once(p: list[int], candidates: list[int] | None) -> list[int]:
    """Ascending list of indices d with Phi_d dividing the dense polynomial p
    (p[0] != 0), each reported once regardless of multiplicity.

    Candidates are pre-filtered by divisibility of integer-point values,
    then confirmed exactly on the fold of p modulo t**d - 1.
    """
    deg = len(p) - 1
    phis = phi_table(cyclo_index_limit(deg)) if candidates is None else phi_table(max(candidates))
    if candidates is None:
        candidates = range(1, cyclo_index_limit(deg) + 1)
    points = []
    for s in (2, 3, 5, 7, 11):
        v = _dense.eval_int(p, s)
        if v:
            points.append((s, abs(v)))
        if len(points) == 2:
            break
    out = []
    for d in candidates:
        if phis[d] > deg:
            continue
        ok = True
        for s, v in points:
            w = _cyclotomic_at(d, s)
            if w > 1 and v % w:
                ok = False
                break
        if not ok:
            continue
        folded = _dense.trim(_dense.fold(p, d))
        _, phi_d = cyclotomic(d).dense()
        if _dense.divides(phi_d, folded):
            out.append(d)
    return out


def _remove_cyclotomics(p: list[int], ds: list[int]) -> list[int]:
    """Exact quotient of p by prod(Phi_d for d in ds), assembled from
    binomial blocks t**L - 1 so every pass is linear in the degree."""
    closure = set()
    for d in ds:
        for e in range(1, int(math.isqrt(d)) + 1):
            if d % e == 0:
                closure.add(e)
                closure.add(d // e)
    wanted = set(ds)
    exponent: dict[int, int] = {}
    for ell in sorted(closure, reverse=True):
        e = (1 if ell in wanted else 0) - sum(
            exponent[m] for m in closure if m > ell and m % ell == 0
        )
        exponent[ell] = e
    for ell, e in exponent.items():
        for _ in range(-e):
            p = _dense.mul_binomial(p, ell)
    for ell, e in exponent.items():
        for _ in range(e):
            p = _dense.divexact_binomial(p, ell)
    return p


def cyclo_factor(f: LaurentPoly) -> CycloFactorization:
    """Extract the monomial shift and every cyclotomic factor of f.

    Candidate indices d run in ascending order over all d with
    phi(d) <= degree of the shifted polynomial; division is repeated until
    the full multiplicity of each Phi_d is removed.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    shift, p = f.dense()
    found: dict[int, int] = {}
    candidates: list[int] | None = None
    while len(p) > 1:
        ds = _cyclo_divisors_once(p, candidates)
        if not ds:
            break
        p = _remove_cyclotomics(p, ds)
        for d in ds:
            found[d] = found.get(d, 0) + 1
        candidates = ds
    return CycloFactorization(
        shift=shift,
        factors=tuple(sorted(found.items())),
        remainder=LaurentPoly.from_dense(0, p),
    )


# ---------------------------------------------------------------------------
# Bivariate Laurent polynomials
# ---------------------------------------------------------------------------


class BiLaurentPoly:
    """A Laurent polynomial in two variables x, y over the integers.

    Stored as a map (x-exponent, y-exponent) -> coefficient, zeros never
    kept.  Substitution maps are ring homomorphisms; immutable like
    LaurentPoly.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[(int(e[0]), int(e[1]))] = v
        self._c = c

    @staticmethod
    def zero() -> BiLaurentPoly:
        return BiLaurentPoly()

    @staticmethod
    def one() -> BiLaurentPoly:
        return BiLaurentPoly({(0, 0): 1})

    @staticmethod
    def term(coeff: int, xe: int = 0, ye: int = 0) -> BiLaurentPoly:
        return BiLaurentPoly({(xe, ye): coeff})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def coefficient(self, xe: int, ye: int) -> int:
        return self._c.get((xe, ye), 0)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({(0, 0): other} if other else {})
        if isinstance(other, BiLaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __neg__(self) -> BiLaurentPoly:
        return BiLaurentPoly({e: -c for e, c in self._c.items()})

    def __add__(self, other: int | BiLaurentPoly) -> BiLaurentPoly:
        if isinstance(other, int):
            other = BiLaurentPoly.term(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return BiLaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other: int | BiLaurentPoly) -> BiLaurentPoly:
        if isinstance(other, int):
            other = BiLaurentPoly.term(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) - c
        return BiLaurentPoly(out)

    def __rsub__(self, other: int) -> BiLaurentPoly:
        return BiLaurentPoly.term(other) - self

    def __mul__(self, other: int | BiLaurentPoly) -> BiLaurentPoly:
        if isinstance(other, int):
            return BiLaurentPoly({e: c * other for e, c in self._c.items()})
        out: dict[tuple[int, int], int] = {}
        a, b = self._c, other._c
        if len(b) < len(a):
            a, b = b, a
        for (xa, ya), ca in a.items():
            for (xb, yb), cb in b.items():
                e = (xa + xb, ya + yb)
                out[e] = out.get(e, 0) + ca * cb
        return BiLaurentPoly(out)

    __rmul__ = __mul__

    def substitute(self, x_sign: int = 1, x_pow: int = 1,
                   y_sign: int = 1, y_pow: int = 1) -> BiLaurentPoly:
        """Apply x -> x_sign * x**x_pow and y -> y_sign * y**y_pow."""
        if x_sign not in (1, -1) or y_sign not in (1, -1):
            raise ValueError("signs must be +1 or -1")
        if x_pow < 1 or y_pow < 1:
            raise ValueError("substitution powers must be >= 1")
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self._c.items():
            if (x_sign < 0 and i % 2) != (y_sign < 0 and j % 2):
                c = -c
            out[(i * x_pow, j * y_pow)] = c
        return BiLaurentPoly(out)

    def swap_variables(self) -> BiLaurentPoly:
        return BiLaurentPoly({(j, i): c for (i, j), c in self._c.items()})

    def restrict(self, a: int, b: int) -> LaurentPoly:
        """Substitute x -> t**a, y -> t**b."""
        out: dict[int, int] = {}
        for (i, j), c in self._c.items():
            e = a * i + b * j
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def coefficient_sum(self) -> int:
        """The value at x = y = 1."""
        return sum(self._c.values())

    def monomial_split(self) -> tuple[int, int, BiLaurentPoly]:
        """(i0, j0, h0) with self = x**i0 * y**j0 * h0 and h0 having
        minimal x- and y-exponent zero."""
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no monomial split")
        i0 = min(e[0] for e in self._c)
        j0 = min(e[1] for e in self._c)
        return i0, j0, BiLaurentPoly({(i - i0, j - j0): c for (i, j), c in self._c.items()})

    def degree_in(self, var: str) -> int:
        """Degree span in 'x' or 'y' (max exponent minus min exponent)."""
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no degree")
        k = 0 if var == "x" else 1
        exps = [e[k] for e in self._c]
        return max(exps) - min(exps)

    def coefficient_lists(self, eliminate: str) -> list[list[int]]:
        """Dense coefficient lists in the kept variable, indexed by the
        exponent of the eliminated variable.  Exponents must be nonnegative
        (call monomial_split first)."""
        if not self._c:
            return []
        k = 0 if eliminate == "x" else 1
        other = 1 - k
        de = max(e[k] for e in self._c)
        dk = max(e[other] for e in self._c)
        out = [[0] * (dk + 1) for _ in range(de + 1)]
        for e, c in self._c.items():
            out[e[k]][e[other]] = c
        for row in out:
            _dense.trim(row)
        return out

    def to_str(self, x: str = "x", y: str = "y") -> str:
        if not self._c:
            return "0"
        parts = []
        for (i, j) in sorted(self._c, key=lambda e: (-e[1], -e[0])):
            c = self._c[(i, j)]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            atoms = []
            if mag != 1 or (i == 0 and j == 0):
                atoms.append(str(mag))
            if j != 0:
                atoms.append(y if j == 1 else f"{y}^{j}")
            if i != 0:
                atoms.append(x if i == 1 else f"{x}^{i}")
            parts.append((sign, "*".join(atoms)))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"BiLaurentPoly('{self}')"


# ---------------------------------------------------------------------------
# Resultants
# ---------------------------------------------------------------------------


def _bareiss_determinant(m: list[list[list[int]]]) -> list[int]:
    """Fraction-free Bareiss determinant of a matrix of dense Z[x] entries."""
    n = len(m)
    if n == 0:
        return [1]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = m[k][k]
        for i in range(k + 1, n):
            left = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                num = _dense.sub(_dense.mul(pivot, row_i[j]), _dense.mul(left, row_k[j]))
                row_i[j] = _dense.divexact(num, prev) if num else []
            row_i[k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    return [-c for c in det] if sign < 0 else list(det)


def resultant(h: BiLaurentPoly, g: BiLaurentPoly, eliminate: str) -> LaurentPoly:
    """Resultant of h and g with respect to the eliminated variable.

    Monomial prefactors in both variables are stripped first (they only
    contribute x = 0 / y = 0, never roots of unity), then the Sylvester
    determinant is evaluated by fraction-free Bareiss elimination over Z of
    the kept variable.
    """
    if eliminate not in ("x", "y"):
        raise ValueError("eliminate must be 'x' or 'y'")
    if h.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    _, _, h0 = h.monomial_split()
    _, _, g0 = g.monomial_split()
    a = h0.coefficient_lists(eliminate)
    b = g0.coefficient_lists(eliminate)
    da, db = len(a) - 1, len(b) - 1
    if da < 1 or db < 1:
        raise DegenerateDegree(f"input free of {eliminate} after monomial normalization")
    n = da + db
    rows: list[list[list[int]]] = []
    for r in range(db):
        row = [[] for _ in range(n)]
        for i, c in enumerate(a):
            row[r + da - i] = list(c)
        rows.append(row)
    for r in range(da):
        row = [[] for _ in range(n)]
        for i, c in enumerate(b):
            row[r + db - i] = list(c)
        rows.append(row)
    det = _bareiss_determinant(rows)
    return LaurentPoly.from_dense(0, det)


# ---------------------------------------------------------------------------
# Exact arithmetic in Z[z]/(Phi_N)
# ---------------------------------------------------------------------------


class CycloElement:
    """An element of Z[z]/(Phi_N(z)), the ring of integers of the N-th
    cyclotomic field, with z standing for exp(2*pi*i/N).

    The residue is fully reduced, so the zero test is exact: the element is
    zero iff the residue is the zero tuple.
    """

    __slots__ = ("modulus", "residue")

    def __init__(self, modulus: int, coeffs=()):  # coeffs: iterable of int
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "modulus", modulus)
        p = list(coeffs)
        deg = euler_phi(modulus)
        if len(p) >= deg + 1 or modulus == 1:
            _, phi_n = cyclotomic(modulus).dense()
            _, p = _dense.divmod_exact(p, phi_n)
        p = p + [0] * (deg - len(p))
        object.__setattr__(self, "residue", tuple(p[:deg]))

    def __setattr__(self, *args):
        raise AttributeError("CycloElement is immutable")

    @staticmethod
    def from_int(modulus: int, value: int) -> CycloElement:
        return CycloElement(modulus, [value])

    @staticmethod
    def from_laurent(poly: LaurentPoly, modulus: int) -> CycloElement:
        """Evaluate a Laurent polynomial at z (exponents folded mod N)."""
        vec = [0] * modulus
        for e, c in poly.coeffs.items():
            vec[e % modulus] += c
        return CycloElement(modulus, vec)

    def is_zero(self) -> bool:
        return not any(self.residue)

    def is_rational(self) -> bool:
        return not any(self.residue[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.residue[0]

    def _check(self, other: CycloElement):
        if self.modulus != other.modulus:
            raise ValueError("mixed cyclotomic moduli")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational() and self.residue[0] == other
        if isinstance(other, CycloElement):
            return self.modulus == other.modulus and self.residue == other.residue
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.residue))

    def __add__(self, other: CycloElement) -> CycloElement:
        self._check(other)
        return CycloElement(self.modulus,
                            [a + b for a, b in zip(self.residue, other.residue)])

    def __sub__(self, other: CycloElement) -> CycloElement:
        self._check(other)
        return CycloElement(self.modulus,
                            [a - b for a, b in zip(self.residue, other.residue)])

    def __neg__(self) -> CycloElement:
        return CycloElement(self.modulus, [-a for a in self.residue])

    def scale(self, k: int) -> CycloElement:
        return CycloElement(self.modulus, [k * a for a in self.residue])

    def __mul__(self, other: CycloElement) -> CycloElement:
        self._check(other)
        prod = _dense.mul(list(self.residue), list(other.residue))
        return CycloElement(self.modulus, prod)

    def conjugate(self) -> CycloElement:
        """The image under z -> 1/z (complex conjugation)."""
        n = self.modulus
        vec = [0] * n
        for j, c in enumerate(self.residue):
            if c:
                vec[(n - j) % n] += c
        return CycloElement(n, vec)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __repr__(self):
        return f"CycloElement(N={self.modulus}, {list(self.residue)})"


def eval_at_roots(h: BiLaurentPoly, modulus: int, a: int, b: int) -> CycloElement:
    """Exact value of h at x = z**a, y = z**b inside Z[z]/(Phi_N)."""
    vec = [0] * modulus
    for (i, j), c in h.coeffs.items():
        vec[(a * i + b * j) % modulus] += c
    return CycloElement(modulus, vec)


def cos_minimal_poly(n: int) -> tuple[int, ...]:
    """Dense coefficients of the minimal polynomial of 2*cos(2*pi/n).

    For n >= 3 it is extracted from the palindromic Phi_n via the basis
    q_j(s) = z**j + z**-j with s = z + 1/z; monic of degree phi(n)/2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (-2, 1)
    if n == 2:
        return (2, 1)
    _, a = cyclotomic(n).dense()
    k = (len(a) - 1) // 2
    out = [0] * (k + 1)
    out[0] = a[k]
    q_prev = [2]
    q = [0, 1]
    for j in range(1, k + 1):
        for i, c in enumerate(q):
            out[i] += a[k + j] * c
        q_prev, q = q, _dense.sub([0] + q, q_prev)
    return tuple(out)
