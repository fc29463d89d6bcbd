"""Truncated power series over a finite field, and the sparse series
spanned by q-power monomials that act on them by composition.

A TruncSeries of precision N is a series known exactly through degree N.
Every operation states the precision of its result; identity checks
compare two series through the smaller of their precisions. Results in
characteristic p follow the usual rules: (X^p)' = 0, and raising a series
to the p-th power is the coefficient-wise Frobenius with exponents
multiplied by p.

An AdditiveSeries holds terms a_i X^(q^i) sparsely, since even at high
precision such a series has only a handful of terms. Those with leading
term X form a group under composition; inverses are computed coefficient
by coefficient and stay inside the group.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .digits import PrimePower, is_critical, lucas_binom
from .finite_field import FieldElement, FieldSpec


# ---------------------------------------------------------------------------
# Dense truncated series
# ---------------------------------------------------------------------------

class TruncSeries:
    """Power series over F_{p^n} known exactly through degree prec."""

    __slots__ = ("spec", "prec", "coeffs")

    def __init__(self, spec: FieldSpec, prec: int, coeffs: Sequence[FieldElement]):
        if prec < 0:
            raise ValueError("precision must be nonnegative")
        coeffs = tuple(coeffs)
        if len(coeffs) != prec + 1:
            raise ValueError(f"expected {prec + 1} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if c.spec is not spec and c.spec != spec:
                raise ValueError("coefficient from a different field")
        self.spec = spec
        self.prec = prec
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec, prec: int) -> TruncSeries:
        return cls(spec, prec, (spec.zero(),) * (prec + 1))

    @classmethod
    def one(cls, spec: FieldSpec, prec: int) -> TruncSeries:
        return cls.monomial(spec, prec, 0, spec.one())

    @classmethod
    def x(cls, spec: FieldSpec, prec: int) -> TruncSeries:
        return cls.monomial(spec, prec, 1, spec.one())

    @classmethod
    def monomial(cls, spec: FieldSpec, prec: int, k: int,
                 coeff: FieldElement) -> TruncSeries:
        if k < 0 or k > prec:
            raise ValueError(f"exponent {k} outside [0, {prec}]")
        cs = [spec.zero()] * (prec + 1)
        cs[k] = coeff
        return cls(spec, prec, cs)

    @classmethod
    def from_scalars(cls, spec: FieldSpec, values: Sequence[int]) -> TruncSeries:
        """Series with integer coefficients reduced into the prime field."""
        return cls(spec, len(values) - 1, [spec.scalar(v) for v in values])

    # -- accessors ----------------------------------------------------------

    def coefficient(self, i: int) -> FieldElement:
        if i < 0 or i > self.prec:
            raise ValueError(f"coefficient {i} beyond precision {self.prec}")
        return self.coeffs[i]

    def constant_term(self) -> FieldElement:
        return self.coeffs[0]

    def is_unit(self) -> bool:
        return bool(self.coeffs[0])

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def truncate(self, prec: int) -> TruncSeries:
        if prec > self.prec:
            raise ValueError(f"cannot extend precision {self.prec} to {prec}")
        return TruncSeries(self.spec, prec, self.coeffs[:prec + 1])

    def agrees(self, other: TruncSeries) -> bool:
        """Equality through the smaller of the two precisions."""
        if self.spec != other.spec:
            return False
        n = min(self.prec, other.prec)
        return self.coeffs[:n + 1] == other.coeffs[:n + 1]

    # -- ring operations ----------------------------------------------------

    def _binop_prec(self, other: TruncSeries) -> int:
        if self.spec != other.spec:
            raise ValueError("series over different fields")
        return min(self.prec, other.prec)

    def __add__(self, other: TruncSeries) -> TruncSeries:
        n = self._binop_prec(other)
        return TruncSeries(self.spec, n,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)][:n + 1])

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        n = self._binop_prec(other)
        return TruncSeries(self.spec, n,
                           [a - b for a, b in zip(self.coeffs, other.coeffs)][:n + 1])

    def __neg__(self) -> TruncSeries:
        return TruncSeries(self.spec, self.prec, [-a for a in self.coeffs])

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        """Cauchy product at the smaller precision."""
        n = self._binop_prec(other)
        spec = self.spec
        if spec.interned:
            add, mul, elems = spec._add, spec._mul, spec._elements
            a = [c.idx for c in self.coeffs[:n + 1]]
            b = [c.idx for c in other.coeffs[:n + 1]]
            na = sum(1 for v in a if v)
            nb = sum(1 for v in b if v)
            if na > nb:
                a, b = b, a
            out = [0] * (n + 1)
            for i, ai in enumerate(a):
                if ai:
                    row = mul[ai]
                    for j in range(n - i + 1):
                        bj = b[j]
                        if bj:
                            k = i + j
                            out[k] = add[out[k]][row[bj]]
            return TruncSeries(spec, n, [elems[v] for v in out])
        zero = spec.zero()
        out = [zero] * (n + 1)
        for i, ai in enumerate(self.coeffs[:n + 1]):
            if ai:
                for j in range(n - i + 1):
                    bj = other.coeffs[j]
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
        return TruncSeries(spec, n, out)

    def __pow__(self, e: int) -> TruncSeries:
        if e < 0:
            raise ValueError("negative powers: use inverse_mult() first")
        result = TruncSeries.one(self.spec, self.prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, alpha: FieldElement) -> TruncSeries:
        """Multiply every coefficient by alpha."""
        return TruncSeries(self.spec, self.prec, [alpha * c for c in self.coeffs])

    def scale_arg(self, alpha: FieldElement) -> TruncSeries:
        """Substitute alpha*X for X: coefficient a_i becomes a_i * alpha^i."""
        out = []
        power = self.spec.one()
        for c in self.coeffs:
            out.append(c * power)
            power = power * alpha
        return TruncSeries(self.spec, self.prec, out)

    def inverse_mult(self) -> TruncSeries:
        """Multiplicative inverse of a unit, at the same precision."""
        if not self.coeffs[0]:
            raise ValueError("series with zero constant term has no reciprocal")
        spec, n = self.spec, self.prec
        if spec.interned:
            add, mul, neg, elems = spec._add, spec._mul, spec._neg, spec._elements
            a = [c.idx for c in self.coeffs]
            inv0 = spec._inv[a[0]]
            sup = [k for k in range(1, n + 1) if a[k]]
            out = [0] * (n + 1)
            out[0] = inv0
            row0 = mul[inv0]
            for m in range(1, n + 1):
                s = 0
                for k in sup:
                    if k > m:
                        break
                    bj = out[m - k]
                    if bj:
                        s = add[s][mul[a[k]][bj]]
                out[m] = row0[neg[s]]
            return TruncSeries(spec, n, [elems[v] for v in out])
        inv0 = self.coeffs[0].inverse()
        zero = spec.zero()
        out = [inv0] + [zero] * n
        for m in range(1, n + 1):
            s = zero
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    s = s + self.coeffs[k] * out[m - k]
            out[m] = -(inv0 * s)
        return TruncSeries(spec, n, out)

    def derivative(self) -> TruncSeries:
        """Formal derivative; precision drops by one. In characteristic p
        the coefficients at multiples of p are annihilated."""
        if self.prec == 0:
            raise ValueError("cannot differentiate a degree-0 truncation")
        spec = self.spec
        out = [spec.scalar(i) * self.coeffs[i] for i in range(1, self.prec + 1)]
        return TruncSeries(spec, self.prec - 1, out)

    def compose(self, inner: TruncSeries) -> TruncSeries:
        """Composition self(inner); requires inner(0) = 0.

        Exact through min(prec) because the inner series has positive
        valuation. Evaluated by Horner's rule, stopping at the last
        coefficient of self that can still reach the target precision.
        """
        if self.spec != inner.spec:
            raise ValueError("series over different fields")
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        spec = self.spec
        n = min(self.prec, inner.prec)
        v = inner.valuation()
        if v is None:
            return TruncSeries.monomial(spec, n, 0, self.coeffs[0])
        top = min(self.prec, n // v)
        if spec.interned:
            add, mul, elems = spec._add, spec._mul, spec._elements
            a = [c.idx for c in self.coeffs]
            g = [c.idx for c in inner.coeffs[:n + 1]]
            gn = [(j, gj) for j, gj in enumerate(g) if gj]
            res = [0] * (n + 1)
            res[0] = a[top]
            for i in range(top - 1, -1, -1):
                new = [0] * (n + 1)
                for j, gj in gn:
                    row = mul[gj]
                    for jr in range(n - j + 1):
                        rv = res[jr]
                        if rv:
                            k = j + jr
                            new[k] = add[new[k]][row[rv]]
                new[0] = add[new[0]][a[i]]
                res = new
            return TruncSeries(spec, n, [elems[idx] for idx in res])
        zero = spec.zero()
        gn = [(j, gj) for j, gj in enumerate(inner.coeffs[:n + 1]) if gj]
        res = [zero] * (n + 1)
        res[0] = self.coeffs[top]
        for i in range(top - 1, -1, -1):
            new = [zero] * (n + 1)
            for j, gj in gn:
                for jr in range(n - j + 1):
                    rv = res[jr]
                    if rv:
                        new[j + jr] = new[j + jr] + gj * rv
            new[0] = new[0] + self.coeffs[i]
            res = new
        return TruncSeries(spec, n, res)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"field": self.spec.to_json(), "prec": self.prec,
                "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> TruncSeries:
        spec = FieldSpec.from_json(data["field"])
        coeffs = [spec.element(c) for c in data["coeffs"]]
        return cls(spec, int(data["prec"]), coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncSeries) and self.spec == other.spec
                and self.prec == other.prec and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.spec, self.prec, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
                continue
            xs = "X" if i == 1 else f"X^{i}"
            if cs == "1":
                parts.append(xs)
            elif "+" in cs:
                parts.append(f"({cs})*{xs}")
            else:
                parts.append(f"{cs}*{xs}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(X^{self.prec + 1})"

    def __repr__(self) -> str:
        return f"<series {self} over F_{self.spec.order}>"


# ---------------------------------------------------------------------------
# Logarithmic derivative and its section
# ---------------------------------------------------------------------------

def log_deriv(f: TruncSeries) -> TruncSeries:
    """X * f' / f for a unit series, at the same precision.

    A group homomorphism from units to series with zero constant term;
    its kernel is exactly the units supported on multiples of p.
    """
    if not f.coeffs[0]:
        raise ValueError("logarithmic derivative requires a unit series")
    spec, n = f.spec, f.prec
    # Solve X f' = f * t coefficient by coefficient: the degree-m equation
    # reads m*a_m = sum_{j<m} a_j t_(m-j).
    if spec.interned:
        add, mul, neg, elems = spec._add, spec._mul, spec._neg, spec._elements
        p = spec.p
        a = [c.idx for c in f.coeffs]
        inv0 = spec._inv[a[0]]
        sup = [k for k in range(1, n + 1) if a[k]]
        t = [0] * (n + 1)
        row0 = mul[inv0]
        scalars = [spec.scalar(i).idx for i in range(p)]
        for m in range(1, n + 1):
            s = mul[scalars[m % p]][a[m]]
            for k in sup:
                if k >= m:
                    break
                tv = t[m - k]
                if tv:
                    s = add[s][neg[mul[a[k]][tv]]]
            t[m] = row0[s]
        return TruncSeries(spec, n, [elems[v] for v in t])
    zero = spec.zero()
    inv0 = f.coeffs[0].inverse()
    t = [zero] * (n + 1)
    for m in range(1, n + 1):
        s = spec.scalar(m) * f.coeffs[m]
        for k in range(1, m):
            if f.coeffs[k]:
                s = s - f.coeffs[k] * t[m - k]
        t[m] = inv0 * s
    return TruncSeries(spec, n, t)


def solve_log_deriv(t: TruncSeries) -> TruncSeries:
    """A unit f with log_deriv(f) = t, normalized with f(0) = 1.

    The input must have zero constant term and satisfy the Frobenius
    constraint a_(p*i) = a_i^p at every index; otherwise it is not a
    logarithmic derivative and a ValueError is raised. Coefficients of f
    at multiples of p are not determined by t; this section sets them to
    zero, fixing one preimage out of the coset under units in X^p."""
    spec, n = t.spec, t.prec
    p = spec.p
    if t.coeffs[0]:
        raise ValueError("a logarithmic derivative has zero constant term")
    for i in range(1, n // p + 1):
        if t.coeffs[p * i] != t.coeffs[i] ** p:
            raise ValueError(
                f"coefficient constraint a_(p*i) = a_i^p fails at i={i}; "
                "series is not a logarithmic derivative")
    zero = spec.zero()
    f = [spec.one()] + [zero] * n
    for m in range(1, n + 1):
        s = zero
        for j in range(m):
            if f[j]:
                tv = t.coeffs[m - j]
                if tv:
                    s = s + f[j] * tv
        if m % p:
            f[m] = spec.scalar(m).inverse() * s
        else:
            # The degree-m equation degenerates to 0 = s; with the
            # constraint verified above this always holds.
            if s:
                raise AssertionError(
                    f"inconsistent section at degree {m}; this is a bug")
            f[m] = zero
    return TruncSeries(spec, n, f)


# ---------------------------------------------------------------------------
# Critical projection
# ---------------------------------------------------------------------------

_CRITICAL_CACHE: dict = {}


def _critical_set(pq: PrimePower, bound: int) -> frozenset[int]:
    key = (pq.p, pq.lam, bound)
    got = _CRITICAL_CACHE.get(key)
    if got is None:
        got = frozenset(k for k in range(1, bound + 1) if is_critical(k, pq))
        _CRITICAL_CACHE[key] = got
    return got


def critical_projection(t: TruncSeries, pq: PrimePower) -> TruncSeries:
    """Keep only coefficients at critical exponents, shifted up one degree:
    sum a_k X^k maps to X * sum over critical k of a_k X^k. Input must have
    zero constant term; output precision is one higher."""
    if t.coeffs[0]:
        raise ValueError("projection requires zero constant term")
    spec, n = t.spec, t.prec
    crit = _critical_set(pq, n)
    out = [spec.zero()] * (n + 2)
    for k in range(1, n + 1):
        c = t.coeffs[k]
        if c and k in crit:
            out[k + 1] = c
    return TruncSeries(spec, n + 1, out)


# ---------------------------------------------------------------------------
# Sparse q-power series and their composition action
# ---------------------------------------------------------------------------

class AdditiveSeries:
    """Series sum a_i X^(q^i), stored sparsely as index -> coefficient.

    These form a (noncommutative) ring under addition and composition and
    act on ordinary series by substitution. Terms beyond the precision
    bound are dropped."""

    __slots__ = ("spec", "pq", "prec", "terms")

    def __init__(self, spec: FieldSpec, pq: PrimePower, prec: int,
                 terms: dict[int, FieldElement]):
        if pq.p != spec.p:
            raise ValueError("prime power and field have different characteristics")
        if prec < 1:
            raise ValueError("precision must be at least 1")
        clean = {}
        for i, c in terms.items():
            if c.spec != spec:
                raise ValueError("coefficient from a different field")
            if i < 0:
                raise ValueError("negative term index")
            if pq.q ** i > prec:
                raise ValueError(
                    f"term X^(q^{i}) exceeds precision bound {prec}")
            if c:
                clean[i] = c
        self.spec = spec
        self.pq = pq
        self.prec = prec
        self.terms = clean

    @classmethod
    def identity(cls, spec: FieldSpec, pq: PrimePower, prec: int) -> AdditiveSeries:
        return cls(spec, pq, prec, {0: spec.one()})

    @classmethod
    def generator(cls, spec: FieldSpec, pq: PrimePower, prec: int,
                  beta: FieldElement, ell: int) -> AdditiveSeries:
        """X + beta * X^(q^ell)."""
        if ell < 1:
            raise ValueError("generator index must be >= 1")
        return cls(spec, pq, prec, {0: spec.one(), ell: beta})

    @property
    def is_gamma(self) -> bool:
        """Leading term X, i.e. a member of the composition group."""
        return self.terms.get(0) == self.spec.one()

    def coefficient(self, i: int) -> FieldElement:
        return self.terms.get(i, self.spec.zero())

    def max_index(self) -> int:
        q, i = self.pq.q, 0
        while q ** (i + 1) <= self.prec:
            i += 1
        return i

    def compose(self, other: AdditiveSeries) -> AdditiveSeries:
        """Ring product: substitution self(other(X))."""
        if self.spec != other.spec or self.pq != other.pq:
            raise ValueError("mismatched additive series")
        prec = min(self.prec, other.prec)
        lam = self.pq.lam
        out: dict[int, FieldElement] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                m = i + j
                if self.pq.q ** m > prec:
                    continue
                term = a * b.frobenius(lam * i)
                cur = out.get(m)
                out[m] = term if cur is None else cur + term
        return AdditiveSeries(self.spec, self.pq, prec, out)

    def inverse(self) -> AdditiveSeries:
        """Compositional inverse of a series with leading term X.

        Coefficients satisfy b_m = -sum_{j<m} b_j * a_(m-j)^(q^j), so the
        inverse again has q-power support only."""
        if not self.is_gamma:
            raise ValueError("compositional inverse requires leading term X")
        spec, pq = self.spec, self.pq
        lam = pq.lam
        b: dict[int, FieldElement] = {0: spec.one()}
        for m in range(1, self.max_index() + 1):
            s = spec.zero()
            for j, bj in b.items():
                a = self.terms.get(m - j)
                if a is not None and j < m:
                    s = s + bj * a.frobenius(lam * j)
            if s:
                b[m] = -s
        return AdditiveSeries(spec, pq, self.prec, b)

    def apply_to(self, g: TruncSeries) -> TruncSeries:
        """Substitution self(g) for g with zero constant term, computed
        termwise: g^(q^i) is the coefficient-wise q^i Frobenius with all
        exponents multiplied by q^i."""
        if self.spec != g.spec:
            raise ValueError("series over different fields")
        if g.coeffs[0]:
            raise ValueError("action requires zero constant term")
        spec, pq = self.spec, self.pq
        n = min(self.prec, g.prec)
        lam = pq.lam
        out = [spec.zero()] * (n + 1)
        for i, a in self.terms.items():
            qi = pq.q ** i
            if qi > n:
                continue
            for k in range(1, n // qi + 1):
                c = g.coeffs[k]
                if c:
                    idx = k * qi
                    out[idx] = out[idx] + a * c.frobenius(lam * i)
        return TruncSeries(spec, n, out)

    def as_trunc(self, prec: int | None = None) -> TruncSeries:
        if prec is None:
            prec = self.prec
        if prec > self.prec:
            raise ValueError(f"cannot extend precision {self.prec} to {prec}")
        spec = self.spec
        out = [spec.zero()] * (prec + 1)
        for i, a in self.terms.items():
            e = self.pq.q ** i
            if e <= prec:
                out[e] = out[e] + a
        return TruncSeries(spec, prec, out)

    def to_json(self) -> dict:
        return {"field": self.spec.to_json(), "q": self.pq.to_json(),
                "prec": self.prec,
                "terms": {str(i): c.to_json() for i, c in sorted(self.terms.items())}}

    @classmethod
    def from_json(cls, data: dict) -> AdditiveSeries:
        spec = FieldSpec.from_json(data["field"])
        pq = PrimePower.from_json(data["q"])
        terms = {int(i): spec.element(c) for i, c in data["terms"].items()}
        return cls(spec, pq, int(data["prec"]), terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AdditiveSeries) and self.spec == other.spec
                and self.pq == other.pq and self.prec == other.prec
                and self.terms == other.terms)

    def __repr__(self) -> str:
        q = self.pq.q
        parts = []
        for i, c in sorted(self.terms.items()):
            xs = "X" if i == 0 else f"X^{q}^{i}" if i == 1 else f"X^{q}^{i}"
            cs = str(c)
            parts.append(xs if cs == "1" else f"({cs})*{xs}")
        return "<additive " + (" + ".join(parts) if parts else "0") + ">"


# ---------------------------------------------------------------------------
# Named series
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _artin_hasse_residues(p: int, prec: int) -> tuple[int, ...]:
    # exp(sum X^(p^i)/p^i) over the rationals, via the recursion
    # m*e_m = sum over p^i <= m of e_(m - p^i), then reduced mod p.
    # Every coefficient is p-integral; that is asserted, not assumed.
    e = [Fraction(1)]
    for m in range(1, prec + 1):
        s = Fraction(0)
        pi = 1
        while pi <= m:
            s += e[m - pi]
            pi *= p
        e.append(s / m)
    out = []
    for m, c in enumerate(e):
        if c.denominator % p == 0:
            raise AssertionError(
                f"coefficient {m} of the Artin-Hasse series is not {p}-integral")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return tuple(out)


def artin_hasse(p: int, prec: int, spec: FieldSpec) -> TruncSeries:
    """Reduction mod p of exp(sum_i X^(p^i)/p^i), mapped into the field.

    A unit with constant term 1 whose logarithmic derivative is exactly
    sum_i X^(p^i)."""
    if spec.p != p:
        raise ValueError(f"field has characteristic {spec.p}, not {p}")
    residues = _artin_hasse_residues(p, prec)
    return TruncSeries(spec, prec, [spec.scalar(r) for r in residues])


def orbit_series(k: int, alpha: FieldElement, prec: int) -> TruncSeries:
    """sum_i alpha^(p^i) X^(k*p^i) for k coprime to p: the Frobenius orbit
    of the monomial alpha*X^k, and the normalized logarithmic derivative of
    the Artin-Hasse series evaluated at alpha*X^k."""
    spec = alpha.spec
    p = spec.p
    if k < 1 or k % p == 0:
        raise ValueError(f"exponent {k} must be positive and coprime to {p}")
    out = [spec.zero()] * (prec + 1)
    i = 0
    while k * p ** i <= prec:
        out[k * p ** i] = alpha.frobenius(i)
        i += 1
    return TruncSeries(spec, prec, out)


def twisted_orbit_series(k: int, alpha: FieldElement, ell: int,
                         beta: FieldElement, pq: PrimePower,
                         prec: int) -> TruncSeries:
    """Closed form of the orbit series after substituting X + beta*X^(q^ell):

        orbit_series(k, alpha) +
        sum_{i>=0} sum_{j>=1} binom(p^i*k - 1, j) alpha^(p^i) beta^j
                              X^(p^i*k + j*(q^ell - 1))

    with the binomials read mod p via Lucas."""
    spec = alpha.spec
    p, q = pq.p, pq.q
    if k < 1 or k % p == 0:
        raise ValueError(f"exponent {k} must be positive and coprime to {p}")
    if ell < 1:
        raise ValueError("twist index must be >= 1")
    out = list(orbit_series(k, alpha, prec).coeffs)
    step = q ** ell - 1
    i = 0
    while k * p ** i <= prec:
        base = k * p ** i
        top = base - 1
        afrob = alpha.frobenius(i)
        bpow = beta
        j = 1
        while base + j * step <= prec:
            b = lucas_binom(top, j, p)
            if b:
                idx = base + j * step
                out[idx] = out[idx] + spec.scalar(b) * afrob * bpow
            bpow = bpow * beta
            j += 1
        i += 1
    return TruncSeries(spec, prec, out)


def critical_projection_formula(k: int, alpha: FieldElement, ell: int,
                                beta: FieldElement, pq: PrimePower,
                                prec: int) -> TruncSeries:
    """Predicted critical projection of the twisted orbit series:

        alpha X^(k+1) + sum over positive multiples f of ell of
        (-1)^(f/ell) alpha^(q^f) beta^((q^f-1)/(q^ell-1)) X^(q^f (k+1))

    when k is critical, and 0 otherwise."""
    spec = alpha.spec
    p, lam, q = pq.p, pq.lam, pq.q
    if k < 1 or k % p == 0:
        raise ValueError(f"exponent {k} must be positive and coprime to {p}")
    out = [spec.zero()] * (prec + 1)
    if not is_critical(k, pq):
        return TruncSeries(spec, prec, out)
    if k + 1 <= prec:
        out[k + 1] = alpha
    minus_one = spec.scalar(p - 1)
    f = ell
    while q ** f * (k + 1) <= prec:
        sign = spec.one() if (f // ell) % 2 == 0 else minus_one
        coeff = sign * alpha.frobenius(lam * f) * beta ** ((q ** f - 1) // (q ** ell - 1))
        out[q ** f * (k + 1)] = coeff
        f += ell
    return TruncSeries(spec, prec, out)


# ---------------------------------------------------------------------------
# Seeded pseudo-random series
# ---------------------------------------------------------------------------
# The generator is Python's Mersenne Twister, fixed and documented, so a
# given seed reproduces the same stream everywhere. Verification never
# depends on a particular stream; a different generator only means
# different random instances.

def _random_unit(spec: FieldSpec, prec: int, rng: random.Random) -> TruncSeries:
    coeffs = [spec.random_nonzero(rng)]
    coeffs.extend(spec.random_element(rng) for _ in range(prec))
    return TruncSeries(spec, prec, coeffs)


def random_unit(spec: FieldSpec, prec: int, seed: int) -> TruncSeries:
    """Reproducible pseudo-random unit series."""
    return _random_unit(spec, prec, random.Random(seed))


def _random_gamma(pq: PrimePower, spec: FieldSpec, prec: int,
                  rng: random.Random, factors: int,
                  pool: Sequence[FieldElement] | None = None) -> AdditiveSeries:
    gamma = AdditiveSeries.identity(spec, pq, prec)
    ell_max = 0
    while pq.q ** (ell_max + 1) <= prec:
        ell_max += 1
    if ell_max < 1:
        return gamma
    for _ in range(factors):
        ell = rng.randrange(1, ell_max + 1)
        beta = rng.choice(pool) if pool is not None else spec.random_nonzero(rng)
        gamma = gamma.compose(AdditiveSeries.generator(spec, pq, prec, beta, ell))
    return gamma


def random_gamma(pq: PrimePower, spec: FieldSpec, prec: int, seed: int,
                 factors: int) -> AdditiveSeries:
    """Reproducible composition of `factors` random series X + beta*X^(q^ell)
    with q^ell within the precision bound. Zero factors gives X."""
    return _random_gamma(pq, spec, prec, random.Random(seed), factors)
