"""Exact arithmetic in finite fields F_{p^n} with a fixed polynomial basis.

A field is described by a FieldSpec: characteristic p, extension degree n,
and a monic irreducible modulus over F_p. Elements are coordinate vectors
in the power basis 1, t, ..., t^(n-1), where t is a root of the modulus.

Specs and elements are immutable, so everything here is safe to share
across threads. Small fields (at most 128 elements) precompute full
operation tables and intern their elements, which keeps coefficient
arithmetic in the series layer cheap.
"""

from __future__ import annotations

from typing import Iterator, Sequence

# Fields with at most this many elements get full add/mul/inv tables and
# interned element objects; larger fields fall back to polynomial arithmetic.
_TABLE_LIMIT = 128

_SPEC_CACHE: dict = {}


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Polynomials over F_p, as ascending coefficient lists.
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_rem(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo a monic polynomial, trimmed."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            base = i - dm
            for j in range(dm):
                if mod[j]:
                    a[base + j] = (a[base + j] - c * mod[j]) % p
    return _trim(a[:dm])


def _poly_rem_any(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder modulo an arbitrary nonzero polynomial."""
    lead_inv = pow(b[-1], -1, p)
    monic = [(c * lead_inv) % p for c in b]
    return _poly_rem(a, monic, p)


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem_any(a, b, p)
    return a


def _poly_powmod(a: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_rem(a, mod, p)
    while e:
        if e & 1:
            result = _poly_rem(_poly_mul(result, base, p), mod, p)
        base = _poly_rem(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Deterministic irreducibility test for a monic polynomial over F_p.

    Checks x^(p^n) = x mod f together with gcd(x^(p^(n/r)) - x, f) = 1 for
    every prime r dividing n. Exact, and fast enough for degrees up to 16.
    """
    n = len(mod) - 1
    if n == 1:
        return True
    x = [0, 1]
    iterates = {}
    h = x
    for k in range(1, n + 1):
        h = _poly_powmod(h, p, mod, p)
        iterates[k] = h
    if iterates[n] != x:
        return False
    r = 2
    m = n
    while r * r <= m:
        if m % r == 0:
            diff = list(iterates[n // r])
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % p
            if len(_poly_gcd(diff, mod, p)) != 1:
                return False
            while m % r == 0:
                m //= r
        r += 1
    if m > 1:
        diff = list(iterates[n // m])
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(diff, mod, p)) != 1:
            return False
    return True


def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lowest monic irreducible of degree n over F_p.

    Candidates x^n + c are enumerated in increasing order of the integer
    value of c in base p, so the choice is deterministic and serialized
    field descriptions round-trip.
    """
    for m in range(p ** n):
        cand = []
        v = m
        for _ in range(n):
            v, d = divmod(v, p)
            cand.append(d)
        cand.append(1)
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible of degree {n} over F_{p}")


# ---------------------------------------------------------------------------
# Field specification and elements
# ---------------------------------------------------------------------------

class FieldSpec:
    """Immutable description of F_{p^n} = F_p[t]/(modulus)."""

    __slots__ = ("p", "n", "modulus", "order", "interned",
                 "_elements", "_add", "_mul", "_neg", "_inv", "_frob1")

    def __init__(self, p: int, n: int, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p must be prime, got {p!r}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n!r}")
        if modulus is None:
            modulus = default_modulus(p, n)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != n + 1:
                raise ValueError(
                    f"modulus must have {n + 1} coefficients, got {len(modulus)}")
            if any(c < 0 or c >= p for c in modulus):
                raise ValueError("modulus coefficients must lie in [0, p)")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.n = n
        self.modulus = modulus
        self.order = p ** n
        self.interned = self.order <= _TABLE_LIMIT
        if self.interned:
            self._build_tables()
        else:
            self._elements = None
            self._add = self._mul = self._neg = self._inv = self._frob1 = None

    def _build_tables(self) -> None:
        p, n, order = self.p, self.n, self.order
        coords = []
        for idx in range(order):
            v, cs = idx, []
            for _ in range(n):
                v, d = divmod(v, p)
                cs.append(d)
            coords.append(tuple(cs))
        self._elements = tuple(
            FieldElement(self, cs, idx) for idx, cs in enumerate(coords))
        add = []
        for a in coords:
            row = []
            for b in coords:
                s = 0
                for k in range(n - 1, -1, -1):
                    s = s * p + (a[k] + b[k]) % p
                row.append(s)
            add.append(tuple(row))
        self._add = tuple(add)
        mul = []
        for a in coords:
            row = []
            at = _trim(list(a))
            for b in coords:
                prod = _poly_rem(_poly_mul(at, _trim(list(b)), p), self.modulus, p)
                s = 0
                for k in range(len(prod) - 1, -1, -1):
                    s = s * p + prod[k]
                row.append(s)
            mul.append(tuple(row))
        self._mul = tuple(mul)
        self._neg = tuple(self._add[i].index(0) for i in range(order))
        inv = [0] * order
        for i in range(1, order):
            inv[i] = self._mul[i].index(1)
        self._inv = tuple(inv)
        frob = []
        for i in range(order):
            acc = i
            for _ in range(p - 1):
                acc = self._mul[acc][i]
            frob.append(acc)
        self._frob1 = tuple(frob)

    # -- constructors -------------------------------------------------------

    def element(self, coords: Sequence[int]) -> FieldElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(coords)}")
        if any(c < 0 or c >= self.p for c in coords):
            raise ValueError("coordinates must lie in [0, p)")
        if self.interned:
            idx = 0
            for c in reversed(coords):
                idx = idx * self.p + c
            return self._elements[idx]
        return FieldElement(self, coords, None)

    def from_index(self, idx: int) -> FieldElement:
        """Element whose coordinates are the base-p digits of idx."""
        if idx < 0 or idx >= self.order:
            raise ValueError(f"index {idx} out of range for field of order {self.order}")
        if self.interned:
            return self._elements[idx]
        v, cs = idx, []
        for _ in range(self.n):
            v, d = divmod(v, self.p)
            cs.append(d)
        return FieldElement(self, tuple(cs), None)

    def zero(self) -> FieldElement:
        return self.from_index(0)

    def one(self) -> FieldElement:
        return self.from_index(1)

    def gen(self) -> FieldElement:
        """The basis root t; only meaningful for n >= 2."""
        if self.n < 2:
            raise ValueError("prime field has no basis generator t")
        return self.from_index(self.p)

    def scalar(self, k: int) -> FieldElement:
        """Image of the integer k under Z -> F_p -> F_{p^n}."""
        return self.from_index(k % self.p)

    def elements(self) -> Iterator[FieldElement]:
        if self.order > 4096:
            raise ValueError("refusing to enumerate a field with more than 4096 elements")
        return (self.from_index(i) for i in range(self.order))

    def nonzero_elements(self) -> Iterator[FieldElement]:
        return (self.from_index(i) for i in range(1, self.order))

    def subfield_elements(self, m: int) -> tuple[FieldElement, ...]:
        """All elements of the subfield F_{p^m}, i.e. fixed points of x -> x^(p^m)."""
        if self.n % m != 0:
            raise ValueError(f"{m} does not divide extension degree {self.n}")
        return tuple(a for a in self.elements() if a.frobenius(m) == a)

    def random_element(self, rng) -> FieldElement:
        return self.from_index(rng.randrange(self.order))

    def random_nonzero(self, rng) -> FieldElement:
        return self.from_index(rng.randrange(1, self.order))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> FieldSpec:
        return field_make(int(data["p"]), int(data["n"]), data["modulus"])

    def element_from_json(self, data: Sequence[int]) -> FieldElement:
        return self.element(data)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldSpec)
                and self.p == other.p and self.n == other.n
                and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={list(self.modulus)})"


def field_make(p: int, n: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Construct (and cache) a field description.

    When the modulus is omitted the lowest lexicographic monic irreducible
    is selected, so repeated calls are deterministic.
    """
    key = (p, n, tuple(modulus) if modulus is not None else None)
    spec = _SPEC_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p, n, modulus)
        _SPEC_CACHE[key] = spec
        _SPEC_CACHE[(p, n, spec.modulus)] = spec
    return spec


class FieldElement:
    """Immutable element of F_{p^n}, held as n coordinates in [0, p)."""

    __slots__ = ("spec", "coords", "idx")

    def __init__(self, spec: FieldSpec, coords: tuple[int, ...], idx: int | None):
        self.spec = spec
        self.coords = coords
        if idx is None:
            idx = 0
            for c in reversed(coords):
                idx = idx * spec.p + c
        self.idx = idx

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine field element with {type(other).__name__}")
        if self.spec != other.spec:
            raise ValueError("elements belong to different fields")

    def __bool__(self) -> bool:
        return self.idx != 0

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        spec = self.spec
        if spec.interned:
            return spec._elements[spec._add[self.idx][other.idx]]
        p = spec.p
        return FieldElement(
            spec, tuple((a + b) % p for a, b in zip(self.coords, other.coords)), None)

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __neg__(self) -> FieldElement:
        spec = self.spec
        if spec.interned:
            return spec._elements[spec._neg[self.idx]]
        p = spec.p
        return FieldElement(spec, tuple((-a) % p for a in self.coords), None)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        spec = self.spec
        if spec.interned:
            return spec._elements[spec._mul[self.idx][other.idx]]
        p = spec.p
        prod = _poly_rem(
            _poly_mul(_trim(list(self.coords)), _trim(list(other.coords)), p),
            spec.modulus, p)
        prod.extend([0] * (spec.n - len(prod)))
        return FieldElement(spec, tuple(prod), None)

    def inverse(self) -> FieldElement:
        if self.idx == 0:
            raise ZeroDivisionError("inverse of zero field element")
        spec = self.spec
        if spec.interned:
            return spec._elements[spec._inv[self.idx]]
        return self ** (spec.order - 2)

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            raise ValueError("negative exponent; use inverse() first")
        spec = self.spec
        if self.idx == 0:
            return spec.one() if e == 0 else self
        e %= spec.order - 1
        result = spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, i: int = 1) -> FieldElement:
        """The i-th power of the p-power map, x -> x^(p^i)."""
        spec = self.spec
        i %= spec.n
        if i == 0:
            return self
        if spec.interned:
            idx = self.idx
            for _ in range(i):
                idx = spec._frob1[idx]
            return spec._elements[idx]
        return self ** (spec.p ** i)

    def in_subfield(self, m: int) -> bool:
        if self.spec.n % m != 0:
            raise ValueError(f"{m} does not divide extension degree {self.spec.n}")
        return self.frobenius(m) == self

    def to_json(self) -> list[int]:
        return list(self.coords)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElement)
                and self.coords == other.coords and self.spec == other.spec)

    def __hash__(self) -> int:
        return hash((self.spec, self.coords))

    def __str__(self) -> str:
        if self.spec.n == 1:
            return str(self.coords[0])
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "t" if i == 1 else f"t^{i}"
                parts.append(var if c == 1 else f"{c}{var}")
        return "+".join(reversed(parts)) if parts else "0"

    def __repr__(self) -> str:
        return f"<{self} in F_{self.spec.order}>"
