"""Base-p digit combinatorics: expansions, Lucas binomials, digit cores,
the digital well-ordering, cyclic residue orbits and critical integers.

Digit strings are read most significant digit first, and the empty string
stands for 0. All functions here are pure and operate on plain integers,
so sweeps over ranges can be partitioned freely across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .finite_field import is_prime

LESS, EQUAL, GREATER = -1, 0, 1


# ---------------------------------------------------------------------------
# Expansions and Lucas binomials
# ---------------------------------------------------------------------------

def to_digits(n: int, p: int, width: int | None = None) -> list[int]:
    """Base-p digits of n, most significant first.

    The minimal expansion of 0 is empty. A width pads with leading zeros
    and must not be shorter than the minimal expansion.
    """
    if n < 0:
        raise ValueError("digit expansion requires a nonnegative integer")
    if p < 2:
        raise ValueError("base must be at least 2")
    out: list[int] = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    out.reverse()
    if width is not None:
        if width < len(out):
            raise ValueError(f"width {width} too small for {len(out)} digits")
        out[:0] = [0] * (width - len(out))
    return out


def from_digits(digits: Sequence[int], p: int) -> int:
    n = 0
    for d in digits:
        if d < 0 or d >= p:
            raise ValueError(f"digit {d} out of range for base {p}")
        n = n * p + d
    return n


def lucas_binom(m: int, k: int, p: int) -> int:
    """binomial(m, k) mod p, computed digit by digit.

    Follows the convention binomial(m, k) = 0 unless 0 <= k <= m.
    """
    if m < 0 or k < 0:
        return 0
    acc = 1
    while k or m:
        m, mr = divmod(m, p)
        k, kr = divmod(k, p)
        if kr > mr:
            return 0
        if kr:
            acc = acc * math.comb(mr, kr) % p
    return acc


# ---------------------------------------------------------------------------
# Valuations, cores, defects and the digital well-ordering
# ---------------------------------------------------------------------------

def ord_p(n: int, p: int) -> int:
    """Exact power of p dividing n (n >= 1)."""
    if n <= 0:
        raise ValueError("order at p requires a positive integer")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def coprime_part(n: int, p: int) -> int:
    """n with all factors of p removed."""
    if n <= 0:
        raise ValueError("coprime part requires a positive integer")
    while n % p == 0:
        n //= p
    return n


def p_core(n: int, p: int) -> int:
    """Digit core of n: drop trailing 0 digits, then trailing (p-1) digits."""
    t = coprime_part(n, p) + 1
    while t % p == 0:
        t //= p
    return t - 1


def p_defect(n: int, p: int) -> int:
    """Length of the minimal expansion of the digit core."""
    core = p_core(n, p)
    length = 0
    while core:
        core //= p
        length += 1
    return length


def digital_key(n: int, p: int) -> tuple[int, int, int]:
    """Sort key realizing the digital well-ordering.

    Compares digit cores first, then the count of trailing (p-1) digits
    (through n with trailing zeros removed), then trailing zeros (through
    n itself).
    """
    if n <= 0:
        raise ValueError("the digital ordering is defined on positive integers")
    t = n
    while t % p == 0:
        t //= p
    u = t + 1
    while u % p == 0:
        u //= p
    return (u - 1, t, n)


def digital_cmp(m: int, n: int, p: int) -> int:
    """-1, 0 or 1 as m precedes, equals or follows n in the digital order."""
    a, b = digital_key(m, p), digital_key(n, p)
    if a < b:
        return LESS
    if a > b:
        return GREATER
    return EQUAL


# ---------------------------------------------------------------------------
# Prime powers and residue orbits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p^lam, the modulus scale for residue orbits."""

    p: int
    lam: int
    q: int = field(init=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p!r}")
        if self.lam < 1:
            raise ValueError(f"exponent must be >= 1, got {self.lam!r}")
        object.__setattr__(self, "q", self.p ** self.lam)

    def to_json(self) -> dict:
        return {"p": self.p, "lambda": self.lam}

    @classmethod
    def from_json(cls, data: dict) -> "PrimePower":
        return cls(int(data["p"]), int(data["lambda"]))


def min_residue(c: int, pq: PrimePower) -> int:
    """Least positive integer congruent to c mod q-1; always in (0, q)."""
    if c <= 0:
        raise ValueError("residue reduction requires a positive integer")
    return (c - 1) % (pq.q - 1) + 1 if pq.q > 2 else 1


def orbit_residues(c: int, pq: PrimePower) -> frozenset[int]:
    """Residues mod q-1 of p^i * c for all i."""
    m = pq.q - 1
    return frozenset((c * pq.p ** i) % m for i in range(pq.lam))


def orbit_members(c: int, pq: PrimePower, bound: int) -> list[int]:
    """Integers up to the bound, coprime to p, congruent to some p^i * c mod q-1."""
    res = orbit_residues(c, pq)
    p, m = pq.p, pq.q - 1
    return [n for n in range(1, bound + 1) if n % p and n % m in res]


def orbit_id(c: int, pq: PrimePower) -> int:
    """Canonical label of the orbit of c: the least of its reduced rotations."""
    return min(min_residue(c * pq.p ** i, pq) for i in range(pq.lam))


def orbit_min(c: int, pq: PrimePower) -> int:
    """Least member of the orbit of c under the digital well-ordering.

    Every orbit member coprime to p whose digit core equals the orbit-wide
    minimum core has the shape (core+1) * p^g - 1, and among those the
    digital order increases with g. So: take the smallest core over the
    reduced rotations, then the smallest g whose candidate lands in the
    orbit. Residues of the candidates repeat with period dividing lam, so
    scanning g up to 2*lam is exhaustive.
    """
    p, lam, q = pq.p, pq.lam, pq.q
    core = min(p_core(min_residue(c * p ** i, pq), p) for i in range(lam))
    base = core + 1
    res = orbit_residues(c, pq)
    m = q - 1
    for g in range(2 * lam + 2):
        cand = base * p ** g - 1
        if cand >= 1 and cand % p and cand % m in res:
            return cand
    raise RuntimeError("no orbit representative found; internal invariant violated")


def orbit_min_bruteforce(c: int, pq: PrimePower, bound: int | None = None) -> int:
    """Reference implementation: scan the orbit up to a bound and take the
    digital minimum directly. Used as an independent oracle in tests."""
    if bound is None:
        bound = pq.q * pq.p ** (2 * pq.lam)
    members = orbit_members(c, pq, bound)
    if not members:
        raise RuntimeError(f"orbit of {c} has no member below {bound}")
    p = pq.p
    return min(members, key=lambda n: digital_key(n, p))


def _orbit_min_table(pq: PrimePower, bound: int) -> dict[int, int]:
    """Digital minimum of every orbit, by one scan of [1, bound]."""
    p = pq.p
    best: dict[int, tuple[tuple[int, int, int], int]] = {}
    for n in range(1, bound + 1):
        if n % p:
            oid = orbit_id(n, pq)
            key = digital_key(n, p)
            cur = best.get(oid)
            if cur is None or key < cur[0]:
                best[oid] = (key, n)
    return {oid: n for oid, (_, n) in best.items()}


# ---------------------------------------------------------------------------
# Critical integers
# ---------------------------------------------------------------------------

def critical_base_set(pq: PrimePower) -> list[int]:
    """Integers c in (0, q) coprime to p minimizing (c+1) / p^ord(c+1) over
    the members of their orbit below q. Computed by direct scan."""
    p, q = pq.p, pq.q
    best: dict[int, int] = {}
    for n in range(1, q):
        if n % p:
            oid = orbit_id(n, pq)
            v = coprime_part(n + 1, p)
            if oid not in best or v < best[oid]:
                best[oid] = v
    return [c for c in range(1, q) if c % p
            and coprime_part(c + 1, p) == best[orbit_id(c, pq)]]


def critical_members(pq: PrimePower, bound: int) -> list[int]:
    """All critical integers up to the bound: q^i*(c+1)-1 over the base set."""
    q = pq.q
    out = []
    for c in critical_base_set(pq):
        m = c
        while m <= bound:
            out.append(m)
            m = q * (m + 1) - 1
    out.sort()
    return out


def is_critical(k: int, pq: PrimePower) -> bool:
    """Membership in the full critical set: k coprime to p whose digit core
    equals the core of its orbit minimum."""
    if k <= 0:
        raise ValueError("criticality is defined for positive integers")
    p = pq.p
    if k % p == 0:
        return False
    return p_core(k, p) == p_core(orbit_min(k, pq), p)


# ---------------------------------------------------------------------------
# Admissible quadruples and their carry witness
# ---------------------------------------------------------------------------

class AdmissibleQuadruple(NamedTuple):
    j: int
    k: int
    ell: int
    m: int


class AdmissibleWitness(NamedTuple):
    e: int
    f: int
    g: int
    r: int


class WitnessError(ValueError):
    """Raised when the witness for an admissible quadruple does not exist or
    is not unique; carries the offending data for counterexample reports."""

    def __init__(self, message: str, payload: dict):
        super().__init__(message)
        self.payload = payload


def is_admissible(j: int, k: int, ell: int, m: int, p: int) -> bool:
    """Quadruple test: m coprime to p, m = k + j*(p^ell - 1), and
    binomial(k-1, j) nonzero mod p."""
    if j < 1 or k < 1 or ell < 1 or m < 1:
        return False
    if m % p == 0:
        return False
    if m != k + j * (p ** ell - 1):
        return False
    return lucas_binom(k - 1, j, p) != 0


def admissible_quadruples(p: int, m_bound: int, ell_bound: int
                          ) -> Iterator[AdmissibleQuadruple]:
    """All admissible quadruples with m <= m_bound and ell <= ell_bound,
    in ascending (m, ell, j) order."""
    for m in range(1, m_bound + 1):
        if m % p == 0:
            continue
        for ell in range(1, ell_bound + 1):
            step = p ** ell - 1
            if step >= m:
                break
            if p == 2:
                for j in range(1, (m - 1) // step + 1):
                    km1 = m - j * step - 1
                    if km1 & j == j:
                        yield AdmissibleQuadruple(j, km1 + 1, ell, m)
            else:
                for j in range(1, (m - 1) // step + 1):
                    k = m - j * step
                    if lucas_binom(k - 1, j, p) != 0:
                        yield AdmissibleQuadruple(j, k, ell, m)


def admissible_witness(quad: AdmissibleQuadruple, p: int) -> AdmissibleWitness:
    """Derived data (e, f, g, r) of an admissible quadruple.

    e, f, g are the p-orders of m+1, k and k/p^f + 1. r is the unique
    multiple of ell in [0, e+ell-1] with j = (p^r - 1)/(p^ell - 1) mod p^e;
    its existence and uniqueness, together with f+g >= e and core(m) >=
    core(k), are enforced and any violation raises WitnessError.
    """
    j, k, ell, m = quad
    if not is_admissible(j, k, ell, m, p):
        raise ValueError(f"{quad} is not admissible for p={p}")
    e = ord_p(m + 1, p)
    f = ord_p(k, p)
    g = ord_p(k // p ** f + 1, p)
    pe = p ** e
    step = p ** ell - 1
    target = j % pe
    found = [r for r in range(0, e + ell, ell)
             if ((p ** r - 1) // step) % pe == target]
    payload = {"quad": list(quad), "p": p, "e": e, "f": f, "g": g}
    if len(found) != 1:
        raise WitnessError(
            f"expected exactly one witness r for {quad}, found {found}",
            {**payload, "candidates": found})
    r = found[0]
    if f + g < e:
        raise WitnessError(
            f"order inequality f+g >= e fails for {quad}", {**payload, "r": r})
    if p_core(m, p) < p_core(k, p):
        raise WitnessError(
            f"core inequality core(m) >= core(k) fails for {quad}",
            {**payload, "r": r,
             "core_m": p_core(m, p), "core_k": p_core(k, p)})
    return AdmissibleWitness(e, f, g, r)
