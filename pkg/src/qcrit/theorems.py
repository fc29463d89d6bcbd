"""Verification harness: each checker sweeps one identity or combinatorial
statement over a bounded or randomized domain and returns a structured
report. Failures are data, not exceptions; a report carries minimal
counterexamples with everything needed to reproduce them.

All sweeps are deterministic given their parameters and seed. Trials are
independent, so each sweep could be partitioned across workers; reports
would merge by trial index.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import digits
from .digits import (PrimePower, WitnessError,
                     admissible_quadruples, admissible_witness,
                     critical_base_set, critical_members, digital_cmp,
                     digital_key, min_residue, coprime_part, orbit_id,
                     orbit_min, orbit_residues, ord_p, p_core, GREATER, LESS)
from .finite_field import FieldSpec, field_make
from .series import (AdditiveSeries, TruncSeries, _random_gamma, _random_unit,
                     artin_hasse, critical_projection,
                     critical_projection_formula, log_deriv, orbit_series,
                     solve_log_deriv, twisted_orbit_series)

_MAX_COUNTEREXAMPLES = 25


@dataclass
class VerifyReport:
    """Outcome of one verification sweep. Passes exactly when no
    counterexample was found."""

    statement: str
    params: dict
    scope: str
    checks: int
    counterexamples: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self, include_timing: bool = True) -> dict:
        return {
            "statement": self.statement,
            "params": self.params,
            "scope": self.scope,
            "checks": self.checks,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            "elapsed_ms": round(self.elapsed_ms, 3) if include_timing else None,
        }

    def summary(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (f"{tag} {self.statement} [{self.scope}] "
                f"checks={self.checks} ({self.elapsed_ms:.0f} ms)")


class _Collector:
    """Accumulates counterexamples with a cap so a badly broken build does
    not flood the report."""

    def __init__(self):
        self.items: list = []
        self.total = 0

    def add(self, payload: dict) -> None:
        self.total += 1
        if len(self.items) < _MAX_COUNTEREXAMPLES:
            self.items.append(payload)
        elif len(self.items) == _MAX_COUNTEREXAMPLES:
            self.items.append({"truncated": True, "collected": _MAX_COUNTEREXAMPLES})

    def finish(self) -> list:
        if self.total > _MAX_COUNTEREXAMPLES and self.items:
            self.items[-1] = {"truncated": True, "total_failures": self.total}
        return self.items


def _first_mismatch(a: TruncSeries, b: TruncSeries) -> dict:
    n = min(a.prec, b.prec)
    for i in range(n + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return {"degree": i,
                    "lhs": a.coeffs[i].to_json(),
                    "rhs": b.coeffs[i].to_json()}
    return {}


def _gamma_json(gamma: AdditiveSeries) -> dict:
    return {str(i): c.to_json() for i, c in sorted(gamma.terms.items())}


def desk_bounds(p: int) -> tuple[int, int]:
    """Default exhaustive-sweep bounds: the largest power of p at most 4096
    and its exponent."""
    bound, exp = p, 1
    while bound * p <= 4096:
        bound *= p
        exp += 1
    return bound, exp


# ---------------------------------------------------------------------------
# Series-level statements
# ---------------------------------------------------------------------------

def verify_equivariance(pq: PrimePower, spec: FieldSpec, prec: int = 128,
                        trials: int = 50, seed: int = 0) -> VerifyReport:
    """Flagship identity: projecting the logarithmic derivative onto
    critical exponents intertwines composition on the unit side with the
    compositional inverse acting on the projection side.

    Random units are composed with random members of the q-power
    composition group: the identity, single series X + beta*X^(q^ell), and
    products of up to four of them.
    """
    t0 = time.perf_counter()
    if spec.p != pq.p:
        raise ValueError("field characteristic does not match the prime power")
    rng = random.Random(seed)
    bad = _Collector()
    for trial in range(trials):
        factors = 0 if trial == 0 else 1 + (trial - 1) % 4
        f = _random_unit(spec, prec, rng)
        gamma = _random_gamma(pq, spec, prec, rng, factors)
        lhs = critical_projection(log_deriv(f.compose(gamma.as_trunc())), pq)
        rhs = gamma.inverse().apply_to(critical_projection(log_deriv(f), pq))
        if not lhs.agrees(rhs):
            bad.add({"trial": trial, "seed": seed, "factors": factors,
                     "gamma": _gamma_json(gamma),
                     "unit": [c.to_json() for c in f.coeffs],
                     **_first_mismatch(lhs, rhs)})
    return VerifyReport(
        statement="projection_equivariance",
        params={"p": pq.p, "lambda": pq.lam, "q": pq.q, "n": spec.n,
                "prec": prec, "trials": trials, "seed": seed},
        scope=f"{trials} random (unit, gamma) pairs at precision {prec}",
        checks=trials, counterexamples=bad.finish(),
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


def verify_logderiv(spec: FieldSpec, prec: int = 128, trials: int = 100,
                    seed: int = 0) -> VerifyReport:
    """Structure of the logarithmic derivative D[f] = X f'/f:

    - kernel: units supported on multiples of p map to 0, and units with a
      coefficient off the multiples of p do not;
    - homomorphism: D[f*g] = D[f] + D[g];
    - image constraint: coefficients satisfy a_(p*i) = a_i^p;
    - surjectivity onto that constraint, via the explicit section;
    - substitution of alpha*X commutes with D.
    """
    t0 = time.perf_counter()
    p = spec.p
    rng = random.Random(seed)
    bad = _Collector()
    zero = TruncSeries.zero(spec, prec)
    checks = 0
    for trial in range(trials):
        # kernel, inward: random unit supported on multiples of p
        coeffs = [spec.zero()] * (prec + 1)
        coeffs[0] = spec.random_nonzero(rng)
        for i in range(p, prec + 1, p):
            coeffs[i] = spec.random_element(rng)
        f_ker = TruncSeries(spec, prec, coeffs)
        if not log_deriv(f_ker).agrees(zero):
            bad.add({"trial": trial, "check": "kernel_in", "seed": seed})
        # kernel, outward: force a coefficient off the multiples of p
        f = _random_unit(spec, prec, rng)
        i0 = rng.choice([i for i in range(1, prec + 1) if i % p])
        cs = list(f.coeffs)
        cs[i0] = spec.random_nonzero(rng)
        f = TruncSeries(spec, prec, cs)
        df = log_deriv(f)
        if df.agrees(zero):
            bad.add({"trial": trial, "check": "kernel_out", "seed": seed,
                     "index": i0})
        # image constraint on the same random unit
        for i in range(1, prec // p + 1):
            if df.coeffs[p * i] != df.coeffs[i] ** p:
                bad.add({"trial": trial, "check": "image_constraint",
                         "seed": seed, "index": i})
                break
        # homomorphism
        g = _random_unit(spec, prec, rng)
        if not log_deriv(f * g).agrees(df + log_deriv(g)):
            bad.add({"trial": trial, "check": "homomorphism", "seed": seed})
        # surjectivity via the section
        t = [spec.zero()] * (prec + 1)
        for i in range(1, prec + 1):
            if i % p:
                t[i] = spec.random_element(rng)
            else:
                t[i] = t[i // p] ** p
        target = TruncSeries(spec, prec, t)
        if not log_deriv(solve_log_deriv(target)).agrees(target):
            bad.add({"trial": trial, "check": "section", "seed": seed})
        # substitution of alpha*X commutes with D
        alpha = spec.random_nonzero(rng)
        if not log_deriv(f.scale_arg(alpha)).agrees(df.scale_arg(alpha)):
            bad.add({"trial": trial, "check": "argument_scaling", "seed": seed,
                     "alpha": alpha.to_json()})
        checks += 6
    return VerifyReport(
        statement="logderiv_structure",
        params={"p": p, "n": spec.n, "prec": prec, "trials": trials,
                "seed": seed},
        scope=f"{trials} trials x 6 checks at precision {prec}",
        checks=checks, counterexamples=bad.finish(),
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


# ---------------------------------------------------------------------------
# Digit-combinatorial statements
# ---------------------------------------------------------------------------

def verify_admissible_order(p: int, m_bound: int | None = None,
                            ell_bound: int | None = None) -> VerifyReport:
    """Every admissible quadruple (j, k, ell, m) has k strictly below m in
    the digital well-ordering; and when the digit cores agree, j is forced
    to equal (p^ord(k) - 1)/(p^ell - 1), so ell divides ord(k) > 0."""
    t0 = time.perf_counter()
    default_m, default_ell = desk_bounds(p)
    if m_bound is None:
        m_bound = default_m
    if ell_bound is None:
        ell_bound = default_ell
    bad = _Collector()
    count = 0
    for quad in admissible_quadruples(p, m_bound, ell_bound):
        count += 1
        j, k, ell, m = quad
        if digital_cmp(k, m, p) != LESS:
            bad.add({"quad": list(quad), "check": "digital_order",
                     "key_k": digital_key(k, p), "key_m": digital_key(m, p)})
            continue
        if p_core(k, p) == p_core(m, p):
            e = ord_p(k, p)
            if e == 0 or e % ell != 0 or j * (p ** ell - 1) != p ** e - 1:
                bad.add({"quad": list(quad), "check": "forced_j",
                         "ord_k": e})
    return VerifyReport(
        statement="admissible_order",
        params={"p": p, "m_bound": m_bound, "ell_bound": ell_bound},
        scope=f"all {count} admissible quadruples with m <= {m_bound}, "
              f"ell <= {ell_bound}",
        checks=count, counterexamples=bad.finish(),
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


def verify_admissible_witness(p: int, m_bound: int | None = None,
                              ell_bound: int | None = None) -> VerifyReport:
    """Every admissible quadruple admits the unique congruence witness r
    and satisfies both derived inequalities; any violation surfaces as a
    counterexample rather than an exception."""
    t0 = time.perf_counter()
    default_m, default_ell = desk_bounds(p)
    if m_bound is None:
        m_bound = default_m
    if ell_bound is None:
        ell_bound = default_ell
    bad = _Collector()
    count = 0
    for quad in admissible_quadruples(p, m_bound, ell_bound):
        count += 1
        try:
            admissible_witness(quad, p)
        except WitnessError as err:
            bad.add(err.payload)
    return VerifyReport(
        statement="admissible_witness",
        params={"p": p, "m_bound": m_bound, "ell_bound": ell_bound},
        scope=f"all {count} admissible quadruples with m <= {m_bound}, "
              f"ell <= {ell_bound}",
        checks=count, counterexamples=bad.finish(),
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


def verify_orbit_min(pq: PrimePower, c_bound: int = 1000,
                     oracle_bound: int = 10000) -> VerifyReport:
    """Orbit minima stay below q; the integers of the form
    (orbit_min+1)*q^i - 1 are exactly those coprime to p whose digit core
    is minimal in their orbit; and the critical sets coincide with their
    direct-definition scans."""
    t0 = time.perf_counter()
    p, lam, q = pq.p, pq.lam, pq.q
    bad = _Collector()
    checks = 0
    mus: dict[int, int] = {}
    for c in range(1, max(c_bound, q - 1) + 1):
        mu = orbit_min(c, pq)
        checks += 1
        if c <= c_bound and mu >= q:
            bad.add({"check": "minimum_below_q", "c": c, "mu": mu})
        if mu % p == 0 or mu % (q - 1) not in orbit_residues(c, pq):
            bad.add({"check": "minimum_in_orbit", "c": c, "mu": mu})
        if c < q:
            mus[c] = mu

    # Window comparison of the two descriptions of core-minimal integers.
    scan_bound = max(oracle_bound, q * p ** (2 * lam))
    core_min: dict[int, int] = {}
    for n in range(1, scan_bound + 1):
        if n % p:
            oid = orbit_id(n, pq)
            core = p_core(n, p)
            if oid not in core_min or core < core_min[oid]:
                core_min[oid] = core
    lhs = set()
    for mu in set(mus.values()):
        m = mu
        while m <= oracle_bound:
            lhs.add(m)
            m = q * (m + 1) - 1
    rhs = {n for n in range(1, oracle_bound + 1)
           if n % p and p_core(n, p) == core_min[orbit_id(n, pq)]}
    checks += 1
    if lhs != rhs:
        diff = sorted(lhs.symmetric_difference(rhs))[:10]
        bad.add({"check": "core_minimal_window", "bound": oracle_bound,
                 "difference_sample": diff})

    # The base set equals the set of orbit minima, and the full critical
    # set matches its closure under k -> q*(k+1) - 1.
    base_def = critical_base_set(pq)
    base_mu = sorted(set(mus.values()))
    checks += 1
    if base_def != base_mu:
        bad.add({"check": "base_set", "scan": base_def[:20], "minima": base_mu[:20]})
    closure = set(critical_members(pq, oracle_bound))
    by_core = {n for n in range(1, oracle_bound + 1)
               if digits.is_critical(n, pq)}
    checks += 1
    if closure != by_core:
        diff = sorted(closure.symmetric_difference(by_core))[:10]
        bad.add({"check": "critical_closure", "difference_sample": diff})

    return VerifyReport(
        statement="orbit_min_critical",
        params={"p": p, "lambda": lam, "q": q, "c_bound": c_bound,
                "oracle_bound": oracle_bound},
        scope=f"minima for c <= {c_bound}; set windows up to {oracle_bound}",
        checks=checks, counterexamples=bad.finish(),
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


def verify_cyclic_digits(pq: PrimePower, bound: int = 10000) -> VerifyReport:
    """Bounds relating reduced rotations, digit cores and orbit minima:

    - a rotation below p^i forces the rotated value to dominate the
      zero-stripped original (checked for 0 < i < lam);
    - min over rotations of the zero-stripped successor equals one plus the
      minimal rotation core, which equals one plus the core of the orbit
      minimum (the minimum taken from an independent bounded scan);
    - p^i*(orbit_min+1) - 1 leaves the orbit when i is not a multiple of
      lam;
    - the successor inequality: the zero-stripped reduced successor is at
      least one plus the core of the reduced value.

    For lam = 1 the first and third families are vacuous and reported as
    trivially passing.
    """
    t0 = time.perf_counter()
    p, lam, q = pq.p, pq.lam, pq.q
    table = digits._orbit_min_table(pq, q * p ** (2 * lam))
    bad = _Collector()
    checks = 0
    for c in range(1, bound + 1):
        brs = [min_residue(c * p ** i, pq) for i in range(lam)]
        for i in range(1, lam):
            checks += 1
            if brs[i] <= p ** i - 1 and coprime_part(brs[0], p) > brs[i]:
                bad.add({"check": "rotation_bound", "c": c, "i": i,
                         "rotation": brs[i]})
        mu = table[orbit_id(c, pq)]
        lhs = min(coprime_part(min_residue(c * p ** i + 1, pq), p)
                  for i in range(lam))
        mid = 1 + min(p_core(b, p) for b in brs)
        checks += 1
        if not (lhs == mid == 1 + p_core(mu, p)):
            bad.add({"check": "successor_min", "c": c, "lhs": lhs,
                     "mid": mid, "mu": mu})
        res = orbit_residues(c, pq)
        for i in range(1, lam):
            checks += 1
            if (p ** i * (mu + 1) - 1) % (q - 1) in res:
                bad.add({"check": "shifted_min_escapes", "c": c, "i": i,
                         "mu": mu})
        checks += 1
        if coprime_part(min_residue(c + 1, pq), p) < 1 + p_core(min_residue(c, pq), p):
            bad.add({"check": "successor_inequality", "c": c})
    scope = f"all statements for c <= {bound}"
    if lam == 1:
        scope += " (rotation families vacuous at lambda=1)"
    return VerifyReport(
        statement="cyclic_digit_bounds",
        params={"p": p, "lambda": lam, "q": q, "bound": bound},
        scope=scope, checks=checks, counterexamples=bad.finish(),
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


# ---------------------------------------------------------------------------
# The reduction identity on generators
# ---------------------------------------------------------------------------

def verify_projection_formula(pq: PrimePower, spec: FieldSpec, prec: int = 256,
                              k_bound: int = 31, ell_bound: int = 3,
                              coeff_pool=None) -> VerifyReport:
    """On every grid generator the critical projection of the twisted orbit
    series matches its closed form; the twisted orbit series itself is
    computed twice (binomial closed form versus composing the Artin-Hasse
    series and taking the logarithmic derivative); and off the multiples of
    p every non-leading term sits in the orbit of k, strictly above k in
    the digital order."""
    t0 = time.perf_counter()
    p = pq.p
    if spec.p != p:
        raise ValueError("field characteristic does not match the prime power")
    if coeff_pool is None:
        if spec.order <= 9:
            coeff_pool = list(spec.nonzero_elements())
        else:
            g = spec.gen() if spec.n > 1 else spec.one()
            coeff_pool = [g, g * g, g * g * g]
    ah = artin_hasse(p, prec, spec)
    x_plus = {}
    bad = _Collector()
    checks = 0
    kres = {}
    for k in range(1, k_bound + 1):
        if k % p == 0:
            continue
        kres[k] = orbit_residues(k, pq)
        for ell in range(1, ell_bound + 1):
            qell = pq.q ** ell
            for alpha in coeff_pool:
                for beta in coeff_pool:
                    point = {"k": k, "ell": ell, "alpha": alpha.to_json(),
                             "beta": beta.to_json()}
                    closed = twisted_orbit_series(k, alpha, ell, beta, pq, prec)
                    # definitional route: k^-1 D[E(alpha (X + beta X^(q^ell))^k)]
                    genkey = (ell, beta.idx)
                    base = x_plus.get(genkey)
                    if base is None:
                        cs = [spec.zero()] * (prec + 1)
                        cs[1] = spec.one()
                        if qell <= prec:
                            cs[qell] = beta
                        base = TruncSeries(spec, prec, cs)
                        x_plus[genkey] = base
                    inner = (base ** k).scale(alpha)
                    definitional = log_deriv(ah.compose(inner)).scale(
                        spec.scalar(k).inverse())
                    checks += 1
                    if closed != definitional:
                        bad.add({**point, "check": "dual_route",
                                 **_first_mismatch(closed, definitional)})
                    checks += 1
                    projected = critical_projection(closed, pq)
                    formula = critical_projection_formula(
                        k, alpha, ell, beta, pq, prec + 1)
                    if projected != formula:
                        bad.add({**point, "check": "projection_formula",
                                 **_first_mismatch(projected, formula)})
                    checks += 1
                    shape_ok = True
                    for m in closed.support():
                        if m % p == 0:
                            continue
                        if m == k:
                            if closed.coeffs[m] != alpha:
                                shape_ok = False
                        elif (m % (pq.q - 1) not in kres[k]
                              or digital_cmp(m, k, p) != GREATER):
                            shape_ok = False
                        if not shape_ok:
                            bad.add({**point, "check": "term_shape", "m": m})
                            break
    return VerifyReport(
        statement="projection_formula",
        params={"p": p, "lambda": pq.lam, "q": pq.q, "n": spec.n,
                "prec": prec, "k_bound": k_bound, "ell_bound": ell_bound,
                "pool_size": len(coeff_pool)},
        scope=f"grid k <= {k_bound} coprime to {p}, ell <= {ell_bound}, "
              f"{len(coeff_pool)}^2 coefficient pairs, precision {prec}",
        checks=checks, counterexamples=bad.finish(),
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


# ---------------------------------------------------------------------------
# Unit-group action over an unramified extension
# ---------------------------------------------------------------------------

def verify_coleman(pq: PrimePower, ext_degree: int = 1, prec: int = 128,
                   trials: int = 25, seed: int = 0) -> VerifyReport:
    """Residue model of the natural action on Coleman power series.

    Over K = F_{q^m}, units h are composed with omega*X (omega running over
    all of F_q^*, the Teichmueller representatives) and with group elements
    gamma having coefficients in F_q. The projected logarithmic derivative
    must transform by the inverse substitution and conjugation by omega:

        Psi[h(omega * gamma(X))] = gamma^{-1}(omega^{-1} Psi[h](omega X))

    Surjectivity of Psi is witnessed by hitting each basis monomial
    X^(c+1) for c in the critical base set.
    """
    t0 = time.perf_counter()
    p, lam, q = pq.p, pq.lam, pq.q
    spec = field_make(p, lam * ext_degree)
    sub = spec.subfield_elements(lam)
    if len(sub) != q:
        raise AssertionError("subfield enumeration did not find q elements")
    sub_nonzero = [a for a in sub if a]
    rng = random.Random(seed)
    bad = _Collector()
    checks = 0
    for trial in range(trials):
        factors = 0 if trial == 0 else 1 + (trial - 1) % 4
        h = _random_unit(spec, prec, rng)
        gamma = _random_gamma(pq, spec, prec, rng, factors, pool=sub_nonzero)
        gamma_inv = gamma.inverse()
        psi_h = critical_projection(log_deriv(h), pq)
        for omega in sub_nonzero:
            lhs = critical_projection(
                log_deriv(h.scale_arg(omega).compose(gamma.as_trunc())), pq)
            rhs = gamma_inv.apply_to(
                psi_h.scale_arg(omega).scale(omega.inverse()))
            checks += 1
            if not lhs.agrees(rhs):
                bad.add({"trial": trial, "seed": seed, "factors": factors,
                         "omega": omega.to_json(),
                         "gamma": _gamma_json(gamma),
                         **_first_mismatch(lhs, rhs)})
    hit = 0
    for c in critical_base_set(pq):
        if c + 1 > prec:
            continue
        hit += 1
        h = solve_log_deriv(orbit_series(c, spec.one(), prec))
        image = critical_projection(log_deriv(h), pq)
        target = TruncSeries.monomial(spec, prec + 1, c + 1, spec.one())
        checks += 1
        if not image.agrees(target):
            bad.add({"check": "surjectivity", "c": c,
                     **_first_mismatch(image, target)})
    return VerifyReport(
        statement="coleman_equivariance",
        params={"p": p, "lambda": lam, "q": q, "ext_degree": ext_degree,
                "prec": prec, "trials": trials, "seed": seed},
        scope=f"{trials} trials x {len(sub_nonzero)} Teichmueller scalings; "
              f"{hit} surjectivity witnesses",
        checks=checks, counterexamples=bad.finish(),
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


# ---------------------------------------------------------------------------
# Exploration (no pass/fail): digital leading terms of generator images
# ---------------------------------------------------------------------------

def explore_generators(pq: PrimePower, spec: FieldSpec, k_bound: int = 63,
                       prec: int = 128) -> list[dict]:
    """For each candidate generator E(alpha*X^k) of the unit group, tabulate
    the digitally least exponent coprime to p carrying a nonzero
    coefficient in the logarithmic derivative, with its core, defect and
    criticality. Exploratory output only; draws no conclusion."""
    p = pq.p
    if spec.p != p:
        raise ValueError("field characteristic does not match the prime power")
    if spec.order <= 9:
        pool = list(spec.nonzero_elements())
    else:
        g = spec.gen() if spec.n > 1 else spec.one()
        pool = [g, g * g, g * g * g]
    ah = artin_hasse(p, prec, spec)
    rows = []
    for k in range(1, min(k_bound, prec) + 1):
        if k % p == 0:
            continue
        for alpha in pool:
            inner = TruncSeries.monomial(spec, prec, k, alpha)
            t = log_deriv(ah.compose(inner))
            exps = [m for m in t.support() if m % p]
            if not exps:
                continue
            lead = min(exps, key=lambda m: digital_key(m, p))
            rows.append({
                "k": k,
                "alpha": alpha.to_json(),
                "lead_exponent": lead,
                "core": p_core(lead, p),
                "defect": digits.p_defect(lead, p),
                "critical": digits.is_critical(lead, pq),
            })
    return rows


# ---------------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------------

def verify_all(pq: PrimePower, spec: FieldSpec, prec: int = 128,
               seed: int = 0, trials: int | None = None) -> list[VerifyReport]:
    """Run every verification sweep at desk-scale defaults."""
    m_bound, ell_bound = desk_bounds(pq.p)
    ext = spec.n // pq.lam if spec.n % pq.lam == 0 else 1
    return [
        verify_equivariance(pq, spec, prec, trials or 50, seed),
        verify_logderiv(spec, prec, trials or 100, seed),
        verify_admissible_order(pq.p, m_bound, ell_bound),
        verify_admissible_witness(pq.p, m_bound, ell_bound),
        verify_orbit_min(pq),
        verify_cyclic_digits(pq),
        verify_projection_formula(pq, spec, prec=max(prec, 256)),
        verify_coleman(pq, ext_degree=ext, prec=prec, trials=trials or 25,
                       seed=seed),
    ]
