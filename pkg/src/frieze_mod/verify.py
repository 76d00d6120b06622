"""Sweep verifiers: replay the structural laws over ranges of moduli.

Each verifier checks one published law against every (n, k) in range,
using only the monomial/reduce primitives, and collects counterexamples.
Reports are deterministic (moduli ascending, k ascending); elapsed_ms is
the one field that varies between runs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable, Iterator, Optional

from .monomial import minimal_monomial_size
from .reduce import MonomialVerdict, is_irreducible_monomial
from .ring import factorize, is_prime


@dataclass(frozen=True)
class Counterexample:
    """One (n, k) violating a law; k is -1 for a failed existence claim."""

    n_modulus: int
    k: int
    observed: str
    expected: str

    def to_dict(self) -> dict:
        return {"n": self.n_modulus, "k": self.k,
                "observed": self.observed, "expected": self.expected}


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one verifier run.

    status is "fail" exactly when counterexamples is nonempty, "vacuous"
    when nothing in range satisfied the hypothesis, and "pass" otherwise.
    """

    theorem_id: str
    range: str
    status: str
    counterexamples: tuple[Counterexample, ...]
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "range": self.range,
            "status": self.status,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "elapsed_ms": self.elapsed_ms,
        }


def _report(theorem_id, range_text, hit, bad, t0) -> TheoremReport:
    status = "fail" if bad else ("pass" if hit else "vacuous")
    return TheoremReport(theorem_id, range_text, status, tuple(bad),
                         (time.perf_counter() - t0) * 1000.0)


def _desc(lo, hi, extra=""):
    base = f"n in [{lo}, {hi}]"
    return f"{base}, {extra}" if extra else base


@lru_cache(maxsize=2048)
def monomial_row(n: int) -> tuple[MonomialVerdict, ...]:
    """All k classifications for one modulus, cached across the sweeps."""
    return tuple(is_irreducible_monomial(n, k) for k in range(n))


# Hypothesis classifiers. Small and pure so they can be unit tested on
# their own; every verifier filters through these rather than inlining
# the arithmetic.

def is_three_m_form(n: int) -> bool:
    """n = 3m with m odd and coprime to 3 (the open bound family)."""
    return n % 3 == 0 and gcd(n // 3, 6) == 1


def odd_half(n: int) -> Optional[int]:
    """m when n = 2m with m odd, else None."""
    return n // 2 if n % 2 == 0 and (n // 2) % 2 == 1 else None


def two_three_split(n: int) -> Optional[tuple[int, int]]:
    """(a, b) when n = 2 * 3**a * b with a >= 1 and b > 1 odd coprime to 3."""
    if n % 6:
        return None
    m = n // 2
    a = 0
    while m % 3 == 0:
        m //= 3
        a += 1
    if m > 1 and m % 2 == 1:
        return (a, m)
    return None


def prime_power_shape(s: int) -> Optional[tuple[int, int]]:
    """(p, e) when s = p**e for a prime p and e >= 1, else None."""
    if s < 2:
        return None
    f = factorize(s)
    return f[0] if len(f) == 1 else None


def _two_adic(n: int) -> int:
    a = 0
    while n % 2 == 0:
        n //= 2
        a += 1
    return a


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _crt_pair(r1, q1, r2, q2):
    """x with x = r1 mod q1 and x = r2 mod q2, for coprime q1, q2."""
    return (r1 + q1 * ((r2 - r1) * pow(q1, -1, q2) % q2)) % (q1 * q2)


def verify_size_bound(lo: int = 2, hi: int = 150) -> TheoremReport:
    """Irreducible minimal constant solutions have size at most n, except
    for n = 2 and the open family n = 3m with m odd coprime to 3."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(max(lo, 3), hi + 1):
        if is_three_m_form(n):
            continue
        for v in monomial_row(n):
            if v.kind != "irreducible":
                continue
            hit = True
            if v.size > n:
                bad.append(Counterexample(
                    n, v.k, f"irreducible of size {v.size}", f"size <= {n}"))
    return _report("size-bound",
                   _desc(lo, hi, "excluding n = 2 and n = 3m with m odd coprime to 3"),
                   hit, bad, t0)


def verify_eight_divides(lo: int = 2, hi: int = 150) -> TheoremReport:
    """When 8 divides n, every minimal constant-solution size is <= n."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(lo, hi + 1):
        if n % 8:
            continue
        for v in monomial_row(n):
            hit = True
            if v.size > n:
                bad.append(Counterexample(
                    n, v.k, f"size {v.size}", f"size <= {n}"))
    return _report("eight-divides", _desc(lo, hi, "n divisible by 8"),
                   hit, bad, t0)


def verify_odd_sizes(lo: int = 2, hi: int = 150) -> TheoremReport:
    """Odd minimal sizes force irreducibility, except when n = 2m with m
    odd, where the claim covers odd sizes divisible by 9."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(max(lo, 3), hi + 1):
        m = odd_half(n)
        for v in monomial_row(n):
            if v.size % 2 == 0:
                continue
            if m is None:
                covered = True
            else:
                covered = m != 1 and v.size % 9 == 0
            if not covered:
                continue
            hit = True
            if v.kind != "irreducible":
                bad.append(Counterexample(
                    n, v.k, f"{v.kind} of odd size {v.size}", "irreducible"))
    return _report("odd-sizes",
                   _desc(lo, hi, "odd sizes; for n = 2m (m odd) only sizes divisible by 9"),
                   hit, bad, t0)


def verify_three_h_criterion(lo: int = 2, hi: int = 150) -> TheoremReport:
    """For n = 2m (m odd) and minimal size 3h with h > 1 odd coprime to 3,
    the verdict matches divisibility at the odd part: irreducible exactly
    when 3 divides the mod-m minimal size of k."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(max(lo, 6), hi + 1):
        m = odd_half(n)
        if m is None or m == 1:
            continue
        for v in monomial_row(n):
            if v.size % 3:
                continue
            h = v.size // 3
            if h == 1 or h % 2 == 0 or h % 3 == 0:
                continue
            hit = True
            comp, _ = minimal_monomial_size(m, v.k % m)
            want = "irreducible" if comp % 3 == 0 else "reducible"
            if v.kind != want:
                bad.append(Counterexample(
                    n, v.k, v.kind, f"{want} (mod-{m} size {comp})"))
    return _report("three-h-criterion",
                   _desc(lo, hi, "n = 2m (m odd), sizes 3h with h > 1 odd coprime to 3"),
                   hit, bad, t0)


def verify_size_n(lo: int = 2, hi: int = 150) -> TheoremReport:
    """Nonzero solutions of size exactly n are irreducible, unless
    n = 2 * 3**a * b (b > 1 odd coprime to 3) where a reducible one must
    exist: the k that is 1 mod 2, 2 mod 3**a and -2 mod b."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(max(lo, 3), hi + 1):
        split = two_three_split(n)
        row = monomial_row(n)
        if split is None:
            for v in row:
                if v.k == 0 or v.size != n:
                    continue
                hit = True
                if v.kind != "irreducible":
                    bad.append(Counterexample(
                        n, v.k, f"{v.kind} of size {n}", "irreducible"))
        else:
            a, b = split
            hit = True
            t = 3 ** a
            k0 = _crt_pair(1, 2, _crt_pair(2 % t, t, -2 % b, b), t * b)
            v = row[k0]
            if not (v.size == n and v.kind == "reducible"):
                bad.append(Counterexample(
                    n, k0, f"{v.kind} of size {v.size}",
                    f"reducible of size {n}"))
    return _report("size-n", _desc(lo, hi, "solutions of size exactly n"),
                   hit, bad, t0)


def verify_prime_powers(lo: int = 2, hi: int = 150) -> TheoremReport:
    """Prime-power moduli classify completely. For odd p: irreducible
    exactly when p does not divide k. For p = 2 (modulus 2**e):
    irreducible exactly when k is odd, or k = 2**(e-1), or e >= 2 with
    k/2 an odd integer."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(max(lo, 2), hi + 1):
        shape = prime_power_shape(n)
        if shape is None:
            continue
        p, e = shape
        for v in monomial_row(n):
            hit = True
            k = v.k
            if p != 2:
                want = k % p != 0
            else:
                want = (k % 2 == 1 or k == 2 ** (e - 1)
                        or (e >= 2 and k % 2 == 0 and (k // 2) % 2 == 1))
            if (v.kind == "irreducible") != want:
                bad.append(Counterexample(
                    n, k, v.kind,
                    "irreducible" if want else "not irreducible"))
    return _report("prime-powers", _desc(lo, hi, "prime-power moduli"),
                   hit, bad, t0)


def verify_reducible_constructions(lo: int = 2, hi: int = 150) -> TheoremReport:
    """Three reducible families. p**2 | n for odd p: k = n/p has size 2p,
    reducible. 16 | n: k = n/4 has size 8, reducible. Coprime splits
    n = u * m with u, m > 1 and m odd coprime to 3: some k coprime to n
    is reducible of size 6m (u > 2) or 3m (u = 2)."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(max(lo, 2), hi + 1):
        row = monomial_row(n)
        for p, mult in factorize(n):
            if p == 2 or mult < 2:
                continue
            hit = True
            v = row[n // p]
            if not (v.size == 2 * p and v.kind == "reducible"):
                bad.append(Counterexample(
                    n, n // p, f"{v.kind} of size {v.size}",
                    f"reducible of size {2 * p}"))
        if n % 16 == 0:
            hit = True
            v = row[n // 4]
            if not (v.size == 8 and v.kind == "reducible"):
                bad.append(Counterexample(
                    n, n // 4, f"{v.kind} of size {v.size}",
                    "reducible of size 8"))
        for m in _divisors(n):
            u = n // m
            if m <= 1 or u <= 1 or gcd(m, u) != 1 or m % 2 == 0 or m % 3 == 0:
                continue
            hit = True
            want = 6 * m if u > 2 else 3 * m
            if not any(v.kind == "reducible" and v.size == want
                       and gcd(v.k, n) == 1 for v in row):
                bad.append(Counterexample(
                    n, -1, f"no unit k reducible of size {want}",
                    f"some unit k reducible of size {want} (split {u} * {m})"))
    return _report("reducible-constructions", _desc(lo, hi), hit, bad, t0)


def verify_special_sizes(lo: int = 2, hi: int = 150) -> TheoremReport:
    """Irreducibility forced by the size's arithmetic shape (nonzero k).

    Prime-power sizes > 2 on odd moduli, or with the prime odd; on even
    moduli, sizes 2**e need e = 2 or e at least the 2-adic valuation of
    n, and any 2**e >= 4 suffices when 16 does not divide n. Size 6 when
    3 does not divide n. Sizes 2 * p**e for odd p coprime to n. Sizes
    4 * p**e for odd n and odd p coprime to n."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(max(lo, 3), hi + 1):
        for v in monomial_row(n):
            if v.k == 0:
                continue
            s = v.size
            reasons = []
            pp = prime_power_shape(s)
            if pp and s != 2:
                p, e = pp
                if n % 2 == 1 or p != 2:
                    reasons.append(f"prime-power size {s}")
                elif e == 2 or e >= _two_adic(n):
                    reasons.append(f"size 2**{e} vs 2-adic valuation of n")
                if p == 2 and e >= 2 and n % 16:
                    reasons.append(f"size {s} = 2**{e} with 16 not dividing n")
            if s == 6 and n % 3:
                reasons.append("size 6 with 3 not dividing n")
            if s % 2 == 0:
                half = prime_power_shape(s // 2)
                if half and half[0] != 2 and n % half[0]:
                    reasons.append(
                        f"size 2 * {half[0]}**{half[1]}, prime coprime to n")
            if s % 4 == 0 and n % 2 == 1:
                quarter = prime_power_shape(s // 4)
                if quarter and quarter[0] != 2 and n % quarter[0]:
                    reasons.append(
                        f"size 4 * {quarter[0]}**{quarter[1]} on an odd modulus")
            if not reasons:
                continue
            hit = True
            if v.kind != "irreducible":
                bad.append(Counterexample(
                    n, v.k, f"{v.kind} of size {s}",
                    f"irreducible ({reasons[0]})"))
    return _report("special-sizes", _desc(lo, hi, "nonzero k, shaped sizes"),
                   hit, bad, t0)


def verify_overshoot_3m(lo: int = 2, hi: int = 150) -> TheoremReport:
    """For n = 3m with m odd coprime to 3, minimal constant solutions of
    size above n are reducible; the size n + n/3 regime is open and the
    sweep skips it."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for n in range(max(lo, 3), hi + 1):
        if not is_three_m_form(n):
            continue
        for v in monomial_row(n):
            if v.size <= n or v.size == n + n // 3:
                continue
            hit = True
            if v.kind != "reducible":
                bad.append(Counterexample(
                    n, v.k, f"{v.kind} of size {v.size}", "reducible"))
    return _report("overshoot-3m",
                   _desc(lo, hi, "n = 3m (m odd coprime to 3), sizes > n except n + n/3"),
                   hit, bad, t0)


DEFAULT_FAMILY_PRIMES = (5, 7, 11, 13, 17, 19)


def verify_unbounded_family(primes=DEFAULT_FAMILY_PRIMES) -> TheoremReport:
    """The family witnessing that no additive gap bounds irreducible sizes:
    for an odd prime p >= 5, modulus 3p with k = p + 2 (p = 1 mod 3) or
    k = p - 2 (p = 2 mod 3) is irreducible of size 4p."""
    t0 = time.perf_counter()
    bad, hit = [], False
    for p in primes:
        if p < 5 or not is_prime(p):
            raise ValueError(f"family needs odd primes >= 5, got {p}")
        n = 3 * p
        k = p + 2 if p % 3 == 1 else p - 2
        hit = True
        v = is_irreducible_monomial(n, k)
        if not (v.size == 4 * p and v.kind == "irreducible"):
            bad.append(Counterexample(
                n, k, f"{v.kind} of size {v.size}",
                f"irreducible of size {4 * p}"))
    return _report("unbounded-family", f"p in {list(primes)}", hit, bad, t0)


VERIFIERS: dict[str, Callable[[int, int], TheoremReport]] = {
    "size-bound": verify_size_bound,
    "eight-divides": verify_eight_divides,
    "odd-sizes": verify_odd_sizes,
    "three-h-criterion": verify_three_h_criterion,
    "size-n": verify_size_n,
    "prime-powers": verify_prime_powers,
    "reducible-constructions": verify_reducible_constructions,
    "special-sizes": verify_special_sizes,
    "overshoot-3m": verify_overshoot_3m,
}


def run_verifier(theorem_id: str, lo: int = 2, hi: int = 150) -> TheoremReport:
    """Run one verifier by id. unbounded-family ignores the range and uses
    its default prime list."""
    if theorem_id == "unbounded-family":
        return verify_unbounded_family()
    if theorem_id not in VERIFIERS:
        known = ", ".join(list(VERIFIERS) + ["unbounded-family", "all"])
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {known}")
    return VERIFIERS[theorem_id](lo, hi)


def run_all(lo: int = 2, hi: int = 150) -> list[TheoremReport]:
    """Every verifier in registry order, then the unbounded family."""
    reports = [fn(lo, hi) for fn in VERIFIERS.values()]
    reports.append(verify_unbounded_family())
    return reports


@dataclass(frozen=True)
class SurveyRow:
    """One (n, k) line of the survey table."""

    n_modulus: int
    k: int
    size: int
    sign: int
    verdict: str
    witness_size: Optional[int]
    witness_x: Optional[int]
    witness_y: Optional[int]


def survey_row(v: MonomialVerdict) -> SurveyRow:
    w = v.witness
    return SurveyRow(v.n_modulus, v.k, v.size, v.sign, v.kind,
                     w.size if w else None, w.x if w else None,
                     w.y if w else None)


def survey_rows(lo: int, hi: int) -> Iterator[SurveyRow]:
    """One row per (n, k), n ascending then k ascending. An empty range
    yields nothing."""
    if lo < 2:
        raise ValueError(f"moduli start at 2, got {lo}")
    for n in range(lo, hi + 1):
        for v in monomial_row(n):
            yield survey_row(v)
