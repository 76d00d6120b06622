"""Minimal sizes of constant solutions and their prime-power composition.

The central quantity: for k mod n, the smallest size at which the constant
tuple (k, ..., k) multiplies out to plus or minus the identity. Everything
else here relates that size across moduli (prime-power components, divisor
ladders, closed-form special cases).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import NamedTuple

from .modmat import _m1, _mul, _sign
from .ring import factorize, is_prime, prime_power_factors

# Minimal sizes never exceed 3N (worst case: twice the lcm of the
# prime-power component sizes, each at most 3 * p**a / 2), so a scan that
# passes 3N + 1 means the implementation is broken, not the input.
_CAP_FACTOR = 3


class SizeCapExceeded(RuntimeError):
    """Internal failure: the size scan ran past the proven 3N bound."""


def minimal_monomial_size(n: int, k: int) -> tuple[int, int]:
    """Size and sign of the shortest constant-k solution mod n.

    Returns (size, sign): sign +1 when the product is the identity, -1 for
    its negative, and +1 by convention mod 2 where the two coincide. The
    scan is the definition itself: walk powers of the elementary factor
    until one lands on plus or minus Id.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    a = _m1(k, n)
    m = a
    for size in range(1, _CAP_FACTOR * n + 2):
        s = _sign(m, n)
        if s:
            return size, s
        m = _mul(a, m, n)
    raise SizeCapExceeded(f"no size <= {_CAP_FACTOR * n + 1} for n={n}, k={k}")


class Component(NamedTuple):
    """Minimal size and sign at one prime-power factor of the modulus."""

    modulus: int
    size: int
    sign: int


def component_profile(n: int, k: int) -> list[Component]:
    """Per prime-power-factor minimal sizes and signs for the constant k."""
    return [Component(q, *minimal_monomial_size(q, k % q))
            for q in prime_power_factors(n)]


@dataclass(frozen=True)
class SizeLaw:
    """How the minimal size mod n assembles from its prime-power parts.

    size = multiplier * lcm_value, with multiplier 2 exactly when the
    component signs cannot be reconciled at the bare lcm. sign is the
    common sign the full product lands on.
    """

    lcm_value: int
    multiplier: int
    sign: int

    @property
    def size(self) -> int:
        return self.multiplier * self.lcm_value


def size_via_crt(n: int, k: int) -> SizeLaw:
    """Assemble the minimal constant-solution size from the factor profile.

    At the bare lcm m of the component sizes, the component at modulus q
    lands on sign_q ** (m / size_q). The component at modulus exactly 2
    cannot veto (Id = -Id there). If the adjusted signs agree, the minimal
    size is m with that shared sign; otherwise doubling reconciles every
    component to +1.
    """
    comps = component_profile(n, k)
    m = lcm(*(c.size for c in comps))
    adjusted = {c.sign if (m // c.size) % 2 else 1
                for c in comps if c.modulus != 2}
    if len(adjusted) <= 1:
        mult = 1
        sign = adjusted.pop() if adjusted else 1
    else:
        mult, sign = 2, 1
    return SizeLaw(m, mult, sign)


@dataclass(frozen=True)
class MonomialProfile:
    """Size, sign, and factor components for one (n, k) pair."""

    n_modulus: int
    k: int
    size: int
    sign: int
    components: tuple[Component, ...]


def monomial_profile(n: int, k: int) -> MonomialProfile:
    size, sign = minimal_monomial_size(n, k)
    return MonomialProfile(n, k % n, size, sign, tuple(component_profile(n, k)))


def prime_power_ladder(p: int, n_max: int, k: int) -> list[int]:
    """Minimal sizes along p, p**2, ..., p**n_max for the constant k.

    Consecutive rungs satisfy r_next in {r, p * r}; a violation would
    falsify the ladder law and is raised as AssertionError.
    """
    if not is_prime(p):
        raise ValueError(f"need a prime base, got {p}")
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    sizes: list[int] = []
    for e in range(1, n_max + 1):
        r, _ = minimal_monomial_size(p ** e, k)
        if sizes:
            assert r in (sizes[-1], p * sizes[-1]), \
                f"ladder break at {p}**{e}: {sizes[-1]} -> {r}"
        sizes.append(r)
    return sizes


@dataclass(frozen=True)
class LawCheck:
    """Outcome of checking one closed-form size law instance."""

    holds: bool
    size: int
    sign: int
    detail: str


def check_prime_size_law(p: int, k: int) -> LawCheck:
    """Odd-prime law: k = +-2 mod p forces size exactly p; any other k has
    size dividing (p+1)/2 or (p-1)/2."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    size, sign = minimal_monomial_size(p, k)
    if k % p in (2 % p, (-2) % p):
        holds = size == p
        detail = f"k = +-2 mod {p}: size {size} vs required {p}"
    else:
        holds = ((p + 1) // 2) % size == 0 or ((p - 1) // 2) % size == 0
        detail = f"size {size} vs divisors of {(p + 1) // 2} or {(p - 1) // 2}"
    return LawCheck(holds, size, sign, detail)


def check_half_n_law(n: int) -> LawCheck:
    """Even-modulus midpoint law: k = n/2 has size 4 with sign +1 when
    4 | n, and size 6 with sign -1 otherwise."""
    if n < 4 or n % 2:
        raise ValueError(f"need an even modulus >= 4, got {n}")
    size, sign = minimal_monomial_size(n, n // 2)
    want = (4, 1) if n % 4 == 0 else (6, -1)
    return LawCheck((size, sign) == want, size, sign,
                    f"(size, sign) = {(size, sign)} vs {want}")


def shared_factor_size(n: int, k: int) -> int:
    """Size when k carries every prime of n.

    For k of shape a * prod(p_i ** b_i) with 1 <= b_i <= a_i and a coprime
    to n, the minimal size is 2 * prod(p_i ** (a_i - b_i)). The shape is
    read off the residue class of k (valuations at or above a_i collapse
    to a_i); a prime of n missing from k is a ValueError. The prediction
    is asserted against the direct scan before returning.
    """
    k %= n
    predicted = 2
    for p, a in factorize(n):
        if k % p:
            raise ValueError(
                f"k={k} is not divisible by {p}, a prime factor of {n}")
        if k % p ** a == 0:
            b = a
        else:
            b = 0
            t = k
            while t % p == 0:
                t //= p
                b += 1
        predicted *= p ** (a - b)
    size, _ = minimal_monomial_size(n, k)
    assert size == predicted, \
        f"shared-factor law broke at n={n}, k={k}: {size} != {predicted}"
    return size
