"""Residue arithmetic helpers: factorization, projection, CRT recombination.

Moduli throughout the package are plain ints >= 2. Values normalize to
their canonical representative in [0, N) on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as [(p, multiplicity)], primes ascending.

    Plain trial division; deterministic and comfortably fast for the
    desk-scale moduli this package works with.

    >>> factorize(360)
    [(2, 3), (3, 2), (5, 1)]
    """
    if n < 2:
        raise ValueError(f"nothing to factor: need n >= 2, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            m = 0
            while n % d == 0:
                n //= d
                m += 1
            out.append((d, m))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_power_factors(n: int) -> list[int]:
    """Pairwise-coprime prime-power parts of n, primes ascending.

    >>> prime_power_factors(360)
    [8, 9, 5]
    """
    return [p ** m for p, m in factorize(n)]


@dataclass(frozen=True, order=True)
class Residue:
    """An element of Z/NZ, stored as its representative in [0, N)."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _lift(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._lift(other), self.modulus)

    def __sub__(self, other):
        return Residue(self.value - self._lift(other), self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._lift(other), self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __str__(self):
        return str(self.value)


def project(r: Residue, d: int) -> Residue:
    """Push a residue down to a divisor modulus.

    d must be a divisor >= 2 of r.modulus, so that reduction mod d is well
    defined on the residue class.
    """
    if d < 2 or r.modulus % d != 0:
        raise ValueError(f"{d} is not a divisor >= 2 of modulus {r.modulus}")
    return Residue(r.value, d)


def crt_combine(parts: Sequence[Residue], n: int) -> Residue:
    """Rebuild a residue mod n from its prime-power projections.

    The parts must carry exactly the prime-power factors of n as their
    moduli, in any order. Inverse of projecting onto each factor.
    """
    want = sorted(prime_power_factors(n))
    got = sorted(p.modulus for p in parts)
    if got != want:
        raise ValueError(
            f"component moduli {got} are not the prime-power factors {want} of {n}")
    x = 0
    for part in parts:
        rest = n // part.modulus
        x += part.value * rest * pow(rest, -1, part.modulus)
    return Residue(x, n)
