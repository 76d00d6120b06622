from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from frieze_mod.monomial import (Component, SizeCapExceeded, check_half_n_law,
                                 check_prime_size_law, component_profile,
                                 minimal_monomial_size, monomial_profile,
                                 prime_power_ladder, shared_factor_size,
                                 size_via_crt)
from frieze_mod.ring import factorize, is_prime
from oracles import direct_min_size

KNOWN = {
    (2, 0): (2, 1), (2, 1): (3, 1), (4, 2): (4, 1), (5, 0): (2, -1),
    (6, 3): (6, -1), (7, 3): (4, -1), (8, 4): (4, 1), (9, 3): (6, -1),
    (12, 4): (12, 1), (25, 5): (10, -1), (35, 23): (70, 1),
}


@pytest.mark.parametrize("nk,want", sorted(KNOWN.items()))
def test_known_sizes(nk, want):
    assert minimal_monomial_size(*nk) == want


def test_matches_reference_scan():
    for n in range(2, 41):
        for k in range(n):
            assert minimal_monomial_size(n, k) == direct_min_size(n, k), (n, k)


def test_k_normalizes():
    assert minimal_monomial_size(9, 12) == minimal_monomial_size(9, 3)
    assert minimal_monomial_size(9, -6) == minimal_monomial_size(9, 3)


def test_rejects_bad_modulus():
    with pytest.raises(ValueError):
        minimal_monomial_size(1, 0)


def test_cap_error_is_internal():
    assert issubclass(SizeCapExceeded, RuntimeError)


def test_component_profile_examples():
    assert component_profile(35, 3) == [Component(5, 5, -1), Component(7, 4, -1)]
    assert component_profile(12, 4) == [Component(4, 2, -1), Component(3, 3, -1)]


def test_size_via_crt_examples():
    law = size_via_crt(35, 3)
    assert (law.lcm_value, law.multiplier, law.size, law.sign) == (20, 2, 40, 1)
    law = size_via_crt(12, 4)
    assert (law.lcm_value, law.multiplier, law.size, law.sign) == (6, 2, 12, 1)
    law = size_via_crt(35, 23)
    assert (law.lcm_value, law.multiplier, law.size, law.sign) == (35, 2, 70, 1)


def test_crt_law_agrees_with_scan(size_table):
    for n in range(2, 101):
        for k in range(n):
            law = size_via_crt(n, k)
            assert (law.size, law.sign) == size_table[(n, k)], (n, k)


def test_doubled_odd_modulus_is_a_plain_lcm():
    """n = 2u with u odd: the size is lcm of the mod-2 and mod-u sizes,
    with no doubling correction."""
    for u in range(3, 76, 2):
        n = 2 * u
        for k in range(n):
            full = minimal_monomial_size(n, k)[0]
            l1 = minimal_monomial_size(2, k % 2)[0]
            h = minimal_monomial_size(u, k % u)[0]
            assert full == lcm(l1, h), (n, k)


def test_monomial_profile_bundles_everything():
    p = monomial_profile(35, 3)
    assert (p.n_modulus, p.k, p.size, p.sign) == (35, 3, 40, 1)
    assert tuple(p.components) == (Component(5, 5, -1), Component(7, 4, -1))


def test_ladder_examples():
    assert prime_power_ladder(3, 3, 3) == [2, 6, 18]
    assert prime_power_ladder(2, 4, 2) == [2, 4, 8, 16]
    assert prime_power_ladder(5, 3, 5) == [2, 10, 50]
    assert prime_power_ladder(2, 5, 6) == [2, 4, 8, 16, 32]


def test_ladder_guards():
    with pytest.raises(ValueError):
        prime_power_ladder(6, 2, 1)
    with pytest.raises(ValueError):
        prime_power_ladder(3, 0, 1)


@given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(-30, 30))
@settings(max_examples=100, deadline=None)
def test_ladder_steps_stay_or_multiply(p, k):
    sizes = prime_power_ladder(p, 4 if p < 5 else 3, k)
    for a, b in zip(sizes, sizes[1:]):
        assert b in (a, p * a)


def test_prime_size_law_sweep():
    for p in range(3, 200):
        if not is_prime(p):
            continue
        for k in range(p):
            assert check_prime_size_law(p, k).holds, (p, k)


def test_prime_size_law_guards():
    with pytest.raises(ValueError):
        check_prime_size_law(2, 1)
    with pytest.raises(ValueError):
        check_prime_size_law(15, 1)


def test_half_n_law_sweep():
    for n in range(4, 257, 2):
        check = check_half_n_law(n)
        assert check.holds, (n, check.detail)


def test_half_n_law_guards():
    with pytest.raises(ValueError):
        check_half_n_law(7)
    with pytest.raises(ValueError):
        check_half_n_law(2)


def test_shared_factor_examples():
    assert shared_factor_size(9, 3) == 6
    assert shared_factor_size(25, 5) == 10
    assert shared_factor_size(12, 6) == 4
    assert shared_factor_size(24, 18) == 8
    assert shared_factor_size(36, 6) == 12
    assert shared_factor_size(48, 24) == 4
    assert shared_factor_size(9, 0) == 2


def test_shared_factor_guards():
    with pytest.raises(ValueError):
        shared_factor_size(12, 3)
    with pytest.raises(ValueError):
        shared_factor_size(10, 5)


def test_shared_factor_whole_range():
    # every k carrying all primes of n, n <= 100; the function asserts
    # its prediction against the scan internally
    for n in range(2, 101):
        primes = [p for p, _ in factorize(n)]
        for k in range(n):
            if all(k % p == 0 for p in primes):
                shared_factor_size(n, k)


def test_size_divides_along_divisors(size_table):
    for n in range(2, 201):
        for d in range(2, n):
            if n % d:
                continue
            for k in range(n):
                assert size_table[(n, k)][0] % size_table[(d, k % d)][0] == 0, \
                    (n, d, k)


def test_sign_laws_on_prime_powers():
    # odd prime power, even minimal size: the product lands on -Id.
    # power of two >= 4, k nonzero, even minimal size: it lands on +Id.
    for q in range(3, 257):
        f = factorize(q)
        if len(f) != 1:
            continue
        p = f[0][0]
        for k in range(q):
            size, sign = minimal_monomial_size(q, k)
            if size % 2:
                continue
            if p != 2:
                assert sign == -1, (q, k, size, sign)
            elif q >= 4 and k != 0:
                assert sign == 1, (q, k, size, sign)


def test_size_upper_bounds(size_table):
    for n in range(2, 201):
        doubled_odd = n % 2 == 0 and (n // 2) % 2 == 1
        for k in range(n):
            size = size_table[(n, k)][0]
            assert size <= 3 * n, (n, k)
            if not doubled_odd:
                assert size <= 2 * n, (n, k)
            elif k % 2 == 0:
                assert size <= n, (n, k)
