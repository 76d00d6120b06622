import pytest

from frieze_mod.monomial import minimal_monomial_size


@pytest.fixture(scope="session")
def size_table():
    """(n, k) -> (size, sign) for every k at every modulus up to 200.

    Shared by the divisibility, bound and sign-law sweeps so the scan
    runs once per session.
    """
    table = {}
    for n in range(2, 201):
        for k in range(n):
            table[(n, k)] = minimal_monomial_size(n, k)
    return table
