import pytest

from frieze_mod.cycles import Cycle, equivalence_class, oplus
from frieze_mod.modmat import solution_sign
from frieze_mod.monomial import minimal_monomial_size
from frieze_mod.reduce import (ReductionWitness, bordered_solutions,
                               is_irreducible_monomial, is_reducible_general,
                               monomial_reduction_witness,
                               witness_structure_check)
from frieze_mod.verify import monomial_row
from oracles import bordered_scan

# smallest witnesses, pinned from the direct definitional scan
SMALLEST_WITNESSES = {
    (9, 3): (4, 6, 6, 1),
    (14, 3): (6, 7, 7, 1),
    (25, 5): (4, 20, 20, 1),
    (35, 4): (6, 14, 14, 1),
    (35, 23): (7, 30, 30, 1),
    (38, 11): (12, 19, 19, 1),
    (70, 3): (12, 45, 45, -1),
    (75, 7): (27, 25, 25, -1),
    (77, 3): (12, 66, 66, -1),
    (80, 20): (4, 60, 60, 1),
    (90, 83): (27, 65, 65, 1),
    (100, 17): (27, 25, 25, -1),
    (175, 38): (52, 150, 150, -1),
}


def test_bordered_matches_brute_force():
    for n in range(2, 11):
        for k in range(n):
            for size in range(2, 13):
                got = sorted(bordered_solutions(n, k, size))
                assert got == sorted(bordered_scan(n, k, size)), (n, k, size)


def test_bordered_guards():
    with pytest.raises(ValueError):
        bordered_solutions(1, 0, 4)
    with pytest.raises(ValueError):
        bordered_solutions(5, 2, 1)


def test_at_most_one_bordered_solution_per_size():
    # the top-left product entry pins the sign, the rest is forced
    for n in range(2, 30):
        for k in range(n):
            for size in (2, 3, 5, 8):
                assert len(bordered_solutions(n, k, size)) <= 1


def test_size_two_bordered_solution_is_the_zero_pair():
    for n in range(2, 30):
        sols = bordered_solutions(n, 7, 2)
        assert sols and sols[0][:2] == (0, 0)


@pytest.mark.parametrize("nk,want", sorted(SMALLEST_WITNESSES.items()))
def test_smallest_witnesses(nk, want):
    w = monomial_reduction_witness(*nk)
    assert w is not None
    assert (w.size, w.x, w.y, w.sign) == want
    assert solution_sign(w.cycle()) == w.sign


@pytest.mark.parametrize("nk", [(62, 3), (80, 50), (51, 6), (52, 5), (2, 1)])
def test_no_witness_for_irreducibles(nk):
    assert monomial_reduction_witness(*nk) is None


def test_witness_is_minimal_and_valid():
    for n in range(2, 31):
        for k in range(1, n):
            w = monomial_reduction_witness(n, k)
            size, _ = minimal_monomial_size(n, k)
            if w is None:
                for l in range(3, size):
                    assert not bordered_solutions(n, k, l), (n, k, l)
            else:
                assert 3 <= w.size < size
                assert solution_sign(w.cycle()) == w.sign
                for l in range(3, w.size):
                    assert not bordered_solutions(n, k, l), (n, k, l)


def test_verdicts():
    v = is_irreducible_monomial(9, 3)
    assert (v.kind, v.size, v.sign) == ("reducible", 6, -1)
    assert v.witness == ReductionWitness(9, 3, 4, 6, 6, 1)

    v = is_irreducible_monomial(62, 3)
    assert (v.kind, v.size, v.witness) == ("irreducible", 15, None)

    v = is_irreducible_monomial(7, 0)
    assert (v.kind, v.size, v.witness) == ("zero-convention", 2, None)

    assert is_irreducible_monomial(9, 12) == is_irreducible_monomial(9, 3)


def test_zero_bucket_and_short_size_laws():
    # k = 0 is exactly the zero-convention bucket and exactly size 2;
    # size-4 minimal solutions never reduce
    for n in range(2, 201):
        for v in monomial_row(n):
            assert (v.kind == "zero-convention") == (v.k == 0), (n, v.k)
            assert (v.size == 2) == (v.k == 0), (n, v.k)
            if v.size == 4:
                assert v.kind == "irreducible", (n, v.k)


def test_general_search_rejects_non_solution():
    with pytest.raises(ValueError):
        is_reducible_general(Cycle.of(5, 1, 0))


def test_general_search_skips_short_solutions():
    assert is_reducible_general(Cycle.of(3, 1, 1, 1)) is None
    assert is_reducible_general(Cycle.of(7, 0, 0)) is None


def test_general_search_agrees_with_witness_search():
    for n in range(2, 11):
        for k in range(1, n):
            size, _ = minimal_monomial_size(n, k)
            dec = is_reducible_general(Cycle.constant(n, k, size))
            w = monomial_reduction_witness(n, k)
            assert (dec is None) == (w is None), (n, k)


def test_general_search_decompositions_are_sound():
    found = 0
    for n in range(2, 13):
        for k in range(1, n):
            size, _ = minimal_monomial_size(n, k)
            c = Cycle.constant(n, k, size)
            dec = is_reducible_general(c)
            if dec is None:
                continue
            found += 1
            assert dec.rotated in equivalence_class(c)
            assert len(dec.left) >= 3 and len(dec.right) >= 3
            assert len(dec.left) + len(dec.right) == size + 2
            assert solution_sign(dec.left) is not None
            assert solution_sign(dec.right) is not None
            assert oplus(dec.left, dec.right) == dec.rotated
    assert found


def test_general_search_on_a_non_constant_solution():
    dec = is_reducible_general(Cycle.of(9, 6, 3, 3, 6))
    if dec is not None:
        assert oplus(dec.left, dec.right) == dec.rotated
        assert solution_sign(dec.left) is not None


def test_structure_census_irreducible_is_exact():
    """For an irreducible k the bordered sizes follow the minimal size s
    exactly: 0 mod s with endpoints (k, k), 2 mod s with endpoints (0, 0),
    nothing else."""
    rep = witness_structure_check(62, 3)
    assert (rep.minimal_size, rep.cap) == (15, 47)
    assert rep.ok, rep.violations
    assert [(e[0], e[1], e[2]) for e in rep.entries] == [
        (2, 0, 0), (15, 3, 3), (17, 0, 0), (30, 3, 3),
        (32, 0, 0), (45, 3, 3), (47, 0, 0)]


def test_structure_census_reducible_and_zero():
    rep = witness_structure_check(9, 3)
    assert rep.ok, rep.violations
    assert (4, 6, 6, 1) in rep.entries

    rep = witness_structure_check(5, 0, cap=9)
    assert rep.ok, rep.violations
    assert [e[0] for e in rep.entries] == [2, 4, 6, 8]
    assert all(e[1] == e[2] == 0 for e in rep.entries)


def test_structure_census_sweep():
    for n in range(2, 31):
        for k in range(n):
            rep = witness_structure_check(n, k)
            assert rep.ok, (n, k, rep.violations)
