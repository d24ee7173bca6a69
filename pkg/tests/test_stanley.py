"""Stanley symmetric functions, finite and affine, and their expansions."""

import pytest

from stansym.affine import AffinePermutation, elements_of_length
from stansym.partition import staircase
from stansym.permutation import Permutation, symmetric_group
from stansym.stanley import (
    affine_schur_expand,
    affine_stanley,
    check_symmetry_affine,
    check_symmetry_finite,
    coproduct_check,
    schur_expand,
    stanley_fn,
    stanley_quasisym,
    transition_check,
)
from stansym.symfunc import SymFunc, change_basis


def test_f_2431():
    w = Permutation([2, 4, 3, 1])
    want = SymFunc(4, "m", {(2, 1, 1): 1, (1, 1, 1, 1): 3})
    for method in ("original", "decreasing", "quasisym"):
        assert stanley_fn(w, method) == want
    assert schur_expand(w) == SymFunc(4, "s", {(2, 1, 1): 1})


def test_trivial_cases():
    assert stanley_fn(Permutation.identity(3)) == SymFunc(0, "m", {(): 1})
    assert stanley_fn(Permutation.simple(2, 4)) == SymFunc(1, "m", {(1,): 1})


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        stanley_fn(Permutation.identity(3), "fastest")


def test_three_definitions_agree_on_s4():
    for w in symmetric_group(4):
        a = stanley_fn(w, "original")
        b = stanley_fn(w, "decreasing")
        c = stanley_fn(w, "quasisym")
        assert a == b == c


def test_quasisym_route_is_symmetric():
    for w in symmetric_group(4):
        q = stanley_quasisym(w)
        assert q.is_symmetric()
        assert q.to_symfunc() == stanley_fn(w)


def test_symmetry_checks():
    assert all(check_symmetry_finite(w) for w in symmetric_group(4))
    assert all(
        check_symmetry_affine(w) for l in range(5) for w in elements_of_length(3, l)
    )


def test_one_times_stability():
    for w in symmetric_group(4):
        assert stanley_fn(w) == stanley_fn(w.one_times())


def test_leading_term_and_dominance_bound():
    for w in symmetric_group(4):
        f = stanley_fn(w)
        la = w.shape()
        assert f[la] == 1
        from stansym.partition import dominance_leq

        assert all(dominance_leq(mu, la) for mu in f.coeffs)


def test_longest_element_is_staircase_schur():
    for n in (3, 4):
        w0 = Permutation.longest(n)
        assert schur_expand(w0) == SymFunc.monomial("s", staircase(n - 1))


def test_grassmannian_gives_single_schur():
    for w in symmetric_group(4):
        if w.is_grassmannian() and not w.is_identity():
            assert len(schur_expand(w).coeffs) == 1


def test_vexillary_iff_single_schur_term():
    for n in (4, 5):
        for w in symmetric_group(n):
            assert w.is_vexillary() == (len(schur_expand(w).coeffs) == 1)


def test_schur_expansion_is_nonnegative_and_consistent():
    for w in symmetric_group(4):
        s = schur_expand(w)
        assert all(c > 0 for c in s.coeffs.values())
        assert change_basis(stanley_fn(w), "s") == s


def test_affine_stanley_example():
    w = AffinePermutation.from_word((2, 1, 2, 0, 2), 3)
    assert affine_stanley(w) == SymFunc(
        5, "m", {(2, 2, 1): 1, (2, 1, 1, 1): 2, (1, 1, 1, 1, 1): 3}
    )


def test_affine_restricts_to_finite():
    for v in symmetric_group(3):
        w = AffinePermutation.from_finite(v)
        assert affine_stanley(w) == stanley_fn(v)


def test_affine_x1_xl_coefficient_counts_reduced_words():
    for l in range(6):
        for w in elements_of_length(3, l):
            assert affine_stanley(w)[(1,) * l] == len(w.reduced_words())


def test_affine_schur_expansion_example():
    w = AffinePermutation.from_word((2, 1, 2, 0, 2), 3)
    f = affine_schur_expand(w)
    assert f.coeffs == {(2, 2, 1): 1, (2, 1, 1, 1): 1}
    from stansym.symfunc import affine_schur

    total = SymFunc.zero(5)
    for la, c in f.coeffs.items():
        total = total + c * affine_schur(3, la)
    assert total == affine_stanley(w)


def test_affine_schur_expansion_nonnegative_rank_3():
    for l in range(7):
        for w in elements_of_length(3, l):
            f = affine_schur_expand(w)
            assert all(c > 0 for c in f.coeffs.values())
            if w.is_grassmannian():
                assert f.coeffs == {w.shape(): 1}


def test_coproduct_check():
    assert coproduct_check(AffinePermutation.identity(3))
    assert coproduct_check(AffinePermutation.from_word((2, 1, 2, 0, 2), 3))
    for l in range(5):
        for w in elements_of_length(3, l):
            assert coproduct_check(w)


def test_transition_identity_s4():
    for w in symmetric_group(4):
        for r in range(1, 5):
            assert transition_check(w, r)
