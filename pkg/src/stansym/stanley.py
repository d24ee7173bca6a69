"""Stanley symmetric functions, affine Stanley symmetric functions, and
their Schur / affine Schur expansions.

F_w is computed by three independent routes (compatible pairs on reduced
words, decreasing factorizations, fundamental quasi-symmetric functions);
the affine F~_w by dynamic programming over cyclically decreasing
factorizations.  Monomial coefficients are extracted on partitions; the
symmetry of the result is a theorem, and ``check_symmetry`` verifies it on
arbitrary compositions.
"""

from functools import lru_cache
from itertools import combinations

from .affine import (
    AffinePermutation,
    cyclically_decreasing,
    grassmannian_from_partition,
)
from .partition import (
    as_partition,
    bounded_partitions,
    dominance_leq,
    partitions_of,
    sort_composition,
)
from .permutation import Permutation
from .symfunc import SymFunc, affine_schur, fundamental_quasisym


def _prefix_sums(alpha):
    out = set()
    s = 0
    for a in alpha[:-1]:
        s += a
        out.add(s)
    return out


def _coeff_original(w, alpha):
    """Coefficient of x^alpha: pairs (a in R(w), b weakly increasing with
    content alpha and b strict at ascents of a).

    The b-sequence with a given content is unique, so this counts reduced
    words whose ascent set lies in the block boundaries of alpha.
    """
    boundaries = _prefix_sums([a for a in alpha if a])
    count = 0
    for word in w.reduced_words():
        ascents = {i + 1 for i in range(len(word) - 1) if word[i] < word[i + 1]}
        if ascents <= boundaries:
            count += 1
    return count


@lru_cache(maxsize=None)
def _decreasing_elements(n, k):
    """Decreasing elements of S_n of length k, one per k-subset of 1..n-1."""
    out = []
    for subset in combinations(range(n - 1, 0, -1), k):
        out.append(Permutation.from_word(subset, n))
    return tuple(out)


@lru_cache(maxsize=None)
def _count_decreasing_factorizations(window, alpha):
    """Factorizations w = v_1 ... v_r with v_i decreasing of length alpha_i."""
    w = Permutation(window)
    if not alpha:
        return 1 if w.is_identity() else 0
    k, rest = alpha[0], alpha[1:]
    total = 0
    for v in _decreasing_elements(w.n, k):
        tail = v.inverse() * w
        if tail.length() == w.length() - k:
            total += _count_decreasing_factorizations(tail.embed(w.n).window, rest)
    return total


def _coeff_quasisym_table(w):
    """m-coefficients of sum of L_Des(a) over a in R(w^{-1})."""
    words = w.inverse().reduced_words()
    ell = w.length()
    coeffs = {}
    for la in partitions_of(ell):
        boundaries = _prefix_sums(la)
        count = 0
        for word in words:
            descents = {i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]}
            if descents <= boundaries:
                count += 1
        if count:
            coeffs[la] = count
    return coeffs


def stanley_fn(w, method="decreasing"):
    """The Stanley symmetric function F_w in the m basis.

    ``method`` selects one of the three equivalent definitions: "original"
    (compatible pairs), "decreasing" (decreasing factorizations), or
    "quasisym" (fundamental quasi-symmetric functions on R(w^{-1})).
    """
    ell = w.length()
    if method == "original":
        coeffs = {la: _coeff_original(w, la) for la in partitions_of(ell)}
    elif method == "decreasing":
        coeffs = {
            la: _count_decreasing_factorizations(w.window, la)
            for la in partitions_of(ell)
        }
    elif method == "quasisym":
        coeffs = _coeff_quasisym_table(w)
    else:
        raise ValueError(f"unknown method {method!r}")
    return SymFunc(ell, "m", coeffs)


def stanley_quasisym(w):
    """F_w as an honest quasi-symmetric sum of L_Des(a), a in R(w^{-1})."""
    total = None
    for word in w.inverse().reduced_words():
        descents = {i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]}
        L = fundamental_quasisym(descents, w.length())
        total = L if total is None else total + L
    if total is None:
        total = fundamental_quasisym(set(), 0)
    return total


def check_symmetry_finite(w):
    """Monomial coefficients agree across rearrangements of each partition."""
    ell = w.length()
    for la in partitions_of(ell):
        base = _coeff_original(w, la)
        for alpha in set(_rearrangements(la)):
            if _coeff_original(w, alpha) != base:
                return False
    return True


def _rearrangements(la):
    from itertools import permutations as itp
    return {tuple(p) for p in itp(la)}


def schur_expand(w):
    """F_w in the Schur basis: coefficients count EG-tableaux for w^{-1}."""
    from .tableaux import eg_tableaux_by_shape

    ell = w.length()
    coeffs = {la: len(tabs) for la, tabs in eg_tableaux_by_shape(w.inverse()).items()}
    return SymFunc(ell, "s", coeffs)


# -- affine -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cyclically_decreasing_elements(n, k):
    if k >= n:
        return ()
    return tuple(
        cyclically_decreasing(n, subset) for subset in combinations(range(n), k)
    )


@lru_cache(maxsize=None)
def _count_cyclic_factorizations(n, window, alpha):
    """Factorizations into cyclically decreasing factors of lengths alpha."""
    w = AffinePermutation(n, window)
    if not alpha:
        return 1 if w.is_identity() else 0
    k, rest = alpha[0], alpha[1:]
    ell = w.length()
    total = 0
    for v in _cyclically_decreasing_elements(n, k):
        tail = v.inverse() * w
        if tail.length() == ell - k:
            total += _count_cyclic_factorizations(n, tail.window, rest)
    return total


def affine_stanley(w):
    """The affine Stanley symmetric function F~_w in the m basis."""
    n, ell = w.n, w.length()
    coeffs = {}
    for la in partitions_of(ell, n - 1):
        c = _count_cyclic_factorizations(n, w.window, la)
        if c:
            coeffs[la] = c
    return SymFunc(ell, "m", coeffs)


def affine_stanley_coefficient(w, alpha):
    """Coefficient of x^alpha in F~_w for an arbitrary composition alpha."""
    alpha = tuple(a for a in alpha if a)
    return _count_cyclic_factorizations(w.n, w.window, alpha)


def check_symmetry_affine(w):
    for la in partitions_of(w.length(), w.n - 1):
        base = _count_cyclic_factorizations(w.n, w.window, la)
        for alpha in _rearrangements(la):
            if affine_stanley_coefficient(w, alpha) != base:
                return False
    return True


def affine_schur_expand(w):
    """F~_w in the affine Schur basis, by unitriangular back substitution."""
    n, ell = w.n, w.length()
    f = affine_stanley(w).coeffs
    index = bounded_partitions(n, ell)  # reverse-lex extends dominance
    A = {la: affine_schur(n, la).coeffs for la in index}
    coeffs = {}
    residue = dict(f)
    for la in index:  # dominance-largest first
        c = residue.get(la, 0)
        if c:
            coeffs[la] = c
            for mu, k in A[la].items():
                residue[mu] = residue.get(mu, 0) - c * k
    assert not any(residue.values()), f"affine Schur expansion failed for {w!r}"
    return SymFunc(ell, f"affineSchur({n})", coeffs)


def coproduct_check(w):
    """True iff Delta F~_w equals the sum of F~_u (x) F~_v over length-additive
    factorizations w = u v."""
    from .symfunc import change_basis, coproduct

    lhs = coproduct(affine_stanley(w))
    # enumerate u by length; v = u^{-1} w
    from .affine import elements_of_length

    rhs = {}
    for lu in range(w.length() + 1):
        for u in elements_of_length(w.n, lu):
            v = u.inverse() * w
            if v.length() != w.length() - lu:
                continue
            fu = change_basis(affine_stanley(u), "h")
            fv = change_basis(affine_stanley(v), "h")
            for la, ca in fu.coeffs.items():
                for mu, cb in fv.coeffs.items():
                    rhs[(la, mu)] = rhs.get((la, mu), 0) + ca * cb
    rhs = {k: c for k, c in rhs.items() if c}
    return lhs == rhs


def transition_check(w, r):
    """Verify the transition identity at (w, r) via Stanley symmetric functions."""
    from .tableaux import transition_sides

    left, right, extra = transition_sides(w, r)
    lhs = SymFunc.zero(w.length() + 1)
    for u in left:
        lhs = lhs + stanley_fn(u)
    rhs = SymFunc.zero(w.length() + 1)
    for v in right:
        rhs = rhs + stanley_fn(v)
    if extra is not None:
        rhs = rhs + stanley_fn(extra)
    return lhs == rhs
