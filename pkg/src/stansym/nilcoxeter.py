"""Finite and affine nilCoxeter algebras.

Elements are integer combinations of basis elements A_w indexed by group
elements; products are length-additive (A_w A_v = A_{wv} when lengths add,
zero otherwise).  On top of this sit the Fomin-Stanley elements h_k, their
affine analogues, the noncommutative (k-)Schur functions, and the
commutative-subalgebra experiments.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .affine import AffinePermutation, cyclically_decreasing
from .partition import as_partition, partitions_inside, staircase
from .permutation import Permutation
from .symfunc import _jacobi_trudi_h, k_schur


class NilCoxeterElement:
    """An integer combination of A_w, finite or affine of a fixed rank."""

    __slots__ = ("n", "affine", "coeffs")

    def __init__(self, n, affine, coeffs):
        self.n = int(n)
        self.affine = bool(affine)
        clean = {}
        for w, c in coeffs.items():
            c = int(c)
            if not c:
                continue
            w = self._check_key(w)
            clean[w] = clean.get(w, 0) + c
        self.coeffs = {w: c for w, c in clean.items() if c}

    def _check_key(self, w):
        if self.affine:
            if not isinstance(w, AffinePermutation) or w.n != self.n:
                raise ValueError(f"expected an affine permutation of rank {self.n}: {w!r}")
            return w
        if not isinstance(w, Permutation) or w.n > self.n:
            raise ValueError(f"expected a permutation in S_{self.n}: {w!r}")
        return w.embed(self.n)

    @staticmethod
    def zero(n, affine=False):
        return NilCoxeterElement(n, affine, {})

    @staticmethod
    def one(n, affine=False):
        e = AffinePermutation.identity(n) if affine else Permutation.identity(n)
        return NilCoxeterElement(n, affine, {e: 1})

    @staticmethod
    def basis(w, n=None):
        if isinstance(w, AffinePermutation):
            return NilCoxeterElement(w.n, True, {w: 1})
        return NilCoxeterElement(n if n is not None else w.n, False, {w: 1})

    def _compat(self, other):
        if self.n != other.n or self.affine != other.affine:
            raise ValueError("mixed nilCoxeter algebras")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return NilCoxeterElement(self.n, self.affine, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, k):
        return NilCoxeterElement(self.n, self.affine, {w: k * c for w, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        self._compat(other)
        out = {}
        for u, cu in self.coeffs.items():
            lu = u.length()
            for v, cv in other.coeffs.items():
                uv = u * v
                if uv.length() == lu + v.length():
                    out[uv] = out.get(uv, 0) + cu * cv
        return NilCoxeterElement(self.n, self.affine, out)

    def __eq__(self, other):
        return (self.n, self.affine, self.coeffs) == (other.n, other.affine, other.coeffs)

    def is_zero(self):
        return not self.coeffs

    def graded_component(self, d):
        return NilCoxeterElement(
            self.n, self.affine, {w: c for w, c in self.coeffs.items() if w.length() == d}
        )

    def degrees(self):
        return sorted({w.length() for w in self.coeffs})

    def inner_product(self, other):
        """<A_w, A_v> = delta, extended bilinearly."""
        self._compat(other)
        return sum(c * other.coeffs.get(w, 0) for w, c in self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return "NilCoxeterElement(0)"
        parts = []
        for w in sorted(self.coeffs, key=lambda u: (u.length(), u.window)):
            c = self.coeffs[w]
            word = "".join(map(str, w.reduced_words()[0])) or "id"
            parts.append(f"{c}*A[{word}]" if c != 1 else f"A[{word}]")
        return " + ".join(parts)

    def to_json(self):
        return [
            {
                "window": list(w.window),
                "word": list(w.reduced_words()[0]),
                "coeff": c,
            }
            for w, c in sorted(self.coeffs.items(), key=lambda p: (p[0].length(), p[0].window))
        ]


def h_element(n, k, affine=False):
    """The Fomin-Stanley element h_k: the sum of A_w over (cyclically)
    decreasing w of length k."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"h_{k} undefined for rank {n}: need 0 <= k <= {n - 1}")
    if affine:
        coeffs = {
            cyclically_decreasing(n, subset): 1
            for subset in combinations(range(n), k)
        }
    else:
        coeffs = {
            Permutation.from_word(subset, n): 1
            for subset in combinations(range(n - 1, 0, -1), k)
        }
    return NilCoxeterElement(n, affine, coeffs)


def product_expansion_check(n):
    """True iff sum_k h_k t^k = (1 + t A_{n-1}) ... (1 + t A_1)."""
    poly = [NilCoxeterElement.one(n)]  # t-coefficients
    for i in range(n - 1, 0, -1):
        a = NilCoxeterElement.basis(Permutation.simple(i, n), n)
        shifted = [NilCoxeterElement.zero(n)] + [p * a for p in poly]
        poly = [
            (poly[d] if d < len(poly) else NilCoxeterElement.zero(n)) + shifted[d]
            for d in range(len(shifted))
        ]
    expected = [h_element(n, k) for k in range(n)]
    poly += [NilCoxeterElement.zero(n)] * (len(expected) - len(poly))
    return poly[: len(expected)] == expected and all(p.is_zero() for p in poly[len(expected):])


def noncommutative_schur(n, la, affine=False):
    """s_la (finite) or the noncommutative k-Schur s^(k)_la (affine):
    the h-expansion of the symmetric function with h_k replaced by h-elements.
    """
    la = as_partition(la)
    if affine:
        expansion = k_schur(n, la).coeffs
    else:
        expansion = _jacobi_trudi_h(la)
    out = NilCoxeterElement.zero(n, affine)
    for mu, c in expansion.items():
        if not affine and any(part >= n for part in mu):
            continue  # h_k = 0 for k >= n in the finite algebra
        term = c * NilCoxeterElement.one(n, affine)
        for part in mu:
            term = term * h_element(n, part, affine)
        out = out + term
    return out


def divided_difference_action(a, f):
    """Act on a polynomial by divided differences, A_i acting as the
    operator (f - s_i.f) / (x_i - x_{i+1})."""
    if a.affine:
        raise ValueError("divided difference action is for the finite algebra")
    from .nilhecke import ScalarPoly

    total = ScalarPoly.zero(a.n)
    for w, c in a.coeffs.items():
        g = f
        for i in reversed(w.reduced_words()[0]):
            g = g.divided_difference(i, affine=False)
        total = total + c * g
    return total


def _coordinates(elements):
    """Rows of A_w-coordinates spanning a common support, plus the support."""
    support = sorted(
        {w for a in elements for w in a.coeffs},
        key=lambda w: (w.length(), w.window),
    )
    rows = [[Fraction(a.coeffs.get(w, 0)) for a in elements] for w in support]
    return rows, support


def expand_in_span(basis, target):
    """Integer coordinates of ``target`` in the span of ``basis``, or None."""
    from .symfunc import _solve_exact

    rows, support = _coordinates(list(basis) + [target])
    lhs = [row[:-1] for row in rows]
    rhs = [row[-1] for row in rows]
    if not support:
        return [0] * len(basis)
    sol, bad = _solve_exact(lhs, rhs)
    if bad is not None or any(x.denominator != 1 for x in sol):
        return None
    return [int(x) for x in sol]


def _root_poset_ideal_series(n):
    """Coefficient list of sum_I t^|I| over upper order ideals of the type-A
    root poset: alpha_{ij} <= alpha_{kl} iff [i,j] contains [k,l]."""
    roots = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    counts = [0] * (len(roots) + 1)
    for mask in range(1 << len(roots)):
        ideal = [roots[t] for t in range(len(roots)) if mask >> t & 1]
        ok = all(
            (k, l) in ideal
            for (i, j) in ideal
            for (k, l) in roots
            if k <= i and j <= l
        )
        if ok:
            counts[len(ideal)] += 1
    return counts


def conjecture_52_report(n):
    """Experimental evidence for the commutative-subalgebra conjecture.

    Returns a dict with: h-commutativity, the s_la basis and its linear
    independence, the Hilbert series against the root-poset order-ideal
    count, coefficient nonnegativity, and the s-basis structure constants.
    """
    hs = [h_element(n, k) for k in range(n)]
    h_commutes = all(
        hs[k] * hs[l] == hs[l] * hs[k] for k in range(n) for l in range(k + 1, n)
    )

    shapes = partitions_inside(staircase(n - 1))
    elements = {la: noncommutative_schur(n, la) for la in shapes}

    max_deg = n * (n - 1) // 2
    hilbert = [0] * (max_deg + 1)
    for la in shapes:
        hilbert[sum(la)] += 1
    ideal_series = _root_poset_ideal_series(n)

    rows, _ = _coordinates([elements[la] for la in shapes])
    independent = _rank(rows) == len(shapes)

    nonnegative = all(
        c >= 0 for a in elements.values() for c in a.coeffs.values()
    )

    structure = {}
    integral = True
    structure_nonnegative = True
    for la in shapes:
        for mu in shapes:
            d = sum(la) + sum(mu)
            prod = elements[la] * elements[mu]
            basis_shapes = [nu for nu in shapes if sum(nu) == d]
            coords = expand_in_span([elements[nu] for nu in basis_shapes], prod)
            if coords is None:
                integral = False
                structure[(la, mu)] = None
                continue
            entry = {nu: c for nu, c in zip(basis_shapes, coords) if c}
            structure[(la, mu)] = entry
            if any(c < 0 for c in entry.values()):
                structure_nonnegative = False

    return {
        "n": n,
        "h_commutes": h_commutes,
        "dimension": len(shapes),
        "schur_elements": elements,
        "linearly_independent": independent,
        "hilbert_series": hilbert,
        "root_poset_ideal_series": ideal_series,
        "hilbert_matches": hilbert == ideal_series,
        "nonnegative": nonnegative,
        "structure_constants": structure,
        "structure_constants_integral": integral,
        "structure_constants_nonnegative": structure_nonnegative,
    }


def _rank(rows):
    if not rows:
        return 0
    m, k = len(rows), len(rows[0])
    a = [row[:] for row in rows]
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r
