"""The small-torus affine nilHecke ring for the affine symmetric group.

Scalars are exact-integer polynomials in x_1..x_n; elements are finite sums
sum_w p_w A_w with the commutation rule A_i f = (s_i.f) A_i + (d_i f), where
d_i is the divided difference for alpha_i = x_i - x_{i+1} (indices mod n, so
alpha_0 = x_n - x_1).  On top sit the group embedding s_i -> 1 - alpha_i A_i,
the coproduct, the constant-term projection phi_0, the j-basis of the affine
Fomin-Stanley subalgebra, and the kappa projection to the finite algebra.
"""

from fractions import Fraction
from functools import lru_cache

from .affine import AffinePermutation, elements_of_length, translation_element
from .nilcoxeter import NilCoxeterElement, h_element, noncommutative_schur
from .permutation import Permutation


class ScalarPoly:
    """An integer polynomial in x_1..x_n, sparse on exponent tuples."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = int(n)
        clean = {}
        for exp, c in coeffs.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent tuple {exp} for {self.n} variables")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.coeffs = {e: c for e, c in clean.items() if c}

    @staticmethod
    def zero(n):
        return ScalarPoly(n, {})

    @staticmethod
    def const(n, c):
        return ScalarPoly(n, {(0,) * n: c})

    @staticmethod
    def x(n, i):
        """The variable x_i, 1-indexed with index taken mod n."""
        i = (i - 1) % n + 1
        exp = [0] * n
        exp[i - 1] = 1
        return ScalarPoly(n, {tuple(exp): 1})

    @staticmethod
    def alpha(n, i):
        """The root alpha_i = x_i - x_{i+1}, with alpha_0 = x_n - x_1."""
        return ScalarPoly.x(n, i if i != 0 else n) - ScalarPoly.x(n, i + 1)

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return ScalarPoly(self.n, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, k):
        return ScalarPoly(self.n, {e: k * c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ScalarPoly(self.n, out)

    def __eq__(self, other):
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * self.n, 0)

    def degree(self):
        return max((sum(e) for e in self.coeffs), default=0)

    def swap(self, a, b):
        """Exchange the variables x_a and x_b (1-indexed)."""
        out = {}
        for e, c in self.coeffs.items():
            e = list(e)
            e[a - 1], e[b - 1] = e[b - 1], e[a - 1]
            out[tuple(e)] = c
        return ScalarPoly(self.n, out)

    def permute_variables(self, target):
        """Send x_j to x_{target(j)} for a bijection ``target`` on 1..n."""
        out = {}
        for e, c in self.coeffs.items():
            new = [0] * self.n
            for j in range(1, self.n + 1):
                new[target(j) - 1] += e[j - 1]
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return ScalarPoly(self.n, out)

    def divided_difference(self, i, affine=True):
        """(f - s_i.f) / alpha_i, exact over the integers.

        The quotient of an alpha-antisymmetric g by x_a - x_b is computed
        termwise from x_a^k M = (x_a^k - x_b^k) M + x_b^k M.
        """
        if affine:
            i = i % self.n
            a, b = (i, i + 1) if i != 0 else (self.n, 1)
        else:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"finite divided difference needs 1 <= i <= {self.n - 1}")
            a, b = i, i + 1
        g = self - self.swap(a, b)
        out = {}
        for e, c in g.coeffs.items():
            k = e[a - 1]
            rest = list(e)
            rest[a - 1] = 0
            for j in range(k):
                term = rest[:]
                term[a - 1] += j
                term[b - 1] += k - 1 - j
                key = tuple(term)
                out[key] = out.get(key, 0) + c
        return ScalarPoly(self.n, out)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = [f"x{i}" for i in range(1, self.n + 1)]
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}")
                for i, k in enumerate(e) if k
            )
            parts.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(parts)

    def to_json(self):
        return [{"exponents": list(e), "coeff": c} for e, c in sorted(self.coeffs.items())]


def _level_zero_target(w):
    """The finite part of an affine permutation, acting on variable indices."""
    return lambda j: (w(j) - 1) % w.n + 1


class NilHeckeElement:
    """A finite sum of (polynomial scalar) * A_w over affine permutations."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = int(n)
        clean = {}
        for w, p in coeffs.items():
            if not isinstance(w, AffinePermutation) or w.n != self.n:
                raise ValueError(f"expected affine permutations of rank {self.n}: {w!r}")
            if isinstance(p, int):
                p = ScalarPoly.const(self.n, p)
            if not p.is_zero():
                clean[w] = clean.get(w, ScalarPoly.zero(self.n)) + p
        self.coeffs = {w: p for w, p in clean.items() if not p.is_zero()}

    @staticmethod
    def zero(n):
        return NilHeckeElement(n, {})

    @staticmethod
    def one(n):
        return NilHeckeElement(n, {AffinePermutation.identity(n): 1})

    @staticmethod
    def from_scalar(p):
        return NilHeckeElement(p.n, {AffinePermutation.identity(p.n): p})

    @staticmethod
    def basis(w, p=1):
        return NilHeckeElement(w.n, {w: p})

    @staticmethod
    def from_nilcoxeter(a):
        if not a.affine:
            raise ValueError("only affine nilCoxeter elements embed here")
        return NilHeckeElement(a.n, dict(a.coeffs))

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, p in other.coeffs.items():
            out[w] = out.get(w, ScalarPoly.zero(self.n)) + p
        return NilHeckeElement(self.n, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, k):
        """Left multiplication by an integer or a scalar polynomial."""
        return NilHeckeElement(self.n, {w: k * p for w, p in self.coeffs.items()})

    def scalar_left(self, p):
        return NilHeckeElement(self.n, {w: p * q for w, q in self.coeffs.items()})

    def __eq__(self, other):
        return self.n == other.n and self.coeffs == other.coeffs

    def is_zero(self):
        return not self.coeffs

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out = NilHeckeElement.zero(self.n)
        for u, p in self.coeffs.items():
            t = other
            for i in reversed(u.reduced_words()[0]):
                t = _letter_times(i, t)
            out = out + t.scalar_left(p)
        return out

    def phi0(self):
        """Constant-term projection into the affine nilCoxeter algebra."""
        return NilCoxeterElement(
            self.n, True, {w: p.constant_term() for w, p in self.coeffs.items()}
        )

    def __repr__(self):
        if not self.coeffs:
            return "NilHeckeElement(0)"
        parts = []
        for w in sorted(self.coeffs, key=lambda u: (u.length(), u.window)):
            word = "".join(map(str, w.reduced_words()[0])) or "id"
            parts.append(f"({self.coeffs[w]!r})*A[{word}]")
        return " + ".join(parts)

    def to_json(self):
        return [
            {"window": list(w.window), "poly": p.to_json()}
            for w, p in sorted(self.coeffs.items(), key=lambda t: (t[0].length(), t[0].window))
        ]


def _letter_times(i, elem):
    """A_i times an element in normal form."""
    n = elem.n
    i = i % n
    a, b = (i, i + 1) if i != 0 else (n, 1)
    si = AffinePermutation.simple(i, n)
    out = NilHeckeElement.zero(n)
    for v, q in elem.coeffs.items():
        siv = si * v
        if siv.length() == v.length() + 1:
            out = out + NilHeckeElement.basis(siv, q.swap(a, b))
        out = out + NilHeckeElement.basis(v, q.divided_difference(i))
    return out


def commute_past(i, f):
    """A_i * f in normal form: (s_i.f) A_i + (d_i f)."""
    return _letter_times(i, NilHeckeElement.from_scalar(f))


def embed_group(w):
    """The image of an affine permutation under s_i -> 1 - alpha_i A_i."""
    n = w.n
    out = NilHeckeElement.one(n)
    for i in w.reduced_words()[0]:
        si = NilHeckeElement.one(n) - NilHeckeElement.basis(
            AffinePermutation.simple(i, n), ScalarPoly.alpha(n, i)
        )
        out = out * si
    return out


def _affine_transposition(n, i, j):
    """The reflection exchanging i and j (and all their n-shifts)."""
    if (j - i) % n == 0:
        raise ValueError("not a reflection: indices congruent mod n")
    window = list(range(1, n + 1))
    for k in range(1, n + 1):
        if (k - i) % n == 0:
            window[k - 1] = j + (k - i)
        elif (k - j) % n == 0:
            window[k - 1] = i + (k - j)
    return AffinePermutation(n, window)


def chevalley(w, f):
    """A_w * f for a linear scalar f, by the Chevalley formula:
    (w.f) A_w + sum <alpha^vee, f> A_{w s_alpha} over length-lowering
    positive-root reflections."""
    n = w.n
    if any(sum(e) != 1 for e in f.coeffs):
        raise ValueError("Chevalley formula needs a homogeneous linear scalar")
    coeff = [0] * n
    for e, c in f.coeffs.items():
        coeff[e.index(1)] = c
    ell = w.length()
    out = NilHeckeElement.basis(w, f.permute_variables(_level_zero_target(w)))
    bound = n * (ell + 2)
    for i in range(1, n + 1):
        for j in range(i + 1, i + bound + 1):
            if (j - i) % n == 0:
                continue
            t = _affine_transposition(n, i, j)
            wt = w * t
            if wt.length() != ell - 1:
                continue
            pairing = coeff[(i - 1) % n] - coeff[(j - 1) % n]
            if pairing:
                out = out + pairing * NilHeckeElement.basis(wt)
    return out


# -- coproduct ----------------------------------------------------------------


def _tensor_clean(T):
    return {w: L for w, L in T.items() if not L.is_zero()}


def _tensor_letter_act(i, T):
    """A_i acting on a tensor {right key w: left NilHeckeElement}:
    A_i.(m (x) n) = A_i m (x) n + m (x) A_i n - alpha_i A_i m (x) A_i n.

    Scalars stay in the left factor, so this representation is canonical.
    """
    if not T:
        return {}
    n = next(iter(T.values())).n
    si = AffinePermutation.simple(i, n)
    alpha = ScalarPoly.alpha(n, i)
    out = {}

    def put(w, L):
        out[w] = out.get(w, NilHeckeElement.zero(n)) + L

    for w, L in T.items():
        aL = _letter_times(i, L)
        put(w, aL)
        siw = si * w
        if siw.length() == w.length() + 1:
            put(siw, L)
            put(siw, -1 * aL.scalar_left(alpha))
    return _tensor_clean(out)


def tensor_act(a, T):
    """Left action of a nilHecke element on a tensor, per the coproduct
    module structure."""
    n = a.n
    out = {}
    for u, p in a.coeffs.items():
        cur = T
        for i in reversed(u.reduced_words()[0]):
            cur = _tensor_letter_act(i, cur)
        for w, L in cur.items():
            out[w] = out.get(w, NilHeckeElement.zero(n)) + L.scalar_left(p)
    return _tensor_clean(out)


def coproduct(a, word_choice=None):
    """The coproduct Delta(a) = a.(1 (x) 1), as a dict (v, w) -> ScalarPoly
    with all scalars collected in the left factor.

    ``word_choice`` picks the reduced word used per basis term, for
    word-independence tests.
    """
    n = a.n
    e = AffinePermutation.identity(n)
    unit = {e: NilHeckeElement.one(n)}
    total = {}
    for u, p in a.coeffs.items():
        words = u.reduced_words()
        word = words[0] if word_choice is None else words[word_choice % len(words)]
        cur = unit
        for i in reversed(word):
            cur = _tensor_letter_act(i, cur)
        for w, L in cur.items():
            for v, q in L.coeffs.items():
                key = (v, w)
                total[key] = total.get(key, ScalarPoly.zero(n)) + p * q
    return {k: q for k, q in total.items() if not q.is_zero()}


def tensor_phi0(delta):
    """(phi0 (x) phi0) of a tensor, as a dict (v, w) -> int."""
    out = {}
    for (v, w), p in delta.items():
        c = p.constant_term()
        if c:
            out[(v, w)] = c
    return out


def hopf_generator_check(n, k):
    """True iff (phi0 (x) phi0) Delta(h~_k) = sum_j h~_j (x) h~_{k-j}."""
    hk = NilHeckeElement.from_nilcoxeter(h_element(n, k, affine=True))
    lhs = tensor_phi0(coproduct(hk))
    rhs = {}
    for j in range(k + 1):
        left = h_element(n, j, affine=True)
        right = h_element(n, k - j, affine=True)
        for v, cv in left.coeffs.items():
            for w, cw in right.coeffs.items():
                rhs[(v, w)] = rhs.get((v, w), 0) + cv * cw
    return lhs == {k2: c for k2, c in rhs.items() if c}


# -- affine Fomin-Stanley subalgebra and the j-basis --------------------------


def phi0(a):
    if isinstance(a, NilHeckeElement):
        return a.phi0()
    if isinstance(a, ScalarPoly):
        return a.constant_term()
    raise TypeError(f"cannot project {a!r}")


def _phi0_a_x(x, i):
    """phi0(A_x x_i) as a nilCoxeter element; the degree-1 head vanishes."""
    return chevalley(x, ScalarPoly.x(x.n, i)).phi0()


def _j_basis_by_solver(n, w):
    """The unique integer combination of {A_x : l(x) = l(w)} whose
    Grassmannian part is A_w and which phi0-commutes with every x_i."""
    from .symfunc import _solve_exact

    ell = w.length()
    index = list(elements_of_length(n, ell))
    rows = []
    rhs = []
    # phi0(a x_i) = 0 for each i, coordinatewise over length ell-1 elements
    columns = {x: [_phi0_a_x(x, i) for i in range(1, n + 1)] for x in index}
    support = sorted(
        {(i, y) for x in index for i in range(n) for y in columns[x][i].coeffs},
        key=lambda t: (t[0], t[1].window),
    )
    for i, y in support:
        rows.append([Fraction(columns[x][i].coeffs.get(y, 0)) for x in index])
        rhs.append(Fraction(0))
    # normalization on the Grassmannian terms
    for x in index:
        if x.is_grassmannian():
            rows.append([Fraction(1 if z == x else 0) for z in index])
            rhs.append(Fraction(1 if x == w else 0))
    sol, bad = _solve_exact(rows, rhs)
    if bad is not None:
        raise AssertionError(f"j-basis system inconsistent for {w!r}")
    if any(c.denominator != 1 for c in sol):
        raise AssertionError(f"j-basis solution not integral for {w!r}")
    return NilCoxeterElement(n, True, {x: int(c) for x, c in zip(index, sol)})


def j_basis_element(n, w, cross_check=True):
    """The j-basis element of the affine Fomin-Stanley subalgebra for a
    Grassmannian w, via the noncommutative k-Schur substitution.

    With ``cross_check`` the independent linear-solver construction must
    agree, A_w must be the unique Grassmannian term, and phi0(a x_i) must
    vanish for every i.
    """
    if not w.is_grassmannian():
        raise ValueError(f"{w!r} is not Grassmannian")
    a = noncommutative_schur(n, w.shape(), affine=True)
    if cross_check:
        grass = [x for x in a.coeffs if x.is_grassmannian()]
        if grass != [w] or a.coeffs[w] != 1:
            raise AssertionError(f"Grassmannian part of j-element for {w!r} is wrong")
        for i in range(1, n + 1):
            ax = NilCoxeterElement.zero(n, True)
            for x, c in a.coeffs.items():
                ax = ax + c * _phi0_a_x(x, i)
            if not ax.is_zero():
                raise AssertionError(f"phi0(a x_{i}) != 0 for {w!r}")
        if _j_basis_by_solver(n, w) != a:
            raise AssertionError(f"j-basis constructions disagree for {w!r}")
    return a


def kappa(a):
    """Project an affine nilCoxeter element onto the finite subalgebra by
    keeping the terms supported on S_n."""
    if not a.affine:
        raise ValueError("kappa expects an affine nilCoxeter element")
    out = {}
    for w, c in a.coeffs.items():
        if w.is_finite():
            out[w.to_finite()] = c
    return NilCoxeterElement(a.n, False, out)


def translation_centralizer_check(n, la):
    """True iff sum over the Weyl orbit of A_{t_mu} commutes with every x_i."""
    from .affine import CorootVector

    a = NilHeckeElement.zero(n)
    for mu in la.orbit():
        a = a + NilHeckeElement.basis(translation_element(CorootVector(mu)))
    for i in range(1, n + 1):
        xi = ScalarPoly.x(n, i)
        if not (a * NilHeckeElement.from_scalar(xi) - a.scalar_left(xi)).is_zero():
            return False
    return True
