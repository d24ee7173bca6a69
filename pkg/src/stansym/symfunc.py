"""Graded symmetric functions with exact integer coefficients.

A SymFunc is a homogeneous element of the ring of symmetric functions (or of
the subring generated by h_1..h_{n-1}, or its dual quotient) written in one
of the bases m, h, e, s, affine Schur, or k-Schur.  All transition matrices
are computed degree by degree; inversions use exact rational elimination and
results are checked to be integral.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itperm

from .partition import (
    as_partition,
    bounded_partitions,
    dominance_leq,
    partitions_of,
    sort_composition,
    sparse_rearrangements,
)

#: basis tags with no rank attached
PLAIN_BASES = ("m", "h", "e", "s")


def _basis_key(basis, n=None):
    if basis in PLAIN_BASES:
        if n is not None:
            raise ValueError(f"basis {basis!r} carries no rank")
        return basis
    if basis in ("affineSchur", "kSchur"):
        if n is None:
            raise ValueError(f"basis {basis!r} needs a rank")
        return f"{basis}({n})"
    raise ValueError(f"unknown basis {basis!r}")


def _parse_basis(tag):
    if tag in PLAIN_BASES:
        return tag, None
    name, _, rest = tag.partition("(")
    return name, int(rest.rstrip(")"))


class SymFunc:
    """Homogeneous symmetric function: coefficients on partitions of one size."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree, basis, coeffs):
        self.degree = int(degree)
        self.basis = basis
        name, n = _parse_basis(basis)
        clean = {}
        for la, c in coeffs.items():
            la = as_partition(la)
            if sum(la) != self.degree:
                raise ValueError(f"term {la} is not of degree {self.degree}")
            if n is not None and la and la[0] > n - 1:
                raise ValueError(f"term {la} is not ({n-1})-bounded")
            if c:
                clean[la] = clean.get(la, 0) + int(c)
        self.coeffs = {la: c for la, c in clean.items() if c}

    @staticmethod
    def monomial(basis, la, coeff=1):
        la = as_partition(la)
        return SymFunc(sum(la), basis, {la: coeff})

    @staticmethod
    def one(basis="m"):
        return SymFunc(0, basis, {(): 1})

    @staticmethod
    def zero(degree, basis="m"):
        return SymFunc(degree, basis, {})

    def __eq__(self, other):
        if self.basis != other.basis or self.degree != other.degree:
            return self.to_m().coeffs == other.to_m().coeffs and self.degree == other.degree
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.basis, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("can only add in matching basis and degree")
        out = dict(self.coeffs)
        for la, c in other.coeffs.items():
            out[la] = out.get(la, 0) + c
        return SymFunc(self.degree, self.basis, out)

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymFunc(self.degree, self.basis, {la: c * other for la, c in self.coeffs.items()})
        a, b = self.to_m(), other.to_m()
        out = {}
        for la, ca in a.coeffs.items():
            for mu, cb in b.coeffs.items():
                for nu, k in _m_product(la, mu).items():
                    out[nu] = out.get(nu, 0) + ca * cb * k
        return SymFunc(self.degree + other.degree, "m", out)

    __rmul__ = __mul__

    def __getitem__(self, la):
        return self.coeffs.get(as_partition(la), 0)

    def is_zero(self):
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs, reverse=True)

    def __repr__(self):
        name, n = _parse_basis(self.basis)
        if not self.coeffs:
            return "0"
        bits = []
        for la in self.support():
            c = self.coeffs[la]
            body = f"{name}{{{','.join(map(str, la)) or ''}}}"
            bits.append(f"{'+' if c >= 0 else '-'} {abs(c) if abs(c) != 1 or not la else ''}{body}")
        return " ".join(bits).lstrip("+ ").strip()

    def to_m(self):
        """Expand in the monomial basis."""
        if self.basis == "m":
            return self
        name, n = _parse_basis(self.basis)
        out = {}
        for la, c in self.coeffs.items():
            for mu, k in _expand_to_m(name, n, la).items():
                out[mu] = out.get(mu, 0) + c * k
        return SymFunc(self.degree, "m", out)

    def change_basis(self, basis, n=None):
        return change_basis(self, basis, n)

    def to_json(self):
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [{"part": list(la), "coeff": self.coeffs[la]} for la in self.support()],
        }

    @staticmethod
    def from_json(data):
        return SymFunc(
            data["degree"], data["basis"],
            {tuple(t["part"]): t["coeff"] for t in data["terms"]},
        )


@lru_cache(maxsize=None)
def _m_product(la, mu):
    """m_la * m_mu in the m basis, by counting additive superpositions."""
    out = {}
    for nu in partitions_of(sum(la) + sum(mu)):
        if len(nu) > len(la) + len(mu):
            continue
        width = len(nu)
        count = 0
        for alpha in sparse_rearrangements(la, width):
            beta = tuple(nu[i] - alpha[i] for i in range(width))
            if any(b < 0 for b in beta):
                continue
            if sort_composition(beta) == mu:
                count += 1
        if count:
            out[nu] = count
    return out


@lru_cache(maxsize=None)
def _h_to_m(k):
    """h_k = sum of all m_la with |la| = k."""
    return {la: 1 for la in partitions_of(k)}


@lru_cache(maxsize=None)
def _product_to_m(parts, factor_to_m):
    """Expand a product of one-part generators into the m basis."""
    if not parts:
        return {(): 1}
    head = factor_to_m(parts[0])
    tail = _product_to_m(parts[1:], factor_to_m)
    out = {}
    for la, ca in head.items():
        for mu, cb in tail.items():
            for nu, k in _m_product(la, mu).items():
                out[nu] = out.get(nu, 0) + ca * cb * k
    return out


def _jacobi_trudi_h(la):
    """s_la as a signed sum of h_mu via the determinant of (h_{la_i + j - i})."""
    la = as_partition(la)
    ell = len(la)
    out = {}
    for sigma in _itperm(range(ell)):
        sign = 1
        for i in range(ell):
            for j in range(i + 1, ell):
                if sigma[i] > sigma[j]:
                    sign = -sign
        degs = [la[i] + sigma[i] - i for i in range(ell)]
        if any(d < 0 for d in degs):
            continue
        mu = tuple(sorted((d for d in degs if d), reverse=True))
        out[mu] = out.get(mu, 0) + sign
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _expand_to_m(name, n, la):
    """Basis element in the m basis, as a dict partition -> int."""
    if name == "m":
        return {la: 1}
    if name == "h":
        return _product_to_m(la, _h_to_m)
    if name == "e":
        return _product_to_m(la, lambda k: {(1,) * k: 1})
    if name == "s":
        out = {}
        for mu, c in _jacobi_trudi_h(la).items():
            for nu, k in _product_to_m(mu, _h_to_m).items():
                out[nu] = out.get(nu, 0) + c * k
        return {nu: c for nu, c in out.items() if c}
    if name == "affineSchur":
        return dict(affine_schur(n, la).coeffs)
    if name == "kSchur":
        return dict(k_schur(n, la).to_m().coeffs)
    raise ValueError(f"unknown basis {name!r}")


def _basis_partitions(name, n, degree):
    if name in ("affineSchur", "kSchur"):
        return bounded_partitions(n, degree)
    return partitions_of(degree)


def change_basis(f, basis, n=None):
    """Rewrite ``f`` in another basis; exact, with integrality enforced.

    Raises ValueError naming the obstructing coefficient when ``f`` does not
    lie in the span of the target basis (e.g. a general symmetric function
    expressed in k-Schur functions).
    """
    target = _basis_key(basis, n)
    if target == f.basis:
        return f
    name, rank = _parse_basis(target)
    fm = f.to_m()
    index = _basis_partitions(name, rank, f.degree)
    columns = {la: _expand_to_m(name, rank, la) for la in index}
    support = sorted({mu for col in columns.values() for mu in col} | set(fm.coeffs), reverse=True)
    # solve sum_la x_la * columns[la] = fm by rational elimination
    rows = [[Fraction(columns[la].get(mu, 0)) for la in index] for mu in support]
    rhs = [Fraction(fm.coeffs.get(mu, 0)) for mu in support]
    sol, residual_row = _solve_exact(rows, rhs)
    if residual_row is not None:
        raise ValueError(
            f"not expressible in basis {target}: obstructing coefficient on "
            f"m_{support[residual_row]}"
        )
    coeffs = {}
    for la, x in zip(index, sol):
        if x.denominator != 1:
            raise ValueError(f"non-integer coefficient {x} on {la} in basis {target}")
        if x:
            coeffs[la] = int(x)
    return SymFunc(f.degree, target, coeffs)


def _solve_exact(rows, rhs):
    """Solve an (over)determined exact linear system by Gaussian elimination.

    Returns (solution, None) or (None, index of an inconsistent row).
    """
    m, k = len(rows), len(rows[0]) if rows else 0
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    order = list(range(m))
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        order[r], order[p] = order[p], order[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(m):
        if all(x == 0 for x in aug[i][:k]) and aug[i][k]:
            return None, order[i]
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = aug[i][k]
    return sol, None


def hall_inner_product(f, g):
    """The Hall inner product, via <h_la, m_mu> = delta."""
    if f.degree != g.degree:
        raise ValueError("inner product requires equal degrees")
    fh = change_basis(f, "h")
    gm = g.to_m()
    return sum(c * gm.coeffs.get(la, 0) for la, c in fh.coeffs.items())


# -- quasi-symmetric functions ------------------------------------------------


class QuasiSymFunc:
    """Homogeneous quasi-symmetric function on the monomial basis M_alpha.

    Coefficients are indexed by compositions with strictly positive parts.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        self.degree = int(degree)
        self.coeffs = {}
        for alpha, c in coeffs.items():
            alpha = tuple(int(a) for a in alpha)
            if any(a <= 0 for a in alpha) or sum(alpha) != self.degree:
                raise ValueError(f"bad composition {alpha} for degree {self.degree}")
            if c:
                self.coeffs[alpha] = self.coeffs.get(alpha, 0) + int(c)
        self.coeffs = {a: c for a, c in self.coeffs.items() if c}

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return QuasiSymFunc(self.degree, out)

    def __eq__(self, other):
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __repr__(self):
        bits = [f"{c}*M{a}" for a, c in sorted(self.coeffs.items())]
        return " + ".join(bits) or "0"

    def monomial_coefficient(self, alpha):
        """Coefficient of x^alpha for a composition with positive parts."""
        return self.coeffs.get(tuple(a for a in alpha if a), 0)

    def is_symmetric(self):
        return all(
            self.coeffs.get(alpha, 0) == self.coeffs.get(sort_composition(alpha), 0)
            for alpha in self.coeffs
        )

    def to_symfunc(self):
        if not self.is_symmetric():
            raise ValueError("not a symmetric function")
        return SymFunc(
            self.degree, "m",
            {a: c for a, c in self.coeffs.items() if a == sort_composition(a)},
        )


def _compositions_of(d):
    if d == 0:
        return [()]
    out = []
    for first in range(1, d + 1):
        out.extend((first,) + rest for rest in _compositions_of(d - first))
    return out


def subset_to_composition(D, n):
    """The composition of n whose partial sums are the elements of D."""
    edges = sorted(D)
    if any(not 1 <= i <= n - 1 for i in edges):
        raise ValueError(f"descent set {sorted(D)} must lie in [1, {n-1}]")
    cuts = [0] + edges + [n]
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def fundamental_quasisym(D, n):
    """The fundamental quasi-symmetric function L_D of degree n."""
    D = frozenset(D)
    subset_to_composition(D, n)  # validates
    coeffs = {}
    for alpha in _compositions_of(n):
        # partial sums of alpha are the possible strict-increase positions
        cuts = set()
        s = 0
        for a in alpha[:-1]:
            s += a
            cuts.add(s)
        if D <= cuts:
            coeffs[alpha] = 1
    return QuasiSymFunc(n, coeffs)


# -- affine Schur and k-Schur bases -------------------------------------------


@lru_cache(maxsize=None)
def affine_schur(n, la):
    """The affine Schur function indexed by an (n-1)-bounded partition, m basis."""
    from .affine import grassmannian_from_partition
    from .stanley import affine_stanley

    la = as_partition(la)
    if la and la[0] > n - 1:
        raise ValueError(f"partition {la} is not ({n-1})-bounded")
    f = affine_stanley(grassmannian_from_partition(n, la))
    assert f.coeffs.get(la) == 1, "affine Schur leading coefficient must be 1"
    return f


@lru_cache(maxsize=None)
def _k_schur_h_table(n, degree):
    """h-expansions of all k-Schur functions of one degree, by duality.

    The matrix A[la][mu] = [m_mu] F~_la is unitriangular for any linear
    extension of dominance, so the inverse-transpose is computed over the
    integers by back substitution.
    """
    index = bounded_partitions(n, degree)  # reverse-lex extends dominance
    A = {la: affine_schur(n, la).coeffs for la in index}
    for la in index:
        assert all(mu == la or (mu in index and dominance_leq(mu, la)) for mu in A[la])
    table = {}
    for la in index:
        # solve sum_mu c[mu] * A[nu][mu] = delta(la, nu) over nu
        c = {}
        for nu in reversed(index):  # from dominance-smallest upward
            val = (1 if nu == la else 0) - sum(
                c[mu] * A[nu].get(mu, 0) for mu in c
            )
            c[nu] = val  # A[nu][nu] == 1
        table[la] = SymFunc(degree, "h", {mu: v for mu, v in c.items() if v})
    # duality sanity: <s^(k)_la, F~_mu> = delta
    for la in index:
        for mu in index:
            got = sum(table[la].coeffs.get(nu, 0) * A[mu].get(nu, 0) for nu in index)
            assert got == (1 if la == mu else 0)
    return table


def k_schur(n, la):
    """The k-Schur function (k = n-1) dual to the affine Schur basis, h basis."""
    la = as_partition(la)
    if la and la[0] > n - 1:
        raise ValueError(f"partition {la} is not ({n-1})-bounded")
    return _k_schur_h_table(n, sum(la))[la]


# -- coproduct ----------------------------------------------------------------


def coproduct(f):
    """Coproduct of a symmetric function, returned in the h (x) h basis.

    The result maps pairs of partitions to integers; Delta(h_k) is the full
    binomial-free splitting sum over j of h_j (x) h_{k-j}.
    """
    fh = change_basis(f, "h")
    out = {}
    for la, c in fh.coeffs.items():
        terms = {((), ()): c}
        for part in la:
            nxt = {}
            for (left, right), cc in terms.items():
                for j in range(part + 1):
                    key = (
                        tuple(sorted(left + ((j,) if j else ()), reverse=True)),
                        tuple(sorted(right + ((part - j,) if part - j else ()), reverse=True)),
                    )
                    nxt[key] = nxt.get(key, 0) + cc
            terms = nxt
        for key, cc in terms.items():
            out[key] = out.get(key, 0) + cc
    return {key: c for key, c in out.items() if c}


def tensor_inner_product(delta, g, h):
    """Pair a coproduct (h (x) h coefficients) against g (x) h."""
    total = 0
    for (la, mu), c in delta.items():
        if sum(la) != g.degree or sum(mu) != h.degree:
            continue
        left = hall_inner_product(SymFunc(sum(la), "h", {la: 1}), g)
        right = hall_inner_product(SymFunc(sum(mu), "h", {mu: 1}), h)
        total += c * left * right
    return total


def reduce_to_bounded(f, n):
    """Image in the quotient by the ideal of m_mu with mu_1 >= n (m basis)."""
    fm = f.to_m()
    return SymFunc(
        f.degree, "m",
        {la: c for la, c in fm.coeffs.items() if not la or la[0] <= n - 1},
    )
