"""The affine symmetric group S~_n in window notation.

An element is the bijection w of the integers with w(i + n) = w(i) + n and
window sum n(n+1)/2; it is stored by its window [w(1), ..., w(n)].
Generator indices are residues mod n, with s_0 the affine generator.
Requires n >= 3 (the rank-2 affine group has an infinite braid relation and
is rejected).
"""

from functools import lru_cache

from .partition import as_partition, conjugate, sort_composition
from .permutation import Permutation


class AffinePermutation:
    __slots__ = ("window", "n")

    def __init__(self, n, window):
        n = int(n)
        if n < 3:
            raise ValueError("affine symmetric group requires rank n >= 3")
        window = tuple(int(x) for x in window)
        if len(window) != n:
            raise ValueError(f"window must have length {n}: {window}")
        if sorted(x % n for x in window) != list(range(n)):
            raise ValueError(f"window residues must cover Z/{n}Z: {window}")
        if sum(window) != n * (n + 1) // 2:
            raise ValueError(f"window must sum to {n*(n+1)//2}: {window}")
        self.window = window
        self.n = n

    @staticmethod
    def identity(n):
        return AffinePermutation(n, range(1, n + 1))

    @staticmethod
    def simple(i, n):
        return AffinePermutation.identity(n).right_mult_generator(i)

    @staticmethod
    def from_word(word, n):
        w = AffinePermutation.identity(n)
        for i in word:
            w = w.right_mult_generator(i)
        return w

    @staticmethod
    def from_finite(w, n=None):
        """Image of a finite permutation under S_n -> S~_n."""
        if n is None:
            n = max(w.n, 3)
        return AffinePermutation(n, w.embed(n).window)

    def __call__(self, i):
        """Value at any integer, via w(i + n) = w(i) + n."""
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def right_mult_generator(self, i):
        """w * s_i: swap the values in positions = i, i+1 (mod n)."""
        i = i % self.n
        w = list(self.window)
        if 1 <= i <= self.n - 1:
            w[i - 1], w[i] = w[i], w[i - 1]
        else:  # s_0 swaps positions 0 and 1, i.e. n and n+1 shifted
            w[0], w[-1] = w[-1] - self.n, w[0] + self.n
        return AffinePermutation(self.n, w)

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return AffinePermutation(self.n, (self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self):
        out = [0] * self.n
        for i in range(1, self.n + 1):
            v = self(i)
            r = (v - 1) % self.n
            out[r] = i - (v - (r + 1))
        return AffinePermutation(self.n, out)

    def __eq__(self, other):
        return self.n == other.n and self.window == other.window

    def __hash__(self):
        return hash((self.n, self.window))

    def __repr__(self):
        return f"AffinePermutation({self.n}, {list(self.window)})"

    def is_identity(self):
        return self.window == tuple(range(1, self.n + 1))

    def is_finite(self):
        """True iff the element lies in the finite subgroup S_n."""
        return sorted(self.window) == list(range(1, self.n + 1))

    def to_finite(self):
        if not self.is_finite():
            raise ValueError(f"{self!r} is not in the finite subgroup")
        return Permutation(self.window)

    def code(self):
        """c_i = #{j > i : w(j) < w(i)} for i = 1..n; has at least one zero."""
        out = []
        for i in range(1, self.n + 1):
            wi = self(i)
            total = 0
            for r in range(1, self.n + 1):
                # positions j = r + t*n with j > i and w(j) < w(i)
                wr = self(r)
                # t > (i - r)/n  and  t < (wi - wr)/n
                tmin = (i - r) // self.n + 1
                # largest t with wr + t*n < wi
                tmax = -((wr - wi) // self.n) - 1
                if tmax >= tmin:
                    total += tmax - tmin + 1
            out.append(total)
        return tuple(out)

    def length(self):
        return sum(self.code())

    def shape(self):
        """The partition conjugate to the sorted code of the inverse."""
        return conjugate(sort_composition(self.inverse().code()))

    def right_descents(self):
        w = self.window
        out = [i for i in range(1, self.n) if w[i - 1] > w[i]]
        if w[self.n - 1] > w[0] + self.n:
            out.append(0)
        return sorted(out)

    def reduced_words(self):
        return _affine_reduced_words(self.n, self.window)

    def is_grassmannian(self):
        w = self.window
        return all(w[i] < w[i + 1] for i in range(self.n - 1))

    def to_json(self):
        return {"n": self.n, "window": list(self.window)}

    @staticmethod
    def from_json(data):
        return AffinePermutation(data["n"], data["window"])


@lru_cache(maxsize=None)
def _affine_reduced_words(n, window):
    w = AffinePermutation(n, window)
    if w.is_identity():
        return ((),)
    words = []
    for i in w.right_descents():
        shorter = w.right_mult_generator(i)
        words.extend(word + (i,) for word in _affine_reduced_words(n, shorter.window))
    return tuple(sorted(words))


def apply_generator(w, i):
    """Right multiplication w * s_i."""
    return w.right_mult_generator(i)


def lambda_of(w):
    """The partition conjugate to the decreasing sort of the inverse's code."""
    return w.shape()


def cyclically_decreasing_word(n, subset):
    """A cyclically decreasing word using exactly the generators in ``subset``.

    Within each cyclic run of consecutive residues the word descends, which
    is the unique constraint: i+1 must precede i whenever both appear.
    """
    subset = frozenset(i % n for i in subset)
    if len(subset) >= n:
        raise ValueError("cyclically decreasing elements use a strict subset of Z/nZ")
    word = []
    seen = set()
    for start in sorted(subset):
        if start in seen or (start - 1) % n in subset:
            continue
        # start is the bottom of a cyclic run; walk to its top
        run = [start]
        while (run[-1] + 1) % n in subset:
            run.append((run[-1] + 1) % n)
        seen.update(run)
        word.extend(reversed(run))
    return tuple(word)


def cyclically_decreasing(n, subset):
    """The unique cyclically decreasing element with support ``subset``."""
    return AffinePermutation.from_word(cyclically_decreasing_word(n, subset), n)


def is_cyclically_decreasing_word(word, n):
    word = [i % n for i in word]
    if len(set(word)) != len(word) or len(word) >= n:
        return False
    pos = {a: i for i, a in enumerate(word)}
    return all((a + 1) % n not in pos or pos[(a + 1) % n] < pos[a] for a in word)


class CorootVector:
    """An element of the coroot lattice: n integer coordinates summing to 0."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(int(x) for x in coords)
        if sum(coords) != 0:
            raise ValueError(f"coroot coordinates must sum to 0: {coords}")
        self.coords = coords

    @property
    def n(self):
        return len(self.coords)

    def __add__(self, other):
        return CorootVector(a + b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return CorootVector(-a for a in self.coords)

    def __eq__(self, other):
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"CorootVector({list(self.coords)})"

    def permuted(self, w):
        """Action of a finite permutation: (w . la)_{w(i)} = la_i."""
        out = [0] * self.n
        for i in range(self.n):
            out[w(i + 1) - 1] = self.coords[i]
        return CorootVector(out)

    def orbit(self):
        """The S_n orbit, as a sorted list of distinct vectors."""
        from itertools import permutations as itp
        return sorted({tuple(p) for p in itp(self.coords)})

    def is_dominant(self):
        return all(self.coords[i] >= self.coords[i + 1] for i in range(self.n - 1))

    def is_antidominant(self):
        return all(self.coords[i] <= self.coords[i + 1] for i in range(self.n - 1))


def theta_coroot(n):
    """The highest coroot (1, 0, ..., 0, -1)."""
    return CorootVector((1,) + (0,) * (n - 2) + (-1,))


def translation_element(la):
    """t_la = [1 + n*la_1, ..., n + n*la_n]."""
    n = la.n
    return AffinePermutation(n, (i + n * la.coords[i - 1] for i in range(1, n + 1)))


def length_via_formula(w, la):
    """Length of w * t_la from the root-pairing formula.

    Sums |<la, a_{ij}> + chi(w . a_{ij})| over finite positive roots, where
    chi is 0 on positive roots and 1 on negative ones.
    """
    n = la.n
    w = w.embed(n)
    total = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pairing = la.coords[i - 1] - la.coords[j - 1]
            chi = 0 if w(i) < w(j) else 1
            total += abs(pairing + chi)
    return total


@lru_cache(maxsize=None)
def elements_of_length(n, length):
    """All elements of S~_n of the given length, sorted by window."""
    if length == 0:
        return (AffinePermutation.identity(n),)
    out = set()
    for w in elements_of_length(n, length - 1):
        for i in range(n):
            longer = w.right_mult_generator(i)
            if longer.length() == length:
                out.add(longer)
    return tuple(sorted(out, key=lambda w: w.window))


def grassmannian_from_partition(n, la):
    """The unique affine Grassmannian element w with shape(w) = la."""
    la = as_partition(la)
    if la and la[0] > n - 1:
        raise ValueError(f"partition {la} is not ({n-1})-bounded")
    return _grassmannian_table(n, sum(la))[la]


@lru_cache(maxsize=None)
def _grassmannian_table(n, degree):
    table = {}
    for w in elements_of_length(n, degree):
        if w.is_grassmannian():
            table[w.shape()] = w
    return table
