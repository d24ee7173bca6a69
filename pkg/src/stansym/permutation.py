"""The finite symmetric group S_n in one-line notation.

Products compose as functions: ``(w * v)(i) = w(v(i))``.  Reduced words are
sequences of generator indices ``1 .. n-1``; the word ``i_1 i_2 ... i_l``
stands for the product ``s_{i_1} s_{i_2} ... s_{i_l}``.
"""

from functools import lru_cache
from itertools import permutations as _itpermutations

from .partition import conjugate, sort_composition


class Permutation:
    __slots__ = ("window", "n")

    def __init__(self, window):
        window = tuple(int(x) for x in window)
        n = len(window)
        if sorted(window) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {window}")
        self.window = window
        self.n = n

    @staticmethod
    def identity(n):
        return Permutation(range(1, n + 1))

    @staticmethod
    def simple(i, n):
        """The simple transposition s_i in S_n."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    @staticmethod
    def longest(n):
        return Permutation(range(n, 0, -1))

    @staticmethod
    def from_word(word, n=None):
        """Product s_{i_1} ... s_{i_l} for a word over 1..n-1."""
        word = tuple(word)
        if n is None:
            n = max(word, default=0) + 1
        w = Permutation.identity(n)
        for i in word:
            w = w * Permutation.simple(i, n)
        return w

    def __call__(self, i):
        """Value as a bijection of the positive integers (stable embedding)."""
        return self.window[i - 1] if 1 <= i <= self.n else i

    def embed(self, n):
        """Image under the natural embedding into S_n."""
        if n < self.n:
            raise ValueError(f"cannot embed S_{self.n} into S_{n}")
        return Permutation(self.window + tuple(range(self.n + 1, n + 1)))

    def __mul__(self, other):
        n = max(self.n, other.n)
        w, v = self.embed(n), other.embed(n)
        return Permutation(w.window[v.window[i] - 1] for i in range(n))

    def inverse(self):
        out = [0] * self.n
        for i, x in enumerate(self.window):
            out[x - 1] = i + 1
        return Permutation(out)

    def __eq__(self, other):
        n = max(self.n, other.n)
        return self.embed(n).window == other.embed(n).window

    def __hash__(self):
        w = self.window
        while w and w[-1] == len(w):
            w = w[:-1]
        return hash(w)

    def __repr__(self):
        return f"Permutation({list(self.window)})"

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.window))
        return ",".join(map(str, self.window))

    def length(self):
        """Number of inversions."""
        w = self.window
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def is_identity(self):
        return self.window == tuple(range(1, self.n + 1))

    def right_descents(self):
        return [i for i in range(1, self.n) if self.window[i - 1] > self.window[i]]

    def descents(self):
        return self.right_descents()

    def code(self):
        """The sequence c_i = #{j > i : w(j) < w(i)}, length n."""
        w = self.window
        return tuple(sum(1 for j in range(i + 1, self.n) if w[j] < w[i]) for i in range(self.n))

    def shape(self):
        """The partition conjugate to the sorted code of the inverse."""
        return conjugate(sort_composition(self.inverse().code()))

    def reduced_words(self):
        """All reduced words, lexicographically sorted."""
        return _reduced_words(self.window)

    def is_grassmannian(self):
        return len(self.right_descents()) <= 1

    def is_321_avoiding(self):
        w = self.window
        n = self.n
        return not any(
            w[a] > w[b] > w[c]
            for a in range(n) for b in range(a + 1, n) for c in range(b + 1, n)
        )

    def is_vexillary(self):
        """True iff w avoids the pattern 2143."""
        w = self.window
        n = self.n
        return not any(
            w[b] < w[a] < w[d] < w[c]
            for a in range(n)
            for b in range(a + 1, n)
            for c in range(b + 1, n)
            for d in range(c + 1, n)
        )

    def one_times(self):
        """The permutation 1 x w, shifting the one-line notation up by one."""
        return Permutation((1,) + tuple(x + 1 for x in self.window))

    def transposition_right(self, i, j):
        """w * (i, j): swap the entries in positions i and j."""
        n = max(self.n, j)
        w = list(self.embed(n).window)
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return Permutation(w)

    def to_json(self):
        return {"n": self.n, "window": list(self.window)}

    @staticmethod
    def from_json(data):
        w = Permutation(data["window"])
        if w.n != data.get("n", w.n):
            raise ValueError("window length disagrees with n")
        return w


@lru_cache(maxsize=None)
def _reduced_words(window):
    w = Permutation(window)
    if w.is_identity():
        return ((),)
    words = []
    for i in w.right_descents():
        shorter = w * Permutation.simple(i, w.n)
        words.extend(word + (i,) for word in _reduced_words(shorter.window))
    return tuple(sorted(words))


def from_code(c):
    """The unique permutation with the given code."""
    c = tuple(int(x) for x in c)
    while c and c[-1] == 0:
        c = c[:-1]
    if any(x < 0 for x in c):
        raise ValueError(f"code entries must be nonnegative: {c}")
    n = max((i + 1 + ci for i, ci in enumerate(c)), default=1)
    n = max(n, len(c) + 1)
    taken = set()
    window = []
    for i in range(1, n + 1):
        ci = c[i - 1] if i <= len(c) else 0
        # w(i) is the (ci+1)-th smallest unused value
        avail = [v for v in range(1, n + 1) if v not in taken]
        window.append(avail[ci])
        taken.add(avail[ci])
    return Permutation(window)


def lambda_of(w):
    """The partition conjugate to the decreasing sort of the inverse's code."""
    return w.shape()


def symmetric_group(n):
    """All elements of S_n."""
    return [Permutation(p) for p in _itpermutations(range(1, n + 1))]


def is_reduced(word, n=None):
    """True iff the word multiplies to an element of that length."""
    word = tuple(word)
    if n is None:
        n = max(word, default=0) + 1
    return Permutation.from_word(word, n).length() == len(word)
