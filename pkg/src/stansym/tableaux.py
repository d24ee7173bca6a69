"""Tableaux, Edelman-Greene insertion, Coxeter-Knuth classes, Little moves,
and the transition-formula bookkeeping.
"""

from functools import lru_cache

from .partition import as_partition
from .permutation import Permutation, is_reduced


class Tableau:
    """Rows of positive integers with weakly decreasing row lengths."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        shape = tuple(len(row) for row in rows)
        as_partition(shape)
        if any(x <= 0 for row in rows for x in row):
            raise ValueError("tableau entries must be positive")
        self.rows = rows

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    def __eq__(self, other):
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"

    def render(self):
        return "\n".join(" ".join(map(str, row)) for row in self.rows)

    def is_row_strict(self):
        return all(row[j] < row[j + 1] for row in self.rows for j in range(len(row) - 1))

    def is_column_strict(self):
        return all(
            self.rows[i][j] < self.rows[i + 1][j]
            for i in range(len(self.rows) - 1)
            for j in range(len(self.rows[i + 1]))
        )

    def is_semistandard(self):
        return self.is_column_strict() and all(
            row[j] <= row[j + 1] for row in self.rows for j in range(len(row) - 1)
        )

    def is_standard(self):
        entries = sorted(x for row in self.rows for x in row)
        return (
            self.is_row_strict()
            and self.is_column_strict()
            and entries == list(range(1, len(entries) + 1))
        )

    def descent_set(self):
        """Entries i with i+1 strictly lower (standard tableaux)."""
        row_of = {}
        for i, row in enumerate(self.rows):
            for x in row:
                row_of[x] = i
        return {i for i in row_of if i + 1 in row_of and row_of[i + 1] > row_of[i]}

    def reading_word(self):
        """Rows read left to right, bottom row first."""
        out = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def to_json(self):
        return [list(row) for row in self.rows]


def word_descents(word):
    return {i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]}


def eg_insert(word, n=None):
    """Edelman-Greene insertion of a reduced word; returns (P, Q).

    Raises on non-reduced input (the insertion is only defined on reduced
    words).
    """
    word = tuple(word)
    if not is_reduced(word, n):
        raise ValueError(f"word {word} is not reduced")
    rows = []
    qrows = []
    for step, letter in enumerate(word, start=1):
        a = letter
        r = 0
        while True:
            if r == len(rows):
                rows.append([a])
                qrows.append([step])
                break
            row = rows[r]
            if row[-1] < a:
                row.append(a)
                qrows[r].append(step)
                break
            bump_idx = next(i for i, x in enumerate(row) if x > a)
            bumped = row[bump_idx]
            if not (a in row and a + 1 in row and bumped == a + 1):
                row[bump_idx] = a
            a = bumped
            r += 1
    return Tableau(rows), Tableau(qrows)


def is_eg_tableau(T, w):
    """True iff T is row- and column-strict and reads to a reduced word for w."""
    if not (T.is_row_strict() and T.is_column_strict()):
        return False
    word = T.reading_word()
    n = max(w.n, max(word, default=0) + 1)
    return len(word) == w.length() and Permutation.from_word(word, n) == w


def eg_tableaux_by_shape(w):
    """All EG-tableaux for w, grouped by shape via the insertion bijection."""
    out = {}
    for word in w.reduced_words():
        P, _ = eg_insert(word, w.n)
        out.setdefault(P.shape, set()).add(P)
    return out


# -- Coxeter-Knuth equivalence ------------------------------------------------


def coxeter_knuth_neighbors(word):
    """Words one Coxeter-Knuth move away (moves on consecutive triples).

    The braid move a (a+1) a <-> (a+1) a (a+1), and the two Knuth-style
    moves (with their inverses): swap the last two letters when the first
    is strictly between them, swap the first two when the last is.
    """
    word = tuple(word)
    out = set()
    for i in range(len(word) - 2):
        x, y, z = word[i:i + 3]
        swaps = []
        if (x, y, z) == (x, x + 1, x):
            swaps.append((x + 1, x, x + 1))
        if (x, y, z) == (y + 1, y, y + 1):
            swaps.append((y, y + 1, y))
        if min(y, z) < x < max(y, z):
            swaps.append((x, z, y))
        if min(x, y) < z < max(x, y):
            swaps.append((y, x, z))
        out.update(word[:i] + s + word[i + 3:] for s in swaps)
    out.discard(word)
    return out


def coxeter_knuth_classes(w):
    """Partition of R(w) into Coxeter-Knuth equivalence classes."""
    words = set(w.reduced_words())
    classes = []
    seen = set()
    for start in sorted(words):
        if start in seen:
            continue
        component = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for nxt in coxeter_knuth_neighbors(cur):
                if nxt in words and nxt not in component:
                    component.add(nxt)
                    frontier.append(nxt)
        seen |= component
        classes.append(frozenset(component))
    return classes


# -- Little moves -------------------------------------------------------------


class MarkedWord:
    """A word with a marked index whose deletion leaves a reduced word."""

    __slots__ = ("word", "mark")

    def __init__(self, word, mark):
        word = tuple(int(x) for x in word)
        if not 1 <= mark <= len(word):
            raise ValueError(f"mark {mark} out of range")
        if any(x < 1 for x in word):
            raise ValueError("letters must be positive")
        if not is_reduced(word[:mark - 1] + word[mark:]):
            raise ValueError(f"deleting position {mark} of {word} is not reduced")
        self.word = word
        self.mark = mark

    def is_reduced(self):
        return is_reduced(self.word)

    def deleted(self):
        return self.word[:self.mark - 1] + self.word[self.mark:]

    def __eq__(self, other):
        return self.word == other.word and self.mark == other.mark

    def __hash__(self):
        return hash((self.word, self.mark))

    def __repr__(self):
        return f"MarkedWord({list(self.word)}, mark={self.mark})"


def little_step(mw):
    """One edge of the Little graph: decrement the marked letter, shifting the
    whole word up when it hits zero, then re-mark if the word went unreduced."""
    word = list(mw.word)
    a = mw.mark
    word[a - 1] -= 1
    if word[a - 1] == 0:
        word = [x + 1 for x in word]
    word = tuple(word)
    if is_reduced(word):
        return MarkedWord(word, a)
    marks = [
        b for b in range(1, len(word) + 1)
        if b != a and is_reduced(word[:b - 1] + word[b:])
    ]
    if len(marks) != 1:
        raise AssertionError(
            f"Little graph re-marking not unique for {word}: candidates {marks}"
        )
    return MarkedWord(word, marks[0])


def little_move(mw, max_steps=10000):
    """The forward Little move: traverse the graph to the next marked reduced
    word.  The iteration cap guards the well-definedness contract."""
    if not mw.is_reduced():
        raise ValueError("forward Little move starts at a marked reduced word")
    cur = little_step(mw)
    steps = 1
    while not cur.is_reduced():
        cur = little_step(cur)
        steps += 1
        if steps > max_steps:
            raise AssertionError("Little graph traversal did not terminate")
    return cur


def little_move_chain(mw, max_steps=10000):
    """The full traversal, including intermediate nearly reduced words."""
    chain = [mw]
    cur = mw
    while True:
        cur = little_step(cur)
        chain.append(cur)
        if cur.is_reduced():
            return chain
        if len(chain) > max_steps:
            raise AssertionError("Little graph traversal did not terminate")


def little_step_backward(mw):
    """Invert one Little-graph edge.

    Incoming edges are not unique in general: the shift rule lets two
    different trajectories merge.  When both an increment and an un-shift
    predecessor exist, the un-shift is taken, so this is a section of
    ``little_step`` rather than a two-sided inverse.
    """
    word = mw.word
    a = mw.mark
    if is_reduced(word):
        b = a  # the edge in kept the mark
    else:
        marks = [
            c for c in range(1, len(word) + 1)
            if c != a and is_reduced(word[:c - 1] + word[c:])
        ]
        if len(marks) != 1:
            raise AssertionError(
                f"Little graph un-marking not unique for {word}: candidates {marks}"
            )
        b = marks[0]
    if word[b - 1] == 1 and all(x >= 2 for i, x in enumerate(word) if i != b - 1):
        pred_word = tuple(1 if i == b - 1 else x - 1 for i, x in enumerate(word))
    else:
        pred_word = word[:b - 1] + (word[b - 1] + 1,) + word[b:]
    pred = MarkedWord(pred_word, b)
    if little_step(pred) != mw:
        raise AssertionError(f"backward step from {mw!r} produced non-predecessor {pred!r}")
    return pred


def little_move_backward(mw, max_steps=10000):
    """Inverse of the forward Little move on marked reduced words."""
    if not mw.is_reduced():
        raise ValueError("backward Little move starts at a marked reduced word")
    cur = little_step_backward(mw)
    steps = 1
    while not cur.is_reduced():
        cur = little_step_backward(cur)
        steps += 1
        if steps > max_steps:
            raise AssertionError("backward Little traversal did not terminate")
    return cur


# -- transition formula -------------------------------------------------------


def transition_sides(w, r):
    """The three pieces of the transition identity at (w, r).

    Returns (left, right, extra): left are the covers w(r,s) with s > r,
    right the covers w(s',r) with s' < r, and extra the shifted term
    (1 x w)(1, r+1) when it covers 1 x w.
    """
    if not 1 <= r <= w.n:
        raise ValueError(f"position r={r} out of range for S_{w.n}")
    ell = w.length()
    left = []
    for s in range(r + 1, w.n + 2):
        u = w.transposition_right(r, s)
        if u.length() == ell + 1:
            left.append(u)
    right = []
    for s in range(1, r):
        v = w.transposition_right(s, r)
        if v.length() == ell + 1:
            right.append(v)
    shifted = w.one_times().transposition_right(1, r + 1)
    extra = shifted if shifted.length() == ell + 1 else None
    return left, right, extra
