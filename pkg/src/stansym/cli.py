"""Command-line frontend.

Subcommands compute single objects (Stanley symmetric functions, expansions,
EG insertion, Little moves, k-Schur and j-basis elements) or run the named
verification suites.  Output is text or JSON; exit status is 0 on success,
1 on a verification failure, 2 on usage errors.
"""

import argparse
import json
import os
import sys

from .affine import AffinePermutation, CorootVector, elements_of_length
from .partition import as_partition
from .permutation import Permutation, symmetric_group
from .symfunc import change_basis, k_schur
from .tableaux import MarkedWord, little_move_chain

DEFAULT_CAPS = {
    "max_rank_finite": 5,
    "max_rank_affine": 4,
    "max_degree": 8,
}


def load_caps():
    caps = dict(DEFAULT_CAPS)
    path = os.environ.get("STANSYM_CONFIG", os.path.expanduser("~/.config/stansym.json"))
    if os.path.exists(path):
        with open(path) as fh:
            caps.update({k: int(v) for k, v in json.load(fh).items() if k in caps})
    for key in caps:
        env = os.environ.get(f"STANSYM_{key.upper()}")
        if env is not None:
            caps[key] = int(env)
    return caps


def parse_permutation(text):
    """One-line digit string (n <= 9) or a JSON array."""
    text = text.strip()
    if text.startswith("["):
        return Permutation(json.loads(text))
    if not text.isdigit():
        raise ValueError(f"not a one-line permutation or JSON array: {text!r}")
    return Permutation([int(c) for c in text])


def parse_word(text):
    text = text.strip()
    if text.startswith("["):
        return tuple(int(x) for x in json.loads(text))
    if not text.isdigit():
        raise ValueError(f"not a generator word: {text!r}")
    return tuple(int(c) for c in text)


def parse_affine(text, n, mode):
    """A generator word (digits, residues mod n) or a window (JSON array)."""
    text = text.strip()
    if mode == "auto":
        mode = "window" if text.startswith("[") else "word"
    if mode == "window":
        return AffinePermutation(n, json.loads(text))
    return AffinePermutation.from_word(parse_word(text), n)


def parse_partition(text):
    text = text.strip()
    if text.startswith("["):
        return as_partition(json.loads(text))
    if not text:
        return ()
    return as_partition([int(p) for p in text.split(",")])


def emit(obj, fmt, text_render):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text_render)


# -- verification suites ------------------------------------------------------


class Suite:
    def __init__(self):
        self.checks = []

    def check(self, name, ok):
        self.checks.append({"name": name, "ok": bool(ok)})

    @property
    def ok(self):
        return all(c["ok"] for c in self.checks)


def _suite_examples(suite, caps):
    from .partition import count_standard_tableaux
    from .stanley import affine_schur_expand, affine_stanley, schur_expand, stanley_fn
    from .symfunc import SymFunc
    from .tableaux import Tableau, eg_insert, little_move

    w0 = Permutation([4, 3, 2, 1])
    suite.check(
        "reduced word count of the longest element of S4",
        len(w0.reduced_words()) == 16 == count_standard_tableaux((3, 2, 1)),
    )
    f = stanley_fn(Permutation([2, 4, 3, 1]))
    suite.check(
        "F_2431 = m_211 + 3 m_1111 = s_211",
        f == SymFunc(4, "m", {(2, 1, 1): 1, (1, 1, 1, 1): 3})
        and schur_expand(Permutation([2, 4, 3, 1])) == SymFunc(4, "s", {(2, 1, 1): 1}),
    )
    P, Q = eg_insert((2, 1, 2, 3, 2))
    suite.check(
        "EG insertion of 21232",
        P == Tableau([[1, 2, 3], [2, 3]]) and Q == Tableau([[1, 3, 4], [2, 5]]),
    )
    chain = little_move_chain(MarkedWord((2, 1, 3, 4, 3, 2, 1), 5))
    suite.check(
        "Little move chain 2134321 -> 3245321",
        [c.word for c in chain]
        == [(2, 1, 3, 4, 3, 2, 1), (2, 1, 3, 4, 2, 2, 1), (2, 1, 3, 4, 2, 1, 1), (3, 2, 4, 5, 3, 2, 1)],
    )
    w = AffinePermutation.from_word((2, 1, 2, 0, 2), 3)
    suite.check(
        "affine Stanley of 21202",
        affine_stanley(w)
        == SymFunc(5, "m", {(2, 2, 1): 1, (2, 1, 1, 1): 2, (1, 1, 1, 1, 1): 3}),
    )
    suite.check(
        "affine Schur expansion of 21202",
        affine_schur_expand(w).coeffs
        == {(2, 2, 1): 1, (2, 1, 1, 1): 1},
    )


def _suite_symmetry(suite, caps):
    from .stanley import check_symmetry_affine, check_symmetry_finite, stanley_fn

    nf = min(4, caps["max_rank_finite"])
    suite.check(
        f"F_w symmetric and definition-independent on S_{nf}",
        all(
            check_symmetry_finite(w)
            and stanley_fn(w, "original") == stanley_fn(w, "decreasing") == stanley_fn(w, "quasisym")
            for w in symmetric_group(nf)
        ),
    )
    na = min(3, caps["max_rank_affine"])
    ok = all(
        check_symmetry_affine(w)
        for l in range(6)
        for w in elements_of_length(na, l)
    )
    suite.check(f"affine F~ symmetric on rank-{na} elements of length <= 5", ok)


def _suite_eg(suite, caps):
    from .tableaux import coxeter_knuth_classes, eg_insert, word_descents

    ok_des = True
    ok_fiber = True
    for w in symmetric_group(4):
        fibers = {}
        for word in w.reduced_words():
            P, Q = eg_insert(word, 4)
            if word_descents(word) != Q.descent_set():
                ok_des = False
            fibers.setdefault(P, set()).add(word)
        if set(map(frozenset, fibers.values())) != set(coxeter_knuth_classes(w)):
            ok_fiber = False
    suite.check("Des(i) = Des(Q(i)) on S4", ok_des)
    suite.check("Coxeter-Knuth classes are P-fibers on S4", ok_fiber)


def _suite_transition(suite, caps):
    from .stanley import transition_check
    from .tableaux import little_move, little_move_backward
    from .permutation import is_reduced

    suite.check(
        "transition identity on S4",
        all(transition_check(w, r) for w in symmetric_group(4) for r in range(1, 5)),
    )
    ok = True
    for w in symmetric_group(4):
        for word in w.reduced_words():
            for a in range(1, len(word) + 1):
                if not is_reduced(word[: a - 1] + word[a:]):
                    continue
                y = little_move(MarkedWord(word, a))
                if little_move(little_move_backward(y)) != y:
                    ok = False
    suite.check("Little move invertible on its image over S4 marked words", ok)


def _suite_nilcoxeter(suite, caps):
    from .nilcoxeter import h_element, noncommutative_schur, product_expansion_check
    from .nilcoxeter import NilCoxeterElement
    from .stanley import stanley_fn

    nf = caps["max_rank_finite"]
    suite.check(
        f"h product expansion for n <= {nf}",
        all(product_expansion_check(n) for n in range(2, nf + 1)),
    )
    ok = True
    for n in range(2, nf + 1):
        hs = [h_element(n, k) for k in range(n)]
        ok = ok and all(a * b == b * a for a in hs for b in hs)
    suite.check(f"finite h-elements commute for n <= {nf}", ok)
    na = caps["max_rank_affine"]
    ok = True
    for n in range(3, na + 1):
        hs = [h_element(n, k, affine=True) for k in range(n)]
        ok = ok and all(a * b == b * a for a in hs for b in hs)
    suite.check(f"affine h-elements commute for n <= {na}", ok)
    ok = True
    for w in symmetric_group(4):
        f = stanley_fn(w)
        for la, c in f.coeffs.items():
            prod = NilCoxeterElement.one(4)
            for part in la:
                prod = prod * h_element(4, part)
            if prod.coeffs.get(w.embed(4), 0) != c:
                ok = False
    suite.check("h products recover monomial coefficients of F_w on S4", ok)
    suite.check(
        "noncommutative Schur spot checks",
        noncommutative_schur(4, (2, 2)).to_json()[0]["word"] == [2, 1, 3, 2]
        and len(noncommutative_schur(4, (2, 1)).coeffs) == 4,
    )


def _suite_nilhecke(suite, caps):
    from .nilhecke import (
        NilHeckeElement,
        ScalarPoly,
        chevalley,
        commute_past,
        coproduct,
        embed_group,
        hopf_generator_check,
        phi0,
    )

    n = 3
    x = lambda i: ScalarPoly.x(n, i)
    e = AffinePermutation.identity(n)
    s1 = AffinePermutation.simple(1, n)
    s0 = AffinePermutation.simple(0, n)
    suite.check(
        "commutation table A_j x_i",
        commute_past(1, x(1)) == NilHeckeElement(n, {s1: x(2), e: 1})
        and commute_past(1, x(2)) == NilHeckeElement(n, {s1: x(1), e: -1})
        and commute_past(0, x(1)) == NilHeckeElement(n, {s0: x(3), e: -1}),
    )
    a1, a2 = ScalarPoly.alpha(n, 1), ScalarPoly.alpha(n, 2)
    suite.check(
        "constant term projection",
        phi0(3 * (a1 * a1 * a2) + a2 + ScalarPoly.const(n, 5)) == 5,
    )
    ok = True
    for l in range(5):
        for w in elements_of_length(n, l):
            if embed_group(w) * embed_group(w.inverse()) != NilHeckeElement.one(n):
                ok = False
            base = coproduct(NilHeckeElement.basis(w))
            for k in range(1, min(3, len(w.reduced_words()))):
                if coproduct(NilHeckeElement.basis(w), word_choice=k) != base:
                    ok = False
            for i in (1, 2, 3):
                if chevalley(w, x(i)) != NilHeckeElement.basis(w) * NilHeckeElement.from_scalar(x(i)):
                    ok = False
    suite.check("group embedding, coproduct and Chevalley engine (rank 3)", ok)
    suite.check(
        "Hopf generator identity for n in {3, 4}",
        all(hopf_generator_check(3, k) for k in range(3))
        and all(hopf_generator_check(4, k) for k in range(4)),
    )


def _suite_conjectures(suite, caps):
    from .nilcoxeter import conjecture_52_report
    from .nilhecke import j_basis_element, kappa, translation_centralizer_check

    r = conjecture_52_report(4)
    suite.check("h-elements generate a commutative algebra (n=4)", r["h_commutes"])
    suite.check("B has dimension 14 with independent Schur basis (n=4)",
                r["dimension"] == 14 and r["linearly_independent"])
    suite.check("Hilbert series matches root-poset order ideals (n=4)", r["hilbert_matches"])
    suite.check("Schur elements and structure constants nonnegative (n=4)",
                r["nonnegative"] and r["structure_constants_nonnegative"])
    ok_pos = True
    ok_agree = True
    for l in range(5):
        for w in elements_of_length(3, l):
            if not w.is_grassmannian():
                continue
            try:
                jw = j_basis_element(3, w)
            except AssertionError:
                ok_agree = False
                continue
            if any(c < 0 for c in kappa(jw).coeffs.values()):
                ok_pos = False
    suite.check("j-basis algorithms agree (rank 3, length <= 4)", ok_agree)
    suite.check("kappa of j-basis elements observed nonnegative", ok_pos)
    suite.check(
        "translation orbit sums centralize the scalars (rank 3)",
        translation_centralizer_check(3, CorootVector((-1, 0, 1))),
    )


SUITES = {
    "examples": _suite_examples,
    "symmetry": _suite_symmetry,
    "eg": _suite_eg,
    "transition": _suite_transition,
    "nilcoxeter": _suite_nilcoxeter,
    "nilhecke": _suite_nilhecke,
    "conjectures": _suite_conjectures,
}


def run_verify(names, fmt, caps):
    results = []
    for name in names:
        suite = Suite()
        SUITES[name](suite, caps)
        results.append({"suite": name, "ok": suite.ok, "checks": suite.checks})
    if fmt == "json":
        print(json.dumps(results, sort_keys=True))
    else:
        for r in results:
            for c in r["checks"]:
                print(f"{'PASS' if c['ok'] else 'FAIL'} [{r['suite']}] {c['name']}")
    return 0 if all(r["ok"] for r in results) else 1


# -- entry point --------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="stansym", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    sp = sub.add_parser("stanley")
    sp.add_argument("perm")
    sp.add_argument("--method", choices=("original", "decreasing", "quasisym"), default="decreasing")

    sp = sub.add_parser("schur-expand")
    sp.add_argument("perm")

    for name in ("affine-stanley", "affine-schur-expand"):
        sp = sub.add_parser(name)
        sp.add_argument("-n", "--rank", type=int, required=True)
        sp.add_argument("element")
        sp.add_argument("--as", dest="input_mode", choices=("word", "window", "auto"), default="auto")

    sp = sub.add_parser("eg-insert")
    sp.add_argument("word")

    sp = sub.add_parser("reduced-words")
    sp.add_argument("perm")
    sp.add_argument("-n", "--rank", type=int, help="affine rank; finite if omitted")
    sp.add_argument("--as", dest="input_mode", choices=("word", "window", "auto"), default="auto")

    sp = sub.add_parser("little-move")
    sp.add_argument("word")
    sp.add_argument("mark", type=int)

    for name in ("kschur", "jbasis"):
        sp = sub.add_parser(name)
        sp.add_argument("-n", "--rank", type=int, required=True)
        sp.add_argument("partition")

    sp = sub.add_parser("verify")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    caps = load_caps()
    fmt = getattr(args, "format", "text")
    try:
        return dispatch(args, fmt, caps)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def dispatch(args, fmt, caps):
    from .stanley import affine_schur_expand, affine_stanley, schur_expand, stanley_fn

    cmd = args.command
    if cmd == "stanley":
        w = parse_permutation(args.perm)
        f = stanley_fn(w, args.method)
        emit(f.to_json(), fmt, repr(f))
    elif cmd == "schur-expand":
        f = schur_expand(parse_permutation(args.perm))
        emit(f.to_json(), fmt, repr(f))
    elif cmd == "affine-stanley":
        w = parse_affine(args.element, args.rank, args.input_mode)
        f = affine_stanley(w)
        emit(f.to_json(), fmt, repr(f))
    elif cmd == "affine-schur-expand":
        w = parse_affine(args.element, args.rank, args.input_mode)
        f = affine_schur_expand(w)
        emit(f.to_json(), fmt, repr(f))
    elif cmd == "eg-insert":
        from .tableaux import eg_insert

        P, Q = eg_insert(parse_word(args.word))
        emit({"P": P.to_json(), "Q": Q.to_json()}, fmt, f"P:\n{P.render()}\nQ:\n{Q.render()}")
    elif cmd == "reduced-words":
        if args.rank:
            w = parse_affine(args.perm, args.rank, args.input_mode)
        else:
            w = parse_permutation(args.perm)
        words = w.reduced_words()
        emit([list(word) for word in words], fmt, "\n".join("".join(map(str, word)) for word in words))
    elif cmd == "little-move":
        mw = MarkedWord(parse_word(args.word), args.mark)
        chain = little_move_chain(mw)
        emit(
            [{"word": list(c.word), "mark": c.mark} for c in chain],
            fmt,
            "\n".join(f"{''.join(map(str, c.word))} (mark {c.mark})" for c in chain),
        )
    elif cmd == "kschur":
        f = k_schur(args.rank, parse_partition(args.partition))
        emit(f.to_json(), fmt, repr(f))
    elif cmd == "jbasis":
        from .affine import grassmannian_from_partition
        from .nilhecke import j_basis_element

        w = grassmannian_from_partition(args.rank, parse_partition(args.partition))
        a = j_basis_element(args.rank, w)
        emit(a.to_json(), fmt, repr(a))
    elif cmd == "verify":
        names = sorted(SUITES) if args.suite == "all" else [args.suite]
        return run_verify(names, fmt, caps)
    return 0


if __name__ == "__main__":
    sys.exit(main())
