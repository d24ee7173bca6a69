"""A tour of Stanley symmetric functions for finite permutations.

Run with: python3 demos/stanley_tour.py
"""

from stansym import Permutation, eg_insert, schur_expand, stanley_fn, symmetric_group
from stansym.stanley import stanley_quasisym, transition_check
from stansym.tableaux import MarkedWord, little_move_chain


def main():
    w = Permutation([2, 4, 3, 1])
    print(f"w = {w} with {len(w.reduced_words())} reduced words:")
    for word in w.reduced_words():
        print("  ", "".join(map(str, word)))

    print("\nF_w by three definitions:")
    for method in ("original", "decreasing", "quasisym"):
        print(f"  {method:10s} {stanley_fn(w, method)}")
    print(f"  quasi-sym sum: {stanley_quasisym(w)}")

    print(f"\nSchur expansion: F_w = {schur_expand(w)}")

    word = (2, 1, 2, 3, 2)
    P, Q = eg_insert(word)
    print(f"\nEdelman-Greene insertion of {''.join(map(str, word))}:")
    print("P:")
    print(P.render())
    print("Q:")
    print(Q.render())

    print("\nA Little move chain:")
    for mw in little_move_chain(MarkedWord((2, 1, 3, 4, 3, 2, 1), 5)):
        marker = " " * (2 * mw.mark - 1) + "^"
        print("  ", " ".join(map(str, mw.word)))
        print("  ", marker)

    print("transition identity on S4:", all(
        transition_check(u, r) for u in symmetric_group(4) for r in range(1, 5)
    ))


if __name__ == "__main__":
    main()
