"""A tour of affine Stanley symmetric functions and the k-Schur duality.

Run with: python3 demos/affine_tour.py
"""

from stansym import (
    AffinePermutation,
    affine_schur,
    affine_schur_expand,
    affine_stanley,
    hall_inner_product,
    k_schur,
)
from stansym.partition import bounded_partitions


def main():
    n = 3
    w = AffinePermutation.from_word((2, 1, 2, 0, 2), n)
    print(f"w = {w} (window notation), length {w.length()}")
    print("reduced words:", [" ".join(map(str, word)) for word in w.reduced_words()])

    f = affine_stanley(w)
    print(f"\nF~_w = {f}")

    expansion = affine_schur_expand(w)
    print(f"affine Schur expansion: {expansion}")
    print("the summands:")
    for la, c in sorted(expansion.coeffs.items(), reverse=True):
        print(f"  {c} * F~_{la} = {c} * ({affine_schur(n, la)})")

    print("\nk-Schur functions dual to the affine Schur basis (degree 4):")
    for la in bounded_partitions(n, 4):
        print(f"  s^(2)_{la} = {k_schur(n, la)}")

    print("\nduality <s^(2)_la, F~_mu> on degree 4:")
    index = bounded_partitions(n, 4)
    for la in index:
        row = [hall_inner_product(k_schur(n, la), affine_schur(n, mu)) for mu in index]
        print(f"  {str(la):15s} {row}")


if __name__ == "__main__":
    main()
