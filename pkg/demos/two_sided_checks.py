"""Both faces of the valuation formula on two covers.

The strong check compares, character by character, minus the valuation
of the global epsilon constant (epsilon side, computed through the
p-adic oracle) with the sheaf side: the multiplicity of chi in the
equivariant Euler characteristic at the canonical divisor choice, plus
a wild correction counting places where chi kills inertia.  The weak
check compares the images of the two sides in the modular basis, where
the epsilon side becomes d(E) and the sheaf side the Euler
characteristic of the structure sheaf.
"""

from epschar.covers import artin_schreier_cover, kummer_cover
from epschar.verify import check_strong, check_weak


def main():
    quartic = kummer_cover(5, 4, [((0, 1), 2), ((3, 1), 1)])
    wild = artin_schreier_cover(3, [((0, 1), -1), ((2, 1), -1)])
    for cov in (quartic, wild):
        print(check_strong(cov, oracle="padic").describe())
        print()
        print(check_weak(cov).describe())
        print()


if __name__ == "__main__":
    main()
