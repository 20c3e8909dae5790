"""The cde triangle on Z/12 and restriction down a cyclic tower.

First the triangle: for each prime p dividing 12 and each projective
basis label theta (a character of order prime to p), decomposing the
lift e(theta) lands back on |Sylow_p| copies of theta, which is exactly
the Cartan map of an abelian group.  Then the tower: for a quartic
Kummer cover, the virtual character E of the full group restricts, for
every subgroup H, to the E of the intermediate cover X -> X/H.
"""

from epschar.corpus import restriction_chain_covers
from epschar.groups import (
    LEVEL_PROJECTIVES,
    AbelianGroup,
    K0Element,
    cartan_map,
    char_label,
    decomposition_map,
    e_map,
    modular_basis,
)
from epschar.verify import check_restriction


def main():
    g = AbelianGroup((12,))
    for p in (2, 3):
        print("Z/12 at p = %d, modular basis of size %d" % (p, len(modular_basis(g, p))))
        for theta in modular_basis(g, p):
            cov = K0Element.of_character(theta, LEVEL_PROJECTIVES, p=p)
            lhs = decomposition_map(e_map(cov))
            assert lhs == cartan_map(cov)
            print("  d(e(Cov %s)) = %d * %s" % (
                char_label(theta), lhs.coefficient(theta), char_label(theta)))
    print()
    cov = restriction_chain_covers()[0]
    print(cov.summary())
    (n,) = cov.group.invariant_factors
    for k in (1, 2, n):
        sub = cov.group.subgroup([(k % n,)])
        report = check_restriction(cov, sub)
        status = "ok" if report.passed else "FAIL"
        print("restriction to the subgroup generated by (%d,): %s" % (k % n, status))


if __name__ == "__main__":
    main()
