"""Ramification anatomy of the quartic cover y^4 = x^2 (x + 3) over F_5.

The three branch points behave differently: at x the function has a
double zero, so only a half turn of inertia survives (e = 2) and the
residue field grows (f = 2); at x + 3 the zero is simple and the place
is totally ramified; at infinity the pole has order 3, which is again
coprime to 4, and since -3 = 1 mod 4 the cotangent character there
matches the one at x + 3 exactly.  The script also
passes to the quotient by the order-2 subgroup and prints the places of
the intermediate cover.
"""

from epschar.covers import kummer_cover, subcover_data, validate_cover
from epschar.groups import char_label


def main():
    cov = kummer_cover(5, 4, [((0, 1), 2), ((3, 1), 1)])
    validate_cover(cov)
    print(cov.summary())
    print("genus of the covering curve: %d" % cov.g_cover)
    print()
    for q in cov.places:
        xi = q.tame_char
        gen = q.inertia.generators[0]
        print("place %-6s deg %d   e = %d (tame %d, wild %d)   f = %d" % (
            q.label, q.degree, q.e, q.e_t, q.e_w, q.f))
        print("        cotangent character: %s with %s -> %s" % (
            char_label(xi), gen, xi.value(gen)))
    print()
    sub = cov.group.subgroup([(2,)])
    mid = subcover_data(cov, sub)
    print("quotient by the subgroup of order %d:" % sub.order)
    print(mid.summary())
    for q in mid.places:
        print("place %-6s deg %d   e = %d   f = %d" % (q.label, q.degree, q.e, q.f))


if __name__ == "__main__":
    main()
