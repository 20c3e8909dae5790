"""Three routes to the valuation of a Gauss sum.

For every nontrivial multiplicative character chi of F_25 the table
below computes v_5(tau(chi)), normalized so the full ramification
degree r(p-1) counts as r, in three independent ways:

* digit:   base-5 digit sum of the character index, divided by p - 1;
* orbit:   sum of the fractional parts {d 5^i / e} along the Frobenius
           orbit of the index;
* p-adic:  an honest computation of tau(chi) in a ramified extension
           of the 5-typical Witt vectors, reading off the valuation.

The last column checks the exact cyclotomic-ring identity
tau(chi) tau(chi^(-1)) = chi(-1) q.
"""

from epschar.cyclotomic import MultChar, complex_abs2, gauss_product_check, gauss_sum
from epschar.fields import PrimePower, make_field
from epschar.padic import padic_gauss_valuation
from epschar.stickelberger import TameLocalDatum, digit_sum_valuation, stickelberger_valuation


def main():
    p, r = 5, 2
    pp = PrimePower(p, r)
    ctx = make_field(p, r)
    # with e_t = q - 1 the cotangent index equals the character index
    datum = TameLocalDatum(pp, pp.q - 1)
    print("Gauss sum valuations over F_%d (normalized by 1/(p-1))" % pp.q)
    print("%5s %8s %8s %8s %10s %10s" % ("index", "digit", "orbit", "p-adic", "|tau|^2", "product"))
    for c in range(pp.q - 1):
        chi = MultChar(ctx, c)
        v_digit = digit_sum_valuation(pp, c)
        v_orbit = stickelberger_valuation(datum, c)
        v_padic = padic_gauss_valuation(ctx, chi)
        assert v_digit == v_orbit == v_padic
        if c == 0:
            extra = ("%10s %10s" % ("-", "-"),)
        else:
            abs2 = complex_abs2(gauss_sum(ctx, chi))
            ok = gauss_product_check(ctx, chi)
            extra = ("%10.4f %10s" % (abs2, "ok" if ok else "FAIL"),)
        print("%5d %8s %8s %8s %s" % (c, v_digit, v_orbit, v_padic, extra[0]))
    print("all three routes agree on every character")


if __name__ == "__main__":
    main()
