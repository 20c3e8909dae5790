"""Truncated p-adic arithmetic for Gauss sum valuations.

Two layers:

* WittRing / WittApprox: the unramified ring Z_q at precision p^M,
  realized as Z[x] / (p^M, F) where F is the field modulus of the
  FieldContext lifted verbatim to integer coefficients.  Teichmueller
  representatives come from the Frobenius fixed-point iteration
  t -> t^q, which gains one digit of agreement per step.

* RamifiedRing / RamifiedElem: the extension by lambda = zeta_p - 1,
  a vector of length p-1 of Witt coefficients reduced modulo the
  Eisenstein relation E(lambda) = sum_(j=1..p) C(p,j) lambda^(j-1) = 0.
  The powers lambda^j p^k have pairwise distinct valuations
  j + k(p-1) in units of 1/(p-1), so the valuation of an element is
  read slotwise without cancellation.

padic_gauss_valuation sums the Gauss sum termwise in the ramified ring
(multiplicative part through Teichmueller powers, additive part through
zeta_p = 1 + lambda) and reads off the lambda-adic valuation.  It shares
no formula with the Stickelberger digit count, which is the point.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError, InvalidInputError, PrecisionError
from .fields import FieldContext
from .numutil import padic_valuation_int


class WittRing:
    """Z[x] / (p^M, F(x)) for the lifted field modulus F."""

    def __init__(self, ctx: FieldContext, precision: int):
        if precision < 1:
            raise InvalidInputError("precision must be >= 1")
        self.ctx = ctx
        self.precision = precision
        self.pM = ctx.p**precision
        self.modulus = tuple(int(c) for c in ctx.modulus)  # monic, lifted verbatim
        self.r = ctx.r

    def element(self, coeffs) -> "WittApprox":
        c = [int(v) % self.pM for v in coeffs]
        c += [0] * (self.r - len(c))
        return WittApprox(self, tuple(c[: self.r]))

    @property
    def zero(self):
        return self.element([0])

    @property
    def one(self):
        return self.element([1])

    def lift(self, x) -> "WittApprox":
        """Lift a field element coefficientwise."""
        return self.element(list(x))

    def add(self, a, b):
        return WittApprox(self, tuple((x + y) % self.pM for x, y in zip(a.coeffs, b.coeffs)))

    def mul(self, a, b):
        r, pM = self.r, self.pM
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    prod[i + j] += ai * bj
        # reduce by the monic modulus
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[k] % pM
            if c:
                shift = k - r
                for i in range(r + 1):
                    prod[shift + i] -= c * self.modulus[i]
            prod[k] = 0
        return WittApprox(self, tuple(v % pM for v in prod[:r]))

    def int_scale(self, n: int, a):
        return WittApprox(self, tuple((n * x) % self.pM for x in a.coeffs))

    def pow(self, a, n: int):
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def valuation(self, a) -> int:
        """min v_p over coefficients; returns precision M when a = 0."""
        return min(padic_valuation_int(c, self.ctx.p, self.precision) for c in a.coeffs)


@dataclass(frozen=True)
class WittApprox:
    ring: WittRing
    coeffs: tuple

    def __add__(self, other):
        return self.ring.add(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def reduces_to(self, x) -> bool:
        """Does this approximation reduce mod p to the field element x?"""
        return tuple(c % self.ring.ctx.p for c in self.coeffs) == tuple(x)


def teichmuller(ctx: FieldContext, x, precision: int) -> WittApprox:
    """The Teichmueller representative of x in Z_q at precision p^M.

    Iterates t -> t^q from the verbatim lift; each step fixes one more
    digit, and the limit is the unique root of unity (or 0) over x.
    """
    if precision < 1:
        raise InvalidInputError("precision must be >= 1")
    ring = WittRing(ctx, precision)
    t = ring.lift(x)
    for _ in range(precision + 1):
        nxt = ring.pow(t, ctx.q)
        if nxt == t:
            break
        t = nxt
    else:
        raise AssertionError("Teichmueller iteration failed to stabilize")
    return t


class RamifiedRing:
    """W[lambda] / E(lambda) with lambda = zeta_p - 1 at fixed precision."""

    def __init__(self, witt: WittRing):
        self.witt = witt
        self.p = witt.ctx.p
        self.deg = self.p - 1
        # E(lambda) = sum_(j=1..p) C(p, j) lambda^(j-1), monic of degree p-1
        self.eisenstein = tuple(comb(self.p, j) for j in range(1, self.p + 1))

    def element(self, witt_coeffs) -> "RamifiedElem":
        c = list(witt_coeffs) + [self.witt.zero] * (self.deg - len(witt_coeffs))
        return RamifiedElem(self, tuple(c[: self.deg]))

    @property
    def zero(self):
        return self.element([])

    @property
    def one(self):
        return self.element([self.witt.one])

    @property
    def lam(self):
        if self.deg == 1:
            # for p = 2 the relation reads lambda = -2
            return self.element([self.witt.element([-2])])
        return self.element([self.witt.zero, self.witt.one])

    def add(self, a, b):
        return RamifiedElem(self, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def mul(self, a, b):
        w = self.witt
        prod = [w.zero] * (2 * self.deg - 1)
        for i, ai in enumerate(a.coeffs):
            for j, bj in enumerate(b.coeffs):
                prod[i + j] = prod[i + j] + ai * bj
        # reduce lambda^k for k >= p-1 using the monic Eisenstein relation
        for k in range(2 * self.deg - 2, self.deg - 1, -1):
            c = prod[k]
            if any(c.coeffs):
                shift = k - self.deg
                for i in range(self.deg + 1):
                    term = w.int_scale(-self.eisenstein[i], c)
                    if shift + i < len(prod):
                        prod[shift + i] = prod[shift + i] + term
            prod[k] = w.zero
        return RamifiedElem(self, tuple(prod[: self.deg]))

    def pow(self, a, n: int):
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def witt_scale(self, w: WittApprox, a):
        return RamifiedElem(self, tuple(w * c for c in a.coeffs))

    def lambda_valuation(self, a) -> int:
        """Valuation in units of 1/(p-1); capped at (p-1) * M."""
        best = self.deg * self.witt.precision
        for j, c in enumerate(a.coeffs):
            v = j + self.deg * self.witt.valuation(c)
            best = min(best, v)
        return best


@dataclass(frozen=True)
class RamifiedElem:
    ring: RamifiedRing
    coeffs: tuple  # WittApprox entries, powers of lambda, length p-1

    def __add__(self, other):
        return self.ring.add(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    @property
    def lambda_precision(self) -> int:
        return self.ring.deg * self.ring.witt.precision


# ---------------------------------------------------------------------------


def default_lambda_precision(ctx: FieldContext) -> int:
    return ctx.r * (ctx.p - 1) + 2


@lru_cache(maxsize=None)
def _gauss_tables(ctx: FieldContext, precision: int):
    """Per-field tables: Teichmueller powers, (1+lambda)^t rows, traces."""
    ring = WittRing(ctx, precision)
    ram = RamifiedRing(ring)
    q = ctx.q
    omega = teichmuller(ctx, ctx.generator, precision)
    teich_pow = [ring.one]
    for _ in range(q - 2):
        teich_pow.append(teich_pow[-1] * omega)
    zeta_p = ram.one + ram.lam
    lam_rows = []
    acc = ram.one
    for _ in range(ctx.p):
        lam_rows.append(acc)
        acc = acc * zeta_p
    traces = []
    x = ctx.one
    for _ in range(q - 1):
        traces.append(ctx.trace(x))
        x = ctx.mul(x, ctx.generator)
    return ram, teich_pow, lam_rows, traces


def padic_gauss_valuation(ctx: FieldContext, chi, lambda_precision: int = None) -> Fraction:
    """lambda-adic valuation of tau(chi), in ordinary v_p units.

    chi is a MultChar (anything with an integer .index modulo q-1).
    The sum is assembled in the ramified ring; the result is exact as a
    Fraction with denominator dividing p-1.  Raises PrecisionError if
    the requested precision cannot resolve the answer.
    """
    p, q, r = ctx.p, ctx.q, ctx.r
    floor_n = r * (p - 1) + 1
    if lambda_precision is None:
        lambda_precision = floor_n + 1
    if lambda_precision < floor_n:
        raise PrecisionError(
            f"lambda precision {lambda_precision} is below the floor {floor_n}")
    witt_precision = lambda_precision // (p - 1) + 2
    ram, teich_pow, lam_rows, traces = _gauss_tables(ctx, witt_precision)
    w = ram.witt
    c = int(getattr(chi, "index", chi)) % (q - 1) if q > 2 else 0

    # tau = sum_k omega^(-c k) (1 + lambda)^(trace g^k).  The (1+lambda)
    # power table has plain-integer Witt coordinates (binomials pushed
    # through the Eisenstein relation), so each term is an integer
    # rescaling of a Teichmueller power per lambda slot; exactness is
    # unaffected, mod p^M happens once at the end.
    consts = []
    for row in lam_rows:
        slot_consts = []
        for cw in row.coeffs:
            if any(cw.coeffs[1:]):
                raise AssertionError("(1+lambda)^t acquired a non-constant coordinate")
            slot_consts.append(cw.coeffs[0])
        consts.append(slot_consts)
    acc = [[0] * w.r for _ in range(ram.deg)]
    for k in range(q - 1):
        tw = teich_pow[(-c * k) % (q - 1)] if q > 2 else w.one
        row = consts[traces[k]]
        for slot in range(ram.deg):
            const = row[slot]
            if const:
                arow = acc[slot]
                twc = tw.coeffs
                for a in range(w.r):
                    arow[a] += const * twc[a]
    elem = ram.element([w.element(arow) for arow in acc])
    val = ram.lambda_valuation(elem)
    if val >= lambda_precision:
        raise PrecisionError(
            f"valuation not resolved at lambda precision {lambda_precision}; "
            f"retry with lambda_precision >= {val + 1}")
    return Fraction(val, p - 1)
