"""Exact arithmetic in small finite fields F_q, q = p^r.

Field elements are coefficient tuples of length r over Z/p (entry i is
the coefficient of x^i), reduced modulo a fixed monic irreducible
modulus.  A FieldContext fixes the modulus, a multiplicative generator
and a full discrete-log table, so character sums downstream are exact
table lookups.  Construction is deterministic: the modulus is the first
monic irreducible of degree r in the numeric coefficient order
(a_0 + a_1 p + ... smallest first) and the generator is the first
primitive element in the same order.

Intended for desk-scale fields (q <= 10**6), not for cryptography.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError, DomainError, InvalidInputError
from .numutil import factorize, is_prime

MAX_Q = 10**6
MAX_R = 12

FqElem = tuple  # coefficient tuple of length r, entries in range(p)


@dataclass(frozen=True)
class PrimePower:
    p: int
    r: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInputError(f"p = {self.p} is not prime")
        if self.r < 1:
            raise InvalidInputError(f"r = {self.r} must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.r


# ---------------------------------------------------------------------------
# polynomial helpers over Z/p (coefficient lists, ascending powers)


def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return poly_trim(out)


def poly_mod(a, m, p):
    """a mod m with m monic."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return poly_trim(a)


def poly_gcd(a, b, p):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        bm = [(inv * c) % p for c in b]
        a, b = b, poly_mod(a, bm, p)
    return a


def poly_powmod(a, n, m, p):
    result = [1]
    base = poly_mod(a, m, p)
    while n:
        if n & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        n >>= 1
    return result


def poly_is_irreducible(coeffs, p) -> bool:
    """Monic polynomial over F_p irreducible?

    Uses the factor sieve: f of degree r is irreducible iff it shares no
    factor with x^(p^i) - x for i <= r//2 and x^(p^r) = x mod f.
    """
    f = poly_trim([c % p for c in coeffs])
    r = len(f) - 1
    if r < 1 or f[-1] != 1:
        return False
    if r == 1:
        return True
    xq = [0, 1]
    for _ in range(1, r // 2 + 1):
        xq = poly_powmod(xq, p, f, p)  # xq = x^(p^i) mod f
        diff = list(xq) + [0] * (2 - len(xq))
        diff[1] = (diff[1] - 1) % p  # x^(p^i) - x
        g = poly_gcd(f, poly_trim(diff), p)
        if len(g) - 1 >= 1:
            return False
    for _ in range(r // 2 + 1, r + 1):
        xq = poly_powmod(xq, p, f, p)
    return poly_trim(xq) == [0, 1]


# ---------------------------------------------------------------------------


class FieldContext:
    """Arithmetic context for F_q with fixed modulus, generator, dlog table."""

    def __init__(self, p: int, r: int):
        self.p = p
        self.r = r
        self.q = p**r
        self.prime_power = PrimePower(p, r)
        self.modulus = self._find_modulus()
        self.zero = (0,) * r
        self.one = self._reduce_int_poly([1])
        self._exp, self._log = self._build_log_tables()
        self.generator = self._exp[1] if self.q > 2 else self.one

    # -- construction -------------------------------------------------

    def _find_modulus(self):
        p, r = self.p, self.r
        if r == 1:
            return (0, 1)  # the polynomial x; F_p[x]/(x) = F_p
        for enc in range(p**r):
            coeffs = []
            e = enc
            for _ in range(r):
                coeffs.append(e % p)
                e //= p
            cand = coeffs + [1]
            if poly_is_irreducible(cand, p):
                return tuple(cand)
        raise AssertionError("no irreducible polynomial found")

    def _reduce_int_poly(self, coeffs) -> FqElem:
        red = poly_mod([c % self.p for c in coeffs], list(self.modulus), self.p)
        red = red + [0] * (self.r - len(red))
        return tuple(red)

    def _build_log_tables(self):
        # exp[k] = g^k for the first primitive element g; log indexed by encode()
        p, r, q = self.p, self.r, self.q
        factors = list(factorize(q - 1)) if q > 2 else []
        for enc in range(1, q):
            g = self.element_from_int(enc)
            if all(self.pow(g, (q - 1) // f) != self.one for f in factors):
                exp = [self.one]
                t = self.one
                for _ in range(q - 2):
                    t = self.mul(t, g)
                    exp.append(t)
                log = [None] * q
                for k, el in enumerate(exp):
                    log[self.encode(el)] = k
                return exp, log
        raise AssertionError("no primitive element found")

    # -- element plumbing ----------------------------------------------

    def encode(self, x: FqElem) -> int:
        e = 0
        for c in reversed(x):
            e = e * self.p + c
        return e

    def element_from_int(self, enc: int) -> FqElem:
        coeffs = []
        for _ in range(self.r):
            coeffs.append(enc % self.p)
            enc //= self.p
        return tuple(coeffs)

    def elements(self):
        return [self.element_from_int(e) for e in range(self.q)]

    def nonzero_elements(self):
        return [self.element_from_int(e) for e in range(1, self.q)]

    def check(self, x: FqElem):
        if len(x) != self.r or any(not (0 <= c < self.p) for c in x):
            raise DomainError(f"{x} is not a reduced element of F_{self.q}")

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        return self._reduce_int_poly(poly_mul(list(a), list(b), self.p))

    def pow(self, a, n):
        if a == self.zero:
            if n < 0:
                raise DomainError("zero has no negative powers")
            return self.one if n == 0 else self.zero
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise DomainError("zero is not invertible")
        return self.exp((-self.dlog(a)) % (self.q - 1))

    def scalar_mul(self, c, a):
        return tuple((c * x) % self.p for x in a)

    # -- the two operations everything downstream leans on -------------

    def trace(self, x: FqElem) -> int:
        """Absolute trace to F_p: sum of x^(p^i), i < r.  Returns an int."""
        self.check(x)
        acc = x
        t = x
        for _ in range(self.r - 1):
            t = self.pow(t, self.p)
            acc = self.add(acc, t)
        if any(acc[1:]):
            raise AssertionError("trace left the prime field")
        return acc[0]

    def dlog(self, x: FqElem) -> int:
        """Discrete log base the canonical generator; x = 0 is an error."""
        self.check(x)
        if x == self.zero:
            raise DomainError("dlog(0) is undefined")
        return self._log[self.encode(x)]

    def exp(self, k: int) -> FqElem:
        return self._exp[k % (self.q - 1)]


@lru_cache(maxsize=None)
def make_field(p: int, r: int) -> FieldContext:
    """Deterministic context for F_(p^r); bounds: r <= 12, p^r <= 10**6."""
    if not isinstance(p, int) or not isinstance(r, int):
        raise InvalidInputError("p and r must be integers")
    if not is_prime(p):
        raise InvalidInputError(f"p = {p} is not prime")
    if r < 1:
        raise InvalidInputError(f"r = {r} must be >= 1")
    if r > MAX_R or p**r > MAX_Q:
        raise CapacityError(f"F_{p}^{r} exceeds supported size (r <= {MAX_R}, q <= {MAX_Q})")
    return FieldContext(p, r)
