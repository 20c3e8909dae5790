"""Ramification data for abelian covers of curves over prime fields.

A cover is stored as combinatorial data only: the group, the prime, the
constant field degree, the base genus, and one PlaceDatum per ramified
place of the base curve.  Two families of covers are constructed from
explicit equations on the projective line (Kummer covers y^n = f and
Artin-Schreier covers y^p - y = f); arbitrary formal data can be
assembled with synthetic_cover.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import (
    ConstantExtensionError,
    CoverValidationError,
    DomainError,
    IncompleteDatumError,
    InvalidInputError,
    ReducibleCoverError,
    UnsupportedCoverError,
)
from .fields import poly_is_irreducible, poly_mod, poly_mul, poly_powmod, poly_trim
from .groups import (
    AbelianGroup,
    Character,
    Subgroup,
    _mod1,
    as_subgroup,
    cyclic_character,
    intersection,
    joint,
    sylow_p_subgroup,
)
from .numutil import factorize, is_prime, multiplicative_order, p_part

INFINITY = "inf"


# ---------------------------------------------------------------------------
# divisors on the projective line


def poly_string(coeffs) -> str:
    """Render ascending coefficients as a readable polynomial in x."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            xpow = "x" if i == 1 else "x^%d" % i
            terms.append(xpow if c == 1 else "%d%s" % (c, xpow))
    return "+".join(terms) if terms else "0"


class RationalFunctionDivisor:
    """Divisor on P^1 over F_p: monic irreducible places and 'inf'.

    Entries are (place, multiplicity) pairs where place is either the
    string 'inf' or a tuple of ascending coefficients of a monic
    irreducible polynomial.  Finite entries are sorted by (degree,
    coefficients); 'inf' sorts last.
    """

    def __init__(self, p, entries):
        if not is_prime(p):
            raise InvalidInputError("p must be prime, got %r" % (p,))
        self.p = p
        seen = set()
        cleaned = []
        for place, mult in entries:
            if mult == 0 or mult != int(mult):
                raise InvalidInputError("multiplicity must be a nonzero integer")
            if place == INFINITY:
                key = INFINITY
            else:
                poly = tuple(c % p for c in place)
                if poly_trim(list(poly)) != list(poly):
                    raise InvalidInputError("polynomial has trailing zeros: %r" % (place,))
                if len(poly) < 2 or poly[-1] != 1:
                    raise InvalidInputError("place polynomial must be monic nonconstant")
                if not poly_is_irreducible(poly, p):
                    raise InvalidInputError(
                        "reducible place polynomial %s over F_%d" % (poly_string(poly), p)
                    )
                key = poly
            if key in seen:
                raise InvalidInputError("duplicate place in divisor")
            seen.add(key)
            cleaned.append((key, int(mult)))
        cleaned.sort(key=lambda e: (1, 0, ()) if e[0] == INFINITY else (0, len(e[0]), e[0]))
        self.entries = tuple(cleaned)

    @staticmethod
    def place_degree(place) -> int:
        return 1 if place == INFINITY else len(place) - 1

    @staticmethod
    def place_label(place) -> str:
        return INFINITY if place == INFINITY else poly_string(place)

    def degree_sum(self) -> int:
        return sum(self.place_degree(pl) * m for pl, m in self.entries)

    def has_infinity(self) -> bool:
        return any(pl == INFINITY for pl, _ in self.entries)

    def completed(self) -> "RationalFunctionDivisor":
        """Append the infinite place so the degree-weighted sum vanishes."""
        if self.has_infinity():
            if self.degree_sum() != 0:
                raise InvalidInputError("divisor is not principal: degree sum nonzero")
            return self
        rest = -self.degree_sum()
        entries = list(self.entries)
        if rest != 0:
            entries.append((INFINITY, rest))
        return RationalFunctionDivisor(self.p, entries)

    def multiplicity(self, place) -> int:
        for pl, m in self.entries:
            if pl == place:
                return m
        return 0

    def is_divisible_by(self, ell: int) -> bool:
        return all(m % ell == 0 for _, m in self.entries)

    def function_label(self) -> str:
        """Label of the associated function, product of monic powers."""
        parts = []
        for pl, m in self.entries:
            if pl == INFINITY:
                continue
            base = self.place_label(pl)
            if len(pl) > 2 or any(c for c in pl[:-1]):
                base = "(%s)" % base
            parts.append(base if m == 1 else "%s^%d" % (base, m))
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunctionDivisor)
            and self.p == other.p
            and self.entries == other.entries
        )

    def __repr__(self):
        body = ", ".join("%s:%d" % (self.place_label(pl), m) for pl, m in self.entries)
        return "RationalFunctionDivisor(p=%d, %s)" % (self.p, body)


def _unit_order(z, modulus, p):
    """Multiplicative order of the unit z in F_p[x]/(modulus)."""
    deg = len(modulus) - 1
    m = p**deg - 1
    order = m
    for ell in factorize(m):
        while order % ell == 0 and poly_powmod(z, order // ell, modulus, p) == [1]:
            order //= ell
    return order


# ---------------------------------------------------------------------------
# place and cover data


@dataclass(eq=False)
class PlaceDatum:
    """Local data of one ramified place of the base curve.

    degree is the residue degree over F_p.  The tame character is the
    action on the cotangent line at a chosen point above the place:
    a character of the inertia subgroup whose kernel is exactly the
    wild subgroup.  conductor_overrides maps characters of the cover
    group to conductor exponents >= 2; it is only consulted at places
    that are wildly ramified for the character, and only for covers
    that are not declared weakly ramified.
    """

    label: str
    p: int
    degree: int
    inertia: Subgroup
    decomposition: Subgroup
    tame_char: Character
    conductor_overrides: dict = field(default=None)

    @property
    def e(self) -> int:
        return self.inertia.order

    @property
    def e_w(self) -> int:
        return p_part(self.inertia.order, self.p)

    @property
    def e_t(self) -> int:
        return self.inertia.order // self.e_w

    @property
    def f(self) -> int:
        return self.decomposition.order // self.inertia.order

    @property
    def wild_subgroup(self) -> Subgroup:
        return sylow_p_subgroup(self.inertia, self.p)

    @property
    def is_wild(self) -> bool:
        return self.e_w > 1

    @property
    def is_tame(self) -> bool:
        return self.e_w == 1

    def tame_part_elements(self):
        return tuple(g for g in self.inertia.elements() if self.inertia.element_order(g) % self.p != 0)

    def tame_index(self, chi: Character) -> int:
        """Index d in Z/e_t with tame_char^d = chi on the tame quotient."""
        targets = [(t, chi.value(t)) for t in self.tame_part_elements()]
        for d in range(self.e_t):
            if all(_mod1(d * self.tame_char.value(t)) == v for t, v in targets):
                return d
        raise DomainError("character does not factor through the tame quotient pairing")

    def ramification_kind(self, chi: Character) -> str:
        """How chi sees this place: 'unramified', 'tame' or 'wild'."""
        if chi.trivial_on(self.inertia):
            return "unramified"
        if chi.trivial_on(self.wild_subgroup):
            return "tame"
        return "wild"

    def conductor(self, chi: Character, weakly_ramified: bool) -> int:
        kind = self.ramification_kind(chi)
        if kind == "unramified":
            return 0
        if kind == "tame":
            return 1
        if self.conductor_overrides is not None and chi in self.conductor_overrides:
            return self.conductor_overrides[chi]
        if weakly_ramified:
            return 2
        raise IncompleteDatumError(
            "place %s: conductor of a wildly ramified character is not determined "
            "by the datum; supply conductor_overrides" % self.label
        )

    def different_exponent(self) -> int:
        """Exponent of the different at points above this place (weak case)."""
        return (self.e - 1) + (self.e_w - 1)

    def twisted(self, j: int) -> "PlaceDatum":
        """Replace the chosen point above the place by its Frobenius^j image.

        The cotangent character at the new point is the p^j-th power of
        the old one; all other local data is unchanged.
        """
        k = pow(self.p, j % max(1, self.degree * self.f), self.e_t) if self.e_t > 1 else 1
        return PlaceDatum(
            label=self.label,
            p=self.p,
            degree=self.degree,
            inertia=self.inertia,
            decomposition=self.decomposition,
            tame_char=self.tame_char**k,
            conductor_overrides=self.conductor_overrides,
        )

    def __repr__(self):
        return "PlaceDatum(%s, deg=%d, e_t=%d, e_w=%d, f=%d)" % (
            self.label,
            self.degree,
            self.e_t,
            self.e_w,
            self.f,
        )


@dataclass(eq=False)
class CoverDatum:
    """An abelian cover of a curve over F_p, reduced to its ramification data.

    r is the degree over F_p of the field of constants of the base
    curve; g_base the genus of the base curve over that field.  kind
    records how the datum was built ('kummer', 'artin-schreier' or
    'synthetic').  g_cover is the genus of the covering curve and is
    only computed for constructed covers (r = 1, weakly ramified).
    """

    group: object
    p: int
    r: int
    g_base: int
    places: tuple
    weakly_ramified: bool
    kind: str
    meta: dict = field(default_factory=dict)
    g_cover: int = None

    @property
    def n(self) -> int:
        return self.group.order

    def characters(self):
        return self.group.characters()

    def tame_places(self):
        return tuple(q for q in self.places if q.is_tame)

    def wild_places(self):
        return tuple(q for q in self.places if q.is_wild)

    def summary(self) -> str:
        inv = getattr(self.group, "invariant_factors", None)
        if inv is None:
            gname = "order-%d subgroup" % self.group.order
        else:
            gname = "Z/" + " x Z/".join(str(m) for m in inv) if inv else "1"
        tail = ""
        if self.meta.get("function"):
            tail = ", f=%s" % self.meta["function"]
        return "%s cover (%s, p=%d, r=%d, g_base=%d, %d ramified place(s)%s)" % (
            self.kind,
            gname,
            self.p,
            self.r,
            self.g_base,
            len(self.places),
            tail,
        )

    def __repr__(self):
        return "CoverDatum(%s)" % self.summary()


def riemann_hurwitz_genus(n, g_base, places):
    """Genus of the cover from the base genus and the different.

    2 g_X - 2 = n (2 g_base - 2) + sum_q n deg(q) d_q / e_q where the
    different exponent d_q is (e-1) + (e_w-1) at weakly ramified places.
    """
    total = Fraction(2 * n * (g_base - 1))
    for q in places:
        total += Fraction(n * q.degree * q.different_exponent(), q.e)
    if total % 2 != 0:
        raise CoverValidationError("genus-integral", "2g-2 = %s is not an even integer" % total)
    g = Fraction(total + 2, 2)
    if g.denominator != 1 or g < 0:
        raise CoverValidationError("genus-integral", "computed genus %s" % g)
    return int(g)


def validate_cover(cover: CoverDatum) -> None:
    """Check the structural invariants of a cover datum.

    Raises CoverValidationError naming the violated invariant.
    """
    group = cover.group
    if not is_prime(cover.p):
        raise CoverValidationError("prime", "p = %r is not prime" % (cover.p,))
    if cover.r < 1:
        raise CoverValidationError("constants", "r must be >= 1")
    if cover.g_base < 0:
        raise CoverValidationError("genus", "g_base must be >= 0")
    labels = [q.label for q in cover.places]
    if len(set(labels)) != len(labels):
        raise CoverValidationError("labels-distinct", "duplicate place labels")
    group_sub = as_subgroup(group)
    for q in cover.places:
        where = "place %s" % q.label
        if q.p != cover.p:
            raise CoverValidationError("prime", "%s carries a different prime" % where)
        if q.degree < 1:
            raise CoverValidationError("degree", "%s has nonpositive degree" % where)
        if q.inertia.root != group_sub.root or q.decomposition.root != group_sub.root:
            raise CoverValidationError("subgroup-root", "%s subgroups live in another group" % where)
        if not q.inertia.is_subset_of(group_sub) or not q.decomposition.is_subset_of(group_sub):
            raise CoverValidationError("subgroup-containment", "%s subgroups exceed the cover group" % where)
        if not q.inertia.is_subset_of(q.decomposition):
            raise CoverValidationError(
                "inertia-in-decomposition", "%s inertia not inside decomposition" % where
            )
        if q.e <= 1:
            raise CoverValidationError("place-ramified", "%s is unramified and must not be stored" % where)
        if q.e_t > 1 and pow(cover.p, q.degree, q.e_t) != 1:
            raise CoverValidationError(
                "tame-roots-of-unity",
                "%s: e_t = %d does not divide p^deg - 1 = %d" % (where, q.e_t, cover.p**q.degree - 1),
            )
        xi = q.tame_char
        if xi.domain != q.inertia:
            raise CoverValidationError("tame-character", "%s tame character not on inertia" % where)
        if xi.order != q.e_t or not xi.trivial_on(q.wild_subgroup):
            raise CoverValidationError(
                "tame-character",
                "%s tame character must have order e_t with kernel the wild subgroup" % where,
            )
        if q.conductor_overrides is not None:
            for chi, cd in q.conductor_overrides.items():
                if chi.domain != group:
                    raise CoverValidationError(
                        "conductor-domain", "%s conductor override keyed off-group" % where
                    )
                if q.ramification_kind(chi) != "wild":
                    raise CoverValidationError(
                        "conductor-overrides",
                        "%s override given for a character that is not wildly ramified" % where,
                    )
                if cd < 2:
                    raise CoverValidationError(
                        "conductor-overrides", "%s wild conductor must be >= 2" % where
                    )
                if cover.weakly_ramified and cd != 2:
                    raise CoverValidationError(
                        "weak-conductor", "%s conductor %d > 2 on a weakly ramified cover" % (where, cd)
                    )
        if cover.weakly_ramified and q.e_t > 1 and q.e_w > 1:
            raise CoverValidationError(
                "dichotomy",
                "%s has e_t = %d and e_w = %d; weak ramification forces one of them to be 1"
                % (where, q.e_t, q.e_w),
            )
    if cover.g_cover is not None:
        if cover.r != 1:
            raise CoverValidationError("genus", "g_cover is only meaningful for r = 1")
        expected = riemann_hurwitz_genus(group.order, cover.g_base, cover.places)
        if expected != cover.g_cover:
            raise CoverValidationError(
                "genus-integral", "stored g_cover = %d but the different gives %d" % (cover.g_cover, expected)
            )


# ---------------------------------------------------------------------------
# Kummer covers y^n = f


def kummer_cover(p: int, n: int, divisor) -> CoverDatum:
    """Cover of P^1 over F_p given by y^n = f, f the function of the divisor.

    Requires n | p - 1 so that the cover is geometrically abelian
    without extending constants.  The divisor lists the finite zeros
    and poles of f as monic irreducible polynomials with multiplicities;
    the infinite place is completed automatically (f is the product of
    monic polynomial powers, so its leading unit at infinity is 1).
    """
    if n < 2:
        raise InvalidInputError("n must be >= 2")
    if not is_prime(p):
        raise InvalidInputError("p must be prime")
    if (p - 1) % n != 0:
        raise ConstantExtensionError(
            "y^n = f with n = %d needs the n-th roots of unity in F_%d; n must divide p - 1" % (n, p)
        )
    if not isinstance(divisor, RationalFunctionDivisor):
        divisor = RationalFunctionDivisor(p, divisor)
    divisor = divisor.completed()
    for ell in factorize(n):
        if divisor.is_divisible_by(ell):
            raise ReducibleCoverError(
                "div(f) is divisible by %d, so y^%d = f is not irreducible" % (ell, n)
            )

    group = AbelianGroup((n,))
    places = []
    for place, m in divisor.entries:
        g = gcd(n, m % n)
        e = n // g
        if e == 1:
            continue  # unramified
        deg = divisor.place_degree(place)
        m_red = (m // g) % e  # prime to e
        # order of the leading unit of f at this place, in the residue field
        if place == INFINITY:
            unit_order = 1
        else:
            modulus = list(place)
            z = [1]
            for other, mo in divisor.entries:
                if other == place or other == INFINITY:
                    continue
                base = poly_mod(list(other), modulus, p)
                if mo < 0:
                    base = poly_powmod(base, p**deg - 2, modulus, p)  # inverse in F_{p^deg}
                    mo = -mo
                z = poly_mod(poly_mul(z, poly_powmod(base, mo, modulus, p), p), modulus, p)
            unit_order = _unit_order(z, modulus, p)
        og = unit_order * g
        residual = multiplicative_order(pow(p, deg, og), og) if og > 1 else 1
        if n % (e * residual) != 0:
            raise CoverValidationError("decomposition-order", "e*f does not divide n")
        inertia = group.subgroup([(g % n,)])
        decomposition = group.subgroup([(n // (e * residual),)])
        # uniformizer t = y^a pi^b with a m' + b e = 1 transforms by zeta_e^a
        a = pow(m_red, -1, e)
        xi = cyclic_character(inertia, (g % n,), a)
        places.append(
            PlaceDatum(
                label=divisor.place_label(place),
                p=p,
                degree=deg,
                inertia=inertia,
                decomposition=decomposition,
                tame_char=xi,
            )
        )
    cover = CoverDatum(
        group=group,
        p=p,
        r=1,
        g_base=0,
        places=tuple(places),
        weakly_ramified=True,
        kind="kummer",
        meta={"n": n, "function": divisor.function_label(), "divisor": divisor},
    )
    cover.g_cover = riemann_hurwitz_genus(n, 0, cover.places)
    validate_cover(cover)
    return cover


# ---------------------------------------------------------------------------
# Artin-Schreier covers y^p - y = f


def artin_schreier_cover(p: int, divisor) -> CoverDatum:
    """Cover of P^1 over F_p given by y^p - y = f.

    Only the pole part of the divisor is used; every pole must be
    simple, which is exactly the weakly ramified case.  Entries with
    positive multiplicity (zeros of f) carry no ramification and are
    ignored.  A function with a simple pole is never of the form
    h^p - h + c, so the cover is automatically irreducible; at least
    one pole is required.
    """
    if not is_prime(p):
        raise InvalidInputError("p must be prime")
    if not isinstance(divisor, RationalFunctionDivisor):
        divisor = RationalFunctionDivisor(p, divisor)
    poles = [(pl, m) for pl, m in divisor.entries if m < 0]
    if not poles:
        raise ReducibleCoverError("y^p - y = f needs at least one pole of f")
    for pl, m in poles:
        if m != -1:
            raise UnsupportedCoverError(
                "pole of order %d at %s: only simple poles are weakly ramified"
                % (-m, divisor.place_label(pl))
            )

    group = AbelianGroup((p,))
    full = group.full_subgroup()
    xi = full.trivial_character()  # tame quotient is trivial
    places = tuple(
        PlaceDatum(
            label=divisor.place_label(pl),
            p=p,
            degree=divisor.place_degree(pl),
            inertia=full,
            decomposition=full,
            tame_char=xi,
        )
        for pl, _ in poles
    )
    cover = CoverDatum(
        group=group,
        p=p,
        r=1,
        g_base=0,
        places=places,
        weakly_ramified=True,
        kind="artin-schreier",
        meta={"function": "poles at " + ", ".join(q.label for q in places), "divisor": divisor},
    )
    cover.g_cover = riemann_hurwitz_genus(p, 0, cover.places)
    validate_cover(cover)
    return cover


# ---------------------------------------------------------------------------
# synthetic covers


def synthetic_cover(group, p, r, g_base, places, weakly_ramified=True, compute_genus=False):
    """Assemble a cover datum from explicitly given local data.

    places may mix PlaceDatum objects and keyword dictionaries; the
    datum is validated but nothing is derived from an equation.  The
    genus of the cover is computed from the different only on request
    (requires r = 1 and weak ramification).
    """
    built = []
    for i, q in enumerate(places):
        if isinstance(q, PlaceDatum):
            built.append(q)
            continue
        spec = dict(q)
        spec.setdefault("label", "q%d" % i)
        spec.setdefault("p", p)
        built.append(PlaceDatum(**spec))
    cover = CoverDatum(
        group=group,
        p=p,
        r=r,
        g_base=g_base,
        places=tuple(built),
        weakly_ramified=weakly_ramified,
        kind="synthetic",
    )
    if compute_genus:
        if r != 1:
            raise UnsupportedCoverError("genus computation needs r = 1")
        cover.g_cover = riemann_hurwitz_genus(group.order, g_base, cover.places)
    validate_cover(cover)
    return cover


def random_weakly_ramified_cover(rng, max_places=3):
    """Random synthetic weakly ramified datum for sweep tests.

    Inertia is cyclic of prime-to-p order with a faithful cotangent
    character at tame places, and elementary abelian of p-power order
    with trivial cotangent character at wild places, so the dichotomy
    holds by construction.  Tame places are emitted either as pairs
    with inverse cotangent characters or singly with e = 2 and even
    degree: real covers satisfy a global reciprocity that makes the
    structure element integral, and these two patterns reproduce it.
    """
    shapes = [
        (2,),
        (3,),
        (4,),
        (5,),
        (6,),
        (8,),
        (9,),
        (10,),
        (12,),
        (2, 2),
        (2, 4),
        (2, 6),
        (3, 3),
        (2, 2, 2),
        (2, 12),
        (4, 4),
        (18,),
        (24,),
    ]
    group = AbelianGroup(rng.choice(shapes))
    p = rng.choice([2, 2, 3, 3, 5, 7])
    r = rng.choice([1, 1, 2, 3])
    g_base = rng.choice([0, 0, 1, 2])
    elements = group.elements()

    def random_decomposition(inertia):
        if rng.random() < 0.5:
            # quotient by inertia is generated by one class, hence cyclic
            return joint(inertia, group.subgroup([rng.choice(elements)]))
        return inertia

    places = []
    for _ in range(rng.randrange(max_places + 1)):
        wild_possible = group.order % p == 0
        make_wild = wild_possible and rng.random() < 0.4
        if make_wild:
            p_elements = [g for g in elements if group.element_order(g) == p]
            gens = rng.sample(p_elements, k=min(len(p_elements), rng.choice([1, 1, 2])))
            inertia = group.subgroup(gens)
            places.append((inertia, rng.choice([1, 1, 2]), inertia.trivial_character()))
            continue
        tame_elts = [
            g
            for g in elements
            if group.element_order(g) % p != 0 and group.element_order(g) > 1
        ]
        if not tame_elts:
            continue
        t = rng.choice(tame_elts)
        inertia = group.subgroup([t])
        e = inertia.order
        k = rng.choice([a for a in range(1, e) if gcd(a, e) == 1])
        xi = cyclic_character(inertia, t, k)
        degree = multiplicative_order(p % e, e) * rng.choice([1, 1, 2])
        if e == 2 and rng.random() < 0.5:
            degree = degree if degree % 2 == 0 else 2 * degree
            places.append((inertia, degree, xi))
        else:
            places.append((inertia, degree, xi))
            places.append((inertia, degree, xi.inverse()))
    data = [
        PlaceDatum(
            label="q%d" % i,
            p=p,
            degree=degree,
            inertia=inertia,
            decomposition=random_decomposition(inertia),
            tame_char=xi,
        )
        for i, (inertia, degree, xi) in enumerate(places)
        if inertia.order > 1
    ]
    return synthetic_cover(group, p, r, g_base, data, weakly_ramified=True)


# ---------------------------------------------------------------------------
# passing to subcovers


def subcover_data(cover: CoverDatum, sub) -> CoverDatum:
    """Data of the cover X -> X/H for a subgroup H of the cover group.

    Places of X/H above a place q of the base: [G : H D_q] of them, each
    with inertia H n I_q, decomposition H n D_q, residue degree
    deg(q) f_q |H n I_q| / |H n D_q|, and the restricted cotangent
    character.  The base genus of the new datum is the genus of X/H,
    solved from the different of X -> X/H; this needs the genus of X,
    so the cover must be constructed (or carry g_cover).
    """
    if cover.g_cover is None:
        raise UnsupportedCoverError(
            "subcover data needs the genus of the covering curve; "
            "synthetic data does not determine it"
        )
    if cover.r != 1:
        raise UnsupportedCoverError("subcover data is only implemented over constants F_p")
    group_sub = as_subgroup(cover.group)
    h = as_subgroup(sub) if not isinstance(sub, Subgroup) else sub
    if h.root != group_sub.root or not h.is_subset_of(group_sub):
        raise InvalidInputError("H is not a subgroup of the cover group")

    new_places = []
    ram_total = Fraction(0)
    for q in cover.places:
        inertia = intersection(h, q.inertia)
        decomposition = intersection(h, q.decomposition)
        count = cover.group.order // joint(h, q.decomposition).order
        deg = q.degree * q.f * inertia.order // decomposition.order
        if q.degree * q.f * inertia.order % decomposition.order != 0:
            raise CoverValidationError("subcover-degree", "degree above %s not integral" % q.label)
        wild_order = p_part(inertia.order, cover.p)
        d_exp = (inertia.order - 1) + (wild_order - 1)
        ram_total += count * Fraction(h.order * deg * d_exp, inertia.order)
        if inertia.order == 1:
            continue  # unramified in X -> X/H
        xi = q.tame_char.restrict(inertia)
        for i in range(count):
            label = q.label if count == 1 else "%s|%d" % (q.label, i)
            new_places.append(
                PlaceDatum(
                    label=label,
                    p=cover.p,
                    degree=deg,
                    inertia=inertia,
                    decomposition=decomposition,
                    tame_char=xi,
                )
            )
    # 2 g_X - 2 = |H| (2 g' - 2) + ramification of X -> X/H
    doubled = Fraction(2 * cover.g_cover - 2) - ram_total
    g_quot = (doubled / h.order + 2) / 2
    if g_quot.denominator != 1 or g_quot < 0:
        raise CoverValidationError("genus-integral", "quotient genus %s" % g_quot)
    quotient = CoverDatum(
        group=h,
        p=cover.p,
        r=1,
        g_base=int(g_quot),
        places=tuple(new_places),
        weakly_ramified=cover.weakly_ramified,
        kind=cover.kind,
        meta={"parent": cover.summary(), "subgroup_order": h.order},
        g_cover=cover.g_cover,
    )
    validate_cover(quotient)
    return quotient


# ---------------------------------------------------------------------------
# serialization


def _divisor_to_obj(divisor: RationalFunctionDivisor):
    return [[pl if pl == INFINITY else list(pl), m] for pl, m in divisor.entries]


def _divisor_from_obj(p, obj):
    entries = []
    for item in obj:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise InvalidInputError("divisor entries must be [place, multiplicity] pairs")
        place, mult = item
        if place != INFINITY:
            place = tuple(place)
        entries.append((place, mult))
    return RationalFunctionDivisor(p, entries)


def _fraction_pair(x: Fraction):
    return [x.numerator, x.denominator]


def _subgroup_to_obj(sub: Subgroup):
    return [list(g) for g in sub.generators]


def _character_to_obj(chi: Character):
    return [[list(g), _fraction_pair(chi.value(g))] for g in chi.domain.generators]


def _character_from_obj(sub: Subgroup, obj) -> Character:
    targets = [(tuple(g), Fraction(num, den)) for g, (num, den) in obj]
    for chi in sub.characters():
        if all(chi.value(g) == v for g, v in targets):
            return chi
    raise InvalidInputError("no character of the subgroup matches the stored values")


def cover_to_json(cover: CoverDatum) -> str:
    """Serialize a cover datum to a canonical JSON string.

    Constructed covers are stored by their defining divisor; synthetic
    covers field by field.  Subcover data (group a proper subgroup) is
    not serializable.
    """
    if cover.kind in ("kummer", "artin-schreier") and "divisor" in cover.meta:
        obj = {"kind": cover.kind, "p": cover.p, "divisor": _divisor_to_obj(cover.meta["divisor"])}
        if cover.kind == "kummer":
            obj["n"] = cover.meta["n"]
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    if not isinstance(cover.group, AbelianGroup):
        raise UnsupportedCoverError("only covers of the full group are serializable")
    places = []
    for q in cover.places:
        entry = {
            "label": q.label,
            "degree": q.degree,
            "inertia": _subgroup_to_obj(q.inertia),
            "decomposition": _subgroup_to_obj(q.decomposition),
            "tame_char": _character_to_obj(q.tame_char),
        }
        if q.conductor_overrides:
            entry["conductors"] = sorted(
                [list(chi.exponents(cover.group)), cd] for chi, cd in q.conductor_overrides.items()
            )
        places.append(entry)
    obj = {
        "kind": "synthetic",
        "group": list(cover.group.invariant_factors),
        "p": cover.p,
        "r": cover.r,
        "g_base": cover.g_base,
        "weakly_ramified": cover.weakly_ramified,
        "places": places,
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cover_from_json(text: str) -> CoverDatum:
    """Rebuild a cover datum from its JSON form; raises InvalidInputError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError("invalid JSON: %s" % exc) from None
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidInputError("cover JSON must be an object with a 'kind' field")
    kind = obj["kind"]
    try:
        if kind == "kummer":
            divisor = _divisor_from_obj(obj["p"], obj["divisor"])
            return kummer_cover(obj["p"], obj["n"], divisor)
        if kind == "artin-schreier":
            divisor = _divisor_from_obj(obj["p"], obj["divisor"])
            return artin_schreier_cover(obj["p"], divisor)
        if kind == "synthetic":
            group = AbelianGroup(tuple(obj["group"]))
            places = []
            for entry in obj["places"]:
                inertia = group.subgroup([tuple(g) for g in entry["inertia"]])
                decomposition = group.subgroup([tuple(g) for g in entry["decomposition"]])
                overrides = None
                if "conductors" in entry:
                    overrides = {
                        group.character(tuple(exps)): cd for exps, cd in entry["conductors"]
                    }
                places.append(
                    PlaceDatum(
                        label=entry["label"],
                        p=obj["p"],
                        degree=entry["degree"],
                        inertia=inertia,
                        decomposition=decomposition,
                        tame_char=_character_from_obj(inertia, entry["tame_char"]),
                        conductor_overrides=overrides,
                    )
                )
            return synthetic_cover(
                group,
                obj["p"],
                obj.get("r", 1),
                obj.get("g_base", 0),
                places,
                weakly_ramified=obj.get("weakly_ramified", True),
            )
    except KeyError as exc:
        raise InvalidInputError("cover JSON is missing field %s" % exc) from None
    except (TypeError, ValueError) as exc:
        raise InvalidInputError("malformed cover JSON: %s" % exc) from None
    raise InvalidInputError("unknown cover kind %r" % (kind,))
