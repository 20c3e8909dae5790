"""Equivariant Euler characteristics of invariant divisors on a cover.

The central object is a structure element psi(cover, D) in the group
of projective modular representations.  It is assembled from an
explicit three-summand formula over the ramified places; despite a
1/n factor in the first summand the result is integral, and that is
asserted.  The multiplicity of a character in e(psi) is computed by
three independent routes (a closed formula, a point-by-point
enumeration, and the pairing through the cde maps), whose agreement
is one of the package's acceptance checks.
"""

from dataclasses import dataclass
from fractions import Fraction

from .covers import CoverDatum, PlaceDatum
from .errors import (
    IntegralityError,
    InvalidInputError,
    NotWeaklyRamifiedError,
)
from .groups import (
    LEVEL_CHAR0,
    LEVEL_PROJECTIVES,
    Character,
    K0Element,
    _mod1,
    cartan_map,
    decomposition_map,
    induce,
)


@dataclass(frozen=True)
class LMParts:
    """The split n = (e_w - 1) + (l + m e_t) e_w with 0 <= l < e_t."""

    l: int
    m: int


class DivisorSpec:
    """Invariant divisor on the cover, one coefficient per ramified place.

    The coefficient n_q applies to every point above q; places not
    listed get 0.  Each n_q must be congruent to -1 mod e_w(q), which
    is automatic at tame places.
    """

    def __init__(self, cover: CoverDatum, coefficients=None):
        self.cover = cover
        known = {q.label: q for q in cover.places}
        coefficients = dict(coefficients or {})
        for label in coefficients:
            if label not in known:
                raise InvalidInputError("divisor names unknown place %r" % (label,))
        values = {}
        for label, q in known.items():
            n = coefficients.get(label, 0)
            if n != int(n):
                raise InvalidInputError("divisor coefficients must be integers")
            if (n + 1) % q.e_w != 0:
                raise InvalidInputError(
                    "coefficient %d at %s violates n = -1 mod e_w = %d" % (n, label, q.e_w)
                )
            if n != 0:
                values[label] = int(n)
        self.values = values

    @staticmethod
    def zero(cover: CoverDatum) -> "DivisorSpec":
        return DivisorSpec(cover, {})

    @staticmethod
    def wild_canonical(cover: CoverDatum) -> "DivisorSpec":
        """The divisor with -1 at every point above a wild place, 0 elsewhere."""
        return DivisorSpec(cover, {q.label: -1 for q in cover.wild_places()})

    def value(self, place) -> int:
        label = place.label if isinstance(place, PlaceDatum) else place
        return self.values.get(label, 0)

    def is_zero(self) -> bool:
        return not self.values

    def degree_bar(self):
        """Degree of the divisor upstairs: n deg(q)/e_q points above q."""
        total = Fraction(0)
        n = self.cover.group.order
        for q in self.cover.places:
            total += Fraction(self.value(q) * n * q.degree, q.e)
        if total.denominator != 1:
            raise IntegralityError("divisor degree %s is not an integer" % total)
        return int(total)

    def __repr__(self):
        return "DivisorSpec(%r)" % (self.values,)


def lm_decompose(place: PlaceDatum, n: int) -> LMParts:
    """Unique (l, m) with n = (e_w - 1) + (l + m e_t) e_w, 0 <= l < e_t.

    Unramified places give (0, n), tame places solve l + m e = n, and
    wild places give (0, (n - e + 1)/e).
    """
    e_t, e_w = place.e_t, place.e_w
    if (n + 1) % e_w != 0:
        raise InvalidInputError("n = %d is not -1 mod e_w = %d" % (n, e_w))
    k = (n - (e_w - 1)) // e_w
    l = k % e_t
    return LMParts(l, (k - l) // e_t)


def g_term(l: int, e: int, d: int, q_base: int, i: int) -> Fraction:
    """The rational in [-l/e, 1-l/e) congruent to d q^i / e mod 1."""
    if not 0 <= l < e:
        raise InvalidInputError("l = %d must lie in [0, e = %d)" % (l, e))
    if not 0 <= d < e:
        raise InvalidInputError("d = %d must lie in [0, e = %d)" % (d, e))
    if i < 0 or q_base < 2:
        raise InvalidInputError("need i >= 0 and q_base >= 2")
    frac = Fraction(d * pow(q_base, i, e) % e, e)
    if frac >= 1 - Fraction(l, e):
        return frac - 1
    return frac


def _require_weak(cover: CoverDatum):
    if not cover.weakly_ramified:
        raise NotWeaklyRamifiedError(
            "the structure formula needs a weakly ramified cover"
        )


def _base_term(cover: CoverDatum, D: DivisorSpec) -> Fraction:
    total = Fraction(cover.r * (1 - cover.g_base))
    for q in cover.places:
        parts = lm_decompose(q, D.value(q))
        total += q.degree * parts.m
    return total


def psi_structure(cover: CoverDatum, D: DivisorSpec = None) -> K0Element:
    """The structure element psi(cover, D) at the projective level.

    Three summands, expanded over the fibers: above a place q there
    are n deg(q)/e_q points of the covering curve, falling into deg(q)
    Frobenius-twist classes of n/e_q points each with cotangent
    character xi^(p^j); and deg(q) points of the base change of the
    base curve.  Only tamely ramified places contribute to the first
    two summands.
    """
    _require_weak(cover)
    if D is None:
        D = DivisorSpec.wild_canonical(cover)
    group = cover.group
    p = cover.p
    acc = K0Element.zero(group, LEVEL_PROJECTIVES, p=p)
    for q in cover.places:
        parts = lm_decompose(q, D.value(q))
        if q.e_t == 1:
            continue
        e = q.e_t
        xi = q.tame_char
        cov_cache = {}

        def ind_cov(theta):
            if theta not in cov_cache:
                cov_cache[theta] = induce(
                    K0Element(q.inertia, LEVEL_PROJECTIVES, {theta: 1}, p=p), group
                )
            return cov_cache[theta]

        for j in range(q.degree):
            twist = pow(p, j, e)
            xi_j = xi**twist
            for d in range(1, e):
                acc = acc + ind_cov(xi_j**d).scale(Fraction(-d, e))
            for d in range(1, parts.l + 1):
                acc = acc + ind_cov(xi_j**-d)
    acc = acc + K0Element.regular(group, LEVEL_PROJECTIVES, p=p).scale(_base_term(cover, D))
    if not acc.is_integral():
        raise IntegralityError("structure element has non-integral coefficients: %r" % acc)
    return acc


def multiplicity_closed(cover: CoverDatum, D: DivisorSpec, chi: Character) -> Fraction:
    """Closed form for the multiplicity of chi in e(psi(cover, D))."""
    _require_weak(cover)
    if D is None:
        D = DivisorSpec.wild_canonical(cover)
    total = _base_term(cover, D)
    for q in cover.places:
        if not (q.e_t > 1 and q.e_w == 1):
            continue
        parts = lm_decompose(q, D.value(q))
        d = q.tame_index(chi)
        for i in range(q.degree):
            total -= g_term(parts.l, q.e_t, d, cover.p, i)
    return total


def multiplicity_direct(cover: CoverDatum, D: DivisorSpec, chi: Character) -> Fraction:
    """Point-enumeration form of the multiplicity of chi in e(psi(cover, D)).

    For each tame place the index of chi against the cotangent
    character is solved independently at every residue-field embedding
    (the f_q extensions of an embedding give the same composition, so
    the deg(q) f_q points collapse onto deg(q) classes weighted 1/e).
    """
    _require_weak(cover)
    if D is None:
        D = DivisorSpec.wild_canonical(cover)
    total = _base_term(cover, D)
    for q in cover.places:
        if not (q.e_t > 1 and q.e_w == 1):
            continue
        parts = lm_decompose(q, D.value(q))
        e = q.e_t
        xi = q.tame_char
        targets = [(t, chi.value(t)) for t in q.inertia.elements()]
        for j in range(q.degree):
            twist = pow(cover.p, j, e)
            solved = None
            for d in range(e):
                if all(_mod1(d * twist * xi.value(t)) == v for t, v in targets):
                    solved = d
                    break
            if solved is None:
                raise InvalidInputError(
                    "character does not match the cotangent data at %s" % q.label
                )
            total -= Fraction(solved, e)
            if solved >= e - parts.l:
                total += 1
    return total


def euler_char_structure_sheaf(cover: CoverDatum) -> K0Element:
    """chi(G, X-bar, structure sheaf) in the group of modular characters.

    Computed as the Cartan image of psi at the canonical wild divisor
    plus, for each point of the base change of the base curve above a
    wild place, the modular class of the induction of the trivial
    character of the local group at that point.
    """
    _require_weak(cover)
    result = cartan_map(psi_structure(cover, DivisorSpec.wild_canonical(cover)))
    for q in cover.wild_places():
        one = K0Element(q.inertia, LEVEL_CHAR0, {q.inertia.trivial_character(): 1})
        ind = decomposition_map(induce(one, cover.group), cover.p)
        result = result + ind.scale(q.degree)
    return result
