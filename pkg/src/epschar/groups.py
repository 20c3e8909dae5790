"""Finite abelian groups, their characters, and the cde triangle.

Groups come in two shapes sharing one informal protocol: AbelianGroup
(a product of cyclic groups given by an invariant-factor chain, elements
are exponent tuples) and Subgroup (a subset of a root AbelianGroup,
closed under the root operations; subcovers and inertia subgroups live
here).  Characters are stored as their full value table, a tuple of
rationals modulo 1 aligned with the domain's canonical element order,
so characters of a subgroup obtained by restriction compare canonically.

K0Element models virtual modules at one of three levels:

* "char0"       - K_0 of the group algebra in characteristic zero,
                  basis all characters;
* "modules"     - the modular Grothendieck group of finitely generated
                  modules, basis the characters of order prime to p;
* "projectives" - the modular Grothendieck group of projectives, basis
                  the projective covers Cov(theta), labeled by the same
                  prime-to-p characters.

decomposition_map (d), cartan_map (c) and e_map (e) form the usual
commuting triangle c = d o e; restrict and induce are exact-adjoint as
Frobenius reciprocity demands, and all coefficients are Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm

from .errors import DomainError, GroupMismatchError, InvalidInputError, LevelError
from .numutil import p_part

LEVEL_CHAR0 = "char0"
LEVEL_MODULES = "modules"
LEVEL_PROJECTIVES = "projectives"
LEVELS = (LEVEL_CHAR0, LEVEL_MODULES, LEVEL_PROJECTIVES)


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class AbelianGroup:
    """Product of Z/n_i with n_1 | n_2 | ... (trivial group: empty tuple)."""

    invariant_factors: tuple

    def __post_init__(self):
        fs = tuple(int(n) for n in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for n in fs:
            if n < 2:
                raise InvalidInputError("invariant factors must be >= 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise InvalidInputError(f"invariant factors must form a divisibility chain, got {fs}")

    # -- group structure ------------------------------------------------

    @property
    def order(self) -> int:
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    @property
    def identity(self):
        return (0,) * len(self.invariant_factors)

    @property
    def root(self):
        return self

    def elements(self):
        return _group_elements(self)

    def element_index(self, g):
        idx = _element_index(self)
        if g not in idx:
            raise DomainError(f"{g} is not an element of {self}")
        return idx[g]

    def mul(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.invariant_factors))

    def inv(self, a):
        return tuple((-x) % n for x, n in zip(a, self.invariant_factors))

    def element_order(self, a) -> int:
        return lcm(1, *(n // gcd(x, n) for x, n in zip(a, self.invariant_factors)))

    def contains(self, g) -> bool:
        return g in _element_index(self)

    # -- characters -------------------------------------------------------

    def characters(self):
        return _group_characters(self)

    def character(self, exponents) -> "Character":
        """Character with chi(std generator i) = exp(2 pi i a_i / n_i)."""
        if len(exponents) != len(self.invariant_factors):
            raise DomainError("exponent tuple has wrong length")
        values = []
        for g in self.elements():
            v = sum(Fraction(a * x, n) for a, x, n in
                    zip(exponents, g, self.invariant_factors)) if g else Fraction(0)
            values.append(_mod1(Fraction(v)))
        return Character(self, tuple(values))

    def trivial_character(self) -> "Character":
        return Character(self, (Fraction(0),) * self.order)

    def subgroup(self, generators) -> "Subgroup":
        return Subgroup.generated(self, generators)

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, frozenset(self.elements()))

    def __repr__(self):
        return f"AbelianGroup{self.invariant_factors}"


@lru_cache(maxsize=None)
def _group_elements(group: AbelianGroup):
    ranges = [range(n) for n in group.invariant_factors]
    return tuple(product(*ranges)) if ranges else ((),)


@lru_cache(maxsize=None)
def _element_index(group: AbelianGroup):
    return {g: i for i, g in enumerate(_group_elements(group))}


@lru_cache(maxsize=None)
def _group_characters(group: AbelianGroup):
    out = []
    ranges = [range(n) for n in group.invariant_factors]
    for exps in (product(*ranges) if ranges else [()]):
        out.append(group.character(exps))
    return tuple(out)


class Subgroup:
    """A subgroup of a root AbelianGroup, stored as its element set."""

    def __init__(self, root: AbelianGroup, elements: frozenset, generators=None):
        self.root = root
        self.element_set = frozenset(elements)
        self._elements = tuple(sorted(self.element_set))
        self._index = {g: i for i, g in enumerate(self._elements)}
        self.generators = tuple(generators) if generators is not None else self._find_generators()
        if root.identity not in self.element_set:
            raise DomainError("subgroup must contain the identity")

    @staticmethod
    def generated(root: AbelianGroup, generators) -> "Subgroup":
        gens = [tuple(g) for g in generators]
        for g in gens:
            if not root.contains(g):
                raise DomainError(f"{g} is not an element of the root group")
        seen = {root.identity}
        frontier = [root.identity]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = root.mul(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return Subgroup(root, frozenset(seen), generators=gens)

    def _find_generators(self):
        gens = []
        have = Subgroup.generated(self.root, [])
        for g in self._elements:
            if g not in have.element_set:
                gens.append(g)
                have = Subgroup.generated(self.root, gens)
                if have.element_set == self.element_set:
                    break
        return tuple(gens)

    # -- group protocol ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.element_set)

    @property
    def identity(self):
        return self.root.identity

    def elements(self):
        return self._elements

    def element_index(self, g):
        if g not in self._index:
            raise DomainError(f"{g} is not in this subgroup")
        return self._index[g]

    def mul(self, a, b):
        return self.root.mul(a, b)

    def inv(self, a):
        return self.root.inv(a)

    def element_order(self, a) -> int:
        return self.root.element_order(a)

    def contains(self, g) -> bool:
        return g in self.element_set

    def is_subset_of(self, other) -> bool:
        return self.element_set <= _element_set(other)

    def characters(self):
        if not hasattr(self, "_characters"):
            seen = {}
            for chi in self.root.characters():
                res = chi.restrict(self)
                seen[res.values] = res
            self._characters = tuple(seen[v] for v in sorted(seen))
        return self._characters

    def trivial_character(self) -> "Character":
        return Character(self, (Fraction(0),) * self.order)

    def subgroup(self, generators) -> "Subgroup":
        sub = Subgroup.generated(self.root, generators)
        if not sub.element_set <= self.element_set:
            raise DomainError("generators leave the subgroup")
        return sub

    def full_subgroup(self) -> "Subgroup":
        return self

    def __eq__(self, other):
        if isinstance(other, Subgroup):
            return self.root == other.root and self.element_set == other.element_set
        if isinstance(other, AbelianGroup):
            return self.root == other and len(self.element_set) == other.order
        return NotImplemented

    def __hash__(self):
        return hash((self.root, self.element_set))

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.root})"


def _element_set(group):
    if isinstance(group, Subgroup):
        return group.element_set
    return frozenset(group.elements())


def as_subgroup(group) -> Subgroup:
    return group if isinstance(group, Subgroup) else group.full_subgroup()


def intersection(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.root != b.root:
        raise GroupMismatchError("subgroups of different roots")
    return Subgroup(a.root, a.element_set & b.element_set)


def joint(a: Subgroup, b: Subgroup) -> Subgroup:
    """Subgroup generated by a and b together."""
    if a.root != b.root:
        raise GroupMismatchError("subgroups of different roots")
    return Subgroup.generated(a.root, list(a.generators) + list(b.generators))


def sylow_p_subgroup(group, p: int) -> Subgroup:
    """Unique Sylow p-subgroup of an abelian group(-like)."""
    members = [g for g in group.elements() if p_part(group.element_order(g), p)
               == group.element_order(g)]
    return Subgroup(group.root if isinstance(group, Subgroup) else group, frozenset(members))


def sylow_p_order(group, p: int) -> int:
    return p_part(group.order, p)


# ---------------------------------------------------------------------------


class Character:
    """Character of a finite abelian group as its full value table."""

    __slots__ = ("domain", "values", "_hash")

    def __init__(self, domain, values):
        self.domain = domain
        self.values = tuple(_mod1(Fraction(v)) for v in values)
        if len(self.values) != domain.order:
            raise DomainError("value table length differs from group order")
        self._hash = hash((domain, self.values))

    def value(self, g) -> Fraction:
        return self.values[self.domain.element_index(g)]

    @property
    def order(self) -> int:
        return lcm(1, *(v.denominator for v in self.values))

    @property
    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.values)

    def __mul__(self, other):
        if self.domain != other.domain:
            raise GroupMismatchError("characters of different groups")
        return Character(self.domain, tuple(a + b for a, b in zip(self.values, other.values)))

    def __pow__(self, n: int):
        return Character(self.domain, tuple(n * v for v in self.values))

    def inverse(self):
        return self**-1

    def restrict(self, sub) -> "Character":
        vals = []
        for g in sub.elements():
            vals.append(self.values[self.domain.element_index(g)])
        return Character(sub, tuple(vals))

    def trivial_on(self, group_or_elements) -> bool:
        elems = group_or_elements.elements() if hasattr(group_or_elements, "elements") \
            else group_or_elements
        return all(self.value(g) == 0 for g in elems)

    def prime_to_p_part(self, p: int) -> "Character":
        n = self.order
        np = p_part(n, p)
        if np == 1:
            return self
        npp = n // np
        # exponent that is 1 mod the prime-to-p order and 0 mod the p-part
        e = np * pow(np, -1, npp) if npp > 1 else 0
        return self**e

    def has_prime_to_p_order(self, p: int) -> bool:
        return self.order % p != 0

    def exponents(self, group: "AbelianGroup"):
        """Exponent tuple over the standard generators of an AbelianGroup."""
        if self.domain != group or not isinstance(group, AbelianGroup):
            raise GroupMismatchError("exponents need the character's own AbelianGroup")
        exps = []
        for i, n in enumerate(group.invariant_factors):
            gen = tuple(1 if j == i else 0 for j in range(len(group.invariant_factors)))
            exps.append(int(self.value(gen) * n))
        return tuple(exps)

    def __eq__(self, other):
        return isinstance(other, Character) and self.domain == other.domain \
            and self.values == other.values

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Character({char_label(self)})"

    def sort_key(self):
        return self.values


def cyclic_character(sub: Subgroup, generator, k: int) -> Character:
    """Character of a cyclic subgroup sending generator^j to exp(2 pi i jk/e)."""
    e = sub.order
    powers = {}
    cur = sub.identity
    for j in range(e):
        powers[cur] = j
        cur = sub.mul(cur, generator)
    if len(powers) != e or cur != sub.identity:
        raise DomainError("generator does not generate the subgroup")
    values = [Fraction((powers[g] * k) % e, e) for g in sub.elements()]
    return Character(sub, tuple(values))


def char_label(chi: Character) -> str:
    """Deterministic short label; exponent form over a plain AbelianGroup."""
    dom = chi.domain
    if isinstance(dom, AbelianGroup):
        exps = []
        for i, n in enumerate(dom.invariant_factors):
            gen = tuple(1 if j == i else 0 for j in range(len(dom.invariant_factors)))
            exps.append(int(chi.value(gen) * n))
        return "chi(" + ",".join(str(e) for e in exps) + ")"
    parts = [f"{chi.value(g)}" for g in dom.generators]
    return "chi{" + ",".join(parts) + "}"


# ---------------------------------------------------------------------------


class K0Element:
    """Virtual module over a group at one of the three levels."""

    __slots__ = ("group", "level", "coeffs", "p")

    def __init__(self, group, level, coeffs=None, p=None):
        if level not in LEVELS:
            raise LevelError(f"unknown level {level!r}")
        if level != LEVEL_CHAR0 and p is None:
            raise LevelError(f"level {level!r} requires the prime p")
        self.group = group
        self.level = level
        self.p = p
        clean = {}
        for chi, coef in (coeffs or {}).items():
            coef = Fraction(coef)
            if coef == 0:
                continue
            if chi.domain != group:
                raise GroupMismatchError("basis character over the wrong group")
            if level != LEVEL_CHAR0 and not chi.has_prime_to_p_order(p):
                raise LevelError("basis labels at modular levels must have prime-to-p order")
            clean[chi] = coef
        self.coeffs = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(group, level=LEVEL_CHAR0, p=None):
        return K0Element(group, level, {}, p)

    @staticmethod
    def of_character(chi: Character, level=LEVEL_CHAR0, p=None):
        return K0Element(chi.domain, level, {chi: Fraction(1)}, p)

    @staticmethod
    def regular(group, level, p):
        """[k[G]]: all characters at char0, all projective covers at projectives."""
        if level == LEVEL_CHAR0:
            basis = group.characters()
        else:
            basis = modular_basis(group, p)
        return K0Element(group, level, {chi: Fraction(1) for chi in basis}, p)

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other):
        if self.group != other.group or self.level != other.level:
            raise GroupMismatchError("elements live in different K-groups")
        if self.p is not None and other.p is not None and self.p != other.p:
            raise GroupMismatchError("elements carry different primes")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for chi, c in other.coeffs.items():
            out[chi] = out.get(chi, Fraction(0)) + c
        return K0Element(self.group, self.level, out, self.p or other.p)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return K0Element(self.group, self.level,
                         {chi: c * v for chi, v in self.coeffs.items()}, self.p)

    def coefficient(self, chi) -> Fraction:
        return self.coeffs.get(chi, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, K0Element):
            return NotImplemented
        if self.level != LEVEL_CHAR0 and self.p != other.p:
            return False
        return self.group == other.group and self.level == other.level \
            and self.coeffs == other.coeffs

    def __hash__(self):
        tag = None if self.level == LEVEL_CHAR0 else self.p
        return hash((self.group, self.level, tag,
                     frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = ", ".join(f"{c}*{char_label(chi)}"
                          for chi, c in sorted(self.coeffs.items(),
                                               key=lambda kv: kv[0].sort_key()))
        return f"K0[{self.level}]({terms or '0'})"

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())


@lru_cache(maxsize=None)
def _modular_basis_cached(group, p):
    return tuple(chi for chi in group.characters() if chi.has_prime_to_p_order(p))


def modular_basis(group, p):
    """Characters of prime-to-p order: simple and projective labels alike."""
    return _modular_basis_cached(group, p)


# -- the cde triangle ---------------------------------------------------


def decomposition_map(x: K0Element, p=None) -> K0Element:
    """char0 -> modules: a character maps to its prime-to-p part."""
    if x.level != LEVEL_CHAR0:
        raise LevelError("decomposition_map starts at level char0")
    p = p if p is not None else x.p
    if p is None:
        raise LevelError("decomposition_map needs the prime p")
    out = {}
    for chi, c in x.coeffs.items():
        red = chi.prime_to_p_part(p)
        out[red] = out.get(red, Fraction(0)) + c
    return K0Element(x.group, LEVEL_MODULES, out, p)


def cartan_map(x: K0Element) -> K0Element:
    """projectives -> modules: multiplication by |Sylow_p(G)|."""
    if x.level != LEVEL_PROJECTIVES:
        raise LevelError("cartan_map starts at level projectives")
    scale = sylow_p_order(x.group, x.p)
    return K0Element(x.group, LEVEL_MODULES,
                     {chi: scale * c for chi, c in x.coeffs.items()}, x.p)


def e_map(x: K0Element) -> K0Element:
    """projectives -> char0: Cov(theta) -> sum of characters over theta."""
    if x.level != LEVEL_PROJECTIVES:
        raise LevelError("e_map starts at level projectives")
    fibers = _e_fibers(x.group, x.p)
    out = {}
    for theta, c in x.coeffs.items():
        for chi in fibers[theta]:
            out[chi] = out.get(chi, Fraction(0)) + c
    return K0Element(x.group, LEVEL_CHAR0, out, x.p)


@lru_cache(maxsize=None)
def _e_fibers(group, p):
    fibers = {theta: [] for theta in modular_basis(group, p)}
    for chi in group.characters():
        fibers[chi.prime_to_p_part(p)].append(chi)
    return fibers


def pairing(x: K0Element, y: K0Element) -> Fraction:
    """Orthonormal character pairing (char0 x char0), or <Cov theta, M>."""
    if x.group != y.group:
        raise GroupMismatchError("pairing needs a common group")
    ok = (x.level == LEVEL_CHAR0 and y.level == LEVEL_CHAR0) or \
        (x.level == LEVEL_PROJECTIVES and y.level == LEVEL_MODULES)
    if not ok:
        raise LevelError(f"no pairing between {x.level} and {y.level}")
    total = Fraction(0)
    for chi, c in x.coeffs.items():
        total += c * y.coefficient(chi)
    return total


def restrict(x: K0Element, sub) -> K0Element:
    """Restriction along H <= G at char0 or modules level."""
    if x.level == LEVEL_PROJECTIVES:
        raise LevelError("restrict is defined at char0 and modules levels")
    if sub.root != x.group.root or not _element_set(sub) <= _element_set(x.group):
        raise GroupMismatchError("can only restrict to a subgroup")
    out = {}
    for chi, c in x.coeffs.items():
        res = chi.restrict(sub)
        out[res] = out.get(res, Fraction(0)) + c
    return K0Element(sub, x.level, out, x.p)


def induce(x: K0Element, group) -> K0Element:
    """Induction from x.group up to group, at char0 or projectives level.

    Ind(theta) = sum of the [G:H] characters of G restricting to theta;
    at the projectives level the same rule runs over the modular bases.
    """
    if x.level == LEVEL_MODULES:
        raise LevelError("induce is defined at char0 and projectives levels")
    sub = x.group
    # element tuples of unrelated groups can collide, so compare roots too
    if sub.root != group.root or not as_subgroup(sub).element_set <= _element_set(group):
        raise GroupMismatchError("can only induce from a subgroup")
    if x.level == LEVEL_CHAR0:
        basis = group.characters()
    else:
        basis = modular_basis(group, x.p)
    out = {}
    for chi in basis:
        res = chi.restrict(sub)
        c = x.coeffs.get(res)
        if c:
            out[chi] = out.get(chi, Fraction(0)) + c
    return K0Element(group, x.level, out, x.p)
