"""End-to-end certification of the valuation formulas.

Every check produces a VerificationReport: a list of rows comparing two
exact rational quantities computed along independent code paths, plus
aggregate pass flags.  All gating comparisons are Fraction equalities;
nothing here touches floating point.

The four checks:

  check_strong       -v_p(epsilon constant of chi) against the Euler
                     multiplicity at the canonical wild divisor plus the
                     wild invariants correction, per character.
  check_weak         image of E under the decomposition map against the
                     equivariant Euler characteristic of the structure
                     sheaf, per modular character.
  check_restriction  E of the cover restricted to a subgroup against E
                     of the intermediate cover, plus the matching
                     bookkeeping on the structure-element side.
  check_invariance   all reported quantities recomputed after the
                     presentation choices (residue embedding, point over
                     a place, subgroup generators) are changed.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IncompleteDatumError, NotWeaklyRamifiedError
from .groups import (
    Character,
    K0Element,
    LEVEL_CHAR0,
    char_label,
    decomposition_map,
    e_map,
    induce,
    modular_basis,
    restrict,
)
from .covers import CoverDatum, PlaceDatum, subcover_data
from .epsilon import (
    CONVENTION_STANDARD,
    ORACLE_PADIC,
    ORACLE_STICKELBERGER,
    E_element,
    global_epsilon_valuation,
)
from .euler import (
    DivisorSpec,
    euler_char_structure_sheaf,
    multiplicity_closed,
    multiplicity_direct,
    psi_structure,
)


@dataclass(frozen=True)
class ReportRow:
    """One exact comparison: passed is None when a side was not evaluated."""

    label: str
    lhs: object
    rhs: object
    parts: tuple = ()
    passed: object = None


@dataclass
class VerificationReport:
    kind: str
    cover: str
    rows: tuple
    flags: dict
    notes: tuple = ()

    @property
    def passed(self) -> bool:
        """True when no evaluated flag failed; None-valued flags do not gate."""
        return all(v is not False for v in self.flags.values())

    def describe(self) -> str:
        lines = ["%s check: %s" % (self.kind, self.cover)]
        flagbits = []
        for name, v in self.flags.items():
            flagbits.append("%s=%s" % (name, "skipped" if v is None else v))
        lines.append("  flags: " + ", ".join(flagbits))
        for note in self.notes:
            lines.append("  note: %s" % note)
        for row in self.rows:
            verdict = "skip" if row.passed is None else ("ok" if row.passed else "FAIL")
            detail = ""
            if row.parts:
                detail = " (" + ", ".join("%s=%s" % (k, v) for k, v in row.parts) + ")"
            lines.append(
                "  %-18s lhs=%s rhs=%s%s [%s]"
                % (row.label, _fmt(row.lhs), _fmt(row.rhs), detail, verdict)
            )
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "cover": self.cover,
            "passed": self.passed,
            "flags": {k: v for k, v in sorted(self.flags.items())},
            "notes": list(self.notes),
            "rows": [
                {
                    "label": r.label,
                    "lhs": _fmt(r.lhs),
                    "rhs": _fmt(r.rhs),
                    "parts": {k: _fmt(v) for k, v in r.parts},
                    "passed": r.passed,
                }
                for r in self.rows
            ],
        }


def _fmt(x):
    return None if x is None else str(Fraction(x))


# ---------------------------------------------------------------------------


def check_strong(
    cover: CoverDatum,
    oracle: str = ORACLE_PADIC,
    convention: str = CONVENTION_STANDARD,
    precision: int = None,
) -> VerificationReport:
    """Per-character comparison of the two sides of the valuation formula.

    LHS is -v_p of the global epsilon constant, by default through the
    p-adic Gauss-sum oracle so the two sides share no code path; RHS is
    the Euler multiplicity at the canonical wild divisor plus, for each
    wild place, deg(q) when chi is trivial on the inertia group there.
    Integrality of every LHS is reported as its own flag.
    """
    if not cover.weakly_ramified:
        raise NotWeaklyRamifiedError(
            "the strong check needs a weakly ramified datum; got %s" % cover.summary()
        )
    d_wild = DivisorSpec.wild_canonical(cover)
    rows = []
    all_eq = True
    all_int = True
    for chi in cover.characters():
        ledger = global_epsilon_valuation(
            cover, chi, oracle=oracle, convention=convention, precision=precision
        )
        lhs = -ledger.total
        euler_term = multiplicity_closed(cover, d_wild, chi)
        wild_term = Fraction(
            sum(q.degree for q in cover.wild_places() if chi.trivial_on(q.inertia))
        )
        rhs = euler_term + wild_term
        ok = lhs == rhs
        all_eq = all_eq and ok
        all_int = all_int and lhs.denominator == 1
        rows.append(
            ReportRow(
                label=char_label(chi),
                lhs=lhs,
                rhs=rhs,
                parts=(("euler", euler_term), ("wild_ind", wild_term)),
                passed=ok,
            )
        )
    return VerificationReport(
        kind="strong",
        cover=cover.summary(),
        rows=tuple(rows),
        flags={"strong_ok": all_eq, "integral_ok": all_int},
        notes=("oracle=%s" % oracle, "convention=%s" % convention),
    )


def check_weak(
    cover: CoverDatum,
    oracle: str = ORACLE_STICKELBERGER,
    convention: str = CONVENTION_STANDARD,
    precision: int = None,
) -> VerificationReport:
    """Image of E in the modular basis against the structure-sheaf element.

    On a datum that is not weakly ramified (possible when per-character
    conductors are supplied) the structure side has no meaning, so its
    rows are marked skipped and only integrality of E is still examined.
    """
    e_elt = E_element(cover, oracle=oracle, convention=convention, precision=precision)
    image = decomposition_map(e_elt)
    structure = euler_char_structure_sheaf(cover) if cover.weakly_ramified else None
    rows = []
    weak_ok = True if cover.weakly_ramified else None
    for theta in modular_basis(cover.group, cover.p):
        lhs = image.coefficient(theta)
        if structure is None:
            rows.append(ReportRow(label=char_label(theta), lhs=lhs, rhs=None))
            continue
        rhs = structure.coefficient(theta)
        ok = lhs == rhs
        weak_ok = weak_ok and ok
        rows.append(ReportRow(label=char_label(theta), lhs=lhs, rhs=rhs, passed=ok))
    notes = ["oracle=%s" % oracle, "convention=%s" % convention]
    if structure is None:
        notes.append("structure side skipped: datum is not weakly ramified")
    return VerificationReport(
        kind="weak",
        cover=cover.summary(),
        rows=tuple(rows),
        flags={"weak_ok": weak_ok, "integral_ok": e_elt.is_integral()},
        notes=tuple(notes),
    )


def _wild_induction_correction(cover: CoverDatum, group) -> K0Element:
    """Sum over wild places of deg(q) times the induced trivial character."""
    total = K0Element.zero(group, LEVEL_CHAR0, cover.p)
    for q in cover.wild_places():
        triv = K0Element.of_character(q.inertia.trivial_character(), p=cover.p)
        total = total + induce(triv, group).scale(q.degree)
    return total


def _formula_rhs_element(cover: CoverDatum) -> K0Element:
    """Whole-formula right side as one virtual character: e(psi) + inductions."""
    return e_map(psi_structure(cover)) + _wild_induction_correction(cover, cover.group)


def check_restriction(
    cover: CoverDatum,
    sub,
    oracle: str = ORACLE_STICKELBERGER,
    convention: str = CONVENTION_STANDARD,
    precision: int = None,
) -> VerificationReport:
    """Restriction of E to a subgroup against E of the intermediate cover.

    Also checks the bookkeeping on the structure side: restricting the
    whole right-side element of the big cover must land exactly on the
    right-side element computed from the intermediate cover's own data.
    For an abelian group every inertia subgroup at a wild place is a
    p-group, so no place can be wild upstairs but tame for the subcover;
    the correction terms therefore match place by place.
    """
    subcov = subcover_data(cover, sub)
    e_big = E_element(cover, oracle=oracle, convention=convention, precision=precision)
    e_res = restrict(e_big, sub)
    e_sub = E_element(subcov, oracle=oracle, convention=convention, precision=precision)
    rows = []
    e_ok = True
    for psi in sub.characters():
        lhs = e_res.coefficient(psi)
        rhs = e_sub.coefficient(psi)
        ok = lhs == rhs
        e_ok = e_ok and ok
        rows.append(ReportRow(label="E " + char_label(psi), lhs=lhs, rhs=rhs, passed=ok))
    side_ok = True
    if cover.weakly_ramified:
        side_res = restrict(_formula_rhs_element(cover), sub)
        side_sub = _formula_rhs_element(subcov)
        for psi in sub.characters():
            lhs = side_res.coefficient(psi)
            rhs = side_sub.coefficient(psi)
            ok = lhs == rhs
            side_ok = side_ok and ok
            rows.append(
                ReportRow(label="rhs " + char_label(psi), lhs=lhs, rhs=rhs, passed=ok)
            )
    else:
        side_ok = None
    return VerificationReport(
        kind="restriction",
        cover="%s | subgroup of order %d" % (cover.summary(), sub.order),
        rows=tuple(rows),
        flags={"restriction_ok": e_ok, "structure_side_ok": side_ok},
        notes=("oracle=%s" % oracle, "subcover: %s" % subcov.summary()),
    )


# ---------------------------------------------------------------------------


def _snapshot(cover: CoverDatum, convention: str, precision) -> dict:
    """Every reported quantity of a datum, keyed by a stable label."""
    out = {}
    try:
        for chi in cover.characters():
            ledger = global_epsilon_valuation(
                cover,
                chi,
                oracle=ORACLE_STICKELBERGER,
                convention=convention,
                precision=precision,
            )
            out["eps %s" % char_label(chi)] = ledger.total
    except IncompleteDatumError:
        pass
    if cover.weakly_ramified:
        d_wild = DivisorSpec.wild_canonical(cover)
        psi = psi_structure(cover, d_wild)
        for theta in modular_basis(cover.group, cover.p):
            out["psi %s" % char_label(theta)] = psi.coefficient(theta)
        for chi in cover.characters():
            out["mult %s" % char_label(chi)] = multiplicity_closed(cover, d_wild, chi)
            out["dir %s" % char_label(chi)] = multiplicity_direct(cover, d_wild, chi)
    return out


def _regenerated_subgroup(group, sub):
    # same subgroup presented by its full element list instead of the
    # original generators
    return group.subgroup(sorted(sub.element_set))


def _regenerated_place(group, q: PlaceDatum) -> PlaceDatum:
    inertia = _regenerated_subgroup(group, q.inertia)
    xi = Character(inertia, tuple(q.tame_char.value(g) for g in inertia.elements()))
    return PlaceDatum(
        label=q.label,
        p=q.p,
        degree=q.degree,
        inertia=inertia,
        decomposition=_regenerated_subgroup(group, q.decomposition),
        tame_char=xi,
        conductor_overrides=q.conductor_overrides,
    )


def _with_places(cover: CoverDatum, places) -> CoverDatum:
    return CoverDatum(
        group=cover.group,
        p=cover.p,
        r=cover.r,
        g_base=cover.g_base,
        places=tuple(places),
        weakly_ramified=cover.weakly_ramified,
        kind=cover.kind,
        meta=dict(cover.meta),
        g_cover=cover.g_cover,
    )


def _invariance_variants(cover: CoverDatum):
    """Named variants of the datum that must report identical quantities."""
    variants = []
    for idx, q in enumerate(cover.places):
        if q.e_t <= 1 or q.degree * q.f <= 1:
            continue
        for j in range(1, q.degree * q.f):
            if pow(cover.p, j, q.e_t) == 1:
                continue
            places = list(cover.places)
            places[idx] = q.twisted(j)
            variants.append(("twist %s p^%d" % (q.label, j), _with_places(cover, places)))
    # re-choice of the point over every place at once: for an abelian
    # group conjugation is trivial, so a different point only composes
    # the residue embedding with a Frobenius power
    if any(q.e_t > 1 and q.degree * q.f > 1 for q in cover.places):
        places = [q.twisted(i + 1) for i, q in enumerate(cover.places)]
        variants.append(("point re-choice", _with_places(cover, places)))
    regen = [_regenerated_place(cover.group, q) for q in cover.places]
    variants.append(("regenerated subgroups", _with_places(cover, regen)))
    return variants


def check_invariance(
    cover: CoverDatum,
    convention: str = CONVENTION_STANDARD,
    precision: int = None,
) -> VerificationReport:
    """Reported quantities must not depend on presentation choices.

    Variants rerun every formula path after (a) twisting one place's
    cotangent character by each power of Frobenius, (b) re-choosing the
    point over every place at once and (c) regenerating all subgroup
    objects from their element sets.  Rows count exact mismatches.
    """
    base = _snapshot(cover, convention, precision)
    rows = []
    all_ok = True
    for label, variant in _invariance_variants(cover):
        got = _snapshot(variant, convention, precision)
        mismatched = sum(1 for k, v in base.items() if got.get(k) != v)
        mismatched += sum(1 for k in got if k not in base)
        ok = mismatched == 0
        all_ok = all_ok and ok
        rows.append(
            ReportRow(
                label=label,
                lhs=Fraction(mismatched),
                rhs=Fraction(0),
                parts=(("quantities", Fraction(len(base))),),
                passed=ok,
            )
        )
    return VerificationReport(
        kind="invariance",
        cover=cover.summary(),
        rows=tuple(rows),
        flags={"invariance_ok": all_ok},
        notes=("%d quantities per variant" % len(base),),
    )


# ---------------------------------------------------------------------------


def _cyclic_subgroups(group):
    """All subgroups generated by one element, smallest first."""
    seen = {}
    for g in group.elements():
        sub = group.subgroup([g])
        seen.setdefault(frozenset(sub.element_set), sub)
    return sorted(seen.values(), key=lambda s: (s.order, sorted(s.element_set)))


def full_verification(
    cover: CoverDatum,
    oracle: str = ORACLE_PADIC,
    convention: str = CONVENTION_STANDARD,
    precision: int = None,
    include_restriction: bool = True,
):
    """Run every applicable check on one datum, returning the reports."""
    reports = []
    if cover.weakly_ramified:
        reports.append(
            check_strong(cover, oracle=oracle, convention=convention, precision=precision)
        )
    reports.append(check_weak(cover, convention=convention, precision=precision))
    reports.append(check_invariance(cover, convention=convention, precision=precision))
    if include_restriction and cover.g_cover is not None and cover.r == 1:
        for sub in _cyclic_subgroups(cover.group):
            reports.append(
                check_restriction(cover, sub, convention=convention, precision=precision)
            )
    return reports
