import random

import pytest

from epschar.errors import CapacityError, DomainError, InvalidInputError
from epschar.fields import (
    PrimePower,
    make_field,
    poly_is_irreducible,
)

FIELDS = [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2), (2, 6)]


def test_prime_power_validation():
    assert PrimePower(3, 2).q == 9
    with pytest.raises(InvalidInputError):
        PrimePower(6, 1)
    with pytest.raises(InvalidInputError):
        PrimePower(3, 0)


def test_make_field_bounds():
    with pytest.raises(CapacityError):
        make_field(2, 13)
    with pytest.raises(CapacityError):
        make_field(101, 3)
    with pytest.raises(InvalidInputError):
        make_field(4, 2)


def test_modulus_is_deterministic_and_irreducible():
    # first monic irreducible of degree 2 over F_3 in numeric order is x^2 + 1
    assert make_field(3, 2).modulus == (1, 0, 1)
    for p, r in FIELDS:
        ctx = make_field(p, r)
        assert len(ctx.modulus) == r + 1
        if r > 1:
            assert poly_is_irreducible(ctx.modulus, p)


def test_poly_is_irreducible_examples():
    assert poly_is_irreducible((1, 0, 1), 3)  # x^2 + 1, -1 not a square mod 3
    assert not poly_is_irreducible((1, 0, 1), 5)  # (x+2)(x+3) mod 5
    assert poly_is_irreducible((1, 1, 0, 1), 2)  # x^3 + x + 1
    assert not poly_is_irreducible((0, 1, 1), 5)  # x^2 + x = x(x+1)


def test_field_axioms_random():
    rng = random.Random(3)
    for p, r in FIELDS:
        ctx = make_field(p, r)
        els = ctx.elements()
        for _ in range(40):
            a, b, c = (rng.choice(els) for _ in range(3))
            assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
            assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
            assert ctx.add(a, ctx.neg(a)) == ctx.zero
            if a != ctx.zero:
                assert ctx.mul(a, ctx.inv(a)) == ctx.one


def test_generator_and_dlog():
    for p, r in FIELDS:
        ctx = make_field(p, r)
        q = ctx.q
        seen = set()
        for k in range(q - 1):
            x = ctx.exp(k)
            assert ctx.dlog(x) == k
            seen.add(x)
        assert len(seen) == q - 1
        assert ctx.pow(ctx.generator, q - 1) == ctx.one
        with pytest.raises(DomainError):
            ctx.dlog(ctx.zero)


def test_pow_negative_and_zero():
    ctx = make_field(5, 2)
    x = ctx.exp(3)
    assert ctx.mul(ctx.pow(x, -2), ctx.pow(x, 2)) == ctx.one
    assert ctx.pow(ctx.zero, 0) == ctx.one
    assert ctx.pow(ctx.zero, 4) == ctx.zero
    with pytest.raises(DomainError):
        ctx.pow(ctx.zero, -1)
    with pytest.raises(DomainError):
        ctx.inv(ctx.zero)


def test_trace_properties():
    rng = random.Random(4)
    for p, r in FIELDS:
        ctx = make_field(p, r)
        els = ctx.elements()
        # additive, Frobenius-invariant, and equidistributed over F_p
        for _ in range(30):
            a, b = rng.choice(els), rng.choice(els)
            assert ctx.trace(ctx.add(a, b)) == (ctx.trace(a) + ctx.trace(b)) % p
            assert ctx.trace(ctx.pow(a, p)) == ctx.trace(a)
        counts = {}
        for x in els:
            counts[ctx.trace(x)] = counts.get(ctx.trace(x), 0) + 1
        assert counts == {t: ctx.q // p for t in range(p)}


def test_element_encoding_roundtrip():
    ctx = make_field(3, 3)
    for enc in range(ctx.q):
        assert ctx.encode(ctx.element_from_int(enc)) == enc


def test_check_rejects_malformed():
    ctx = make_field(5, 2)
    with pytest.raises(DomainError):
        ctx.check((1,))
    with pytest.raises(DomainError):
        ctx.check((5, 0))
