import json
import random

import flint
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffrt.errors import DivisionByZero, FieldMismatch, ReducibleModulus
from ffrt.fields import ExtField, FiniteField, PerfectClosure, prime_field, trivial_extension

F2, F3 = prime_field(2), prime_field(3)
PC2 = PerfectClosure(2)
U = PC2.gen


def gf16():
    return ExtField(F2, [1, 1, 0, 0, 1])


def quartic():
    return ExtField(PC2, [1, U, 1, 0, 1])


# --- finite fields ---------------------------------------------------------


def test_finite_field_product_matches_polynomial_reduction():
    # oracle: multiply in F_p[x] with flint and reduce mod the modulus
    K = FiniteField(3, 3)
    mod = flint.nmod_poly(list(K.modulus), 3)
    rng = random.Random(1)
    for _ in range(200):
        a, b = K.random_element(rng), K.random_element(rng)
        want = (flint.nmod_poly(list(a.c), 3) * flint.nmod_poly(list(b.c), 3)) % mod
        coeffs = [int(c) for c in want.coeffs()] + [0] * 3
        assert (a * b).c == tuple(coeffs[:3])


def test_finite_field_inverse_and_order():
    K = FiniteField(2, 4)
    nonzero = [x for x in K.elements() if x]
    assert len(nonzero) == 15
    for x in nonzero:
        assert x * x.inverse() == K.one
        assert x**15 == K.one
    with pytest.raises(DivisionByZero):
        K.zero.inverse()


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        FiniteField(2, 2, modulus=[1, 0, 1])  # (x+1)^2


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        F2(1) + F3(1)


def test_ext_field_over_finite_base_matches_direct_construction():
    # GF(16) as F_2[a]/(a^4+a+1) and as FiniteField(2, 4) with that modulus agree
    K = gf16()
    L = FiniteField(2, 4, modulus=[1, 1, 0, 0, 1])
    rng = random.Random(2)
    for _ in range(100):
        c1 = [rng.randrange(2) for _ in range(4)]
        c2 = [rng.randrange(2) for _ in range(4)]
        assert list((K(c1) * K(c2)).coords) == [F2(c) for c in (L(c1) * L(c2)).c]


def test_ext_field_reducible_detected():
    with pytest.raises(ReducibleModulus):
        ExtField(F2, [1, 0, 1, 0, 1])  # (x^2+x+1)^2
    with pytest.raises(ReducibleModulus):
        ExtField(PC2, [U, 0, 1])  # x^2 + u is inseparable
    with pytest.raises(ReducibleModulus):
        ExtField(PC2, [U, U + 1, 1])  # (x+u)(x+1)
    assert ExtField(PC2, [U, 1, 1]).irreducibility == "bivariate-factorization"


def test_irreducibility_method_recorded():
    assert gf16().irreducibility == "ben-or"
    assert trivial_extension(F2).irreducibility == "degree-one"


# --- perfect closure -------------------------------------------------------


def test_perfect_closure_roots_and_levels():
    r = U.pth_root()
    assert r.level == 1
    assert r * r == U
    assert (r * r).level == 0  # normalized back down
    assert PC2.element([0, 0, 1], level=1) == U


def test_perfect_closure_division():
    x = PC2.element([1, 1], [0, 1])  # (1+u)/u
    assert x * PC2.element([0, 1]) == PC2.element([1, 1])
    with pytest.raises(DivisionByZero):
        PC2.zero.inverse()


def test_perfect_closure_json_is_plain_ints():
    x = PC2.element([1, 0, 1], [1, 1], level=2)
    obj = PC2.to_json(x)
    assert json.loads(json.dumps(obj)) == obj
    assert PC2.from_json(obj) == x


# --- Frobenius on the quartic field ----------------------------------------


def test_quartic_frobenius_values():
    # oracle: plain repeated squaring; a^4 = a^2 + u a + 1 and a^8 = (1+u^2) a^2 + u a
    K = quartic()
    a = K.gen
    a4 = a * a * a * a
    assert a.frobenius(2) == a4 == K([1, U, 1])
    assert a.frobenius(3) == a4 * a4 == K([0, U, 1 + U * U])


def test_quartic_pth_root_inverts_frobenius():
    K = quartic()
    rng = random.Random(3)
    for _ in range(50):
        x = K.random_element(rng)
        assert x.pth_root().frobenius() == x
        assert x.frobenius().pth_root() == x
        assert x.pth_root_iter(3).frobenius(3) == x


ELEMENTS = st.lists(st.integers(0, 1), min_size=4, max_size=4)


@settings(max_examples=200, deadline=None)
@given(ELEMENTS, ELEMENTS, ELEMENTS)
def test_gf16_field_axioms(a, b, c):
    K = gf16()
    x, y, z = K(a), K(b), K(c)
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert (x + y).frobenius() == x.frobenius() + y.frobenius()
    if x:
        assert x / x == K.one


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=4), st.integers(0, 3))
def test_perfect_closure_frobenius_roundtrip(num, level):
    x = PC2.element(num or [0], level=level)
    assert x.frobenius().pth_root() == x
    assert x.pth_root().frobenius() == x


def test_gf16_pth_root_of_generator():
    K = gf16()
    a = K.gen
    assert a.frobenius() == a * a
    assert a.pth_root() == a**8
    assert (a**8) ** 2 == a
