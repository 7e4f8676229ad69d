import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffrt import subspace
from ffrt.errors import ZeroSubspace
from ffrt.fields import ExtField, PerfectClosure, prime_field
from ffrt.selftest import brute_force_equivalent

F2, F3 = prime_field(2), prime_field(3)
GF16 = ExtField(F2, [1, 1, 0, 0, 1])
GF27 = ExtField(F3, [2, 2, 0, 1])


def all_subspaces(K, dim):
    seen = {}
    for vecs in itertools.combinations([x for x in K.elements() if x], dim):
        W = subspace.span(vecs, K)
        if W.dim == dim:
            seen[W.key()] = W
    return list(seen.values())


def test_span_is_canonical():
    a = GF16.gen
    W1 = subspace.span([a, a + GF16.one], GF16)
    W2 = subspace.span([GF16.one, a, a + GF16.one], GF16)
    assert W1 == W2
    assert W1.key() == W2.key()


def test_contains():
    a = GF16.gen
    W = subspace.span([GF16.one, a], GF16)
    assert W.contains(a + GF16.one)
    assert not W.contains(a * a)


def test_transporter_agrees_with_exhaustive_search_on_all_planes_of_gf16():
    planes = all_subspaces(GF16, 2)
    assert len(planes) == 35
    for W1, W2 in itertools.product(planes, repeat=2):
        assert subspace.projectively_equivalent(W1, W2).equivalent == brute_force_equivalent(W1, W2)


def test_gf16_plane_orbits():
    # K*/F_2* has order 15; the subfield GF(4) gives one orbit of size 5
    planes = all_subspaces(GF16, 2)
    labels = {}
    for W in planes:
        labels.setdefault(subspace.canonical_label(W), []).append(W)
    assert sorted(len(v) for v in labels.values()) == [5, 15, 15]


def test_witness_scales_w1_onto_w2():
    rng = random.Random(5)
    for _ in range(50):
        W = subspace.span([GF27.random_element(rng) for _ in range(2)], GF27)
        if W.dim != 2:
            continue
        beta = GF27.random_element(rng)
        if not beta:
            continue
        res = subspace.projectively_equivalent(W, subspace.scale(W, beta))
        assert res.equivalent and res.reason == "witness"
        assert subspace.scale(W, res.witness) == subspace.scale(W, beta)


def test_dimension_mismatch_reason():
    W1 = subspace.span([GF16.one], GF16)
    W2 = subspace.span([GF16.one, GF16.gen], GF16)
    assert subspace.projectively_equivalent(W1, W2).reason == "dimension"


def test_zero_subspace_rejected():
    with pytest.raises(ZeroSubspace):
        subspace.projectively_equivalent(subspace.zero_space(GF16), subspace.full_space(GF16))


def test_root_and_frobenius_spaces_are_inverse():
    W = subspace.span([GF16.one, GF16.gen], GF16)
    for e in range(1, 5):
        assert subspace.frobenius_space(subspace.root_space(W, e), e) == W


def test_quartic_roots_of_span_one_alpha_are_not_equivalent():
    pc = PerfectClosure(2)
    K = ExtField(pc, [1, pc.gen, 1, 0, 1])
    V = subspace.span([K.one, K.gen], K)
    W2, W3 = subspace.root_space(V, 2), subspace.root_space(V, 3)
    res = subspace.projectively_equivalent(W2, W3)
    assert not res.equivalent
    assert res.reason == "zero-transporter"
    assert res.transporter.is_zero


def test_canonical_label_requires_finite_field():
    pc = PerfectClosure(2)
    K = ExtField(pc, [1, pc.gen, 1, 0, 1])
    with pytest.raises(TypeError):
        subspace.canonical_label(subspace.span([K.one], K))


VEC = st.lists(st.integers(0, 2), min_size=3, max_size=3)


@settings(max_examples=150, deadline=None)
@given(st.lists(VEC, min_size=1, max_size=2), st.lists(VEC, min_size=1, max_size=2), VEC)
def test_transporter_laws_gf27(g1, g2, b):
    W1 = subspace.span([GF27(v) for v in g1], GF27)
    W2 = subspace.span([GF27(v) for v in g2], GF27)
    if W1.is_zero or W2.is_zero:
        return
    T = subspace.scaling_transporter(W1, W2)
    for beta in T.basis():
        assert all(W2.contains(beta * w) for w in W1.basis())
    beta = GF27(b)
    if beta:
        assert subspace.projectively_equivalent(W1, subspace.scale(W1, beta)).equivalent
    assert subspace.projectively_equivalent(W1, W2).equivalent == subspace.projectively_equivalent(W2, W1).equivalent
    if W1.dim == W2.dim:
        same_label = subspace.canonical_label(W1) == subspace.canonical_label(W2)
        assert same_label == subspace.projectively_equivalent(W1, W2).equivalent


def test_gf16_root_space_of_span_one_alpha():
    a = GF16.gen
    W = subspace.span([GF16.one, a], GF16)
    assert subspace.root_space(W, 1) == subspace.span([GF16.one, a**8], GF16)
