import itertools

import pytest

from ffrt import subspace
from ffrt.curve import NumericalSemigroup, RingPresentation, conductor, hilbert_dim, is_multiplicative
from ffrt.errors import InvalidPresentation, StabilizationFailure
from ffrt.fields import ExtField, prime_field, trivial_extension
from ffrt.specio import corpus_names, corpus_path, load_json, load_ring

F2 = prime_field(2)


def brute_force_V(A, i):
    """Span of all monomials of degree i in the generators, enumerated directly."""
    K = A.field
    gens = A.generators
    vecs = []
    if i == 0:
        return subspace.span([K.one], K)
    for counts in itertools.product(*(range(i // d + 1) for _, d in gens)):
        if sum(c * d for c, (_, d) in zip(counts, gens)) != i:
            continue
        x = K.one
        for c, (coeff, _) in zip(counts, gens):
            x = x * coeff**c
        vecs.append(x)
    return subspace.span(vecs, K)


@pytest.mark.parametrize("gens,c", [((2, 3), 2), ((3, 4, 5), 3), ((4, 7), 18), ((5, 7), 24), ((3, 5), 8)])
def test_semigroup_conductor(gens, c):
    H = NumericalSemigroup.from_generators(gens)
    assert H.conductor == c
    if len(gens) == 2:
        a, b = gens
        assert c == (a - 1) * (b - 1)  # Sylvester


def test_semigroup_gaps():
    assert NumericalSemigroup.from_generators((3, 5)).gaps == [1, 2, 4, 7]


RING_NAMES = [n for n in corpus_names() if "generators" in load_json(corpus_path(n))]


@pytest.mark.parametrize("name", RING_NAMES)
def test_profile_matches_monomial_enumeration(name):
    A = load_ring(corpus_path(name))
    c, H, prof = conductor(A)
    for i in range(c + 6):
        assert prof.space(i) == brute_force_V(A, i), (name, i)
    assert is_multiplicative(prof)


@pytest.mark.parametrize("name", RING_NAMES)
def test_semigroup_agrees_with_profile(name):
    A = load_ring(corpus_path(name))
    H = A.semigroup
    for i in range(A.profile.c + 5):
        assert (i in H) == (not A.profile.space(i).is_zero)


def test_quartic_profile():
    A = load_ring(corpus_path("quartic_u"))
    K = A.field
    a = K.gen
    assert A.profile.space(1) == subspace.span([K.one, a], K)
    assert A.profile.space(2) == subspace.span([K.one, a, a * a], K)
    assert A.profile.c == 3
    assert [hilbert_dim(A, 2, j) for j in range(5)] == [1, 2, 3, 4, 4]


def test_invalid_presentations():
    K = trivial_extension(F2)
    with pytest.raises(InvalidPresentation):
        RingPresentation(K, [(1, 2), (1, 4)])
    with pytest.raises(InvalidPresentation):
        RingPresentation(K, [(0, 1)])
    with pytest.raises(InvalidPresentation):
        RingPresentation(K, [(1, 0)])


def test_coefficients_not_generating_k_fail_to_stabilize():
    K = ExtField(F2, [1, 1, 0, 0, 1])
    A = RingPresentation(K, [(K.one, 1)])
    with pytest.raises(StabilizationFailure):
        A.profile


def test_cap_covers_t5_t7():
    A = load_ring(corpus_path("t57_f2"))
    assert A.profile.c == 24
