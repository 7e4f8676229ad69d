import itertools
import random
from collections import Counter
from fractions import Fraction

import flint
import numpy as np
import pytest

from ffrt import tower
from ffrt.errors import BaseNotCertified, FPurityFailure, InvalidPresentation, UnsupportedCharacteristic
from ffrt.hilbert import HilbertSeries
from ffrt.sparse import SparsePoly
from ffrt.specio import corpus_path, load_ring

F = Fraction


def poly(p, names, terms):
    return SparsePoly(p, names, {tuple(k): v for k, v in terms.items()})


# --- Hilbert series plumbing -----------------------------------------------


def test_weighted_polynomial_ring_counts_monomials():
    hs = HilbertSeries.weighted_polynomial_ring([F(2), F(3)], 1, 30)
    for d in range(31):
        want = sum(1 for a in range(16) for b in range(11) if 2 * a + 3 * b == d)
        assert hs.coeffs[d] == want


def test_series_identities():
    one = HilbertSeries.one(6, 10)
    assert one.over_one_minus(F(1, 2)).times_one_minus(F(1, 2)) == one
    s = HilbertSeries.weighted_polynomial_ring([F(1)], 1, 10)
    assert s.regrade(4).order == F(10, 4)
    assert s.shifted(F(1)).first_difference(s) == (F(0), 0, 1)


def test_overflow_guard():
    with pytest.raises(OverflowError):
        HilbertSeries(np.array([2**62], dtype=np.int64), 1, F(0))


# --- sparse polynomials ----------------------------------------------------


def test_sparse_root_and_power():
    f = poly(7, ("x", "y"), {(2, 0): 1, (0, 3): 1})
    g = f.root(7)
    assert g**7 == f
    assert f.weighted_degree([3, 2]) == 6


def test_sparse_json_roundtrip():
    f = poly(3, ("x", "y"), {(F(1, 3), 2): 2, (0, 0): 1})
    assert SparsePoly.from_json(3, ("x", "y"), f.to_json()) == f


# --- freshman's dream ------------------------------------------------------


def test_substitution_p2_q2():
    g = poly(2, ("y",), {(1,): 1})
    assert tower.substitution_identity_check(g, 2, "x").ok


def test_substitution_brenner_p7():
    f = poly(7, ("x", "y"), {(2, 0): 1, (0, 3): 1})
    r = tower.substitution_identity_check(f, 7, "z")
    assert r.ok and r.binomials_ok and r.root_ok and r.expansion_ok


def test_substitution_p3_q9():
    f = poly(3, ("x", "y"), {(1, 1): 1, (0, 2): 2})
    assert tower.substitution_identity_check(f, 9, "z").ok


def test_substitution_non_p_power_falsified():
    f = poly(2, ("y",), {(1,): 1})
    r = tower.substitution_identity_check(f, 3, "x")
    assert not r.ok and "C(3,1)" in r.falsifying


# --- Fedder ----------------------------------------------------------------


def test_fedder_examples():
    assert tower.fedder_fpure(None)
    assert tower.fedder_fpure(poly(2, ("x", "y"), {(1, 1): 1}))
    assert not tower.fedder_fpure(poly(2, ("x", "y"), {(2, 0): 1, (0, 3): 1}))


def splitting_exists(f: SparsePoly) -> bool:
    """Search directly for a Frobenius splitting of F_p[x]/(f).

    Every p^-1-linear map S -> S is Phi(s * -), Phi the trace taking x^(p-1,...,p-1)
    to 1.  It descends to S/(f) iff Phi(s f x^b) is in (f) for 0 <= b < p, and the
    induced map splits iff Phi(s) is a unit; grading lets s have total degree n(p-1).
    All conditions are linear in s, so this is a nullspace computation.
    """
    p, n = f.p, len(f.names)
    ctx = flint.nmod_mpoly_ctx.get(tuple(f.names), modulus=p)
    fm = ctx.from_dict({tuple(int(x) for x in k): v for k, v in f.terms.items()})
    D = n * (p - 1)
    monos = [m for m in itertools.product(range(D + 1), repeat=n) if sum(m) == D]
    top = tuple([p - 1] * n)

    def trace(g):
        out = {}
        for exp, c in g.to_dict().items():
            if all(x % p == p - 1 for x in exp):
                out[tuple((x - (p - 1)) // p for x in exp)] = int(c)
        return ctx.from_dict(out)

    columns = []
    keys = []
    for m in monos:
        col = {}
        for b in itertools.product(range(p), repeat=n):
            g = ctx.from_dict({tuple(mi + bi for mi, bi in zip(m, b)): 1}) * fm
            _, r = divmod(trace(g), fm)
            for exp, c in r.to_dict().items():
                col[(b, exp)] = int(c)
        columns.append(col)
        keys.extend(col)
    keys = sorted(set(keys))
    rows = [[columns[j].get(k, 0) for j in range(len(monos))] for k in keys] or [[0] * len(monos)]
    mat = flint.nmod_mat(len(rows), len(monos), [x for r in rows for x in r], p)
    null, nullity = mat.nullspace()
    if top not in monos:
        return False
    j = monos.index(top)
    return any(int(null[j, c]) for c in range(nullity))


def random_homogeneous(p, n, d, rng):
    monos = [m for m in itertools.product(range(d + 1), repeat=n) if sum(m) == d]
    while True:
        terms = {m: rng.randrange(p) for m in monos if rng.random() < 0.5}
        f = SparsePoly(p, tuple("xyz"[:n]), terms)
        if not f.is_zero():
            return f


@pytest.mark.parametrize("p", [2, 3])
def test_fedder_agrees_with_splitting_search(p):
    rng = random.Random(p)
    cases = 0
    for n in (2, 3):
        for d in range(1, 7):
            if p == 3 and n == 3 and d > 3:
                continue
            for _ in range(4):
                f = random_homogeneous(p, n, d, rng)
                assert tower.fedder_fpure(f) == splitting_exists(f), f
                cases += 1
    assert cases > 20


def test_fedder_oracle_on_named_cases():
    assert splitting_exists(poly(2, ("x", "y"), {(1, 1): 1}))
    assert not splitting_exists(poly(2, ("x", "y"), {(2, 0): 1, (0, 3): 1}))


# --- towers ----------------------------------------------------------------


def test_brenner_presentations():
    T = tower.brenner_instance(7)
    assert T.base.vars == ("x", "y") and T.base.weights == (3, 2)
    assert T.adjoin[0].weight == F(6, 7) and T.adjoin[0].exponent == 7
    T = tower.brenner_instance(2)
    assert T.base.weights == (14, 6) and T.adjoin[0].weight == 21
    T = tower.brenner_instance(3)
    assert T.base.weights == (21, 6) and T.adjoin[0].weight == 14
    with pytest.raises(UnsupportedCharacteristic):
        tower.brenner_instance(5)


def test_brenner_p7_e1_pieces():
    r = tower.tower_summands(tower.brenner_instance(7), 1, trunc=40)
    assert r.count == 7 * 7**2
    assert r.hilbert_pass and r.all_free


@pytest.mark.parametrize("p", [2, 3, 7])
@pytest.mark.parametrize("e", [1, 2])
def test_brenner_hilbert(p, e):
    r = tower.tower_summands(tower.brenner_instance(p), e, trunc=40)
    assert r.hilbert_pass
    assert all(c.ok for c in r.substitution.values())


@pytest.mark.parametrize("q", [2, 3, 4])
def test_sq_st_t_all_free(q):
    T = tower.sq_st_t_instance(q)
    for e in (1, 2):
        r = tower.tower_summands(T, e)
        assert r.hilbert_pass and r.all_free


def test_hilbert_check_detects_missing_piece():
    T = tower.brenner_instance(3)
    r = tower.tower_summands(T, 1)
    broken = Counter(r.summands)
    key = next(iter(broken))
    broken[key] -= 1
    pred = tower.predicted_series(T, 1, +broken, r.class_series, F(40))
    direct = tower.direct_series(T, 1, F(40))
    from ffrt.hilbert import common_denominator

    D = common_denominator(F(1, pred.D), F(1, direct.D))
    assert pred.refine(D).first_difference(direct.refine(D)) is not None


def test_zero_f_gives_zero_x_action():
    base = tower.PolyBase(2, ("s",), (F(1),))
    T = tower.make_tower(base, [("x", 4, SparsePoly(2, ("s",)), F(1, 2))])
    assert T.e_tilde == 2
    for e in (1, 2, 3):
        r = tower.tower_summands(T, e)
        assert r.hilbert_pass
        assert r.x_action_zero == (e >= 2)


def test_iterated_matches_one_shot():
    base = tower.PolyBase(2, ("x", "y"), (F(1), F(1)))
    T = tower.make_tower(base, [
        ("z", 2, poly(2, ("x", "y"), {(1, 1): 1}), None),
        ("w", 4, poly(2, ("x", "y"), {(4, 0): 1, (0, 4): 1}), None),
    ])
    for e in (1, 2, 3):
        one = tower.tower_summands(T, e)
        it = tower.tower_summands(T, e, iterate=True)
        assert one.summands == it.summands and one.hilbert_pass


def test_make_tower_validation():
    base = tower.PolyBase(2, ("x", "y"), (F(1), F(1)))
    with pytest.raises(InvalidPresentation):
        tower.make_tower(base, [("z", 3, poly(2, ("x", "y"), {(1, 0): 1}), None)])
    with pytest.raises(InvalidPresentation):
        tower.make_tower(base, [("z", 2, poly(2, ("x", "y"), {(1, 0): 1, (0, 2): 1}), None)])
    with pytest.raises(InvalidPresentation):
        tower.make_tower(base, [("z", 2, poly(2, ("x", "y"), {(1, 0): 1}), F(3))])
    with pytest.raises(InvalidPresentation):
        tower.make_tower(base, [("x", 2, poly(2, ("x", "y"), {(1, 0): 1}), None)])


def test_curve_base_fpurity_and_certification():
    cusp = load_ring(corpus_path("cusp"))
    assert not tower.curve_fpure(cusp)
    T = tower.make_tower(tower.CurveBase(cusp), [("x", 2, poly(2, ("g1", "g2"), {(1, 0): 1}), None)])
    with pytest.raises(FPurityFailure):
        tower.tower_summands(T, 1)
    gf4 = load_ring(corpus_path("gf4"))
    assert tower.curve_fpure(gf4)
    T = tower.make_tower(tower.CurveBase(gf4), [("x", 2, poly(2, ("g1", "g2"), {(0, 1): 1}), None)])
    assert all(tower.tower_summands(T, e).hilbert_pass for e in (1, 2, 3))
    q = load_ring(corpus_path("quartic_u"))
    T = tower.make_tower(tower.CurveBase(q), [("x", 2, SparsePoly(2, ("g1", "g2")), F(1, 2))])
    with pytest.raises(BaseNotCertified):
        tower.tower_summands(T, 2)


def test_curve_fpure_matches_fedder_for_plane_curves():
    # k[t^2, t^3] is F_2[x, y]/(x^3 + y^2): both criteria say not F-pure
    cusp = load_ring(corpus_path("cusp"))
    assert tower.curve_fpure(cusp) == tower.fedder_fpure(poly(2, ("x", "y"), {(3, 0): 1, (0, 2): 1}))
    cusp3 = load_ring(corpus_path("cusp_f3"))
    assert tower.curve_fpure(cusp3) == tower.fedder_fpure(poly(3, ("x", "y"), {(3, 0): 1, (0, 2): 2}))
