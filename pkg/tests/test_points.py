import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chernpairs import (
    CollinearPlus,
    FieldSpec,
    Generic,
    GGVerdict,
    OnCurve,
    PointSet,
    character_gap_indices,
    character_is_connected,
    evaluation_matrix,
    gen_points,
    h0_ideal,
    h1_ideal,
    hilbert,
    is_cb,
    is_gg,
    make_transverse_ci,
    mat_rank,
    monomial_basis,
    numerical_character,
    sigma,
)
from chernpairs.points import DuplicatePointError, NumericalCharacter, hilbert_function

QQ = FieldSpec.rational()
F101 = FieldSpec.prime(101)
F7 = FieldSpec.prime(7)

LINE3 = [(1, 0, 0), (0, 1, 0), (1, 1, 0)]
LINE4_PLUS1 = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)]


@pytest.fixture(scope="module")
def ci23():
    return make_transverse_ci(2, 3, F101, seed=0)


# -- brute-force oracle over F_7 ---------------------------------------------


def all_forms(n, p=7):
    """Every coefficient vector of degree ``n`` over F_p, as an array."""
    m = (n + 1) * (n + 2) // 2
    return np.array(list(itertools.product(range(p), repeat=m)), dtype=np.int64)


def values(forms, pts, n, p=7):
    mons = np.array([[x**i * y**j * z**k % p for i, j, k in monomial_basis(n)] for x, y, z in pts], dtype=np.int64)
    return forms @ mons.T % p


FORMS = {n: all_forms(n) for n in (1, 2)}


def brute_h0(pts, n):
    if not pts:
        return len(monomial_basis(n))
    count = int((values(FORMS[n], pts, n) == 0).all(axis=1).sum())
    return round(np.log(count) / np.log(7))


def brute_cb(pts, n):
    for i in range(len(pts)):
        rest = pts[:i] + pts[i + 1:]
        v_rest = values(FORMS[n], rest, n) if rest else np.zeros((len(FORMS[n]), 0), np.int64)
        v_p = values(FORMS[n], [pts[i]], n)[:, 0]
        if ((v_rest == 0).all(axis=1) & (v_p != 0)).any():
            return False
    return True


points_f7 = st.lists(
    st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)).filter(any),
    min_size=1,
    max_size=7,
)


@settings(max_examples=80, deadline=None)
@given(points_f7, st.sampled_from([1, 2]))
def test_h0_and_cb_match_enumeration(raw, n):
    try:
        Z = PointSet(F7, raw)
    except DuplicatePointError:
        return
    pts = list(Z.points)
    assert h0_ideal(Z, n) == brute_h0(pts, n)
    assert is_cb(Z, n).holds == brute_cb(pts, n)


# -- basics -----------------------------------------------------------------


def test_point_normalization_and_duplicates():
    Z = PointSet(QQ, [(2, 4, 6), (0, 3, 0)])
    assert Z.points[0] == (1, 2, 3) and Z.points[1] == (0, 1, 0)
    with pytest.raises(DuplicatePointError) as exc:
        PointSet(QQ, [(1, 2, 3), (0, 0, 1), (-1, -2, -3)])
    assert exc.value.index == 2 and exc.value.first == 0
    with pytest.raises(ValueError):
        PointSet(QQ, [(0, 0, 0)])


def test_monomial_basis():
    assert monomial_basis(0) == ((0, 0, 0),)
    assert monomial_basis(1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert len(monomial_basis(3)) == 10
    with pytest.raises(ValueError):
        monomial_basis(-1)


def test_evaluation_matrix_examples():
    one = PointSet(QQ, [(1, 2, 3)])
    m = evaluation_matrix(one, 0)
    assert (m.rows, m.cols, m.entries) == (1, 1, (1,))
    assert mat_rank(evaluation_matrix(PointSet(QQ, LINE3), 1)) == 2
    five = gen_points(Generic(5), QQ, seed=3)
    m = evaluation_matrix(five, 2)
    assert (m.rows, m.cols, mat_rank(m)) == (5, 6, 5)


def test_hilbert_examples(ci23):
    Z = PointSet(QQ, LINE3)
    assert (hilbert(Z, 0), h0_ideal(Z, 0)) == (1, 0)
    assert (hilbert(Z, 1), h0_ideal(Z, 1), h1_ideal(Z, 1)) == (2, 1, 1)
    assert (hilbert(Z, -1), h0_ideal(Z, -1), h1_ideal(Z, -1)) == (0, 0, 3)
    assert h0_ideal(ci23.X, 2) == 1
    assert hilbert_function(ci23.X, 4) == [1, 3, 5, 6, 6]


def test_sigma_examples(ci23):
    assert sigma(PointSet(QQ, [(1, 1, 1)])) == 1
    assert sigma(gen_points(Generic(5), QQ, seed=1)) == 2
    assert sigma(ci23.X) == 2
    with pytest.raises(ValueError):
        sigma(PointSet(QQ))


def test_character_examples(ci23):
    five = PointSet(QQ, [(1, k, 0) for k in range(5)])
    assert numerical_character(five).entries == (5,)
    assert numerical_character(ci23.X).entries == (4, 3)
    ch = numerical_character(PointSet(QQ, LINE4_PLUS1))
    assert ch.entries == (4, 2) and str(ch) == "(4,2)"
    with pytest.raises(ValueError):
        numerical_character(PointSet(QQ))


def test_character_connectedness():
    assert character_is_connected((4, 3)) and character_gap_indices((4, 3)) == []
    assert not character_is_connected((4, 2)) and character_gap_indices((4, 2)) == [1]
    assert character_is_connected(NumericalCharacter((5,)))
    assert character_gap_indices((9, 6, 5, 2)) == [1, 3]


def test_cb_examples(ci23):
    res = is_cb(PointSet(QQ, [(1, 2, 3)]), 1)
    assert not res.holds
    pt, curve = res.witness
    assert pt == (1, 2, 3) and curve(pt) != 0
    assert is_cb(PointSet(QQ, LINE3), 1).holds
    assert is_cb(ci23.X, 2).holds
    assert is_cb(PointSet(QQ), 3).holds
    assert is_cb(PointSet(QQ, [(1, 0, 0)]), 0).holds


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("field", [QQ, F101], ids=str)
def test_generic_points_fail_cb(m, field):
    Z = gen_points(Generic(m), field, seed=m)
    for n in range(max(m - 1, 1), m + 3):
        res = is_cb(Z, n)
        assert not res.holds
        pt, curve = res.witness
        assert curve(pt) != 0
        assert all(curve(q) == 0 for q in Z.points if q != pt)


def test_gg_examples(ci23):
    assert is_gg(PointSet(F101, [(1, 2, 3)]), 1).verdict is GGVerdict.GENERATED
    assert is_gg(PointSet(QQ, [(1, 2, 3)]), 1).verdict is GGVerdict.NO_RATIONAL_OBSTRUCTION
    res = is_gg(PointSet(F101, LINE3), 1)
    assert res.verdict is GGVerdict.NOT_GENERATED_LOCAL and not res.generated
    assert is_gg(ci23.X, 3).verdict is GGVerdict.GENERATED
    # one conic has rank-1 differentials at each point
    assert is_gg(ci23.X, 2).verdict is GGVerdict.NOT_GENERATED_LOCAL


def test_gg_domain_errors():
    with pytest.raises(ValueError):
        is_gg(PointSet(F101), 1)
    with pytest.raises(ValueError):
        is_gg(PointSet(F101, [(1, 0, 0)]), 0)
    with pytest.raises(ValueError):
        is_gg(gen_points(Generic(5), F101, seed=0), 1)


def test_gg_two_points_on_lines():
    # lines through two points form a pencil: rank-1 differentials
    Z = PointSet(F7, [(1, 0, 0), (1, 1, 0)])
    assert is_gg(Z, 1).verdict is GGVerdict.NOT_GENERATED_LOCAL


def test_gg_ninth_point_is_a_base_point():
    F, G, X = make_transverse_ci(3, 3, F101, seed=4)
    missing = X.points[5]
    res = is_gg(X.without(missing), 3)
    assert res.verdict is GGVerdict.BASE_POINT_FOUND
    assert res.point == missing


def test_gg_monotone_on_ci():
    X = make_transverse_ci(2, 2, F101, seed=1).X
    verdicts = [is_gg(X, n).verdict for n in (2, 3, 4)]
    assert verdicts == [GGVerdict.GENERATED] * 3


# -- properties on generated instances -----------------------------------------


def instances():
    out = []
    for i in range(30):
        field = F101 if i % 2 else QQ
        kind = [Generic(2 + i % 6), CollinearPlus(3 + i % 4, i % 3), OnCurve(2 + i % 3, 4 + i % 5)][i % 3]
        if isinstance(kind, OnCurve) and not field.is_prime:
            field = F101
        out.append(gen_points(kind, field, seed=i))
    return out


@pytest.mark.parametrize("Z", instances(), ids=lambda Z: f"{Z.field}-{Z.degree}")
def test_hilbert_and_character_properties(Z):
    H = hilbert_function(Z, Z.degree + 1)
    assert all(a <= b for a, b in zip(H, H[1:]))
    assert all(h <= Z.degree for h in H)
    assert all(H[n] == Z.degree for n in range(max(Z.degree - 1, 0), Z.degree + 2))
    ch = numerical_character(Z)
    assert ch.is_valid() and ch.degree == Z.degree
    for n in range(ch.entries[0] + 2):
        assert ch.h1(n) == h1_ideal(Z, n)
    for n in range(1, Z.degree + 1):
        if is_cb(Z, n).holds:
            assert is_cb(Z, n - 1).holds


def test_generators():
    assert gen_points(Generic(0), QQ).degree == 0
    assert gen_points(Generic(5), F101, seed=9) == gen_points(Generic(5), F101, seed=9)
    assert numerical_character(gen_points(CollinearPlus(4, 1), QQ, seed=2)).entries == (4, 2)
    Z = gen_points(OnCurve(3, 7), F101, seed=1)
    assert Z.degree == 7 and h0_ideal(Z, 3) >= 1
    with pytest.raises(ValueError):
        gen_points(OnCurve(3, 7), QQ)
