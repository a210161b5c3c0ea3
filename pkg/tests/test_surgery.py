import itertools
import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from slopekit.surgery import (FramedLink, FramedLinkSyntaxError, NonIntegralFraming, Slope, first_homology,
                              format_homology, linking_matrix, parse_framed_link, slope_after_twist,
                              smith_normal_form)


def det(m):
    return int(sympy.Matrix(m).det()) if m else 1


def determinantal_factors(m):
    """Oracle: d_k = D_k / D_(k-1), D_k = gcd of all k x k minors."""
    rows, cols = len(m), len(m[0])
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in itertools.combinations(range(rows), k):
            for c in itertools.combinations(range(cols), k):
                g = math.gcd(g, det([[m[i][j] for j in c] for i in r]))
        if g == 0:
            out += [0] * (min(rows, cols) - k + 1)
            break
        out.append(g // prev)
        prev = g
    return out


def matmul(a, b):
    return [[sum(x * y for x, y in zip(r, c)) for c in zip(*b)] for r in a]


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=300)
@given(matrices)
def test_snf_is_a_unimodular_diagonalization(m):
    snf = smith_normal_form(m)
    assert matmul(matmul(snf.U, m), snf.V) == snf.diagonal
    assert abs(det(snf.U)) == 1 and abs(det(snf.V)) == 1
    for i, row in enumerate(snf.diagonal):
        for j, v in enumerate(row):
            assert i == j or v == 0
    f = snf.factors
    assert all(d >= 0 for d in f)
    assert all(f[i + 1] % f[i] == 0 if f[i] else f[i + 1] == 0 for i in range(len(f) - 1))


@settings(max_examples=200)
@given(matrices)
def test_snf_matches_determinantal_divisors(m):
    assert smith_normal_form(m).factors == determinantal_factors(m)


@settings(max_examples=200)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                                                   min_size=n, max_size=n)))
def test_determinant_is_product_of_factors(m):
    assert abs(det(m)) == math.prod(smith_normal_form(m).factors)


symmetric_links = st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n),
    st.lists(st.integers(-5, 5), min_size=n, max_size=n),
    st.permutations(range(n))))


@settings(max_examples=200)
@given(symmetric_links)
def test_homology_is_invariant_under_permutation(data):
    n, flat, fr, perm = data
    lk = [[0 if i == j else flat[min(i, j) * n + max(i, j)] for j in range(n)] for i in range(n)]
    fl = FramedLink(n, lk, [Slope(f) for f in fr])
    assert sorted(first_homology(fl)) == sorted(first_homology(fl.permuted(list(perm))))


@pytest.mark.parametrize("lk", range(-5, 6))
def test_zero_framed_two_component_sweep(lk):
    h = first_homology(FramedLink.two_component(lk))
    assert (h == []) == (abs(lk) == 1)
    if lk == 0:
        assert h == [0, 0]
    elif abs(lk) > 1:
        assert h == [abs(lk), abs(lk)]


def test_cli_examples_as_module_calls():
    assert format_homology(first_homology(FramedLink.two_component(1))) == "H1 = 0"
    assert format_homology(first_homology(FramedLink.two_component(2))) == "H1 = Z/2 + Z/2"
    assert format_homology(first_homology(FramedLink(1, ((0,),), (Slope(0),)))) == "H1 = Z"
    assert format_homology([0, 3]) == "H1 = Z + Z/3"


def test_infinite_framing_drops_component():
    fl = FramedLink.two_component(1, 0, Slope(1, 0))
    assert linking_matrix(fl) == [[0]]
    assert first_homology(fl) == [0]
    assert first_homology(FramedLink.two_component(3, Slope(1, 0), Slope(1, 0))) == []


def test_nonintegral_framing():
    with pytest.raises(NonIntegralFraming):
        first_homology(FramedLink.two_component(1, 0, Slope(1, 2)))
    with pytest.raises(NonIntegralFraming):
        slope_after_twist(Slope(1, 2), 1, 1)


def test_slope_normalization_and_text():
    assert Slope(4, -6) == Slope(-2, 3)
    assert Slope(5, 0) == Slope(1, 0) and Slope(-5, 0) == Slope(1, 0)
    assert str(Slope(1, 0)) == "inf" and str(Slope(-2, 3)) == "-2/3" and str(Slope(7)) == "7"
    assert Slope.parse("inf").is_infinite and Slope.parse("-3/6") == Slope(-1, 2)
    with pytest.raises(ValueError):
        Slope(0, 0)
    with pytest.raises(FramedLinkSyntaxError):
        Slope.parse("1/x")


@pytest.mark.parametrize("p", range(-3, 4))
@pytest.mark.parametrize("n", range(-3, 4))
@pytest.mark.parametrize("w", [1, 2, 3])
def test_slope_after_twist(p, n, w):
    assert slope_after_twist(Slope(p), n, w) == Slope(p + n * w * w)
    assert slope_after_twist(Slope(p), 0, w) == Slope(p)


def test_parse_framed_link():
    fl = parse_framed_link("components: 2  # two circles\nlk: 0 1 2\nframing: 0 -1\nframing: 1 inf\n")
    assert fl.linking == ((0, 2), (2, 0))
    assert fl.framings == (Slope(-1), Slope(1, 0))


@pytest.mark.parametrize("text", [
    "lk: 0 1 1",
    "components: 2\nlk: 0 2 1",
    "components: 2\nlk: 0 0 1",
    "components: 1\nframing: 0 x",
    "components: 1\nwhat: 3",
    "components: two",
])
def test_parse_framed_link_errors(text):
    with pytest.raises(FramedLinkSyntaxError):
        parse_framed_link(text)


def test_framed_link_validation():
    with pytest.raises(ValueError):
        FramedLink(2, ((0, 1), (2, 0)), (Slope(0), Slope(0)))
    with pytest.raises(ValueError):
        FramedLink(2, ((0, 1),), (Slope(0), Slope(0)))
    with pytest.raises(ValueError):
        FramedLink(1, ((0,),), ())


def test_bundled_framed_links(fs):
    got = {name: format_homology(first_homology(fl)) for name, fl in fs.framed.items() if name != "lk1_half"}
    assert got == {"lk1_00": "H1 = 0", "lk2_00": "H1 = Z/2 + Z/2", "knot_0": "H1 = Z", "lk1_0inf": "H1 = Z"}
