import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from latex_oracle import SYMBOLS, to_lpoly
from slopekit.diagram import linking_number, parse_pd, sublink
from slopekit.fox import (ComponentCountMismatch, CrossingFreeComponent, alexander_knot, alexander_link2,
                          determinant, fox_matrix, fundamental_identity_holds, link2_minor_quotient, minor,
                          wirtinger, _knot_delta)
from slopekit.laurent import (LPoly, equal_up_to_units, is_symmetric, lp_evaluate, lp_invert_vars,
                              lp_substitute_power, normal_form, parse_lpoly)
from strategies import lpolys

KNOTS = ["trefoil", "figure8", "8_6", "9_42", "pretzel_-5_-3_3"]
LINKS = ["hopf", "whitehead", "trefoil_axis2", "figure8_axis3", "unknot_axis2", "kc_family1", "pretzel_ring3"]


def test_trefoil_and_figure8(fs):
    assert alexander_knot(fs.diagram("trefoil")) == parse_lpoly("t^-1 - 1 + t")
    assert alexander_knot(fs.diagram("figure8")) == parse_lpoly("-t^-1 + 3 - t")


def test_hopf_is_a_unit(fs):
    assert equal_up_to_units(alexander_link2(fs.diagram("hopf")), LPoly({(0, 0): 1}, "xy"))


def test_whitehead(fs):
    want = parse_lpoly("x*y - x - y + 1", "xy")
    assert equal_up_to_units(alexander_link2(fs.diagram("whitehead")), want)


def test_stabilized_split_unlink_is_zero(fs):
    assert alexander_link2(fs.diagram("unlink2")).is_zero()


def test_kc_family1_reproduces_two_variable_fixture(fs):
    got = alexander_link2(fs.diagram("kc_family1"), variables="xy" if fs.pairs["kc_family1"].k_component == 0 else "yx")
    assert equal_up_to_units(got, fs.polynomial("delta_kc_family1"))


def test_errors(fs):
    with pytest.raises(CrossingFreeComponent):
        alexander_knot(parse_pd("Loop[1]"))
    with pytest.raises(ComponentCountMismatch):
        alexander_knot(fs.diagram("hopf"))
    with pytest.raises(ComponentCountMismatch):
        alexander_link2(fs.diagram("trefoil"))


def test_wirtinger_shape(fs):
    p = wirtinger(fs.diagram("8_6"))
    assert p.n_generators == len(p.relators) == 8


@pytest.mark.parametrize("name", KNOTS + LINKS)
def test_fox_row_identity(fs, name):
    d = fs.diagram(name)
    p = wirtinger(d)
    for v in (("one",) if d.n_components == 1 else ("one", "xy", "yx")):
        assert fundamental_identity_holds(fox_matrix(p, v))


@pytest.mark.parametrize("name", KNOTS)
def test_knot_deletion_independence(fs, name):
    d = fs.diagram(name)
    ref = normal_form(_knot_delta(d))
    for r in range(len(d)):
        for c in range(len(d)):
            assert normal_form(_knot_delta(d, r, c)) == ref


@pytest.mark.parametrize("name", ["hopf", "whitehead", "trefoil_axis2", "figure8_axis3"])
def test_link_deletion_independence(fs, name):
    d = fs.diagram(name)
    ref = normal_form(link2_minor_quotient(d))
    for r in range(len(d)):
        for c in range(len(d)):
            assert normal_form(link2_minor_quotient(d, r, c)) == ref


@pytest.mark.parametrize("name", KNOTS)
def test_knot_polynomial_is_symmetric_and_unit_at_one(fs, name):
    p = alexander_knot(fs.diagram(name))
    assert is_symmetric(p)
    assert lp_evaluate(p, 1) == 1


@pytest.mark.parametrize("name", ["whitehead", "kc_family1", "pretzel_ring3", "figure8_axis3"])
def test_link_polynomial_is_symmetric(fs, name):
    p = alexander_link2(fs.diagram(name))
    assert equal_up_to_units(p, lp_invert_vars(p, "xy"))
    if all(s % 2 == 0 for s in normal_form(p).max_exponents()):
        assert is_symmetric(p)


@pytest.mark.parametrize("name", ["kc_family1", "pretzel_ring3", "trefoil_axis2", "figure8_axis3", "unknot_axis2"])
def test_torres_condition(fs, name):
    pair = fs.pairs[name]
    d = pair.diagram
    k = pair.k_component
    two = alexander_link2(d, variables="xy" if k == 0 else "yx")
    lk = abs(linking_number(d, 0, 1))
    t = LPoly({(1,): 1}, "t")
    lhs = lp_substitute_power(two, "y", 0)
    rhs = alexander_knot(sublink(d, [k]))
    assert equal_up_to_units(lhs * (t - 1), rhs * (t ** lk - 1))


@settings(max_examples=60)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(lpolys(2, 3), min_size=n, max_size=n),
                                                   min_size=n, max_size=n)))
def test_bareiss_matches_sympy(rows):
    x, y = SYMBOLS["x"], SYMBOLS["y"]
    sym = sympy.Matrix([[sum(c * x ** a * y ** b for (a, b), c in e.terms.items()) for e in r] for r in rows])
    assert determinant(rows) == to_lpoly(sym.det(method="berkowitz"), ("x", "y"))


def test_minor_drops_row_and_column():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert minor(m, 1, 0) == [[2, 3], [8, 9]]
