import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopekit.bracket import jones, kauffman_bracket
from slopekit.diagram import linking_matrix_of, parse_pd, writhe
from slopekit.fox import alexander_knot
from slopekit.laurent import LPoly1, normal_form
from slopekit.moves import IllegalMoveSite, MoveSpec, apply_move, legal_moves, random_move
from slopekit.verify import link_alexander_pair

KNOTS = ["trefoil", "figure8", "8_6", "9_42"]
LINKS = ["hopf", "whitehead", "trefoil_axis2", "unknot_axis2"]
MINUS_A3 = LPoly1({3: -1}, "A")


def signature(d):
    alex = normal_form(alexander_knot(d)) if d.n_components == 1 else link_alexander_pair(d)
    return alex, jones(d), linking_matrix_of(d)


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("side", [0, 1])
def test_r1_on_the_round_unknot(sign, side):
    d = apply_move(parse_pd("Loop[1]"), MoveSpec("R1+", arc=1, sign=sign, side=side))
    assert len(d) == 1 and d.n_components == 1 and writhe(d) == sign
    back = apply_move(d, MoveSpec("R1-", crossing=0))
    assert len(back) == 0 and back.n_components == 1


@pytest.mark.parametrize("name", ["trefoil", "whitehead", "9_42"])
def test_r2_add_then_remove_is_identity(fs, name):
    d = fs.diagram(name)
    for m in legal_moves(d, ("R2+",)):
        e = apply_move(d, m)
        assert len(e) == len(d) + 2 and writhe(e) == writhe(d)
        assert apply_move(e, MoveSpec("R2-", crossing=len(e) - 2, crossing2=len(e) - 1)) == d


def test_r3_keeps_writhe_and_signs(fs):
    d = fs.diagram("trefoil")
    seen = 0
    for m in legal_moves(d, ("R2+",)):
        e = apply_move(d, m)
        for r in legal_moves(e, ("R3",)):
            f = apply_move(e, r)
            assert sorted(f.signs) == sorted(e.signs)
            assert f != e
            assert jones(f) == jones(d)
            seen += 1
    assert seen > 0


@pytest.mark.parametrize("move", [
    MoveSpec("R1+", arc=999),
    MoveSpec("R1+", arc=1, sign=2),
    MoveSpec("R1-", crossing=0),
    MoveSpec("R2+", face=99, arc=1, arc2=2),
    MoveSpec("R2+", face=0, arc=1, arc2=1),
    MoveSpec("R2-", crossing=0, crossing2=1),
    MoveSpec("R3", face=0, arc=1),
    MoveSpec("R9"),
])
def test_illegal_sites_are_rejected(fs, move):
    with pytest.raises(IllegalMoveSite):
        apply_move(fs.diagram("trefoil"), move)


def test_legal_moves_is_deterministic(fs):
    d = fs.diagram("whitehead")
    assert legal_moves(d) == legal_moves(d)


def test_random_move_respects_crossing_cap(fs):
    rng = random.Random(5)
    d = fs.diagram("9_42")
    for _ in range(20):
        m = random_move(d, rng, max_crossings=len(d))
        assert m.kind not in ("R1+", "R2+") or len(d) < len(fs.diagram("9_42"))
        d = apply_move(d, m)


# -- property tests: random legal move sequences ------------------------------

WALK = settings(max_examples=25)


def walk(d, seed, steps):
    rng = random.Random(seed)
    for _ in range(steps):
        m = random_move(d, rng)
        e = apply_move(d, m)
        yield m, d, e
        d = e


@WALK
@given(st.sampled_from(KNOTS + LINKS), st.integers(0, 2 ** 32))
def test_invariants_survive_random_moves(fs, name, seed):
    d0 = fs.diagram(name)
    ref = signature(d0)
    for _, _, e in walk(d0, seed, 10):
        assert signature(e) == ref


@WALK
@given(st.sampled_from(KNOTS + LINKS), st.integers(0, 2 ** 32))
def test_writhe_and_bracket_under_moves(fs, name, seed):
    for m, before, after in walk(fs.diagram(name), seed, 10):
        dw = writhe(after) - writhe(before)
        if m.kind == "R1+":
            assert dw == m.sign
        elif m.kind == "R1-":
            assert abs(dw) == 1
        else:
            assert dw == 0
        # the bracket is R2/R3 invariant and picks up -A^(3 dw) under R1
        assert kauffman_bracket(after) == kauffman_bracket(before) * MINUS_A3 ** dw
