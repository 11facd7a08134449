import random

import pytest

from jonesq.catalog import builtin
from jonesq.laurent import DELTA, LaurentQ, ONE, parse
from jonesq.skein import MAX_CROSSINGS, SmoothingState, jones, kauffman_bracket, loop_count, states
from jonesq.tangle import (
    DiagramError,
    Orientation,
    Piece,
    braid_closure,
    components,
    diagram,
    insert_slices,
    mirror,
    random_diagram,
    tensor,
    writhe,
)


def test_empty_and_circles():
    assert kauffman_bracket(builtin("empty")) == ONE
    assert kauffman_bracket(builtin("unknot")) == DELTA
    assert kauffman_bracket(builtin("two_circles")) == DELTA * DELTA
    assert str(kauffman_bracket(builtin("two_circles"))) == "q^2 + 2 + q^-2"


def test_twist_factor():
    assert kauffman_bracket(builtin("unknot_tw+")) == parse("-q^(3/2)") * DELTA
    assert kauffman_bracket(builtin("unknot_tw-")) == parse("-q^(-3/2)") * DELTA


def test_curl_equals_twist():
    curl = diagram("u", "| u |", "x+ | |", "| n |", "n")
    assert kauffman_bracket(curl) == kauffman_bracket(builtin("unknot_tw+"))
    assert kauffman_bracket(mirror(curl)) == kauffman_bracket(builtin("unknot_tw-"))


def test_open_diagram_rejected():
    with pytest.raises(DiagramError, match="not closed"):
        kauffman_bracket(diagram("u"))


def test_crossing_limit():
    d = braid_closure([1] * (MAX_CROSSINGS + 1), 2)
    with pytest.raises(DiagramError, match="limit"):
        kauffman_bracket(d)


def test_states_and_loops():
    d = builtin("hopf+")
    all_states = list(states(d))
    assert len(all_states) == 4
    aa = SmoothingState(("A", "A"))
    bb = SmoothingState(("B", "B"))
    assert aa.weight_exponent() == 4 and bb.weight_exponent() == -4
    # the two identity smoothings leave the two plat circles
    assert loop_count(d, aa) == 2
    total = sum(
        (LaurentQ({s.weight_exponent(): 1}) * DELTA ** loop_count(d, s) for s in all_states),
        LaurentQ(),
    )
    assert total == kauffman_bracket(d)


def test_skein_relation_on_a_crossing():
    # <x+> = q^1/2 <identity> + q^-1/2 <cup-cap>
    base = builtin("trefoil_r")
    k = 3  # the topmost crossing slice
    ident = base.slices[:k] + ((Piece.ID,) * 4,) + base.slices[k + 1:]
    capcup = base.slices[:k] + ((Piece.ID, Piece.CAP, Piece.ID), (Piece.ID, Piece.CUP, Piece.ID)) + base.slices[k + 1:]
    from jonesq.tangle import SlicedDiagram

    lhs = kauffman_bracket(base)
    rhs = parse("q^(1/2)") * kauffman_bracket(SlicedDiagram(ident, 0)) + parse("q^(-1/2)") * kauffman_bracket(
        SlicedDiagram(capcup, 0)
    )
    assert lhs == rhs


def test_jones_values():
    assert jones(builtin("unknot")) == DELTA
    assert jones(builtin("unknot_tw+")) == DELTA
    assert str(jones(builtin("trefoil_r"))) == "-q^-1 - q^-3 - q^-5 + q^-9"
    assert jones(builtin("trefoil_l")) == jones(builtin("trefoil_r")).bar()
    assert str(jones(builtin("figure8"))) == "-q^5 - q^-5"


def test_jones_needs_orientation_for_links():
    with pytest.raises(DiagramError, match="orientation"):
        jones(builtin("hopf+"))
    assert jones(builtin("hopf+"), Orientation((1, -1))) == jones(builtin("hopf-"), Orientation((1, 1)))


def test_jones_writhe_normalisation():
    for seed in range(30):
        d = random_diagram(8, 4, seed)
        o = Orientation.positive(components(d).count)
        w = writhe(d, o)
        assert jones(d, o) == LaurentQ({-6 * w: 1 if w % 2 == 0 else -1}) * kauffman_bracket(d)


def test_multiplicative_under_tensor():
    rng = random.Random(7)
    for _ in range(25):
        a = random_diagram(6, 3, rng.randrange(10**6))
        b = random_diagram(6, 3, rng.randrange(10**6))
        assert kauffman_bracket(tensor(a, b)) == kauffman_bracket(a) * kauffman_bracket(b)


def test_twist_pair_leaves_jones_unchanged():
    rng = random.Random(8)
    for _ in range(25):
        d = random_diagram(8, 4, rng.randrange(10**6))
        lvl = rng.randrange(1, len(d.widths) - 1)
        w = d.widths[lvl]
        pos = rng.randrange(w)
        row = lambda p: (Piece.ID,) * pos + (p,) + (Piece.ID,) * (w - pos - 1)
        d2 = insert_slices(d, lvl, [row(Piece.TWIST_POS), row(Piece.TWIST_NEG)])
        assert kauffman_bracket(d2) == kauffman_bracket(d)
        n = components(d).count
        o = Orientation.positive(n)
        assert jones(d2, o) == jones(d, o)


def test_mirror_bars_bracket():
    for seed in range(40):
        d = random_diagram(8, 5, seed)
        assert kauffman_bracket(mirror(d)) == kauffman_bracket(d).bar()
