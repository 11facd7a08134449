import random

import pytest

from jonesq.catalog import builtin
from jonesq.functor import (
    EvalConfig,
    MAX_WIDTH,
    crossing_map,
    eval_directed,
    eval_undirected,
    identity_suite,
    tangle_morphism,
    undirected_cap,
    undirected_cup,
)
from jonesq.laurent import DELTA, LaurentQ, ONE, Q, parse
from jonesq.linalg import TensorMorphism, V, VD
from jonesq.qrep import braiding, braiding_inverse
from jonesq.skein import kauffman_bracket
from jonesq.tangle import DiagramError, Orientation, Piece, components, diagram, random_diagram, reverse, writhe

QS = EvalConfig("directed", "standard")
QT = EvalConfig("directed", "half_twist")


def parity(k):
    return 1 if k % 2 == 0 else -1


def test_config_validation():
    assert EvalConfig().flavor == "half_twist"
    assert EvalConfig("undirected_f", "standard").flavor == "half_twist"
    assert EvalConfig("directed", "s").flavor == "standard"
    with pytest.raises(ValueError):
        EvalConfig("sideways")
    with pytest.raises(ValueError):
        EvalConfig(f_scale=Q + 1)
    with pytest.raises(ValueError):
        EvalConfig("directed", "q")


def test_circle_values():
    assert (undirected_cap() @ undirected_cup()).matrix[(0, 0)] == DELTA
    u = builtin("unknot")
    assert eval_undirected(u) == DELTA
    assert eval_directed(u, Orientation((1,)), QT) == DELTA
    assert eval_directed(u, Orientation((-1,)), QS) == -DELTA


def test_empty_diagram_is_one():
    assert eval_undirected(builtin("empty")) == ONE
    assert eval_directed(builtin("empty"), Orientation(()), QS) == ONE


def test_crossing_maps_on_vv():
    assert crossing_map(Piece.CROSS_POS, V, V) == braiding()
    assert crossing_map(Piece.CROSS_NEG, V, V) == braiding_inverse()
    for left in (V, VD):
        for right in (V, VD):
            pos = crossing_map(Piece.CROSS_POS, left, right)
            neg = crossing_map(Piece.CROSS_NEG, right, left)
            assert pos.domain == (left, right) and pos.codomain == (right, left)
            assert neg @ pos == TensorMorphism.identity((left, right))


def test_open_tangle_morphisms():
    cap = tangle_morphism(diagram("n"))
    assert cap == undirected_cap()
    x = tangle_morphism(diagram("x+"))
    assert x == braiding()
    r2 = tangle_morphism(diagram("x+", "x-"))
    assert r2 == TensorMorphism.identity((V, V))
    twist_pair = tangle_morphism(diagram("t+", "t-"))
    assert twist_pair == TensorMorphism.identity((V,))


def test_twist_values():
    tw = builtin("unknot_tw+")
    assert eval_undirected(tw) == kauffman_bracket(tw)
    for o in Orientation.all(1):
        assert eval_directed(tw, o, QT) == kauffman_bracket(tw)
        # w = 1, #L = 1
        assert eval_directed(tw, o, QS) == kauffman_bracket(tw)


def test_directed_requires_matching_orientation():
    with pytest.raises(DiagramError):
        eval_directed(builtin("hopf+"), Orientation((1,)), QT)


def test_width_limit():
    wide = diagram(" ".join(["u"] * (MAX_WIDTH // 2 + 1)), " ".join(["n"] * (MAX_WIDTH // 2 + 1)))
    with pytest.raises(DiagramError, match="width"):
        eval_undirected(wide)


@pytest.mark.parametrize("name", ["hopf+", "hopf-", "trefoil_r", "trefoil_l", "figure8", "two_circles"])
def test_builtins_all_engines(name):
    d = builtin(name)
    k = kauffman_bracket(d)
    n = components(d).count
    assert eval_undirected(d) == k
    for o in Orientation.all(n):
        assert eval_directed(d, o, QT) == k
        assert eval_directed(d, o, QS) == parity(writhe(d, o) + n) * k


@pytest.mark.parametrize("scale", ["1", "-1", "q^(1/2)", "-q^(-3/2)"])
def test_f_scale_does_not_matter(scale):
    lam = parse(scale)
    cfg = EvalConfig("undirected_f", f_scale=lam)
    rng = random.Random(11)
    for _ in range(15):
        d = random_diagram(8, 4, rng.randrange(10**6))
        assert eval_undirected(d, cfg) == kauffman_bracket(d)
    cfg_d = EvalConfig("directed", "half_twist", f_scale=lam)
    d = builtin("trefoil_r")
    assert eval_directed(d, Orientation((1,)), cfg_d) == kauffman_bracket(d)


def test_reversal_invariance_of_directed_values():
    rng = random.Random(12)
    for _ in range(20):
        d = random_diagram(8, 4, rng.randrange(10**6))
        n = components(d).count
        o = Orientation(tuple(rng.choice((1, -1)) for _ in range(n)))
        for cfg in (QS, QT):
            assert eval_directed(d, reverse(o), cfg) == eval_directed(d, o, cfg)


def test_identity_suite_passes():
    results = identity_suite()
    failed = [r for r in results if not r.passed]
    assert not failed, failed


def test_mixed_crossing_standard_flavor_sign():
    # Q_s disagrees with the bracket by exactly -1 on the unknot
    u = builtin("unknot")
    assert eval_directed(u, Orientation((1,)), QS) == LaurentQ({4: 1, -4: 1})
