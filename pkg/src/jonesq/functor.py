"""Tangle-functor evaluation of closed diagrams.

Two engines fold a diagram slice by slice, bottom first, as sparse vectors
keyed by sign strings:

* the undirected engine sends every strand to V and uses the duality
  isomorphism f to turn ev/coev into caps and cups on V (x) V;
* the directed engine sends up-strands to V and down-strands to V*, and uses
  ev, qtr, coev, coqtr of the chosen ribbon flavor.

Crossings between strands of mixed type are the V (x) V braiding conjugated
by f on every V* leg.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple

from .laurent import LaurentQ, ONE, ZERO, Q
from .linalg import TensorMorphism, V, VD, basis
from .qrep import (
    Q_HALF,
    braiding,
    braiding_inverse,
    duality_iso,
    normalize_flavor,
    ribbon_data,
    structure_maps,
)
from .tangle import (
    DiagramError,
    Orientation,
    Piece,
    SlicedDiagram,
    _require_closed,
    point_directions,
    validate,
)

__all__ = [
    "EvalConfig",
    "MAX_WIDTH",
    "eval_undirected",
    "eval_directed",
    "undirected_cap",
    "undirected_cup",
    "crossing_map",
    "tangle_morphism",
    "IdentityResult",
    "identity_suite",
]

MAX_WIDTH = 16


@dataclass(frozen=True)
class EvalConfig:
    """``mode`` is "undirected_f" or "directed"; ``f_scale`` multiplies f."""

    mode: str = "undirected_f"
    flavor: str = "half_twist"
    f_scale: LaurentQ = field(default=ONE)

    def __post_init__(self):
        if self.mode not in ("undirected_f", "directed"):
            raise ValueError(f"unknown mode {self.mode!r}")
        flavor = normalize_flavor(self.flavor)
        if self.mode == "undirected_f":
            flavor = "half_twist"
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "f_scale", LaurentQ.coerce(self.f_scale))
        if not self.f_scale.is_unit():
            raise ValueError("f_scale must be a unit monomial")


def undirected_cap(scale=ONE) -> TensorMorphism:
    """ev o (f (x) Id): V (x) V -> 1."""
    f, _ = duality_iso(scale)
    ev = structure_maps("half_twist").ev
    return ev @ f.tensor(TensorMorphism.identity((V,)))


def undirected_cup(scale=ONE) -> TensorMorphism:
    """(Id (x) f^-1) o coev: 1 -> V (x) V."""
    _, f_inv = duality_iso(scale)
    coev = structure_maps("half_twist").coev
    return TensorMorphism.identity((V,)).tensor(f_inv) @ coev


@lru_cache(maxsize=None)
def crossing_map(piece: Piece, left: str, right: str) -> TensorMorphism:
    """Crossing with bottom legs of type ``left``, ``right``.

    The SW-NE strand carries ``left`` to the upper right.  Built from the
    V (x) V braiding (or its inverse for CROSS_NEG) by naturality:
    (b (x) a) o sigma o (a^-1 (x) b^-1) with a, b in {Id, f}.
    """
    core = braiding() if piece is Piece.CROSS_POS else braiding_inverse()
    f, f_inv = duality_iso()
    ident = TensorMorphism.identity((V,))

    def to(kind):
        return ident if kind == V else f

    def back(kind):
        return ident if kind == V else f_inv

    return to(right).tensor(to(left)) @ core @ back(left).tensor(back(right))


def _twist_scalar(piece: Piece, flavor: str) -> LaurentQ:
    # the negative full twist goes to the ribbon element
    r = ribbon_data(flavor).ribbon_scalar(1)
    return r if piece is Piece.TWIST_NEG else r.unit_inverse()


_Local = Callable[[int, int, int, Piece], object]


def _fold(d: SlicedDiagram, local: _Local, start: dict) -> tuple[dict, LaurentQ]:
    """Push a sparse vector through every slice; returns (vector, scalar)."""
    vec = start
    scalar = ONE
    for k, s in enumerate(d.slices):
        a = off = 0
        for p in s:
            t = local(k, a, off, p)
            if t is None:
                pass
            elif isinstance(t, LaurentQ):
                scalar = scalar * t
            else:
                width = p.n_in
                new: dict = {}
                for state, c in vec.items():
                    for out, cc in t.get(state[off:off + width], ()):
                        key = state[:off] + out + state[off + width:]
                        v = c * cc
                        prev = new.get(key)
                        new[key] = v if prev is None else prev + v
                vec = {key: v for key, v in new.items() if v}
            a += p.n_in
            off += p.n_out
    return vec, scalar


def _check_width(d: SlicedDiagram) -> None:
    if max(d.widths) > MAX_WIDTH:
        raise DiagramError(f"diagram width {max(d.widths)} exceeds the evaluation limit of {MAX_WIDTH}")


def _undirected_local(cfg: EvalConfig) -> _Local:
    cap = undirected_cap(cfg.f_scale).signs_table()
    cup = undirected_cup(cfg.f_scale).signs_table()
    cross = {
        Piece.CROSS_POS: braiding().signs_table(),
        Piece.CROSS_NEG: braiding_inverse().signs_table(),
    }
    twist = {p: _twist_scalar(p, "half_twist") for p in (Piece.TWIST_POS, Piece.TWIST_NEG)}

    def local(k, a, off, p):
        if p is Piece.ID:
            return None
        if p is Piece.CAP:
            return cap
        if p is Piece.CUP:
            return cup
        if p.is_crossing:
            return cross[p]
        return twist[p]

    return local


def tangle_morphism(d: SlicedDiagram, cfg: EvalConfig | None = None) -> TensorMorphism:
    """Undirected evaluation of an open diagram as a map V^(x)bottom -> V^(x)top."""
    cfg = cfg or EvalConfig()
    validate(d)
    _check_width(d)
    local = _undirected_local(cfg)
    table: dict = {}
    for s in basis(d.bottom_width):
        vec, scalar = _fold(d, local, {s: ONE})
        for out, c in vec.items():
            table[(out, s)] = c * scalar
    return TensorMorphism.from_signs((V,) * d.bottom_width, (V,) * d.top_width, table)


def eval_undirected(d: SlicedDiagram, cfg: EvalConfig | None = None) -> LaurentQ:
    """Value of a closed diagram under the undirected functor built from f."""
    cfg = cfg or EvalConfig()
    _require_closed(d)
    _check_width(d)
    vec, scalar = _fold(d, _undirected_local(cfg), {(): ONE})
    return scalar * vec.get((), ZERO)


def eval_directed(d: SlicedDiagram, o: Orientation, cfg: EvalConfig | str = "half_twist") -> LaurentQ:
    """Value of a closed, oriented diagram under the directed ribbon functor.

    ``cfg`` may be an :class:`EvalConfig` or just a flavor name.
    """
    if isinstance(cfg, str):
        cfg = EvalConfig(mode="directed", flavor=cfg)
    flavor = cfg.flavor
    _require_closed(d)
    _check_width(d)
    dirs = point_directions(d, o)
    maps = structure_maps(flavor)
    tables = {
        (Piece.CAP, VD, V): maps.ev.signs_table(),
        (Piece.CAP, V, VD): maps.qtr.signs_table(),
        (Piece.CUP, V, VD): maps.coev.signs_table(),
        (Piece.CUP, VD, V): maps.coqtr.signs_table(),
    }
    twist = {p: _twist_scalar(p, flavor) for p in (Piece.TWIST_POS, Piece.TWIST_NEG)}

    def kind(pt):
        return V if dirs[pt] == 1 else VD

    def local(k, a, off, p):
        if p is Piece.ID:
            return None
        if p.is_twist:
            return twist[p]
        if p is Piece.CAP:
            return tables[(p, kind((k, a)), kind((k, a + 1)))]
        if p is Piece.CUP:
            b = off
            return tables[(p, kind((k + 1, b)), kind((k + 1, b + 1)))]
        return crossing_map(p, kind((k, a)), kind((k, a + 1))).signs_table()

    vec, scalar = _fold(d, local, {(): ONE})
    return scalar * vec.get((), ZERO)


# ---------------------------------------------------------------------------
# identity suite


class IdentityResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


def _ident(*word):
    return TensorMorphism.identity(word)


def _ribbon_on(word_kind: str, flavor: str, power: int) -> TensorMorphism:
    return _ident(word_kind) * (ribbon_data(flavor).ribbon_scalar(1) ** power)


def identity_suite() -> list[IdentityResult]:
    """Exact matrix identities tying the skein relations to the functor."""
    results = []

    def check(name, lhs, rhs, detail=""):
        results.append(IdentityResult(name, lhs == rhs, detail))

    f, f_inv = duality_iso()
    sigma, sigma_inv = braiding(), braiding_inverse()
    IV, IVD = _ident(V), _ident(VD)
    IVV = _ident(V, V)

    # crossing = q^1/2 Id + q^-1/2 (cup o cap), with the cap written through qtr_t
    t = structure_maps("half_twist")
    cupcap = IV.tensor(f_inv) @ t.coev @ t.qtr @ IV.tensor(f)
    check("kauffman_g: sigma = q^1/2 Id + q^-1/2 cup.cap", sigma, IVV * Q_HALF + cupcap * (Q_HALF ** -1))

    for flavor, sign, label in (("half_twist", 1, "Q_t"), ("standard", -1, "Q_s")):
        m = structure_maps(flavor)
        cap_ev = m.ev @ f.tensor(IV)
        cap_qtr = m.qtr @ IV.tensor(f)
        cup_coev = IV.tensor(f_inv) @ m.coev
        cup_coqtr = f_inv.tensor(IV) @ m.coqtr
        rel = "equal" if sign == 1 else "differ by -1"
        check(f"cap formulas with {label} {rel}", cap_ev, cap_qtr * sign)
        check(f"cup formulas with {label} {rel}", cup_coev, cup_coqtr * sign)
        if sign == -1:
            results.append(IdentityResult(f"cap formulas with {label} are not equal", cap_ev != cap_qtr))
            results.append(IdentityResult(f"cup formulas with {label} are not equal", cup_coev != cup_coqtr))

        # qtr_Q = ev o (f (x) Id) o sigma o (Id (x) Q^-1) o (Id (x) f^-1)
        rhs = m.ev @ f.tensor(IV) @ sigma @ IV.tensor(_ribbon_on(V, flavor, -1)) @ IV.tensor(f_inv)
        check(f"qtr via twist and crossing ({label})", m.qtr, rhs)

        # directed zig-zags
        check(f"snake (Id (x) ev)(coev (x) Id) = Id_V [{label}]", IV.tensor(m.ev) @ m.coev.tensor(IV), IV)
        check(f"snake (ev (x) Id)(Id (x) coev) = Id_V* [{label}]", m.ev.tensor(IVD) @ IVD.tensor(m.coev), IVD)
        check(f"snake (qtr (x) Id)(Id (x) coqtr) = Id_V [{label}]", m.qtr.tensor(IV) @ IV.tensor(m.coqtr), IV)
        check(f"snake (Id (x) qtr)(coqtr (x) Id) = Id_V* [{label}]", IVD.tensor(m.qtr) @ m.coqtr.tensor(IVD), IVD)

    cap, cup = undirected_cap(), undirected_cup()
    check("snake (cap (x) Id)(Id (x) cup) = Id", cap.tensor(IV) @ IV.tensor(cup), IV)
    check("snake (Id (x) cap)(cup (x) Id) = Id", IV.tensor(cap) @ cup.tensor(IV), IV)
    check("circle: cap o cup = -q - q^-1", cap @ cup, TensorMorphism.scalar(-Q - Q ** -1))
    check("circle: qtr_t o coev = -q - q^-1", t.qtr @ t.coev, TensorMorphism.scalar(-Q - Q ** -1))

    lhs = sigma.tensor(IV) @ IV.tensor(sigma) @ sigma.tensor(IV)
    rhs = IV.tensor(sigma) @ sigma.tensor(IV) @ IV.tensor(sigma)
    check("Yang-Baxter on V (x) V (x) V", lhs, rhs)
    check("sigma o sigma^-1 = Id", sigma @ sigma_inv, IVV)
    check("sigma^-1 o sigma = Id", sigma_inv @ sigma, IVV)

    # naturality at f: (Id (x) f) o sigma_{V,V} = sigma_{V*,V} o (f (x) Id)
    check(
        "naturality: (Id (x) f) sigma = sigma_{V*,V} (f (x) Id)",
        IV.tensor(f) @ sigma,
        crossing_map(Piece.CROSS_POS, VD, V) @ f.tensor(IV),
    )
    return results
