"""Concrete U_q(sl2) data on the type-1 representations V_n.

Everything is a matrix over :class:`~jonesq.laurent.LaurentQ`.  The basis of
V_n is ``v_n, v_{n-2}, ..., v_{-n}`` (index j holds weight n - 2j).  For the
two-dimensional V = V_1 and its dual, index 0 is v_1 (resp. v^_1), matching
the +1 entry of a sign string in :mod:`jonesq.linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .laurent import LaurentQ, ONE, Q, quantum_integer
from .linalg import Matrix, TensorMorphism, V, VD

__all__ = [
    "Rep",
    "rep",
    "dual_rep",
    "antipode",
    "coproduct_action",
    "counit_action",
    "braiding",
    "braiding_inverse",
    "duality_iso",
    "flip",
    "RibbonData",
    "ribbon_data",
    "StructureMaps",
    "structure_maps",
    "FLAVORS",
    "normalize_flavor",
    "GENERATORS",
]

GENERATORS = ("E", "F", "K", "K_inv")
FLAVORS = ("standard", "half_twist")
_FLAVOR_ALIASES = {"s": "standard", "standard": "standard", "t": "half_twist", "half_twist": "half_twist"}

Q_HALF = LaurentQ.qpow("1/2")
Q_INV = Q ** -1


def normalize_flavor(flavor: str) -> str:
    try:
        return _FLAVOR_ALIASES[flavor]
    except KeyError:
        raise ValueError(f"unknown ribbon flavor {flavor!r}; use 'standard'/'s' or 'half_twist'/'t'") from None


@dataclass(frozen=True)
class Rep:
    """Action matrices of E, F, K, K^-1 on V_n (or on its dual)."""

    n: int
    E: Matrix
    F: Matrix
    K: Matrix
    K_inv: Matrix
    dual: bool = False

    @property
    def dim(self) -> int:
        return self.n + 1

    def generator(self, name: str) -> Matrix:
        return getattr(self, name)

    def relations(self) -> dict[str, bool]:
        """Truth of the four defining relations, the division cleared."""
        E, F, K, Ki = self.E, self.F, self.K, self.K_inv
        ident = Matrix.identity(self.dim)
        q2 = Q ** 2
        return {
            "K K^-1 = 1": K @ Ki == ident and Ki @ K == ident,
            "K E K^-1 = q^2 E": K @ E @ Ki == E.scale(q2),
            "K F K^-1 = q^-2 F": K @ F @ Ki == F.scale(q2 ** -1),
            "(EF - FE)(q - q^-1) = K - K^-1": (E @ F - F @ E).scale(Q - Q_INV) == K - Ki,
        }


@lru_cache(maxsize=None)
def rep(n: int) -> Rep:
    """V_n with the ladder action: E raises, F lowers, K v_k = q^k v_k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    dim = n + 1
    E, F = {}, {}
    for j in range(n):
        # F v_{n-2j} = [j+1] v_{n-2j-2}
        F[(j + 1, j)] = quantum_integer(j + 1)
        # E v_{-n+2j} = [j+1] v_{-n+2j+2}; index of v_{-n+2j} is n - j
        E[(n - j - 1, n - j)] = quantum_integer(j + 1)
    K = Matrix.diag([Q ** (n - 2 * j) for j in range(dim)])
    K_inv = Matrix.diag([Q ** (2 * j - n) for j in range(dim)])
    return Rep(n, Matrix((dim, dim), E), Matrix((dim, dim), F), K, K_inv)


def antipode(r: Rep) -> dict[str, Matrix]:
    """Matrices of S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1, S(K^-1) = K."""
    return {
        "E": -(r.E @ r.K_inv),
        "F": -(r.K @ r.F),
        "K": r.K_inv,
        "K_inv": r.K,
    }


@lru_cache(maxsize=None)
def dual_rep(n: int) -> Rep:
    """V_n^* in the dual basis, with (X . f)(w) = f(S(X) w)."""
    s = antipode(rep(n))
    return Rep(n, s["E"].T, s["F"].T, s["K"].T, s["K_inv"].T, dual=True)


def _factor(kind: str) -> Rep:
    if kind == V:
        return rep(1)
    if kind == VD:
        return dual_rep(1)
    raise ValueError(f"unknown tensor factor {kind!r}")


def counit_action(gen: str) -> TensorMorphism:
    """Action on the trivial representation: E, F -> 0 and K, K^-1 -> 1."""
    return TensorMorphism.scalar(ONE if gen in ("K", "K_inv") else LaurentQ())


def _single(kind: str, gen: str) -> TensorMorphism:
    return TensorMorphism((kind,), (kind,), _factor(kind).generator(gen))


@lru_cache(maxsize=None)
def coproduct_action(gen: str, word: tuple, left: bool = False) -> TensorMorphism:
    """Action of a generator on a tensor word via the iterated coproduct.

    E(a (x) b) = Ea (x) Kb + a (x) Eb,  F(a (x) b) = Fa (x) b + K^-1 a (x) Fb,
    K(a (x) b) = Ka (x) Kb.  The default peels factors off the right end;
    ``left=True`` peels them off the left (used to test coassociativity).
    """
    word = tuple(word)
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}")
    if not word:
        return counit_action(gen)
    if len(word) == 1:
        return _single(word[0], gen)
    if left:
        a, b = word[:1], word[1:]
    else:
        a, b = word[:-1], word[-1:]

    def act(g, w):
        return coproduct_action(g, w, left)

    ident_a = TensorMorphism.identity(a)
    ident_b = TensorMorphism.identity(b)
    if gen == "E":
        return act("E", a).tensor(act("K", b)) + ident_a.tensor(act("E", b))
    if gen == "F":
        return act("F", a).tensor(ident_b) + act("K_inv", a).tensor(act("F", b))
    return act(gen, a).tensor(act(gen, b))


def _vv(table: dict) -> TensorMorphism:
    return TensorMorphism.from_signs((V, V), (V, V), table)


@lru_cache(maxsize=None)
def braiding() -> TensorMorphism:
    """The braiding on V (x) V.

    In the basis v1v1, v-1v1, v1v-1, v-1v-1 it is q^-1/2 times
    [[q,0,0,0],[0,q-q^-1,1,0],[0,1,0,0],[0,0,0,q]].
    """
    qm = Q_HALF ** -1
    return _vv({
        ((1, 1), (1, 1)): Q_HALF,
        ((-1, 1), (-1, 1)): qm * (Q - Q_INV),
        ((1, -1), (-1, 1)): qm,
        ((-1, 1), (1, -1)): qm,
        ((-1, -1), (-1, -1)): Q_HALF,
    })


@lru_cache(maxsize=None)
def braiding_inverse() -> TensorMorphism:
    qm = Q_HALF ** -1
    return _vv({
        ((1, 1), (1, 1)): qm,
        ((1, -1), (-1, 1)): Q_HALF,
        ((-1, 1), (1, -1)): Q_HALF,
        ((1, -1), (1, -1)): -Q_HALF * (Q - Q_INV),
        ((-1, -1), (-1, -1)): qm,
    })


def duality_iso(scale=ONE) -> tuple[TensorMorphism, TensorMorphism]:
    """The isomorphism f: V -> V^* (times ``scale``) and its inverse.

    f(v_1) = v^_-1 and f(v_-1) = -q^-1 v^_1.  ``scale`` must be a unit.
    """
    lam = LaurentQ.coerce(scale)
    lam_inv = lam.unit_inverse()
    f = TensorMorphism.from_signs((V,), (VD,), {((-1,), (1,)): lam, ((1,), (-1,)): -lam * Q_INV})
    f_inv = TensorMorphism.from_signs((VD,), (V,), {((1,), (-1,)): lam_inv, ((-1,), (1,)): -lam_inv * Q})
    return f, f_inv


def flip(a: str, b: str) -> TensorMorphism:
    """Plain swap of tensor factors ``a (x) b -> b (x) a``."""
    return TensorMorphism.from_function((a, b), (b, a), lambda s: [((s[1], s[0]), ONE)])


class RibbonData:
    """Ribbon element and grouplike element of one flavor, as actions on each V_n."""

    def __init__(self, flavor: str):
        self.flavor = normalize_flavor(flavor)

    def _sign(self, n: int) -> int:
        return -1 if self.flavor == "half_twist" and n % 2 else 1

    def ribbon_scalar(self, n: int) -> LaurentQ:
        """q^(-n^2/2 - n), with an extra (-1)^n for the half-twist flavor."""
        return LaurentQ({-(2 * n * n + 4 * n): self._sign(n)})

    def grouplike(self, n: int) -> Matrix:
        sign = self._sign(n)
        return Matrix.diag([LaurentQ({4 * (n - 2 * j): sign}) for j in range(n + 1)])

    def grouplike_v(self) -> TensorMorphism:
        return TensorMorphism((V,), (V,), self.grouplike(1))

    def __repr__(self):
        return f"RibbonData({self.flavor!r})"


def ribbon_data(flavor: str) -> RibbonData:
    return RibbonData(flavor)


class StructureMaps(NamedTuple):
    ev: TensorMorphism     # V* (x) V -> 1
    coev: TensorMorphism   # 1 -> V (x) V*
    qtr: TensorMorphism    # V (x) V* -> 1
    coqtr: TensorMorphism  # 1 -> V* (x) V


@lru_cache(maxsize=None)
def structure_maps(flavor: str) -> StructureMaps:
    """Evaluation, coevaluation, quantum trace and co-quantum trace.

    ev(f (x) v) = f(v); coev(1) = sum e_i (x) e^i;
    qtr(v (x) f) = f(g v); coqtr(1) = sum e^i (x) g^-1 e_i.
    """
    g = ribbon_data(flavor).grouplike(1)
    gdiag = {1: g[(0, 0)], -1: g[(1, 1)]}
    ev = TensorMorphism.from_signs((VD, V), (), {((), (s, s)): ONE for s in (1, -1)})
    coev = TensorMorphism.from_signs((), (V, VD), {((s, s), ()): ONE for s in (1, -1)})
    qtr = TensorMorphism.from_signs((V, VD), (), {((), (s, s)): gdiag[s] for s in (1, -1)})
    coqtr = TensorMorphism.from_signs((), (VD, V), {((s, s), ()): gdiag[s].unit_inverse() for s in (1, -1)})
    return StructureMaps(ev, coev, qtr, coqtr)
