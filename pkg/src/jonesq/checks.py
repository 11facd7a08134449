"""Verification suites behind the ``check`` command.

Every check is an exact equality; a result records its name, outcome and a
short detail string for failures.
"""

from __future__ import annotations

import random
from typing import Iterable, NamedTuple

from .functor import EvalConfig, eval_directed, eval_undirected, identity_suite
from .halftwist import VARIANTS, clebsch_gordan, kr_factorization_check, verify_ribbon_square
from .laurent import quantum_integer
from .linalg import TensorMorphism
from .qrep import braiding, braiding_inverse, coproduct_action, dual_rep, duality_iso, rep, structure_maps
from .skein import kauffman_bracket
from .tangle import (
    MOVES,
    MoveError,
    Orientation,
    apply_move_oriented,
    components,
    prepare_move,
    random_diagram,
    writhe,
)

__all__ = [
    "CheckResult",
    "is_intertwiner",
    "representation_checks",
    "halftwist_checks",
    "randomized_checks",
    "run_all",
]

N_MAX = 8


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


def is_intertwiner(m: TensorMorphism, gens: Iterable[str] = ("E", "F", "K", "K_inv")) -> bool:
    """Does ``m`` commute with the action of every listed generator?"""
    return all(
        m @ coproduct_action(g, m.domain) == coproduct_action(g, m.codomain) @ m for g in gens
    )


def representation_checks(n_max: int = N_MAX) -> list[CheckResult]:
    out = []
    for n in range(n_max + 1):
        for r, label in ((rep(n), "V"), (dual_rep(n), "V*")):
            rel = r.relations()
            bad = [k for k, ok in rel.items() if not ok]
            out.append(CheckResult(f"relations on {label}_{n}", not bad, ", ".join(bad)))
    f, f_inv = duality_iso()
    maps = {"f": f, "f^-1": f_inv, "sigma": braiding(), "sigma^-1": braiding_inverse()}
    for flavor in ("standard", "half_twist"):
        for name, m in structure_maps(flavor)._asdict().items():
            maps[f"{name} ({flavor})"] = m
    for name, m in maps.items():
        out.append(CheckResult(f"{name} intertwines", is_intertwiner(m)))
    bad = [n for n in range(0, 17) if quantum_integer(n).at_one() != n]
    out.append(CheckResult("[n] at q=1 equals n", not bad, f"fails for {bad}" if bad else ""))
    return out


def halftwist_checks(n_max: int = N_MAX) -> list[CheckResult]:
    out = []
    for variant in VARIANTS:
        bad = [n for n, ok in verify_ribbon_square(variant, n_max) if not ok]
        out.append(CheckResult(f"{variant}^2 ribbon square, n <= {n_max}", not bad, f"fails for n={bad}" if bad else ""))
        out.append(CheckResult(f"sigma factorises through {variant}", kr_factorization_check(variant)))
    cg = clebsch_gordan()
    for gen in ("E", "F", "K"):
        m = coproduct_action(gen, ("V", "V")).matrix
        out.append(CheckResult(f"CG block-diagonalises {gen}", cg.conjugate_scaled(m) == cg.block(gen).scale(cg.det)))
    return out


def _parity(k: int) -> int:
    return 1 if k % 2 == 0 else -1


def _sample_orientations(n: int, rng: random.Random, k: int) -> list[Orientation]:
    if n <= 2:
        return Orientation.all(n)
    return [Orientation(tuple(rng.choice((1, -1)) for _ in range(n))) for _ in range(k)]


def randomized_checks(
    seed: int = 0,
    cases: int = 50,
    width: int = 10,
    crossings: int = 6,
) -> list[CheckResult]:
    """Engine agreement, the sign rule and move invariance on random diagrams."""
    rng = random.Random(seed)
    qs, qt = EvalConfig("directed", "standard"), EvalConfig("directed", "half_twist")
    failures = {"engines": [], "sign": [], "moves": []}
    moves_done = 0
    for i in range(cases):
        d = random_diagram(width, crossings, seed=rng.randrange(2**32))
        n = components(d).count
        k = kauffman_bracket(d)
        if eval_undirected(d) != k:
            failures["engines"].append(i)
        for o in _sample_orientations(n, rng, 4):
            if eval_directed(d, o, qt) != k:
                failures["engines"].append(i)
            if eval_directed(d, o, qs) != _parity(writhe(d, o) + n) * k:
                failures["sign"].append(i)
        move = MOVES[i % len(MOVES)]
        try:
            base, site = prepare_move(d, move, rng)
        except MoveError:
            continue
        o = Orientation(tuple(rng.choice((1, -1)) for _ in range(components(base).count)))
        moved, o2 = apply_move_oriented(base, o, move, site)
        before = (kauffman_bracket(base), eval_undirected(base), eval_directed(base, o, qs), writhe(base, o))
        after = (kauffman_bracket(moved), eval_undirected(moved), eval_directed(moved, o2, qs), writhe(moved, o2))
        moves_done += 1
        if before != after:
            failures["moves"].append(f"{i}:{move}")

    def res(name, key):
        bad = sorted(set(failures[key]), key=str)
        return CheckResult(name, not bad, f"cases {bad}" if bad else "")

    return [
        res(f"functor values = bracket on {cases} random diagrams", "engines"),
        res(f"standard ribbon value = (-1)^(w+#L) bracket on {cases} random diagrams", "sign"),
        res(f"invariance under {moves_done} random moves", "moves"),
    ]


def run_all(seed: int = 0, cases: int = 50) -> list[CheckResult]:
    out = [CheckResult(r.name, r.passed, r.detail) for r in identity_suite()]
    out += representation_checks()
    out += halftwist_checks()
    out += randomized_checks(seed, cases)
    return out
