"""Named example diagrams."""

from __future__ import annotations

from typing import Callable

from .tangle import SlicedDiagram, braid_closure, diagram, mirror, validate

__all__ = ["BUILTINS", "builtin", "builtin_names"]


def _plat(cross: str, n: int) -> SlicedDiagram:
    # two nested cups, n crossings on the middle pair, two caps
    return diagram("u u", *([f"| {cross} |"] * n), "n n")


BUILTINS: dict[str, Callable[[], SlicedDiagram]] = {
    "empty": lambda: SlicedDiagram((), 0),
    "unknot": lambda: diagram("u", "n"),
    "unknot_tw+": lambda: diagram("u", "t+ |", "n"),
    "unknot_tw-": lambda: diagram("u", "t- |", "n"),
    "two_circles": lambda: diagram("u u", "n n"),
    "hopf+": lambda: _plat("x+", 2),
    "hopf-": lambda: _plat("x-", 2),
    "trefoil_r": lambda: _plat("x+", 3),
    "trefoil_l": lambda: mirror(_plat("x+", 3)),
    "figure8": lambda: braid_closure([1, -2, 1, -2], 3),
}


def builtin_names() -> list[str]:
    return list(BUILTINS)


def builtin(name: str) -> SlicedDiagram:
    """Look up a named diagram; unknown names raise KeyError listing the choices."""
    try:
        make = BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; available: {', '.join(BUILTINS)}") from None
    return validate(make())
