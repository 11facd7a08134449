"""Collected invariants of one closed diagram, with text and JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .functor import EvalConfig, eval_directed, eval_undirected
from .laurent import LaurentQ, unit_pow
from .skein import kauffman_bracket
from .tangle import Orientation, SlicedDiagram, _require_closed, components, writhe

__all__ = ["OrientationEntry", "InvariantReport", "build_report", "orientation_label", "MAX_ENUMERATED"]

# links with more components than this get only the supplied orientation
MAX_ENUMERATED = 4


def orientation_label(o: Orientation) -> str:
    return ",".join(f"c{i + 1}={'+' if s > 0 else '-'}" for i, s in enumerate(o.signs)) or "-"


@dataclass(frozen=True)
class OrientationEntry:
    orientation: Orientation
    writhe: int
    jones: LaurentQ
    f_qs: LaurentQ
    f_qt: LaurentQ


@dataclass(frozen=True)
class InvariantReport:
    """Everything the engines say about a closed diagram."""

    source: str
    n_components: int
    n_crossings: int
    bracket: LaurentQ
    f_undirected: LaurentQ
    entries: tuple[OrientationEntry, ...]
    checks: tuple[tuple[str, bool], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "components": self.n_components,
            "crossings": self.n_crossings,
            "bracket": str(self.bracket),
            "F_undirected": str(self.f_undirected),
            "orientations": [
                {
                    "orientation": orientation_label(e.orientation),
                    "writhe": e.writhe,
                    "jones": str(e.jones),
                    "F_Qs": str(e.f_qs),
                    "F_Qt": str(e.f_qt),
                }
                for e in self.entries
            ],
            "checks": [{"name": n, "passed": ok} for n, ok in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [
            f"source: {d['source']}",
            f"components: {d['components']}",
            f"crossings: {d['crossings']}",
            f"bracket: {d['bracket']}",
            f"F_undirected: {d['F_undirected']}",
        ]
        for e in d["orientations"]:
            lines.append(f"orientation {e['orientation']}:")
            for key in ("writhe", "jones", "F_Qs", "F_Qt"):
                lines.append(f"  {key}: {e[key]}")
        lines.append("checks:")
        for c in d["checks"]:
            lines.append(f"  [{'PASS' if c['passed'] else 'FAIL'}] {c['name']}")
        return "\n".join(lines)


def _sign(n: int) -> int:
    return 1 if n % 2 == 0 else -1


def build_report(d: SlicedDiagram, source: str = "<diagram>", orientation: Orientation | None = None) -> InvariantReport:
    """Run every engine on ``d`` and cross-check the results.

    All orientations are enumerated when there are at most MAX_ENUMERATED
    components; otherwise only ``orientation`` (default all positive) is used.
    """
    _require_closed(d)
    n = components(d).count
    if orientation is not None:
        orients = [orientation]
    elif n <= MAX_ENUMERATED:
        orients = Orientation.all(n)
    else:
        orients = [Orientation.positive(n)]
    k = kauffman_bracket(d)
    f_und = eval_undirected(d)
    checks = [("F_undirected = bracket", f_und == k)]
    qs, qt = EvalConfig("directed", "standard"), EvalConfig("directed", "half_twist")
    entries = []
    for o in orients:
        w = writhe(d, o)
        j = unit_pow(-1, "3/2", -w) * k
        fs, ft = eval_directed(d, o, qs), eval_directed(d, o, qt)
        label = orientation_label(o)
        checks.append((f"F_Qt = bracket [{label}]", ft == k))
        checks.append((f"F_Qs = (-1)^(w+#L) bracket [{label}]", fs == k * _sign(w + n)))
        entries.append(OrientationEntry(o, w, j, fs, ft))
    return InvariantReport(source, n, d.n_crossings, k, f_und, tuple(entries), tuple(checks))
