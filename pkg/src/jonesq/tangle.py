"""Sliced (Morse-position) framed tangle diagrams.

A diagram is a bottom-to-top sequence of slices; each slice is a
left-to-right row of elementary pieces.  The strand positions between two
slices are the *points* of the diagram, addressed as ``(level, position)``
where level 0 is the bottom boundary.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Piece",
    "SlicedDiagram",
    "Orientation",
    "DiagramError",
    "DiagramParseError",
    "MoveError",
    "diagram",
    "validate",
    "compose",
    "tensor",
    "components",
    "point_directions",
    "crossing_signs",
    "writhe",
    "reverse",
    "mirror",
    "elementary",
    "insert_slices",
    "parse_diagram",
    "format_diagram",
    "random_diagram",
    "move_sites",
    "apply_move",
    "apply_move_oriented",
    "prepare_move",
    "braid_closure",
    "MOVES",
]


class Piece(enum.Enum):
    ID = ("|", 1, 1)
    CUP = ("u", 0, 2)
    CAP = ("n", 2, 0)
    CROSS_POS = ("x+", 2, 2)  # SW-NE strand over
    CROSS_NEG = ("x-", 2, 2)  # SW-NE strand under
    TWIST_POS = ("t+", 1, 1)
    TWIST_NEG = ("t-", 1, 1)

    def __init__(self, token, n_in, n_out):
        self.token = token
        self.n_in = n_in
        self.n_out = n_out

    @property
    def is_crossing(self) -> bool:
        return self in (Piece.CROSS_POS, Piece.CROSS_NEG)

    @property
    def is_twist(self) -> bool:
        return self in (Piece.TWIST_POS, Piece.TWIST_NEG)

    @property
    def mirrored(self) -> "Piece":
        return _MIRROR.get(self, self)

    @classmethod
    def from_token(cls, token: str) -> "Piece":
        return _BY_TOKEN[token]


_BY_TOKEN = {p.token: p for p in Piece}
_MIRROR = {
    Piece.CROSS_POS: Piece.CROSS_NEG,
    Piece.CROSS_NEG: Piece.CROSS_POS,
    Piece.TWIST_POS: Piece.TWIST_NEG,
    Piece.TWIST_NEG: Piece.TWIST_POS,
}


class DiagramError(ValueError):
    """Structurally invalid diagram, or an operation on the wrong kind of diagram."""


class DiagramParseError(DiagramError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MoveError(ValueError):
    """The requested move does not apply at the requested site."""


Slice = tuple  # tuple[Piece, ...]


def _slice_in(s: Sequence[Piece]) -> int:
    return sum(p.n_in for p in s)


def _slice_out(s: Sequence[Piece]) -> int:
    return sum(p.n_out for p in s)


@dataclass(frozen=True)
class SlicedDiagram:
    """Immutable sliced diagram.

    ``bottom_width`` only matters when ``slices`` is empty (an identity
    tangle); otherwise it must equal the input count of the first slice.
    """

    slices: tuple = ()
    bottom_width: int = 0

    @property
    def top_width(self) -> int:
        return _slice_out(self.slices[-1]) if self.slices else self.bottom_width

    @property
    def widths(self) -> list[int]:
        """Width at each level, bottom (level 0) to top."""
        return [self.bottom_width] + [_slice_out(s) for s in self.slices]

    @property
    def is_closed(self) -> bool:
        return self.bottom_width == 0 and self.top_width == 0

    def pieces(self) -> Iterator[tuple[int, int, int, Piece]]:
        """Yield ``(slice_index, in_offset, out_offset, piece)`` for every piece."""
        for k, s in enumerate(self.slices):
            a = b = 0
            for p in s:
                yield k, a, b, p
                a += p.n_in
                b += p.n_out

    def count(self, *kinds: Piece) -> int:
        return sum(1 for s in self.slices for p in s if p in kinds)

    @property
    def n_crossings(self) -> int:
        return self.count(Piece.CROSS_POS, Piece.CROSS_NEG)

    def __len__(self):
        return len(self.slices)

    def __str__(self):
        return format_diagram(self)


def diagram(*rows: Iterable, bottom_width: int | None = None) -> SlicedDiagram:
    """Build a diagram from rows of pieces or DSL tokens, bottom row first."""
    slices = tuple(
        tuple(p if isinstance(p, Piece) else Piece.from_token(p) for p in (r.split() if isinstance(r, str) else r))
        for r in rows
    )
    if bottom_width is None:
        bottom_width = _slice_in(slices[0]) if slices else 0
    return SlicedDiagram(slices, bottom_width)


def validate(d: SlicedDiagram) -> SlicedDiagram:
    """Return ``d`` unchanged if arities match, else raise :class:`DiagramError`."""
    width = d.bottom_width
    for k, s in enumerate(d.slices):
        n_in = _slice_in(s)
        if n_in != width:
            raise DiagramError(f"slice {k}: expected {width} inputs, got {n_in}")
        width = _slice_out(s)
    return d


def _require_closed(d: SlicedDiagram) -> None:
    validate(d)
    if not d.is_closed:
        raise DiagramError(f"diagram is not closed (bottom width {d.bottom_width}, top width {d.top_width})")


def compose(lower: SlicedDiagram, upper: SlicedDiagram) -> SlicedDiagram:
    """Stack ``upper`` on top of ``lower``."""
    if lower.top_width != upper.bottom_width:
        raise DiagramError(f"cannot stack: lower top width {lower.top_width} != upper bottom width {upper.bottom_width}")
    return SlicedDiagram(lower.slices + upper.slices, lower.bottom_width)


def tensor(left: SlicedDiagram, right: SlicedDiagram) -> SlicedDiagram:
    """Place diagrams side by side, padding the shorter one with identity slices."""
    n = max(len(left), len(right))

    def padded(d):
        ident = (Piece.ID,) * d.top_width
        return list(d.slices) + [ident] * (n - len(d))

    slices = tuple(a + b for a, b in zip(padded(left), padded(right)))
    return SlicedDiagram(slices, left.bottom_width + right.bottom_width)


def mirror(d: SlicedDiagram) -> SlicedDiagram:
    """Swap every crossing and every full twist for its mirror image."""
    return SlicedDiagram(tuple(tuple(p.mirrored for p in s) for s in d.slices), d.bottom_width)


def elementary(d: SlicedDiagram) -> SlicedDiagram:
    """Split slices so each holds exactly one non-identity piece."""
    out = []
    for s in d.slices:
        for j, p in enumerate(s):
            if p is Piece.ID:
                continue
            left = _slice_out(s[:j])
            right = _slice_in(s[j + 1:])
            out.append((Piece.ID,) * left + (p,) + (Piece.ID,) * right)
    return SlicedDiagram(tuple(out), d.bottom_width)


def insert_slices(d: SlicedDiagram, level: int, new: Sequence[Sequence[Piece]]) -> SlicedDiagram:
    """Insert ``new`` slices at ``level`` (before slice index ``level``)."""
    block = SlicedDiagram(tuple(tuple(s) for s in new), d.widths[level])
    validate(block)
    if block.top_width != d.widths[level]:
        raise DiagramError("inserted block must preserve width")
    return SlicedDiagram(d.slices[:level] + block.slices + d.slices[level:], d.bottom_width)


# ---------------------------------------------------------------------------
# connectivity


def _links(d: SlicedDiagram):
    """Per-point neighbour above and below (``None`` at a free boundary end)."""
    up: dict = {}
    down: dict = {}
    for k, a, b, p in d.pieces():
        if p is Piece.CUP:
            down[(k + 1, b)] = (k + 1, b + 1)
            down[(k + 1, b + 1)] = (k + 1, b)
        elif p is Piece.CAP:
            up[(k, a)] = (k, a + 1)
            up[(k, a + 1)] = (k, a)
        elif p.is_crossing:
            up[(k, a)], down[(k + 1, b + 1)] = (k + 1, b + 1), (k, a)
            up[(k, a + 1)], down[(k + 1, b)] = (k + 1, b), (k, a + 1)
        else:
            up[(k, a)], down[(k + 1, b)] = (k + 1, b), (k, a)
    return up, down


def _all_points(d: SlicedDiagram) -> list:
    return [(lvl, p) for lvl, w in enumerate(d.widths) for p in range(w)]


def _trace(d: SlicedDiagram):
    """Walk every component from its lowest-leftmost point, heading up.

    Returns ``(component_of, direction_of)`` keyed by point, direction being
    +1 (moving up) or -1 relative to each component's canonical traversal.
    """
    up, down = _links(d)
    comp: dict = {}
    direction: dict = {}
    n = 0
    for start in _all_points(d):
        if start in comp:
            continue
        pt, heading = start, 1
        while pt not in comp:
            comp[pt] = n
            direction[pt] = heading
            nxt = up.get(pt) if heading == 1 else down.get(pt)
            if nxt is None:
                break
            if nxt[0] == pt[0]:
                heading = -heading
            pt = nxt
        n += 1
    return comp, direction, n


@dataclass(frozen=True)
class Components:
    count: int
    component_of: dict  # point -> component index

    def points(self, c: int) -> list:
        return sorted(pt for pt, k in self.component_of.items() if k == c)


def components(d: SlicedDiagram) -> Components:
    """Partition the points of a closed diagram into link components.

    Components are numbered by the order of their lowest-leftmost point.
    """
    _require_closed(d)
    comp, _, n = _trace(d)
    return Components(n, comp)


@dataclass(frozen=True)
class Orientation:
    """One sign per component; +1 follows the canonical traversal."""

    signs: tuple

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("orientation signs must be +1 or -1")

    @classmethod
    def positive(cls, n: int) -> "Orientation":
        return cls((1,) * n)

    @classmethod
    def all(cls, n: int) -> list["Orientation"]:
        return [cls(tuple(1 - 2 * ((m >> i) & 1) for i in range(n))) for m in range(1 << n)]

    def __len__(self):
        return len(self.signs)


def reverse(o: Orientation, which: Iterable[int] | None = None) -> Orientation:
    """Flip the listed components (all of them when ``which`` is None)."""
    idx = range(len(o.signs)) if which is None else list(which)
    flip = set()
    for c in idx:
        if not 0 <= c < len(o.signs):
            raise IndexError(f"unknown component {c}")
        flip.add(c)
    return Orientation(tuple(-s if i in flip else s for i, s in enumerate(o.signs)))


def point_directions(d: SlicedDiagram, o: Orientation) -> dict:
    """Direction (+1 up, -1 down) of the strand at every point."""
    _require_closed(d)
    comp, direction, n = _trace(d)
    if len(o.signs) != n:
        raise DiagramError(f"orientation has {len(o.signs)} signs, diagram has {n} components")
    return {pt: direction[pt] * o.signs[comp[pt]] for pt in comp}


def _det_sign(over, under) -> int:
    det = over[0] * under[1] - over[1] * under[0]
    return 1 if det > 0 else -1


def crossing_signs(d: SlicedDiagram, o: Orientation) -> list[int]:
    """Sign of every crossing, in slice order."""
    dirs = point_directions(d, o)
    signs = []
    for k, a, _, p in d.pieces():
        if not p.is_crossing:
            continue
        sw_ne = (1, 1) if dirs[(k, a)] == 1 else (-1, -1)
        se_nw = (-1, 1) if dirs[(k, a + 1)] == 1 else (1, -1)
        over, under = (sw_ne, se_nw) if p is Piece.CROSS_POS else (se_nw, sw_ne)
        signs.append(_det_sign(over, under))
    return signs


def writhe(d: SlicedDiagram, o: Orientation) -> int:
    """Signed crossings plus signed full twists."""
    twists = d.count(Piece.TWIST_POS) - d.count(Piece.TWIST_NEG)
    return sum(crossing_signs(d, o)) + twists


# ---------------------------------------------------------------------------
# text form


def parse_diagram(text: str) -> SlicedDiagram:
    """Parse the line-per-slice DSL (bottom slice first, ``#`` comments)."""
    rows = []
    prev_out = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        row = []
        col = 0
        for tok in body.split():
            col = body.index(tok, col)
            if tok not in _BY_TOKEN:
                raise DiagramParseError(f"unknown token {tok!r}", lineno, col + 1)
            row.append(_BY_TOKEN[tok])
            col += len(tok)
        if row:
            if prev_out is not None and _slice_in(row) != prev_out:
                raise DiagramParseError(
                    f"width mismatch: slice expects {_slice_in(row)} inputs, previous slice has {prev_out} outputs",
                    lineno,
                    1,
                )
            prev_out = _slice_out(row)
            rows.append(tuple(row))
    return validate(diagram(*rows))


def format_diagram(d: SlicedDiagram) -> str:
    return "\n".join(" ".join(p.token for p in s) for s in d.slices)


# ---------------------------------------------------------------------------
# random generation and Reidemeister-type moves


def random_diagram(
    width_budget: int = 8,
    crossing_budget: int = 4,
    seed: int | None = None,
    twist_prob: float = 0.05,
) -> SlicedDiagram:
    """Random closed diagram with at most the given width and crossing count."""
    if width_budget < 2:
        raise ValueError("width_budget must be at least 2")
    rng = random.Random(seed)
    slices = []
    width = 0
    crossings = 0
    steps = 0
    while not slices or width > 0 or (crossings < crossing_budget and steps < 8 * (crossing_budget + 1)):
        steps += 1
        closing = crossings >= crossing_budget or steps >= 8 * (crossing_budget + 1)
        row = []
        out = 0
        i = 0
        while True:
            room = out + (width - i) + 2 <= width_budget
            p_cup = 0.9 if width < 2 else 0.15
            if not closing and room and rng.random() < p_cup:
                row.append(Piece.CUP)
                out += 2
            if i >= width:
                break
            r = rng.random()
            if i + 1 < width and not closing and r < 0.4:
                row.append(rng.choice((Piece.CROSS_POS, Piece.CROSS_NEG)))
                crossings += 1
                i += 2
                out += 2
            elif i + 1 < width and r < (0.7 if closing else 0.5):
                row.append(Piece.CAP)
                i += 2
            elif r < 0.5 + twist_prob and rng.random() < twist_prob * 4:
                row.append(rng.choice((Piece.TWIST_POS, Piece.TWIST_NEG)))
                i += 1
                out += 1
            else:
                row.append(Piece.ID)
                i += 1
                out += 1
            if crossings >= crossing_budget:
                closing = True
        if all(p is Piece.ID for p in row):
            continue
        slices.append(tuple(row))
        width = out
    return validate(SlicedDiagram(tuple(slices), 0))


MOVES = ("R2", "R3", "FramedR1", "SlideCupCap")


def _single(s: Sequence[Piece]):
    """``(piece, input_offset)`` if the slice has exactly one non-identity piece."""
    found = None
    a = 0
    for p in s:
        if p is not Piece.ID:
            if found is not None:
                return None
            found = (p, a)
        a += p.n_in
    return found


def _row(width_in: int, pos: int, piece: Piece) -> tuple:
    return (Piece.ID,) * pos + (piece,) + (Piece.ID,) * (width_in - pos - piece.n_in)


def _cross(sign: int) -> Piece:
    return Piece.CROSS_POS if sign > 0 else Piece.CROSS_NEG


def _sign(p: Piece) -> int:
    return 1 if p in (Piece.CROSS_POS, Piece.TWIST_POS) else -1


def _r3_valid(a: int, b: int, c: int) -> bool:
    # the three strands must have a consistent over/under height order
    return not (a == c and b == -a)


def move_sites(d: SlicedDiagram, move: str) -> list:
    """Every site at which ``apply_move(d, move, site)`` succeeds."""
    validate(d)
    widths = d.widths
    sites = []
    if move == "R2":
        for lvl, w in enumerate(widths):
            for pos in range(w - 1):
                sites += [(lvl, pos, 1), (lvl, pos, -1)]
    elif move == "R3":
        for i in range(len(d) - 2):
            trio = [_single(d.slices[i + j]) for j in range(3)]
            if any(t is None or not t[0].is_crossing for t in trio):
                continue
            (p0, x0), (p1, x1), (p2, x2) = trio
            if x0 == x2 and abs(x1 - x0) == 1 and _r3_valid(_sign(p0), _sign(p1), _sign(p2)):
                sites.append(("rewrite", i))
    elif move == "FramedR1":
        for k, a, _, p in d.pieces():
            if p.is_twist:
                sites += [("expand", k, a, "right"), ("expand", k, a, "left")]
        for i in range(len(d) - 2):
            if _curl_at(d, i) is not None:
                sites.append(("contract", i))
    elif move == "SlideCupCap":
        for lvl, w in enumerate(widths):
            for pos in range(w):
                sites += [("insert", lvl, pos, "right"), ("insert", lvl, pos, "left")]
        for i in range(len(d) - 1):
            if _zigzag_at(d, i) is not None:
                sites.append(("straighten", i))
    else:
        raise MoveError(f"unknown move {move!r}; expected one of {MOVES}")
    return sites


def _curl_at(d: SlicedDiagram, i: int):
    """``(pos, twist_piece)`` if slices i..i+2 form a removable curl."""
    trio = [_single(d.slices[i + j]) for j in range(3)]
    if any(t is None for t in trio):
        return None
    (p0, _), (p1, x1), (p2, x2) = trio
    if p0 is not Piece.CUP or not p1.is_crossing or p2 is not Piece.CAP:
        return None
    cup_at = _cup_pos(d.slices[i])
    twist = Piece.TWIST_POS if p1 is Piece.CROSS_POS else Piece.TWIST_NEG
    if cup_at == x1 + 1 and x2 == x1 + 1:  # cup right of the strand
        return x1, twist
    if cup_at == x1 - 1 and x2 == x1 - 1:  # cup left of the strand
        return x2, twist
    return None


def _cup_pos(s: Sequence[Piece]) -> int:
    b = 0
    for p in s:
        if p is Piece.CUP:
            return b
        b += p.n_out
    raise AssertionError("no cup in slice")


def _zigzag_at(d: SlicedDiagram, i: int):
    pair = [_single(d.slices[i + j]) for j in range(2)]
    if any(t is None for t in pair):
        return None
    (p0, _), (p1, x1) = pair
    if p0 is not Piece.CUP or p1 is not Piece.CAP:
        return None
    c = _cup_pos(d.slices[i])
    if x1 in (c - 1, c + 1):
        return x1
    return None


def _apply(d: SlicedDiagram, move: str, site) -> tuple[SlicedDiagram, int, int, int]:
    """Apply a move; also return the rewritten region ``(lo, old_len, new_len)``."""
    validate(d)
    if site not in move_sites(d, move):
        raise MoveError(f"{move} does not apply at site {site!r}")
    widths = d.widths
    if move == "R2":
        lvl, pos, sign = site
        w = widths[lvl]
        new = [_row(w, pos, _cross(sign)), _row(w, pos, _cross(-sign))]
        return insert_slices(d, lvl, new), lvl, 0, 2
    if move == "R3":
        _, i = site
        w = widths[i]
        (p0, x0), (p1, x1), (p2, _) = [_single(d.slices[i + j]) for j in range(3)]
        new = (_row(w, x1, p2), _row(w, x0, p1), _row(w, x1, p0))
        return SlicedDiagram(d.slices[:i] + new + d.slices[i + 3:], d.bottom_width), i, 3, 3
    if move == "FramedR1":
        if site[0] == "contract":
            i = site[1]
            pos, twist = _curl_at(d, i)
            new = (_row(widths[i], pos, twist),)
            return SlicedDiagram(d.slices[:i] + new + d.slices[i + 3:], d.bottom_width), i, 3, 1
        _, k, a, side = site
        s = d.slices[k]
        twist = _single_piece_at(s, a)
        cross = Piece.CROSS_POS if twist is Piece.TWIST_POS else Piece.CROSS_NEG
        w = widths[k]
        stripped = _replace_piece_at(s, a, Piece.ID)
        if side == "right":
            curl = [_row(w, a + 1, Piece.CUP), _row(w + 2, a, cross), _row(w + 2, a + 1, Piece.CAP)]
        else:
            curl = [_row(w, a, Piece.CUP), _row(w + 2, a + 1, cross), _row(w + 2, a, Piece.CAP)]
        new = tuple(curl) + ((stripped,) if any(p is not Piece.ID for p in stripped) else ())
        return SlicedDiagram(d.slices[:k] + new + d.slices[k + 1:], d.bottom_width), k, 1, len(new)
    if move == "SlideCupCap":
        if site[0] == "straighten":
            i = site[1]
            return SlicedDiagram(d.slices[:i] + d.slices[i + 2:], d.bottom_width), i, 2, 0
        _, lvl, pos, side = site
        w = widths[lvl]
        if side == "right":
            new = [_row(w, pos + 1, Piece.CUP), _row(w + 2, pos, Piece.CAP)]
        else:
            new = [_row(w, pos, Piece.CUP), _row(w + 2, pos + 1, Piece.CAP)]
        return insert_slices(d, lvl, new), lvl, 0, 2
    raise MoveError(f"unknown move {move!r}")


def _single_piece_at(s: Sequence[Piece], a: int) -> Piece:
    off = 0
    for p in s:
        if off == a and p.n_in:
            return p
        off += p.n_in
    raise MoveError(f"no piece with input offset {a}")


def _replace_piece_at(s: Sequence[Piece], a: int, new: Piece) -> tuple:
    out = []
    off = 0
    done = False
    for p in s:
        if not done and off == a and p.n_in:
            out.append(new)
            done = True
        else:
            out.append(p)
        off += p.n_in
    return tuple(out)


def apply_move(d: SlicedDiagram, move: str, site=None, rng: random.Random | None = None) -> SlicedDiagram:
    """Return a diagram isotopic to ``d`` (as framed tangles) via one local move.

    * ``R2``: insert a crossing followed by its inverse; site ``(level, pos, sign)``.
    * ``R3``: rewrite a braid triple ``s_i s_j s_i -> s_j s_i s_j``; site ``("rewrite", slice)``.
    * ``FramedR1``: trade a full twist for a curl or back; sites
      ``("expand", slice, offset, "left"|"right")`` and ``("contract", slice)``.
    * ``SlideCupCap``: insert or straighten a zig-zag; sites
      ``("insert", level, pos, side)`` and ``("straighten", slice)``.

    With ``site=None`` a site is drawn from ``move_sites`` using ``rng``.
    """
    return _apply(d, move, _pick(d, move, site, rng))[0]


def _pick(d, move, site, rng):
    if site is not None:
        return site
    sites = move_sites(d, move)
    if not sites:
        raise MoveError(f"{move} has no applicable site")
    return (rng or random.Random()).choice(sites)


def apply_move_oriented(
    d: SlicedDiagram, o: Orientation, move: str, site=None, rng: random.Random | None = None
) -> tuple[SlicedDiagram, Orientation]:
    """Like :func:`apply_move`, also transporting the orientation to the new diagram."""
    site = _pick(d, move, site, rng)
    new, lo, old_len, new_len = _apply(d, move, site)
    dirs = point_directions(d, o)
    comp, direction, n = _trace(new)
    signs: list = [None] * n
    shift = new_len - old_len
    for (lvl, pos), dd in dirs.items():
        if lvl <= lo:
            target = (lvl, pos)
        elif lvl >= lo + old_len:
            target = (lvl + shift, pos)
        else:
            continue
        c = comp[target]
        if signs[c] is None:
            signs[c] = dd * direction[target]
    if any(s is None for s in signs):
        raise MoveError("could not transport orientation across the move")
    return new, Orientation(tuple(signs))


def prepare_move(d: SlicedDiagram, move: str, rng: random.Random) -> tuple[SlicedDiagram, object]:
    """Pick a site for ``move``, first planting the needed feature if ``d`` lacks one.

    R3 needs a braid triple and FramedR1 a twist or curl; when ``d`` has
    none, one is inserted at a random level (a different diagram, which is
    returned).  Returns ``(base, site)`` with ``apply_move(base, move, site)``
    valid.
    """
    validate(d)
    if move == "R3":
        sites = move_sites(d, "R3")
        if not sites or rng.random() < 0.5:
            levels = [lvl for lvl, w in enumerate(d.widths) if w >= 3]
            if not levels:
                raise MoveError("R3 needs a level of width at least 3")
            lvl = rng.choice(levels)
            w = d.widths[lvl]
            pos = rng.randrange(w - 2)
            while True:
                a, b, c = (rng.choice((1, -1)) for _ in range(3))
                if _r3_valid(a, b, c):
                    break
            first, second = (pos, pos + 1) if rng.random() < 0.5 else (pos + 1, pos)
            triple = [_row(w, first, _cross(a)), _row(w, second, _cross(b)), _row(w, first, _cross(c))]
            d = insert_slices(d, lvl, triple)
            return d, ("rewrite", lvl)
        return d, rng.choice(sites)
    if move == "FramedR1":
        sites = move_sites(d, "FramedR1")
        if not sites:
            lvl = rng.randrange(len(d.widths))
            while d.widths[lvl] == 0:
                lvl = rng.randrange(len(d.widths))
            pos = rng.randrange(d.widths[lvl])
            twist = rng.choice((Piece.TWIST_POS, Piece.TWIST_NEG))
            d = insert_slices(d, lvl, [_row(d.widths[lvl], pos, twist)])
            sites = move_sites(d, "FramedR1")
        return d, rng.choice(sites)
    if move == "SlideCupCap":
        sites = move_sites(d, move)
        straighten = [s for s in sites if s[0] == "straighten"]
        if straighten and rng.random() < 0.5:
            return d, rng.choice(straighten)
        return d, rng.choice(sites)
    return d, rng.choice(move_sites(d, move))


def braid_closure(word: Sequence[int], n_strands: int) -> SlicedDiagram:
    """Closure of a braid word; generator ``+i`` / ``-i`` crosses strands i-1, i.

    Strands sit at positions 0..n-1 with their return arcs nested to the right.
    """
    slices = []
    for k in range(n_strands):
        slices.append((Piece.ID,) * k + (Piece.CUP,) + (Piece.ID,) * k)
    w = 2 * n_strands
    for g in word:
        i = abs(g)
        if not 1 <= i < n_strands:
            raise DiagramError(f"generator {g} out of range for {n_strands} strands")
        slices.append(_row(w, i - 1, _cross(1 if g > 0 else -1)))
    for k in reversed(range(n_strands)):
        slices.append((Piece.ID,) * k + (Piece.CAP,) + (Piece.ID,) * k)
    return validate(SlicedDiagram(tuple(slices), 0))
