"""Grape clusters on the hexagonal lattice and their linking forms.

A grape is a circle drawn at a hex-lattice position, implicitly framed
-2; a tangency between neighboring grapes is a full twist whose sign
comes from the slope class of the line of centers (see constants).
The linking form of a cluster is the symmetric integer matrix of
framings and tangency signs over a canonical cell order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .constants import GRAPE_FRAMING, NEIGHBOR_OFFSETS, twist_sign
from .intform import IntSymForm


class HexCell(NamedTuple):
    x: int
    y: int

    def neighbors(self) -> list["HexCell"]:
        return [HexCell(self.x + dx, self.y + dy) for dx, dy in NEIGHBOR_OFFSETS]

    def offset_to(self, other: "HexCell") -> tuple[int, int]:
        return (other.x - self.x, other.y - self.y)

    def is_adjacent(self, other: "HexCell") -> bool:
        return self.offset_to(other) in NEIGHBOR_OFFSETS

    def center(self) -> tuple[float, float]:
        """Geometric center in plane units (sqrt(3)/2 per row)."""
        return (self.x + self.y / 2.0, self.y * 0.8660254037844386)


class InvalidClusterError(ValueError):
    pass


def canonical_order(cells: Iterable[HexCell]) -> list[HexCell]:
    """The documented basis order: lexicographic on (y, x)."""
    return sorted(cells, key=lambda c: (c.y, c.x))


@dataclass(frozen=True)
class GrapeCluster:
    """A finite set of occupied hex cells with optional labels."""

    cells: frozenset[HexCell]
    labels: tuple[tuple[HexCell, str], ...] = field(default=())
    allow_disconnected: bool = False

    def __post_init__(self):
        if not isinstance(self.cells, frozenset):
            object.__setattr__(self, "cells", frozenset(HexCell(*c) for c in self.cells))
        if not self.allow_disconnected and len(self.cells) > 1 and not self.is_connected():
            raise InvalidClusterError("cluster is disconnected")

    @staticmethod
    def from_cells(cells: Iterable, labels: dict | None = None,
                   allow_disconnected: bool = False) -> "GrapeCluster":
        cs = frozenset(HexCell(int(x), int(y)) for x, y in cells)
        lab = tuple(sorted(((HexCell(*k), v) for k, v in (labels or {}).items()),
                           key=lambda kv: (kv[0].y, kv[0].x)))
        return GrapeCluster(cs, lab, allow_disconnected)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return HexCell(*cell) in self.cells

    def label_of(self, cell: HexCell) -> str:
        for c, name in self.labels:
            if c == cell:
                return name
        ordered = canonical_order(self.cells)
        return f"g{ordered.index(cell) + 1}"

    def ordered_cells(self) -> list[HexCell]:
        return canonical_order(self.cells)

    def is_connected(self) -> bool:
        if not self.cells:
            return True
        seen = set()
        stack = [next(iter(self.cells))]
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            for nb in c.neighbors():
                if nb in self.cells and nb not in seen:
                    stack.append(nb)
        return len(seen) == len(self.cells)

    def translated(self, dx: int, dy: int) -> "GrapeCluster":
        cells = frozenset(HexCell(c.x + dx, c.y + dy) for c in self.cells)
        labels = tuple((HexCell(c.x + dx, c.y + dy), v) for c, v in self.labels)
        return GrapeCluster(cells, labels, self.allow_disconnected)

    def canonical_translation(self) -> "GrapeCluster":
        """Translate so the (y, x)-least cell sits at the origin."""
        if not self.cells:
            return self
        base = min(self.cells, key=lambda c: (c.y, c.x))
        return self.translated(-base.x, -base.y)

    def canonical_key(self) -> tuple[tuple[int, int], ...]:
        if not self.cells:
            return ()
        base = min(self.cells, key=lambda c: (c.y, c.x))
        return tuple(sorted((c.x - base.x, c.y - base.y) for c in self.cells))

    # -- linking form ---------------------------------------------------------

    def linking_form(self) -> IntSymForm:
        """Framings on the diagonal, tangency twist signs off it."""
        ordered = canonical_order(self.cells)
        index = {c: i for i, c in enumerate(ordered)}
        n = len(ordered)
        rows = [[0] * n for _ in range(n)]
        for i, c in enumerate(ordered):
            rows[i][i] = GRAPE_FRAMING
            for off in NEIGHBOR_OFFSETS:
                nb = HexCell(c.x + off[0], c.y + off[1])
                j = index.get(nb)
                if j is not None:
                    rows[i][j] = twist_sign(off)
        return IntSymForm(rows)

    # -- serialization --------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: one `label x y` record per grape, sorted by (y, x)."""
        lines = []
        for c in self.ordered_cells():
            lines.append(f"{self.label_of(c)} {c.x} {c.y}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str, allow_disconnected: bool = False) -> "GrapeCluster":
        cells: list[HexCell] = []
        labels: dict[HexCell, str] = {}
        for ln_no, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise InvalidClusterError(f"line {ln_no}: expected `label x y`")
            name, xs, ys = parts
            try:
                cell = HexCell(int(xs), int(ys))
            except ValueError as e:
                raise InvalidClusterError(f"line {ln_no}: bad coordinates") from e
            if cell in labels:
                raise InvalidClusterError(f"line {ln_no}: duplicate cell {cell}")
            cells.append(cell)
            labels[cell] = name
        if not cells:
            raise InvalidClusterError("no grapes in cluster file")
        return GrapeCluster.from_cells(cells, labels, allow_disconnected)


def linking_form(cluster: GrapeCluster) -> IntSymForm:
    return cluster.linking_form()


# -- SVG rendering -------------------------------------------------------------

_SCALE = 40.0
_RADIUS = 19.0


def render_svg(cluster: GrapeCluster) -> str:
    """Deterministic vector drawing: one circle per grape, a +/- mark on
    every tangency, labels at circle centers."""
    ordered = cluster.ordered_cells()
    pts = {c: c.center() for c in ordered}
    xs = [p[0] for p in pts.values()]
    ys = [p[1] for p in pts.values()]
    pad = 1.0
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    width = (x1 - x0) * _SCALE
    height = (y1 - y0) * _SCALE

    def sx(v: float) -> str:
        return f"{(v - x0) * _SCALE:.2f}"

    def sy(v: float) -> str:
        # flip so increasing lattice y points up in the image
        return f"{(y1 - v) * _SCALE:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    for c in ordered:
        px, py = pts[c]
        out.append(f'<circle cx="{sx(px)}" cy="{sy(py)}" r="{_RADIUS:.1f}"/>')
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="11" text-anchor="middle">')
    for c in ordered:
        px, py = pts[c]
        out.append(f'<text x="{sx(px)}" y="{sy(py)}" dy="4">{cluster.label_of(c)}</text>')
    seen = set()
    for c in ordered:
        for off in NEIGHBOR_OFFSETS:
            nb = HexCell(c.x + off[0], c.y + off[1])
            if nb not in cluster.cells:
                continue
            key = frozenset((c, nb))
            if key in seen:
                continue
            seen.add(key)
            mx = (pts[c][0] + pts[nb][0]) / 2
            my = (pts[c][1] + pts[nb][1]) / 2
            mark = "+" if twist_sign(off) > 0 else "−"
            out.append(f'<text x="{sx(mx)}" y="{sy(my)}" dy="4" font-size="13">{mark}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
