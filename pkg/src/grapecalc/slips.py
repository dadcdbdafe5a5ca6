"""The slip move: transport an end grape of a straight string to the far end.

Legality of a slip from P0 along direction d over the maximal occupied
string P1..Pn (landing on the empty cell P_{n+1}):

  * every neighbor of P0 other than P1 and the common neighbors of
    (P0, P1) must be empty, and
  * every neighbor of P_{n+1} other than Pn and the common neighbors of
    (P_{n+1}, Pn) must be empty.

Grapes tangent to the string or sitting in the "triangle" cells at the
string ends do not block the move; the three rear cells at each end do.
This is the loosest reading of the end conditions under which, on every
cluster explored here, each slip preserves the linking form's exact
invariant bundle (determinant, rank, signature, parity), and the strict
all-neighbors-bare reading is rejected because it leaves the shipped
two-row cluster without any legal move, contradicting reversibility of
its seven-slip derivation from the eight-grape chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .constants import DIRECTION_BY_NAME, DIRECTION_NAMES, NEIGHBOR_OFFSETS
from .hexgrapes import GrapeCluster, HexCell


class NoGrapeError(ValueError):
    """Slip start cell is not occupied."""


class IllegalSlipError(ValueError):
    """Move violates a slip precondition; the message carries the reason."""


class SlipMove(NamedTuple):
    start: HexCell
    direction: tuple[int, int]
    length: int

    @property
    def target(self) -> HexCell:
        dx, dy = self.direction
        return HexCell(self.start.x + (self.length + 1) * dx,
                       self.start.y + (self.length + 1) * dy)

    def string_cells(self) -> list[HexCell]:
        dx, dy = self.direction
        return [HexCell(self.start.x + k * dx, self.start.y + k * dy)
                for k in range(1, self.length + 1)]

    def reversed_on_result(self) -> "SlipMove":
        dx, dy = self.direction
        return SlipMove(self.target, (-dx, -dy), self.length)

    def to_line(self) -> str:
        return (f"{self.start.x} {self.start.y} "
                f"{DIRECTION_NAMES[self.direction]} {self.length}")

    @staticmethod
    def from_line(line: str) -> "SlipMove":
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"expected `x y dir n`, got {line!r}")
        x, y, dname, n = parts
        if dname not in DIRECTION_BY_NAME:
            raise ValueError(f"unknown direction {dname!r}")
        return SlipMove(HexCell(int(x), int(y)), DIRECTION_BY_NAME[dname], int(n))


def _rear_cells(end: HexCell, inner: HexCell) -> list[HexCell]:
    """Neighbors of `end` other than `inner` and the two cells adjacent to
    both; these are the cells that must be vacant for a slip."""
    return [nb for nb in end.neighbors()
            if nb != inner and not nb.is_adjacent(inner)]


def is_legal(cluster: GrapeCluster, move: SlipMove) -> tuple[bool, str]:
    """Whether `move` may be applied, with the blocking reason if not."""
    cells = cluster.cells
    if move.start not in cells:
        raise NoGrapeError(f"no grape at {tuple(move.start)}")
    if move.direction not in NEIGHBOR_OFFSETS:
        return False, f"not a lattice direction: {move.direction}"
    if move.length < 1:
        return False, "string length must be at least 1"
    string = move.string_cells()
    for p in string:
        if p not in cells:
            return False, f"string cell {tuple(p)} is empty"
    target = move.target
    if target in cells:
        return False, f"string is not maximal: {tuple(target)} is occupied"
    p1 = string[0]
    pn = string[-1]
    for nb in _rear_cells(move.start, p1):
        if nb in cells:
            return False, f"rear cell {tuple(nb)} of the start grape is occupied"
    for nb in _rear_cells(target, pn):
        if nb in cells:
            return False, f"rear cell {tuple(nb)} of the landing cell is occupied"
    return True, "ok"


def apply(cluster: GrapeCluster, move: SlipMove) -> GrapeCluster:
    """Slip the start grape to the far end of its string, carrying its label."""
    ok, reason = is_legal(cluster, move)
    if not ok:
        raise IllegalSlipError(reason)
    label = dict(cluster.labels).get(move.start)
    cells = set(cluster.cells)
    cells.remove(move.start)
    cells.add(move.target)
    labels = {c: v for c, v in cluster.labels if c != move.start}
    if label is not None:
        labels[move.target] = label
    return GrapeCluster.from_cells(cells, labels, cluster.allow_disconnected)


def enumerate_moves(cluster: GrapeCluster) -> list[SlipMove]:
    """All legal slips, in deterministic (cell, direction) order."""
    cells = cluster.cells
    out: list[SlipMove] = []
    for a in cluster.ordered_cells():
        for d in NEIGHBOR_OFFSETS:
            n = 0
            p = HexCell(a.x + d[0], a.y + d[1])
            while p in cells:
                n += 1
                p = HexCell(p.x + d[0], p.y + d[1])
            if n == 0:
                continue
            move = SlipMove(a, d, n)
            ok, _ = is_legal(cluster, move)
            if ok:
                out.append(move)
    return out


# -- canonicalization under lattice symmetry -----------------------------------

def _rot60(c: tuple[int, int]) -> tuple[int, int]:
    x, y = c
    return (-y, x + y)


def _mirror(c: tuple[int, int]) -> tuple[int, int]:
    x, y = c
    return (-x - y, y)


def _point_group() -> list[Callable]:
    """The 12 lattice symmetries: rotations by 60 degrees and their mirrors."""
    maps = []
    for k in range(6):
        def rotk(c, k=k):
            for _ in range(k):
                c = _rot60(c)
            return c
        maps.append(rotk)
        maps.append(lambda c, rotk=rotk: rotk(_mirror(c)))
    return maps


_POINT_GROUP = _point_group()


def _translate_key(cells) -> tuple[tuple[int, int], ...]:
    base = min(cells, key=lambda c: (c[1], c[0]))
    return tuple(sorted((c[0] - base[0], c[1] - base[1]) for c in cells))


def canonical_key(cluster: GrapeCluster, symmetry: str = "translation"):
    """Hashable key identifying the cluster up to lattice translation, or up
    to the full 12-element point symmetry when symmetry="full"."""
    cells = [tuple(c) for c in cluster.cells]
    if symmetry == "translation":
        return _translate_key(cells)
    if symmetry == "full":
        return min(_translate_key([g(c) for c in cells]) for g in _POINT_GROUP)
    raise ValueError(f"unknown symmetry mode {symmetry!r}")


# -- traces and search ----------------------------------------------------------

@dataclass(frozen=True)
class SlipTrace:
    """A start cluster, the moves applied to it and the resulting snapshots."""

    start: GrapeCluster
    moves: tuple[SlipMove, ...]
    start_name: str = ""

    def replay(self) -> list[GrapeCluster]:
        """Clusters after each move; raises if any step is illegal."""
        snaps = []
        cur = self.start
        for mv in self.moves:
            cur = apply(cur, mv)
            snaps.append(cur)
        return snaps

    def final(self) -> GrapeCluster:
        return self.replay()[-1] if self.moves else self.start

    def __len__(self) -> int:
        return len(self.moves)

    def to_text(self) -> str:
        head = self.start_name if self.start_name else "inline"
        lines = [f"cluster {head}"]
        if not self.start_name:
            for c in self.start.ordered_cells():
                lines.append(f"grape {self.start.label_of(c)} {c.x} {c.y}")
        lines += [mv.to_line() for mv in self.moves]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str, resolve_cluster=None) -> "SlipTrace":
        """Parse a trace file.  `resolve_cluster(name)` maps a cluster
        reference to a GrapeCluster; inline grape lines are also accepted."""
        name = ""
        cells: dict[HexCell, str] = {}
        moves: list[SlipMove] = []
        start: Optional[GrapeCluster] = None
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "cluster":
                name = parts[1] if len(parts) > 1 else "inline"
            elif parts[0] == "grape":
                cells[HexCell(int(parts[2]), int(parts[3]))] = parts[1]
            else:
                moves.append(SlipMove.from_line(line))
        if cells:
            start = GrapeCluster.from_cells(list(cells), cells)
        elif name and name != "inline":
            if resolve_cluster is None:
                raise ValueError(f"trace references cluster {name!r} "
                                 "but no resolver was given")
            start = resolve_cluster(name)
        if start is None:
            raise ValueError("trace has no start cluster")
        return SlipTrace(start=start, moves=tuple(moves), start_name=name)


def search(start: GrapeCluster, goal: GrapeCluster, max_depth: int,
           symmetry: str = "translation") -> Optional[SlipTrace]:
    """Breadth-first search for a minimal slip sequence from start to goal.

    Clusters are identified up to lattice translation (optionally the full
    point symmetry).  Expansion follows enumerate_moves order, so the result
    is deterministic.  Returns None if the goal is farther than max_depth.
    """
    goal_key = canonical_key(goal, symmetry)
    if canonical_key(start, symmetry) == goal_key:
        return SlipTrace(start=start, moves=())
    seen = {canonical_key(start, symmetry)}
    frontier: list[tuple[GrapeCluster, tuple[SlipMove, ...]]] = [(start, ())]
    for _ in range(max_depth):
        nxt: list[tuple[GrapeCluster, tuple[SlipMove, ...]]] = []
        for cluster, path in frontier:
            for mv in enumerate_moves(cluster):
                child = apply(cluster, mv)
                key = canonical_key(child, symmetry)
                if key in seen:
                    continue
                seen.add(key)
                child_path = path + (mv,)
                if key == goal_key:
                    return SlipTrace(start=start, moves=child_path)
                nxt.append((child, child_path))
        frontier = nxt
        if not frontier:
            break
    return None


def minimal_distance(start: GrapeCluster, goal: GrapeCluster, max_depth: int,
                     symmetry: str = "translation") -> Optional[int]:
    trace = search(start, goal, max_depth, symmetry)
    return None if trace is None else len(trace)
