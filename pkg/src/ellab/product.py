"""Fiber products of two configurations over a shared base line.

A :class:`ProductDiagram` records, per base point, the pair (a, b) of fiber
indices of the two factors, with 0 for a smooth fiber.  Isogeny moves on a
factor transport to the product (the move keeps singular fibers in place),
and a product whose small resolution is rigid is recognized purely from the
fiber types: no point may pair a smooth fiber with an I_n for n >= 2.  The
criterion is applied symmetrically in the two factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Literal

from . import catalog
from .configs import FiberConfig, TOTAL_INDEX
from .errors import ConflictingLabels, MalformedInput, NotInCatalog, SideMismatch
from .isogeny import GraphMode, IsogenyMove, _closure_tuples, _materialize

Side = Literal["left", "right"]


@dataclass(frozen=True)
class AppliedMove:
    """Log record: an isogeny move applied to one factor of a product."""

    side: Side
    move: IsogenyMove


@dataclass(frozen=True)
class ProductDiagram:
    """Per-point index pairs of S1 x_P1 S2; every listed point is singular
    for at least one factor.  The move log is provenance, not identity."""

    points: tuple[str, ...]
    pairs: tuple[tuple[int, int], ...]
    log: tuple[AppliedMove, ...] = field(default=(), compare=False)

    def __post_init__(self):
        points = tuple(self.points)
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "log", tuple(self.log))
        if len(points) != len(pairs):
            raise MalformedInput("one point label per fiber pair required")
        if len(set(points)) != len(points):
            raise MalformedInput(f"point labels must be pairwise distinct: {points}")
        if any(a < 0 or b < 0 for a, b in pairs):
            raise MalformedInput("fiber indices must be non-negative")
        if any(a == 0 and b == 0 for a, b in pairs):
            raise MalformedInput("a diagram point must be singular for at least one factor")
        for total in (sum(a for a, _ in pairs), sum(b for _, b in pairs)):
            if total != TOTAL_INDEX:
                raise MalformedInput(f"each factor must have index sum {TOTAL_INDEX}, got {total}")
        # validates fiber count bounds for both factors
        left_config(self)
        right_config(self)

    @property
    def singular_count(self) -> int:
        return len(self.points)


def left_config(d: ProductDiagram) -> FiberConfig:
    """Left projection: drop the points where the left factor is smooth."""
    kept = [(pt, a) for pt, (a, _) in zip(d.points, d.pairs) if a > 0]
    return FiberConfig(tuple(pt for pt, _ in kept), tuple(a for _, a in kept))


def right_config(d: ProductDiagram) -> FiberConfig:
    kept = [(pt, b) for pt, (_, b) in zip(d.points, d.pairs) if b > 0]
    return FiberConfig(tuple(pt for pt, _ in kept), tuple(b for _, b in kept))


def make_product(c1: FiberConfig, c2: FiberConfig, alignment=None) -> ProductDiagram:
    """Pair the two configurations over a common base.

    ``alignment`` maps point labels of ``c2`` to point labels of ``c1``
    (injectively); by default points with equal labels are identified.
    Points of ``c1`` come first, unaligned points of ``c2`` after, in input
    order.
    """
    if alignment is None:
        alignment = {label: label for label in c2.points if label in c1.points}
    else:
        alignment = dict(alignment)
        if not set(alignment) <= set(c2.points):
            raise ConflictingLabels(f"alignment keys not among right factor points: {alignment}")
        targets = list(alignment.values())
        if not set(targets) <= set(c1.points):
            raise ConflictingLabels(f"alignment targets not among left factor points: {alignment}")
        if len(set(targets)) != len(targets):
            raise ConflictingLabels(f"alignment must be injective: {alignment}")
    by_target = {target: source for source, target in alignment.items()}
    right_index = dict(zip(c2.points, c2.indices))
    points = list(c1.points)
    pairs = [
        (a, right_index[by_target[pt]] if pt in by_target else 0)
        for pt, a in zip(c1.points, c1.indices)
    ]
    for pt, b in zip(c2.points, c2.indices):
        if pt in alignment:
            continue
        if pt in c1.points:
            raise ConflictingLabels(
                f"unaligned right point {pt!r} collides with a left point label")
        points.append(pt)
        pairs.append((0, b))
    return ProductDiagram(tuple(points), tuple(pairs))


def common_singular_count(d: ProductDiagram) -> int:
    """Number of base points where both factors are singular."""
    return sum(1 for a, b in d.pairs if a >= 1 and b >= 1)


def is_rigid_criterion(d: ProductDiagram) -> bool:
    """No point pairs a smooth fiber with I_n for n >= 2 (either side)."""
    return not any((a == 0 and b >= 2) or (b == 0 and a >= 2) for a, b in d.pairs)


def factors_share_class(d: ProductDiagram) -> bool:
    """Whether the factor partitions lie in one isogeny class (the rigidity
    constructions assume non-isogenous factors; this is a warning, not an error)."""
    left = tuple(sorted(left_config(d).indices, reverse=True))
    right = tuple(sorted(right_config(d).indices, reverse=True))
    for cls in catalog.ALL_CLASSES:
        partitions = {tuple(sorted(row, reverse=True)) for row in cls}
        if left in partitions and right in partitions:
            return True
    return False


def apply_move(d: ProductDiagram, side: Side, move: IsogenyMove) -> ProductDiagram:
    """Replace one factor by the move target; the move is recorded in the log."""
    if side not in ("left", "right"):
        raise MalformedInput(f"side must be 'left' or 'right', got {side!r}")
    current = left_config(d) if side == "left" else right_config(d)
    if current != move.source:
        raise SideMismatch(
            f"{side} factor is {current.indices} over {current.points}, "
            f"move starts from {move.source.indices} over {move.source.points}")
    new_index = dict(zip(move.target.points, move.target.indices))
    pairs = []
    for pt, (a, b) in zip(d.points, d.pairs):
        if side == "left":
            pairs.append((new_index.get(pt, 0) if a > 0 else 0, b))
        else:
            pairs.append((a, new_index.get(pt, 0) if b > 0 else 0))
    return ProductDiagram(d.points, tuple(pairs), d.log + (AppliedMove(side, move),))


def _pair_rows(d, left_tuple, right_tuple):
    """Per-point (a, b) pairs after substituting factor representatives."""
    left_slots = iter(left_tuple)
    right_slots = iter(right_tuple)
    return tuple(
        (next(left_slots) if a > 0 else 0, next(right_slots) if b > 0 else 0)
        for a, b in d.pairs
    )


def _rigid_rows(rows) -> bool:
    return not any((a == 0 and b >= 2) or (b == 0 and a >= 2) for a, b in rows)


def _replace_factor(d, side, path, points):
    for spec in path:
        d = apply_move(d, side, _materialize(spec, points))
    return d


def find_rigid_partner(d: ProductDiagram):
    """Search the gated closures of both factors for a rigid product.

    Isogenies keep singular fibers in place, so representatives are
    substituted position-wise.  The input itself is checked first; after
    that candidate pairs are enumerated in descending lexicographic order
    of (left representative, right representative).  Returns the partner
    diagram and the applied move path, or None.
    """
    left = left_config(d)
    right = right_config(d)
    for cfg in (left, right):
        partition = tuple(sorted(cfg.indices, reverse=True))
        if catalog.admissible(partition) is not catalog.Admissibility.ADMISSIBLE:
            raise NotInCatalog(f"factor partition {partition} is not admissible")
    if is_rigid_criterion(d):
        return d, ()
    entries = catalog.active_entries()
    left_data = _closure_tuples(left.indices, GraphMode.CATALOG_GATED, entries)
    right_data = _closure_tuples(right.indices, GraphMode.CATALOG_GATED, entries)
    for l_tuple in sorted(left_data.nodes, reverse=True):
        for r_tuple in sorted(right_data.nodes, reverse=True):
            if not _rigid_rows(_pair_rows(d, l_tuple, r_tuple)):
                continue
            partner = _replace_factor(d, "left", left_data.paths[l_tuple], left.points)
            partner = _replace_factor(partner, "right", right_data.paths[r_tuple], right.points)
            moves = partner.log[len(d.log):]
            assert is_rigid_criterion(partner)
            return partner, moves
    return None


def parse_diagram(text: str) -> ProductDiagram:
    """Two aligned comma separated rows joined by '/', '_' for smooth.

    Example: ``4,4,2,1,1 / 6,2,_,3,1``.
    """
    rows = [row.strip() for row in text.split("/")]
    if len(rows) != 2:
        raise MalformedInput(f"diagram text needs exactly two '/'-separated rows: {text!r}")

    def parse_row(row):
        values = []
        for cell in row.split(","):
            cell = cell.strip()
            if cell == "_":
                values.append(0)
            else:
                try:
                    values.append(int(cell))
                except ValueError:
                    raise MalformedInput(f"bad diagram cell {cell!r}") from None
        return values

    top, bottom = parse_row(rows[0]), parse_row(rows[1])
    if len(top) != len(bottom):
        raise MalformedInput("diagram rows must have equal length")
    points = tuple(f"P{i}" for i in range(1, len(top) + 1))
    return ProductDiagram(points, tuple(zip(top, bottom)))


def render_diagram(d: ProductDiagram) -> str:
    top = ",".join("_" if a == 0 else str(a) for a, _ in d.pairs)
    bottom = ",".join("_" if b == 0 else str(b) for _, b in d.pairs)
    return f"{top} / {bottom}"


def _move_record(applied: AppliedMove) -> dict:
    return {
        "side": applied.side,
        "p": applied.move.p,
        "D": list(applied.move.divided_positions),
        "source": list(applied.move.source.indices),
        "target": list(applied.move.target.indices),
    }


def diagram_to_json(d: ProductDiagram) -> str:
    payload = {
        "schema": 1,
        "points": list(d.points),
        "pairs": [list(pair) for pair in d.pairs],
        "log": [_move_record(applied) for applied in d.log],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
