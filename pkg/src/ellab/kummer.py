"""Rigidity bookkeeping for fiberwise Kummer quotients of a fiber product.

The Kummer involution acts on each product fiber with 16, 12 or 9 fixed
points: per factor, a smooth or even-index fiber contributes 4 fixed points
and an odd-index fiber 3, and the counts multiply.  The fixed curve C is a
16-section; the Euler number of its resolution is

    e = 16 * (2 - s) + sum over points of fixed(a, b) + delta,

with s the number of singular base points and delta the number of nodes of
C.  The branch curve of the induced double cover of P^3 is the intersection
of the two quartic cones over the factor branch quartics; a pair of
components of degrees (d1, d2) contributes between 1 and gcd(d1, d2)
components, which bounds the component count c within an interval.  Since
e equals the sum of 2 - 2g over components, e = 2 * c_max forces c = c_max
with every component rational, killing the transversal deformations; the
equisingular deformations vanish exactly when every I_2 x I_0 fiber comes
from a node (not a double tangent) of the defining quartic.  Rigid means
both spaces vanish.

No general rule for delta is known to this package; it defaults to 2 only
for the two reference diagrams below and must be supplied otherwise.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import gcd

from .catalog import catalog_lookup
from .errors import MalformedInput, MissingFlag, MissingNodeCount, NotInCatalog
from .product import ProductDiagram, left_config, right_config

# Pair multisets of the two reference products whose fixed curves are known
# to acquire exactly two nodes.
_REFERENCE_PAIRS = (
    Counter({(4, 6): 1, (4, 2): 1, (2, 0): 1, (1, 3): 1, (1, 1): 1}),
    Counter({(3, 8): 1, (3, 2): 1, (2, 0): 1, (3, 1): 1, (1, 1): 1}),
)

# Fixed-point multisets of the same two diagrams; used by the certification
# layer to decide when the default delta=2 applies.
NODE_COUNT_PATTERNS = (
    Counter((16, 16, 16, 9, 9)),
    Counter((12, 12, 16, 9, 9)),
)


class Rationality(Enum):
    FORCED = "Forced"
    UNDETERMINED = "Undetermined"
    IMPOSSIBLE = "Impossible"

    def __str__(self):
        return self.value


def fiber_fixed_points(a: int, b: int) -> int:
    """Fixed points of the involution on the product fiber I_a x I_b (0 = smooth)."""
    if a < 0 or b < 0:
        raise MalformedInput("fiber indices must be non-negative")
    return (3 if a % 2 else 4) * (3 if b % 2 else 4)


def default_node_count(diagram: ProductDiagram) -> int | None:
    """2 for the two reference diagrams (either side order), else None."""
    pairs = Counter(diagram.pairs)
    swapped = Counter((b, a) for a, b in diagram.pairs)
    for reference in _REFERENCE_PAIRS:
        if pairs == reference or swapped == reference:
            return 2
    return None


@dataclass(frozen=True)
class KummerInput:
    diagram: ProductDiagram
    node_count: int | None
    left_degrees: tuple[int, ...]
    right_degrees: tuple[int, ...]
    i2_flags: tuple[tuple[str, bool], ...]  # (point label, node_induced), sorted

    def __post_init__(self):
        for degrees in (self.left_degrees, self.right_degrees):
            if sum(degrees) != 4:
                raise MalformedInput(f"branch component degrees must sum to 4: {degrees}")
        expected = {pt for pt, (a, b) in zip(self.diagram.points, self.diagram.pairs)
                    if {a, b} == {2, 0}}
        flagged = {pt for pt, _ in self.i2_flags}
        if flagged != expected:
            raise MissingFlag(
                f"node flags must cover exactly the I2 x I0 points {sorted(expected)}, "
                f"got {sorted(flagged)}")


def make_kummer_input(diagram, left_degrees, right_degrees, i2_flags=None,
                      node_count=None) -> KummerInput:
    """Convenience constructor; ``i2_flags`` is a mapping point -> bool."""
    flags = tuple(sorted((i2_flags or {}).items()))
    return KummerInput(diagram, node_count, tuple(left_degrees), tuple(right_degrees), flags)


def kummer_input_from_catalog(diagram: ProductDiagram, node_count=None) -> KummerInput:
    """Fill degrees and node flags from the catalog entries of the factors."""
    flags = {}
    sides = {}
    for side, cfg in (("left", left_config(diagram)), ("right", right_config(diagram))):
        entry = catalog_lookup(sorted(cfg.indices, reverse=True))
        if entry is None or entry.branch_component_degrees is None:
            raise NotInCatalog(
                f"no branch component degrees recorded for the {side} factor "
                f"{tuple(sorted(cfg.indices, reverse=True))}")
        sides[side] = entry
    for pt, (a, b) in zip(diagram.points, diagram.pairs):
        if {a, b} != {2, 0}:
            continue
        entry = sides["left"] if a == 2 else sides["right"]
        if entry.i2_node_induced is None:
            raise MissingFlag(f"catalog records no node flag for point {pt}")
        flags[pt] = entry.i2_node_induced
    return make_kummer_input(diagram,
                             sides["left"].branch_component_degrees,
                             sides["right"].branch_component_degrees,
                             flags, node_count)


def _resolve_node_count(inp: KummerInput) -> int:
    if inp.node_count is not None:
        return inp.node_count
    count = default_node_count(inp.diagram)
    if count is None:
        raise MissingNodeCount(
            "node count of the fixed curve is not known for this diagram; supply it")
    return count


def branch_curve_euler(inp: KummerInput) -> int:
    """Euler number of the resolved fixed curve."""
    diagram = inp.diagram
    fixed = sum(fiber_fixed_points(a, b) for a, b in diagram.pairs)
    return 16 * (2 - diagram.singular_count) + fixed + _resolve_node_count(inp)


def component_interval(left_degrees, right_degrees) -> tuple[int, int]:
    """(c_min, c_max) for the intersection of the two quartic cones.

    Each component pair contributes at least one curve and at most
    gcd(d1, d2) of them.
    """
    for degrees in (left_degrees, right_degrees):
        if sum(degrees) != 4:
            raise MalformedInput(f"branch component degrees must sum to 4: {degrees}")
    c_min = len(left_degrees) * len(right_degrees)
    c_max = sum(gcd(d1, d2) for d1 in left_degrees for d2 in right_degrees)
    return c_min, c_max


def rationality_verdict(euler: int, c_min: int, c_max: int) -> Rationality:
    """e = sum of (2 - 2g) over c components with c_min <= c <= c_max.

    e = 2 * c_max forces the maximal component count with every component
    rational; larger (or odd) e is impossible; anything else stays open.
    """
    if not 1 <= c_min <= c_max:
        raise MalformedInput(f"need 1 <= c_min <= c_max, got ({c_min}, {c_max})")
    if euler % 2 or euler > 2 * c_max:
        return Rationality.IMPOSSIBLE
    if euler == 2 * c_max:
        return Rationality.FORCED
    return Rationality.UNDETERMINED


def equisingular_zero(inp: KummerInput) -> bool:
    """True iff every I_2 x I_0 point is induced by a node of its quartic."""
    return all(flag for _, flag in inp.i2_flags)


@dataclass(frozen=True)
class KummerReport:
    points: tuple[str, ...]
    fixed_counts: tuple[int, ...]
    node_count: int
    euler: int
    component_min: int
    component_max: int
    rationality: Rationality
    equisingular_zero: bool
    transversal_zero: bool
    rigid: bool

    def __post_init__(self):
        if self.transversal_zero != (self.rationality is Rationality.FORCED):
            raise MalformedInput("transversal_zero must mirror the rationality verdict")
        if self.rigid != (self.equisingular_zero and self.transversal_zero):
            raise MalformedInput("rigid must be the conjunction of the two verdicts")


def kummer_rigidity(inp: KummerInput) -> KummerReport:
    """Assemble the full report; rigid iff both deformation spaces vanish."""
    diagram = inp.diagram
    fixed_counts = tuple(fiber_fixed_points(a, b) for a, b in diagram.pairs)
    node_count = _resolve_node_count(inp)
    euler = branch_curve_euler(inp)
    c_min, c_max = component_interval(inp.left_degrees, inp.right_degrees)
    rationality = rationality_verdict(euler, c_min, c_max)
    equisingular = equisingular_zero(inp)
    transversal = rationality is Rationality.FORCED
    return KummerReport(
        points=diagram.points,
        fixed_counts=fixed_counts,
        node_count=node_count,
        euler=euler,
        component_min=c_min,
        component_max=c_max,
        rationality=rationality,
        equisingular_zero=equisingular,
        transversal_zero=transversal,
        rigid=equisingular and transversal,
    )


def report_to_json(report: KummerReport) -> str:
    payload = {
        "schema": 1,
        "points": list(report.points),
        "fixed_counts": list(report.fixed_counts),
        "node_count": report.node_count,
        "euler": report.euler,
        "components": [report.component_min, report.component_max],
        "rationality": str(report.rationality),
        "equisingular_zero": report.equisingular_zero,
        "transversal_zero": report.transversal_zero,
        "rigid": report.rigid,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_report(report: KummerReport) -> str:
    lines = [
        "points: " + " ".join(report.points),
        "fixed: " + " ".join(str(c) for c in report.fixed_counts),
        f"nodes: {report.node_count}",
        f"euler: {report.euler}",
        f"components: {report.component_min}..{report.component_max}",
        f"rationality: {report.rationality}",
        f"equisingular_zero: {'true' if report.equisingular_zero else 'false'}",
        f"transversal_zero: {'true' if report.transversal_zero else 'false'}",
        f"rigid: {'true' if report.rigid else 'false'}",
    ]
    return "\n".join(lines) + "\n"
