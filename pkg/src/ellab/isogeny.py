"""Prime-order isogeny moves between fiber configurations.

Quotienting a semi-stable rational elliptic surface by translation with a
p-torsion section keeps singular fibers in the same place and replaces each
index k by k/p or p*k.  The divided positions D must carry indices divisible
by p, and requiring the quotient to be rational again (index sum 12) forces
their sum to be exactly 12p/(p+1): 8 for p=2, 9 for p=3, 10 for p=5.  Only
p in {2, 3, 5} can occur on a configuration with at least four fibers (p=11
would need an index divisible by 11, impossible below the total of 12).

:func:`candidate_moves` enumerates every combinatorially possible move; it
is a guaranteed superset of the geometrically realized isogenies, since
which subsets D occur depends on how the torsion section meets fiber
components.  The embedded class tables resolve that ambiguity, and
:func:`closure` offers both readings as modes.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import NamedTuple

from . import catalog
from .configs import FiberConfig, TOTAL_INDEX, odd_index_count, render_config
from .errors import MalformedInput, NotInCatalog, NotPrime

CLOSURE_PRIMES = (2, 3, 5)


class GraphMode(Enum):
    COMBINATORIAL = "Combinatorial"
    CATALOG_GATED = "CatalogGated"

    def __str__(self):
        return self.value


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def halved_sum(p: int) -> int | None:
    """The exact total the divided indices must reach for a p-isogeny.

    12p/(p+1) when integral (p in {2, 3, 5, 11}), else None.
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if (TOTAL_INDEX * p) % (p + 1):
        return None
    return TOTAL_INDEX * p // (p + 1)


@dataclass(frozen=True)
class IsogenyMove:
    """One p-isogeny: indices at ``divided_positions`` divided by p, all others multiplied."""

    p: int
    divided_positions: tuple[int, ...]
    source: FiberConfig
    target: FiberConfig

    def __post_init__(self):
        object.__setattr__(self, "divided_positions", tuple(self.divided_positions))
        divided = set(self.divided_positions)
        src, dst = self.source, self.target
        if src.points != dst.points:
            raise MalformedInput("move endpoints must share base points")
        if not divided or len(divided) != len(self.divided_positions):
            raise MalformedInput(f"divided positions must be distinct and non-empty: {self.divided_positions}")
        if not divided <= set(range(len(src))):
            raise MalformedInput(f"divided positions out of range: {self.divided_positions}")
        total = halved_sum(self.p)
        if total is None or sum(src.indices[i] for i in divided) != total:
            raise MalformedInput(f"divided indices must sum to {total} for p={self.p}")
        for i, (a, b) in enumerate(zip(src.indices, dst.indices)):
            if i in divided:
                if a % self.p or b != a // self.p:
                    raise MalformedInput(f"position {i}: {a} must divide to {a}//{self.p}")
            elif b != self.p * a:
                raise MalformedInput(f"position {i}: {a} must multiply to {self.p * a}")


class _MoveSpec(NamedTuple):
    p: int
    divided: tuple[int, ...]
    source: tuple[int, ...]
    target: tuple[int, ...]


def _target_of(indices, p, divided):
    return tuple(k // p if i in divided else p * k for i, k in enumerate(indices))


@lru_cache(maxsize=4096)
def _move_specs(indices: tuple[int, ...], p: int, entries) -> tuple[_MoveSpec, ...]:
    total = halved_sum(p)
    if total is None:
        return ()
    if p == 2 and odd_index_count(indices) > 4:
        # no two-torsion section exists, and no even subset can reach 8
        return ()
    divisible = tuple(i for i, k in enumerate(indices) if k % p == 0)
    max_size = min(len(divisible), 4) if p == 2 else len(divisible)
    specs = []
    for size in range(1, max_size + 1):
        for divided in combinations(divisible, size):
            if sum(indices[i] for i in divided) != total:
                continue
            target = _target_of(indices, p, divided)
            partition = tuple(sorted(target, reverse=True))
            if len(partition) <= 5 and catalog.admissible(partition) is catalog.Admissibility.NOT_ADMISSIBLE:
                continue  # the 4- and 5-fiber tables are complete, so this quotient cannot exist
            specs.append(_MoveSpec(p, divided, indices, target))
    specs.sort(key=lambda s: (len(s.divided), s.divided))
    return tuple(specs)


def _materialize(spec: _MoveSpec, points) -> IsogenyMove:
    return IsogenyMove(spec.p, spec.divided,
                       FiberConfig(points, spec.source),
                       FiberConfig(points, spec.target))


def candidate_moves(config: FiberConfig, p: int) -> tuple[IsogenyMove, ...]:
    """All combinatorially possible p-moves out of ``config``.

    A superset of the geometrically realized isogenies: moves whose target
    partition is known not to occur (4 or 5 fibers, absent from the tables)
    are pruned, everything else is kept.
    """
    specs = _move_specs(config.indices, p, catalog.active_entries())
    return tuple(_materialize(spec, config.points) for spec in specs)


def dual_move(move: IsogenyMove) -> IsogenyMove:
    """The inverse isogeny: divide exactly the complementary positions."""
    complement = tuple(i for i in range(len(move.source)) if i not in move.divided_positions)
    return IsogenyMove(move.p, complement, move.target, move.source)


def _dual_spec(spec: _MoveSpec) -> _MoveSpec:
    complement = tuple(i for i in range(len(spec.source)) if i not in spec.divided)
    return _MoveSpec(spec.p, complement, spec.target, spec.source)


def _matchings(row, start):
    """Position bijections sigma with start[sigma[i]] == row[i]."""
    row_slots = defaultdict(list)
    start_slots = defaultdict(list)
    for i, k in enumerate(row):
        row_slots[k].append(i)
    for i, k in enumerate(start):
        start_slots[k].append(i)
    per_value = [
        [dict(zip(row_slots[k], perm)) for perm in permutations(start_slots[k])]
        for k in row_slots
    ]
    for parts in product(*per_value):
        sigma = {}
        for part in parts:
            sigma.update(part)
        yield sigma


def _transport(row, sigma):
    out = [0] * len(row)
    for i, k in enumerate(row):
        out[sigma[i]] = k
    return tuple(out)


@lru_cache(maxsize=4096)
def _class_of(start: tuple[int, ...]):
    """('uncovered' | 'resolved' | 'ambiguous', rows) for the class of ``start``.

    A literal table row takes its column at the table alignment.  Otherwise
    every value-preserving matching with a row of the column is tried; the
    transported column is 'resolved' only when all matchings agree.  The
    62211 column is the one ambiguous case, its two I_2 fibers are not
    interchangeable.
    """
    partition = tuple(sorted(start, reverse=True))
    if partition not in catalog.TABLE_PARTITIONS:
        return "uncovered", ()
    for cls in catalog.ALL_CLASSES:
        if start in cls:
            return "resolved", cls
    multiset = sorted(start)
    transported = set()
    for cls in catalog.ALL_CLASSES:
        for row in cls:
            if sorted(row) != multiset:
                continue
            for sigma in _matchings(row, start):
                transported.add(tuple(_transport(r, sigma) for r in cls))
    variants = {frozenset(rows) for rows in transported}
    if len(variants) == 1:
        # column row order is kept; the smallest variant fixes the tie
        return "resolved", min(transported)
    return "ambiguous", (start,)


class _ClosureData(NamedTuple):
    nodes: tuple[tuple[int, ...], ...]
    edges: tuple[_MoveSpec, ...]
    paths: dict  # node tuple -> tuple of _MoveSpec from the start


@lru_cache(maxsize=1024)
def _closure_tuples(start: tuple[int, ...], mode: GraphMode, entries) -> _ClosureData:
    kind, rows = _class_of(start)
    gate = frozenset(rows)

    def keep(node):
        if mode is GraphMode.COMBINATORIAL or node == start:
            return True
        partition = tuple(sorted(node, reverse=True))
        if partition in catalog.TABLE_PARTITIONS:
            return node in gate if kind != "uncovered" else node in catalog.TABLE_ROWS
        return True

    queue = [start]
    paths = {start: ()}
    edges = {}
    while queue:
        node = queue.pop(0)
        for p in CLOSURE_PRIMES:
            for spec in _move_specs(node, p, entries):
                if not keep(spec.target):
                    continue
                edges[(spec.p, spec.divided, spec.source)] = spec
                dual = _dual_spec(spec)
                edges[(dual.p, dual.divided, dual.source)] = dual
                if spec.target not in paths:
                    paths[spec.target] = paths[node] + (spec,)
                    queue.append(spec.target)
    nodes = tuple(sorted(paths))
    edge_list = tuple(sorted(edges.values(), key=lambda s: (s.source, s.p, s.divided)))
    return _ClosureData(nodes, edge_list, paths)


@dataclass(frozen=True)
class IsogenyGraph:
    """Closure of a configuration under prime isogeny moves."""

    nodes: tuple[FiberConfig, ...]
    edges: tuple[IsogenyMove, ...]
    mode: GraphMode


def closure(config: FiberConfig, mode: GraphMode = GraphMode.COMBINATORIAL) -> IsogenyGraph:
    """Breadth-first closure of ``config`` under moves for p in {2, 3, 5}.

    Node order is lexicographic in the index tuples.  CatalogGated mode
    discards any reached configuration whose partition the class tables
    cover but which is not a row of the start's class (transported to the
    start's positions, see :func:`catalog_class`); the start node itself is
    always kept, and gating falls back to literal table rows when the start
    lies outside the tables.
    """
    data = _closure_tuples(config.indices, mode, catalog.active_entries())
    nodes = tuple(FiberConfig(config.points, t) for t in data.nodes)
    edges = tuple(_materialize(spec, config.points) for spec in data.edges)
    return IsogenyGraph(nodes, edges, mode)


def catalog_class(config: FiberConfig) -> tuple[FiberConfig, ...]:
    """The class table column containing ``config``, over its point labels.

    Literal table rows take the column at the table alignment; position
    variants are transported when every value-preserving matching agrees.
    The one ambiguous case, position variants of 62211, is rejected because
    its two I_2 fibers are not interchangeable.
    """
    if catalog.admissible(tuple(sorted(config.indices, reverse=True))) is not catalog.Admissibility.ADMISSIBLE:
        raise NotInCatalog(f"partition of {render_config(config)} is not admissible")
    kind, rows = _class_of(config.indices)
    if kind == "uncovered":
        raise NotInCatalog(f"{render_config(config)} lies outside the class tables")
    if kind == "ambiguous":
        raise NotInCatalog(
            f"{render_config(config)} cannot be transported: the distinguished "
            "I_2 fiber of the 62211 class is not determined by positions")
    return tuple(FiberConfig(config.points, row) for row in rows)


def graph_to_tsv(graph: IsogenyGraph) -> str:
    """One configuration per line.

    When the node set equals a class table column exactly, rows follow the
    catalog's row order so the output can be diffed visually against the
    tables; otherwise rows are sorted lexicographically.
    """
    tuples = [node.indices for node in graph.nodes]
    node_set = set(tuples)
    for cls in catalog.ALL_CLASSES:
        if node_set == set(cls):
            tuples = list(cls)
            break
    else:
        tuples.sort()
    lines = ["".join(map(str, t)) if all(k <= 9 for k in t) else ",".join(map(str, t))
             for t in tuples]
    return "\n".join(lines) + "\n"


def graph_to_json(graph: IsogenyGraph) -> str:
    """Canonical JSON: nodes as index arrays, edges by node list position."""
    node_index = {node.indices: i for i, node in enumerate(graph.nodes)}
    payload = {
        "schema": 1,
        "mode": str(graph.mode),
        "points": list(graph.nodes[0].points) if graph.nodes else [],
        "nodes": [list(node.indices) for node in graph.nodes],
        "edges": [
            {
                "p": move.p,
                "D": list(move.divided_positions),
                "from": node_index[move.source.indices],
                "to": node_index[move.target.indices],
            }
            for move in graph.edges
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
