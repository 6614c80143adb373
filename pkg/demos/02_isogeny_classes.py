"""Isogeny moves and class closures.

Quotienting by a p-torsion section divides a subset of the indices by p
(they must sum to 12p/(p+1)) and multiplies the rest.  Closing under such
moves for p in 2, 3, 5 reproduces the classification of all 4- and 5-fiber
surfaces into isogeny classes.
"""

from ellab import (GraphMode, candidate_moves, closure, dual_move,
                   graph_to_tsv, halved_sum, parse_config)

print("required sum of divided indices")
for p in (2, 3, 5, 7, 11):
    print(f"  p={p}: {halved_sum(p)}")

print()
print("all moves out of 4422 (p=2)")
for move in candidate_moves(parse_config("4422"), 2):
    print(f"  divide positions {move.divided_positions} -> {move.target.indices}")

print()
print("every move has an inverse dividing the complementary positions")
move = candidate_moves(parse_config("4422"), 2)[0]
back = dual_move(move)
print(f"  {move.source.indices} -> {move.target.indices} via {move.divided_positions}")
print(f"  {back.source.indices} -> {back.target.indices} via {back.divided_positions}")

print()
print("the four Beauville classes, as closure columns")
for head in ("3333", "4422", "6231", "5511"):
    graph = closure(parse_config(head))
    print(graph_to_tsv(graph), end="")
    print("  --")

print()
print("five-fiber closures: combinatorial over-approximation vs catalog gating")
for head in ("44211", "62211"):
    free = closure(parse_config(head), GraphMode.COMBINATORIAL)
    gated = closure(parse_config(head), GraphMode.CATALOG_GATED)
    print(f"  {head}: combinatorial {len(free.nodes)} nodes, gated {len(gated.nodes)} nodes")
    print("  gated column:")
    for line in graph_to_tsv(gated).splitlines():
        print(f"    {line}")
