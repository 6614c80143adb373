"""Fiber products, rigidity, and the partner search.

A product diagram lists, per base point, the pair of fiber indices of the
two factors (0 for a smooth fiber).  The small resolution is rigid exactly
when no point pairs a smooth fiber with I_n for n >= 2; when it is not,
isogeny moves on the factors may repair it.
"""

from ellab import (apply_move, candidate_moves, common_singular_count,
                   find_rigid_partner, is_rigid_criterion, left_config,
                   make_product, parse_config, parse_diagram, render_diagram)

print("pairing 3333 with 9111 over the same four points")
d = make_product(parse_config("3333"), parse_config("9111"))
print(f"  pairs: {d.pairs}")
print(f"  common singular fibers: {common_singular_count(d)}")
print(f"  rigid: {is_rigid_criterion(d)}")

print()
print("transporting a move on the left factor")
move = next(m for m in candidate_moves(left_config(d), 3)
            if m.target.indices == (9, 1, 1, 1))
moved = apply_move(d, "left", move)
print(f"  {render_diagram(d)}  ->  {render_diagram(moved)}")

print()
print("a non-rigid product and its rigid partner")
d = parse_diagram("3,3,3,3,_ / 4,4,2,_,2")
print(f"  start: {render_diagram(d)}   rigid: {is_rigid_criterion(d)}")
partner, moves = find_rigid_partner(d)
print(f"  partner: {render_diagram(partner)}   rigid: {is_rigid_criterion(partner)}")
for applied in moves:
    print(f"    via {applied.side}: {applied.move.source.indices} -> "
          f"{applied.move.target.indices}")

print()
print("an unavoidable obstruction: singleton classes cannot move")
d = parse_diagram("5,4,1,1,1,_ / 5,3,1,1,_,2")
print(f"  {render_diagram(d)}: partner search -> {find_rigid_partner(d)}")
