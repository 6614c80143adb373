"""Fiberwise Kummer rigidity bookkeeping.

For a product with an I_2 x I_0 fiber the fiberwise Kummer quotient can be
rigid: the Euler number of the resolved fixed curve must hit twice the
maximal component count of the branch curve (killing transversal
deformations) and every I_2 x I_0 fiber must come from a node of the
defining quartic (killing equisingular deformations).
"""

from ellab import (component_interval, fiber_fixed_points,
                   kummer_input_from_catalog, kummer_rigidity, parse_diagram)
from ellab.kummer import render_report

print("fixed points of the involution on a product fiber")
for pair in ((4, 6), (3, 8), (2, 0), (1, 1)):
    print(f"  I_{pair[0]} x I_{pair[1]}: {fiber_fixed_points(*pair)}")

print()
print("component interval for two branch quartics split as 2+1+1 and 2+1+1")
print(f"  {component_interval((2, 1, 1), (2, 1, 1))}")

for text in ("4,4,2,1,1 / 6,2,_,3,1", "3,3,2,3,1 / 8,2,_,1,1"):
    print()
    print(f"full report for {text}")
    report = kummer_rigidity(kummer_input_from_catalog(parse_diagram(text)))
    for line in render_report(report).splitlines():
        print(f"  {line}")

print()
print("a double tangent instead of a node would break rigidity")
from ellab import make_kummer_input
diagram = parse_diagram("4,4,2,1,1 / 6,2,_,3,1")
report = kummer_rigidity(
    make_kummer_input(diagram, (2, 1, 1), (2, 1, 1), {"P3": False}, node_count=2))
print(f"  equisingular_zero: {report.equisingular_zero}  rigid: {report.rigid}")
