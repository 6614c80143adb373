"""End to end certification.

Diagrams in the two supported hypothesis cases are certified against a
rigid Calabi-Yau partner: first by searching the isogeny classes for a
rigid fiber product, then, when a lone I_2 x I_0 obstruction remains, by
the fiberwise Kummer construction.  Anything else is honestly refused.
"""

from ellab import certificate_to_json, certify, classify_hypotheses, parse_diagram
from ellab.correspondence import render_certificate

EXAMPLES = [
    ("both factors Beauville, three common fibers",
     "3,3,3,3,_ / 4,4,2,_,2", None),
    ("mixed 4/5 factors, I_2 over a smooth point",
     "4,4,2,1,1 / 6,2,_,3,1", None),
    ("the same, second quartic pairing",
     "3,3,2,3,1 / 8,2,_,1,1", None),
    ("transported first: the I_8 member of the same class",
     "1,1,8,1,1 / 6,2,_,3,1", None),
    ("unknown node count: refused without an explicit delta",
     "3,3,3,2,1 / 3,3,3,_,3", None),
    ("the same diagram with the node count supplied",
     "3,3,3,2,1 / 3,3,3,_,3", 8),
]

for title, text, delta in EXAMPLES:
    diagram = parse_diagram(text)
    print(f"== {title}")
    print(f"   {text}")
    print(f"   hypothesis case: {classify_hypotheses(diagram).kind}")
    certificate = certify(diagram, node_count=delta)
    for line in render_certificate(certificate).splitlines():
        print(f"   {line}")
    print()

print("== machine readable form of the first worked example")
print(certificate_to_json(certify(parse_diagram("4,4,2,1,1 / 6,2,_,3,1"))), end="")
