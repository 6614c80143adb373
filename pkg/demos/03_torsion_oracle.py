"""The three-valued torsion oracle.

Yes answers come from a divisibility criterion or from the class tables;
No answers come from the odd-index bound (p=2) or from the absence of any
candidate move.  Some configurations genuinely stay Unknown.
"""

from ellab import FiberConfig, parse_config, torsion_status

CASES = [
    ("3333", 3),        # every index divisible by 3
    ("4422", 2),
    ("11811", 2),       # the divisibility criterion fails, the tables decide
    ("53211", 2),       # no even subset sums to 8
    ("54111", 5),
    ("72111", 3),
]

print("torsion status with provenances")
for text, p in CASES:
    status = torsion_status(parse_config(text), p)
    print(f"  {text:>6} p={p}: {status}")

print()
print("both negative arguments can fire at once")
config = FiberConfig(tuple(f"P{i}" for i in range(1, 9)), (3, 3, 1, 1, 1, 1, 1, 1))
print(f"  {config.indices} p=2: {torsion_status(config, 2)}")

print()
print("a genuine Unknown (twelve = 1+1+1+1+4+4, six fibers)")
config = FiberConfig(("A", "B", "C", "D", "E", "F"), (1, 1, 1, 1, 4, 4))
print(f"  {config.indices} p=2: {torsion_status(config, 2)}")
