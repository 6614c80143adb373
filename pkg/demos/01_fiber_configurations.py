"""Fiber configurations and the admissibility catalog.

A semi-stable rational elliptic surface with section has singular fibers
I_{k_1}, ..., I_{k_n} over n base points with k_1 + ... + k_n = 12.  This
script parses a few configurations, reduces them to partitions, and asks
the catalog which partitions actually occur.
"""

from ellab import admissible, catalog_lookup, parse_config, partition_of

print("parsing compact and comma notation")
for text in ("3333", "9,1,1,1", "62211"):
    config = parse_config(text)
    print(f"  {text:>8} -> points {config.points} indices {config.indices}")

print()
print("positions forgotten: partitions")
config = parse_config("2613")
print(f"  {config.indices} -> {partition_of(config)}")

print()
print("admissibility of every partition of 12 into four parts")


def four_part_partitions():
    for a in range(3, 10):
        for b in range(1, min(a, 12 - a - 1) + 1):
            for c in range(1, b + 1):
                d = 12 - a - b - c
                if 1 <= d <= c:
                    yield (a, b, c, d)


for partition in sorted(four_part_partitions(), reverse=True):
    print(f"  {partition}: {admissible(partition)}")

print()
print("catalog data for the surfaces that have a plane quartic model")
for partition in ((6, 3, 2, 1), (3, 3, 3, 2, 1), (6, 2, 2, 1, 1)):
    entry = catalog_lookup(partition)
    print(f"  {partition}")
    print(f"    group:    {entry.modular_group_name}")
    print(f"    quartic:  {entry.quartic_equation}")
    print(f"    degrees:  {entry.branch_component_degrees}")
    print(f"    I2 nodes: {entry.i2_node_induced}")
    if entry.distinguished_positions:
        print(f"    distinguished position: {entry.distinguished_positions}")

print()
print("six or more fibers lie outside the catalog")
print(f"  (2,2,2,2,2,2): {admissible((2, 2, 2, 2, 2, 2))}")
