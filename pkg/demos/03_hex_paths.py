"""Monochromatic paths in random two-colourings of the grid.

Run as: python demos/03_hex_paths.py
"""

from random import Random

from linlay import GridCoord, boundary_sequence, find_monochromatic_path, random_coloring

rng = Random(2024)

n = 8
coloring = random_coloring(n, rng)
path = find_monochromatic_path(coloring)
members = set(path)

print(f"random colouring of the {n}x{n} grid (* marks the found path):\n")
for b in range(n, 0, -1):
    row = []
    for a in range(1, n + 1):
        cell = coloring.rows[b - 1][a - 1]
        row.append(cell + ("*" if GridCoord(a, b) in members else " "))
    print("   " + " ".join(row))
print(f"\npath of {len(path)} vertices, colour {coloring.color(path[0])}:")
print("  " + " -> ".join(f"[{c.a},{c.b}]" for c in path))

steps = boundary_sequence(coloring)
print(f"\nthe walk needed {len(steps)} component(s):")
for i, step in enumerate(steps, start=1):
    touch = "reaches the far side" if step.far_boundary is None else \
        f"far boundary of {len(step.far_boundary)} vertices"
    print(f"  step {i}: {step.color}-component of {len(step.component)} vertices, {touch}")
