"""Build the core graphs and check layouts by hand.

Run as: python demos/01_graphs_and_layouts.py
"""

from linlay import (
    EdgeColoring,
    Layout,
    LinearOrder,
    crosses,
    identity_order,
    make_hex_dual,
    make_star,
    make_star_hex_product,
    min_queue_colors_for_order,
    min_stack_colors_for_order,
    nests,
    plain_graph,
    verify_layout,
)

# The dual hexagonal grid: a square grid plus one diagonal per cell.
for n in (1, 2, 3, 6):
    g = make_hex_dual(n)
    print(f"hex grid n={n}: {g.vertex_count} vertices, {len(g.edges)} edges "
          f"(formula 3n^2-4n+1 = {3 * n * n - 4 * n + 1})")

star = make_star(5)
print(f"\nstar with 5 leaves: {star.vertex_count} vertices, hub degree {star.degree(0)}")

product = make_star_hex_product(5, 3)
print(f"product of the two: {product.vertex_count} vertices, {len(product.edges)} edges")

# Crossing and nesting are about where endpoints fall in a vertex order.
order = LinearOrder.from_sequence([0, 1, 2, 3])
print("\npositions 0<1<2<3:")
print("  edges (0,2) and (1,3) interleave  ->", crosses(order, (0, 2), (1, 3)))
print("  edges (0,3) and (1,2) contain     ->", nests(order, (0, 3), (1, 2)))
print("  edges (0,1) and (1,2) share 1     ->",
      crosses(order, (0, 1), (1, 2)) or nests(order, (0, 1), (1, 2)))

# A one-colour layout of a 4-cycle in an interleaved order fails as a stack.
square = plain_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
interleaved = LinearOrder.from_sequence([0, 2, 1, 3])
coloring = EdgeColoring.from_colors({e: 0 for e in square.edges})
report = verify_layout(square, Layout("stack", interleaved, coloring))
print(f"\n1-colour square, order 0,2,1,3: valid={report.valid}, "
      f"violations={report.violations}")

k, witness = min_stack_colors_for_order(square, interleaved)
print(f"the exact per-order stack minimum is {k}; witness {witness.colors}")

kq, _ = min_queue_colors_for_order(square, identity_order(4))
print(f"queue minimum for the natural order of the square: {kq}")
