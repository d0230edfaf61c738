"""Independent brute-force oracles used across the test suite.

Everything here is deliberately naive: positions are recomputed from raw
sequences, predicates are inlined, and minima come from exhaustive
enumeration or plain backtracking, so the oracles share no machinery with
the library paths they check.
"""

from itertools import combinations, permutations

from linlay import connected_components, hex_coord, make_hex_dual, plain_graph


def complete_graph(n):
    return plain_graph(n, combinations(range(n), 2))


def positions(seq):
    pos = [0] * len(seq)
    for i, v in enumerate(seq):
        pos[v] = i
    return pos


def oracle_crosses(pos, e, f):
    a1, b1 = sorted((pos[e[0]], pos[e[1]]))
    a2, b2 = sorted((pos[f[0]], pos[f[1]]))
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


def oracle_nests(pos, e, f):
    a1, b1 = sorted((pos[e[0]], pos[e[1]]))
    a2, b2 = sorted((pos[f[0]], pos[f[1]]))
    return (a1 < a2 and b2 < b1) or (a2 < a1 and b1 < b2)


def brute_min_colors(edges, seq, kind):
    """Minimum colours for a fixed order by backtracking over edges."""
    pos = positions(seq)
    pred = oracle_crosses if kind == "stack" else oracle_nests
    edges = sorted(edges)
    m = len(edges)
    if m == 0:
        return 0
    conflict = [
        [pred(pos, edges[i], edges[j]) for j in range(m)] for i in range(m)
    ]
    best = [m]
    colors = [-1] * m

    def backtrack(i, used):
        if used >= best[0]:
            return
        if i == m:
            best[0] = used
            return
        for c in range(used):
            if all(not conflict[i][j] or colors[j] != c for j in range(i)):
                colors[i] = c
                backtrack(i + 1, used)
                colors[i] = -1
        colors[i] = used
        backtrack(i + 1, used + 1)
        colors[i] = -1

    backtrack(0, 0)
    return best[0]


def brute_layout_number(n_vertices, edges, kind):
    """Minimum over every vertex order of the per-order brute minimum."""
    best = None
    for seq in permutations(range(n_vertices)):
        k = brute_min_colors(edges, seq, kind)
        best = k if best is None else min(best, k)
        if best == (1 if edges else 0):
            break
    return best


def dp_longest_monotone(values):
    """O(len^2) DP for the longest strictly monotone subsequence length,
    returned as (increasing_len, decreasing_len)."""
    n = len(values)
    inc = [1] * n
    dec = [1] * n
    for i in range(n):
        for j in range(i):
            if values[j] < values[i] and inc[j] + 1 > inc[i]:
                inc[i] = inc[j] + 1
            if values[j] > values[i] and dec[j] + 1 > dec[i]:
                dec[i] = dec[j] + 1
    return (max(inc) if n else 0, max(dec) if n else 0)


def longest_monochromatic_path(coloring):
    """Exhaustive longest single-colour path length, with pruning by the
    number of still-reachable vertices."""
    n = coloring.n
    g = make_hex_dual(n)
    best = 0
    for target in ("R", "B"):
        keep = [v for v in range(n * n) if coloring.color(hex_coord(v, n)) == target]
        keepset = set(keep)
        adj = [[w for w in g.adjacency[v] if w in keepset] for v in range(n * n)]
        for comp in connected_components(g, keep):
            members = set(comp)

            def reachable(v, blocked):
                seen = {v}
                stack = [v]
                while stack:
                    x = stack.pop()
                    for w in adj[x]:
                        if w in members and w not in blocked and w not in seen:
                            seen.add(w)
                            stack.append(w)
                return len(seen)

            def dfs(v, visited, length):
                nonlocal best
                if length > best:
                    best = length
                if length + reachable(v, visited) - 1 <= best:
                    return
                for w in adj[v]:
                    if w in members and w not in visited:
                        visited.add(w)
                        dfs(w, visited, length + 1)
                        visited.discard(w)

            for v in sorted(members):
                dfs(v, {v}, 1)
    return best


def random_tree(rng, n):
    """Uniform labelled tree on n vertices from a random parent array."""
    if n == 1:
        return plain_graph(1, [])
    edges = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        edges.append((order[i], order[rng.randrange(i)]))
    return plain_graph(n, edges)


def canonical_form(n, edges):
    """Smallest adjacency bitmask over all relabellings (graphs <= 7)."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edgeset = {tuple(sorted(e)) for e in edges}
    best = None
    for perm in permutations(range(n)):
        mask = 0
        for u, v in edgeset:
            mask |= 1 << index[tuple(sorted((perm[u], perm[v])))]
        if best is None or mask < best:
            best = mask
    return best


def nonisomorphic_graphs(max_vertices):
    """All connected-or-not graphs on 1..max_vertices vertices up to
    isomorphism, as (n, edge list) pairs."""
    found = []
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            canon = canonical_form(n, edges)
            if canon not in seen:
                seen.add(canon)
                found.append((n, edges))
    return found
