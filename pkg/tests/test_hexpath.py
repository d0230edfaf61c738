import json
from random import Random

import pytest

from linlay import (
    GridColoring,
    GridCoord,
    InvalidParameterError,
    boundary_sequence,
    coloring_from_json,
    coloring_to_json,
    far_boundary,
    find_monochromatic_path,
    make_hex_dual,
    random_coloring,
)

from oracles import longest_monochromatic_path


def coords(pairs):
    return frozenset(GridCoord(a, b) for a, b in pairs)


def solid(n, color):
    return GridColoring.from_function(n, lambda c: color)


def check_path(coloring, path):
    n = coloring.n
    g = make_hex_dual(n)
    assert len(path) >= n
    assert len(set(path)) == len(path)
    tones = {coloring.color(c) for c in path}
    assert len(tones) == 1
    for p, q in zip(path, path[1:]):
        u = (p.b - 1) * n + (p.a - 1)
        v = (q.b - 1) * n + (q.a - 1)
        assert g.has_edge(u, v)


# ---------------------------------------------------------------------------
# far boundary

def test_far_boundary_of_origin_in_h2():
    assert far_boundary(2, [(1, 1)]) == coords([(1, 2), (2, 1), (2, 2)])


def test_far_boundary_of_everything_else():
    n = 4
    x = [(a, b) for a in range(1, 5) for b in range(1, 5) if (a, b) != (4, 4)]
    assert far_boundary(n, x) == coords([(4, 4)])


def test_far_boundary_large_region_with_pocket():
    # a region whose lower-left pocket is cut off from the far corner, so
    # the pocket's neighbours do not count
    x = [
        (1, 3), (2, 3), (2, 4), (2, 5), (3, 3),
        (4, 1), (4, 2), (4, 3), (4, 4), (5, 2), (5, 3),
    ]
    expected = coords(
        [
            (1, 4), (1, 5), (2, 6), (3, 6), (3, 5), (3, 4), (4, 5),
            (5, 5), (5, 4), (6, 4), (6, 3), (6, 2), (5, 1),
        ]
    )
    assert far_boundary(6, x) == expected


def test_far_boundary_rejects_bad_sets():
    with pytest.raises(InvalidParameterError):
        far_boundary(3, [(1, 1), (3, 3)])  # disconnected
    with pytest.raises(InvalidParameterError):
        far_boundary(3, [(3, 3)])  # contains the far corner
    with pytest.raises(InvalidParameterError):
        far_boundary(3, [])


def test_far_boundary_connected_property():
    rng = Random(11)
    g = make_hex_dual(5)
    for _ in range(60):
        # grow a random connected region avoiding [5,5]
        start = rng.randrange(24)
        region = {start}
        frontier = [start]
        for _ in range(rng.randint(0, 12)):
            base = rng.choice(frontier)
            options = [w for w in g.adjacency[base] if w != 24 and w not in region]
            if not options:
                continue
            w = rng.choice(options)
            region.add(w)
            frontier.append(w)
        cs = [GridCoord(v % 5 + 1, v // 5 + 1) for v in region]
        boundary = far_boundary(5, cs)  # raises internally if disconnected
        assert boundary


# ---------------------------------------------------------------------------
# boundary sequence

def test_all_red_single_step():
    steps = boundary_sequence(solid(4, "R"))
    assert len(steps) == 1
    assert steps[0].color == "R"
    assert steps[0].component == coords(
        [(a, b) for a in range(1, 5) for b in range(1, 5)]
    )
    assert steps[0].far_boundary is None


def test_three_region_walk():
    # red corner block, blue hook around it, red band beyond; the third
    # component reaches the top side
    y1 = {(1, 1), (1, 2), (2, 1), (2, 2)}
    y3 = {
        (1, 5), (2, 6), (3, 6), (4, 6), (3, 5), (3, 4),
        (4, 4), (5, 4), (4, 3), (5, 3), (4, 2), (4, 1),
    }
    y2 = {(3, 1), (3, 2), (3, 3), (1, 3), (2, 3), (1, 4), (2, 4), (2, 5)}
    red = y1 | y3
    coloring = GridColoring.from_function(
        6, lambda c: "R" if (c.a, c.b) in red else "B"
    )
    steps = boundary_sequence(coloring)
    assert [s.color for s in steps] == ["R", "B", "R"]
    assert steps[0].component == coords(y1)
    assert steps[1].component == coords(y2)
    assert steps[2].component == coords(y3)
    assert steps[2].far_boundary is None
    path = find_monochromatic_path(coloring)
    check_path(coloring, path)
    assert {coloring.color(c) for c in path} == {"R"}
    assert set(path) <= coords(y3)
    assert path[0].b == 1 and path[-1].b == 6  # bottom-to-top extraction


def test_parity_coloring_walk():
    coloring = GridColoring.from_function(
        4, lambda c: "R" if (c.a + c.b) % 2 == 0 else "B"
    )
    steps = boundary_sequence(coloring)
    tones = [s.color for s in steps]
    assert all(x != y for x, y in zip(tones, tones[1:]))
    for step in steps[:-1]:
        assert step.far_boundary is not None
        assert step.far_boundary <= coords(
            [(a, b) for a in range(1, 5) for b in range(1, 5)]
        )
    assert steps[-1].far_boundary is None


def test_boundary_alternation_random():
    rng = Random(5150)
    for _ in range(200):
        n = rng.randint(2, 7)
        coloring = random_coloring(n, rng)
        steps = boundary_sequence(coloring)
        tones = [s.color for s in steps]
        assert all(x != y for x, y in zip(tones, tones[1:]))
        assert GridCoord(1, 1) in steps[0].component
        far = {GridCoord(n, j) for j in range(1, n + 1)} | {
            GridCoord(i, n) for i in range(1, n + 1)
        }
        assert steps[-1].component & far
        for step in steps[:-1]:
            assert not step.component & far


# ---------------------------------------------------------------------------
# path extraction

def test_single_vertex_grid():
    assert find_monochromatic_path(solid(1, "B")) == [GridCoord(1, 1)]


def test_all_blue_three_grid():
    path = find_monochromatic_path(solid(3, "B"))
    check_path(solid(3, "B"), path)
    assert len(path) == 3


def test_random_colorings_give_valid_paths():
    for n in range(2, 9):
        rng = Random(4000 + n)
        for _ in range(400):
            coloring = random_coloring(n, rng)
            path = find_monochromatic_path(coloring)
            check_path(coloring, path)


def test_path_lengths_against_exhaustive_search():
    for n in (2, 3, 4):
        rng = Random(8800 + n)
        for _ in range(250):
            coloring = random_coloring(n, rng)
            path = find_monochromatic_path(coloring)
            check_path(coloring, path)
            assert len(path) <= longest_monochromatic_path(coloring)


def test_deterministic_output():
    rng1, rng2 = Random(99), Random(99)
    c1, c2 = random_coloring(6, rng1), random_coloring(6, rng2)
    assert c1 == c2
    assert find_monochromatic_path(c1) == find_monochromatic_path(c2)


# ---------------------------------------------------------------------------
# JSON

def test_coloring_json_round_trip():
    coloring = random_coloring(4, Random(1))
    text = coloring_to_json(coloring)
    again = coloring_from_json(text)
    assert again == coloring
    doc = json.loads(text)
    assert doc["n"] == 4
    assert len(doc["rows"]) == 4


def test_coloring_json_rejects_garbage():
    with pytest.raises(InvalidParameterError):
        coloring_from_json("{")
    with pytest.raises(InvalidParameterError):
        coloring_from_json('{"n": 2, "rows": [["R"]]}')
    with pytest.raises(InvalidParameterError):
        coloring_from_json('{"n": 1, "rows": [["purple"]]}')
