import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramseykit import (
    BLUE,
    RED,
    DomainError,
    EdgeColoring,
    InvalidSpecError,
    SplitSpec,
    canonical_key,
    construct_split,
    split_coloring,
)


def colorings(max_n: int = 9) -> st.SearchStrategy[EdgeColoring]:
    return st.integers(0, max_n).flatmap(
        lambda n: st.builds(
            EdgeColoring, st.just(n), st.integers(0, max(0, 2 ** (n * (n - 1) // 2) - 1))
        )
    )


@given(colorings())
def test_serialize_parse_round_trip(c: EdgeColoring) -> None:
    assert EdgeColoring.parse(c.serialize()) == c


@given(colorings())
def test_edge_counts_partition_complete_graph(c: EdgeColoring) -> None:
    assert c.red_edge_count + c.blue_edge_count == c.n * (c.n - 1) // 2


@given(colorings(7))
def test_complement_swaps_colors(c: EdgeColoring) -> None:
    comp = c.complemented()
    assert comp.red_edge_count == c.blue_edge_count
    assert comp.complemented() == c
    for i, j in combinations(range(c.n), 2):
        assert comp.is_red(i, j) != c.is_red(i, j)


@given(colorings(7), st.randoms(use_true_random=False))
def test_relabeling_preserves_canonical_key(c: EdgeColoring, rng: random.Random) -> None:
    perm = list(range(c.n))
    rng.shuffle(perm)
    relab = c.relabeled(perm)
    assert relab.red_edge_count == c.red_edge_count
    assert canonical_key(relab) == canonical_key(c)


@given(colorings(7))
def test_color_swap_key_matches_complement(c: EdgeColoring) -> None:
    assert canonical_key(c, swap_colors=True) == canonical_key(
        c.complemented(), swap_colors=True
    )


@given(colorings(7), st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=4))
def test_flip_twice_is_identity(c: EdgeColoring, pairs: list[tuple[int, int]]) -> None:
    seen: set[frozenset[int]] = set()
    deduped = []
    for i, j in pairs:
        key = frozenset((i, j))
        if i != j and i < c.n and j < c.n and key not in seen:
            seen.add(key)
            deduped.append((i, j))
    assert c.with_flipped(deduped).with_flipped(deduped) == c


def test_flip_changes_single_edge_color() -> None:
    c = split_coloring(4, 3)
    flipped = c.with_flipped([(0, 1)])
    assert c.color_of(0, 1) != flipped.color_of(0, 1)
    for i, j in combinations(range(7), 2):
        if {i, j} != {0, 1}:
            assert c.color_of(i, j) == flipped.color_of(i, j)


def test_split_coloring_structure() -> None:
    c = split_coloring(4, 2)
    for i, j in combinations(range(6), 2):
        in_a = i < 4 and j < 4
        in_b = i >= 4 and j >= 4
        expected = BLUE if in_a or in_b else RED
        assert c.color_of(i, j) == expected


def test_construct_split_agrees_with_helper() -> None:
    spec = SplitSpec(a=5, b=3, flips=((0, 5), (1, 6)))
    assert construct_split(spec) == split_coloring(5, 3, flips=[(0, 5), (1, 6)])


def test_views_partition_edges() -> None:
    c = EdgeColoring.random(8, random.Random(11))
    red, blue = c.view(RED), c.view(BLUE)
    assert red.edge_count() + blue.edge_count() == 28
    assert red.edge_count() == c.red_edge_count
    for u in range(8):
        assert red.adj_mask(u) & blue.adj_mask(u) == 0
        assert red.adj_mask(u) | blue.adj_mask(u) == (255 ^ (1 << u))
        assert red.degree(u) == bin(red.adj_mask(u)).count("1")


def test_random_is_deterministic_per_seed() -> None:
    a = EdgeColoring.random(9, random.Random(3))
    b = EdgeColoring.random(9, random.Random(3))
    other = EdgeColoring.random(9, random.Random(4))
    assert a == b
    assert a != other


@pytest.mark.parametrize(
    "payload",
    [
        b"",
        b"RMC2 3\n7\n",
        b"RMC1 -1\n0\n",
        b"RMC1 3\nzz\n",
        b"RMC1 3\n",
        b"RMC1 3\n7\nextra\n",
        b"RMC1 two\n0\n",
    ],
)
def test_parse_rejects_malformed_payloads(payload: bytes) -> None:
    with pytest.raises(DomainError):
        EdgeColoring.parse(payload)


def test_parse_rejects_out_of_range_bits() -> None:
    with pytest.raises(DomainError):
        EdgeColoring.parse(b"RMC1 3\nff\n")


@pytest.mark.parametrize("bad", [-1, -5])
def test_negative_vertex_count_rejected(bad: int) -> None:
    with pytest.raises(DomainError):
        EdgeColoring(bad)


def test_red_bits_must_fit_edge_count() -> None:
    with pytest.raises(DomainError):
        EdgeColoring(3, red_bits=1 << 3)


def test_split_rejects_negative_sides() -> None:
    with pytest.raises(InvalidSpecError):
        split_coloring(-1, 2)


def test_flip_rejects_loops_and_foreign_vertices() -> None:
    c = split_coloring(3, 1)
    with pytest.raises(DomainError):
        c.with_flipped([(0, 0)])
    with pytest.raises(DomainError):
        c.with_flipped([(0, 9)])
