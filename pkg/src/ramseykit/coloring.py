"""Red/blue edge colorings of complete graphs.

A coloring of K_n lives in a single Python integer: edge {i,j} with i < j
occupies bit ``i*(2n-i-1)/2 + (j-i-1)`` (row-major upper triangle), set for
red, clear for blue.  Blue is always the complement of red, so only the red
bitset is stored.

The on-disk format is a two-line ASCII header-plus-hex payload::

    RMC1 <n>\\n
    <hex of ceil(C(n,2)/8) bytes, high bit first>\\n

Trailing pad bits must be zero.  A red edge on K_2 serializes to
``RMC1 2\\n80\\n``.

Split colorings chi(a, b) put blue cliques on A = {0..a-1} and
B = {a..a+b-1} with all A-B edges red; optional flips toggle single edges
afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterable, Sequence

from .errors import CapabilityError, DomainError, InvalidSpecError
from .structure import SimpleGraph

RED = "red"
BLUE = "blue"
COLORS = (RED, BLUE)

CANONICAL_MAX_N = 12

MAGIC = b"RMC1"


def other_color(color: str) -> str:
    if color == RED:
        return BLUE
    if color == BLUE:
        return RED
    raise DomainError(f"unknown color {color!r}")


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Bit position of edge {i,j} in the packed representation."""
    if i > j:
        i, j = j, i
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise DomainError(f"({i},{j}) is not an edge of K_{n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def _vertex_mask(vertices: Iterable[int], n: int) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise DomainError(f"vertex {v} out of range for n={n}")
        m |= 1 << v
    return m


class EdgeColoring:
    """Immutable two-coloring of the edges of K_n."""

    __slots__ = ("n", "red_bits", "_masks")

    def __init__(self, n: int, red_bits: int = 0):
        if n < 0:
            raise DomainError("n must be nonnegative")
        if red_bits < 0 or red_bits >> pair_count(n):
            raise DomainError("red_bits has bits outside the edge range")
        self.n = n
        self.red_bits = red_bits
        self._masks: dict[str, tuple[int, ...]] = {}

    # -- construction ------------------------------------------------------

    @classmethod
    def from_red_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "EdgeColoring":
        bits = 0
        for i, j in edges:
            bits |= 1 << pair_index(n, i, j)
        return cls(n, bits)

    @classmethod
    def random(cls, n: int, rng: Random) -> "EdgeColoring":
        nbits = pair_count(n)
        return cls(n, rng.getrandbits(nbits) if nbits else 0)

    # -- queries -----------------------------------------------------------

    def is_red(self, i: int, j: int) -> bool:
        return bool(self.red_bits >> pair_index(self.n, i, j) & 1)

    def color_of(self, i: int, j: int) -> str:
        return RED if self.is_red(i, j) else BLUE

    @property
    def red_edge_count(self) -> int:
        return self.red_bits.bit_count()

    @property
    def blue_edge_count(self) -> int:
        return pair_count(self.n) - self.red_edge_count

    def red_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.is_red(i, j)]

    def adj_masks(self, color: str) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks in the given color (cached)."""
        cached = self._masks.get(color)
        if cached is not None:
            return cached
        n = self.n
        masks = [0] * n
        bits = self.red_bits
        e = 0
        for i in range(n):
            for j in range(i + 1, n):
                if bits >> e & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                e += 1
        if color == BLUE:
            full = (1 << n) - 1
            masks = [(full & ~m) & ~(1 << v) for v, m in enumerate(masks)]
        elif color != RED:
            raise DomainError(f"unknown color {color!r}")
        out = tuple(masks)
        self._masks[color] = out
        return out

    def view(self, color: str) -> "ColorView":
        if color not in COLORS:
            raise DomainError(f"unknown color {color!r}")
        return ColorView(self, color)

    def red_view(self) -> "ColorView":
        return ColorView(self, RED)

    def blue_view(self) -> "ColorView":
        return ColorView(self, BLUE)

    # -- transformations ---------------------------------------------------

    def with_flipped(self, pairs: Sequence[tuple[int, int]]) -> "EdgeColoring":
        """Toggle the listed edges, in order.  Duplicate pairs are rejected."""
        bits = self.red_bits
        seen = set()
        for i, j in pairs:
            e = pair_index(self.n, i, j)
            if e in seen:
                raise InvalidSpecError(f"duplicate flip ({i},{j})")
            seen.add(e)
            bits ^= 1 << e
        return EdgeColoring(self.n, bits)

    def complemented(self) -> "EdgeColoring":
        full = (1 << pair_count(self.n)) - 1
        return EdgeColoring(self.n, full ^ self.red_bits)

    def relabeled(self, perm: Sequence[int]) -> "EdgeColoring":
        """Relabel vertices: new edge {i,j} takes the color of {perm[i],perm[j]}."""
        if sorted(perm) != list(range(self.n)):
            raise DomainError("perm must be a permutation of the vertex set")
        bits = 0
        e = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.is_red(perm[i], perm[j]):
                    bits |= 1 << e
                e += 1
        return EdgeColoring(self.n, bits)

    # -- serialization -----------------------------------------------------

    def serialize(self) -> bytes:
        nbits = pair_count(self.n)
        buf = bytearray((nbits + 7) // 8)
        bits = self.red_bits
        e = 0
        while bits:
            if bits & 1:
                buf[e >> 3] |= 1 << (7 - (e & 7))
            bits >>= 1
            e += 1
        return MAGIC + b" " + str(self.n).encode() + b"\n" + bytes(buf).hex().encode() + b"\n"

    @classmethod
    def parse(cls, data: bytes) -> "EdgeColoring":
        lines = data.split(b"\n")
        if len(lines) != 3 or lines[2] != b"":
            raise DomainError("expected exactly two newline-terminated lines")
        header, payload = lines[0], lines[1]
        parts = header.split(b" ")
        if len(parts) != 2 or parts[0] != MAGIC:
            raise DomainError("bad magic line")
        if not parts[1].isdigit():
            raise DomainError("vertex count must be a decimal integer")
        n = int(parts[1])
        nbits = pair_count(n)
        nbytes = (nbits + 7) // 8
        if len(payload) != 2 * nbytes:
            raise DomainError(f"payload must be {2 * nbytes} hex digits for n={n}")
        if payload.lower() != payload:
            raise DomainError("payload hex must be lowercase")
        try:
            raw = bytes.fromhex(payload.decode("ascii"))
        except ValueError as exc:
            raise DomainError("payload is not valid hex") from exc
        bits = 0
        for e in range(nbits):
            if raw[e >> 3] >> (7 - (e & 7)) & 1:
                bits |= 1 << e
        # every bit beyond the edge range must be zero
        for e in range(nbits, 8 * nbytes):
            if raw[e >> 3] >> (7 - (e & 7)) & 1:
                raise DomainError("nonzero padding bits")
        return cls(n, bits)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeColoring)
            and self.n == other.n
            and self.red_bits == other.red_bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.red_bits))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, red={self.red_edge_count}, blue={self.blue_edge_count})"


class ColorView:
    """One color class of a coloring, seen as a simple graph."""

    __slots__ = ("coloring", "color")

    def __init__(self, coloring: EdgeColoring, color: str):
        self.coloring = coloring
        self.color = color

    @property
    def n(self) -> int:
        return self.coloring.n

    def adj_masks(self) -> tuple[int, ...]:
        return self.coloring.adj_masks(self.color)

    def adj_mask(self, v: int) -> int:
        return self.adj_masks()[v]

    def adjacency(self, u: int, v: int) -> bool:
        return self.coloring.color_of(u, v) == self.color

    def degree(self, u: int, within: Iterable[int] | None = None) -> int:
        m = self.adj_masks()[u]
        if within is not None:
            m &= _vertex_mask(within, self.n)
        return m.bit_count()

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj_masks()) // 2

    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, list(self.adj_masks()))

    def __repr__(self) -> str:
        return f"ColorView({self.color}, n={self.n})"


def mono_degree(view: ColorView, u: int, within: Iterable[int] | None = None) -> int:
    """Degree of u in the view's color, optionally restricted to a vertex subset."""
    return view.degree(u, within)


# ---------------------------------------------------------------------------
# split colorings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitSpec:
    """Recipe for chi(a, b): blue cliques A, B with red A-B edges, then flips."""

    a: int
    b: int
    flips: tuple[tuple[int, int], ...] = ()

    @property
    def n(self) -> int:
        return self.a + self.b

    def validate(self) -> None:
        if self.a < 0 or self.b < 0:
            raise InvalidSpecError("part sizes must be nonnegative")
        seen = set()
        for flip in self.flips:
            if len(flip) != 2:
                raise InvalidSpecError(f"flip {flip!r} is not a pair")
            i, j = flip
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise InvalidSpecError(f"flip ({i},{j}) is not an edge of K_{self.n}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InvalidSpecError(f"duplicate flip ({i},{j})")
            seen.add(key)


def construct_split(spec: SplitSpec) -> EdgeColoring:
    """Build the coloring described by a SplitSpec."""
    spec.validate()
    n = spec.n
    bits = 0
    for i in range(spec.a):
        for j in range(spec.a, n):
            bits |= 1 << pair_index(n, i, j)
    c = EdgeColoring(n, bits)
    if spec.flips:
        c = c.with_flipped(list(spec.flips))
    return c


def split_coloring(a: int, b: int, flips: Sequence[tuple[int, int]] = ()) -> EdgeColoring:
    return construct_split(SplitSpec(a, b, tuple(tuple(f) for f in flips)))


# ---------------------------------------------------------------------------
# canonical keys (isomorphism-invariant serialization)
# ---------------------------------------------------------------------------

def _refinement_order(adj: Sequence[int], n: int) -> list[int]:
    """Vertices sorted by iterated degree refinement; a good search hint."""
    colors = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        sig = []
        for v in range(n):
            m = adj[v]
            neigh = []
            while m:
                b = m & -m
                m ^= b
                neigh.append(colors[b.bit_length() - 1])
            neigh.sort()
            sig.append((colors[v], tuple(neigh)))
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if new == colors:
            break
        colors = new
    return sorted(range(n), key=lambda v: (colors[v], v))


_ROW_SENTINEL = 1 << 60


def _min_relabeling(adj: Sequence[int], n: int) -> list[int]:
    """Permutation (position -> original vertex) minimizing the adjacency string.

    Minimizes the column-major bit sequence (each placed vertex contributes
    its adjacency row to the already-placed prefix).  Branch-and-bound with
    per-level incumbent rows.  Twin vertices (identical neighborhoods apart
    from each other) generate swap automorphisms, so at any node only one
    candidate per twin group needs exploring; this keeps cliques, empty
    graphs and complete multipartite views cheap.
    """
    if n == 0:
        return []
    order_hint = _refinement_order(adj, n)
    twin = [0] * n  # twin[v]: bitmask of vertices interchangeable with v
    for v in range(n):
        for w in range(v + 1, n):
            if adj[v] & ~(1 << w) == adj[w] & ~(1 << v):
                twin[v] |= 1 << w
                twin[w] |= 1 << v
    best_rows = [_ROW_SENTINEL] * n
    best_perm: list[int] = list(order_hint)
    perm = [0] * n

    def rec(depth: int, used: int) -> None:
        nonlocal best_perm
        if depth == n:
            best_perm = perm.copy()
            return
        tried = 0
        for v in order_hint:
            if used >> v & 1:
                continue
            if twin[v] & tried:
                continue
            tried |= 1 << v
            av = adj[v]
            r = 0
            for q in range(depth):
                r = (r << 1) | (av >> perm[q] & 1)
            br = best_rows[depth]
            if r > br:
                continue
            if r < br:
                best_rows[depth] = r
                for q in range(depth + 1, n):
                    best_rows[q] = _ROW_SENTINEL
            perm[depth] = v
            rec(depth + 1, used | (1 << v))

    rec(0, 0)
    return best_perm


def canonical_key(coloring: EdgeColoring, swap_colors: bool = False) -> bytes:
    """Serialization of a canonical relabeling; equal iff colorings are isomorphic.

    With swap_colors=True the key is additionally invariant under exchanging
    red and blue.  Guarded to n <= CANONICAL_MAX_N: the search is exponential
    in the worst case even with pruning.
    """
    n = coloring.n
    if n > CANONICAL_MAX_N:
        raise CapabilityError(f"canonical_key limited to n <= {CANONICAL_MAX_N} (got {n})")
    perm = _min_relabeling(coloring.adj_masks(RED), n)
    key = coloring.relabeled(perm).serialize()
    if swap_colors:
        comp = coloring.complemented()
        perm2 = _min_relabeling(comp.adj_masks(RED), n)
        key = min(key, comp.relabeled(perm2).serialize())
    return key
