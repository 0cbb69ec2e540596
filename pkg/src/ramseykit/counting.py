"""Exact counting of paths, cycles, stars and small cliques in color views.

Counts are unlabeled copies: subgraphs, not embeddings.  A path or cycle on
a fixed vertex set is one copy regardless of traversal direction; a star is
a (center, leaf set) pair; a clique is a vertex subset.  The helpers with a
fixed start vertex count directed sequences instead and say so.

Path and cycle counting run a dynamic program over (vertex subset, endpoint)
states, layered by size so memory stays proportional to one layer.  The DP
is exact for any graph but exponential in n, hence the hard guard at
SUBSET_DP_MAX_N.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .coloring import BLUE, RED, ColorView, EdgeColoring
from .errors import CapabilityError, DomainError

SUBSET_DP_MAX_N = 24

_PATTERN_RE = re.compile(r"^([PCS])_(\d+)$|^K_?(\d+)$")


@dataclass(frozen=True)
class Pattern:
    """A target subgraph: P_k, C_k, S_k (star with k leaves) or K_k."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind == "path":
            if self.k < 1:
                raise DomainError("paths need k >= 1 vertices")
        elif self.kind == "cycle":
            if self.k < 3:
                raise DomainError("cycles need k >= 3 vertices")
        elif self.kind == "star":
            if self.k < 1:
                raise DomainError("stars need k >= 1 leaves")
        elif self.kind == "clique":
            if not 2 <= self.k <= 5:
                raise DomainError("cliques are supported for 2 <= k <= 5")
        else:
            raise DomainError(f"unknown pattern kind {self.kind!r}")

    @property
    def vertex_count(self) -> int:
        if self.kind == "star":
            return self.k + 1
        return self.k

    @property
    def label(self) -> str:
        if self.kind == "clique":
            return f"K{self.k}"
        return f"{self.kind[0].upper()}_{self.k}"

    @staticmethod
    def path(k: int) -> "Pattern":
        return Pattern("path", k)

    @staticmethod
    def cycle(k: int) -> "Pattern":
        return Pattern("cycle", k)

    @staticmethod
    def star(k: int) -> "Pattern":
        return Pattern("star", k)

    @staticmethod
    def triangle() -> "Pattern":
        return Pattern("clique", 3)

    @staticmethod
    def clique(k: int) -> "Pattern":
        return Pattern("clique", k)


def parse_pattern(text: str) -> Pattern:
    """Parse CLI pattern syntax: P_k, C_k, S_k, K3 (K_3 also accepted)."""
    m = _PATTERN_RE.match(text.strip())
    if not m:
        raise DomainError(f"cannot parse pattern {text!r}")
    if m.group(3) is not None:
        return Pattern("clique", int(m.group(3)))
    kind = {"P": "path", "C": "cycle", "S": "star"}[m.group(1)]
    return Pattern(kind, int(m.group(2)))


def _dp_guard(n: int) -> None:
    if n > SUBSET_DP_MAX_N:
        raise CapabilityError(
            f"subset DP limited to n <= {SUBSET_DP_MAX_N} (got n={n}); "
            "use sampling or structural bounds instead"
        )


# ---------------------------------------------------------------------------
# counts in a single color view
# ---------------------------------------------------------------------------

def count_paths(view: ColorView, k: int) -> int:
    """Number of k-vertex paths in the view."""
    n = view.n
    if k < 1:
        raise DomainError("k must be at least 1")
    if k == 1:
        return n
    if k > n:
        return 0
    _dp_guard(n)
    adj = view.adj_masks()
    layer: dict[tuple[int, int], int] = {(1 << v, v): 1 for v in range(n)}
    for _ in range(k - 1):
        nxt: dict[tuple[int, int], int] = {}
        get = nxt.get
        for (mask, last), cnt in layer.items():
            nbrs = adj[last] & ~mask
            while nbrs:
                b = nbrs & -nbrs
                nbrs ^= b
                key = (mask | b, b.bit_length() - 1)
                nxt[key] = get(key, 0) + cnt
        layer = nxt
    # every path was built from both ends
    return sum(layer.values()) // 2


def count_cycles(view: ColorView, k: int) -> int:
    """Number of k-vertex cycles in the view."""
    n = view.n
    if k < 3:
        raise DomainError("cycles need k >= 3")
    if k > n:
        return 0
    _dp_guard(n)
    adj = view.adj_masks()
    total = 0
    for a in range(n - k + 1):
        # anchor each cycle at its minimum vertex a; interiors stay above a
        high = -1 << (a + 1)
        layer: dict[tuple[int, int], int] = {(1 << a, a): 1}
        for _ in range(k - 1):
            nxt: dict[tuple[int, int], int] = {}
            get = nxt.get
            for (mask, last), cnt in layer.items():
                nbrs = adj[last] & ~mask & high
                while nbrs:
                    b = nbrs & -nbrs
                    nbrs ^= b
                    key = (mask | b, b.bit_length() - 1)
                    nxt[key] = get(key, 0) + cnt
            layer = nxt
        for (mask, last), cnt in layer.items():
            if adj[last] >> a & 1:
                total += cnt
    # each cycle arises in both traversal directions
    return total // 2


def count_stars(view: ColorView, k: int) -> int:
    """Number of (center, k-leaf set) stars in the view."""
    if k < 1:
        raise DomainError("stars need k >= 1 leaves")
    return sum(comb(view.degree(u), k) for u in range(view.n))


def count_triangles(view: ColorView) -> int:
    n = view.n
    adj = view.adj_masks()
    total = 0
    for u in range(n):
        rest = adj[u] >> (u + 1) << (u + 1)
        m = rest
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            total += (adj[u] & adj[v] & (-1 << (v + 1))).bit_count()
    return total


def count_cliques(view: ColorView, k: int) -> int:
    if not 2 <= k <= 5:
        raise DomainError("cliques are supported for 2 <= k <= 5")
    n = view.n
    adj = view.adj_masks()

    def rec(cand: int, depth: int, lo: int) -> int:
        if depth == 0:
            return 1
        total = 0
        m = cand & (-1 << lo)
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            total += rec(cand & adj[v], depth - 1, v + 1)
        return total

    return rec((1 << n) - 1, k, 0)


def count_in_view(view: ColorView, pattern: Pattern) -> int:
    if pattern.kind == "path":
        return count_paths(view, pattern.k)
    if pattern.kind == "cycle":
        return count_cycles(view, pattern.k)
    if pattern.kind == "star":
        return count_stars(view, pattern.k)
    if pattern.kind == "clique":
        if pattern.k == 3:
            return count_triangles(view)
        return count_cliques(view, pattern.k)
    raise DomainError(f"unknown pattern kind {pattern.kind!r}")


def count_mono(coloring: EdgeColoring, pattern: Pattern) -> int:
    """Monochromatic copies of the pattern: red count plus blue count."""
    return count_in_view(coloring.view(RED), pattern) + count_in_view(
        coloring.view(BLUE), pattern
    )


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def falling(n: int, k: int) -> int:
    """Falling factorial (n)_k; zero once the factors run out."""
    out = 1
    for i in range(k):
        out *= n - i
        if out == 0:
            return 0
    return out


def formula_split_paths(a: int, b: int, k: int) -> int:
    """Monochromatic P_k count in chi(a, b) in closed form.

    Blue lives in the cliques: ((a)_k + (b)_k)/2.  Red lives in K_{a,b}:
    (a)_{k/2} (b)_{k/2} for even k, and the symmetrized half-sum of the
    ceil/floor split for odd k.  For k = 1 each vertex is a copy in both
    views, giving 2(a+b).
    """
    if a < 0 or b < 0 or k < 0:
        raise DomainError("a, b, k must be nonnegative")
    if k == 0:
        return 0
    if k == 1:
        return 2 * (a + b)
    blue = (falling(a, k) + falling(b, k)) // 2
    if k % 2 == 0:
        red = falling(a, k // 2) * falling(b, k // 2)
    else:
        h = (k + 1) // 2
        red = (falling(a, h) * falling(b, k // 2) + falling(b, h) * falling(a, k // 2)) // 2
    return blue + red


def total_copies_in_complete(n: int, pattern: Pattern) -> int:
    """Copies of the pattern in K_n (both colors together, i.e. the ceiling
    for complementarity checks)."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    k = pattern.k
    if pattern.kind == "path":
        if k == 1:
            return n
        return comb(n, k) * _half_fact(k)
    if pattern.kind == "cycle":
        return comb(n, k) * _half_fact(k - 1)
    if pattern.kind == "star":
        return n * comb(n - 1, k)
    if pattern.kind == "clique":
        return comb(n, k)
    raise DomainError(f"unknown pattern kind {pattern.kind!r}")


def _half_fact(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out // 2 if m >= 2 else out


# ---------------------------------------------------------------------------
# directed sequence counters for fixed endpoints (used by bound checks)
# ---------------------------------------------------------------------------

def count_paths_from_vertex(adj: Sequence[int], start: int, edges: int) -> int:
    """Directed paths with `edges` edges starting at `start` (sequences)."""
    if edges < 0:
        raise DomainError("edge count must be nonnegative")

    def rec(v: int, used: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        nbrs = adj[v] & ~used
        while nbrs:
            b = nbrs & -nbrs
            nbrs ^= b
            total += rec(b.bit_length() - 1, used | b, remaining - 1)
        return total

    return rec(start, 1 << start, edges)


def count_paths_between(adj: Sequence[int], u: int, v: int, edges: int) -> int:
    """Simple u-v paths with exactly `edges` edges (counted once each)."""
    if u == v:
        raise DomainError("endpoints must differ")
    if edges < 1:
        raise DomainError("edge count must be positive")

    def rec(w: int, used: int, remaining: int) -> int:
        if remaining == 1:
            return adj[w] >> v & 1
        total = 0
        nbrs = adj[w] & ~used & ~(1 << v)
        while nbrs:
            b = nbrs & -nbrs
            nbrs ^= b
            total += rec(b.bit_length() - 1, used | b, remaining - 1)
        return total

    return rec(u, 1 << u, edges)


def count_sequences_starting_in(adj: Sequence[int], starts: Iterable[int], k: int) -> int:
    """Directed k-vertex paths whose first vertex lies in `starts`."""
    if k < 1:
        raise DomainError("k must be at least 1")
    layer: dict[tuple[int, int], int] = {(1 << v, v): 1 for v in set(starts)}
    for _ in range(k - 1):
        nxt: dict[tuple[int, int], int] = {}
        get = nxt.get
        for (mask, last), cnt in layer.items():
            nbrs = adj[last] & ~mask
            while nbrs:
                b = nbrs & -nbrs
                nbrs ^= b
                key = (mask | b, b.bit_length() - 1)
                nxt[key] = get(key, 0) + cnt
        layer = nxt
    return sum(layer.values())


# ---------------------------------------------------------------------------
# explicit copy enumeration (edge bitmasks), independent of the DP
# ---------------------------------------------------------------------------

def copy_edge_masks(pattern: Pattern, n: int) -> list[int]:
    """Edge bitmask of every copy of the pattern in K_n.

    Enumerated directly from the pattern's structure, so it doubles as an
    independent realization of the counts: a copy is monochromatic in a
    coloring exactly when its mask lands entirely inside one color class.
    """
    from .coloring import pair_index  # local to avoid a cycle at import time

    masks: list[int] = []
    k = pattern.k
    if pattern.kind == "path":
        if k == 1:
            return [0] * n
        if k > n:
            return []

        def extend(seq: list[int], used: int, mask: int) -> None:
            if len(seq) == k:
                if seq[0] < seq[-1]:
                    masks.append(mask)
                return
            for w in range(n):
                if used >> w & 1:
                    continue
                extend(seq + [w], used | (1 << w),
                       mask | (1 << pair_index(n, seq[-1], w)))

        for v in range(n):
            extend([v], 1 << v, 0)
        return masks
    if pattern.kind == "cycle":
        if k > n:
            return []

        def extend_cycle(seq: list[int], used: int, mask: int) -> None:
            if len(seq) == k:
                if seq[1] < seq[-1]:
                    masks.append(mask | (1 << pair_index(n, seq[-1], seq[0])))
                return
            for w in range(seq[0] + 1, n):
                if used >> w & 1:
                    continue
                extend_cycle(seq + [w], used | (1 << w),
                             mask | (1 << pair_index(n, seq[-1], w)))

        for v in range(n - k + 1):
            extend_cycle([v], 1 << v, 0)
        return masks
    if pattern.kind == "star":
        if k > n - 1:
            return []
        from itertools import combinations

        for center in range(n):
            others = [w for w in range(n) if w != center]
            for leaves in combinations(others, k):
                m = 0
                for leaf in leaves:
                    m |= 1 << pair_index(n, center, leaf)
                masks.append(m)
        return masks
    if pattern.kind == "clique":
        from itertools import combinations

        if k > n:
            return []
        for verts in combinations(range(n), k):
            m = 0
            for i, u in enumerate(verts):
                for v in verts[i + 1:]:
                    m |= 1 << pair_index(n, u, v)
            masks.append(m)
        return masks
    raise DomainError(f"unknown pattern kind {pattern.kind!r}")
