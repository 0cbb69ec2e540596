"""Plain-graph machinery: matchings, edge-count bounds, disjoint path families.

Graphs here are undirected simple graphs on vertex set ``0..n-1`` with
adjacency stored as one Python-int bitmask per vertex.  Everything in this
module is color-agnostic; two-coloring logic lives in :mod:`ramseykit.coloring`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import CapabilityError, DomainError

BACKTRACK_MAX_N = 14
BACKTRACK_MAX_PATHS = 200_000


def _bits(mask: int) -> Iterable[int]:
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


class SimpleGraph:
    """Undirected simple graph with bitmask adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        self.n = n
        self.adj = list(adj) if adj is not None else [0] * n
        if len(self.adj) != n:
            raise DomainError("adjacency list length must equal n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        g = cls(n)
        for u, v in edges:
            g._add_edge(u, v)
        return g

    def _add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise DomainError("self-loops are not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise DomainError(f"edge ({u},{v}) out of range for n={self.n}")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def adj_mask(self, v: int) -> int:
        return self.adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in _bits(rest):
                out.append((u, u + 1 + off))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def induced(self, vertices: Sequence[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph plus the new-index -> old-index mapping."""
        verts = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(verts)}
        sub = SimpleGraph(len(verts))
        for i, v in enumerate(verts):
            m = 0
            a = self.adj[v]
            for w in verts:
                if a >> w & 1:
                    m |= 1 << pos[w]
            sub.adj[i] = m
        return sub, verts

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, [(full & ~self.adj[v]) & ~(1 << v) for v in range(self.n)])

    def ball(self, v: int, radius: int) -> list[int]:
        """Vertices at BFS distance <= radius from v (v included)."""
        seen = 1 << v
        frontier = [v]
        for _ in range(radius):
            nxt = 0
            for u in frontier:
                nxt |= self.adj[u] & ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = list(_bits(nxt))
        return list(_bits(seen))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleGraph) and self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edge_count})"


# ---------------------------------------------------------------------------
# maximum matching (blossom algorithm, general graphs)
# ---------------------------------------------------------------------------

def max_matching(g: SimpleGraph) -> list[tuple[int, int]]:
    """Maximum-cardinality matching via blossom contraction.

    Standard O(V^3) Edmonds implementation: repeated alternating-tree BFS
    with base[] contraction of odd cycles.
    """
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    # greedy seed cuts the number of augmenting searches roughly in half
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used_flag = [False] * n
        x = a
        while True:
            x = base[x]
            used_flag[x] = True
            if match[x] == -1:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if used_flag[y]:
                return y
            y = p[match[y]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> int:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1:
            end = find_path(v)
            while end != -1:
                pv = p[end]
                ppv = match[pv]
                match[end] = pv
                match[pv] = end
                end = ppv

    return sorted((v, match[v]) for v in range(n) if match[v] > v)


def matching_number(g: SimpleGraph) -> int:
    return len(max_matching(g))


# ---------------------------------------------------------------------------
# edge-count bounds for graphs with bounded matching number
# ---------------------------------------------------------------------------

def erdos_gallai_max_edges(n: int, k: int) -> int:
    """Largest edge count of an n-vertex graph with matching number <= k."""
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    if n <= 2 * k + 1:
        # every graph this small has matching number <= k
        return comb(n, 2)
    return max(comb(2 * k + 1, 2), comb(k, 2) + k * (n - k))


@dataclass(frozen=True)
class EdgeBoundReport:
    matching_number: int
    edge_count: int
    bound: int
    ok: bool


def verify_erdos_gallai(g: SimpleGraph) -> EdgeBoundReport:
    """Check e(G) against the extremal bound at G's own matching number."""
    nu = matching_number(g)
    bound = erdos_gallai_max_edges(g.n, nu)
    e = g.edge_count
    return EdgeBoundReport(nu, e, bound, e <= bound)


def konig_edge_bound_check(
    g: SimpleGraph, parts: tuple[Sequence[int], Sequence[int]]
) -> EdgeBoundReport:
    """Bipartite consequence: no matching of size k+1 forces e(G) <= k * max part size.

    ``parts`` must partition the vertex set and carry no internal edges.
    """
    x, y = (sorted(set(parts[0])), sorted(set(parts[1])))
    if sorted(x + y) != list(range(g.n)):
        raise DomainError("declared parts must partition the vertex set")
    for side in (x, y):
        mask = 0
        for v in side:
            mask |= 1 << v
        for v in side:
            if g.adj[v] & mask:
                raise DomainError("declared part contains an internal edge")
    nu = matching_number(g)
    bound = nu * max(len(x), len(y)) if g.n else 0
    e = g.edge_count
    return EdgeBoundReport(nu, e, bound, e <= bound)


# ---------------------------------------------------------------------------
# internally-disjoint bounded-length path families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DisjointPathCert:
    """A family of internally-disjoint u-v paths, each of length <= max_len."""

    u: int
    v: int
    max_len: int
    paths: tuple[tuple[int, ...], ...]
    exact: bool  # True when len(paths) is the true maximum

    @property
    def count(self) -> int:
        return len(self.paths)

    def validate(self, g: SimpleGraph) -> None:
        seen_interior = 0
        seen_paths = set()
        for path in self.paths:
            if len(path) < 2 or path[0] != self.u or path[-1] != self.v:
                raise DomainError(f"path {path} does not run from {self.u} to {self.v}")
            if len(path) - 1 > self.max_len:
                raise DomainError(f"path {path} exceeds length bound {self.max_len}")
            if len(set(path)) != len(path):
                raise DomainError(f"path {path} repeats a vertex")
            for a, b in zip(path, path[1:]):
                if not g.has_edge(a, b):
                    raise DomainError(f"pair ({a},{b}) in {path} is not an edge")
            interior = 0
            for w in path[1:-1]:
                if w in (self.u, self.v):
                    raise DomainError(f"path {path} passes through an endpoint")
                interior |= 1 << w
            if interior & seen_interior:
                raise DomainError(f"path {path} shares an interior vertex")
            seen_interior |= interior
            key = min(path, path[::-1])
            if key in seen_paths:
                raise DomainError(f"path {path} listed twice")
            seen_paths.add(key)


def _bfs_short_path(
    g: SimpleGraph, u: int, v: int, banned: int, max_len: int, allow_direct: bool
) -> tuple[int, ...] | None:
    """Shortest u-v path avoiding banned interiors; None if none within max_len."""
    if allow_direct and max_len >= 1 and g.has_edge(u, v):
        return (u, v)
    parent = {u: -1}
    frontier = [u]
    dist = 0
    reachable = (1 << v) | ~banned
    while frontier and dist < max_len:
        dist += 1
        nxt = []
        for w in frontier:
            cand = g.adj[w] & reachable
            for t in _bits(cand):
                if t in parent:
                    continue
                if t == v:
                    if dist == 1 and not allow_direct:
                        continue
                    path = [v, w]
                    while path[-1] != u:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                parent[t] = w
                nxt.append(t)
        frontier = nxt
    return None


def _greedy_paths(
    g: SimpleGraph, u: int, v: int, max_len: int, t_target: int | None
) -> list[tuple[int, ...]]:
    paths: list[tuple[int, ...]] = []
    banned = (1 << u) | (1 << v)
    allow_direct = True
    while t_target is None or len(paths) < t_target:
        path = _bfs_short_path(g, u, v, banned, max_len, allow_direct)
        if path is None:
            break
        if len(path) == 2:
            allow_direct = False
        for w in path[1:-1]:
            banned |= 1 << w
        paths.append(path)
    return paths


def _exact_le4(g: SimpleGraph, u: int, v: int, max_len: int) -> list[tuple[int, ...]]:
    """Maximum family for length bound <= 4 via role reduction.

    Interiors can be normalized so that length-2 paths use common neighbors,
    the first interior lies in A = N(u)\\N(v), the last in B = N(v)\\N(u),
    and any middle vertex avoids N(u) and N(v).  Length-3 then reduces to an
    A-B matching; length-4 adds unit-capacity middles, i.e. a small max-flow.
    """
    paths: list[tuple[int, ...]] = []
    if max_len >= 1 and g.has_edge(u, v):
        paths.append((u, v))
    if max_len == 1:
        return paths
    nu, nv = g.adj[u], g.adj[v]
    ends = (1 << u) | (1 << v)
    common = nu & nv & ~ends
    for c in _bits(common):
        paths.append((u, c, v))
    if max_len == 2:
        return paths
    a_side = list(_bits(nu & ~nv & ~ends))
    b_side = list(_bits(nv & ~nu & ~ends))
    if max_len == 3:
        restricted = SimpleGraph(g.n)
        for a in a_side:
            for b in b_side:
                if g.has_edge(a, b):
                    restricted._add_edge(a, b)
        for a, b in max_matching(restricted):
            if a in a_side:
                paths.append((u, a, b, v))
            else:
                paths.append((u, b, a, v))
        return paths
    if max_len != 4:
        raise DomainError("role reduction applies to max_len <= 4 only")
    middle = [w for w in range(g.n) if not ((nu | nv | ends) >> w & 1)]
    # unit-capacity flow: S -> a -> (z) -> b -> T
    source, sink = ("S",), ("T",)
    cap: dict[tuple, dict[tuple, int]] = {source: {}, sink: {}}
    forward: dict[tuple, list[tuple]] = {}

    def arc(x: tuple, y: tuple) -> None:
        cap.setdefault(x, {})[y] = 1
        cap.setdefault(y, {}).setdefault(x, 0)
        forward.setdefault(x, []).append(y)

    for a in a_side:
        arc(source, ("a", a))
    for b in b_side:
        arc(("b", b), sink)
    for a in a_side:
        for b in b_side:
            if g.has_edge(a, b):
                arc(("a", a), ("b", b))
    for z in middle:
        arc(("zi", z), ("zo", z))
        for a in a_side:
            if g.has_edge(a, z):
                arc(("a", a), ("zi", z))
        for b in b_side:
            if g.has_edge(z, b):
                arc(("zo", z), ("b", b))

    def augment() -> bool:
        prev: dict[tuple, tuple] = {source: source}
        q = deque([source])
        while q:
            x = q.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in prev:
                    prev[y] = x
                    if y == sink:
                        while y != source:
                            x = prev[y]
                            cap[x][y] -= 1
                            cap[y][x] += 1
                            y = x
                        return True
                    q.append(y)
        return False

    while augment():
        pass

    def used(x: tuple, y: tuple) -> bool:
        return cap[x][y] == 0  # unit forward arc is saturated iff it carries flow

    for a in a_side:
        if not used(source, ("a", a)):
            continue
        node: tuple = ("a", a)
        hops = [a]
        while node != sink:
            for y in forward[node]:
                if used(node, y):
                    cap[node][y] = 1  # consume so shared arcs are not reused
                    node = y
                    break
            else:
                raise AssertionError("flow decomposition lost an arc")
            if node[0] == "zo" or node == sink:
                continue
            hops.append(node[1])
            if node[0] == "zi":
                node = ("zo", node[1])
        paths.append(tuple([u] + hops + [v]))
    return paths


def _enumerate_short_paths(g: SimpleGraph, u: int, v: int, max_len: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    limit = BACKTRACK_MAX_PATHS

    def extend(w: int, used: int, path: list[int]) -> None:
        if len(out) > limit:
            raise CapabilityError(
                f"more than {limit} candidate paths; backtracking mode is infeasible here"
            )
        if g.has_edge(w, v):
            out.append(tuple(path + [v]))
        if len(path) > max_len - 1:
            return
        cand = g.adj[w] & ~used & ~(1 << v)
        for t in _bits(cand):
            path.append(t)
            extend(t, used | (1 << t), path)
            path.pop()

    if max_len >= 1:
        extend(u, (1 << u), [u])
    return out


def _exact_backtracking(g: SimpleGraph, u: int, v: int, max_len: int) -> list[tuple[int, ...]]:
    """Exact maximum family by packing enumerated candidate paths.

    Exponential in the worst case; guarded to n <= BACKTRACK_MAX_N.
    """
    if g.n > BACKTRACK_MAX_N:
        raise CapabilityError(
            f"exact packing limited to n <= {BACKTRACK_MAX_N} (got n={g.n})"
        )
    cands = _enumerate_short_paths(g, u, v, max_len)
    cands.sort(key=len)
    masks = []
    for path in cands:
        m = 0
        for w in path[1:-1]:
            m |= 1 << w
        masks.append(m)
    best: list[int] = []

    def pack(i: int, used: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) + (len(cands) - i) <= len(best):
            return
        if i == len(cands):
            if len(chosen) > len(best):
                best = chosen.copy()
            return
        if masks[i] & used == 0:
            chosen.append(i)
            pack(i + 1, used | masks[i], chosen)
            chosen.pop()
        pack(i + 1, used, chosen)

    pack(0, 0, [])
    return [cands[i] for i in best]


def disjoint_short_paths(
    g: SimpleGraph,
    u: int,
    v: int,
    max_len: int,
    t_target: int | None = None,
    method: str = "greedy",
) -> DisjointPathCert:
    """Internally-disjoint u-v paths of length <= max_len.

    method="greedy": shortest-first extraction; a valid family and hence a
    lower bound, not necessarily maximum.  Stops once t_target paths are found.

    method="exact": true maximum.  Polynomial for max_len <= 4 (common
    neighbors, then an A-B matching, then a unit-capacity flow with middles);
    for max_len >= 5 exhaustive packing guarded to n <= BACKTRACK_MAX_N.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise DomainError("u and v must be distinct vertices of g")
    if max_len < 1:
        raise DomainError("max_len must be at least 1")
    if method == "greedy":
        found = _greedy_paths(g, u, v, max_len, t_target)
        return DisjointPathCert(u, v, max_len, tuple(found), exact=False)
    if method == "exact":
        if max_len <= 4:
            found = _exact_le4(g, u, v, max_len)
        else:
            found = _exact_backtracking(g, u, v, max_len)
        return DisjointPathCert(u, v, max_len, tuple(found), exact=True)
    raise DomainError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# pairwise well-connectedness over a vertex subset
# ---------------------------------------------------------------------------

@dataclass
class WellConnectedReport:
    """Outcome of checking t internally-disjoint short paths for all pairs in W.

    status is "certified" (every pair has a verified family of t paths),
    "refuted" (some pair provably has fewer; failing_pair and failing_count
    identify it), or "unknown" (greedy fell short and no exact mode applied).
    """

    status: str
    t: int
    max_len: int
    witness_set: tuple[int, ...]
    certificates: dict[tuple[int, int], DisjointPathCert] = field(default_factory=dict)
    failing_pair: tuple[int, int] | None = None
    failing_count: int | None = None
    unknown_pairs: list[tuple[int, int]] = field(default_factory=list)


def well_connected_check(
    g: SimpleGraph, witness_set: Sequence[int], t: int, max_len: int
) -> WellConnectedReport:
    """Decide whether every pair in witness_set is joined by t disjoint short paths.

    Greedy families certify pairs cheaply; a pair the greedy cannot certify
    escalates to an exact mode when one applies (max_len <= 4, or small n).
    The verdict is three-valued so that an out-of-reach exact computation
    yields "unknown" rather than a false refutation.
    """
    ws = sorted(set(witness_set))
    if any(not 0 <= w < g.n for w in ws):
        raise DomainError("witness_set must be vertices of g")
    if t < 1:
        raise DomainError("t must be at least 1")
    report = WellConnectedReport("certified", t, max_len, tuple(ws))
    for i, u in enumerate(ws):
        for v in ws[i + 1:]:
            cert = disjoint_short_paths(g, u, v, max_len, t_target=t, method="greedy")
            if cert.count >= t:
                report.certificates[(u, v)] = cert
                continue
            try:
                cert = disjoint_short_paths(g, u, v, max_len, method="exact")
            except CapabilityError:
                report.unknown_pairs.append((u, v))
                continue
            if cert.count >= t:
                report.certificates[(u, v)] = cert
            else:
                report.status = "refuted"
                report.failing_pair = (u, v)
                report.failing_count = cert.count
                return report
    if report.unknown_pairs:
        report.status = "unknown"
    return report
