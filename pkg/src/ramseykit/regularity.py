"""Density, regularity, reduced graphs, and stability analysis.

This module supplies the vocabulary for edge-density arguments at desk
scale: exact rational pair densities, an exhaustive epsilon-regularity
checker (with a one-sided sampling fallback for larger parts), reduced
graphs over a vertex partition, a matching-based dichotomy on reduced
graphs, a detector for near-split colorings, and numeric checkers that
compare closed-form lower bounds for bipartite path counts against
exact counts.

Conventions
-----------
Densities are computed with exact rational arithmetic (`fractions.Fraction`)
and all verdicts are decided on rationals; floats appear only in displayed
bounds.  Float parameters are interpreted through their shortest decimal
representation (``Fraction(str(x))``) so that e.g. ``0.05`` means 1/20.

The density between disjoint sets X, Y is e(X,Y)/(|X||Y|).  The density
within a single set X is d(X,X) = 2e(X)/|X|^2 (every inner edge counted
as two ordered pairs).  The near-split detector is the one exception: it
judges the inside-A condition by induced-subgraph density e(A)/C(|A|,2),
which is the natural reading for "the graph G[A] has density at least
1 - alpha" and the one under which a monochromatic clique has density 1.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterable, NamedTuple, Sequence

from .coloring import BLUE, RED, ColorView, EdgeColoring, other_color
from .counting import count_paths_between, count_paths_from_vertex, falling
from .errors import CapabilityError, DomainError
from .structure import SimpleGraph, max_matching

EXACT_REGULARITY_MAX = 14
PATH_WORK_LIMIT = 20_000_000


def as_fraction(x: object) -> Fraction:
    """Exact rational view of a parameter.

    Ints and Fractions pass through; floats are read via their shortest
    decimal repr so that 0.3 means 3/10, not the nearest binary double.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, float, str)):
        raise DomainError(f"cannot interpret {x!r} as an exact rational")
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DomainError("parameters must be finite")
        return Fraction(str(x))
    return Fraction(x)


def _vertex_mask(vertices: Iterable[int], n: int) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise DomainError(f"vertex {v} out of range for n={n}")
        if m >> v & 1:
            raise DomainError(f"vertex {v} repeated")
        m |= 1 << v
    return m


def _cross_edges(adj: Sequence[int], xs: Sequence[int], ymask: int) -> int:
    """Ordered-pair edge count from xs into the set with bitmask ymask."""
    return sum((adj[x] & ymask).bit_count() for x in xs)


# ---------------------------------------------------------------------------
# pair density
# ---------------------------------------------------------------------------


def pair_density(g: SimpleGraph, xs: Sequence[int], ys: Sequence[int]) -> Fraction:
    """Edge density d(X,Y) = e(X,Y)/(|X||Y|) as an exact rational.

    Overlapping sets are handled by counting ordered pairs, so
    d(X,X) = 2e(X)/|X|^2.  Use float() on the result for display.
    """
    if not xs or not ys:
        raise DomainError("density needs nonempty vertex sets")
    xmask = _vertex_mask(xs, g.n)
    ymask = _vertex_mask(ys, g.n)
    ordered = sum((g.adj[x] & ymask).bit_count() for x in _iter_bits(xmask))
    return Fraction(ordered, xmask.bit_count() * ymask.bit_count())


def _iter_bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _ceil_frac(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


# ---------------------------------------------------------------------------
# epsilon-regularity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegularityResult:
    """Outcome of the exhaustive regularity check.

    `deviation` is the largest |d(U,V) - d(X,Y)| over all qualifying
    subset pairs; `witness` is a worst violating pair (U, V) when the
    pair is irregular, else None.
    """

    regular: bool
    eps: Fraction
    base_density: Fraction
    deviation: Fraction
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None


def _check_pair_inputs(
    g: SimpleGraph, xs: Sequence[int], ys: Sequence[int], eps: Fraction
) -> tuple[list[int], list[int]]:
    if eps <= 0:
        raise DomainError("eps must be positive")
    if not xs or not ys:
        raise DomainError("parts must be nonempty")
    xmask = _vertex_mask(xs, g.n)
    ymask = _vertex_mask(ys, g.n)
    if xmask & ymask:
        raise DomainError("parts must be disjoint")
    return sorted(xs), sorted(ys)


def eps_regular_exact(
    g: SimpleGraph, xs: Sequence[int], ys: Sequence[int], eps: object
) -> RegularityResult:
    """Exhaustive regularity test for a disjoint pair (X, Y).

    The pair is eps-regular when every U subset of X, V subset of Y with
    |U| >= eps|X| and |V| >= eps|Y| satisfies |d(U,V) - d(X,Y)| <= eps.
    Subsets of the smaller side are enumerated; on the other side only
    extreme subsets of each size matter (take the s vertices of largest,
    respectively smallest, degree into U), so the check stays exact while
    visiting O(2^min * max log max) states.  All comparisons are exact.
    """
    epsf = as_fraction(eps)
    xs_s, ys_s = _check_pair_inputs(g, xs, ys, epsf)
    if len(xs_s) > EXACT_REGULARITY_MAX or len(ys_s) > EXACT_REGULARITY_MAX:
        raise CapabilityError(
            f"exact regularity is limited to parts of size {EXACT_REGULARITY_MAX}; "
            "use eps_regular_sample for evidence at larger sizes"
        )
    swapped = len(ys_s) < len(xs_s)
    enum_side, scan_side = (ys_s, xs_s) if swapped else (xs_s, ys_s)

    total = _cross_edges(g.adj, xs_s, _vertex_mask(ys_s, g.n))
    nx, ny = len(xs_s), len(ys_s)
    base = Fraction(total, nx * ny)

    enum_min = _ceil_frac(epsf * len(enum_side))
    scan_min = _ceil_frac(epsf * len(scan_side))
    ne = len(enum_side)
    ns = len(scan_side)

    worst_dev = Fraction(0)
    worst_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    scan_masks = [1 << w for w in scan_side]
    adj = g.adj
    for umask in range(1, 1 << ne):
        u_size = umask.bit_count()
        if u_size < enum_min:
            continue
        uverts = [enum_side[i] for i in _iter_bits(umask)]
        usub = 0
        for w in uverts:
            usub |= 1 << w
        degs = sorted(
            ((adj[w] & usub).bit_count(), w) for w in scan_side
        )
        prefix = [0]
        for dval, _ in degs:
            prefix.append(prefix[-1] + dval)
        e_all = prefix[-1]
        for s in range(max(scan_min, 1), ns + 1):
            for e_uv, pick in (
                (e_all - prefix[ns - s], degs[ns - s :]),
                (prefix[s], degs[:s]),
            ):
                # |e/(u s) - base| vs eps, cross-multiplied exactly
                dev = abs(Fraction(e_uv, u_size * s) - base)
                if dev > worst_dev:
                    worst_dev = dev
                    if dev > epsf:
                        vtuple = tuple(sorted(w for _, w in pick))
                        utuple = tuple(sorted(uverts))
                        worst_pair = (vtuple, utuple) if swapped else (utuple, vtuple)
    regular = worst_dev <= epsf
    return RegularityResult(
        regular=regular,
        eps=epsf,
        base_density=base,
        deviation=worst_dev,
        witness=None if regular else worst_pair,
    )


@dataclass(frozen=True)
class SampleVerdict:
    """Evidence-level outcome of randomized regularity probing.

    `status` is "violated" (with a concrete witness, refuting regularity)
    or "no-violation-found" (evidence only, never proof).  The object
    refuses boolean coercion so absence of violations cannot silently be
    consumed as "regular".
    """

    status: str
    eps: Fraction
    base_density: Fraction
    trials: int
    deviation: Fraction | None = None
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        raise TypeError(
            "SampleVerdict is evidence-level; test .status explicitly"
        )


def eps_regular_sample(
    g: SimpleGraph,
    xs: Sequence[int],
    ys: Sequence[int],
    eps: object,
    trials: int = 2000,
    seed: int = 0,
) -> SampleVerdict:
    """One-sided randomized regularity probe.

    Each trial samples a qualifying subset of one side uniformly at
    random and pairs it with its extremal counterparts on the other
    side (for every admissible size, the vertices of largest and of
    smallest degree into the sampled subset), which dominate every
    other choice of counterpart.  Any deviation beyond eps refutes
    regularity with a verified witness.  Finding none is reported as
    "no-violation-found" and must not be read as "regular".
    """
    epsf = as_fraction(eps)
    xs_s, ys_s = _check_pair_inputs(g, xs, ys, epsf)
    if trials < 0:
        raise DomainError("trials must be nonnegative")
    nx, ny = len(xs_s), len(ys_s)
    total = _cross_edges(g.adj, xs_s, _vertex_mask(ys_s, g.n))
    base = Fraction(total, nx * ny)
    u_min = _ceil_frac(epsf * nx)
    v_min = _ceil_frac(epsf * ny)
    if u_min > nx or v_min > ny:
        return SampleVerdict(
            status="no-violation-found", eps=epsf, base_density=base, trials=0
        )
    rng = Random(seed)
    adj = g.adj
    for t in range(trials):
        swapped = t % 2 == 1
        side, other = (ys_s, xs_s) if swapped else (xs_s, ys_s)
        s_lo = max(v_min if swapped else u_min, 1)
        o_lo = max(u_min if swapped else v_min, 1)
        size = rng.randint(s_lo, len(side))
        sample = rng.sample(side, size)
        smask = 0
        for w in sample:
            smask |= 1 << w
        degs = sorted(((adj[w] & smask).bit_count(), w) for w in other)
        no = len(other)
        prefix = [0]
        for dval, _ in degs:
            prefix.append(prefix[-1] + dval)
        for s in range(o_lo, no + 1):
            for e_uv, pick in (
                (prefix[no] - prefix[no - s], degs[no - s :]),
                (prefix[s], degs[:s]),
            ):
                dev = abs(Fraction(e_uv, size * s) - base)
                if dev > epsf:
                    ctuple = tuple(sorted(w for _, w in pick))
                    stuple = tuple(sorted(sample))
                    witness = (ctuple, stuple) if swapped else (stuple, ctuple)
                    return SampleVerdict(
                        status="violated",
                        eps=epsf,
                        base_density=base,
                        trials=t + 1,
                        deviation=dev,
                        witness=witness,
                    )
    return SampleVerdict(
        status="no-violation-found", eps=epsf, base_density=base, trials=trials
    )


class DegreeDeviationReport(NamedTuple):
    count_high: int
    count_low: int
    passed: bool


def degree_deviation_check(
    g: SimpleGraph,
    xs: Sequence[int],
    ys: Sequence[int],
    d: object,
    eps: object,
) -> DegreeDeviationReport:
    """Count X-vertices whose degree into Y strays beyond (d +- eps)|Y|.

    Passes when both the high count (degree > (d+eps)|Y|) and the low
    count (degree < (d-eps)|Y|) are strictly below eps|X|, the degree
    distribution every regular pair must exhibit.
    """
    df = as_fraction(d)
    epsf = as_fraction(eps)
    if not xs or not ys:
        raise DomainError("parts must be nonempty")
    ymask = _vertex_mask(ys, g.n)
    ny = ymask.bit_count()
    hi = (df + epsf) * ny
    lo = (df - epsf) * ny
    count_high = 0
    count_low = 0
    for x in xs:
        deg = (g.adj[x] & ymask).bit_count()
        if deg > hi:
            count_high += 1
        elif deg < lo:
            count_low += 1
    limit = epsf * len(xs)
    passed = count_high < limit and count_low < limit
    return DegreeDeviationReport(count_high, count_low, passed)


# ---------------------------------------------------------------------------
# vertex partitions and reduced graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty vertex sets covering a subset of [0, n)."""

    n: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = 0
        for part in self.parts:
            if not part:
                raise DomainError("parts must be nonempty")
            m = _vertex_mask(part, self.n)
            if m & seen:
                raise DomainError("parts must be disjoint")
            seen |= m

    @classmethod
    def from_parts(cls, n: int, parts: Iterable[Sequence[int]]) -> "VertexPartition":
        return cls(n, tuple(tuple(sorted(p)) for p in parts))

    @classmethod
    def consecutive(cls, n: int, parts_count: int) -> "VertexPartition":
        """Split [0,n) into `parts_count` consecutive near-equal parts."""
        if parts_count <= 0 or parts_count > n:
            raise DomainError("need 1 <= parts_count <= n")
        q, r = divmod(n, parts_count)
        parts = []
        start = 0
        for i in range(parts_count):
            size = q + (1 if i < r else 0)
            parts.append(tuple(range(start, start + size)))
            start += size
        return cls(n, tuple(parts))

    @classmethod
    def of_size(cls, n: int, size: int) -> "VertexPartition":
        """Consecutive parts of exactly `size`; leftover vertices uncovered."""
        if size <= 0 or size > n:
            raise DomainError("need 1 <= size <= n")
        count = n // size
        parts = tuple(
            tuple(range(i * size, (i + 1) * size)) for i in range(count)
        )
        return cls(n, parts)

    @property
    def equitable(self) -> bool:
        sizes = [len(p) for p in self.parts]
        return not sizes or max(sizes) - min(sizes) <= 1

    @property
    def covered(self) -> tuple[int, ...]:
        return tuple(sorted(v for p in self.parts for v in p))

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class PairAnnotation:
    """Per-pair record inside a reduced graph.

    `regular` maps color -> verdict string: "regular"/"irregular" in
    exact mode, "no-violation-found"/"violated" in sample mode (the
    latter are evidence-level, marked by `evidence_only`).
    """

    i: int
    j: int
    density: dict[str, Fraction]
    regular: dict[str, str]
    evidence_only: bool

    def admits(self, color: str, d: Fraction) -> bool:
        return (
            self.regular[color] in ("regular", "no-violation-found")
            and self.density[color] >= d
        )


@dataclass(frozen=True)
class ReducedGraph:
    """Reduced graph of a coloring over a vertex partition.

    Part i and part j are joined in a color when the pair was judged
    eps-regular in that color's graph with density at least d.  A pair
    may carry both colors, one, or none.
    """

    M: int
    part_sizes: tuple[int, ...]
    red_edges: frozenset[tuple[int, int]]
    blue_edges: frozenset[tuple[int, int]]
    annotations: dict[tuple[int, int], PairAnnotation]
    eps: Fraction
    d: Fraction
    mode: str

    def edges(self, color: str) -> frozenset[tuple[int, int]]:
        if color == RED:
            return self.red_edges
        if color == BLUE:
            return self.blue_edges
        raise DomainError(f"unknown color {color!r}")

    def graph(self, color: str) -> SimpleGraph:
        return SimpleGraph.from_edges(self.M, self.edges(color))


def _pair_seed(seed: int, i: int, j: int, color: str) -> int:
    digest = hashlib.blake2b(
        f"{seed}:{i}:{j}:{color}".encode(), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big")


def _annotate_pair(
    coloring: EdgeColoring,
    parts: tuple[tuple[int, ...], ...],
    i: int,
    j: int,
    eps: Fraction,
    mode: str,
    trials: int,
    seed: int,
) -> PairAnnotation:
    density: dict[str, Fraction] = {}
    regular: dict[str, str] = {}
    for color in (RED, BLUE):
        view = ColorView(coloring, color)
        gc = view.graph()
        density[color] = pair_density(gc, parts[i], parts[j])
        if mode == "exact":
            res = eps_regular_exact(gc, parts[i], parts[j], eps)
            regular[color] = "regular" if res.regular else "irregular"
        else:
            verdict = eps_regular_sample(
                gc,
                parts[i],
                parts[j],
                eps,
                trials=trials,
                seed=_pair_seed(seed, i, j, color),
            )
            regular[color] = verdict.status
    return PairAnnotation(
        i=i, j=j, density=density, regular=regular, evidence_only=mode != "exact"
    )


def _pair_job(args: tuple) -> tuple[tuple[int, int], PairAnnotation]:
    n, red_bits, parts, i, j, eps, mode, trials, seed = args
    coloring = EdgeColoring(n, red_bits)
    return (i, j), _annotate_pair(coloring, parts, i, j, eps, mode, trials, seed)


def build_reduced(
    coloring: EdgeColoring,
    partition: VertexPartition,
    eps: object,
    d: object,
    mode: str = "exact",
    trials: int = 2000,
    seed: int = 0,
    threads: int = 1,
) -> ReducedGraph:
    """Annotated reduced graph of a coloring over a partition.

    In exact mode every part pair is exhaustively tested for regularity
    in each color (part sizes capped at EXACT_REGULARITY_MAX); in sample
    mode the verdicts are evidence-level and flagged as such.  Pairs are
    independent, so `threads` > 1 distributes them over processes.
    """
    if mode not in ("exact", "sample"):
        raise DomainError("mode must be 'exact' or 'sample'")
    if partition.n != coloring.n:
        raise DomainError("partition and coloring disagree on n")
    epsf = as_fraction(eps)
    df = as_fraction(d)
    parts = partition.parts
    m = len(parts)
    if mode == "exact":
        oversized = [len(p) for p in parts if len(p) > EXACT_REGULARITY_MAX]
        if oversized:
            raise CapabilityError(
                f"exact mode caps part size at {EXACT_REGULARITY_MAX}; "
                "use mode='sample'"
            )
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    annotations: dict[tuple[int, int], PairAnnotation] = {}
    if threads > 1 and len(pairs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        jobs = [
            (coloring.n, coloring.red_bits, parts, i, j, epsf, mode, trials, seed)
            for i, j in pairs
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for key, ann in pool.map(_pair_job, jobs):
                annotations[key] = ann
    else:
        for i, j in pairs:
            annotations[(i, j)] = _annotate_pair(
                coloring, parts, i, j, epsf, mode, trials, seed
            )
    red = frozenset(k for k, a in annotations.items() if a.admits(RED, df))
    blue = frozenset(k for k, a in annotations.items() if a.admits(BLUE, df))
    return ReducedGraph(
        M=m,
        part_sizes=tuple(len(p) for p in parts),
        red_edges=red,
        blue_edges=blue,
        annotations=annotations,
        eps=epsf,
        d=df,
        mode=mode,
    )


# ---------------------------------------------------------------------------
# matching dichotomy on reduced graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DichotomyVerdict:
    """Outcome of the large-matching search on a reduced graph.

    When `case1` holds, `matching` is a monochromatic matching in
    `color` covering `covered` >= (2/3 + lam) * M vertices; for blue the
    matched vertices all lie within distance three of `core`.
    """

    case1: bool
    color: str | None
    matching: tuple[tuple[int, int], ...]
    core: int | None
    covered: int
    threshold: Fraction
    diagnostics: dict[str, object] = field(default_factory=dict)


def dichotomy_classify(rg: ReducedGraph, lam: object) -> DichotomyVerdict:
    """Search a reduced graph for the large monochromatic matching case.

    First looks for a red matching covering at least (2/3 + lam) * M
    vertices; failing that, for a blue matching of the same size whose
    matched vertices all sit within distance three of some single
    vertex.  Returns certificates, or a not-case1 verdict with the best
    coverage found per color.
    """
    lamf = as_fraction(lam)
    threshold = (Fraction(2, 3) + lamf) * rg.M

    red_graph = rg.graph(RED)
    red_matching = max_matching(red_graph)
    red_cov = 2 * len(red_matching)
    if red_cov >= threshold:
        return DichotomyVerdict(
            case1=True,
            color=RED,
            matching=tuple(sorted(red_matching)),
            core=None,
            covered=red_cov,
            threshold=threshold,
            diagnostics={"red_covered": red_cov},
        )

    blue_graph = rg.graph(BLUE)
    best_core = None
    best_cov = -1
    best_matching: tuple[tuple[int, int], ...] = ()
    for v in range(rg.M):
        ball = blue_graph.ball(v, 3)
        sub, verts = blue_graph.induced(ball)
        matching = max_matching(sub)
        cov = 2 * len(matching)
        if cov > best_cov:
            best_cov = cov
            best_core = v
            best_matching = tuple(
                sorted((min(verts[a], verts[b]), max(verts[a], verts[b])) for a, b in matching)
            )
        if cov >= threshold:
            return DichotomyVerdict(
                case1=True,
                color=BLUE,
                matching=best_matching,
                core=v,
                covered=cov,
                threshold=threshold,
                diagnostics={"red_covered": red_cov},
            )
    return DichotomyVerdict(
        case1=False,
        color=None,
        matching=(),
        core=None,
        covered=max(red_cov, best_cov, 0),
        threshold=threshold,
        diagnostics={
            "red_covered": red_cov,
            "best_blue_core": best_core,
            "best_blue_covered": max(best_cov, 0),
        },
    )


# ---------------------------------------------------------------------------
# near-split detection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalVerdict:
    """Near-split structure certificate.

    When `is_extremal`, the partition (A, B) satisfies, with parameter
    alpha: |A| >= (2/3 - alpha) n, |B| >= (1/3 - alpha) n, the induced
    graph on A has density >= 1 - alpha in `inner_color` (density
    e(A)/C(|A|,2)), and the A x B bipartite graph has density >= 1 -
    alpha in the other color.
    """

    is_extremal: bool
    a_side: tuple[int, ...]
    b_side: tuple[int, ...]
    alpha: Fraction
    inner_color: str | None = None
    inner_density: Fraction | None = None
    cross_density: Fraction | None = None
    diagnostics: dict[str, object] = field(default_factory=dict)


def _inner_density(view: ColorView, verts: Sequence[int]) -> Fraction:
    """Density of the induced subgraph on verts: e/C(|verts|,2); 1 if |verts|<2."""
    k = len(verts)
    if k < 2:
        return Fraction(1)
    mask = _vertex_mask(verts, view.n)
    e = sum((view.adj_mask(v) & mask).bit_count() for v in verts) // 2
    return Fraction(e, k * (k - 1) // 2)


def _cross_density(view: ColorView, a: Sequence[int], b: Sequence[int]) -> Fraction:
    if not a or not b:
        return Fraction(1)
    bmask = _vertex_mask(b, view.n)
    e = sum((view.adj_mask(v) & bmask).bit_count() for v in a)
    return Fraction(e, len(a) * len(b))


def _split_test(
    coloring: EdgeColoring, a_set: frozenset[int], alpha: Fraction, inner: str
) -> ExtremalVerdict | None:
    """Exact test of the near-split conditions for a candidate side A."""
    n = coloring.n
    a = tuple(sorted(a_set))
    b = tuple(v for v in range(n) if v not in a_set)
    if Fraction(len(a)) < (Fraction(2, 3) - alpha) * n:
        return None
    if Fraction(len(b)) < (Fraction(1, 3) - alpha) * n:
        return None
    inner_view = ColorView(coloring, inner)
    cross_view = ColorView(coloring, other_color(inner))
    d_in = _inner_density(inner_view, a)
    if d_in < 1 - alpha:
        return None
    d_cross = _cross_density(cross_view, a, b)
    if d_cross < 1 - alpha:
        return None
    return ExtremalVerdict(
        is_extremal=True,
        a_side=a,
        b_side=b,
        alpha=alpha,
        inner_color=inner,
        inner_density=d_in,
        cross_density=d_cross,
    )


def extremal_detect(coloring: EdgeColoring, alpha: object) -> ExtremalVerdict:
    """Search for a near-split partition witnessing the coloring's structure.

    For each choice of the inside color c, candidate sides A are grown
    from the high-c-degree vertices (the top 2n/3 prefix and the
    degree >= 2n/3 threshold set) and refined by the cleanup move
    A <- {v : deg_c(v, A) >= (2/3)|A|}, iterated at most n rounds; every
    iterate is tested exactly against the defining inequalities.  With
    alpha >= 2/3 the empty side A is trivially a witness.
    """
    n = coloring.n
    if n < 3:
        raise DomainError("near-split detection needs n >= 3")
    alphaf = as_fraction(alpha)
    if alphaf >= Fraction(2, 3):
        return ExtremalVerdict(
            is_extremal=True,
            a_side=(),
            b_side=tuple(range(n)),
            alpha=alphaf,
            diagnostics={"trivial": True},
        )

    tested = 0
    converged = True
    for inner in (RED, BLUE):
        view = ColorView(coloring, inner)
        degs = sorted(((-view.degree(v), v) for v in range(n)))
        prefix_size = -((-2 * n) // 3)  # ceil(2n/3)
        starts = [frozenset(v for _, v in degs[:prefix_size])]
        thresh = frozenset(
            v for v in range(n) if 3 * view.degree(v) >= 2 * n
        )
        if thresh and thresh not in starts:
            starts.append(thresh)
        for start in starts:
            current = start
            seen: set[frozenset[int]] = set()
            for _ in range(n + 1):
                tested += 1
                verdict = _split_test(coloring, current, alphaf, inner)
                if verdict is not None:
                    return verdict
                if current in seen:
                    converged = False
                    break
                seen.add(current)
                if not current:
                    break
                size = len(current)
                nxt = frozenset(
                    v
                    for v in range(n)
                    if 3 * view.degree(v, current) >= 2 * size
                )
                if nxt == current:
                    break
                current = nxt
    return ExtremalVerdict(
        is_extremal=False,
        a_side=(),
        b_side=tuple(range(n)),
        alpha=alphaf,
        diagnostics={"candidates_tested": tested, "converged": converged},
    )


def dirac_check(view: ColorView, vertices: Sequence[int]) -> bool:
    """True iff every vertex of the set has >= |S|/2 neighbors inside it."""
    s = len(vertices)
    if s < 3:
        raise DomainError("minimum-degree check needs |S| >= 3")
    mask = _vertex_mask(vertices, view.n)
    return all(2 * (view.adj_mask(v) & mask).bit_count() >= s for v in vertices)


# ---------------------------------------------------------------------------
# numeric lower-bound checkers for bipartite path counts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """Comparison of a closed-form path-count lower bound with the exact count.

    `hypotheses` records each hypothesis by name with its exact verdict;
    the overall verdict is "confirmed" (hypotheses hold, bound <= exact),
    "vacuous" (some hypothesis fails; the bound is not asserted), or
    "violated" (hypotheses hold yet bound > exact, which would indicate
    an implementation bug).
    """

    mode: str
    hypotheses: dict[str, bool]
    bound: float
    exact_count: int
    params: dict[str, object]

    @property
    def hypotheses_satisfied(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def bound_le_exact(self) -> bool:
        return self.bound <= self.exact_count

    @property
    def verdict(self) -> str:
        if not self.hypotheses_satisfied:
            return "vacuous"
        return "confirmed" if self.bound_le_exact else "violated"


def _bipartite_setup(
    g: SimpleGraph, us: Sequence[int], vs: Sequence[int]
) -> tuple[list[int], int, int, list[int], list[int]]:
    """Cross-edges-only adjacency plus masks for a disjoint part pair."""
    if not us or not vs:
        raise DomainError("parts must be nonempty")
    umask = _vertex_mask(us, g.n)
    vmask = _vertex_mask(vs, g.n)
    if umask & vmask:
        raise DomainError("parts must be disjoint")
    adj = [0] * g.n
    for u in _iter_bits(umask):
        adj[u] = g.adj[u] & vmask
    for v in _iter_bits(vmask):
        adj[v] = g.adj[v] & umask
    return adj, umask, vmask, sorted(us), sorted(vs)


def _work_guard(nu: int, nv: int, slots_u: int, slots_v: int) -> None:
    est = falling(nu, min(slots_u, nu)) * falling(nv, min(slots_v, nv))
    if est > PATH_WORK_LIMIT:
        raise CapabilityError(
            "instance too large for exact path counting "
            f"(estimated work {est} > {PATH_WORK_LIMIT})"
        )


def rooted_path_bound(
    g: SimpleGraph,
    us: Sequence[int],
    vs: Sequence[int],
    eps: object,
    d: object,
    l: int,
    v: int,
) -> BoundReport:
    """Lower bound on paths of length l from a high-degree root v in V.

    With n = min(|U|,|V|), whenever n >= 1/eps^2, d > eps + sqrt(eps),
    deg(v, U) >= (d - eps)|U| and 1 <= l <= 2(1 - sqrt(eps))n - 1, the
    bipartite graph between U and V carries at least
    (d - eps - sqrt(eps))^l * prod_{i=1..l} (n - floor(i/2)) paths of
    length l starting at v.  Hypotheses are decided exactly; the bound
    itself is evaluated in floats with negative bases clamped to zero.
    """
    epsf = as_fraction(eps)
    df = as_fraction(d)
    if epsf <= 0:
        raise DomainError("eps must be positive")
    if l < 1:
        raise DomainError("path length must be at least 1")
    adj, umask, vmask, us_s, vs_s = _bipartite_setup(g, us, vs)
    if not vmask >> v & 1:
        raise DomainError("root vertex must lie in the second part")
    nu, nv = len(us_s), len(vs_s)
    n = min(nu, nv)
    _work_guard(nu, nv, (l + 1) // 2, l // 2)

    t = df - epsf
    hyp = {
        "min-part-size": n * epsf * epsf >= 1,
        "density-threshold": t > 0 and t * t > epsf,
        "root-degree": Fraction((g.adj[v] & umask).bit_count()) >= t * nu,
        "length-range": 2 * n - l - 1 >= 0
        and 4 * n * n * epsf <= Fraction((2 * n - l - 1) ** 2),
    }
    base = max(float(df) - float(epsf) - math.sqrt(float(epsf)), 0.0)
    prod = 1
    for i in range(1, l + 1):
        prod *= max(n - i // 2, 0)
    bound = base**l * prod
    exact = count_paths_from_vertex(adj, v, l)
    return BoundReport(
        mode="rooted",
        hypotheses=hyp,
        bound=bound,
        exact_count=exact,
        params={"eps": epsf, "d": df, "l": l, "v": v, "n": n},
    )


def endpoint_path_bound(
    g: SimpleGraph,
    us: Sequence[int],
    vs: Sequence[int],
    eps: object,
    d: object,
    l: int,
    u: int,
    v: int,
) -> BoundReport:
    """Lower bound on length-l paths joining two high-degree vertices.

    With n = min(|U|,|V|), whenever n >= 5/eps^2, d > 5 sqrt(eps), both
    endpoints are adjacent to at least a (d - eps) fraction of the
    other part, 3 <= l <= 2(1 - 2 sqrt(eps))n, and l is even exactly
    when the endpoints share a part, the bipartite graph carries at
    least (d - 7 sqrt(eps))^(l-1) * (eps n) * prod_{i=1..l-2}
    (n - floor(i/2)) paths of length l with ends u and v.
    """
    epsf = as_fraction(eps)
    df = as_fraction(d)
    if epsf <= 0:
        raise DomainError("eps must be positive")
    if l < 1:
        raise DomainError("path length must be at least 1")
    if u == v:
        raise DomainError("endpoints must be distinct")
    adj, umask, vmask, us_s, vs_s = _bipartite_setup(g, us, vs)
    for w in (u, v):
        if not (umask | vmask) >> w & 1:
            raise DomainError("endpoints must lie in the parts")
    nu, nv = len(us_s), len(vs_s)
    n = min(nu, nv)
    _work_guard(nu, nv, (l + 1) // 2, (l + 1) // 2)

    t = df - epsf

    def frac_ok(w: int) -> bool:
        if umask >> w & 1:
            return Fraction((g.adj[w] & vmask).bit_count()) >= t * nv
        return Fraction((g.adj[w] & umask).bit_count()) >= t * nu

    same_part = bool(umask >> u & 1) == bool(umask >> v & 1)
    hyp = {
        "min-part-size": n * epsf * epsf >= 5,
        "density-threshold": df > 0 and df * df > 25 * epsf,
        "endpoint-degrees": frac_ok(u) and frac_ok(v),
        "length-range": 3 <= l
        and 2 * n - l >= 0
        and 16 * n * n * epsf <= Fraction((2 * n - l) ** 2),
        "length-parity": (l % 2 == 0) == same_part,
    }
    base = max(float(df) - 7 * math.sqrt(float(epsf)), 0.0)
    prod = 1
    for i in range(1, l - 1):
        prod *= max(n - i // 2, 0)
    bound = base ** (l - 1) * float(epsf) * n * prod
    exact = count_paths_between(adj, u, v, l)
    return BoundReport(
        mode="endpoints",
        hypotheses=hyp,
        bound=bound,
        exact_count=exact,
        params={"eps": epsf, "d": df, "l": l, "u": u, "v": v, "n": n},
    )


def dense_bipartite_bound(
    g: SimpleGraph,
    us: Sequence[int],
    vs: Sequence[int],
    beta: object,
    delta: object,
    k: int,
) -> BoundReport:
    """Lower bound on k-vertex paths starting in V of a very dense pair.

    Whenever |V| >= 3k/4, |U| >= floor(k/2), the density between U and V
    is at least 1 - beta with beta < 1e-4, and every U-vertex has degree
    at least delta >= 4 sqrt(beta) max(|V|, 2|U|), the pair carries at
    least (delta / 4|V|)^(2 sqrt(beta) |U|) * (1 - 4 sqrt(beta)|U|/delta)^(k/2)
    * (1 - 6 sqrt(beta))^(k/2) * (|U|)_{floor(k/2)} * (|V|)_{ceil(k/2)}
    paths with k vertices starting in V.  Paths are counted as directed
    traversals whose first vertex lies in V (on complete bipartite pairs
    the count equals the falling-factorial product exactly).
    """
    betaf = as_fraction(beta)
    deltaf = as_fraction(delta)
    if betaf < 0:
        raise DomainError("beta must be nonnegative")
    if k < 1:
        raise DomainError("k must be at least 1")
    adj, umask, vmask, us_s, vs_s = _bipartite_setup(g, us, vs)
    nu, nv = len(us_s), len(vs_s)
    _work_guard(nu, nv, k // 2, (k + 1) // 2)

    edges = sum((g.adj[u] & vmask).bit_count() for u in us_s)
    min_u_deg = min((g.adj[u] & vmask).bit_count() for u in us_s)
    mx = max(nv, 2 * nu)
    hyp = {
        "v-part-size": 4 * nv >= 3 * k,
        "u-part-size": nu >= k // 2,
        "density": Fraction(edges) >= (1 - betaf) * nu * nv,
        "density-slack": betaf < Fraction(1, 10000),
        "degree-threshold": deltaf >= 0
        and deltaf * deltaf >= 16 * betaf * mx * mx,
        "u-min-degree": Fraction(min_u_deg) >= deltaf,
    }
    sb = math.sqrt(float(betaf))
    deltav = float(deltaf)
    exp1 = 2 * sb * nu
    if exp1 == 0:
        f1 = 1.0
    else:
        f1 = (deltav / (4 * nv)) ** exp1 if deltav > 0 else 0.0
    if sb * nu == 0:
        f2 = 1.0
    elif deltav > 0:
        f2 = max(1 - 4 * sb * nu / deltav, 0.0) ** (k / 2)
    else:
        f2 = 0.0
    f3 = max(1 - 6 * sb, 0.0) ** (k / 2)
    bound = f1 * f2 * f3 * falling(nu, k // 2) * falling(nv, (k + 1) // 2)
    exact = sum(count_paths_from_vertex(adj, v, k - 1) for v in vs_s)
    return BoundReport(
        mode="dense-bipartite",
        hypotheses=hyp,
        bound=bound,
        exact_count=exact,
        params={"beta": betaf, "delta": deltaf, "k": k},
    )


def verify_count_bounds(
    g: SimpleGraph, us: Sequence[int], vs: Sequence[int], params: dict
) -> BoundReport:
    """Dispatch a bound check by `params["mode"]`.

    Modes: "rooted" (keys eps, d, l, v), "endpoints" (eps, d, l, u, v),
    "dense-bipartite" (beta, delta, k).  A hypothesis failure yields a
    vacuous report, never a violation.
    """
    if "mode" not in params:
        raise DomainError("params must include a 'mode' key")
    mode = params["mode"]
    try:
        if mode == "rooted":
            return rooted_path_bound(
                g, us, vs, params["eps"], params["d"], params["l"], params["v"]
            )
        if mode == "endpoints":
            return endpoint_path_bound(
                g,
                us,
                vs,
                params["eps"],
                params["d"],
                params["l"],
                params["u"],
                params["v"],
            )
        if mode == "dense-bipartite":
            return dense_bipartite_bound(
                g, us, vs, params["beta"], params["delta"], params["k"]
            )
    except KeyError as exc:
        raise DomainError(f"missing parameter {exc} for mode {mode!r}") from exc
    raise DomainError(f"unknown mode {mode!r}")
