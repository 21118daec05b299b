"""Generators for the extremal graph and hypergraph families.

Everything here is deterministic.  The central object is the blowup: given
a template hypergraph, each hyperedge is replaced by a small partite
"gadget" graph whose packing cliques are transversal maximal independent
sets, and template vertices become parts whose vertices are choice tuples
over their incident edges.  Products of per-gadget transversal MIS's then
give large families of maximal independent sets in the blowup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import prod

from .engine import transversal_mis_list
from .formats import hypergraph_from_json, hypergraph_to_json
from .graphs import (
    FractionalMatching,
    Graph,
    Hypergraph,
    PartitionedGraph,
    cliques_of_size,
    disjoint_union,
    iter_bits,
    partite_complement,
    validate_fractional_matching,
)

GADGET_KINDS = ("comatching", "trivial", "rs", "auto")


def comatching(n: int) -> PartitionedGraph:
    """Complete bipartite graph on floor(n/2) + ceil(n/2) vertices minus a
    perfect matching on the smaller side.

    Parts are 0..floor(n/2)-1 and the rest; the removed pairs are
    (i, floor(n/2)+i), so those are exactly the cross non-edges.
    """
    if n < 2:
        raise ValueError("comatching needs n >= 2")
    a = n // 2
    edges = [
        (i, a + j) for i in range(a) for j in range(n - a) if i != j
    ]
    return PartitionedGraph.from_parts(
        Graph.from_edges(n, edges), (range(a), range(a, n))
    )


@dataclass(frozen=True)
class PackingGraph:
    """r-partite graph together with a clique packing certificate.

    The listed cliques are transversal r-cliques; validation checks that
    they induce complete subgraphs, that no (r-1)-set lies in two of them,
    that the graph has no intra-part edge, and, exhaustively, that no
    r-clique exists beyond the listed ones.
    """

    pg: PartitionedGraph
    cliques: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        r = len(self.pg.parts)
        if r < 2:
            raise ValueError("packing graph needs at least 2 parts")
        g = self.pg.graph
        masks = self.pg.part_masks()
        for mask in masks:
            for v in iter_bits(mask):
                if g.adj[v] & mask:
                    raise ValueError("intra-part edge in packing graph")
        part_of = {}
        for i, mask in enumerate(masks):
            for v in iter_bits(mask):
                part_of[v] = i
        seen_sub: set[tuple[int, ...]] = set()
        for clique in self.cliques:
            if len(clique) != r:
                raise ValueError(f"clique {clique} is not an r-set")
            if sorted({part_of[v] for v in clique}) != list(range(r)):
                raise ValueError(f"clique {clique} is not transversal")
            for u, v in combinations(clique, 2):
                if not g.has_edge(u, v):
                    raise ValueError(f"listed clique {clique} is not complete")
            for sub in combinations(sorted(clique), r - 1):
                if sub in seen_sub:
                    raise ValueError(f"(r-1)-set {sub} lies in two listed cliques")
                seen_sub.add(sub)
        listed = {tuple(sorted(c)) for c in self.cliques}
        for found in cliques_of_size(g, r):
            if found not in listed:
                raise ValueError(f"unlisted clique {found} in packing graph")

    @property
    def r(self) -> int:
        return len(self.pg.parts)


def trivial_packing(r: int, m: int) -> PackingGraph:
    """m vertex-disjoint transversal r-cliques across r parts of size m."""
    if r < 2 or m < 1:
        raise ValueError("need r >= 2 and m >= 1")
    edges = []
    cliques = []
    for j in range(m):
        members = [i * m + j for i in range(r)]
        cliques.append(tuple(members))
        edges.extend(combinations(members, 2))
    pg = PartitionedGraph.from_parts(
        Graph.from_edges(r * m, edges),
        (range(i * m, (i + 1) * m) for i in range(r)),
    )
    return PackingGraph(pg, tuple(cliques))


def _no_ap3(s: set[int], x: int) -> bool:
    # x joins s without creating a 3-term arithmetic progression.
    for a in s:
        if 2 * a - x in s:
            return False
        c = 2 * x - a
        if c != a and c in s:
            return False
    return True


@lru_cache(maxsize=None)
def behrend_set(m: int) -> frozenset[int]:
    """Deterministic 3-term-AP-free subset of range(m).

    Seeds with a sphere layer of digit vectors: digits 0..d-1 written in
    base 2d-1 add without carries, so integer progressions pull back to
    vector progressions, and a fixed squared radius admits no midpoints.
    Scans d in 2..10 and dimension D in 2..6 (higher positions whose place
    value already exceeds m are dropped), keeps the layer with the most
    values below m (ties: smaller radius, then smaller d, D), then greedily
    adds any further integers that keep the set progression-free.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    best: tuple[int, int, int, int, frozenset[int]] | None = None
    scanned: set[tuple[int, int]] = set()
    for d in range(2, 11):
        base = 2 * d - 1
        useful = 1
        while useful < 6 and base**useful < m:
            useful += 1
        for dim in range(2, 7):
            de = min(dim, useful)
            if (d, de) in scanned:
                continue
            scanned.add((d, de))
            layers: dict[int, set[int]] = {}
            places = [base**j for j in range(de)]
            for vec in product(range(d), repeat=de):
                value = sum(v * p for v, p in zip(vec, places))
                if value < m:
                    layers.setdefault(sum(v * v for v in vec), set()).add(value)
            for radius, vals in layers.items():
                key = (-len(vals), radius, d, de, frozenset(vals))
                if best is None or key < best:
                    best = key
    out = set(best[4]) if best else set()
    for x in range(m):
        if x not in out and _no_ap3(out, x):
            out.add(x)
    return frozenset(out)


def rs_packing(m: int) -> PackingGraph:
    """Tripartite triangle packing where every edge lies in exactly one triangle.

    Parts have sizes m, 2m and 3m; for each x < m and each b in the
    progression-free set, the triangle is (x, x+b, x+2b) read across the
    three parts.  Progression-freeness of the offsets is what rules out any
    triangle beyond the listed ones.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    offsets = sorted(behrend_set(m))
    edges = []
    cliques = []
    for x in range(m):
        for b in offsets:
            tri = (x, m + x + b, 3 * m + x + 2 * b)
            cliques.append(tri)
            edges.extend(combinations(tri, 2))
    pg = PartitionedGraph.from_parts(
        Graph.from_edges(6 * m, edges),
        (range(m), range(m, 3 * m), range(3 * m, 6 * m)),
    )
    return PackingGraph(pg, tuple(cliques))


def gadget(p: PackingGraph) -> PartitionedGraph:
    """Partite complement of a packing graph.

    Each packing clique becomes a transversal maximal independent set of
    the output: it is independent by construction, and extending it would
    exhibit an (r-1)-set inside two distinct r-cliques of the packing.
    """
    return partite_complement(p.pg)


def tight_cycle(r: int, k: int) -> Hypergraph:
    """r-uniform hypergraph on a k-cycle whose edges are the consecutive
    r-windows (indices mod k)."""
    if r < 2 or k < r:
        raise ValueError("need k >= r >= 2")
    edges = []
    seen = set()
    for i in range(k):
        e = tuple(sorted((i + j) % k for j in range(r)))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(k, tuple(edges))


@dataclass(frozen=True)
class BlowupSpec:
    """Template hypergraph, a gadget size per edge, and a gadget family.

    ``gadget_kind`` is one of "comatching" (2-uniform edges only),
    "trivial" (disjoint transversal cliques, any uniformity), "rs"
    (triangle packing, 3-uniform edges only) or "auto" (comatching for
    2-edges, trivial otherwise).  Mixed edge sizes are allowed; each edge
    just gets a gadget of its own uniformity.
    """

    template: Hypergraph
    sizes: tuple[int, ...]
    gadget_kind: str = "auto"

    def __post_init__(self) -> None:
        if len(self.sizes) != len(self.template.edges):
            raise ValueError("need one gadget size per template edge")
        if any(s < 1 for s in self.sizes):
            raise ValueError("gadget sizes must be >= 1")
        if self.gadget_kind not in GADGET_KINDS:
            raise ValueError(f"unknown gadget kind {self.gadget_kind!r}")

    def to_json(self) -> dict:
        return {
            "template": hypergraph_to_json(self.template),
            "sizes": list(self.sizes),
            "gadget": self.gadget_kind,
        }

    @classmethod
    def from_json(cls, obj: dict) -> BlowupSpec:
        try:
            template = hypergraph_from_json(obj["template"])
            sizes = tuple(int(s) for s in obj["sizes"])
            kind = str(obj.get("gadget", "auto"))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad blowup spec JSON: {exc}") from exc
        return cls(template, sizes, kind)


def _iroot(x: int, q: int) -> int:
    """Integer floor of the q-th root of x >= 0."""
    if x < 0 or q < 1:
        raise ValueError("need x >= 0 and q >= 1")
    if x < 2 or q == 1:
        return x
    r = int(round(x ** (1.0 / q)))
    while r**q > x:
        r -= 1
    while (r + 1) ** q <= x:
        r += 1
    return r


def blowup_spec_from_matching(
    h: Hypergraph, m: FractionalMatching, n: int, gadget_kind: str = "auto"
) -> BlowupSpec:
    """Gadget sizes floor(n^{w(e)}) from a fractional matching, exactly.

    Weights p/q turn into the integer q-th root of n^p, so no floating
    point enters the size computation.  The per-vertex load condition of
    the matching makes the per-vertex size products come out <= n.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not validate_fractional_matching(h, m):
        raise ValueError("per-vertex load exceeds 1")
    sizes = []
    for i in range(len(h.edges)):
        w = m.weight_of(i)
        sizes.append(_iroot(n**w.numerator, w.denominator) if w > 0 else 1)
    for x in range(h.n):
        load = prod(sizes[i] for i in h.incident_edges(x))
        if load > n:
            raise ValueError(f"size product {load} at vertex {x} exceeds n={n}")
    return BlowupSpec(h, tuple(sizes), gadget_kind)


def _edge_gadget(r: int, size: int, kind: str) -> PartitionedGraph:
    if kind == "auto":
        kind = "comatching" if r == 2 else "trivial"
    if kind == "comatching":
        if r != 2:
            raise ValueError("comatching gadgets need 2-uniform edges")
        return comatching(2 * size)
    if kind == "trivial":
        return gadget(trivial_packing(r, size))
    if kind == "rs":
        if r != 3:
            raise ValueError("rs gadgets need 3-uniform edges")
        return gadget(rs_packing(size))
    raise ValueError(f"unknown gadget kind {kind!r}")


@dataclass(frozen=True)
class Blowup:
    """Blowup graph along with enough structure to address its MIS family.

    Duck-types as a PartitionedGraph through ``graph``/``parts``.  Part x
    holds one vertex per tuple of gadget-part choices over the edges at x,
    in lexicographic order (first incident edge most significant), so the
    layout is reproducible.  ``gadget_mis[e]`` lists the transversal MIS's
    of edge e's gadget as per-part local indices.
    """

    pg: PartitionedGraph
    template: Hypergraph
    sizes: tuple[int, ...]
    gadget_kind: str
    gadgets: tuple[PartitionedGraph, ...]
    gadget_mis: tuple[tuple[tuple[int, ...], ...], ...]
    part_offsets: tuple[int, ...]
    part_dims: tuple[tuple[int, ...], ...]

    @property
    def graph(self) -> Graph:
        return self.pg.graph

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        return self.pg.parts

    def family_size(self) -> int:
        """Number of distinct choice functions over per-edge transversal MIS's."""
        return prod(len(entries) for entries in self.gadget_mis)

    def family_mis(self, choice: tuple[int, ...]) -> int:
        """Vertex mask induced by picking gadget_mis[e][choice[e]] per edge e.

        Each part contributes the unique vertex agreeing with every chosen
        transversal MIS on its incident edges.
        """
        if len(choice) != len(self.template.edges):
            raise ValueError("need one choice per template edge")
        mask = 0
        for x in range(self.template.n):
            idx = 0
            for pos, ei in enumerate(self.template.incident_edges(x)):
                i = self.template.edges[ei].index(x)
                idx = idx * self.part_dims[x][pos] + self.gadget_mis[ei][choice[ei]][i]
            mask |= 1 << (self.part_offsets[x] + idx)
        return mask


def blowup(spec: BlowupSpec) -> Blowup:
    """Build the blowup graph of a template with per-edge gadgets.

    Vertices of part x are functions assigning to each incident edge a
    vertex of that edge's gadget in x's slot; two vertices are adjacent iff
    some shared edge's gadget joins their assignments.  Edges only appear
    between parts joined in the template's shadow, so shadow clique-freeness
    carries over.
    """
    h = spec.template
    gadget_pgs = tuple(
        _edge_gadget(len(e), s, spec.gadget_kind) for e, s in zip(h.edges, spec.sizes)
    )
    incident = [h.incident_edges(x) for x in range(h.n)]
    dims = []
    for x in range(h.n):
        dims.append(
            tuple(
                len(gadget_pgs[ei].parts[h.edges[ei].index(x)]) for ei in incident[x]
            )
        )
    part_sizes = [prod(dx) for dx in dims]
    offsets = [0] * h.n
    for x in range(1, h.n):
        offsets[x] = offsets[x - 1] + part_sizes[x - 1]
    n_total = sum(part_sizes)

    digit_tuples = [list(product(*(range(d) for d in dx))) for dx in dims]
    rows = [0] * n_total
    for x in range(h.n):
        for y in range(x + 1, h.n):
            shared = [ei for ei in incident[x] if y in h.edges[ei]]
            if not shared:
                continue
            tables = []
            for ei in shared:
                gp = gadget_pgs[ei]
                px = gp.parts[h.edges[ei].index(x)]
                py = gp.parts[h.edges[ei].index(y)]
                adj = [
                    [gp.graph.has_edge(a, b) for b in py] for a in px
                ]
                tables.append((incident[x].index(ei), incident[y].index(ei), adj))
            for fi, fd in enumerate(digit_tuples[x]):
                u = offsets[x] + fi
                for gi, gd in enumerate(digit_tuples[y]):
                    if any(adj[fd[jx]][gd[jy]] for jx, jy, adj in tables):
                        v = offsets[y] + gi
                        rows[u] |= 1 << v
                        rows[v] |= 1 << u

    parts = tuple(
        tuple(range(offsets[x], offsets[x] + part_sizes[x])) for x in range(h.n)
    )
    pg = PartitionedGraph(Graph(n_total, tuple(rows)), parts)

    gadget_mis = []
    for gp in gadget_pgs:
        entries = []
        for mask in transversal_mis_list(gp):
            entries.append(
                tuple(next(p for p, v in enumerate(part) if mask >> v & 1) for part in gp.parts)
            )
        gadget_mis.append(tuple(sorted(entries)))
    return Blowup(
        pg=pg,
        template=h,
        sizes=spec.sizes,
        gadget_kind=spec.gadget_kind,
        gadgets=gadget_pgs,
        gadget_mis=tuple(gadget_mis),
        part_offsets=tuple(offsets),
        part_dims=tuple(dims),
    )


def _gadget_block(r: int, m: int) -> Graph:
    return comatching(2 * m).graph if r == 2 else gadget(trivial_packing(r, m)).graph


def disjoint_gadget_union(k: int, t: int, m: int) -> Graph:
    """K_t-free graph with many k-MIS's from disjoint partite gadget blocks.

    Takes floor(k/(t-1)) gadget blocks on t-1 parts of size m, plus a
    remainder block on k mod (t-1) parts (a single isolated vertex when the
    remainder is 1).  Every block is at most (t-1)-partite, so the union is
    K_t-free.
    """
    if k < 1 or t < 3 or m < 1:
        raise ValueError("need k >= 1, t >= 3, m >= 1")
    q, s = divmod(k, t - 1)
    blocks = [_gadget_block(t - 1, m) for _ in range(q)]
    if s == 1:
        blocks.append(Graph.empty(1))
    elif s >= 2:
        blocks.append(_gadget_block(s, m))
    return disjoint_union(blocks)


def tight_cycle_blowup(k: int, t: int, m: int) -> Blowup:
    """Blowup of the (t-1)-uniform tight k-cycle with uniform gadget size m.

    Requires k >= 2(t-1) so the template's shadow, and hence the blowup,
    is K_t-free.
    """
    if t < 3 or m < 1:
        raise ValueError("need t >= 3 and m >= 1")
    if k < 2 * (t - 1):
        raise ValueError(f"need k >= {2 * (t - 1)} for a K_{t}-free shadow")
    template = tight_cycle(t - 1, k)
    return blowup(BlowupSpec(template, (m,) * len(template.edges)))


def window_hypergraph(r: int, k: int, n: int) -> Hypergraph:
    """r-uniform hypergraph on k near-equal parts whose edges take two
    vertices from one part and one from each of the next r-2 parts (cyclic).

    Every set picking one vertex per part is a maximal independent set.
    The (r, k) = (3, 2) corner is rejected: there the construction contains
    complete 4-vertex 3-graphs, and the star hypergraph is the right object.
    """
    if r < 3:
        raise ValueError("need r >= 3")
    if k < r - 1:
        raise ValueError("need k >= r - 1")
    if n < k:
        raise ValueError("need n >= k")
    if r == 3 and k == 2:
        raise ValueError("(r, k) = (3, 2) unsupported; use star_hypergraph")
    s = n % k
    big, small = -(-n // k), n // k
    parts = []
    start = 0
    for i in range(k):
        size = big if i < s else small
        parts.append(range(start, start + size))
        start += size
    edges = []
    for i in range(k):
        singles = [parts[(i + j) % k] for j in range(1, r - 1)]
        for pair in combinations(parts[i], 2):
            for combo in product(*singles):
                edges.append(tuple(sorted(pair + combo)))
    return Hypergraph(n, tuple(edges))


def star_hypergraph(n: int) -> Hypergraph:
    """3-uniform hypergraph of all triples through vertex 0.

    Exactly the n-1 pairs {0, u} are its 2-MIS's, and no 4 vertices carry
    all their triples.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    return Hypergraph(
        n, tuple((0, u, w) for u in range(1, n) for w in range(u + 1, n))
    )


def dominating_clique_graph(t: int, n: int) -> Graph:
    """Clique on t-2 vertices joined to n-t+2 further independent vertices.

    K_t-free with exactly t-2 single-vertex maximal independent sets.
    """
    if t < 3 or n < t:
        raise ValueError("need n >= t >= 3")
    c = t - 2
    edges = list(combinations(range(c), 2))
    edges.extend((u, v) for u in range(c) for v in range(c, n))
    return Graph.from_edges(n, edges)


def c4_leaves_graph() -> Graph:
    """4-cycle with two pendant leaves on opposite cycle vertices.

    A 6-vertex triangle-free graph with exactly three 2-MIS's that is not
    isomorphic to comatching(6).
    """
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])
