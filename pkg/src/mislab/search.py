"""Exhaustive small-n search for extremal MIS counts, with witnesses.

The graph scan walks every edge bitmask on n labeled vertices as a numpy
int64 array, in chunks.  Since ``itertools.combinations`` emits the pairs
inside the last few vertices at the end of the pair order, fixing the high
bits of a chunk fixes the induced subgraph there; chunks whose fixed part
already contains a forbidden clique are skipped wholesale.  Per-subset
independence and domination tests are single mask compares vectorized over
the whole chunk.

Witness graphs are deduplicated by a canonical form: the lexicographically
least graph6 string over all relabelings, found by branch-and-bound on
adjacency columns.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb

import numpy as np

from .formats import graph6_encode
from .graphs import Graph, Hypergraph, iter_bits

GRAPH_SCAN_CAP = 8
HYPER_SCAN_CAP = 6
CANONICAL_CAP = 10
_CHUNK_EDGE_BITS = 16  # chunks of 2^16 masks at n=8; single chunk below that


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one exhaustive extremal computation.

    ``k`` None means MIS's of every size; ``t`` None means no clique filter
    (for r=3 the filter forbids the complete 3-graph on t vertices).
    """

    n: int
    k: int | None = None
    t: int | None = None
    r: int = 2
    collect_witnesses: bool = False
    witness_cap: int = 64


@dataclass
class SearchReport:
    spec: SearchSpec
    value: int
    witnesses: list[str] = field(default_factory=list)
    formula_value: int | None = None
    graphs_scanned: int = 0
    elapsed: float = 0.0
    truncated: bool = False

    def to_json(self) -> dict:
        # elapsed deliberately excluded: reports must be byte-identical
        # across runs of the same configuration.
        return {
            "spec": {
                "n": self.spec.n,
                "k": self.spec.k,
                "t": self.spec.t,
                "r": self.spec.r,
                "witnesses": self.spec.collect_witnesses,
            },
            "value": self.value,
            "witnesses": sorted(self.witnesses),
            "formula_value": self.formula_value,
            "graphs_scanned": self.graphs_scanned,
            "truncated": self.truncated,
        }


def _pair_masks(n: int) -> list[tuple[int, int]]:
    # bit b of an edge mask <-> pairs[b]; the pairs among the last vertices
    # occupy the top bits, which is what chunk skipping relies on.
    return list(combinations(range(n), 2))


def _subset_tables(n: int, sizes: list[int]) -> list[tuple[int, int, list[int]]]:
    """(subset, inside-pairs mask, per-outside-vertex cross masks) tables."""
    pairs = _pair_masks(n)
    bit_of = {p: 1 << b for b, p in enumerate(pairs)}
    tables = []
    for mask in range(1 << n):
        if mask.bit_count() not in sizes:
            continue
        members = list(iter_bits(mask))
        inside = 0
        for p in combinations(members, 2):
            inside |= bit_of[p]
        crosses = []
        for v in range(n):
            if mask >> v & 1:
                continue
            cm = 0
            for u in members:
                cm |= bit_of[(min(u, v), max(u, v))]
            crosses.append(cm)
        tables.append((mask, inside, crosses))
    return tables


def _forbidden_masks(n: int, t: int) -> list[int]:
    pairs = _pair_masks(n)
    bit_of = {p: 1 << b for b, p in enumerate(pairs)}
    out = []
    for sub in combinations(range(n), t):
        m = 0
        for p in combinations(sub, 2):
            m |= bit_of[p]
        out.append(m)
    return out


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    pairs = _pair_masks(n)
    return Graph.from_edges(n, [p for b, p in enumerate(pairs) if mask >> b & 1])


def _scan_graph_chunk(args: tuple) -> tuple[int, list[int], int, bool]:
    """Scan edge masks in [lo, hi); returns (best, witness masks, scanned, truncated)."""
    n, k, t, lo, hi, collect, raw_cap = args
    sizes = [k] if k is not None else list(range(n + 1))
    tables = _subset_tables(n, sizes)
    forb = _forbidden_masks(n, t) if t is not None else []

    if forb:
        # Every mask in the chunk shares the bits above the chunk width, so a
        # forbidden clique living entirely there kills the chunk outright.
        width = (hi - lo).bit_length() - 1 if hi - lo > 1 else 0
        chunk_fixed = lo >> width << width
        if any(chunk_fixed & fm == fm for fm in forb):
            return -1, [], hi - lo, False
    masks = np.arange(lo, hi, dtype=np.int64)
    if forb:
        alive = np.ones(len(masks), dtype=bool)
        for fm in forb:
            alive &= (masks & np.int64(fm)) != np.int64(fm)
        masks = masks[alive]
        del alive
    if len(masks) == 0:
        return -1, [], hi - lo, False

    counts = np.zeros(len(masks), dtype=np.int64)
    for _, inside, crosses in tables:
        ok = (masks & np.int64(inside)) == 0
        for cm in crosses:
            if not ok.any():
                break
            ok &= (masks & np.int64(cm)) != 0
        counts += ok
    best = int(counts.max())
    witnesses: list[int] = []
    truncated = False
    if collect:
        hits = masks[counts == counts.max()]
        if len(hits) > raw_cap:
            truncated = True
            hits = hits[:raw_cap]
        witnesses = [int(x) for x in hits]
    return best, witnesses, hi - lo, truncated


def exhaustive_m(spec: SearchSpec, workers: int = 1) -> SearchReport:
    """Exact maximum MIS count over all (filtered) labeled graphs on n vertices.

    Refuses n beyond the scan caps rather than running forever.  Witness
    graphs, when requested, are deduplicated up to isomorphism and returned
    as canonical graph6 strings (hypergraph witnesses as canonical JSON).
    """
    start = time.time()
    if spec.r == 3:
        report = _exhaustive_hyper(spec)
        report.elapsed = time.time() - start
        return report
    if spec.r != 2:
        raise ValueError(f"unsupported uniformity r={spec.r}")
    if spec.n > GRAPH_SCAN_CAP:
        raise ValueError(f"graph scan capped at n <= {GRAPH_SCAN_CAP}, got {spec.n}")
    if spec.n < 1:
        raise ValueError("need n >= 1")
    if spec.k is not None and not 0 <= spec.k <= spec.n:
        raise ValueError(f"k={spec.k} outside 0..{spec.n}")
    if spec.t is not None and spec.t <= 2:
        raise ValueError("clique filter needs t > 2")

    nbits = comb(spec.n, 2)
    total = 1 << nbits
    chunk = min(total, 1 << _CHUNK_EDGE_BITS)
    # Collect enough raw witnesses per chunk that ties are not silently lost
    # before canonical deduplication.
    raw_cap = max(4 * spec.witness_cap, 4096) if spec.collect_witnesses else 0
    jobs = [
        (spec.n, spec.k, spec.t, lo, min(lo + chunk, total), spec.collect_witnesses, raw_cap)
        for lo in range(0, total, chunk)
    ]
    if workers > 1 and len(jobs) > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_scan_graph_chunk, jobs)
    else:
        results = [_scan_graph_chunk(j) for j in jobs]

    best = max(r[0] for r in results)
    if best < 0:
        raise RuntimeError("clique filter eliminated every graph; bad filter?")
    scanned = sum(r[2] for r in results)
    truncated = any(r[3] for r in results)
    witnesses: list[str] = []
    if spec.collect_witnesses:
        seen: set[bytes] = set()
        for b, masks, _, _ in results:
            if b != best:
                continue
            for mask in masks:
                if len(seen) >= spec.witness_cap:
                    truncated = True
                    break
                g = graph_from_edge_mask(spec.n, mask)
                cf = canonical_form(g)
                if cf not in seen:
                    seen.add(cf)
        witnesses = sorted(c.decode("ascii") for c in seen)
    return SearchReport(
        spec=spec,
        value=best,
        witnesses=witnesses,
        graphs_scanned=scanned,
        elapsed=time.time() - start,
        truncated=truncated,
    )


def _exhaustive_hyper(spec: SearchSpec) -> SearchReport:
    """Scan every 3-uniform hypergraph on n labeled vertices."""
    n, k, t = spec.n, spec.k, spec.t
    if n > HYPER_SCAN_CAP:
        raise ValueError(f"hypergraph scan capped at n <= {HYPER_SCAN_CAP}, got {n}")
    if n < 3:
        raise ValueError("need n >= 3 for a 3-uniform scan")
    if k is None:
        raise ValueError("hypergraph scan needs a target size k")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    if t is not None and t <= 3:
        raise ValueError("3-uniform clique filter needs t > 3")
    triples = list(combinations(range(n), 3))
    bit_of = {tr: 1 << b for b, tr in enumerate(triples)}
    total = 1 << len(triples)
    masks = np.arange(total, dtype=np.int64)

    if t is not None:
        # Forbid the complete 3-graph on t vertices.
        for sub in combinations(range(n), t):
            fm = 0
            for tr in combinations(sub, 3):
                fm |= bit_of[tr]
            fm = np.int64(fm)
            masks = masks[(masks & fm) != fm]

    counts = np.zeros(len(masks), dtype=np.int64)
    for sub in combinations(range(n), k):
        inside = 0
        for tr in combinations(sub, 3):
            inside |= bit_of[tr]
        ok = (masks & np.int64(inside)) == 0
        subset = set(sub)
        for w in range(n):
            if w in subset:
                continue
            cm = 0
            for pair in combinations(sub, 2):
                cm |= bit_of[tuple(sorted(pair + (w,)))]
            ok &= (masks & np.int64(cm)) != 0
            if not ok.any():
                break
        counts += ok
    best = int(counts.max())
    witnesses: list[str] = []
    truncated = False
    if spec.collect_witnesses:
        seen: set[str] = set()
        for mask in masks[counts == counts.max()]:
            if len(seen) >= spec.witness_cap:
                truncated = True
                break
            edges = [tr for b, tr in enumerate(triples) if int(mask) >> b & 1]
            h = Hypergraph(n, tuple(edges))
            seen.add(canonical_hypergraph_json(h))
        witnesses = sorted(seen)
    return SearchReport(
        spec=spec,
        value=best,
        witnesses=witnesses,
        graphs_scanned=total,
        truncated=truncated,
    )


def canonical_form(g: Graph) -> bytes:
    """Lexicographically least graph6 encoding over all vertex relabelings.

    Equal outputs characterize isomorphic graphs.  Branch and bound: vertices
    are placed one position at a time, each new position contributing the
    adjacency column against the placed prefix; only candidates achieving
    the minimal column are branched (a non-minimal column loses at this
    position no matter the completion), and prefixes exceeding the best
    known sequence are cut.
    """
    n = g.n
    if n > CANONICAL_CAP:
        raise ValueError(f"canonical form capped at n <= {CANONICAL_CAP}, got {n}")
    if n <= 1:
        return graph6_encode(g)
    adj = g.adj
    best: tuple[int, ...] | None = None

    def rec(placed: list[int], mask: int, cols: tuple[int, ...]) -> None:
        nonlocal best
        pos = len(placed)
        if best is not None and cols > best[:pos]:
            return
        if pos == n:
            if best is None or cols < best:
                best = cols
            return
        cmin = None
        ties = []
        for v in range(n):
            if mask >> v & 1:
                continue
            col = 0
            for u in placed:
                col = (col << 1) | (adj[u] >> v & 1)
            if cmin is None or col < cmin:
                cmin, ties = col, [v]
            elif col == cmin:
                ties.append(v)
        for v in ties:
            rec(placed + [v], mask | 1 << v, cols + (cmin,))

    rec([], 0, ())
    assert best is not None
    # Column j holds the adjacency bits against positions 0..j-1, most
    # significant first: exactly the graph6 packing order.
    out = bytearray([n + 63])
    acc = nbits = 0
    for j in range(1, n):
        for b in range(j - 1, -1, -1):
            acc = (acc << 1) | (best[j] >> b & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def canonical_hypergraph_json(h: Hypergraph) -> str:
    """Minimum edge-list JSON over all vertex relabelings (small n only)."""
    if h.n > 8:
        raise ValueError("hypergraph canonical form capped at n <= 8")
    best = None
    for perm in permutations(range(h.n)):
        edges = sorted(tuple(sorted(perm[v] for v in e)) for e in h.edges)
        if best is None or edges < best:
            best = edges
    import json

    return json.dumps({"n": h.n, "edges": best}, separators=(",", ":"))


# Closed forms under verification.


def moon_moser_value(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    q, s = divmod(n, 3)
    return {0: 3**q, 1: 4 * 3 ** (q - 1) if q else 1, 2: 2 * 3**q}[s]


def hujter_tuza_value(n: int) -> int:
    if n < 4:
        raise ValueError("need n >= 4")
    return 2 ** (n // 2) if n % 2 == 0 else 5 * 2 ** ((n - 5) // 2)


def nielsen_value(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    q, s = divmod(n, k)
    return q ** (k - s) * (q + 1) ** s


def m3n2_value(n: int) -> int:
    if n < 3:
        raise ValueError("need n >= 3")
    return {3: 2, 4: 4, 5: 5}.get(n, n // 2)


def mt_n1_value(t: int, n: int) -> int:
    if t < 3 or n < 1:
        raise ValueError("need t >= 3 and n >= 1")
    return n if n < t else t - 2


def hyper_m432_value(n: int) -> int:
    if n < 4:
        raise ValueError("need n >= 4")
    return n - 1


@dataclass(frozen=True)
class VerifyRow:
    params: tuple[tuple[str, int], ...]
    computed: int
    formula: int

    @property
    def match(self) -> bool:
        return self.computed == self.formula


THEOREM_IDS = ("moon-moser", "hujter-tuza", "nielsen", "m3n2", "mt-n1", "hyper-m432")


def verify_theorem(
    theorem: str,
    n_range: range,
    k_range: range | None = None,
    t_range: range | None = None,
    workers: int = 1,
) -> list[VerifyRow]:
    """Compare exhaustive values against a closed form over parameter ranges.

    A mismatching row means a bug in this package, not in the closed form;
    callers flag it rather than suppress it.
    """
    rows: list[VerifyRow] = []

    def run(spec: SearchSpec) -> int:
        return exhaustive_m(spec, workers=workers).value

    if theorem == "moon-moser":
        for n in n_range:
            rows.append(VerifyRow((("n", n),), run(SearchSpec(n)), moon_moser_value(n)))
    elif theorem == "hujter-tuza":
        for n in n_range:
            rows.append(
                VerifyRow((("n", n),), run(SearchSpec(n, t=3)), hujter_tuza_value(n))
            )
    elif theorem == "nielsen":
        if k_range is None:
            raise ValueError("nielsen needs a k range")
        for n in n_range:
            for k in k_range:
                if not 2 <= k < n:
                    continue
                rows.append(
                    VerifyRow(
                        (("n", n), ("k", k)),
                        run(SearchSpec(n, k=k)),
                        nielsen_value(n, k),
                    )
                )
    elif theorem == "m3n2":
        for n in n_range:
            rows.append(
                VerifyRow((("n", n),), run(SearchSpec(n, k=2, t=3)), m3n2_value(n))
            )
    elif theorem == "mt-n1":
        if t_range is None:
            raise ValueError("mt-n1 needs a t range")
        for t in t_range:
            for n in n_range:
                rows.append(
                    VerifyRow(
                        (("t", t), ("n", n)),
                        run(SearchSpec(n, k=1, t=t)),
                        mt_n1_value(t, n),
                    )
                )
    elif theorem == "hyper-m432":
        for n in n_range:
            rows.append(
                VerifyRow(
                    (("n", n),),
                    run(SearchSpec(n, k=2, t=4, r=3)),
                    hyper_m432_value(n),
                )
            )
    else:
        raise ValueError(f"unknown theorem id {theorem!r}; one of {THEOREM_IDS}")
    return rows


def uniqueness_check(
    n: int = 8, k: int = 2, t: int = 3, workers: int = 1, witness_cap: int = 512
) -> SearchReport:
    """Exhaustive witness census for the triangle-free k=2 extremal problem.

    At n=8 this walks all 2^28 edge masks, so it sits behind explicit
    invocation; n=6 and 7 are quick.
    """
    spec = SearchSpec(n=n, k=k, t=t, collect_witnesses=True, witness_cap=witness_cap)
    return exhaustive_m(spec, workers=workers)
