"""Interchange formats: graph6 byte strings and JSON shapes.

graph6 follows the standard packing for n <= 62 (single size byte n+63,
then the upper triangle read column by column, packed into 6-bit chunks,
each chunk offset by 63).  Hypergraphs serialize as
``{"n": int, "edges": [[int, ...], ...]}`` and fractional matchings as
``{"weights": [{"edge": i, "num": p, "den": q}, ...]}``.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import FractionalMatching, Graph, Hypergraph


def graph6_encode(g: Graph) -> bytes:
    if g.n > 62:
        raise ValueError("graph6 single-byte header supports n <= 62 only")
    out = bytearray([g.n + 63])
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    raw = data.encode("ascii") if isinstance(data, str) else data
    raw = raw.strip()
    if raw.startswith(b">>graph6<<"):
        raw = raw[len(b">>graph6<<"):]
    if not raw:
        raise ValueError("empty graph6 input")
    for b in raw:
        if not 63 <= b <= 126:
            raise ValueError(f"malformed graph6 byte {b}")
    n = raw[0] - 63
    if n > 62:
        raise ValueError("graph6 input beyond single-byte size header")
    nbits = n * (n - 1) // 2
    expect = 1 + (nbits + 5) // 6
    if len(raw) != expect:
        raise ValueError(f"graph6 length {len(raw)} != expected {expect} for n={n}")
    bits = 0
    for b in raw[1:]:
        bits = (bits << 6) | (b - 63)
    pad = len(raw[1:]) * 6 - nbits
    bits >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": [list(e) for e in h.edges]}


def hypergraph_from_json(obj: dict) -> Hypergraph:
    try:
        n = int(obj["n"])
        edges = [[int(v) for v in e] for e in obj["edges"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad hypergraph JSON: {exc}") from exc
    return Hypergraph.from_edges(n, edges)


def matching_to_json(m: FractionalMatching) -> dict:
    return {
        "weights": [
            {"edge": i, "num": w.numerator, "den": w.denominator} for i, w in m.weights
        ]
    }


def matching_from_json(obj: dict) -> FractionalMatching:
    try:
        weights = {
            int(row["edge"]): Fraction(int(row["num"]), int(row["den"]))
            for row in obj["weights"]
        }
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"bad fractional matching JSON: {exc}") from exc
    return FractionalMatching.from_weights(weights)
