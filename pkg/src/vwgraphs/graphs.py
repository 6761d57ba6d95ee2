"""Vertex-weighted symmetric directed multigraphs and the spanning-tree oracle.

A graph is stored as an ordered vertex list (id, weight, designated square
root of the weight) plus an ordered list of undirected edges, each with a
recorded direction u -> v.  Every undirected edge materializes the two
directed edges e (u -> v) and its reverse (v -> u); a loop still yields two
distinct directed edges.

The complexity oracle enumerates spanning trees by brute force over subsets
of non-loop edges.  It is deliberately simple (it is the ground truth the
determinant formulas are validated against) and refuses graphs beyond a
configurable edge cap.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import element_from_strings, piring

#: Largest number of non-loop undirected edges the brute-force oracle accepts.
ORACLE_EDGE_CAP = 24


class GraphError(Exception):
    pass


class Disconnected(GraphError):
    """The operation requires a connected graph."""


class OracleCapExceeded(GraphError):
    """The graph is too large for brute-force tree enumeration."""


@dataclass(frozen=True)
class DirectedEdge:
    """One orientation of an undirected edge; rev marks the reverse copy."""

    eid: object
    origin: object
    terminus: object
    rev: bool

    @property
    def key(self):
        return (self.eid, self.rev)

    def reversed(self) -> "DirectedEdge":
        return DirectedEdge(self.eid, self.terminus, self.origin, not self.rev)


class VertexWeightedGraph:
    """Symmetric directed multigraph with loops and per-vertex weights."""

    def __init__(self, ring, vertices: Sequence, edges: Sequence, check_sqrts: bool = True):
        """vertices: iterable of (id, weight, sqrt_weight); edges: (id, u, v)."""
        self.ring = ring
        self.vertex_ids = tuple(v[0] for v in vertices)
        if len(set(self.vertex_ids)) != len(self.vertex_ids):
            raise GraphError("duplicate vertex ids")
        self._vindex = {v: i for i, v in enumerate(self.vertex_ids)}
        self._weights = {v[0]: ring.coerce(v[1]) for v in vertices}
        self._sqrts = {v[0]: ring.coerce(v[2]) for v in vertices}
        if check_sqrts:
            for vid in self.vertex_ids:
                s, w = self._sqrts[vid], self._weights[vid]
                if s * s != w:
                    raise GraphError(f"designated root of {vid!r} does not square to its weight")
        self.edge_ids = tuple(e[0] for e in edges)
        if len(set(self.edge_ids)) != len(self.edge_ids):
            raise GraphError("duplicate edge ids")
        self._ends = {e[0]: (e[1], e[2]) for e in edges}
        for eid, (u, v) in self._ends.items():
            if u not in self._vindex or v not in self._vindex:
                raise GraphError(f"edge {eid!r} references an unknown vertex")

    # -- accessors -----------------------------------------------------------

    def weight(self, vid):
        return self._weights[vid]

    def sqrt_weight(self, vid):
        return self._sqrts[vid]

    def vertex_index(self, vid) -> int:
        return self._vindex[vid]

    def ends(self, eid):
        return self._ends[eid]

    def is_loop(self, eid) -> bool:
        u, v = self._ends[eid]
        return u == v

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_ids)

    @property
    def n_edges(self) -> int:
        return len(self.edge_ids)

    def directed_edge(self, eid, rev: bool = False) -> DirectedEdge:
        u, v = self._ends[eid]
        return DirectedEdge(eid, v, u, True) if rev else DirectedEdge(eid, u, v, False)

    def directed_edges(self) -> Iterable[DirectedEdge]:
        for eid in self.edge_ids:
            yield self.directed_edge(eid, False)
            yield self.directed_edge(eid, True)

    def weight_sum(self):
        total = self.ring.zero
        for vid in self.vertex_ids:
            total = total + self._weights[vid]
        return total

    def with_weights(self, weights, sqrts, ring=None, check_sqrts: bool = True):
        """Same topology with a different weight function."""
        ring = ring if ring is not None else self.ring
        verts = [(v, weights[v], sqrts[v]) for v in self.vertex_ids]
        edges = [(e, *self._ends[e]) for e in self.edge_ids]
        return VertexWeightedGraph(ring, verts, edges, check_sqrts=check_sqrts)

    def __repr__(self):
        return f"VertexWeightedGraph({self.n_vertices} vertices, {self.n_edges} edges)"

    # -- connectivity and trees ---------------------------------------------

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return True
        seen = {self.vertex_ids[0]}
        frontier = [self.vertex_ids[0]]
        adj: dict = {v: [] for v in self.vertex_ids}
        for eid in self.edge_ids:
            u, v = self._ends[eid]
            adj[u].append(v)
            adj[v].append(u)
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return len(seen) == self.n_vertices

    def spanning_trees(self, cap: int = ORACLE_EDGE_CAP) -> list:
        """All spanning trees as sorted tuples of edge ids, in sorted order.

        Loops never belong to trees.  Parallel edges are distinct objects, so
        each copy yields its own tree.  Refuses when the non-loop edge count
        exceeds the cap (the determinant formulas are authoritative there).
        """
        if not self.is_connected():
            raise Disconnected("spanning trees of a disconnected graph")
        nonloop = [eid for eid in self.edge_ids if not self.is_loop(eid)]
        if len(nonloop) > cap:
            raise OracleCapExceeded(
                f"{len(nonloop)} non-loop edges exceeds the oracle cap {cap}")
        n = self.n_vertices
        trees = []
        for combo in itertools.combinations(nonloop, n - 1):
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            acyclic = True
            for eid in combo:
                u, v = self._ends[eid]
                ru, rv = find(self._vindex[u]), find(self._vindex[v])
                if ru == rv:
                    acyclic = False
                    break
                parent[ru] = rv
            if acyclic and len({find(i) for i in range(n)}) == 1:
                trees.append(tuple(sorted(combo, key=str)))
        trees.sort(key=lambda t: tuple(str(e) for e in t))
        return trees


@dataclass(frozen=True)
class RootedTree:
    """A spanning tree plus a root; edges orient strictly toward the root."""

    graph: VertexWeightedGraph
    edge_ids: tuple
    root: object

    def __post_init__(self):
        g = self.graph
        if self.root not in g.vertex_ids:
            raise GraphError(f"unknown root {self.root!r}")
        if len(self.edge_ids) != g.n_vertices - 1:
            raise GraphError("a spanning tree needs exactly |V|-1 edges")
        if any(g.is_loop(e) for e in self.edge_ids):
            raise GraphError("loops cannot belong to a tree")
        self._parents()  # validates acyclicity/spanning

    def _parents(self) -> dict:
        """Map child vertex -> (parent vertex, edge id), oriented toward root."""
        g = self.graph
        adj: dict = {v: [] for v in g.vertex_ids}
        for eid in self.edge_ids:
            u, v = g.ends(eid)
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        parents: dict = {}
        seen = {self.root}
        frontier = [self.root]
        while frontier:
            x = frontier.pop()
            for (y, eid) in adj[x]:
                if y not in seen:
                    seen.add(y)
                    parents[y] = (x, eid)
                    frontier.append(y)
        if len(seen) != g.n_vertices:
            raise GraphError("edge set is not a spanning tree")
        return parents

    def directed_edges(self) -> list:
        """The |V|-1 directed edges pointing toward the root."""
        out = []
        for child, (parent, eid) in self._parents().items():
            u, v = self.graph.ends(eid)
            out.append(self.graph.directed_edge(eid, rev=(u != child)))
        return out

    def weight(self):
        """Product of the terminus weights of the root-ward directed edges."""
        g = self.graph
        total = g.ring.one
        for _, (parent, _eid) in self._parents().items():
            total = total * g.weight(parent)
        return total


def rooted_weight(t: RootedTree):
    return t.weight()


def kappa_v_oracle(g: VertexWeightedGraph, v):
    """Rooted weighted complexity at v, summed over brute-forced trees."""
    total = g.ring.zero
    for tree in g.spanning_trees():
        total = total + RootedTree(g, tree, v).weight()
    return total


def kappa_oracle(g: VertexWeightedGraph):
    """Weighted complexity: the sum of the rooted complexities."""
    trees = g.spanning_trees()
    total = g.ring.zero
    for v in g.vertex_ids:
        for tree in trees:
            total = total + RootedTree(g, tree, v).weight()
    return total


# ---------------------------------------------------------------------------
# JSON schema (shared with the CLI)
# ---------------------------------------------------------------------------

@dataclass
class GraphFile:
    """Parsed graph file: the graph plus the voltage data riding on it."""

    graph: VertexWeightedGraph
    prime: int
    root_index: int
    dim: int
    voltages: dict             # edge id -> tuple of dim ints
    extra_voltages: dict       # key -> {edge id -> tuple of ints}, e.g. "beta"


def graph_from_dict(doc: dict) -> GraphFile:
    p = int(doc["prime"])
    M = int(doc.get("root_index", 1))
    d = int(doc.get("dim", 1))
    ring = piring(p, M)
    vertices = []
    for v in doc["vertices"]:
        w = element_from_strings(ring, v["weight"])
        s = element_from_strings(ring, v["sqrt"])
        vertices.append((v["id"], w, s))
    edges = []
    voltages = {}
    extra: dict = {}
    for e in doc["edges"]:
        edges.append((e["id"], e["from"], e["to"]))
        volt = e.get("voltage", [0] * d)
        if len(volt) != d:
            raise GraphError(f"edge {e['id']!r}: voltage has length {len(volt)}, expected {d}")
        voltages[e["id"]] = tuple(int(a) for a in volt)
        for key, val in e.items():
            if key in ("id", "from", "to", "voltage"):
                continue
            if isinstance(val, list):
                extra.setdefault(key, {})[e["id"]] = tuple(int(a) for a in val)
    graph = VertexWeightedGraph(ring, vertices, edges)
    return GraphFile(graph=graph, prime=p, root_index=M, dim=d,
                     voltages=voltages, extra_voltages=extra)


def load_graph(path) -> GraphFile:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid graph file: {exc}") from exc
    try:
        return graph_from_dict(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph file: {exc}") from exc


def graph_to_dict(gf: GraphFile) -> dict:
    g = gf.graph
    doc = {
        "prime": gf.prime,
        "root_index": gf.root_index,
        "dim": gf.dim,
        "vertices": [
            {"id": vid,
             "weight": g.weight(vid).to_strings(),
             "sqrt": g.sqrt_weight(vid).to_strings()}
            for vid in g.vertex_ids
        ],
        "edges": [],
    }
    for eid in g.edge_ids:
        u, v = g.ends(eid)
        entry = {"id": eid, "from": u, "to": v,
                 "voltage": list(gf.voltages.get(eid, (0,) * gf.dim))}
        for key, table in gf.extra_voltages.items():
            if eid in table:
                entry[key] = list(table[eid])
        doc["edges"].append(entry)
    return doc
