"""Weighted Laplacian constructions and the vertex-weighted matrix-tree laws.

For a weighted graph the bundle collects:

  D      degree matrix, D(u,u) = sum of w_{t(e)} over directed e with o(e)=u
         (each loop contributes twice: both of its directed copies start there)
  W      weighted adjacency, W(u,v) = sum over e: u->v of w_v
  Wsym   symmetrized adjacency, entries sum s_u * s_v over e: u->v
  L      D - W
  Lsym   D - Wsym
  Sdiag  diagonal matrix of the weights, sqrtS its designated square root
  B      weighted boundary operator on a chosen section of directed edges

The identities Lsym = B B^T (independent of the section), sqrtS L = Lsym
sqrtS, and Lsym (sqrtS 1) = 0 hold by construction and are exercised in the
test suite.  The two tree-counting laws are

  det(Lsym minor at v)          = rooted complexity at v
  (sum of weights) adj(Lsym)    = sqrtS J sqrtS * total complexity

All determinants here are exact: Gaussian elimination over the field R,
Berkowitz elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import CycloElement, PiRing
from .graphs import Disconnected, GraphError, RootedTree, VertexWeightedGraph
from .linalg import LabeledMatrix, adjugate, det_berkowitz, det_gauss, minor


@dataclass
class LaplacianBundle:
    graph: VertexWeightedGraph
    D: LabeledMatrix
    W: LabeledMatrix
    Wsym: LabeledMatrix
    L: LabeledMatrix
    Lsym: LabeledMatrix
    Sdiag: LabeledMatrix
    sqrtS: LabeledMatrix
    B: LabeledMatrix
    section: tuple  # directed edges chosen per undirected edge


def build_bundle(g: VertexWeightedGraph, reverse_section: bool = False) -> LaplacianBundle:
    """All Laplacian matrices of g, labeled by the declared vertex order.

    The section behind B takes the recorded direction of every undirected
    edge; reverse_section flips all of them (used to check that Lsym = B B^T
    does not depend on the choice).
    """
    ring = g.ring
    vids = g.vertex_ids
    zero = ring.zero

    dget = {v: zero for v in vids}
    went = {}
    sent = {}
    for e in g.directed_edges():
        u, v = e.origin, e.terminus
        dget[u] = dget[u] + g.weight(v)
        went[(u, v)] = went.get((u, v), zero) + g.weight(v)
        sent[(u, v)] = sent.get((u, v), zero) + g.sqrt_weight(u) * g.sqrt_weight(v)

    D = LabeledMatrix.diagonal(ring, vids, lambda v: dget[v])
    W = LabeledMatrix.build(ring, vids, vids, lambda u, v: went.get((u, v), zero))
    Wsym = LabeledMatrix.build(ring, vids, vids, lambda u, v: sent.get((u, v), zero))
    L = D - W
    Lsym = D - Wsym
    Sdiag = LabeledMatrix.diagonal(ring, vids, g.weight)
    sqrtS = LabeledMatrix.diagonal(ring, vids, g.sqrt_weight)

    section = tuple(g.directed_edge(eid, rev=reverse_section) for eid in g.edge_ids)
    bent = []
    for u in vids:
        row = []
        for e in section:
            if e.origin == e.terminus:
                row.append(zero)
            elif e.origin == u:
                row.append(g.sqrt_weight(e.terminus))
            elif e.terminus == u:
                row.append(-g.sqrt_weight(e.origin))
            else:
                row.append(zero)
        bent.append(row)
    B = LabeledMatrix(ring, vids, [e.eid for e in section], bent)

    return LaplacianBundle(graph=g, D=D, W=W, Wsym=Wsym, L=L, Lsym=Lsym,
                           Sdiag=Sdiag, sqrtS=sqrtS, B=B, section=section)


def _det(m: LabeledMatrix):
    """Gauss over the field R, Berkowitz over quotient rings."""
    if isinstance(m.ring, PiRing):
        return det_gauss(m)
    return det_berkowitz(m)


def _to_base(x):
    """Descend a possibly-cyclotomic value to R (exact, asserts descent)."""
    if isinstance(x, CycloElement):
        return x.as_base()
    return x


def kappa_v_det(g: VertexWeightedGraph, v):
    """Rooted weighted complexity at v as a Laplacian minor determinant."""
    if not g.is_connected():
        raise Disconnected("rooted complexity of a disconnected graph")
    bundle = build_bundle(g)
    return _to_base(_det(minor(bundle.Lsym, [v], [v])))


def kappa_det(g: VertexWeightedGraph):
    """Weighted complexity as the sum of the rooted minor determinants."""
    if not g.is_connected():
        raise Disconnected("complexity of a disconnected graph")
    bundle = build_bundle(g)
    total = g.ring.zero
    for v in g.vertex_ids:
        total = total + _det(minor(bundle.Lsym, [v], [v]))
    return _to_base(total)


def kappa_all_det(g: VertexWeightedGraph) -> dict:
    """All rooted complexities at once, read off the adjugate diagonal."""
    if not g.is_connected():
        raise Disconnected("complexity of a disconnected graph")
    bundle = build_bundle(g)
    adj = adjugate(bundle.Lsym)
    return {v: _to_base(adj.get(v, v)) for v in g.vertex_ids}


def mtt2_check(g: VertexWeightedGraph) -> bool:
    """Assert (sum_z w_z) * adj(Lsym)(u,v) = s_u s_v kappa for ALL pairs."""
    if not g.is_connected():
        raise Disconnected("matrix-tree check on a disconnected graph")
    bundle = build_bundle(g)
    adj = adjugate(bundle.Lsym)
    total_w = g.weight_sum()
    kappa = g.ring.zero
    for v in g.vertex_ids:
        kappa = kappa + adj.get(v, v)  # adjugate diagonal = rooted minors
    for u in g.vertex_ids:
        for v in g.vertex_ids:
            lhs = total_w * adj.get(u, v)
            rhs = g.sqrt_weight(u) * g.sqrt_weight(v) * kappa
            if lhs != rhs:
                return False
    return True


def boundary_minor_check(g: VertexWeightedGraph, v, edge_subset) -> bool:
    """The boundary-minor law for an edge set A with |A| = |V| - 1.

    If A does not span a tree the minor determinant vanishes; if it does,
    the determinant squares to the weight of the A-tree rooted at v.
    """
    edge_subset = list(edge_subset)
    if len(edge_subset) != g.n_vertices - 1:
        raise ValueError("edge subset must have |V| - 1 elements")
    if any(g.is_loop(e) for e in edge_subset):
        raise ValueError("edge subset must be loop-free")
    bundle = build_bundle(g)
    chosen = set(edge_subset)
    sub = minor(bundle.B, [v], [e for e in g.edge_ids if e not in chosen])
    d = _det(sub)
    try:
        tree = RootedTree(g, tuple(edge_subset), v)
    except GraphError:
        return not d  # non-tree: determinant must vanish
    return d * d == tree.weight()
