"""Marked graphs: admissibility, canonical forms, automorphisms, and the
edge-contraction / flag-marking moves that generate the differential.

A graph is a flag structure: ``adj`` sends each flag to its vertex and
``inv`` is an involution pairing flags into edges; fixed points are legs.
A marking is a distinguished vertex ``dv`` plus a set ``marked`` of flags
at ``dv``.  Legs carry labels 1..n, or no labels at all (core graphs).

Orientations are orderings of the edge set and of the marked set.  All
signs are reported relative to the reference orientation of a canonical
class, which is the sorted edge list and sorted marked list of the
canonical representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

Edge = tuple[int, int]  # (flag, flag) with flag0 < flag1


@dataclass(frozen=True)
class MarkedGraph:
    nv: int
    dv: int
    adj: tuple[int, ...]
    inv: tuple[int, ...]
    marked: frozenset[int]
    labels: tuple[int, ...] | None = None  # flag -> label, 0 on non-legs

    @property
    def nf(self) -> int:
        return len(self.adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(
            (f, self.inv[f]) for f in range(self.nf) if f < self.inv[f]
        )

    @cached_property
    def legs(self) -> tuple[int, ...]:
        return tuple(f for f in range(self.nf) if self.inv[f] == f)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_legs(self) -> int:
        return len(self.legs)

    @property
    def genus(self) -> int:
        return self.n_edges - self.nv + 2  # beta + 1

    @property
    def n_marked(self) -> int:
        return len(self.marked)

    @property
    def labeled(self) -> bool:
        return self.labels is not None

    def label_of(self, f: int) -> int:
        return self.labels[f] if self.labels is not None else 0

    def flags_at(self, v: int) -> list[int]:
        return [f for f in range(self.nf) if self.adj[f] == v]

    def valence(self, v: int) -> int:
        return sum(1 for f in range(self.nf) if self.adj[f] == v)

    def is_connected(self) -> bool:
        if self.nv == 0:
            return False
        seen = {0}
        stack = [0]
        neighbors: dict[int, set[int]] = {v: set() for v in range(self.nv)}
        for f1, f2 in self.edges:
            neighbors[self.adj[f1]].add(self.adj[f2])
            neighbors[self.adj[f2]].add(self.adj[f1])
        while stack:
            v = stack.pop()
            for w in neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.nv

    def marked_legs(self) -> tuple[int, ...]:
        return tuple(f for f in self.legs if f in self.marked)


def validate(g: MarkedGraph) -> list[str]:
    """Return the list of violated admissibility clauses (empty = admissible)."""
    problems = []
    nf = g.nf
    if len(g.inv) != nf or not (0 <= g.dv < g.nv):
        return ["malformed flag structure"]
    if any(not 0 <= g.adj[f] < g.nv for f in range(nf)):
        return ["adjacency out of range"]
    if any(g.inv[g.inv[f]] != f for f in range(nf)):
        problems.append("involution is not an involution")
        return problems
    if not g.is_connected():
        problems.append("graph is not connected")
    for v in range(g.nv):
        if v != g.dv and g.valence(v) < 3:
            problems.append(f"neutral vertex {v} has valence < 3")
    for f1, f2 in g.edges:
        if g.adj[f1] == g.adj[f2] and g.adj[f1] != g.dv:
            problems.append(f"tadpole at neutral vertex {g.adj[f1]}")
        if f1 in g.marked and f2 in g.marked:
            problems.append(f"edge ({f1},{f2}) marked on both flags")
    for f in g.marked:
        if g.adj[f] != g.dv:
            problems.append(f"marked flag {f} not at the distinguished vertex")
    if g.labels is not None:
        if len(g.labels) != nf:
            problems.append("label table length differs from flag count")
            return problems
        got = sorted(g.labels[f] for f in g.legs)
        if got != list(range(1, g.n_legs + 1)):
            problems.append("leg labels are not a bijection to 1..n")
        if any(g.labels[f] != 0 for f in range(nf) if g.inv[f] != f):
            problems.append("non-leg flag carries a label")
    return problems


@dataclass(frozen=True)
class GraphType:
    g: int
    n: int
    r: int

    @property
    def excess(self) -> int:
        return 3 * (self.g - 1) + 2 * (self.n - self.r)

    def degree(self, n_edges: int) -> int:
        return n_edges + self.n - self.r


def graph_type(g: MarkedGraph) -> GraphType:
    return GraphType(g.genus, g.n_legs, g.n_marked)


def degree(g: MarkedGraph) -> int:
    return g.n_edges + g.n_legs - g.n_marked


# ---------------------------------------------------------------------------
# isomorphism search


def _vertex_invariant(g: MarkedGraph, v: int):
    flags = g.flags_at(v)
    leg_labels = sorted(g.label_of(f) for f in flags if g.inv[f] == f)
    return (
        v != g.dv,
        len(flags),
        len(leg_labels),
        tuple(leg_labels),
        sum(1 for f in flags if f in g.marked),
        sum(1 for f in flags if g.inv[f] != f and g.adj[g.inv[f]] == g.dv),
        sum(1 for f in flags if g.adj[g.inv[f]] == v),  # tadpole flags
    )


def isomorphisms(g1: MarkedGraph, g2: MarkedGraph, respect_labels: bool = True):
    """Yield all flag bijections realizing an isomorphism g1 -> g2.

    Isomorphisms fix the distinguished vertex, the marked set and, when
    ``respect_labels`` is set, every leg label.
    """
    if (
        g1.nv != g2.nv
        or g1.nf != g2.nf
        or g1.n_marked != g2.n_marked
        or g1.n_legs != g2.n_legs
        or sorted(map(len, map(g1.flags_at, range(g1.nv))))
        != sorted(map(len, map(g2.flags_at, range(g2.nv))))
    ):
        return
    nf = g1.nf
    phi = [-1] * nf
    used = [False] * nf
    vmap = [-1] * g1.nv
    vused = [False] * g2.nv
    vmap[g1.dv] = g2.dv
    vused[g2.dv] = True

    inv1, inv2 = g1.inv, g2.inv
    adj1, adj2 = g1.adj, g2.adj
    m1, m2 = g1.marked, g2.marked

    def compatible(f, f2) -> bool:
        if (f in m1) != (f2 in m2):
            return False
        leg1, leg2 = inv1[f] == f, inv2[f2] == f2
        if leg1 != leg2:
            return False
        if leg1 and respect_labels and g1.label_of(f) != g2.label_of(f2):
            return False
        return True

    def assign_vertex(v, w) -> bool:
        if vmap[v] == -1:
            if vused[w]:
                return False
            vmap[v] = w
            vused[w] = True
            return True
        return vmap[v] == w

    def search(f: int):
        while f < nf and phi[f] != -1:
            f += 1
        if f == nf:
            yield tuple(phi)
            return
        partner = inv1[f]
        for f2 in range(nf):
            if used[f2] or not compatible(f, f2):
                continue
            p2 = inv2[f2]
            if partner != f and (used[p2] or p2 == f2):
                continue
            if partner != f and not compatible(partner, p2):
                continue
            saved_vmap = list(vmap)
            saved_vused = list(vused)
            ok = assign_vertex(adj1[f], adj2[f2])
            if ok and partner != f:
                ok = assign_vertex(adj1[partner], adj2[p2])
            if ok:
                phi[f] = f2
                used[f2] = True
                if partner != f:
                    phi[partner] = p2
                    used[p2] = True
                yield from search(f + 1)
                phi[f] = -1
                used[f2] = False
                if partner != f:
                    phi[partner] = -1
                    used[p2] = False
            vmap[:] = saved_vmap
            vused[:] = saved_vused

    yield from search(0)


def _perm_sign_of_list(perm: list[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def iso_det_sign(g1: MarkedGraph, g2: MarkedGraph, phi: tuple[int, ...]) -> int:
    """Sign of phi on det(E) x det^{-1}(D), both sides in sorted reference
    order.  For an automorphism this is its det-sign."""
    e1 = g1.edges
    e2 = list(g2.edges)
    index2 = {e: i for i, e in enumerate(e2)}
    eperm = []
    for f1, f2 in e1:
        img = (phi[f1], phi[f2])
        img = (min(img), max(img))
        eperm.append(index2[img])
    d1 = sorted(g1.marked)
    index2d = {f: i for i, f in enumerate(sorted(g2.marked))}
    dperm = [index2d[phi[f]] for f in d1]
    return _perm_sign_of_list(eperm) * _perm_sign_of_list(dperm)


def automorphisms(g: MarkedGraph, respect_labels: bool = True):
    return isomorphisms(g, g, respect_labels=respect_labels)


def has_odd_automorphism(g: MarkedGraph) -> bool:
    """True iff some automorphism reverses the orientation, killing the class."""
    return any(iso_det_sign(g, g, phi) == -1 for phi in automorphisms(g))


# ---------------------------------------------------------------------------
# canonical form

_class_cache: dict[tuple, "OrientedClass"] = {}


@dataclass(frozen=True)
class OrientedClass:
    """Canonical representative of an isomorphism class, with the reference
    orientation given by its sorted edge list and sorted marked list."""

    graph: MarkedGraph
    key: tuple = field(repr=False)
    vanishes: bool

    def __eq__(self, other) -> bool:
        return isinstance(other, OrientedClass) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def edge_order(self) -> tuple[Edge, ...]:
        return self.graph.edges

    @property
    def d_order(self) -> tuple[int, ...]:
        return tuple(sorted(self.graph.marked))


def _neutral_orderings(g: MarkedGraph):
    """Vertex orderings (dv first) compatible with invariant classes."""
    classes: dict[tuple, list[int]] = {}
    for v in range(g.nv):
        if v == g.dv:
            continue
        classes.setdefault(_vertex_invariant(g, v), []).append(v)
    keys = sorted(classes)
    pools = [classes[k] for k in keys]

    def rec(i: int, prefix: tuple[int, ...]):
        if i == len(pools):
            yield prefix
            return
        for perm in permutations(pools[i]):
            yield from rec(i + 1, prefix + perm)

    yield from rec(0, (g.dv,))


def _flag_assignment(g: MarkedGraph, vorder: tuple[int, ...]):
    """Deterministic flag numbering for a given vertex ordering.

    Returns (encoding, phi) with phi the map old flag -> new index.
    """
    vindex = {v: i for i, v in enumerate(vorder)}
    phi = [-1] * g.nf
    next_index = 0
    for v in vorder:
        flags = g.flags_at(v)

        def key(f):
            partner = g.inv[f]
            if partner != f and phi[partner] != -1:
                return (0, phi[partner], 0, 0)
            if partner == f:
                return (1, int(f in g.marked), g.label_of(f), 0)
            return (
                2,
                vindex[g.adj[partner]],
                int(f in g.marked),
                int(partner in g.marked),
            )

        # Assign one flag at a time, re-keying after each choice: once a
        # flag is placed its partner must sort by the assigned index, or
        # tadpole/parallel-edge pairings would depend on input flag ids.
        remaining = set(flags)
        while remaining:
            f = min(remaining, key=lambda x: (key(x), x))
            phi[f] = next_index
            next_index += 1
            remaining.remove(f)

    new_adj = [0] * g.nf
    new_inv = [0] * g.nf
    new_labels = [0] * g.nf
    for f in range(g.nf):
        new_adj[phi[f]] = vindex[g.adj[f]]
        new_inv[phi[f]] = phi[g.inv[f]]
        new_labels[phi[f]] = g.label_of(f)
    new_marked = tuple(sorted(phi[f] for f in g.marked))
    encoding = (
        g.nv,
        g.nf,
        tuple(new_adj),
        tuple(new_inv),
        new_marked,
        tuple(new_labels) if g.labels is not None else None,
    )
    return encoding, tuple(phi)


def canonical_form(
    g: MarkedGraph,
    edge_order: tuple[Edge, ...] | None = None,
    d_order: tuple[int, ...] | None = None,
) -> tuple[OrientedClass, int]:
    """Canonicalize ``g`` and return the class together with the sign
    relating the given orientation to the class's reference orientation.

    ``edge_order``/``d_order`` default to the sorted orders of ``g`` itself.
    The sign is well defined for non-vanishing classes; for vanishing ones
    it is reported relative to an arbitrary but fixed choice.
    """
    if edge_order is None:
        edge_order = g.edges
    if d_order is None:
        d_order = tuple(sorted(g.marked))

    best = None
    for vorder in _neutral_orderings(g):
        encoding, phi = _flag_assignment(g, vorder)
        if best is None or encoding < best[0]:
            best = (encoding, phi)
    encoding, phi = best

    cls = _class_cache.get(encoding)
    if cls is None:
        nv, nf, adj, inv, marked, labels = encoding
        canon = MarkedGraph(
            nv=nv,
            dv=0,
            adj=adj,
            inv=inv,
            marked=frozenset(marked),
            labels=labels,
        )
        cls = OrientedClass(
            graph=canon, key=encoding, vanishes=has_odd_automorphism(canon)
        )
        _class_cache[encoding] = cls
    canon = cls.graph

    mapped_edges = []
    for f1, f2 in edge_order:
        img = (phi[f1], phi[f2])
        mapped_edges.append((min(img), max(img)))
    ref_index = {e: i for i, e in enumerate(canon.edges)}
    esign = _perm_sign_of_list([ref_index[e] for e in mapped_edges])
    ref_d = {f: i for i, f in enumerate(sorted(canon.marked))}
    dsign = _perm_sign_of_list([ref_d[phi[f]] for f in d_order])
    return cls, esign * dsign


# ---------------------------------------------------------------------------
# moves


def _rebuild(
    g: MarkedGraph,
    drop_flags: set[int],
    merge: dict[int, int] | None = None,
    new_marked: set[int] | None = None,
    new_labels: dict[int, int] | None = None,
):
    """Delete flags, optionally merge vertices, and re-index densely.

    Returns (graph, flag_map, vertex_map).
    """
    merge = merge or {}
    keep = [f for f in range(g.nf) if f not in drop_flags]
    fmap = {f: i for i, f in enumerate(keep)}
    vtarget = [merge.get(v, v) for v in range(g.nv)]
    vkeep = sorted(set(vtarget))
    vmap = {v: i for i, v in enumerate(vkeep)}
    marked_src = g.marked if new_marked is None else new_marked
    labels = None
    if g.labels is not None:
        labels = [0] * len(keep)
        for f in keep:
            lbl = g.labels[f]
            if new_labels and f in new_labels:
                lbl = new_labels[f]
            labels[fmap[f]] = lbl
    elif new_labels:
        raise ValueError("cannot label flags of an unlabeled graph")
    out = MarkedGraph(
        nv=len(vkeep),
        dv=vmap[vtarget[g.dv]],
        adj=tuple(vmap[vtarget[g.adj[f]]] for f in keep),
        inv=tuple(fmap[g.inv[f]] for f in keep),
        marked=frozenset(fmap[f] for f in marked_src if f not in drop_flags),
        labels=tuple(labels) if labels is not None else None,
    )
    return out, fmap, vmap


def contract_edge(
    g: MarkedGraph,
    e: Edge,
    edge_order: tuple[Edge, ...],
    d_order: tuple[int, ...],
):
    """All summands of the edge-contraction move on ``e``.

    Returns a list of (graph, edge_order, d_order, sign).  Tadpoles
    contract to zero (empty list); a marked edge produces one summand per
    flag newly adjacent to the distinguished vertex, discarding summands
    that would create a double-marked tadpole.
    """
    f1, f2 = e
    if g.inv[f1] != f2:
        raise ValueError(f"{e} is not an edge")
    v1, v2 = g.adj[f1], g.adj[f2]
    if v1 == v2:
        return []  # tadpole

    pos = edge_order.index(e)
    move_sign = -1 if (len(edge_order) - 1 - pos) % 2 else 1
    rest_edges = edge_order[:pos] + edge_order[pos + 1 :]

    marked_flags = [f for f in e if f in g.marked]
    if not marked_flags:
        # keep dv; otherwise keep the smaller index
        if v2 == g.dv or (v1 != g.dv and v2 < v1):
            v1, v2 = v2, v1
        out, fmap, _ = _rebuild(g, {f1, f2}, merge={v2: v1})
        new_eo = tuple(_map_edge(fmap, ed) for ed in rest_edges)
        new_do = tuple(fmap[f] for f in d_order)
        return [(out, new_eo, new_do, move_sign)]

    fm = marked_flags[0]
    w = g.adj[g.inv[fm]]  # neutral endpoint absorbed into dv
    newly_adjacent = [f for f in g.flags_at(w) if f != g.inv[fm]]
    dpos = d_order.index(fm)
    results = []
    for fi in newly_adjacent:
        if g.inv[fi] in g.marked:
            continue  # double-marked tadpole: zero by definition
        new_marked = (set(g.marked) - {fm}) | {fi}
        out, fmap, _ = _rebuild(g, {f1, f2}, merge={w: g.dv}, new_marked=new_marked)
        new_eo = tuple(_map_edge(fmap, ed) for ed in rest_edges)
        new_do = tuple(
            fmap[fi] if i == dpos else fmap[f] for i, f in enumerate(d_order)
        )
        results.append((out, new_eo, new_do, move_sign))
    return results


def _map_edge(fmap: dict[int, int], e: Edge) -> Edge:
    a, b = fmap[e[0]], fmap[e[1]]
    return (min(a, b), max(a, b))


def mark_flag(
    g: MarkedGraph,
    f: int,
    edge_order: tuple[Edge, ...],
    d_order: tuple[int, ...],
):
    """Mark the unmarked dv-flag ``f``, placing it first in the marked order.

    Returns (graph, edge_order, d_order, sign), or None when marking would
    create a double-marked tadpole.
    """
    if g.adj[f] != g.dv or f in g.marked:
        raise ValueError(f"flag {f} is not an unmarked flag at the dv")
    if g.inv[f] != f and g.inv[f] in g.marked:
        return None
    out = MarkedGraph(
        nv=g.nv,
        dv=g.dv,
        adj=g.adj,
        inv=g.inv,
        marked=g.marked | {f},
        labels=g.labels,
    )
    return out, edge_order, (f,) + d_order, 1


def core(g: MarkedGraph) -> MarkedGraph:
    """Forget leg labels and strip marked legs."""
    drop = set(g.marked_legs())
    kept = MarkedGraph(
        nv=g.nv,
        dv=g.dv,
        adj=g.adj,
        inv=g.inv,
        marked=g.marked,
        labels=None,
    )
    out, _, _ = _rebuild(kept, drop)
    return out


def add_marked_leg(
    g: MarkedGraph,
    edge_order: tuple[Edge, ...],
    d_order: tuple[int, ...],
):
    """Adjoin a marked leg labeled n+1 at the dv, last in the marked order."""
    f = g.nf
    labels = None
    if g.labels is not None:
        labels = g.labels + (g.n_legs + 1,)
    out = MarkedGraph(
        nv=g.nv,
        dv=g.dv,
        adj=g.adj + (g.dv,),
        inv=g.inv + (f,),
        marked=g.marked | {f},
        labels=labels,
    )
    return out, edge_order, d_order + (f,)


def label_legs(g: MarkedGraph, assignment: dict[int, int] | None = None) -> MarkedGraph:
    """Attach leg labels to an unlabeled graph.

    ``assignment`` maps leg flags to labels; by default legs are labeled
    1..n in flag order.
    """
    if g.labels is not None:
        raise ValueError("graph is already labeled")
    labels = [0] * g.nf
    if assignment is None:
        assignment = {f: i + 1 for i, f in enumerate(g.legs)}
    for f, lbl in assignment.items():
        labels[f] = lbl
    return MarkedGraph(
        nv=g.nv, dv=g.dv, adj=g.adj, inv=g.inv, marked=g.marked, labels=tuple(labels)
    )


def relabel_legs(g: MarkedGraph, sigma: dict[int, int]) -> MarkedGraph:
    """Apply the label permutation i -> sigma[i] (labels are 1-based)."""
    if g.labels is None:
        raise ValueError("graph has no leg labels")
    labels = tuple(sigma[l] if l else 0 for l in g.labels)
    return MarkedGraph(
        nv=g.nv, dv=g.dv, adj=g.adj, inv=g.inv, marked=g.marked, labels=labels
    )


def leg_symmetry_group(g: MarkedGraph) -> dict[tuple[int, ...], int]:
    """The group of label permutations fixing the class, with det-signs.

    Returns a map from 0-indexed permutations (images of 0..n-1) to the sign
    of their action on the oriented class.  Raises on a vanishing class,
    where the action is not well defined.
    """
    if g.labels is None:
        raise ValueError("leg symmetry requires a labeled graph")
    n = g.n_legs
    out: dict[tuple[int, ...], int] = {}
    for phi in automorphisms(g, respect_labels=False):
        sigma = [0] * n
        for f in g.legs:
            sigma[g.labels[f] - 1] = g.labels[phi[f]] - 1
        sigma = tuple(sigma)
        sign = iso_det_sign(g, g, phi)
        if out.setdefault(sigma, sign) != sign:
            raise ValueError("vanishing class: odd automorphism present")
    return out


def cut_edge(g: MarkedGraph, e: Edge) -> MarkedGraph:
    """Cut a non-disconnecting edge, labeling the new legs n+1 and n+2."""
    f1, f2 = e
    if g.inv[f1] != f2 or f1 == f2:
        raise ValueError(f"{e} is not an edge")
    if g.genus < 2:
        raise ValueError("cutting requires genus >= 2")
    inv = list(g.inv)
    inv[f1], inv[f2] = f1, f2
    labels = list(g.labels) if g.labels is not None else None
    if labels is not None:
        labels[f1] = g.n_legs + 1
        labels[f2] = g.n_legs + 2
    out = MarkedGraph(
        nv=g.nv,
        dv=g.dv,
        adj=g.adj,
        inv=tuple(inv),
        marked=g.marked,
        labels=tuple(labels) if labels is not None else None,
    )
    if not out.is_connected():
        raise ValueError(f"edge {e} disconnects the graph")
    return out


def glue_legs(g: MarkedGraph, f1: int, f2: int) -> MarkedGraph:
    """Join two legs into an edge (inverse of cutting), dropping labels."""
    if g.inv[f1] != f1 or g.inv[f2] != f2 or f1 == f2:
        raise ValueError("both flags must be distinct legs")
    inv = list(g.inv)
    inv[f1], inv[f2] = f2, f1
    labels = list(g.labels) if g.labels is not None else None
    if labels is not None:
        labels[f1] = labels[f2] = 0
    return MarkedGraph(
        nv=g.nv,
        dv=g.dv,
        adj=g.adj,
        inv=tuple(inv),
        marked=g.marked,
        labels=tuple(labels) if labels is not None else None,
    )


# ---------------------------------------------------------------------------
# the extremal core family


def build_theta(g: int, ell: int, p: int) -> MarkedGraph:
    """The extremal core graph with ``p`` double-edge neutral vertices.

    Built at the excess of (g, ell): a dv joined to p vertices by marked
    parallel edge pairs (one leg each), to (g-1-p)/2 vertices by marked
    triples, and to (m-p)/2 vertices by single marked edges (two legs each).
    """
    m = 3 * (g - 1) + 2 * ell
    if m < 0:
        raise ValueError("negative excess")
    if p < 0 or p >= g or p > m or (g - p) % 2 == 0:
        raise ValueError(f"invalid parameter p={p} for (g, ell)=({g}, {ell})")
    t = (g - 1 - p) // 2
    y = (m - p) // 2

    adj: list[int] = []
    inv: list[int] = []
    marked: set[int] = set()

    def new_flag(v: int) -> int:
        adj.append(v)
        inv.append(len(adj) - 1)
        return len(adj) - 1

    def edge(v: int, w: int, mark_at_v: bool):
        a, b = new_flag(v), new_flag(w)
        inv[a], inv[b] = b, a
        if mark_at_v:
            marked.add(a)

    def leg(v: int):
        new_flag(v)

    vertex = 1
    for _ in range(p):
        edge(0, vertex, True)
        edge(0, vertex, True)
        leg(vertex)
        vertex += 1
    for _ in range(t):
        for _ in range(3):
            edge(0, vertex, True)
        vertex += 1
    for _ in range(y):
        edge(0, vertex, True)
        leg(vertex)
        leg(vertex)
        vertex += 1

    return MarkedGraph(
        nv=vertex,
        dv=0,
        adj=tuple(adj),
        inv=tuple(inv),
        marked=frozenset(marked),
        labels=None,
    )


# ---------------------------------------------------------------------------
# textual encoding (used by cache files and CLI I/O)


def encode_graph(g: MarkedGraph) -> str:
    parts = [
        str(g.nv),
        str(g.dv),
        ",".join(map(str, g.adj)),
        ",".join(map(str, g.inv)),
        ",".join(map(str, sorted(g.marked))),
        ",".join(map(str, g.labels)) if g.labels is not None else "*",
    ]
    return "|".join(parts)


def decode_graph(text: str) -> MarkedGraph:
    nv, dv, adj, inv, marked, labels = text.strip().split("|")

    def ints(s: str) -> tuple[int, ...]:
        return tuple(int(x) for x in s.split(",")) if s else ()

    return MarkedGraph(
        nv=int(nv),
        dv=int(dv),
        adj=ints(adj),
        inv=ints(inv),
        marked=frozenset(ints(marked)),
        labels=None if labels == "*" else ints(labels),
    )
