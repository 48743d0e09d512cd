"""Enumeration of marked-graph classes and assembly of the equivariant
chain complexes B(g, n, r).

A complex collects every non-vanishing isomorphism class of type (g, n, s)
with s >= r, graded by degree |E| + n - s.  The differential contracts
edges (the contracted edge is dropped from the last wedge position) and
marks flags (the new flag enters first in the marked order, with a global
(-1)^{|E|} factor).  d^2 = 0 is verified at build time and any failure
aborts with the offending basis pair.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from pathlib import Path

from .graphs import (
    MarkedGraph,
    OrientedClass,
    automorphisms,
    canonical_form,
    contract_edge,
    add_marked_leg,
    decode_graph,
    degree,
    encode_graph,
    label_legs,
    mark_flag,
    relabel_legs,
    validate,
)
from .partitions import Partition, cycle_types
from .reptheory import ClassFunction, Permutation, cycle_type_representative

CACHE_FORMAT = 1

SparseColumns = list[dict[int, int]]  # one {row: entry} per basis column


# ---------------------------------------------------------------------------
# enumeration


def _edge_multisets(nv: int, ne: int):
    """Edge multisets on vertices 0..nv-1 (0 distinguished): connected,
    tadpoles only at 0, every other vertex met by at least one edge."""
    pairs = [(0, 0)] + [(v, w) for v in range(nv) for w in range(v + 1, nv)]
    for combo in combinations_with_replacement(range(len(pairs)), ne):
        chosen = [pairs[i] for i in combo]
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        touched = {0}
        for v, w in chosen:
            touched.add(v)
            touched.add(w)
            parent[find(v)] = find(w)
        if len(touched) < nv:
            continue
        if len({find(v) for v in range(nv)}) != 1:
            continue
        yield chosen


def _leg_distributions(nv: int, n_legs: int, edge_valence: list[int]):
    """All ways to place ``n_legs`` legs so every neutral vertex reaches
    valence >= 3."""
    minima = [0] + [max(0, 3 - edge_valence[v]) for v in range(1, nv)]
    spare = n_legs - sum(minima)
    if spare < 0:
        return

    def rec(v: int, left: int, acc: tuple[int, ...]):
        if v == nv - 1:
            yield acc + (minima[v] + left,)
            return
        for extra in range(left + 1):
            yield from rec(v + 1, left - extra, acc + (minima[v] + extra,))

    yield from rec(0, spare, ())


def _assemble(nv: int, chosen: list[tuple[int, int]], legs_at: tuple[int, ...]):
    """Flag structure for an edge multiset plus per-vertex leg counts."""
    adj: list[int] = []
    inv: list[int] = []
    for v, w in chosen:
        adj.extend([v, w])
        inv.extend([len(adj) - 1, len(adj) - 2])
    for v in range(nv):
        for _ in range(legs_at[v]):
            adj.append(v)
            inv.append(len(adj) - 1)
    return MarkedGraph(
        nv=nv, dv=0, adj=tuple(adj), inv=tuple(inv), marked=frozenset(), labels=None
    )


def _marking_choices(g: MarkedGraph, min_marked: int):
    """Subsets of dv-flags usable as the marked set (no double-marked edge)."""
    dv_flags = [f for f in range(g.nf) if g.adj[f] == g.dv]
    for s in range(max(min_marked, 0), len(dv_flags) + 1):
        for sub in combinations(dv_flags, s):
            chosen = set(sub)
            if any(g.inv[f] != f and g.inv[f] in chosen for f in sub):
                continue  # would double-mark a tadpole
            yield frozenset(chosen)


def enumerate_unlabeled_classes(g: int, n: int, r: int) -> list[OrientedClass]:
    """Canonical unlabeled marked-graph classes of type (g, n, s), s >= r.

    Classes that vanish for every labeling are not filtered here; the
    orientation test depends on the labeling and happens downstream.
    """
    seen: dict[tuple, OrientedClass] = {}
    e_max = 3 * (g - 1) + n - max(r, 0)
    for ne in range(max(g - 1, 0), e_max + 1):
        nv = ne - g + 2
        if nv < 1:
            continue
        for chosen in _edge_multisets(nv, ne):
            edge_valence = [0] * nv
            for v, w in chosen:
                edge_valence[v] += 1
                edge_valence[w] += 1
            for legs_at in _leg_distributions(nv, n, edge_valence):
                base = _assemble(nv, chosen, legs_at)
                if validate(base):
                    continue
                for marked in _marking_choices(base, r):
                    if ne + n - len(marked) > 3 * (g - 1) + 2 * (n - len(marked)):
                        continue  # degree above the excess: no admissible class
                    graph = MarkedGraph(
                        nv=base.nv,
                        dv=0,
                        adj=base.adj,
                        inv=base.inv,
                        marked=marked,
                        labels=None,
                    )
                    cls, _ = canonical_form(graph)
                    seen.setdefault(cls.key, cls)
    return [seen[k] for k in sorted(seen)]


def _labelings_up_to_symmetry(g: MarkedGraph, n: int):
    """Leg-label assignments modulo the leg action of Aut(g) (unlabeled)."""
    legs = g.legs
    index = {f: i for i, f in enumerate(legs)}
    leg_perms = {
        tuple(index[phi[f]] for f in legs) for phi in automorphisms(g)
    }
    for assignment in permutations(range(1, n + 1)):
        if all(
            assignment <= tuple(assignment[p[i]] for i in range(n))
            for p in leg_perms
        ):
            yield {legs[i]: assignment[i] for i in range(n)}


def enumerate_marked_graphs(
    g: int, n: int, r: int, cache_dir: str | Path | None = None
) -> list[OrientedClass]:
    """All non-vanishing labeled classes of B(g, n, r), deterministically
    ordered by (degree, canonical key)."""
    if cache_dir is not None:
        cached = load_enumeration(cache_dir, g, n, r)
        if cached is not None:
            return cached
    out: dict[tuple, OrientedClass] = {}
    for unl in enumerate_unlabeled_classes(g, n, r):
        for assignment in _labelings_up_to_symmetry(unl.graph, n):
            labeled = label_legs(unl.graph, assignment)
            cls, _ = canonical_form(labeled)
            if not cls.vanishes:
                out.setdefault(cls.key, cls)
    classes = sorted(out.values(), key=lambda c: (degree(c.graph), c.key))
    if cache_dir is not None:
        save_enumeration(cache_dir, g, n, r, classes)
    return classes


# ---------------------------------------------------------------------------
# the chain complex


@dataclass(frozen=True)
class EquivariantComplex:
    g: int
    n: int
    r: int
    basis: dict[int, tuple[OrientedClass, ...]]
    diff: dict[int, SparseColumns]  # degree i -> matrix C_i -> C_{i-1}
    index: dict[tuple, tuple[int, int]]  # canonical key -> (degree, position)

    @property
    def excess(self) -> int:
        return 3 * (self.g - 1) + 2 * (self.n - self.r)

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def dim(self, i: int) -> int:
        return len(self.basis.get(i, ()))

    def total_dim(self) -> int:
        return sum(len(b) for b in self.basis.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * self.dim(i) for i in self.basis)


def boundary_terms(cls: OrientedClass) -> dict[OrientedClass, int]:
    """The differential of a basis class, as canonical classes with signs."""
    g = cls.graph
    eo, do = g.edges, tuple(sorted(g.marked))
    out: dict[OrientedClass, int] = {}

    def accumulate(result, factor: int):
        h, eo2, do2, s = result
        bad = validate(h)
        if bad:
            raise AssertionError(f"inadmissible boundary term from {encode_graph(g)}: {bad}")
        c, s2 = canonical_form(h, eo2, do2)
        if not c.vanishes:
            out[c] = out.get(c, 0) + factor * s * s2

    for e in eo:
        for result in contract_edge(g, e, eo, do):
            accumulate(result, 1)
    mark_sign = -1 if g.n_edges % 2 else 1
    for f in range(g.nf):
        if g.adj[f] == g.dv and f not in g.marked:
            result = mark_flag(g, f, eo, do)
            if result is not None:
                accumulate(result, mark_sign)
    return {c: v for c, v in out.items() if v}


def build_complex(
    g: int, n: int, r: int, cache_dir: str | Path | None = None
) -> EquivariantComplex:
    classes = enumerate_marked_graphs(g, n, r, cache_dir=cache_dir)
    basis: dict[int, list[OrientedClass]] = {}
    for cls in classes:
        basis.setdefault(degree(cls.graph), []).append(cls)
    index = {
        cls.key: (i, pos)
        for i, classes_i in basis.items()
        for pos, cls in enumerate(classes_i)
    }
    diff: dict[int, SparseColumns] = {}
    for i in sorted(basis):
        cols: SparseColumns = []
        for cls in basis[i]:
            col: dict[int, int] = {}
            for target, coeff in boundary_terms(cls).items():
                where = index.get(target.key)
                if where is None or where[0] != i - 1:
                    raise AssertionError(
                        f"boundary of a degree-{i} class left the enumerated "
                        f"basis: {encode_graph(target.graph)}"
                    )
                col[where[1]] = coeff
            cols.append(col)
        diff[i] = cols
    complex_ = EquivariantComplex(
        g=g, n=n, r=r,
        basis={i: tuple(b) for i, b in basis.items()},
        diff=diff,
        index=index,
    )
    _check_d_squared(complex_)
    return complex_


def _check_d_squared(c: EquivariantComplex) -> None:
    for i in c.degrees():
        if i - 1 not in c.diff:
            continue
        lower = c.diff[i - 1]
        for pos, col in enumerate(c.diff[i]):
            acc: dict[int, int] = {}
            for row, coeff in col.items():
                for row2, coeff2 in lower[row].items():
                    acc[row2] = acc.get(row2, 0) + coeff * coeff2
            bad = {k: v for k, v in acc.items() if v}
            if bad:
                cls = c.basis[i][pos]
                raise AssertionError(
                    f"d^2 != 0 on B({c.g},{c.n},{c.r}) degree {i} basis "
                    f"element {pos} ({encode_graph(cls.graph)}): {bad}"
                )


# ---------------------------------------------------------------------------
# group action and characters


def _one_based(sigma: Permutation) -> dict[int, int]:
    return {i + 1: sigma[i] + 1 for i in range(len(sigma))}


def group_action_matrix(
    c: EquivariantComplex, i: int, sigma: Permutation
) -> SparseColumns:
    """Signed permutation matrix of the leg relabeling by ``sigma``
    (0-indexed images) on degree ``i``."""
    lut = _one_based(sigma)
    cols: SparseColumns = []
    for cls in c.basis.get(i, ()):
        moved = relabel_legs(cls.graph, lut)
        target, sign = canonical_form(moved)
        deg, pos = c.index[target.key]
        if deg != i:
            raise AssertionError("relabeling changed the degree")
        cols.append({pos: sign})
    return cols


def chain_character(c: EquivariantComplex, i: int) -> ClassFunction:
    """Character of the signed permutation action on C_i."""
    values: dict[Partition, Fraction] = {}
    for mu in cycle_types(c.n):
        sigma = cycle_type_representative(mu)
        lut = _one_based(sigma)
        trace = 0
        for cls in c.basis.get(i, ()):
            moved = relabel_legs(cls.graph, lut)
            target, sign = canonical_form(moved)
            if target.key == cls.key:
                trace += sign
        values[mu] = Fraction(trace)
    return ClassFunction(c.n, values)


# ---------------------------------------------------------------------------
# stabilization


@dataclass(frozen=True)
class ChainMap:
    source: EquivariantComplex
    target: EquivariantComplex
    cols: dict[int, SparseColumns]  # degree -> matrix source_i -> target_i


def stabilization_map(
    source: EquivariantComplex, target: EquivariantComplex | None = None,
    cache_dir: str | Path | None = None,
) -> ChainMap:
    """The chain map adjoining a marked leg labeled n+1 (degree 0)."""
    if target is None:
        target = build_complex(
            source.g, source.n + 1, source.r + 1, cache_dir=cache_dir
        )
    cols: dict[int, SparseColumns] = {}
    for i in source.degrees():
        cols_i: SparseColumns = []
        for cls in source.basis[i]:
            g = cls.graph
            h, eo, do = add_marked_leg(g, g.edges, tuple(sorted(g.marked)))
            tgt, sign = canonical_form(h, eo, do)
            if tgt.vanishes:
                cols_i.append({})
                continue
            deg, pos = target.index[tgt.key]
            if deg != i:
                raise AssertionError("stabilization changed the degree")
            cols_i.append({pos: sign})
        cols[i] = cols_i
    psi = ChainMap(source=source, target=target, cols=cols)
    _check_chain_map(psi)
    return psi


def _check_chain_map(f: ChainMap) -> None:
    for i in f.source.degrees():
        if i - 1 not in f.source.basis:
            continue
        lhs = _compose_sparse(f.cols.get(i - 1, []), f.source.diff.get(i, []))
        rhs = _compose_sparse(f.target.diff.get(i, []), f.cols.get(i, []))
        if lhs != rhs:
            raise AssertionError(
                f"stabilization fails to commute with d in degree {i}"
            )


def _compose_sparse(a: SparseColumns, b: SparseColumns) -> SparseColumns:
    """Columns of A·B where the columns of B index the composite's columns."""
    out: SparseColumns = []
    for col in b:
        acc: dict[int, int] = {}
        for mid, coeff in col.items():
            for row, coeff2 in a[mid].items():
                acc[row] = acc.get(row, 0) + coeff * coeff2
        out.append({k: v for k, v in acc.items() if v})
    return out


# ---------------------------------------------------------------------------
# enumeration cache


def cache_path(cache_dir: str | Path, g: int, n: int, r: int) -> Path:
    return Path(cache_dir) / f"basis-{g}-{n}-{r}.txt"


def save_enumeration(
    cache_dir: str | Path, g: int, n: int, r: int, classes: list[OrientedClass]
) -> Path:
    body = "".join(
        f"{degree(cls.graph)}|{encode_graph(cls.graph)}\n" for cls in classes
    )
    header = {
        "format": CACHE_FORMAT,
        "g": g,
        "n": n,
        "r": r,
        "count": len(classes),
        "checksum": hashlib.sha256(body.encode()).hexdigest(),
    }
    path = cache_path(cache_dir, g, n, r)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(header) + "\n" + body)
    return path


def load_enumeration(
    cache_dir: str | Path, g: int, n: int, r: int
) -> list[OrientedClass] | None:
    """Reload a cached enumeration; any inconsistency discards the cache."""
    path = cache_path(cache_dir, g, n, r)
    if not path.exists():
        return None
    try:
        head, _, body = path.read_text().partition("\n")
        header = json.loads(head)
        if header.get("format") != CACHE_FORMAT or (
            header.get("g"), header.get("n"), header.get("r")
        ) != (g, n, r):
            return None
        if hashlib.sha256(body.encode()).hexdigest() != header["checksum"]:
            return None
        classes = []
        for line in body.splitlines():
            deg_text, _, graph_text = line.partition("|")
            graph = decode_graph(graph_text)
            cls, sign = canonical_form(graph)
            if (
                cls.graph != graph
                or sign != 1
                or cls.vanishes
                or int(deg_text) != degree(graph)
            ):
                return None
            classes.append(cls)
        if len(classes) != header["count"]:
            return None
        return classes
    except (ValueError, KeyError, IndexError):
        return None
