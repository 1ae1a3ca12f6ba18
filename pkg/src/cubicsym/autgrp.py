"""Colored-graph refinement and individualization-refinement search.

One search engine backs four operations: equitable refinement, canonical
forms (and hence isomorphism tests), full automorphism groups (optionally
color-preserving), and extension of partial vertex maps to automorphisms.

The canonical form is the lexicographically smallest leaf code over the
whole refinement tree, with no automorphism pruning: every leaf whose
determined prefix is not already beaten gets explored.  That costs a
factor of |Aut| in leaf visits but buys a simple correctness argument,
and all leaves achieving the minimum yield the full automorphism group
as a by-product (compositions of equal-code leaf labelings).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .graph import Graph
from .graph6 import encode_graph6
from .perm import (
    DEFAULT_GROUP_CAP,
    GroupTooLargeError,
    Permutation,
    PermutationGroup,
)

VertexColoring = Sequence[int]


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered sequence of disjoint vertex cells covering [0, n)."""

    cells: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    def is_equitable(self, graph: Graph) -> bool:
        masks = [sum(1 << v for v in c) for c in self.cells]
        for cell in self.cells:
            for mask in masks:
                counts = {(graph.adj_bits[v] & mask).bit_count() for v in cell}
                if len(counts) > 1:
                    return False
        return True


def cells_from_coloring(n: int, colors: VertexColoring) -> Tuple[Tuple[int, ...], ...]:
    if len(colors) != n:
        raise ValueError("coloring length must equal vertex count")
    if n == 0:
        return ()
    k = max(colors) + 1
    if sorted(set(colors)) != list(range(k)):
        raise ValueError("color indices must form a contiguous range from 0")
    cells: List[List[int]] = [[] for _ in range(k)]
    for v, c in enumerate(colors):
        cells[c].append(v)
    return tuple(tuple(c) for c in cells)


def _refine_cells(
    adj_bits: Sequence[int], cells: List[Tuple[int, ...]]
) -> List[Tuple[int, ...]]:
    """Coarsest equitable refinement of an ordered cell list.

    Signature of a vertex: neighbor counts against every cell, in cell
    order.  Fragments replace their parent cell in place, ordered by
    descending signature, so a vertex individualized in a cubic graph is
    followed by its neighbors before the rest (the distance partition).
    The signature is a function of cell positions only, never of raw
    vertex ids, which keeps the search tree automorphism-closed.
    """
    while True:
        if all(len(c) == 1 for c in cells):
            return cells
        masks = [sum(1 << v for v in c) for c in cells]
        changed = False
        new_cells: List[Tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: Dict[tuple, List[int]] = {}
            for v in cell:
                av = adj_bits[v]
                sig = tuple((av & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups, reverse=True):
                    new_cells.append(tuple(groups[sig]))
        cells = new_cells
        if not changed:
            return cells


def refine_coloring(graph: Graph, colors: VertexColoring) -> OrderedPartition:
    """Coarsest equitable partition refining the given coloring."""
    cells = list(cells_from_coloring(graph.n, colors))
    return OrderedPartition(tuple(_refine_cells(graph.adj_bits, cells)))


class _SearchResult:
    __slots__ = ("code", "position_vertex", "auts")

    def __init__(self, code, position_vertex, auts):
        self.code = code
        self.position_vertex = position_vertex  # canonical position -> vertex
        self.auts = auts  # dict images-tuple -> Permutation


def _ir_search(graph: Graph, initial_cells: Sequence[Tuple[int, ...]]) -> _SearchResult:
    """Explore the refinement tree; return the minimum leaf code, its
    labeling, and every automorphism witnessed by equal-code leaves."""
    n = graph.n
    adj_bits = graph.adj_bits
    init_color = [0] * n
    for ci, cell in enumerate(initial_cells):
        for v in cell:
            init_color[v] = ci

    best_code: Optional[List[tuple]] = None
    best_posv: Optional[List[int]] = None
    auts: Dict[Tuple[int, ...], Permutation] = {}

    def rec(cells: List[Tuple[int, ...]], items: List[tuple]) -> None:
        nonlocal best_code, best_posv
        cells = _refine_cells(adj_bits, cells)
        t = 0
        for c in cells:
            if len(c) != 1:
                break
            t += 1
        if t > len(items):
            items = list(items)
            for j in range(len(items), t):
                vj = cells[j][0]
                av = adj_bits[vj]
                colbits = 0
                for i in range(j):
                    colbits = (colbits << 1) | ((av >> cells[i][0]) & 1)
                items.append((init_color[vj], colbits))
        if best_code is not None and items > best_code[: len(items)]:
            return
        if t == len(cells):  # discrete partition: a leaf
            posv = [c[0] for c in cells]
            if best_code is None or items < best_code:
                best_code = items
                best_posv = posv
            elif items == best_code:
                assert best_posv is not None
                images = [0] * n
                for p in range(n):
                    images[posv[p]] = best_posv[p]
                perm = Permutation(tuple(images))
                auts.setdefault(perm.images, perm)
            return
        sizes = [len(c) for c in cells]
        target_size = min(s for s in sizes if s > 1)
        ci = sizes.index(target_size)
        cell = cells[ci]
        for v in cell:
            rest = tuple(x for x in cell if x != v)
            child = cells[:ci] + [(v,), rest] + cells[ci + 1 :]
            rec(child, items)

    rec(list(initial_cells), [])
    assert best_code is not None and best_posv is not None
    ident = Permutation.identity(n)
    auts.setdefault(ident.images, ident)
    return _SearchResult(tuple(best_code), best_posv, auts)


def _canonical_graph_from_leaf(graph: Graph, posv: Sequence[int]) -> Graph:
    n = graph.n
    label = [0] * n
    for p, v in enumerate(posv):
        label[v] = p
    return graph.relabel(label)


def _reduce_generators(
    degree: int, elements: Sequence[Permutation]
) -> Tuple[Permutation, ...]:
    """Greedy small generating set for a materialized element list."""
    gens: List[Permutation] = []
    closed = {Permutation.identity(degree).images}
    for p in elements:
        if p.images in closed:
            continue
        gens.append(p)
        frontier = list(closed)
        closed.add(p.images)
        queue = [Permutation(im) for im in list(closed)]
        # re-close under the enlarged generating set
        while queue:
            q = queue.pop()
            for g in gens:
                r = g * q
                if r.images not in closed:
                    closed.add(r.images)
                    queue.append(r)
        if len(closed) == len(elements):
            break
    return tuple(gens) if gens else (Permutation.identity(degree),)


def _search_with_coloring(
    graph: Graph, coloring: Optional[VertexColoring]
) -> _SearchResult:
    if graph.n == 0:
        res = _SearchResult((), [], {(): Permutation(())})
        return res
    if coloring is None:
        cells: Tuple[Tuple[int, ...], ...] = (tuple(range(graph.n)),)
    else:
        cells = cells_from_coloring(graph.n, coloring)
    return _ir_search(graph, cells)


def automorphism_group(
    graph: Graph,
    coloring: Optional[VertexColoring] = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> PermutationGroup:
    """Full group of adjacency-preserving bijections, optionally required
    to preserve an initial coloring; materialized, deterministic."""
    if coloring is None:
        return _aut_group_uniform(graph, cap)
    return _aut_group_colored(graph, tuple(coloring), cap)


@lru_cache(maxsize=256)
def _aut_group_uniform(graph: Graph, cap: int) -> PermutationGroup:
    return _group_from_search(graph, None, cap)


def _aut_group_colored(
    graph: Graph, coloring: Tuple[int, ...], cap: int
) -> PermutationGroup:
    return _group_from_search(graph, coloring, cap)


def _group_from_search(
    graph: Graph, coloring: Optional[Tuple[int, ...]], cap: int
) -> PermutationGroup:
    res = _search_with_coloring(graph, coloring)
    if len(res.auts) > cap:
        raise GroupTooLargeError(cap)
    elements = tuple(res.auts[k] for k in sorted(res.auts))
    gens = _reduce_generators(graph.n, elements)
    return PermutationGroup(graph.n, gens, elements)


def canonical_form(graph: Graph) -> bytes:
    """Relabeling-invariant byte form: graph6 of the canonical labeling."""
    if graph.n == 0:
        return encode_graph6(graph).encode("ascii")
    res = _search_with_coloring(graph, None)
    canon = _canonical_graph_from_leaf(graph, res.position_vertex)
    return encode_graph6(canon).encode("ascii")


def canonical_labeling(graph: Graph) -> Permutation:
    """Permutation sending each vertex to its canonical position."""
    res = _search_with_coloring(graph, None)
    label = [0] * graph.n
    for p, v in enumerate(res.position_vertex):
        label[v] = p
    return Permutation(tuple(label))


def aut_and_canonical(graph: Graph) -> Tuple[PermutationGroup, bytes]:
    """One search pass yielding both the group and the canonical form."""
    data = canonical_data(graph)
    return data.group, data.canonical_g6


@dataclass(frozen=True)
class CanonicalData:
    group: PermutationGroup
    canonical_g6: bytes
    labeling: Permutation  # vertex -> canonical position


def canonical_data(graph: Graph) -> CanonicalData:
    """Group, canonical form, and canonical labeling from a single pass."""
    res = _search_with_coloring(graph, None)
    elements = tuple(res.auts[k] for k in sorted(res.auts))
    gens = _reduce_generators(graph.n, elements)
    group = PermutationGroup(graph.n, gens, elements)
    canon = _canonical_graph_from_leaf(graph, res.position_vertex)
    label = [0] * graph.n
    for p, v in enumerate(res.position_vertex):
        label[v] = p
    return CanonicalData(
        group, encode_graph6(canon).encode("ascii"), Permutation(tuple(label))
    )


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


def extend_partial_map(
    graph: Graph, partial: Mapping[int, int]
) -> Optional[Permutation]:
    """Some automorphism agreeing with the partial vertex map, or None.

    Sources and targets are individualized with matching colors and the
    two colored canonical forms are compared; equal codes compose the two
    canonical labelings into a witness.  The witness is deterministic.
    """
    n = graph.n
    sources = sorted(partial)
    targets = [partial[s] for s in sources]
    if len(set(targets)) != len(targets):
        raise ValueError("partial map must be injective")
    for x in sources + targets:
        if not 0 <= x < n:
            raise ValueError("partial map endpoint outside vertex range")
    colors_a = [0] * n
    colors_b = [0] * n
    for i, (s, t) in enumerate(zip(sources, targets), start=1):
        colors_a[s] = i
        colors_b[t] = i
    # recompact to contiguous ranges (color 0 is absent for full maps, and
    # then for both sides at once, so the shift stays aligned)
    colors_a = _compact(colors_a)
    colors_b = _compact(colors_b)
    res_a = _search_with_coloring(graph, tuple(colors_a))
    res_b = _search_with_coloring(graph, tuple(colors_b))
    if res_a.code != res_b.code:
        return None
    images = [0] * n
    for p in range(n):
        images[res_a.position_vertex[p]] = res_b.position_vertex[p]
    perm = Permutation(tuple(images))
    for s, t in zip(sources, targets):
        assert perm.images[s] == t
    return perm


def _compact(colors: List[int]) -> List[int]:
    present = sorted(set(colors))
    remap = {c: i for i, c in enumerate(present)}
    return [remap[c] for c in colors]
