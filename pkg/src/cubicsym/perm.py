"""Permutations on vertex indices and fully materialized permutation groups.

The groups encountered here are tiny (at most a few thousand elements),
so the whole element set is materialized by breadth-first closure rather
than via stabilizer chains.  A hard cap guards against runaway input; the
failure mode is an explicit error, never silent degradation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .graph import Graph, s_arcs

DEFAULT_GROUP_CAP = 2**20


class GroupTooLargeError(RuntimeError):
    """Closure exceeded the materialization cap."""

    def __init__(self, cap: int):
        super().__init__(f"group too large: closure exceeded cap {cap}")
        self.cap = cap


@dataclass(frozen=True)
class Permutation:
    """Bijection on [0, n); images[i] is the image of point i."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError("images do not form a bijection on [0, n)")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(n))
        for cycle in cycles:
            for i, v in enumerate(cycle):
                images[v] = cycle[(i + 1) % len(cycle)]
        return Permutation(tuple(images))

    def apply(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(x) = p(q(x))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        oi = other.images
        si = self.images
        return Permutation(tuple(si[oi[x]] for x in range(len(si))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycle_notation(self) -> str:
        seen = [False] * len(self.images)
        parts: List[str] = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            v = self.images[start]
            while v != start:
                cyc.append(v)
                seen[v] = True
                v = self.images[v]
            if len(cyc) > 1:
                parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) if parts else "()"

    def __repr__(self) -> str:
        return f"Permutation{self.cycle_notation()}"


def compose_apply(p: Permutation, q_or_v):
    """Compose two permutations, or apply one to a vertex."""
    if isinstance(q_or_v, Permutation):
        return p * q_or_v
    return p.apply(q_or_v)


@dataclass(frozen=True)
class PermutationGroup:
    """Finitely generated group with its element set materialized.

    Elements are stored sorted lexicographically by image sequence so
    every downstream search over the group is reproducible.
    """

    degree: int
    generators: Tuple[Permutation, ...]
    elements: Tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    def non_identity(self) -> Tuple[Permutation, ...]:
        return tuple(p for p in self.elements if not p.is_identity())


def close_generators(
    gens: Iterable[Permutation], degree: Optional[int] = None, cap: int = DEFAULT_GROUP_CAP
) -> PermutationGroup:
    """Materialize the group generated by ``gens`` by BFS closure.

    Degrees must agree; exceeding ``cap`` raises GroupTooLargeError.
    """
    gens = tuple(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generating set")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError("generator degree mismatch")
    ident = Permutation.identity(degree)
    seen = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt: List[Permutation] = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q.images not in seen:
                    if len(seen) >= cap:
                        raise GroupTooLargeError(cap)
                    seen[q.images] = q
                    nxt.append(q)
        frontier = nxt
    elements = tuple(seen[k] for k in sorted(seen))
    return PermutationGroup(degree, gens, elements)


def group_from_elements(
    degree: int, elements: Iterable[Permutation]
) -> PermutationGroup:
    """Package an already-closed element set (sorted, deduplicated)."""
    uniq = {p.images: p for p in elements}
    elems = tuple(uniq[k] for k in sorted(uniq))
    return PermutationGroup(degree, elems, elems)


# ---------------------------------------------------------------------------
# group actions


@dataclass(frozen=True)
class Action:
    """Selector for the induced action in :func:`orbits`."""

    kind: str  # "vertices" | "edges" | "arcs" | "s-arcs"
    s: int = 0

    VERTICES: "Action" = None  # type: ignore[assignment]
    EDGES: "Action" = None  # type: ignore[assignment]
    ARCS: "Action" = None  # type: ignore[assignment]

    @staticmethod
    def s_arcs(s: int) -> "Action":
        return Action("s-arcs", s)


Action.VERTICES = Action("vertices")
Action.EDGES = Action("edges")
Action.ARCS = Action("arcs")


def _acted_set(action: Action, host: Graph):
    if action.kind == "vertices":
        return list(range(host.n))
    if action.kind == "edges":
        return list(host.edges())
    if action.kind == "arcs":
        return [(u, w) for u in range(host.n) for w in host.adj[u]]
    if action.kind == "s-arcs":
        return list(s_arcs(host, action.s))
    raise ValueError(f"unknown action {action.kind!r}")


def _image_fn(action: Action) -> Callable[[Permutation, object], object]:
    if action.kind == "vertices":
        return lambda p, v: p.images[v]
    if action.kind == "edges":
        def edge_image(p: Permutation, e):
            a, b = p.images[e[0]], p.images[e[1]]
            return (a, b) if a < b else (b, a)
        return edge_image
    return lambda p, t: tuple(p.images[v] for v in t)


def orbits(group: PermutationGroup, action: Action, host: Graph):
    """Orbit partition of the acted-on set; blocks sorted by least member."""
    if group.degree != host.n:
        raise ValueError("group degree does not match host order")
    points = _acted_set(action, host)
    img = _image_fn(action)
    index = {x: i for i, x in enumerate(points)}
    unassigned = set(range(len(points)))
    blocks = []
    while unassigned:
        start = min(unassigned)
        block = {start}
        stack = [points[start]]
        unassigned.discard(start)
        while stack:
            x = stack.pop()
            for g in group.generators:
                y = img(g, x)
                yi = index[y]
                if yi in unassigned:
                    unassigned.discard(yi)
                    block.add(yi)
                    stack.append(y)
        blocks.append(tuple(sorted(points[i] for i in block)))
    return tuple(sorted(blocks, key=lambda b: b[0]))


def orbit_of(group: PermutationGroup, start, image) -> set:
    """Single orbit of ``start`` under the group generators."""
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for g in group.generators:
            y = image(g, x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


# ---------------------------------------------------------------------------
# stabilizers


@dataclass(frozen=True)
class StabilizerMode:
    kind: str

    POINTWISE_VERTEX: "StabilizerMode" = None  # type: ignore[assignment]
    SETWISE_SET: "StabilizerMode" = None  # type: ignore[assignment]
    POINTWISE_SET: "StabilizerMode" = None  # type: ignore[assignment]


StabilizerMode.POINTWISE_VERTEX = StabilizerMode("pointwise-vertex")
StabilizerMode.SETWISE_SET = StabilizerMode("setwise-set")
StabilizerMode.POINTWISE_SET = StabilizerMode("pointwise-set")


def stabilizer(
    group: PermutationGroup, target, mode: StabilizerMode
) -> PermutationGroup:
    """Exact stabilizer subgroup by exhaustive filter of the element set."""
    if not group.elements:
        raise ValueError("group is not materialized")
    if mode.kind == "pointwise-vertex":
        v = int(target)
        if not 0 <= v < group.degree:
            raise ValueError("target vertex outside degree")
        keep = [p for p in group.elements if p.images[v] == v]
    elif mode.kind == "setwise-set":
        s = frozenset(target)
        keep = [p for p in group.elements if frozenset(p.images[v] for v in s) == s]
    elif mode.kind == "pointwise-set":
        s = tuple(target)
        keep = [p for p in group.elements if all(p.images[v] == v for v in s)]
    else:
        raise ValueError(f"unknown stabilizer mode {mode.kind!r}")
    return PermutationGroup(group.degree, tuple(keep), tuple(keep))
