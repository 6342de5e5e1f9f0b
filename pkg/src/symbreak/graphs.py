"""Finite simple graphs on vertex set {0, ..., n-1}.

Graphs are immutable and hashable; adjacency is stored as one bitmask per
vertex, which keeps the search kernels word-parallel for every size the
vertex cap admits.  Construction goes through build_graph() or the named
family constructors; both enforce the cap from symbreak.limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import limits
from .errors import BudgetExceededError, InvalidInputError


class Graph:
    """Immutable simple graph. Compare and hash by (n, adjacency)."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # internal: callers go through build_graph / families / products
        self.n = n
        self._adj = adj

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self._adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors_mask(self, u: int) -> int:
        return self._adj[u]

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[u]))

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self._adj)

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            for v in _bits(rest):
                out.append((u, u + 1 + v))
        return tuple(out)

    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (what the kernels consume)."""
        return self._adj

    # -- transforms --------------------------------------------------------

    def relabel(self, image: Sequence[int]) -> "Graph":
        """Rename vertex i to image[i]; image must be a permutation of 0..n-1."""
        if sorted(image) != list(range(self.n)):
            raise InvalidInputError("relabel image is not a permutation")
        adj = [0] * self.n
        for u in range(self.n):
            mask = 0
            for v in _bits(self._adj[u]):
                mask |= 1 << image[v]
            adj[image[u]] = mask
        return Graph(self.n, tuple(adj))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self._adj == other._adj)

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int):
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class RootedGraph:
    """A graph with one marked vertex."""

    graph: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise InvalidInputError(
                f"root {self.root} out of range for n={self.graph.n}")

    @property
    def n(self) -> int:
        return self.graph.n


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise InvalidInputError(f"vertex count must be nonnegative, got {n}")
    cap = limits.vertex_cap()
    if n > cap:
        raise BudgetExceededError(f"graph has {n} vertices, cap is {cap}")
    adj = [0] * n
    for e in edges:
        try:
            u, v = e
        except (TypeError, ValueError):
            raise InvalidInputError(f"edge {e!r} is not a pair") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise InvalidInputError(f"edge {e!r} has non-integer endpoints")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidInputError(f"loop at vertex {u} not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# -- named families ---------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidInputError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidInputError("complete graph needs at least one vertex")
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidInputError("both parts must be nonempty")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """K_{1,k}: center 0, leaves 1..k."""
    if k < 1:
        raise InvalidInputError("star needs at least one leaf")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def kneser(n: int, k: int) -> Graph:
    """Vertices are the k-subsets of {0..n-1} in lexicographic order,
    adjacent when disjoint."""
    if not 0 < k <= n:
        raise InvalidInputError(f"kneser({n}, {k}) parameters out of range")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2)
             if not subsets[i] & subsets[j]]
    return build_graph(len(subsets), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def asymmetric6() -> Graph:
    """Lexicographically least connected graph on 6 vertices whose only
    automorphism is the identity (the smallest order where one exists)."""
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 5)])


_FAMILIES = {
    "empty": (empty_graph, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "kneser": (kneser, 2),
    "petersen": (petersen, 0),
    "asym6": (asymmetric6, 0),
}


def family(kind: str, *params: int) -> Graph:
    """Dispatch to a named family constructor, e.g. family('cycle', 6)."""
    if kind not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise InvalidInputError(f"unknown family {kind!r} (known: {known})")
    ctor, arity = _FAMILIES[kind]
    if len(params) != arity:
        raise InvalidInputError(f"family {kind!r} takes {arity} parameter(s), "
                                f"got {len(params)}")
    return ctor(*params)


# -- vertex deletion, unions, components -------------------------------------

def delete_vertex(g: Graph, u: int, return_map: bool = False):
    """Delete u; remaining vertices shift down to stay contiguous.

    With return_map=True also returns a length-n tuple sending each old id to
    its new id (None at u).
    """
    if not 0 <= u < g.n:
        raise InvalidInputError(f"vertex {u} out of range")
    shift = tuple(None if v == u else (v if v < u else v - 1)
                  for v in range(g.n))
    low = (1 << u) - 1
    adj = []
    for v in range(g.n):
        if v == u:
            continue
        mask = g._adj[v]
        adj.append((mask & low) | ((mask >> (u + 1)) << u))
    h = Graph(g.n - 1, tuple(adj))
    return (h, shift) if return_map else h


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled order-preservingly."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges()
             if u in index and v in index]
    return build_graph(len(vs), edges)


def disjoint_union(graphs: Sequence[Graph]) -> tuple[Graph, tuple[int, ...]]:
    """Union with contiguous blocks; returns the graph and each block's offset."""
    if not graphs:
        raise InvalidInputError("disjoint union of nothing")
    offsets = []
    total = 0
    for g in graphs:
        offsets.append(total)
        total += g.n
    cap = limits.vertex_cap()
    if total > cap:
        raise BudgetExceededError(f"union has {total} vertices, cap is {cap}")
    adj: list[int] = []
    for g, off in zip(graphs, offsets):
        adj.extend(mask << off for mask in g._adj)
    return Graph(total, tuple(adj)), tuple(offsets)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components plus their grouping into isomorphism classes.

    components: vertex tuples, ordered by smallest member.
    classes: tuples of component indices; classes are ordered by component
    size then by the lexicographically smallest relabeled edge list found in
    the class, so repeated runs produce identical output.
    """

    components: tuple[tuple[int, ...], ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.components)


def connected_components(g: Graph) -> ComponentPartition:
    seen = 0
    comps: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        frontier = 1 << start
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in _bits(frontier):
                nxt |= g._adj[v]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(tuple(_bits(comp)))

    subgraphs = [induced_subgraph(g, c) for c in comps]
    buckets: list[tuple[int, ...]] = []
    keys: list[tuple] = []
    for i, sub in enumerate(subgraphs):
        for b, bucket in enumerate(buckets):
            rep = subgraphs[bucket[0]]
            if rep.n == sub.n and rep.m == sub.m and is_isomorphic(rep, sub):
                buckets[b] = bucket + (i,)
                keys[b] = min(keys[b], (sub.n, sub.edges()))
                break
        else:
            buckets.append((i,))
            keys.append((sub.n, sub.edges()))
    order = sorted(range(len(buckets)), key=lambda b: keys[b])
    return ComponentPartition(tuple(comps), tuple(buckets[b] for b in order))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(connected_components(g).components) == 1


def is_2connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return all(is_connected(delete_vertex(g, u)) for u in range(g.n))


# -- isomorphism --------------------------------------------------------------

def _refine(g: Graph, h: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Joint degree refinement; returns comparable color vectors for both
    graphs, or None when the color histograms already separate them."""
    cg = list(g.degrees())
    ch = list(h.degrees())
    for _ in range(g.n):
        if sorted(cg) != sorted(ch):
            return None
        table: dict[tuple, int] = {}

        def recolor(graph: Graph, colors: list[int]) -> list[int]:
            out = []
            for v in range(graph.n):
                sig = (colors[v], tuple(sorted(colors[w]
                                               for w in graph.neighbors(v))))
                out.append(table.setdefault(sig, len(table)))
            return out

        ng, nh = recolor(g, cg), recolor(h, ch)
        if len(set(ng)) == len(set(cg)):
            cg, ch = ng, nh
            break
        cg, ch = ng, nh
    if sorted(cg) != sorted(ch):
        return None
    return tuple(cg), tuple(ch)


def is_isomorphic(g: Graph, h: Graph,
                  pin: tuple[int, int] | None = None) -> bool:
    """Exact isomorphism test by backtracking over refinement classes.

    pin=(u, v) additionally requires the map to send g's vertex u to h's
    vertex v (rooted isomorphism).
    """
    if g.n != h.n or g.m != h.m:
        return False
    if g.n == 0:
        return True
    refined = _refine(g, h)
    if refined is None:
        return False
    cg, ch = refined
    if pin is not None:
        pu, pv = pin
        if not (0 <= pu < g.n and 0 <= pv < h.n):
            raise InvalidInputError("pin out of range")
        if cg[pu] != ch[pv]:
            return False

    class_mask: dict[int, int] = {}
    for v in range(h.n):
        class_mask[ch[v]] = class_mask.get(ch[v], 0) | (1 << v)

    # map rare classes first, then stay adjacent to mapped vertices
    order: list[int] = []
    placed = 0
    class_size = {c: sum(1 for x in cg if x == c) for c in set(cg)}
    if pin is not None:
        order.append(pin[0])
        placed |= 1 << pin[0]
    while len(order) < g.n:
        adj_mask = 0
        for v in order:
            adj_mask |= g._adj[v]
        pool = [v for v in range(g.n) if not placed >> v & 1]
        pool.sort(key=lambda v: (not adj_mask >> v & 1, class_size[cg[v]], v))
        v = pool[0]
        order.append(v)
        placed |= 1 << v

    image = [-1] * g.n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == g.n:
            return True
        v = order[depth]
        cand = class_mask[cg[v]] & ~used
        for i in range(depth):
            u = order[i]
            if g._adj[v] >> u & 1:
                cand &= h._adj[image[u]]
            else:
                cand &= ~h._adj[image[u]]
        if pin is not None and v == pin[0]:
            cand &= 1 << pin[1]
        for w in _bits(cand):
            image[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
        image[v] = -1
        return False

    return extend(0)
