"""Pure-Python search kernels.

Reference implementation of the four routines the whole library leans on:

  search_automorphisms             backtracking enumeration of Aut(G)
  all_automorphisms_preserve_blocks   same search, streaming a block check
  count_distinguishing_partitions  count set partitions no automorphism fixes
  exists_distinguishing_partition  early-exit variant of the count

A compiled twin lives in _kernels.pyx; symbreak.kernels picks whichever is
available.  Both must behave identically bit for bit; tests compare them.

Graphs arrive as per-vertex neighbor bitmasks.  Group elements arrive and
leave as image tuples (element[i] = image of vertex i).  Budgets raise
BudgetExceededError; nothing is ever silently truncated.
"""

from __future__ import annotations

from .errors import BudgetExceededError


def _refine_colors(n: int, adj) -> list[int]:
    """Iterated neighbor-degree refinement; stable colors are preserved by
    every automorphism, so search candidates never leave their color class."""
    colors = [adj[v].bit_count() for v in range(n)]
    while True:
        table: dict[tuple, int] = {}
        new = []
        for v in range(n):
            nb = []
            mask = adj[v]
            while mask:
                low = mask & -mask
                nb.append(colors[low.bit_length() - 1])
                mask ^= low
            nb.sort()
            sig = (colors[v], tuple(nb))
            new.append(table.setdefault(sig, len(table)))
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _search_order(n: int, adj, colors) -> list[int]:
    """Static vertex order: rare color classes first, staying adjacent to the
    already-ordered prefix so each new vertex is tightly constrained."""
    size = {c: 0 for c in colors}
    for c in colors:
        size[c] += 1
    order: list[int] = []
    placed = 0
    while len(order) < n:
        adj_mask = 0
        for v in order:
            adj_mask |= adj[v]
        best = min((v for v in range(n) if not placed >> v & 1),
                   key=lambda v: (not adj_mask >> v & 1, size[colors[v]], v))
        order.append(best)
        placed |= 1 << best
    return order


def _cycle_stats(image) -> tuple[int, bool]:
    """(number of cycles counting fixed points, is this the identity)."""
    n = len(image)
    seen = 0
    cycles = 0
    identity = True
    for v in range(n):
        if image[v] != v:
            identity = False
        if seen >> v & 1:
            continue
        cycles += 1
        w = v
        while not seen >> w & 1:
            seen |= 1 << w
            w = image[w]
    return cycles, identity


def search_automorphisms(n: int, adj, order_cap: int, collect: bool = True):
    """Enumerate Aut(G) for the graph given as neighbor bitmasks.

    Returns (order, max_cycles, elements) where max_cycles is the largest
    cycle count (fixed points included) over non-identity elements, 0 for a
    trivial group, and elements is a lexicographically sorted list of image
    tuples, or None when collect is false.  Raises BudgetExceededError once
    more than order_cap automorphisms exist.
    """
    if n == 0:
        return 1, 0, ([()] if collect else None)
    colors = _refine_colors(n, adj)
    class_mask: dict[int, int] = {}
    for v in range(n):
        class_mask[colors[v]] = class_mask.get(colors[v], 0) | (1 << v)
    order = _search_order(n, adj, colors)

    image = [-1] * n
    state = {"used": 0, "count": 0, "max_cycles": 0}
    elements: list[tuple[int, ...]] | None = [] if collect else None

    def rec(depth: int) -> None:
        if depth == n:
            state["count"] += 1
            if state["count"] > order_cap:
                raise BudgetExceededError(
                    f"automorphism search exceeded cap {order_cap}")
            cycles, identity = _cycle_stats(image)
            if not identity and cycles > state["max_cycles"]:
                state["max_cycles"] = cycles
            if elements is not None:
                elements.append(tuple(image))
            return
        v = order[depth]
        cand = class_mask[colors[v]] & ~state["used"]
        av = adj[v]
        for i in range(depth):
            u = order[i]
            cand &= adj[image[u]] if av >> u & 1 else ~adj[image[u]]
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            image[v] = w
            state["used"] |= low
            rec(depth + 1)
            state["used"] &= ~low
        image[v] = -1

    rec(0)
    if elements is not None:
        elements.sort()
    return state["count"], state["max_cycles"], elements


class _BlockSplit(Exception):
    pass


def all_automorphisms_preserve_blocks(n: int, adj, blocks, order_cap: int) -> bool:
    """True iff every automorphism maps each block (given as a block id per
    vertex) onto some block.  Streams the search, storing nothing, and exits
    on the first splitting element."""
    if n == 0:
        return True
    block_masks: dict[int, int] = {}
    for v in range(n):
        block_masks[blocks[v]] = block_masks.get(blocks[v], 0) | (1 << v)
    mask_set = frozenset(block_masks.values())
    colors = _refine_colors(n, adj)
    class_mask: dict[int, int] = {}
    for v in range(n):
        class_mask[colors[v]] = class_mask.get(colors[v], 0) | (1 << v)
    order = _search_order(n, adj, colors)

    image = [-1] * n
    state = {"used": 0, "count": 0}

    def rec(depth: int) -> None:
        if depth == n:
            state["count"] += 1
            if state["count"] > order_cap:
                raise BudgetExceededError(
                    f"automorphism search exceeded cap {order_cap}")
            for bm in mask_set:
                img_mask = 0
                m = bm
                while m:
                    low = m & -m
                    img_mask |= 1 << image[low.bit_length() - 1]
                    m ^= low
                if img_mask not in mask_set:
                    raise _BlockSplit
            return
        v = order[depth]
        cand = class_mask[colors[v]] & ~state["used"]
        av = adj[v]
        for i in range(depth):
            u = order[i]
            cand &= adj[image[u]] if av >> u & 1 else ~adj[image[u]]
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            image[v] = w
            state["used"] |= low
            rec(depth + 1)
            state["used"] &= ~low
        image[v] = -1

    try:
        rec(0)
    except _BlockSplit:
        return False
    return True


def _extension_table(n: int, kmax: int) -> list[list[list[int]]]:
    """E[r][b][j]: ways to assign r further vertices to blocks, starting from
    b open blocks and ending with exactly j, never exceeding kmax blocks.
    Exact integers; these overflow 64 bits well inside the vertex cap."""
    E = [[[0] * (kmax + 1) for _ in range(kmax + 2)] for _ in range(n + 1)]
    for b in range(kmax + 1):
        E[0][b][b] = 1
    for r in range(1, n + 1):
        for b in range(kmax, -1, -1):
            row = E[r][b]
            prev_same = E[r - 1][b]
            prev_new = E[r - 1][b + 1] if b + 1 <= kmax else None
            for j in range(b, kmax + 1):
                acc = b * prev_same[j]
                if prev_new is not None:
                    acc += prev_new[j]
                row[j] = acc
    return E


def _prepare_elements(n: int, elements):
    imgs = [list(e) for e in elements]
    invs = []
    for e in imgs:
        inv = [0] * n
        for v in range(n):
            inv[e[v]] = v
        invs.append(inv)
    return imgs, invs


def count_distinguishing_partitions(n: int, elements, max_blocks: int,
                                    node_budget: int) -> list[int]:
    """A[j] for j = 0..max_blocks: set partitions of {0..n-1} into exactly j
    blocks that no given element preserves.

    elements must be the non-identity automorphisms.  Partitions are walked
    as canonical block assignments (vertex 0 opens block 0, a new block's id
    is always the smallest unused); the live set of not-yet-violated elements
    shrinks monotonically along each branch, and once it empties the whole
    subtree is closed with the extension table instead of being visited.
    Each vertex-to-block assignment counts against node_budget.
    """
    A = [0] * (max_blocks + 1)
    if n == 0:
        return A
    kmax = min(max_blocks, n)
    if kmax == 0:
        return A
    E = _extension_table(n, kmax)
    if not elements:
        for j in range(1, kmax + 1):
            A[j] = E[n][0][j]
        return A
    imgs, invs = _prepare_elements(n, elements)
    color = [-1] * n
    state = {"nodes": 0}

    def rec(v: int, b: int, live: list[int]) -> None:
        top = min(b + 1, kmax)
        for c in range(top):
            state["nodes"] += 1
            if state["nodes"] > node_budget:
                raise BudgetExceededError(
                    f"coloring search exceeded budget {node_budget}")
            color[v] = c
            nlive = []
            for e in live:
                w = imgs[e][v]
                if w < v and color[w] != c:
                    continue
                u = invs[e][v]
                if u < v and color[u] != c:
                    continue
                nlive.append(e)
            nb = b + 1 if c == b else b
            if not nlive:
                closing = E[n - v - 1][nb]
                for j in range(nb, kmax + 1):
                    A[j] += closing[j]
            elif v + 1 < n:
                rec(v + 1, nb, nlive)
            # a full assignment with live elements is preserved by them:
            # not distinguishing, contributes nothing
        color[v] = -1

    rec(0, 0, list(range(len(imgs))))
    return A


def exists_distinguishing_partition(n: int, elements, max_blocks: int,
                                    node_budget: int) -> bool:
    """True iff some set partition into at most max_blocks nonempty blocks is
    preserved by none of the given elements."""
    if n == 0:
        return False
    kmax = min(max_blocks, n)
    if kmax == 0:
        return False
    if not elements:
        return True
    imgs, invs = _prepare_elements(n, elements)
    color = [-1] * n
    state = {"nodes": 0}

    def rec(v: int, b: int, live: list[int]) -> bool:
        top = min(b + 1, kmax)
        for c in range(top):
            state["nodes"] += 1
            if state["nodes"] > node_budget:
                raise BudgetExceededError(
                    f"coloring search exceeded budget {node_budget}")
            color[v] = c
            nlive = []
            for e in live:
                w = imgs[e][v]
                if w < v and color[w] != c:
                    continue
                u = invs[e][v]
                if u < v and color[u] != c:
                    continue
                nlive.append(e)
            if not nlive:
                color[v] = -1
                return True
            if v + 1 < n and rec(v + 1, b + 1 if c == b else b, nlive):
                color[v] = -1
                return True
        color[v] = -1
        return False

    return rec(0, 0, list(range(len(imgs))))
