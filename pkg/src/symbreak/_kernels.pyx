# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of _kernels_py.

Same four entry points, same argument conventions, same results bit for bit
(tests enforce the parity).  Only the hot recursions are translated to C;
vertex ordering, color refinement and the extension table are shared with
the pure module, so the two backends cannot drift apart structurally.

Restricted to n <= 64 (one machine word per adjacency row); the dispatcher
in symbreak.kernels routes larger inputs to the pure fallback.
"""

from libc.stdlib cimport free, malloc

from .errors import BudgetExceededError
from ._kernels_py import _extension_table, _refine_colors, _search_order

ctypedef unsigned long long u64


cdef inline int _popcount(u64 x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _lowbit_index(u64 x):
    cdef int i = 0
    while not x & 1:
        x >>= 1
        i += 1
    return i


cdef class _AutSearch:
    cdef int n, collect, check_blocks, n_blocks, split_found, max_cycles
    cdef u64 used
    cdef u64 adj[64]
    cdef u64 cls[64]
    cdef u64 blocks[64]
    cdef int order[64]
    cdef int image[64]
    cdef long long count, cap
    cdef list elements

    cdef int leaf(self) except -1:
        cdef u64 seen = 0, img_mask, m
        cdef int v, w, cycles = 0, identity = 1, b, j, hit
        self.count += 1
        if self.count > self.cap:
            raise BudgetExceededError(
                f"automorphism search exceeded cap {self.cap}")
        for v in range(self.n):
            if self.image[v] != v:
                identity = 0
            if seen >> v & 1:
                continue
            cycles += 1
            w = v
            while not seen >> w & 1:
                seen |= <u64>1 << w
                w = self.image[w]
        if not identity and cycles > self.max_cycles:
            self.max_cycles = cycles
        if self.check_blocks:
            for b in range(self.n_blocks):
                img_mask = 0
                m = self.blocks[b]
                while m:
                    img_mask |= <u64>1 << self.image[_lowbit_index(m)]
                    m &= m - 1
                hit = 0
                for j in range(self.n_blocks):
                    if self.blocks[j] == img_mask:
                        hit = 1
                        break
                if not hit:
                    self.split_found = 1
        if self.collect:
            self.elements.append(tuple([self.image[v] for v in range(self.n)]))
        return 0

    cdef int rec(self, int depth) except -1:
        cdef int v, i, u, w
        cdef u64 cand, av, low
        if depth == self.n:
            return self.leaf()
        v = self.order[depth]
        cand = self.cls[v] & ~self.used
        av = self.adj[v]
        for i in range(depth):
            u = self.order[i]
            if av >> u & 1:
                cand &= self.adj[self.image[u]]
            else:
                cand &= ~self.adj[self.image[u]]
        while cand:
            low = cand & (~cand + 1)
            w = _lowbit_index(low)
            cand ^= low
            self.image[v] = w
            self.used |= low
            self.rec(depth + 1)
            self.used &= ~low
            if self.split_found:
                return 0
        self.image[v] = -1
        return 0


cdef _AutSearch _setup(int n, adj, long long order_cap, int collect,
                       blocks):
    cdef _AutSearch s = _AutSearch()
    cdef int v
    colors = _refine_colors(n, adj)
    order = _search_order(n, adj, colors)
    class_mask = {}
    for v in range(n):
        class_mask[colors[v]] = class_mask.get(colors[v], 0) | (1 << v)
    s.n = n
    s.collect = collect
    s.elements = [] if collect else None
    s.used = 0
    s.count = 0
    s.cap = order_cap
    s.max_cycles = 0
    s.split_found = 0
    for v in range(n):
        s.adj[v] = adj[v]
        s.cls[v] = class_mask[colors[v]]
        s.order[v] = order[v]
        s.image[v] = -1
    if blocks is None:
        s.check_blocks = 0
        s.n_blocks = 0
    else:
        s.check_blocks = 1
        block_masks = {}
        for v in range(n):
            block_masks[blocks[v]] = block_masks.get(blocks[v], 0) | (1 << v)
        distinct = sorted(block_masks.values())
        s.n_blocks = len(distinct)
        for v in range(s.n_blocks):
            s.blocks[v] = distinct[v]
    return s


def search_automorphisms(n, adj, order_cap, collect=True):
    """See _kernels_py.search_automorphisms."""
    if n == 0:
        return 1, 0, ([()] if collect else None)
    cdef _AutSearch s = _setup(n, adj, order_cap, 1 if collect else 0, None)
    s.rec(0)
    if s.collect:
        s.elements.sort()
    return s.count, s.max_cycles, (s.elements if s.collect else None)


def all_automorphisms_preserve_blocks(n, adj, blocks, order_cap):
    """See _kernels_py.all_automorphisms_preserve_blocks."""
    if n == 0:
        return True
    cdef _AutSearch s = _setup(n, adj, order_cap, 0, blocks)
    s.rec(0)
    return not s.split_found


cdef class _PartSearch:
    cdef int n, kmax, m, exists_mode, found
    cdef long long nodes, budget
    cdef int *imgs
    cdef int *invs
    cdef int *live_buf
    cdef signed char color[64]
    cdef list A
    cdef list E

    def __cinit__(self):
        self.imgs = NULL
        self.invs = NULL
        self.live_buf = NULL

    def __dealloc__(self):
        if self.imgs != NULL:
            free(self.imgs)
        if self.invs != NULL:
            free(self.invs)
        if self.live_buf != NULL:
            free(self.live_buf)

    cdef int setup(self, int n, elements, int kmax, long long budget,
                   int exists_mode) except -1:
        cdef int e, v
        self.n = n
        self.kmax = kmax
        self.budget = budget
        self.nodes = 0
        self.exists_mode = exists_mode
        self.found = 0
        self.m = len(elements)
        self.imgs = <int *>malloc(self.m * n * sizeof(int))
        self.invs = <int *>malloc(self.m * n * sizeof(int))
        self.live_buf = <int *>malloc((n + 1) * self.m * sizeof(int))
        if self.imgs == NULL or self.invs == NULL or self.live_buf == NULL:
            raise MemoryError
        for e in range(self.m):
            img = elements[e]
            for v in range(n):
                self.imgs[e * n + v] = img[v]
                self.invs[e * n + img[v]] = v
        for e in range(self.m):
            self.live_buf[e] = e
        return 0

    cdef int rec(self, int v, int b, int live_off, int live_len) except -1:
        cdef int top = b + 1 if b + 1 < self.kmax else self.kmax
        cdef int c, i, e, w, u, nlen, nb, j
        cdef int *parent = self.live_buf + live_off
        cdef int *child = self.live_buf + live_off + self.m
        for c in range(top):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceededError(
                    f"coloring search exceeded budget {self.budget}")
            self.color[v] = c
            nlen = 0
            for i in range(live_len):
                e = parent[i]
                w = self.imgs[e * self.n + v]
                if w < v and self.color[w] != c:
                    continue
                u = self.invs[e * self.n + v]
                if u < v and self.color[u] != c:
                    continue
                child[nlen] = e
                nlen += 1
            nb = b + 1 if c == b else b
            if nlen == 0:
                if self.exists_mode:
                    self.found = 1
                    return 0
                closing = self.E[self.n - v - 1][nb]
                for j in range(nb, self.kmax + 1):
                    self.A[j] = self.A[j] + closing[j]
            elif v + 1 < self.n:
                self.rec(v + 1, nb, live_off + self.m, nlen)
                if self.found:
                    return 0
        return 0


def count_distinguishing_partitions(n, elements, max_blocks, node_budget):
    """See _kernels_py.count_distinguishing_partitions."""
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
    cdef _PartSearch s = _PartSearch()
    s.setup(n, elements, kmax, node_budget, 0)
    s.A = A
    s.E = E
    s.rec(0, 0, 0, s.m)
    return A


def exists_distinguishing_partition(n, elements, max_blocks, node_budget):
    """See _kernels_py.exists_distinguishing_partition."""
    if n == 0:
        return False
    kmax = min(max_blocks, n)
    if kmax == 0:
        return False
    if not elements:
        return True
    cdef _PartSearch s = _PartSearch()
    s.setup(n, elements, kmax, node_budget, 1)
    s.A = None
    s.E = None
    s.rec(0, 0, 0, s.m)
    return bool(s.found)
