"""Kernel dispatch.

Prefers the compiled extension, falls back to the pure-Python twin when the
extension is missing or SYMBREAK_PURE=1 is set.  The compiled kernels only
handle graphs that fit one machine word (n <= 64); larger inputs, possible
when the vertex cap is raised, route to the pure implementation per call.
"""

from __future__ import annotations

import os

from . import _kernels_py as _pure

if os.environ.get("SYMBREAK_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

_COMPILED_MAX_N = 64


def backend_name() -> str:
    return "pure" if _impl is _pure else "compiled"


def _pick(n: int):
    return _impl if n <= _COMPILED_MAX_N else _pure


def search_automorphisms(n, adj, order_cap, collect=True):
    return _pick(n).search_automorphisms(n, adj, order_cap, collect)


def all_automorphisms_preserve_blocks(n, adj, blocks, order_cap):
    # one block id per vertex; coerce so bad shapes fail here, not in C
    blocks = [int(b) for b in blocks]
    if len(blocks) != n:
        raise ValueError("need one block id per vertex")
    return _pick(n).all_automorphisms_preserve_blocks(n, adj, blocks, order_cap)


def count_distinguishing_partitions(n, elements, max_blocks, node_budget):
    return _pick(n).count_distinguishing_partitions(n, elements, max_blocks,
                                                    node_budget)


def exists_distinguishing_partition(n, elements, max_blocks, node_budget):
    return _pick(n).exists_distinguishing_partition(n, elements, max_blocks,
                                                    node_budget)
