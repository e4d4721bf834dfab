"""Hot numeric kernels over CSR adjacency arrays.

Two searches dominate runtime: the exhaustive removability scan over all
connected induced subgraphs, and the per-root BFS fundamental-cycle search
for shortest non-separating cycles.  Both are written in nopython-compatible
style and compiled with numba when available; setting the environment
variable ``FAREYCHECK_NO_NUMBA=1`` (or a missing numba install) selects the
interpreted numpy fallback, which runs the identical function bodies.
"""

from __future__ import annotations

import os

import numpy as np

from .graph_core import Graph


def _numba_requested() -> bool:
    flag = os.environ.get("FAREYCHECK_NO_NUMBA", "").strip()
    return flag in ("", "0")


NUMBA_ENABLED = False
if _numba_requested():
    try:
        import numba

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False


def _maybe_jit(func):
    if NUMBA_ENABLED:
        return numba.njit(cache=True)(func)
    return func


def graph_csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """CSR adjacency (indptr, indices) with sorted neighbor lists."""
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + g.degree(v)
    indices = np.empty(indptr[-1], dtype=np.int64)
    for v in range(g.n):
        indices[indptr[v] : indptr[v + 1]] = g.neighbors(v)
    return indptr, indices


# status codes for psi_scan
PSI_PASS = 0
PSI_FAIL = 1
PSI_BUDGET = 2


@_maybe_jit
def _has_removable(indptr, indices, in_set, members, size):  # pragma: no cover
    for i in range(size):
        w = members[i]
        d = 0
        n1 = -1
        n2 = -1
        for t in range(indptr[w], indptr[w + 1]):
            u = indices[t]
            if in_set[u]:
                d += 1
                if d == 1:
                    n1 = u
                elif d == 2:
                    n2 = u
                else:
                    break
        if d <= 1:
            return True
        if d == 2:
            adj = False
            for t in range(indptr[n1], indptr[n1 + 1]):
                if indices[t] == n2:
                    adj = True
                    break
            if adj:
                return True
    return False


@_maybe_jit
def psi_scan(indptr, indices, kmax, budget):
    """Scan all connected induced vertex sets of size <= kmax for one with no
    removable vertex (anchored expansion, each set visited exactly once).

    Returns (status, visited_count, witness_size, witness); witness is the
    first counterexample in enumeration order, sorted ascending.
    """
    n = indptr.shape[0] - 1
    blocked = np.zeros(n, dtype=np.bool_)
    in_set = np.zeros(n, dtype=np.bool_)
    members = np.empty(kmax + 1, dtype=np.int64)
    stack_v = np.empty(kmax + 1, dtype=np.int64)
    witness = np.full(kmax, -1, dtype=np.int64)
    ext = np.empty((kmax + 2) * n + 16, dtype=np.int64)
    start = np.empty(kmax + 2, dtype=np.int64)
    stop = np.empty(kmax + 2, dtype=np.int64)
    pos = np.empty(kmax + 2, dtype=np.int64)
    fresh_start = np.empty(kmax + 2, dtype=np.int64)
    count = 0

    for root in range(n):
        count += 1
        if count > budget:
            return PSI_BUDGET, count, 0, witness
        if kmax == 1:
            continue
        in_set[root] = True
        blocked[root] = True
        members[0] = root
        e = 0
        for t in range(indptr[root], indptr[root + 1]):
            u = indices[t]
            if u > root:
                ext[e] = u
                blocked[u] = True
                e += 1
        start[0] = 0
        stop[0] = e
        pos[0] = 0
        depth = 0
        while depth >= 0:
            if pos[depth] < stop[depth]:
                i = pos[depth]
                pos[depth] += 1
                v = ext[i]
                stack_v[depth] = v
                in_set[v] = True
                members[depth + 1] = v
                size = depth + 2
                count += 1
                if count > budget:
                    return PSI_BUDGET, count, 0, witness
                if size >= 4 and not _has_removable(
                    indptr, indices, in_set, members, size
                ):
                    # sorted copy of the current set
                    for j in range(size):
                        witness[j] = members[j]
                    for a in range(1, size):
                        key = witness[a]
                        b = a - 1
                        while b >= 0 and witness[b] > key:
                            witness[b + 1] = witness[b]
                            b -= 1
                        witness[b + 1] = key
                    return PSI_FAIL, count, size, witness
                if size < kmax:
                    cs = stop[depth]
                    ce = cs
                    for j in range(pos[depth], stop[depth]):
                        ext[ce] = ext[j]
                        ce += 1
                    fs = ce
                    for t in range(indptr[v], indptr[v + 1]):
                        u = indices[t]
                        if u > root and not blocked[u]:
                            blocked[u] = True
                            ext[ce] = u
                            ce += 1
                    depth += 1
                    start[depth] = cs
                    pos[depth] = cs
                    stop[depth] = ce
                    fresh_start[depth] = fs
                else:
                    in_set[v] = False
            else:
                if depth == 0:
                    break
                for j in range(fresh_start[depth], stop[depth]):
                    blocked[ext[j]] = False
                depth -= 1
                in_set[stack_v[depth]] = False
        # reset root state
        in_set[root] = False
        blocked[root] = False
        for j in range(start[0], stop[0]):
            blocked[ext[j]] = False
    return PSI_PASS, count, 0, witness


@_maybe_jit
def _canonical_cycle(cycle, length, out):  # pragma: no cover
    """Lexicographically smallest rotation over both directions."""
    best_set = False
    for direction in range(2):
        for shift in range(length):
            # candidate sequence c[(shift +/- i) mod length]
            better = not best_set
            equal = True
            for i in range(length):
                if direction == 0:
                    v = cycle[(shift + i) % length]
                else:
                    v = cycle[(shift - i) % length]
                if best_set and equal:
                    if v < out[i]:
                        better = True
                        equal = False
                    elif v > out[i]:
                        better = False
                        equal = False
                        break
            if better:
                for i in range(length):
                    if direction == 0:
                        out[i] = cycle[(shift + i) % length]
                    else:
                        out[i] = cycle[(shift - i) % length]
                best_set = True
    return out


@_maybe_jit
def cycle_scan(indptr, indices, esig):
    """Shortest cycle with nonzero homology bitmask.

    For every root, build a BFS tree (neighbors in ascending order) and test
    the fundamental cycle of every non-tree edge; candidates are merged by
    (length, lexicographic canonical vertex sequence).  ``esig[t]`` is the
    leftover-edge bitmask of the CSR entry t.

    Returns (found, length, cycle_array); the cycle is in canonical form,
    implicitly closed.
    """
    n = indptr.shape[0] - 1
    dist = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    sig = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    best_len = np.int64(n + 1)
    best = np.empty(n + 1, dtype=np.int64)
    cand = np.empty(n + 1, dtype=np.int64)
    canon = np.empty(n + 1, dtype=np.int64)
    found = False

    for root in range(n):
        for v in range(n):
            dist[v] = -1
        dist[root] = 0
        parent[root] = -1
        sig[root] = 0
        order[0] = root
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            for t in range(indptr[v], indptr[v + 1]):
                u = indices[t]
                if dist[u] == -1:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    sig[u] = sig[v] ^ esig[t]
                    order[tail] = u
                    tail += 1
        for v in range(n):
            for t in range(indptr[v], indptr[v + 1]):
                u = indices[t]
                if u <= v:
                    continue
                if parent[u] == v or parent[v] == u:
                    continue
                csig = sig[v] ^ sig[u] ^ esig[t]
                if csig == 0:
                    continue
                # locate the lowest common ancestor
                a = v
                b = u
                while dist[a] > dist[b]:
                    a = parent[a]
                while dist[b] > dist[a]:
                    b = parent[b]
                while a != b:
                    a = parent[a]
                    b = parent[b]
                lca = a
                length = dist[v] + dist[u] - 2 * dist[lca] + 1
                if length > best_len:
                    continue
                # assemble v .. lca .. u
                k = 0
                a = v
                while a != lca:
                    cand[k] = a
                    k += 1
                    a = parent[a]
                cand[k] = lca
                k += 1
                tailstart = k
                b = u
                while b != lca:
                    cand[k] = b
                    k += 1
                    b = parent[b]
                # reverse the u-side so the sequence runs v..lca..u
                left = tailstart
                right = k - 1
                while left < right:
                    tmp = cand[left]
                    cand[left] = cand[right]
                    cand[right] = tmp
                    left += 1
                    right -= 1
                _canonical_cycle(cand, length, canon)
                take = False
                if not found or length < best_len:
                    take = True
                elif length == best_len:
                    for i in range(length):
                        if canon[i] != best[i]:
                            take = canon[i] < best[i]
                            break
                if take:
                    found = True
                    best_len = length
                    for i in range(length):
                        best[i] = canon[i]
    return found, best_len, best
