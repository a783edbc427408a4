"""Independent reference computations used by the tests.

Nothing here imports the algorithms under test; only the plain data types.
"""

from collections import deque

import numpy as np


def lam_from_incidence(node_count, edges):
    """Dense line graph adjacency as R^T R - 2I."""
    r = np.zeros((node_count, len(edges)), dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        r[u, i] = 1
        r[v, i] = 1
    return r.T @ r - 2 * np.eye(len(edges), dtype=np.int64)


def bfs_components(dense):
    """Node lists of the components of a dense adjacency, ordered by smallest node."""
    n = len(dense)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            x = q.popleft()
            for y in np.nonzero(dense[x])[0]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(int(y))
                    q.append(y)
        out.append(sorted(comp))
    return out


def conjugate(dense, order):
    """P^T C P with the permutation matrix that puts old label order[a] at new label a."""
    n = len(dense)
    p = np.zeros((n, n), dtype=np.int64)
    for new, old in enumerate(order):
        p[old, new] = 1
    return p.T @ np.asarray(dense, dtype=np.int64) @ p


def top_entries(dense):
    """For each column j >= 1, the smallest row i < j with a 1, or None."""
    upper = np.triu(np.asarray(dense), 1)
    first = upper.argmax(axis=0)
    has = upper.any(axis=0)
    return [int(first[j]) if has[j] else None for j in range(1, len(upper))]


def relabel_violations(dense, s1, s2, s3):
    """Messages for every broken post-condition of a relabeled matrix (0-based scan)."""
    n = len(dense)
    bad = []
    c = lambda i, j: int(dense[i][j]) if 0 <= i < n and 0 <= j < n else 0
    # first row: ones exactly on 1..s1
    for j in range(1, n):
        if c(0, j) != (1 if j <= s1 else 0):
            bad.append(f"row 0 col {j}")
    # second row inside link 1's neighbourhood: ones exactly on 2..s2+1
    for j in range(2, s1 + 1):
        if c(1, j) != (1 if j <= s2 + 1 else 0):
            bad.append(f"row 1 col {j}")
    # third row inside link 2's ones: ones exactly on 3..s3+2
    for j in range(3, s2 + 2):
        if c(2, j) != (1 if j <= s3 + 2 else 0):
            bad.append(f"row 2 col {j}")
    # columns after the first block are ordered by their first neighbour
    tops = top_entries(dense)
    for j in range(1, len(tops)):
        a, b = tops[j - 1], tops[j]
        if a is None or b is None or b < a:
            bad.append(f"top entry decreases at col {j + 1}")
    return bad


def degree_sequence(node_count, edges):
    deg = [0] * node_count
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sorted(deg)
