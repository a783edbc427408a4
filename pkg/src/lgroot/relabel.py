"""Label swapping and matrix relabeling of link adjacency matrices.

The usual pseudocode numbers links from 1.  Every routine here is 0-based;
where a routine mirrors a 1-based step its docstring gives the translation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedInput
from .graph import SymBitMatrix

__all__ = [
    "LabeledLam",
    "RelabelResult",
    "swap_label",
    "group_label_swapping",
    "matrix_relabeling",
    "validate_neighboring_pattern",
]


class LabeledLam:
    """Mutable working copy of a LAM that remembers which input link sits at each label.

    ``order[new] = old``: the link carrying label ``new`` had label ``old``
    in the matrix handed to the constructor.
    """

    def __init__(self, matrix: SymBitMatrix):
        self.matrix = matrix.copy()
        self.order = list(range(matrix.order))

    @property
    def permutation(self) -> list[int]:
        """Old label to new label."""
        perm = [0] * len(self.order)
        for new, old in enumerate(self.order):
            perm[old] = new
        return perm

    def swap_label(self, j: int, k: int) -> None:
        """Exchange the labels of links ``j`` and ``k`` in place.

        Only the strict upper triangle is touched; the entry ``(j, k)`` is
        unchanged.  ``j == k`` is a no-op.
        """
        if j == k:
            return
        if j > k:
            j, k = k, j
        n = self.matrix.order
        if j < 0 or k >= n:
            raise IndexError(f"labels ({j}, {k}) out of range for order {n}")
        rows = self.matrix.rows
        # entries (i, j) and (i, k) for i < j
        both = (1 << j) | (1 << k)
        for i in range(j):
            r = rows[i]
            if ((r >> j) ^ (r >> k)) & 1:
                rows[i] = r ^ both
        # entries (j, i) and (i, k) for j < i < k
        bit_k = 1 << k
        rj = rows[j]
        for i in range(j + 1, k):
            a = (rj >> i) & 1
            b = (rows[i] >> k) & 1
            if a != b:
                rj ^= 1 << i
                rows[i] ^= bit_k
        # entries (j, i) and (k, i) for i > k
        high = ~((1 << (k + 1)) - 1)
        rk = rows[k]
        rows[j] = (rj & ~high) | (rk & high)
        rows[k] = (rk & ~high) | (rj & high)
        self.order[j], self.order[k] = self.order[k], self.order[j]

    def group_label_swapping(self, row: int, start: int, count: int, stop: int):
        """Move the 1-entries of ``row`` inside columns ``[start, stop)`` to the front.

        Zeros in ``[start, start + count)`` are paired, in ascending order,
        with ones in ``[start + count, stop)`` and each pair of labels is
        swapped.  The 1-based call ``GroupLabelSwapping(C, u, k, a, b)`` is
        ``group_label_swapping(k - 1, u, a, b)``.

        ``count`` must equal the number of ones of ``row`` in the window.
        Returns the paired 0-based label lists ``(X, Y)``.
        """
        if stop <= start:
            return [], []
        m = self.matrix
        r = m.rows[row]
        mid = start + count
        xs = [i for i in range(start, mid) if not (r >> i) & 1]
        ys = [i for i in range(mid, stop) if (r >> i) & 1]
        if len(xs) != len(ys):
            raise ValueError(
                f"group swap precondition violated on row {row}: "
                f"{len(xs)} zeros vs {len(ys)} ones (count={count})")
        for x, y in zip(xs, ys):
            self.swap_label(x, y)
        return xs, ys


def swap_label(c: SymBitMatrix, j: int, k: int) -> SymBitMatrix:
    """Copy of ``c`` conjugated by the transposition of labels ``j`` and ``k``."""
    w = LabeledLam(c)
    w.swap_label(j, k)
    return w.matrix


def group_label_swapping(c: SymBitMatrix, u: int, k: int, a: int, b: int) -> SymBitMatrix:
    """Functional form taking 1-based ``(u, k, a, b)``."""
    w = LabeledLam(c)
    w.group_label_swapping(k - 1, u, a, b)
    return w.matrix


@dataclass(frozen=True)
class RelabelResult:
    relabeled: SymBitMatrix
    s1: int
    s2: int
    s3: int
    permutation: tuple[int, ...]
    order: tuple[int, ...]


def matrix_relabeling(c: SymBitMatrix) -> RelabelResult:
    """Relabel a connected LAM so that its top-1-entry curve is monotone.

    Counters keep their usual meaning: ``s1`` neighbours of
    link 0, ``s2`` of them also adjacent to link 1, ``s3`` of those also
    adjacent to link 2.  Raises :class:`DisconnectedInput` when the sweep
    runs out of discovered links before covering all of them.
    """
    n = c.order
    if n < 1:
        raise ValueError("matrix relabeling needs at least one link")
    w = LabeledLam(c)
    m = w.matrix

    s1 = m.row_sum(0, 1, n)
    w.group_label_swapping(0, 1, s1, n)
    s2 = m.row_sum(1, 2, s1 + 1) if n > 2 else 0
    w.group_label_swapping(1, 2, s2, s1 + 1)
    s3 = m.row_sum(2, 3, s2 + 2) if n > 3 else 0
    w.group_label_swapping(2, 3, s3, s2 + 2)

    # ``discovered`` and ``k`` keep their 1-based meaning
    discovered = s1 + 1
    k = 2
    while discovered < n and k <= n:
        if k > discovered:
            break
        s = m.row_sum(k - 1, discovered, n)
        w.group_label_swapping(k - 1, discovered, s, n)
        k += 1
        discovered += s
    if discovered < n:
        raise DisconnectedInput(
            f"relabeling reached {discovered} of {n} links; split components first")
    return RelabelResult(m, s1, s2, s3, tuple(w.permutation), tuple(w.order))


def validate_neighboring_pattern(c: SymBitMatrix, n_left: int, n_right: int) -> bool:
    """Check that the leading block of ``c`` looks like a link with its neighbours.

    Label 0 is the link, labels ``1..n_left`` its left neighbours and the
    next ``n_right`` labels its right neighbours.  Requires ``n_left >= 3``.
    """
    if n_left < 3:
        raise ValueError("pattern check needs at least 3 left neighbours")
    size = 1 + n_left + n_right
    if size > c.order:
        raise ValueError("pattern larger than matrix")
    get = c.get
    if any(not get(0, j) for j in range(1, size)):
        return False
    lefts = range(1, n_left + 1)
    rights = range(n_left + 1, size)
    for i in lefts:
        for j in range(i + 1, n_left + 1):
            if not get(i, j):
                return False
    for i in rights:
        for j in range(i + 1, size):
            if not get(i, j):
                return False
    for i in lefts:
        if sum(get(i, j) for j in rights) > 1:
            return False
    for j in rights:
        if sum(get(i, j) for i in lefts) > 1:
            return False
    return True
