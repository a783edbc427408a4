"""Smallest adjacency eigenvalue as a necessary condition for line graphs.

Every line graph has ``A = R^T R - 2I`` with ``R^T R`` positive
semidefinite, so its spectrum is bounded below by -2.
"""

from __future__ import annotations

import math

import numpy as np

from ..graph import SymBitMatrix

__all__ = ["jacobi_eigenvalues", "smallest_eigenvalue", "spectral_reject"]


def jacobi_eigenvalues(a, threshold: float = 1e-10, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps over all pairs ``p < q`` until the Frobenius norm of the
    off-diagonal part drops below ``threshold``.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T):
        raise ValueError("matrix must be symmetric")
    for _ in range(max_sweeps):
        # direct sum; total minus diagonal cancels too badly near 1e-10
        off = float(np.linalg.norm(a[~np.eye(n, dtype=bool)]))
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    # theta^2 would overflow; t ~ 1/(2 theta)
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.sort(np.diag(a))


def smallest_eigenvalue(c: SymBitMatrix) -> float:
    if c.order == 0:
        raise ValueError("empty matrix has no eigenvalues")
    return float(jacobi_eigenvalues(c.to_dense())[0])


def spectral_reject(c: SymBitMatrix, tol: float = 1e-9) -> bool:
    """True when the smallest eigenvalue is below ``-2 - tol`` (certainly not a line graph).

    False means no decision.
    """
    return smallest_eigenvalue(c) < -2.0 - tol
