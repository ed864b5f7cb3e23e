"""Rank-revealing linear algebra kernels used throughout the package.

All subspaces are handled as row-stacked bases (shape ``(k, n)``: k vectors
of length n).  Ranks and null spaces are SVD based with a relative
tolerance against the largest singular value; the package-wide default is
``DEFAULT_TOL = 1e-9``.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-9


def numeric_rank(M: np.ndarray, tol: float = DEFAULT_TOL) -> int:
    """Number of singular values exceeding ``tol * smax``.

    An empty matrix has rank 0.  ``tol`` must lie in (0, 1).
    """
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    M = np.atleast_2d(np.asarray(M, dtype=float))
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int((s > tol * s[0]).sum())


def orth_rows(M: np.ndarray, tol: float = DEFAULT_TOL, scale: float | None = None) -> np.ndarray:
    """Orthonormal basis (rows) for the row space of M.

    ``scale`` sets an absolute reference for the rank cut (useful for
    projector-like inputs whose singular values are 0 or 1 and whose zero
    side is pure rounding noise).
    """
    M = np.atleast_2d(np.asarray(M, dtype=float))
    if M.size == 0:
        return np.zeros((0, M.shape[1] if M.ndim == 2 else 0))
    u, s, vh = np.linalg.svd(M, full_matrices=False)
    ref = s[0] if s.size else 0.0
    if scale is not None:
        ref = max(ref, scale)
    if s.size == 0 or ref == 0.0:
        return np.zeros((0, M.shape[1]))
    r = int((s > tol * ref).sum())
    return vh[:r]


def null_rows(M: np.ndarray, tol: float = DEFAULT_TOL, scale: float | None = None) -> np.ndarray:
    """Orthonormal basis (rows) for the null space {x : M x = 0}.

    ``scale`` sets an absolute reference for the rank cut, for inputs that
    may consist of rounding noise only.
    """
    M = np.atleast_2d(np.asarray(M, dtype=float))
    n = M.shape[1]
    if M.size == 0:
        return np.eye(n)
    u, s, vh = np.linalg.svd(M)
    ref = s[0] if s.size else 0.0
    if scale is not None:
        ref = max(ref, scale)
    if s.size == 0 or ref == 0.0:
        return np.eye(n)
    r = int((s > tol * ref).sum())
    return vh[r:]


def span_dim(M: np.ndarray, tol: float = DEFAULT_TOL) -> int:
    return numeric_rank(M, tol)


def stack_span(*bases: np.ndarray) -> np.ndarray:
    """Row-stack several bases, skipping empty ones."""
    mats = [np.atleast_2d(b) for b in bases if np.asarray(b).size]
    if not mats:
        return np.zeros((0, 0))
    return np.vstack(mats)


def intersect_spans(A: np.ndarray, B: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (rows) of span(A) ∩ span(B).

    Solves [A^T, -B^T] (u, v) = 0 and returns the A^T u side.
    """
    A = orth_rows(A, tol)
    B = orth_rows(B, tol)
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, A.shape[1] if A.size else B.shape[1]))
    stacked = np.hstack([A.T, -B.T])
    ker = null_rows(stacked, tol)
    if ker.shape[0] == 0:
        return np.zeros((0, A.shape[1]))
    vecs = ker[:, : A.shape[0]] @ A
    return orth_rows(vecs, tol)


def complement_in(sub: np.ndarray, ambient: np.ndarray, metric: np.ndarray | None = None,
                  tol: float = DEFAULT_TOL) -> np.ndarray:
    """Basis (rows) of the orthocomplement of span(sub) inside span(ambient).

    With ``metric`` a symmetric positive-definite matrix G, orthogonality is
    taken in the G-inner product; otherwise Euclidean.
    """
    ambient = orth_rows(ambient, tol)
    sub = np.atleast_2d(np.asarray(sub, dtype=float))
    if sub.size == 0 or numeric_rank(sub, tol) == 0:
        return ambient
    if metric is None:
        gram = sub @ ambient.T
    else:
        gram = sub @ metric @ ambient.T
    coeffs = null_rows(gram, tol)  # combinations of ambient rows orthogonal to sub
    if coeffs.shape[0] == 0:
        return np.zeros((0, ambient.shape[1]))
    return orth_rows(coeffs @ ambient, tol)


def projector_onto(rows: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Euclidean orthogonal projector onto span(rows)."""
    Q = orth_rows(rows, tol)
    return Q.T @ Q


def in_span(vecs: np.ndarray, basis: np.ndarray, tol: float = 1e-8) -> bool:
    """True if every row of ``vecs`` lies in span(basis), relative residual <= tol."""
    vecs = np.atleast_2d(np.asarray(vecs, dtype=float))
    if vecs.size == 0:
        return True
    scale = np.linalg.norm(vecs)
    if scale == 0.0:
        return True
    P = projector_onto(basis)
    resid = vecs - vecs @ P
    return float(np.linalg.norm(resid)) <= tol * scale


def span_residual(vecs: np.ndarray, basis: np.ndarray) -> float:
    """Relative residual of rows of ``vecs`` against span(basis)."""
    vecs = np.atleast_2d(np.asarray(vecs, dtype=float))
    if vecs.size == 0:
        return 0.0
    scale = np.linalg.norm(vecs)
    if scale == 0.0:
        return 0.0
    P = projector_onto(basis)
    return float(np.linalg.norm(vecs - vecs @ P) / scale)


def signature_of(matrix: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[int, int]:
    """(positive, negative) eigenvalue counts of a symmetric matrix."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.size == 0:
        return (0, 0)
    ev = np.linalg.eigvalsh((matrix + matrix.T) / 2.0)
    scale = np.abs(ev).max()
    if scale == 0.0:
        return (0, 0)
    return int((ev > tol * scale).sum()), int((ev < -tol * scale).sum())
