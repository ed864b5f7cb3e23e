"""Constructors for the classical real rank-one families and their parabolics.

``build_classical`` produces so(p,q), su(p,q), sp(p,q) as real matrix
algebras (complex and quaternionic entries are realified blockwise), with
the Cartan involution X -> -X^T.  ``restricted_roots`` extracts a maximal
abelian subspace of s, the joint ad-eigenspace decomposition, and the
simple roots; ``minimal_parabolic`` assembles p = m + a + n together with
a Weyl representative mapping n onto the opposite nilpotent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .core import (ConstructionError, InputError, LieAlgebra, Subalgebra,
                   UnsupportedOperation, cartan_decomposition, subalgebra)
from .linalg import (DEFAULT_TOL, in_span, intersect_spans, null_rows, numeric_rank,
                     orth_rows, stack_span)

# quaternion left-multiplication table on the basis (1, i, j, k)
_QT = np.zeros((4, 4, 4))
_QT[0] = np.eye(4)
for _a in range(1, 4):
    _QT[_a, 0, _a] = 1.0
    _QT[_a, _a, 0] = -1.0
for _a, _b, _c in [(1, 2, 3), (2, 3, 1), (3, 1, 2)]:
    _QT[_a, _b, _c] = 1.0
    _QT[_b, _a, _c] = -1.0
_QT.setflags(write=False)


def realify_complex(Z: np.ndarray) -> np.ndarray:
    """Complex N x N matrix -> real 2N x 2N, entry z = a+bi -> [[a,-b],[b,a]]."""
    Z = np.asarray(Z, dtype=complex)
    n = Z.shape[0]
    out = np.zeros((2 * n, 2 * n))
    out[0::2, 0::2] = Z.real
    out[1::2, 1::2] = Z.real
    out[0::2, 1::2] = -Z.imag
    out[1::2, 0::2] = Z.imag
    return out


def realify_quaternion(Q: np.ndarray) -> np.ndarray:
    """Quaternionic N x N matrix (shape (N,N,4)) -> real 4N x 4N left-multiplication blocks."""
    Q = np.asarray(Q, dtype=float)
    n = Q.shape[0]
    out = np.zeros((4 * n, 4 * n))
    for i in range(n):
        for j in range(n):
            # block[k, l] = sum_m Q[i,j,m] * QT[m, l, k]
            out[4 * i:4 * i + 4, 4 * j:4 * j + 4] = np.einsum("m,mlk->kl", Q[i, j], _QT)
    return out


def _theta_from_matrices(mats: np.ndarray) -> np.ndarray:
    """Coefficient matrix of X -> -X^T; requires the basis to be transpose-stable."""
    flat = mats.reshape(mats.shape[0], -1)
    pinv = np.linalg.pinv(flat)
    neg_t = -np.einsum("ijk->ikj", mats)
    theta = (neg_t.reshape(mats.shape[0], -1) @ pinv).T
    resid = np.linalg.norm(theta.T @ flat - neg_t.reshape(mats.shape[0], -1))
    if resid > 1e-9 * max(1.0, np.linalg.norm(flat)):
        raise ConstructionError("basis is not stable under X -> -X^T")
    return theta


def build_classical(family: str, p: int, q: int) -> LieAlgebra:
    """so/su/sp of signature (p, q) as a real matrix algebra with theta = -transpose."""
    if family not in ("so", "su", "sp"):
        raise InputError(f"unknown family {family!r}")
    # sp(1) is a genuine 3-dimensional algebra; so(1) and su(1) are trivial
    min_size = 1 if family == "sp" else 2
    if p < 0 or q < 0 or p + q < min_size:
        raise InputError(f"need p, q >= 0 and p + q >= {min_size}")
    N = p + q
    J = np.diag([1.0] * p + [-1.0] * q)
    mats: list[np.ndarray] = []
    labels: list[str] = []

    if family == "so":
        for i in range(N):
            for j in range(i + 1, N):
                E = np.zeros((N, N))
                E[i, j] = 1.0
                E[j, i] = -1.0
                mats.append(J @ E)
                kind = "R" if J[i, i] == J[j, j] else "B"
                labels.append(f"{kind}{i}{j}")
        real_mats = np.array(mats)
    elif family == "su":
        cmx: list[np.ndarray] = []
        for i in range(N):
            for j in range(i + 1, N):
                E = np.zeros((N, N), dtype=complex)
                E[i, j] = 1.0
                E[j, i] = -1.0
                cmx.append(J @ E)
                labels.append(f"A{i}{j}")
                E = np.zeros((N, N), dtype=complex)
                E[i, j] = 1j
                E[j, i] = 1j
                cmx.append(J @ E)
                labels.append(f"S{i}{j}")
        for m in range(N - 1):
            D = np.zeros((N, N), dtype=complex)
            D[m, m] = 1j
            D[m + 1, m + 1] = -1j
            cmx.append(D)
            labels.append(f"D{m}")
        real_mats = np.array([realify_complex(Z) for Z in cmx])
    else:  # sp
        qmx: list[np.ndarray] = []
        units = np.eye(4)
        for i in range(N):
            for j in range(i + 1, N):
                for u in range(4):
                    Q = np.zeros((N, N, 4))
                    Q[i, j] = units[u]
                    conj = units[u] if u == 0 else -units[u]
                    Q[j, i] = -conj
                    Q[i, j] *= J[i, i]
                    Q[j, i] *= J[j, j]
                    qmx.append(Q)
                    labels.append(f"O{i}{j}{'1ijk'[u]}")
        for i in range(N):
            for u in range(1, 4):
                Q = np.zeros((N, N, 4))
                Q[i, i] = J[i, i] * units[u]
                qmx.append(Q)
                labels.append(f"D{i}{'1ijk'[u]}")
        real_mats = np.array([realify_quaternion(Q) for Q in qmx])

    expected = {"so": N * (N - 1) // 2, "su": N * N - 1, "sp": N * (2 * N + 1)}[family]
    if len(labels) != expected:
        raise ConstructionError(f"{family}({p},{q}): built {len(labels)} generators, expected {expected}")
    theta = _theta_from_matrices(real_mats)
    return LieAlgebra(labels=tuple(labels), matrices=real_mats, theta=theta,
                      name=f"{family}({p},{q})")


def build_sl(n: int) -> LieAlgebra:
    """sl(n, R): traceless real matrices, theta = -transpose."""
    if n < 2:
        raise InputError("need n >= 2")
    mats: list[np.ndarray] = []
    labels: list[str] = []
    for m in range(n - 1):
        D = np.zeros((n, n))
        D[m, m] = 1.0
        D[m + 1, m + 1] = -1.0
        mats.append(D)
        labels.append(f"H{m}")
    for i in range(n):
        for j in range(n):
            if i != j:
                E = np.zeros((n, n))
                E[i, j] = 1.0
                mats.append(E)
                labels.append(f"E{i}{j}")
    arr = np.array(mats)
    theta = _theta_from_matrices(arr)
    return LieAlgebra(labels=tuple(labels), matrices=arr, theta=theta, name=f"sl{n}")


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    """Block direct sum; matrices and theta are combined blockwise when both present."""
    d1, d2 = L1.dim, L2.dim
    c = np.zeros((d1 + d2, d1 + d2, d1 + d2))
    c[:d1, :d1, :d1] = L1.bracket_tensor
    c[d1:, d1:, d1:] = L2.bracket_tensor
    mats = None
    if L1.matrices is not None and L2.matrices is not None:
        n1, n2 = L1.matrices.shape[1], L2.matrices.shape[1]
        mats = np.zeros((d1 + d2, n1 + n2, n1 + n2))
        mats[:d1, :n1, :n1] = L1.matrices
        mats[d1:, n1:, n1:] = L2.matrices
    theta = None
    if L1.theta is not None and L2.theta is not None:
        theta = np.zeros((d1 + d2, d1 + d2))
        theta[:d1, :d1] = L1.theta
        theta[d1:, d1:] = L2.theta
    labels = tuple(f"0.{l}" for l in L1.labels) + tuple(f"1.{l}" for l in L2.labels)
    return LieAlgebra(labels=labels, matrices=mats, theta=theta,
                      name=f"{L1.name}+{L2.name}", structure=c)


def algebra_power(L: LieAlgebra, copies: int) -> LieAlgebra:
    if copies < 1:
        raise InputError("copies must be >= 1")
    out = L
    for _ in range(copies - 1):
        out = direct_sum(out, L)
    labels = tuple(f"{i}.{l}" for i in range(copies) for l in L.labels)
    return LieAlgebra(labels=labels, matrices=out.matrices, theta=out.theta,
                      name=f"{L.name}^{copies}", structure=out.bracket_tensor)


def diagonal_embed(L: LieAlgebra, copies: int) -> Subalgebra:
    """The diagonal copy of L inside L^copies."""
    if copies < 2:
        raise InputError("copies must be >= 2")
    ambient = algebra_power(L, copies)
    basis = np.hstack([np.eye(L.dim)] * copies)
    return subalgebra(ambient, basis, name=f"diag({L.name},{copies})")


def factor_embed(L: LieAlgebra, copies: int, assignment: tuple[int, ...]) -> Subalgebra:
    """Image of L^k in L^copies via slot assignment, e.g. (0,0,1): (x,y) -> (x,x,y)."""
    if len(assignment) != copies:
        raise InputError("assignment must list one source factor per slot")
    k = max(assignment) + 1
    ambient = algebra_power(L, copies)
    rows = []
    for f in range(k):
        block = np.zeros((L.dim, copies * L.dim))
        for slot, src in enumerate(assignment):
            if src == f:
                block[:, slot * L.dim:(slot + 1) * L.dim] = np.eye(L.dim)
        rows.append(block)
    return subalgebra(ambient, np.vstack(rows), name=f"{L.name}^{k}->{assignment}")


def from_matrices(L: LieAlgebra, mats: np.ndarray, name: str = "",
                  validate: bool = True) -> Subalgebra:
    """Subalgebra spanned by the given realization matrices."""
    rows = np.array([L.coefficients_of(M) for M in np.asarray(mats, dtype=float)])
    return subalgebra(L, rows, name=name, validate=validate)


def matrix_involution(L: LieAlgebra, D: np.ndarray) -> np.ndarray:
    """Coefficient matrix of X -> D X D^{-1}; validates it is an involutive automorphism."""
    if L.matrices is None:
        raise UnsupportedOperation("needs a matrix realization")
    Dinv = np.linalg.inv(D)
    conj = np.einsum("ab,ibc,cd->iad", D, L.matrices, Dinv)
    sigma = np.array([L.coefficients_of(M) for M in conj]).T
    if np.linalg.norm(sigma @ sigma - np.eye(L.dim)) > 1e-8 * L.dim:
        raise ConstructionError("conjugation is not an involution on the algebra")
    return sigma


# -- embeddings through division algebras -----------------------------------

def _complex_basis_u(p: int, q: int, traceless: bool) -> list[np.ndarray]:
    """Complex basis of u(p,q) (or su(p,q) when traceless)."""
    N = p + q
    J = np.diag([1.0] * p + [-1.0] * q).astype(complex)
    out = []
    for i in range(N):
        for j in range(i + 1, N):
            E = np.zeros((N, N), dtype=complex)
            E[i, j] = 1.0
            E[j, i] = -1.0
            out.append(J @ E)
            E = np.zeros((N, N), dtype=complex)
            E[i, j] = 1j
            E[j, i] = 1j
            out.append(J @ E)
    for m in range(N - 1):
        D = np.zeros((N, N), dtype=complex)
        D[m, m] = 1j
        D[m + 1, m + 1] = -1j
        out.append(D)
    if not traceless:
        out.append(1j * np.eye(N, dtype=complex))
    return out


def _complex_to_quaternion_real(Z: np.ndarray) -> np.ndarray:
    """Complex matrix -> quaternionic (i -> quaternion i) -> real 4N x 4N."""
    Z = np.asarray(Z, dtype=complex)
    n = Z.shape[0]
    Q = np.zeros((n, n, 4))
    Q[:, :, 0] = Z.real
    Q[:, :, 1] = Z.imag
    return realify_quaternion(Q)


def embed_division(inner: str, signature: tuple[int, int], ambient: str) -> Subalgebra:
    """Realified embedding of a smaller-field algebra into its classical ambient.

    Supported: ('complex', (0,k), 'so') su(k) in so(2k);
               ('quaternion', (0,k), 'so') sp(k) in so(4k);
               ('real', (p,q), 'su') so(p,q) in su(p,q);
               ('complex', (p,q), 'sp') u(p,q) in sp(p,q).
    """
    p, q = signature
    if inner == "complex" and ambient == "so":
        if p != 0:
            raise InputError("su(k) in so(2k) requires compact signature (0, k)")
        big = build_classical("so", 0, 2 * q)
        small = build_classical("su", 0, q)
        return from_matrices(big, small.matrices, name=f"su({q})")
    if inner == "quaternion" and ambient == "so":
        if p != 0:
            raise InputError("sp(k) in so(4k) requires compact signature (0, k)")
        big = build_classical("so", 0, 4 * q)
        small = build_classical("sp", 0, q)
        return from_matrices(big, small.matrices, name=f"sp({q})")
    if inner == "real" and ambient == "su":
        big = build_classical("su", p, q)
        small = build_classical("so", p, q)
        mats = np.array([realify_complex(M.astype(complex)) for M in small.matrices])
        return from_matrices(big, mats, name=f"so({p},{q})")
    if inner == "complex" and ambient == "sp":
        big = build_classical("sp", p, q)
        cbasis = _complex_basis_u(p, q, traceless=False)
        mats = np.array([_complex_to_quaternion_real(Z) for Z in cbasis])
        return from_matrices(big, mats, name=f"u({p},{q})")
    raise InputError(f"unsupported embedding ({inner!r}, {signature!r}, {ambient!r})")


# -- restricted roots and parabolics -----------------------------------------

@dataclass(frozen=True, eq=False)
class RestrictedRootData:
    """Joint ad-eigenspace decomposition relative to a maximal abelian a in s.

    Root functionals are stored as coefficient vectors against the rows of
    ``a``: the root evaluates on Z = t @ a as (vector . t).  In real rank
    one the generator is normalized so the indivisible positive root takes
    value 1 on it.
    """

    algebra: LieAlgebra
    a: np.ndarray                      # (r, dim) basis rows
    m: np.ndarray                      # centralizer of a in k, basis rows
    root_vectors: np.ndarray           # (R, r)
    root_spaces: tuple[np.ndarray, ...]
    simple_roots: np.ndarray           # (S, r), subset of the positive roots
    positive: np.ndarray               # bool mask over root_vectors

    @property
    def rank(self) -> int:
        return self.a.shape[0]

    @property
    def multiplicities(self) -> tuple[int, int]:
        """(m_alpha, m_2alpha) in real rank one."""
        if self.rank != 1:
            raise UnsupportedOperation("multiplicities are a rank-one notion")
        m1 = m2 = 0
        for vec, space in zip(self.root_vectors, self.root_spaces):
            if abs(vec[0] - 1.0) < 1e-6:
                m1 = space.shape[0]
            elif abs(vec[0] - 2.0) < 1e-6:
                m2 = space.shape[0]
        return (m1, m2)

    def space_of(self, vec: np.ndarray, tol: float = 1e-6) -> np.ndarray:
        """Root space for the functional ``vec`` (empty basis if not a root)."""
        vec = np.atleast_1d(np.asarray(vec, dtype=float))
        for rv, space in zip(self.root_vectors, self.root_spaces):
            if np.linalg.norm(rv - vec) < tol:
                return space
        return np.zeros((0, self.algebra.dim))

    def positive_spaces(self) -> list[np.ndarray]:
        return [sp for sp, pos in zip(self.root_spaces, self.positive) if pos]

    def negative_spaces(self) -> list[np.ndarray]:
        return [sp for sp, pos in zip(self.root_spaces, self.positive) if not pos]


def _cluster(evals: np.ndarray, gap: float) -> list[np.ndarray]:
    """Indices of eigenvalues grouped by absolute gap."""
    order = np.argsort(evals)
    groups = [[order[0]]]
    for idx in order[1:]:
        if evals[idx] - evals[groups[-1][-1]] > gap:
            groups.append([])
        groups[-1].append(idx)
    return [np.array(g) for g in groups]


def _maximal_abelian(L: LieAlgebra, s: np.ndarray, seed: int, tol: float) -> np.ndarray:
    """Centralizer in s of a generic element of s (maximal abelian for generic picks)."""
    rng = np.random.default_rng(seed)
    for _ in range(20):
        X = rng.standard_normal(s.shape[0]) @ s
        X /= np.linalg.norm(X)
        ker = null_rows(L.ad(X) @ s.T, tol)
        cand = orth_rows(ker @ s, tol)
        pair = np.einsum("ai,bj,ijk->abk", cand, cand, L.bracket_tensor)
        if np.abs(pair).max() < 1e-8 * max(1.0, np.abs(cand).max()):
            return cand
    raise ConstructionError("failed to find a maximal abelian subspace (non-generic seeds)")


def restricted_roots(L: LieAlgebra, a_basis: Optional[np.ndarray] = None,
                     seed: int = 0, tol: float = DEFAULT_TOL,
                     gap: float = 1e-6, xi: Optional[np.ndarray] = None) -> RestrictedRootData:
    """Restricted-root decomposition relative to a maximal abelian a in s.

    ``a_basis`` prescribes a (it is checked to be abelian and maximal);
    otherwise a is the centralizer of a seeded random element of s.  ``xi``
    prescribes the positivity functional (coefficients against the rows of
    a); by default a seeded generic one is drawn.
    """
    if L.theta is None:
        raise UnsupportedOperation("restricted_roots requires theta")
    ksub, s = cartan_decomposition(L, tol)
    if s.shape[0] == 0:
        raise UnsupportedOperation(f"{L.name or 'algebra'} is compact (real rank zero)")
    if a_basis is None:
        a = _maximal_abelian(L, s, seed, tol)
    else:
        # keep the prescribed rows (their orientation fixes the positivity convention)
        a = np.atleast_2d(np.asarray(a_basis, dtype=float))
        if numeric_rank(a, tol) != a.shape[0]:
            raise InputError("prescribed a basis is not linearly independent")
        if not in_span(a, s, 1e-8):
            raise InputError("prescribed a is not contained in s")
        pair = np.einsum("ai,bj,ijk->abk", a, a, L.bracket_tensor)
        if np.abs(pair).max() > 1e-8:
            raise InputError("prescribed a is not abelian")
        # centralizer of a in s must be a itself
        cent = s
        for Z in a:
            coeff = null_rows(L.ad(Z) @ cent.T, tol)
            cent = orth_rows(coeff @ cent, tol)
        if cent.shape[0] != a.shape[0]:
            raise InputError("prescribed a is not maximal abelian in s")

    # joint eigenspaces of ad(Z_i), computed in B_theta-orthonormal coordinates
    G = L.b_theta
    lo = np.linalg.cholesky(G)
    lo_inv = np.linalg.inv(lo)
    spaces = [np.eye(L.dim)]            # rows = B_theta-orthonormal coordinates
    values: list[list[float]] = [[]]
    for Z in a:
        M = lo.T @ L.ad(Z) @ lo_inv.T
        M = (M + M.T) / 2.0
        new_spaces, new_values = [], []
        for space, vals in zip(spaces, values):
            R = space @ M @ space.T
            ev, V = np.linalg.eigh((R + R.T) / 2.0)
            for idx in _cluster(ev, gap):
                new_spaces.append(V[:, idx].T @ space)
                new_values.append(vals + [float(ev[idx].mean())])
        spaces = new_spaces
        values = new_values
    values = [np.array(v) for v in values]

    # back to plain coefficients: u-rows = x-rows @ lo, so x-rows = u-rows @ lo^{-1}
    spaces = [orth_rows(sp @ lo_inv, tol) for sp in spaces]

    root_vectors, root_spaces = [], []
    zero_space = None
    for sp, val in zip(spaces, values):
        if np.linalg.norm(val) < gap:
            zero_space = sp
        else:
            root_vectors.append(val)
            root_spaces.append(sp)
    if zero_space is None:
        raise ConstructionError("no zero weight space found (m + a missing)")
    m = intersect_spans(zero_space, ksub.basis, tol)
    if m.shape[0] + a.shape[0] != zero_space.shape[0]:
        raise ConstructionError("centralizer of a does not split as m + a")

    root_vectors = np.array(root_vectors)
    # positivity via a generic functional (either prescribed or seeded)
    if xi is not None:
        vals = root_vectors @ np.asarray(xi, dtype=float)
        if np.abs(vals).min() <= 1e-6 * max(1.0, np.abs(vals).max()):
            raise InputError("prescribed positivity functional vanishes on a root")
    else:
        rng = np.random.default_rng(seed + 104729)
        for _ in range(20):
            xi = rng.standard_normal(a.shape[0])
            vals = root_vectors @ xi
            if np.abs(vals).min() > 1e-6 * max(1.0, np.abs(vals).max()):
                break
    positive = vals > 0

    # rank-one normalization: the indivisible positive root takes value 1 on a[0]
    if a.shape[0] == 1:
        pos_vals = root_vectors[positive, 0]
        c = pos_vals[np.abs(pos_vals).argmin()]
        a = a / c
        root_vectors = np.round(root_vectors / c, 12)
        positive = root_vectors[:, 0] > 0

    # simple roots: positive roots that are not sums of two positive roots
    pos_vecs = root_vectors[positive]
    simple = []
    for v in pos_vecs:
        is_sum = False
        for u in pos_vecs:
            for w in pos_vecs:
                if np.linalg.norm(u + w - v) < 1e-6:
                    is_sum = True
        if not is_sum:
            simple.append(v)
    simple = np.array(simple)

    return RestrictedRootData(algebra=L, a=a, m=m,
                              root_vectors=root_vectors,
                              root_spaces=tuple(root_spaces),
                              simple_roots=simple, positive=positive)


@dataclass(frozen=True, eq=False)
class ParabolicData:
    """Minimal parabolic p = m + a + n with a Weyl representative.

    ``weyl`` is a group element (matrix in the realization) with
    Ad(weyl) a = a and Ad(weyl) n = nbar.
    """

    algebra: LieAlgebra
    roots: RestrictedRootData
    p: Subalgebra
    m: Subalgebra
    a: np.ndarray
    n: Subalgebra
    nbar: Subalgebra
    weyl: np.ndarray
    weyl_ad: np.ndarray

    @property
    def dim_flag(self) -> int:
        """dim g/p = dim n."""
        return self.n.dim


def _sl2_weyl(L: LieAlgebra, roots: RestrictedRootData, alpha: np.ndarray,
              tol: float = DEFAULT_TOL) -> np.ndarray:
    """Weyl representative for one simple root via its sl2 triple: exp(pi/2 (E + theta E))."""
    space = roots.space_of(alpha)
    if space.shape[0] == 0:
        raise InputError("not a root")
    E = space[0]
    thE = L.theta @ E
    H0 = L.bracket(E, -thE)
    # alpha(H0) > 0; rescale so that alpha(H) = 2
    t = H0 @ np.linalg.pinv(roots.a)         # coordinates of H0 in the a-basis
    val = float(alpha @ t)
    if val <= 0:
        raise ConstructionError("sl2 normalization failed (alpha(H0) <= 0)")
    E = E * np.sqrt(2.0 / val)
    W = E + L.theta @ E
    return L.exp(np.asarray(W) * (np.pi / 2.0))


def minimal_parabolic(L: LieAlgebra, roots: Optional[RestrictedRootData] = None,
                      seed: int = 0, tol: float = DEFAULT_TOL) -> ParabolicData:
    """Standard minimal parabolic from the restricted root data."""
    if roots is None:
        roots = restricted_roots(L, seed=seed, tol=tol)
    n = orth_rows(stack_span(*roots.positive_spaces()), tol)
    nbar = orth_rows(stack_span(*roots.negative_spaces()), tol)
    p_basis = orth_rows(stack_span(roots.m, roots.a, n), tol)

    # Weyl representative: search short products of simple reflections with Ad(w) n = nbar
    simples = [_sl2_weyl(L, roots, alpha, tol) for alpha in roots.simple_roots]
    ident = L.identity_element()
    frontier = [(ident, L.ad_group(ident))]
    weyl = weyl_ad = None
    max_len = int(roots.positive.sum())
    for _ in range(max_len):
        new_frontier = []
        for x, adx in frontier:
            for s in simples:
                y = s @ x
                ady = L.ad_group(y)
                if in_span(n @ ady.T, nbar, 1e-7) and in_span(roots.a @ ady.T, roots.a, 1e-7):
                    weyl, weyl_ad = y, ady
                    break
                new_frontier.append((y, ady))
            if weyl is not None:
                break
        if weyl is not None:
            break
        frontier = new_frontier
    if weyl is None:
        raise ConstructionError("no Weyl word maps n onto nbar")

    alg_name = L.name or "g"
    return ParabolicData(
        algebra=L, roots=roots,
        p=subalgebra(L, p_basis, name=f"p({alg_name})", validate=False),
        m=subalgebra(L, roots.m, name=f"m({alg_name})", validate=False),
        a=roots.a,
        n=subalgebra(L, n, name=f"n({alg_name})", validate=False),
        nbar=subalgebra(L, nbar, name=f"nbar({alg_name})", validate=False),
        weyl=weyl, weyl_ad=weyl_ad)


# -- registry -----------------------------------------------------------------

_CLASSICAL_RE = re.compile(r"^(so|su|sp)\((\d+),(\d+)\)$")
_COMPACT_RE = re.compile(r"^(so|su|sp)\((\d+)\)$")
_SHORT_RE = re.compile(r"^(so|su|sp)(\d)(\d+)$")
_SL_RE = re.compile(r"^sl(\d+)(?:\^(\d+))?$")


@lru_cache(maxsize=None)
def get_algebra(name: str) -> LieAlgebra:
    """Named-algebra registry: so(1,4), su(1,2), sp(1,3), so13, sl2, sl2^3, f4, g2."""
    name = name.strip()
    m = _CLASSICAL_RE.match(name)
    if m:
        return build_classical(m.group(1), int(m.group(2)), int(m.group(3)))
    m = _COMPACT_RE.match(name)
    if m:
        return build_classical(m.group(1), 0, int(m.group(2)))
    m = _SHORT_RE.match(name)
    if m:
        return build_classical(m.group(1), int(m.group(2)), int(m.group(3)))
    m = _SL_RE.match(name)
    if m:
        L = build_sl(int(m.group(1)))
        if m.group(2):
            return algebra_power(L, int(m.group(2)))
        return L
    if name == "f4":
        from .jordan import f4_bundle
        return f4_bundle().algebra
    if name == "g2":
        from .jordan import build_g2
        return build_g2()
    raise InputError(f"unknown algebra name {name!r}")
