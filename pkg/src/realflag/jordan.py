"""Octonion arithmetic, the signature-twisted 3x3 octonionic Jordan algebra,
and the exceptional algebras built from it.

The octonion table is Cayley-Dickson over the quaternions with
(a, b)(c, d) = (ac - d~ b, da + b c~), so that C = span{1, e1} and the
imaginary complement O_I has basis e2..e7.  As a complex line bundle
O_I = C j + C l + C n with j = e2, l = e4 and n = l j = -e6 (the sign of
n is the one the null-cone equation below forces).  The Jordan algebra W is the
space of 3x3 octonionic matrices Hermitian with respect to the signature
(+, +, -), with product x o y = (xy + yx)/2; its 52-dimensional derivation
algebra is the noncompact rank-one real form of f4 with maximal compact
so(9), realized here by matrices acting on the 26-dimensional trace-free
part V.  The projectivized null cone {x in V : x o x = 0} is the flag
manifold of that algebra.

The f4 build is cached to disk (JSON, content-hashed against the
multiplication tables) since the derivation solve is the most expensive
step in the package.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

import numpy as np
import scipy.linalg

from .core import (ConstructionError, InputError, LieAlgebra, Subalgebra,
                   subalgebra)
from .linalg import numeric_rank, orth_rows, signature_of

SOLVER_TOL = 1e-9


class EmbeddingError(ConstructionError):
    """A candidate subalgebra failed to validate inside the ambient algebra."""


# -- octonions ---------------------------------------------------------------

def _quaternion_table() -> np.ndarray:
    t = np.zeros((4, 4, 4))
    t[0] = np.eye(4)
    for a in range(1, 4):
        t[a, 0, a] = 1.0
        t[a, a, 0] = -1.0
    for a, b, c in [(1, 2, 3), (2, 3, 1), (3, 1, 2)]:
        t[a, b, c] = 1.0
        t[b, a, c] = -1.0
    return t


def _octonion_table() -> np.ndarray:
    qt = _quaternion_table()

    def qmul(x, y):
        return np.einsum("i,j,ijk->k", x, y, qt)

    def qconj(x):
        return np.array([x[0], -x[1], -x[2], -x[3]])

    table = np.zeros((8, 8, 8))
    eye = np.eye(8)
    for i in range(8):
        for j in range(8):
            a, b = eye[i][:4], eye[i][4:]
            c, d = eye[j][:4], eye[j][4:]
            table[i, j, :4] = qmul(a, c) - qmul(qconj(d), b)
            table[i, j, 4:] = qmul(d, a) + qmul(b, qconj(c))
    table.setflags(write=False)
    return table


OCT_TABLE = _octonion_table()


def omul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("i,j,ijk->k", a, b, OCT_TABLE)


def oconj(a: np.ndarray) -> np.ndarray:
    out = -np.asarray(a, dtype=float)
    out[0] = a[0]
    return out


@dataclass(frozen=True)
class Octonion:
    """An octonion over the basis {1, e1, ..., e7}."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != (8,):
            raise InputError("octonion needs 8 coefficients")
        object.__setattr__(self, "coeffs", c)

    def __mul__(self, other: "Octonion") -> "Octonion":
        return Octonion(omul(self.coeffs, other.coeffs))

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coeffs + other.coeffs)

    def __neg__(self) -> "Octonion":
        return Octonion(-self.coeffs)

    def conjugate(self) -> "Octonion":
        return Octonion(oconj(self.coeffs))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    @staticmethod
    def unit(i: int) -> "Octonion":
        c = np.zeros(8)
        c[i] = 1.0
        return Octonion(c)


def octonion_mul(a: Octonion, b: Octonion) -> Octonion:
    return a * b


# -- the twisted Jordan algebra ----------------------------------------------
#
# Coordinates on W (dim 27): (alpha1, alpha2, alpha3, c1[0:8], c2[0:8], c3[0:8])
# with the matrix pattern
#   [[a1,   c3,  -c2~], [c3~,  a2,  c1], [c2,  -c1~,  a3]].

W_DIM = 27


def _coords_to_matrix(w: np.ndarray) -> np.ndarray:
    M = np.zeros((3, 3, 8))
    M[0, 0, 0], M[1, 1, 0], M[2, 2, 0] = w[0], w[1], w[2]
    c1, c2, c3 = w[3:11], w[11:19], w[19:27]
    M[1, 2], M[2, 1] = c1, -oconj(c1)
    M[2, 0], M[0, 2] = c2, -oconj(c2)
    M[0, 1], M[1, 0] = c3, oconj(c3)
    return M


def _matrix_to_coords(M: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    scale = max(1.0, np.abs(M).max())
    if (np.linalg.norm(M[1, 0] - oconj(M[0, 1])) > tol * scale
            or np.linalg.norm(M[2, 1] + oconj(M[1, 2])) > tol * scale
            or np.linalg.norm(M[0, 2] + oconj(M[2, 0])) > tol * scale
            or max(abs(M[0, 0, 1:]).max(), abs(M[1, 1, 1:]).max(), abs(M[2, 2, 1:]).max()) > tol * scale):
        raise ConstructionError("matrix does not have the twisted Hermitian pattern")
    w = np.zeros(W_DIM)
    w[0], w[1], w[2] = M[0, 0, 0], M[1, 1, 0], M[2, 2, 0]
    w[3:11], w[11:19], w[19:27] = M[1, 2], M[2, 0], M[0, 1]
    return w


def _oct_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    # (A B)_ik = sum_j A_ij * B_jk with octonion entry products
    return np.einsum("ijp,jkq,pqr->ikr", A, B, OCT_TABLE)


def jordan_coords(wx: np.ndarray, wy: np.ndarray) -> np.ndarray:
    """x o y = (xy + yx)/2 on 27-coordinates."""
    A, B = _coords_to_matrix(wx), _coords_to_matrix(wy)
    return _matrix_to_coords((_oct_matmul(A, B) + _oct_matmul(B, A)) / 2.0)


@lru_cache(maxsize=1)
def jordan_tensor() -> np.ndarray:
    """Bilinear table P[a, b, :] = e_a o e_b on the 27 coordinates."""
    P = np.zeros((W_DIM, W_DIM, W_DIM))
    eye = np.eye(W_DIM)
    for a in range(W_DIM):
        for b in range(a, W_DIM):
            p = jordan_coords(eye[a], eye[b])
            P[a, b] = p
            P[b, a] = p
    P.setflags(write=False)
    return P


@dataclass
class JordanElement:
    """Element of the twisted Jordan algebra: 3 reals and 3 octonions."""

    diag: np.ndarray
    off: np.ndarray          # rows c1, c2, c3

    def __post_init__(self):
        self.diag = np.asarray(self.diag, dtype=float).reshape(3)
        self.off = np.asarray(self.off, dtype=float).reshape(3, 8)

    @property
    def coords(self) -> np.ndarray:
        return np.concatenate([self.diag, self.off.ravel()])

    @staticmethod
    def from_coords(w: np.ndarray) -> "JordanElement":
        w = np.asarray(w, dtype=float).reshape(W_DIM)
        return JordanElement(w[:3], w[3:].reshape(3, 8))

    def trace(self) -> float:
        return float(self.diag.sum())

    @staticmethod
    def identity() -> "JordanElement":
        return JordanElement(np.ones(3), np.zeros((3, 8)))


def jordan_mul(x: JordanElement, y: JordanElement) -> JordanElement:
    P = jordan_tensor()
    return JordanElement.from_coords(np.einsum("a,b,abc->c", x.coords, y.coords, P))


def trace_form(wx: np.ndarray, wy: np.ndarray) -> float:
    """tr(x o y) on coordinates."""
    P = jordan_tensor()
    prod = np.einsum("a,b,abc->c", wx, wy, P)
    return float(prod[:3].sum())


# -- cone points --------------------------------------------------------------

@dataclass
class ConePoint:
    """A trace-free null element x (x o x = 0, x != 0), up to real scale."""

    x: JordanElement
    projective_class: bool = True

    @property
    def w(self) -> np.ndarray:
        return self.x.coords

    def complex_part_norm(self) -> float:
        """Norm of the components along C = span{1, e1} plus the diagonal."""
        w = self.w
        idx = [0, 1, 2, 3, 4, 11, 12, 19, 20]
        return float(np.linalg.norm(w[idx]))


def cone_point(c1: Octonion | np.ndarray, c2: Octonion | np.ndarray,
               tol: float = 1e-10) -> ConePoint:
    """The null element with diag (|c2|^2, |c1|^2, -1) and c3 = -c2~ c1~.

    Requires |c1|^2 + |c2|^2 = 1.  The off-diagonal entries then satisfy
    c1 c2 = -c3~ (equivalently c3 = -conj(c1 c2)).
    """
    c1 = c1.coeffs if isinstance(c1, Octonion) else np.asarray(c1, dtype=float)
    c2 = c2.coeffs if isinstance(c2, Octonion) else np.asarray(c2, dtype=float)
    n1, n2 = float(c1 @ c1), float(c2 @ c2)
    if abs(n1 + n2 - 1.0) > tol:
        raise InputError(f"|c1|^2 + |c2|^2 must be 1, got {n1 + n2}")
    c3 = -oconj(omul(c1, c2))
    w = np.concatenate([[n2, n1, -1.0], c1, c2, c3])
    elem = JordanElement.from_coords(w)
    sq = jordan_coords(w, w)
    if np.linalg.norm(sq) > 1e-9 * max(1.0, float(w @ w)):
        raise ConstructionError("cone point does not square to zero")
    return ConePoint(x=elem)


def sample_cone_points(count: int, seed: int = 0) -> list[ConePoint]:
    """Seeded cone points from the unit sphere chart (c1, c2)."""
    rng = np.random.default_rng(np.random.SeedSequence(entropy=int(seed) & (2**64 - 1),
                                                       spawn_key=(7,)))
    out = []
    for _ in range(count):
        v = rng.standard_normal(16)
        v /= np.linalg.norm(v)
        out.append(cone_point(v[:8], v[8:]))
    return out


# -- g2 = derivations of the octonions ----------------------------------------

@lru_cache(maxsize=1)
def build_g2() -> LieAlgebra:
    """Der(O): 14-dimensional, compact, acting on the 8 octonion coordinates."""
    rows = []
    for a in range(8):
        for b in range(a, 8):
            blk = np.zeros((8, 8, 8))
            for e in range(8):
                blk[e, e, :] += OCT_TABLE[a, b, :]
                blk[e, :, a] -= OCT_TABLE[:, b, e]
                blk[e, :, b] -= OCT_TABLE[a, :, e]
            rows.append(blk.reshape(8, 64))
    A = np.vstack(rows)
    u, s, vh = np.linalg.svd(A)
    rank = int((s > SOLVER_TOL * s[0]).sum())
    basis = vh[rank:]
    if basis.shape[0] != 14:
        raise ConstructionError(f"octonion derivation solve yielded dim {basis.shape[0]}, expected 14")
    mats = basis.reshape(-1, 8, 8)
    L = LieAlgebra(labels=tuple(f"G{i}" for i in range(14)), matrices=mats,
                   theta=np.eye(14), name="g2")
    sig = signature_of(L.killing)
    if sig != (0, 14):
        raise ConstructionError(f"g2 Killing signature {sig}, expected (0, 14)")
    return L


# -- f4 = derivations of W -----------------------------------------------------

def _v_embedding() -> np.ndarray:
    """Orthonormal rows spanning the trace-free part V inside W."""
    Q = np.zeros((26, W_DIM))
    Q[0, 0], Q[0, 1] = 1 / np.sqrt(2), -1 / np.sqrt(2)
    Q[1, 0] = Q[1, 1] = 1 / np.sqrt(6)
    Q[1, 2] = -2 / np.sqrt(6)
    Q[2:, 3:] = np.eye(24)
    return Q


def _sign_involution(d: tuple[float, float, float]) -> np.ndarray:
    """Coordinate action on W of conjugation by diag(d) (d entries +-1)."""
    sv = np.ones(W_DIM)
    sv[3:11] = d[1] * d[2]
    sv[11:19] = d[2] * d[0]
    sv[19:27] = d[0] * d[1]
    return sv


_CAYLEY_VEC = np.ones(W_DIM)
for _blk in range(3):
    _CAYLEY_VEC[3 + 8 * _blk + 4: 3 + 8 * _blk + 8] = -1.0

_THETA_VEC = _sign_involution((1.0, 1.0, -1.0))
_H1_VEC = _sign_involution((1.0, -1.0, 1.0))


@dataclass(frozen=True, eq=False)
class F4Bundle:
    """The f4 algebra plus the Jordan-level data its embeddings need.

    ``derivations`` holds one 27x27 matrix per basis element (the action
    on W); the LieAlgebra's own realization is the restriction to V.
    Subalgebra bases are row-stacked coefficient vectors against the f4
    basis.
    """

    algebra: LieAlgebra
    derivations: np.ndarray                  # (52, 27, 27)
    v_embed: np.ndarray                      # (26, 27)
    subalgebras: dict[str, np.ndarray]
    involutions: dict[str, np.ndarray]       # coefficient matrices on f4
    symmetric_status: dict[str, bool]
    provenance: dict

    def coefficients_of_derivation(self, D: np.ndarray, tol: float = 1e-7) -> np.ndarray:
        flat = self.derivations.reshape(52, -1)
        co = D.ravel() @ flat.T
        resid = np.linalg.norm(co @ flat - D.ravel())
        if resid > tol * max(1.0, np.linalg.norm(D)):
            raise EmbeddingError(f"matrix is not a derivation of W (residual {resid:.2e})")
        return co

    def derivation_of(self, coeffs: np.ndarray) -> np.ndarray:
        return np.einsum("i,ijk->jk", np.asarray(coeffs, dtype=float), self.derivations)


def _solve_der_w() -> np.ndarray:
    """Orthonormal basis of Der(W) as (52, 27, 27)."""
    P = jordan_tensor()
    n = W_DIM
    rows = []
    for a in range(n):
        for b in range(a, n):
            blk = np.zeros((n, n, n))
            for e in range(n):
                blk[e, e, :] += P[a, b]
                blk[e, :, a] -= P[:, b, e]
                blk[e, :, b] -= P[a, :, e]
            rows.append(blk.reshape(n, n * n))
    A = np.vstack(rows)
    u, s, vh = scipy.linalg.svd(A, full_matrices=False, lapack_driver="gesdd")
    rank = int((s > SOLVER_TOL * s[0]).sum())
    basis = vh[rank:]
    if basis.shape[0] != 52:
        raise ConstructionError(f"Jordan derivation solve yielded dim {basis.shape[0]}, expected 52")
    return basis.reshape(-1, n, n)


def _structure_from_derivations(derivs: np.ndarray) -> np.ndarray:
    flat = derivs.reshape(52, -1)
    c = np.zeros((52, 52, 52))
    for i in range(52):
        com = derivs[i] @ derivs - derivs @ derivs[i]
        co = com.reshape(52, -1) @ flat.T
        resid = np.linalg.norm(co @ flat - com.reshape(52, -1))
        if resid > 1e-7 * max(1.0, np.linalg.norm(com)):
            raise ConstructionError("derivations do not close under commutators")
        c[i] = co
    c = (c - np.einsum("ijk->jik", c)) / 2.0
    return c


def _conjugation_matrix(derivs: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """Coefficient matrix of D -> s D s for a diagonal coordinate involution s."""
    flat = derivs.reshape(52, -1)
    conj = (derivs * vec[None, None, :]) * vec[None, :, None]
    return (conj.reshape(52, -1) @ flat.T).T


def _complex_conjugation_derivation(Zr: np.ndarray, Zi: np.ndarray) -> np.ndarray:
    """x -> Zx - xZ on W coordinates, Z = Zr + Zi e1 a complex 3x3 matrix."""
    M = np.zeros((W_DIM, W_DIM))
    eye = np.eye(W_DIM)
    for idx in range(W_DIM):
        X = _coords_to_matrix(eye[idx])
        Z = np.zeros((3, 3, 8))
        Z[:, :, 0] = Zr
        Z[:, :, 1] = Zi
        M[:, idx] = _matrix_to_coords(_oct_matmul(Z, X) - _oct_matmul(X, Z))
    return M


def _su21_basis() -> list[tuple[np.ndarray, np.ndarray]]:
    """Real/imaginary parts of a basis of su(2,1) (form diag(1,1,-1))."""
    J = np.diag([1.0, 1.0, -1.0])
    out = []
    for k in range(3):
        for l in range(k + 1, 3):
            W = np.zeros((3, 3))
            W[k, l], W[l, k] = 1.0, -1.0
            out.append((J @ W, np.zeros((3, 3))))
            W = np.zeros((3, 3))
            W[k, l] = W[l, k] = 1.0
            out.append((np.zeros((3, 3)), J @ W))
    for m in range(2):
        D = np.zeros((3, 3))
        D[m, m], D[m + 1, m + 1] = 1.0, -1.0
        out.append((np.zeros((3, 3)), D))
    return out


def _so21_basis() -> list[np.ndarray]:
    J = np.diag([1.0, 1.0, -1.0])
    out = []
    for k, l in [(0, 1), (0, 2), (1, 2)]:
        W = np.zeros((3, 3))
        W[k, l], W[l, k] = 1.0, -1.0
        out.append(J @ W)
    return out


def _lift_octonion_derivation(D8: np.ndarray) -> np.ndarray:
    """Entrywise action of an octonion derivation on W (kills the diagonal)."""
    M = np.zeros((W_DIM, W_DIM))
    for blk in range(3):
        sl = slice(3 + 8 * blk, 11 + 8 * blk)
        M[sl, sl] = D8
    return M


def _left_mult_e1() -> np.ndarray:
    L = np.zeros((8, 8))
    for j in range(8):
        L[:, j] = OCT_TABLE[1, j, :]
    return L


def _table_hash() -> str:
    h = hashlib.sha256()
    h.update(OCT_TABLE.tobytes())
    h.update(jordan_tensor().tobytes())
    h.update(np.float64(SOLVER_TOL).tobytes())
    return h.hexdigest()


def cache_path() -> Path:
    env = os.environ.get("REALFLAG_CACHE_DIR")
    if env:
        return Path(env) / "f4.json"
    return Path(os.environ.get("XDG_CACHE_HOME", str(Path.home() / ".cache"))) / "realflag" / "f4.json"


def _build_bundle() -> F4Bundle:
    t0 = time.time()
    derivs = _solve_der_w()
    c = _structure_from_derivations(derivs)
    theta = _conjugation_matrix(derivs, _THETA_VEC)
    Q = _v_embedding()
    mats = np.einsum("va,iab,wb->ivw", Q, derivs, Q)
    L = LieAlgebra(labels=tuple(f"D{i}" for i in range(52)), matrices=mats,
                   theta=theta, name="f4", structure=c)

    sig = signature_of(L.killing)
    if sig != (16, 36):
        raise ConstructionError(f"f4 Killing signature {sig}, expected (16, 36)")

    subalgebras: dict[str, np.ndarray] = {}
    flat = derivs.reshape(52, -1)

    def coeffs_of(mats27: list[np.ndarray], what: str) -> np.ndarray:
        rows = []
        for D in mats27:
            co = D.ravel() @ flat.T
            resid = np.linalg.norm(co @ flat - D.ravel())
            if resid > 1e-7 * max(1.0, np.linalg.norm(D)):
                raise EmbeddingError(f"{what}: candidate map is not a derivation "
                                     f"(residual {resid:.2e})")
            rows.append(co)
        return orth_rows(np.array(rows))

    # g2 entrywise and its complex-commutant su(3)
    g2 = build_g2()
    g2_lift = coeffs_of([_lift_octonion_derivation(D) for D in g2.matrices], "g2 lift")
    L1 = _left_mult_e1()
    commute = np.array([(D @ L1 - L1 @ D).ravel() for D in g2.matrices])
    uu, ss, _ = np.linalg.svd(commute)
    r = int((ss > 1e-9 * ss[0]).sum())
    su3_coeff = uu[:, r:].T
    su3_lift = coeffs_of([_lift_octonion_derivation(np.einsum("i,ijk->jk", v, g2.matrices))
                          for v in su3_coeff], "su3 lift")
    if su3_lift.shape[0] != 8:
        raise EmbeddingError(f"su(3) commutant has dim {su3_lift.shape[0]}, expected 8")

    su21 = coeffs_of([_complex_conjugation_derivation(Zr, Zi) for Zr, Zi in _su21_basis()],
                     "su(2,1) conjugation")
    so12 = coeffs_of([_complex_conjugation_derivation(R, np.zeros((3, 3))) for R in _so21_basis()],
                     "so(1,2) conjugation")

    subalgebras["g2"] = g2_lift
    subalgebras["su3"] = su3_lift
    subalgebras["su21"] = su21
    subalgebras["so12"] = so12
    subalgebras["su21+su3"] = np.vstack([su21, su3_lift])
    subalgebras["so12+g2"] = np.vstack([so12, g2_lift])

    involutions = {
        "so(1,8)": _conjugation_matrix(derivs, _H1_VEC),
        "sp(1,2)+sp(1)": _conjugation_matrix(derivs, _CAYLEY_VEC),
    }
    symmetric_status: dict[str, bool] = {}
    for name, expected_dim, expected_sig in [("so(1,8)", 36, (8, 28)),
                                             ("sp(1,2)+sp(1)", 24, (8, 16))]:
        sigma = involutions[name]
        ev, V = np.linalg.eigh((sigma + sigma.T) / 2.0)
        fixed = V[:, ev > 0.5].T
        ok = fixed.shape[0] == expected_dim
        if ok:
            sub = subalgebra(L, fixed, name=name, validate=False)
            try:
                sub.validate(1e-7)
            except InputError:
                ok = False
        if ok:
            restricted = fixed @ L.killing @ fixed.T
            ok = signature_of(restricted) == expected_sig
        if ok:
            # must commute with theta so the fixed algebra is theta-stable
            ok = bool(np.linalg.norm(sigma @ theta - theta @ sigma) < 1e-8 * 52)
        symmetric_status[name] = ok
        if ok:
            subalgebras[name] = fixed

    provenance = {
        "table_hash": _table_hash(),
        "solver_tol": SOLVER_TOL,
        "build_seconds": round(time.time() - t0, 3),
    }
    return F4Bundle(algebra=L, derivations=derivs, v_embed=Q, subalgebras=subalgebras,
                    involutions=involutions, symmetric_status=symmetric_status,
                    provenance=provenance)


def _save_bundle(bundle: F4Bundle, path: Path) -> None:
    L = bundle.algebra
    c = L.bracket_tensor
    nz = np.argwhere(c != 0.0)
    entries = [[int(i), int(j), int(k), float(c[i, j, k])] for i, j, k in nz if i < j]
    doc = {
        "schema": 1,
        "dim": L.dim,
        "labels": list(L.labels),
        "bracket": entries,
        "theta": L.theta.tolist(),
        "matrices": L.matrices.tolist(),
        "name": "f4",
        "provenance": bundle.provenance,
        "derivations": bundle.derivations.reshape(52, -1).tolist(),
        "subalgebras": {k: v.tolist() for k, v in bundle.subalgebras.items()},
        "involutions": {k: v.tolist() for k, v in bundle.involutions.items()},
        "symmetric_status": bundle.symmetric_status,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc))
    tmp.replace(path)


def _load_bundle(path: Path) -> Optional[F4Bundle]:
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if doc.get("provenance", {}).get("table_hash") != _table_hash():
        return None
    dim = doc["dim"]
    c = np.zeros((dim, dim, dim))
    for i, j, k, val in doc["bracket"]:
        c[i, j, k] = val
        c[j, i, k] = -val
    L = LieAlgebra(labels=tuple(doc["labels"]),
                   matrices=np.array(doc["matrices"]),
                   theta=np.array(doc["theta"]),
                   name="f4", structure=c)
    return F4Bundle(algebra=L,
                    derivations=np.array(doc["derivations"]).reshape(52, W_DIM, W_DIM),
                    v_embed=_v_embedding(),
                    subalgebras={k: np.array(v) for k, v in doc["subalgebras"].items()},
                    involutions={k: np.array(v) for k, v in doc["involutions"].items()},
                    symmetric_status=dict(doc["symmetric_status"]),
                    provenance=doc["provenance"])


_BUNDLE: Optional[F4Bundle] = None


def f4_bundle(use_cache: bool = True, rebuild: bool = False) -> F4Bundle:
    """The cached f4 construction (built once per process, persisted to disk)."""
    global _BUNDLE
    if _BUNDLE is not None and not rebuild:
        return _BUNDLE
    path = cache_path()
    if use_cache and not rebuild:
        loaded = _load_bundle(path)
        if loaded is not None:
            _BUNDLE = loaded
            return loaded
    bundle = _build_bundle()
    if use_cache:
        _save_bundle(bundle, path)
    _BUNDLE = bundle
    return bundle


def build_f4(use_cache: bool = True) -> LieAlgebra:
    """The 52-dimensional noncompact f4, realized on the 26-dimensional V."""
    return f4_bundle(use_cache=use_cache).algebra


# -- embeddings ----------------------------------------------------------------

def embed_su21_su3(bundle: F4Bundle) -> Subalgebra:
    """The 16-dimensional su(2,1) + su(3): complex matrix conjugations plus the
    octonion derivations commuting with left multiplication by e1."""
    basis = bundle.subalgebras["su21+su3"]
    sub = subalgebra(bundle.algebra, basis, name="su(2,1)+su(3)", validate=False)
    sub.validate(1e-7)
    if sub.dim != 16:
        raise EmbeddingError(f"su(2,1)+su(3) has dim {sub.dim}, expected 16")
    return sub


def embed_so12_g2(bundle: F4Bundle) -> Subalgebra:
    """The 17-dimensional so(1,2) + g2: real matrix conjugations plus entrywise
    octonion derivations."""
    basis = bundle.subalgebras["so12+g2"]
    sub = subalgebra(bundle.algebra, basis, name="so(1,2)+g2", validate=False)
    sub.validate(1e-7)
    if sub.dim != 17:
        raise EmbeddingError(f"so(1,2)+g2 has dim {sub.dim}, expected 17")
    return sub


def symmetric_subalgebra(bundle: F4Bundle, name: str) -> Subalgebra:
    """One of the validated symmetric subalgebras 'so(1,8)' or 'sp(1,2)+sp(1)'."""
    if not bundle.symmetric_status.get(name, False):
        raise EmbeddingError(f"symmetric subalgebra {name!r} did not validate")
    return subalgebra(bundle.algebra, bundle.subalgebras[name], name=name, validate=False)


# -- projective cone geometry ---------------------------------------------------

def derivation_images(bundle: F4Bundle, h_basis: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Rows D_a(x) for a basis of a subalgebra (coefficients against f4) at x = w."""
    acts = np.einsum("ai,ijk->ajk", np.atleast_2d(h_basis), bundle.derivations)
    return acts @ w


def projective_orbit_dim(bundle: F4Bundle, h_basis: np.ndarray, point: ConePoint,
                         tol: float = 1e-9) -> int:
    """Orbit dimension of the subalgebra through [x] in P(V)."""
    w = point.w
    images = derivation_images(bundle, h_basis, w)
    stacked = np.vstack([images, w.reshape(1, -1)])
    return numeric_rank(stacked, tol) - 1


def projective_stabilizer_dim(bundle: F4Bundle, h_basis: np.ndarray, point: ConePoint,
                              tol: float = 1e-9) -> int:
    """Dimension of {D in h : D x in R x} at [x]."""
    h_basis = np.atleast_2d(h_basis)
    return h_basis.shape[0] - projective_orbit_dim(bundle, h_basis, point, tol)
