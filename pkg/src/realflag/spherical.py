"""Generic-rank sphericality testing: does h + Ad(x) p fill g for some x?

Group elements are sampled deterministically as two-factor products
exp(X1) exp(X2) with each X drawn from a seeded operator-norm ball in the
matrix realization.  Attaining dim g at any single sample is a certificate
(openness is lower semicontinuous); a negative verdict is either a
sample-free dimension obstruction or a confidence statement after the
requested number of samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import InputError, LieAlgebra, Subalgebra
from .linalg import DEFAULT_TOL, numeric_rank, stack_span
from .realforms import ParabolicData

VERDICT_SPHERICAL = "spherical"
VERDICT_NOT_SPHERICAL = "not-spherical-at-confidence"
VERDICT_OBSTRUCTED = "dimension-obstructed"


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Per-sample generator; independent of evaluation order."""
    return np.random.default_rng(np.random.SeedSequence(entropy=int(seed) & (2**64 - 1),
                                                        spawn_key=(int(index),)))


def random_ball_matrix(L: LieAlgebra, rng: np.random.Generator, radius: float = 1.0) -> np.ndarray:
    """Algebra element with operator norm <= radius, Gaussian direction."""
    v = rng.standard_normal(L.dim)
    M = L.to_matrix(v)
    norm = np.linalg.norm(M, 2)
    if norm == 0.0:
        return M
    return M * (radius * rng.uniform() / norm)


def sample_group_element(L: LieAlgebra, rng: np.random.Generator,
                         radius: float = 1.0, factors: int = 2) -> np.ndarray:
    from scipy.linalg import expm
    x = L.identity_element()
    for _ in range(factors):
        x = x @ expm(random_ball_matrix(L, rng, radius))
    return x


def local_dim(g: LieAlgebra, h: Subalgebra, P: ParabolicData, x: np.ndarray,
              tol: float = DEFAULT_TOL) -> int:
    """dim(h + Ad(x) p) at a group element x."""
    ad = g.ad_group(x)
    return numeric_rank(stack_span(h.basis, P.p.basis @ ad.T), tol)


@dataclass
class SphericityReport:
    """Outcome of a sampled sphericality test, with full provenance."""

    pair_name: str
    dim_g: int
    dim_h: int
    dim_p: int
    dim_gp: int
    samples: int
    seed: int
    tol: float
    per_sample_dims: list[int]
    max_dim: int
    verdict: str
    witness: Optional[np.ndarray] = None

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "sphericity",
            "pair": self.pair_name,
            "dim_g": self.dim_g,
            "dim_h": self.dim_h,
            "dim_p": self.dim_p,
            "dim_gp": self.dim_gp,
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
            "per_sample_dims": list(map(int, self.per_sample_dims)),
            "max_dim": self.max_dim,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.tolist(),
        }


def is_spherical(g: LieAlgebra, h: Subalgebra, P: ParabolicData,
                 samples: int = 64, seed: int = 0, tol: float = DEFAULT_TOL,
                 pair_name: str = "", radius: float = 1.0) -> SphericityReport:
    """Sampled test of g = h + Ad(x) p.

    Evaluation short-circuits once a sample certifies sphericality; the
    evaluated prefix is recorded.  When dim h + dim p < dim g the verdict
    is a sample-free dimension obstruction.
    """
    if samples < 1:
        raise InputError("samples must be >= 1")
    dim_g, dim_h, dim_p = g.dim, h.dim, P.p.dim
    base = dict(pair_name=pair_name or f"({g.name},{h.name})", dim_g=dim_g, dim_h=dim_h,
                dim_p=dim_p, dim_gp=dim_g - dim_p, samples=samples, seed=seed, tol=tol)
    if dim_h + dim_p < dim_g:
        return SphericityReport(per_sample_dims=[], max_dim=dim_h + dim_p,
                                verdict=VERDICT_OBSTRUCTED, witness=None, **base)
    dims: list[int] = []
    best = -1
    witness = None
    for i in range(samples):
        x = sample_group_element(g, sample_rng(seed, i), radius)
        d = local_dim(g, h, P, x, tol)
        dims.append(d)
        if d > best:
            best, witness = d, x
        if d == dim_g:
            return SphericityReport(per_sample_dims=dims, max_dim=best,
                                    verdict=VERDICT_SPHERICAL, witness=witness, **base)
    return SphericityReport(per_sample_dims=dims, max_dim=best,
                            verdict=VERDICT_NOT_SPHERICAL, witness=None, **base)
