"""Rank-one reduction machinery: the parabolic attached to a simple root,
the Levi projection along its nilradical, and the induced pair.

For a simple root alpha, p_alpha = p + g^{-alpha} + g^{-2alpha} splits as
l_alpha ⊕ u_alpha with l_alpha = m + a + sum_j g^{j alpha} of real rank
one and u_alpha the remaining positive root spaces.  The projection onto
l_alpha along u_alpha is a Lie algebra homomorphism, and the image of
h ∩ p_alpha under it is spherical in l_alpha whenever h + p = g.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import InputError, LieAlgebra, Subalgebra, subalgebra
from .linalg import (DEFAULT_TOL, intersect_spans, numeric_rank, orth_rows,
                     span_residual, stack_span)
from .realforms import ParabolicData


@dataclass(frozen=True, eq=False)
class AlphaParabolicData:
    """p_alpha with its Levi decomposition and projection matrix."""

    algebra: LieAlgebra
    P: ParabolicData
    alpha: np.ndarray                  # simple root (coefficients against the a-basis)
    p_alpha: Subalgebra
    l_alpha: Subalgebra
    u_alpha: np.ndarray                # basis rows of the nilradical
    projector: np.ndarray              # dim x dim, kernel u_alpha, image l_alpha
    l_cap_p: np.ndarray                # basis rows of l_alpha ∩ p


def parabolic_alpha(g: LieAlgebra, P: ParabolicData, alpha: np.ndarray,
                    tol: float = DEFAULT_TOL) -> AlphaParabolicData:
    """Build p_alpha = p + g^{-alpha} + g^{-2alpha} for a simple root alpha."""
    alpha = np.atleast_1d(np.asarray(alpha, dtype=float))
    roots = P.roots
    if not any(np.linalg.norm(alpha - s) < 1e-6 for s in roots.simple_roots):
        raise InputError("alpha is not a simple root of the parabolic")

    levi_spaces = [roots.m, roots.a]
    nil_spaces = []
    for vec, space, pos in zip(roots.root_vectors, roots.root_spaces, roots.positive):
        on_alpha_line = any(np.linalg.norm(vec - c * alpha) < 1e-6 for c in (1, 2, -1, -2))
        if on_alpha_line:
            levi_spaces.append(space)
        elif pos:
            nil_spaces.append(space)
    l_basis = orth_rows(stack_span(*levi_spaces), tol)
    u_basis = orth_rows(stack_span(*nil_spaces), tol) if nil_spaces else np.zeros((0, g.dim))
    p_alpha_basis = orth_rows(stack_span(l_basis, u_basis), tol)
    if l_basis.shape[0] + u_basis.shape[0] != p_alpha_basis.shape[0]:
        raise InputError("Levi and nilradical overlap; root data inconsistent")

    # projection onto l_alpha along u_alpha, as a matrix on the coefficient space
    if u_basis.shape[0]:
        stacked = np.vstack([l_basis, u_basis])
        coords = np.linalg.pinv(stacked.T)          # coordinates in the combined basis
        projector = l_basis.T @ coords[: l_basis.shape[0], :]
    else:
        projector = l_basis.T @ l_basis
    l_cap_p = intersect_spans(l_basis, P.p.basis, tol)

    return AlphaParabolicData(
        algebra=g, P=P, alpha=alpha,
        p_alpha=subalgebra(g, p_alpha_basis, name="p_alpha", validate=False),
        l_alpha=subalgebra(g, l_basis, name="l_alpha", validate=False),
        u_alpha=u_basis, projector=projector, l_cap_p=l_cap_p)


def levi_projection(ap: AlphaParabolicData, v: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Project v in p_alpha onto l_alpha along u_alpha."""
    v = np.asarray(v, dtype=float)
    if span_residual(v.reshape(1, -1), ap.p_alpha.basis) > tol:
        raise InputError("vector is not in p_alpha")
    return ap.projector @ v


def induced_pair(g: LieAlgebra, h: Subalgebra, ap: AlphaParabolicData,
                 tol: float = DEFAULT_TOL) -> tuple[Subalgebra, Subalgebra, bool]:
    """(l_alpha, h_alpha, openness): h_alpha is the Levi projection of h ∩ p_alpha.

    The flag is true iff h_alpha + (l_alpha ∩ p) fills l_alpha; it must
    hold whenever h + p = g.
    """
    hp = intersect_spans(h.basis, ap.p_alpha.basis, tol)
    if hp.shape[0]:
        image = orth_rows(hp @ ap.projector.T, tol)
    else:
        image = np.zeros((0, g.dim))
    h_alpha = subalgebra(g, image, name=f"{h.name or 'h'}_alpha", validate=False)
    flag = numeric_rank(stack_span(image, ap.l_cap_p), tol) == ap.l_alpha.dim
    return ap.l_alpha, h_alpha, flag
