"""Numerical toolkit for real semisimple Lie algebras: sphericality testing
by generic rank sampling, flag-manifold orbit decomposition for rank-one
subalgebras, and the octonionic construction of the noncompact f4."""

from .core import (BilinearForm, LieAlgebra, Subalgebra, adjoint, bracket,
                   cartan_decomposition, killing_form, load_algebra, noncompact_ideal,
                   save_algebra, subalgebra, subalgebra_closure)
from .linalg import numeric_rank
from .realforms import (build_classical, build_sl, diagonal_embed, direct_sum,
                        embed_division, get_algebra, minimal_parabolic, restricted_roots)
from .spherical import SphericityReport, is_spherical, local_dim
from .orbits import (bruhat_cell_of, nonreductive_orbit_count, normalize_nonreductive,
                     orbit_dim_at, symmetric_coincidence)
from .reduction import induced_pair, levi_projection, parabolic_alpha
from .jordan import (Octonion, JordanElement, build_f4, build_g2, cone_point,
                     jordan_mul, octonion_mul)

__all__ = [
    "BilinearForm", "LieAlgebra", "Subalgebra", "SphericityReport",
    "Octonion", "JordanElement",
    "adjoint", "bracket", "bruhat_cell_of", "build_classical", "build_f4",
    "build_g2", "build_sl", "cartan_decomposition", "cone_point", "diagonal_embed",
    "direct_sum", "embed_division", "get_algebra", "induced_pair", "is_spherical",
    "jordan_mul", "killing_form", "levi_projection", "load_algebra", "local_dim",
    "minimal_parabolic", "noncompact_ideal", "nonreductive_orbit_count",
    "normalize_nonreductive", "numeric_rank", "octonion_mul", "orbit_dim_at",
    "parabolic_alpha", "restricted_roots", "save_algebra", "subalgebra",
    "subalgebra_closure", "symmetric_coincidence",
]

__version__ = "0.1.0"
