"""Exact alpha-determinants, wreath determinants, (n,k)-signs and zonal
spherical functions of Young subgroups, with every identity verifiable by
independent evaluation paths in rational arithmetic."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .alphadet import adet, adet_laplace, adet_sum, kdet, singular_order
from .errors import CapExceededError, ShapeError, WreathdetError
from .linalg import Matrix, det, leading_principal_minors, symbolic_matrix
from .perm import (
    Permutation,
    cycle_count,
    enumerate_group,
    phi_embed,
    psi_embed,
    shifted_cycle_sum,
    young_subgroup_elements,
)
from .rings import ALPHA, Poly, variable
from .spherical import (
    XiMatrix,
    phi,
    xi_det,
    xi_matrix,
    xi_positive_definite,
    xi_scan,
)
from .symfun import (
    cauchy_check,
    d_nk,
    delta_shift,
    monomial_via_kdet,
    pde_via_kdet,
    schur_via_kdet,
    wreath_vandermonde,
)
from .tableaux import (
    Partition,
    StandardTableau,
    content_polynomial,
    g_of_T,
    hook_f,
    kostka,
    mn_character,
    partitions,
    standard_tableaux,
)
from .wreath import (
    ColoringFunction,
    WreathGroupElement,
    column_k_plex,
    colorings,
    nk_sign,
    orbit_data,
    pf_coefficient,
    row_k_plex,
    tdet,
    wrdet_direct,
    wrdet_monomial,
    wrdet_symmetric,
    wrdet_tableaux,
)

__version__ = "0.1.0"
