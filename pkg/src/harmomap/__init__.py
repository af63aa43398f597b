"""harmomap: certify, construct, and probe planar harmonic mappings.

A harmonic mapping of the unit disk is written f = h + conj(g) with h, g
analytic.  The package provides truncated-series arithmetic for such maps,
coefficient-sum certificates for close-to-convexity and full starlikeness
(including closed forms for hypergeometric co-analytic parts), grid scans
for the geometric functionals, convolution-kernel tests, constructors for
the named example families, and a CLI that renders image curves.
"""

from harmomap._backend import BACKEND
from harmomap.convolution import (
    direct_starlike_ratio,
    mocanu_kernel_value,
    starlike_kernel_value,
)
from harmomap.criteria import (
    Certificate,
    FamilySpec,
    ThresholdRoots,
    coefficient_margin,
    family_k_closed,
    family_k_series,
    format_certificate,
    threshold_c,
    threshold_parent_certificate,
)
from harmomap.families import (
    PolynomialSpec,
    SuffridgeParams,
    harmonic_koebe,
    hypergeometric_family,
    identity_map,
    limit_mapping,
    mocanu_class_m_bound,
    mocanu_example,
    nonunivalent_example,
    qhat,
    suffridge_ch1_margin,
    suffridge_family,
    winding_zero_count,
)
from harmomap.geometry import (
    CrossingWitness,
    GridReport,
    MoebiusImage,
    ScanGrid,
    curve_self_intersection,
    default_grid,
    moebius_disk_image,
    scan_ch1,
    scan_convexity_functional,
    scan_convexity_upper,
    scan_fully_starlike,
    scan_jacobian,
    starlike_disk_bound_check,
)
from harmomap.series import (
    AnalyticSeries,
    HarmonicMapSeries,
    derivative_kernel,
    geometric_kernel,
    hadamard,
    load_coeffs,
    log_kernel,
    map_from_dict,
    map_to_dict,
    save_coeffs,
    weighted_antiderivative,
)
from harmomap.specialfn import (
    CoeffSumResult,
    HypergeometricParams,
    derivative_identity_check,
    gamma,
    gauss_coeff,
    gauss_coeff_array,
    gauss_sum,
    hyp_series,
    pochhammer,
)

__version__ = "0.1.0"
