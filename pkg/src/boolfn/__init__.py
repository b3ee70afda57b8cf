"""Weights, spectra and APN analytics for Boolean and vectorial Boolean functions over F_2^n."""

from .core import (
    MAX_N,
    AffineMap,
    Anf,
    TruthTable,
    VectorialBf,
    anf_to_tt,
    apply_affine,
    conv_product,
    derivative,
    direct_sum,
    fourier,
    is_balanced,
    second_derivative,
    tt_to_anf,
    weight,
)
from .errors import (
    AffineFunctionError,
    BoolFnError,
    DegreeError,
    InfeasibleConfigError,
    NotQuadraticError,
    ParityError,
    ParseError,
    SingularMatrixError,
    SizeCapError,
)
from .quadratic import (
    Kind,
    LinearSpaceBasis,
    QuadraticClass,
    bilinear_rank,
    classify_quadratic,
    linear_space,
    quadratic_nl,
    quadratic_weight,
    quadratics_affine_equivalent,
)
from .spectra import WalshSpectrum, is_bent, is_semi_bent, linearity, nonlinearity, wht
from .splitcubic import (
    CubicCase,
    CubicWeightCase,
    algorithm1_weight,
    cubic_conv_balanced,
    cubic_conv_weight,
    cubic_nl_bound,
    genconv_balanced,
    genconv_nl_bound,
    genconv_walsh,
    genconv_weight,
    monomial_sum_nl,
    monomial_sum_weight,
    multi_split_fourier,
    split_fourier,
    split_weight,
)
from .textio import format_anf, parse_anf, parse_function, parse_vbf, tt_from_hex, tt_to_hex
from .vbf import (
    DduTable,
    MProfile,
    bent_component_count,
    component,
    components,
    ddt,
    first_order_moment,
    is_ab,
    is_apn_ddt,
    is_apn_via_m,
    is_partially_bent,
    is_permutation,
    m_a,
    m_profile,
    m_total,
    m_value,
    power_moment_L4,
    second_order_moment,
    z_a_structure,
)

__version__ = "0.1.0"
