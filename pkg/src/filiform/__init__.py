"""Exact invariants and isomorphism testing for first-class filiform Leibniz algebras."""

from .action import (
    IDENTITY,
    GroupElement,
    apply_rho,
    compose_group,
    eval_phi,
    eval_phi_theta,
    invert_group,
    lowdim_closed_form,
    rho_components,
)
from .algebra import (
    FirstClassParams,
    SecondClassParams,
    StructureTensor,
    build_tensor_first,
    build_tensor_second,
    is_filiform,
    leibniz_defect,
    lower_central_dims,
    params_from_tensor,
    params_to_record,
    record_to_params,
)
from .errors import FiliformError, InvalidGroupElement, OracleError, ParseError, ShapeError, Unsupported
from .oracle import adapted_change_tensor, orbit_samples, random_group_element, theorem2_direct
from .scalarfield import SamplerConfig, Scalar, format_scalar, make_rng, parse_scalar, random_scalar
from .strata import (
    Decision,
    InvariantVector,
    Stratum,
    Verdict,
    canonical_element,
    canonicalize,
    classify_stratum,
    decide_isomorphic,
    invariant_vector,
    lowdim_invariant_lists,
    realize_from_invariants,
)

__version__ = "0.1.0"
