"""Exact hypergeometric character sums over finite fields."""
from .catalog import IdentityDef, list_identities, lookup
from .characters import (
    AddChar,
    MultChar,
    gauss_sum,
    gauss_variant,
    poch,
    poch_variant,
    quadratic,
    trivial,
)
from .cyclo import CycloValue, cyc_arith, cyc_embed, cyc_root, cyc_to_complex, cyclotomic_poly
from .errors import *  # noqa: F401,F403
from .field import FieldCtx, FieldSpec, construct_field, field_arith
from .hypergeom import (
    FactorSpec,
    KdFParams,
    Kernel,
    WeightFn,
    hyp_F,
    kdf_eval,
    kdf_factors,
    nFm,
    weighted_double_sum,
    weighted_single_sum,
)
from .params import ParamMultiset, ms_degree, ms_pairing, ms_poch, ms_poch_variant, ms_twist
from .verify import Cap, VerificationReport, admissible_cases, eval_identity_case, run_suite, verify_identity

__version__ = "0.1.0"
