"""Exact computations with partial Hopf actions on finite k-linear categories."""

from .category import (
    LinSemicat,
    Semifunctor,
    cycle_category,
    matrix_algebra,
    one_object_category,
    verify_semicat,
)
from .errors import (
    FieldMismatchError,
    PartialHopfError,
    StructuralError,
    UnsupportedFieldError,
    VerificationError,
)
from .field import GF, QQ, field_from_spec
from .globalization import (
    globalization_iso,
    standard_globalization,
    verify_globalization,
    verify_minimality,
)
from .grading import (
    build_from_subgroup_data,
    build_uniform_dual_action,
    classify_dual_on_point,
    classify_group_algebra_on_point,
    classify_sweedler_on_point,
    extract_subgroup_data,
)
from .group import FiniteGroup, builtin_group, enumerate_subgroups
from .hopf import (
    HopfAlgebra,
    build_dual_group_hopf,
    build_group_algebra,
    build_sweedler,
    dualize,
    verify_hopf,
)
from .morita import build_D_category, paper_morita_context, verify_morita_context
from .partial import (
    HopfAction,
    PartialAction,
    from_partial_group_action,
    restrict_global,
    tensor_actions,
    to_partial_group_action,
    verify_global_action,
    verify_partial_action,
)
from .pipeline import run_pipeline
from .report import Report
from .serialize import Workspace
from .smash import hstar_action, matrix_smash_iso, partial_smash

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
