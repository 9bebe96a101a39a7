"""Explicit sparse partial Steiner (r-1, r, n)-systems and their verification."""
from .constructions import (
    ConstructionMeta, ParamChoice, build, build_auto, build_binary, build_mod_sum,
    build_product, select_params,
)
from .counting import CountReport, density_report, linear_upper_bound
from .errors import BudgetExceeded, DomainError, FormatError, UsageError
from .groups import GroupSpec
from .hypergraph import Hypergraph, SubsetIndex, build_index, degree
from .kernels import BACKEND
from .verifier import (
    ForbiddenFamily, ViolationReport, check_forbidden, check_linear, check_sparse3,
    max_search, naive_check,
)

__version__ = "0.1.0"
