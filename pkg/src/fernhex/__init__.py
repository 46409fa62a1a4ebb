"""Exact enumeration and verification for hexagons with three fern-shaped holes."""

from .counting import ResourceLimit, count_matchings_generic, count_tilings
from .ferns import (EMPTY_FERN, FernSeq, fern_arrow, fern_bar,
                    fern_plus_one_last, fern_prepend_zero)
from .formulas import (THEOREM_ROWS, clp_count, lambda_fn, lambda_prime, phi,
                       psi, psi_prime, theorem_count, theorem_value, theta,
                       theta_prime)
from .hyper import (H, HalfInt, HyperValue, NegativeArgument, hyperfactorial,
                    pp_box)
from .lattice import TriCell, TriRegion, balance, dual_graph, neighbors
from .reductions import normalize_zero_triangles, reduce_y_minimal
from .regions import (FernOverflow, ParityViolation, PositionUnsupported,
                      RegionError, RegionSpec, YBelowMinimum, build_central,
                      build_cored_hexagon, build_dented_semihexagon,
                      build_hexagon, build_region, format_spec, parse_spec)
from .verification import (RECURRENCES, RecurrenceSpec, check_kuo_generic,
                           check_recurrence, cross_check, sweep)

__all__ = [name for name in dir() if not name.startswith("_")]
