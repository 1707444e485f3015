"""Newton-polygon invariants of plane curve singularities in any characteristic.

Exact arithmetic over Q and F_p throughout.  The main entry points:

    parse_poly, newton_polygon, invariants_bundle     polygon side
    degeneracy_report                                 (strong) non-degeneracy
    semigroup_from_generators, char_exponents_from_param
    i0_param, i0_resultant, i0_dim_oracle, i0_local, milnor_number
    spec_from_json, verify_theorem, generate_corpus
"""

__version__ = "0.1.0"

from .branch import ParamBranch, char_exponents_from_param, implicitize
from .corpus import generate_corpus
from .curve import CurveSpec, expand_curve, mu_bar_curve, spec_from_json
from .edges import degeneracy_report, edge_initial
from .errors import CurveSingError
from .field import Field
from .intersection import (
    i0_dim_oracle,
    i0_local,
    i0_param,
    i0_resultant,
    intmul_bound_check,
    milnor_number,
)
from .invariants import invariants_bundle
from .newton import newton_polygon
from .poly import Poly, parse_poly, parse_series
from .semigroup import Semigroup, semigroup_from_generators
from .verify import verify_corpus, verify_theorem
