"""Gelfand-Kirillov dimension of modules over differential difference algebras."""

from .algebra import AlgebraPresentation, Element, mul, sigma_power_on_dpoly, tdeg, validate
from .dimension import (
    DimensionReport,
    RationalPolynomial,
    binomial_poly,
    gk_dimension,
    hilbert_data,
    hilbert_value,
    top_shave,
)
from .errors import ComputationError, DDGKError, ValidationError
from .groebner import (
    GroebnerBasis,
    Staircase,
    buchberger,
    divide,
    is_member,
    lc,
    left_quotient,
    lm,
    reduce_basis,
    remainder,
    right_divides,
    spoly,
    staircase_of,
)
from .modfree import (
    ModElement,
    ModuleGroebnerBasis,
    mod_buchberger,
    mod_divide,
    mod_remainder,
    svect,
)
from .oracle import oracle_hf
from .ordering import (
    DEFAULT_ORDERING,
    ModuleOrderingSpec,
    OrderingSpec,
    compare,
    compare_module,
    is_total_degree,
    parse_ordering,
)
from .scalar import FieldAutomorphism, FieldElement, NumberField

__version__ = "0.1.0"
