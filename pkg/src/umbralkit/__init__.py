"""umbralkit: an exact kernel for Sheffer-sequence computations.

Truncated formal power series and polynomials over Q or Q(L), the umbral
pairing and operator action, named polynomial families, and an executable
registry of convolution identities checked in exact rational arithmetic.
"""

from .errors import (
    CompositionOrder,
    DivisionByZero,
    DomainError,
    EvalPole,
    NotDelta,
    NotInvertible,
    OrderTooLow,
    ParseError,
    TruncationTooShort,
    UmbralError,
    UnboundSymbol,
    UnitConstantRequired,
    UnknownIdentity,
)
from .fields import LAMBDA, QL, QQ, Rat, RatFunc, rat, rat_str
from .series import (
    Poly,
    Series,
    exp_ct,
    falling_factorial,
    log1p_series,
    make_series,
    monomial,
    one,
    one_plus_t_pow,
    t_series,
    working_trunc,
    zero,
)
from .umbral import (
    ShefferPair,
    functional_apply,
    operator_apply,
    orthogonality_check,
    orthogonality_failure,
    sheffer_gf,
    sheffer_transfer,
    sheffer_transfer_all,
)
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    bernoulli_2nd,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_value,
    bespoke_pair,
    binom,
    catalog_pair,
    euler_poly,
    family_polys,
    frobenius_euler_poly,
    frobenius_eulerian_poly,
    gen_binom,
    multinomial,
    narumi_number,
    narumi_poly,
    narumi_value,
    poisson_charlier,
    stirling1,
    stirling2,
)
from .identities import (
    IDENTITY_TAGS,
    Counterexample,
    IdentityReport,
    aggregate_pass,
    b2_convolution,
    b2_convolution_enumerated,
    default_grid,
    describe,
    run_registry,
    verify_identity,
)
from .dsl import eval_expr, parse_expr, render

__version__ = "0.1.0"

__all__ = [
    "CompositionOrder",
    "DivisionByZero",
    "DomainError",
    "EvalPole",
    "NotDelta",
    "NotInvertible",
    "OrderTooLow",
    "ParseError",
    "TruncationTooShort",
    "UmbralError",
    "UnboundSymbol",
    "UnitConstantRequired",
    "UnknownIdentity",
    "LAMBDA",
    "QL",
    "QQ",
    "Rat",
    "RatFunc",
    "rat",
    "rat_str",
    "Poly",
    "Series",
    "exp_ct",
    "falling_factorial",
    "log1p_series",
    "make_series",
    "monomial",
    "one",
    "one_plus_t_pow",
    "t_series",
    "working_trunc",
    "zero",
    "ShefferPair",
    "functional_apply",
    "operator_apply",
    "orthogonality_check",
    "orthogonality_failure",
    "sheffer_gf",
    "sheffer_transfer",
    "sheffer_transfer_all",
    "FAMILY_NAMES",
    "FamilySpec",
    "bernoulli_2nd",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_value",
    "bespoke_pair",
    "binom",
    "catalog_pair",
    "euler_poly",
    "family_polys",
    "frobenius_euler_poly",
    "frobenius_eulerian_poly",
    "gen_binom",
    "multinomial",
    "narumi_number",
    "narumi_poly",
    "narumi_value",
    "poisson_charlier",
    "stirling1",
    "stirling2",
    "IDENTITY_TAGS",
    "Counterexample",
    "IdentityReport",
    "aggregate_pass",
    "b2_convolution",
    "b2_convolution_enumerated",
    "default_grid",
    "describe",
    "run_registry",
    "verify_identity",
    "parse_expr",
    "eval_expr",
    "render",
]
