"""Exact reductions, K_n, L_n and cores over GF(p^e) quotient rings."""

from ._coreideal import (
    AlgebraError,
    Error,
    GenericityFailure,
    Ideal,
    ParseError,
    Spec,
    TheoremViolation,
    adjoint_colon,
    commands,
    core,
    kn,
    ln,
    load_spec,
    minimal_reduction,
    parse_spec,
    reduction_number,
    run,
    s_invariant,
)

__all__ = [
    "AlgebraError",
    "Error",
    "GenericityFailure",
    "Ideal",
    "ParseError",
    "Spec",
    "TheoremViolation",
    "adjoint_colon",
    "commands",
    "core",
    "kn",
    "ln",
    "load_spec",
    "minimal_reduction",
    "parse_spec",
    "reduction_number",
    "run",
    "s_invariant",
]
