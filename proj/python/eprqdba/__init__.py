"""Detectable Byzantine agreement over EPR pairs: simulator bindings."""

from fractions import Fraction

from ._eprqdba import (
    ConfigError,
    ProtocolViolation,
    UsageError,
    ValidationError,
    build_command_vector,
    check_alice,
    check_lt_with_bv,
    check_lt_with_cv,
    expected_accounting,
    forgery_probability_monte_carlo,
    oracle_check,
    positions_pair,
    run_experiment,
    sample_registers,
    scenario_names,
    simulate,
)
from ._eprqdba import forgery_probability_exact as _forgery_exact


def forgery_probability_exact(m: int) -> Fraction:
    """Probability that a random-fill forgery passes, as an exact fraction."""
    num, den = _forgery_exact(m)
    return Fraction(num, den)


__all__ = [
    "ConfigError",
    "ProtocolViolation",
    "UsageError",
    "ValidationError",
    "build_command_vector",
    "check_alice",
    "check_lt_with_bv",
    "check_lt_with_cv",
    "expected_accounting",
    "forgery_probability_exact",
    "forgery_probability_monte_carlo",
    "oracle_check",
    "positions_pair",
    "run_experiment",
    "sample_registers",
    "scenario_names",
    "simulate",
]
