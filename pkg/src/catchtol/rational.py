"""Exact rational parsing and formatting.

All numeric data in this package is carried by ``fractions.Fraction``.
Decimal literals in input files ("6.9") are parsed exactly as fractions,
never through floats, so strict-inequality verdicts cannot be corrupted
by rounding.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction


def parse_rational(value) -> Fraction:
    """Parse an int, Fraction, "p/q" string or finite decimal string exactly.

    Floats are rejected: they would smuggle binary rounding into what is
    otherwise an exact pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError(
            f"floats are not accepted ({value!r}); write the value as a "
            "string such as \"6.9\" or \"69/10\""
        )
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as an exact fraction string ("5", "69/10")."""
    return str(value)
