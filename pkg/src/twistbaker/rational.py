"""Formatting and parsing of exact rationals as lowest-terms "p/q" strings."""

from fractions import Fraction


def rat_str(x) -> str:
    """Render a rational as "p/q" (or "p" when the denominator is 1)."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rat(s: str) -> Fraction:
    """Parse "p/q", "p", or a decimal literal into an exact Fraction."""
    return Fraction(s.strip())
