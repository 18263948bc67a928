"""Exact unit-interval scalars.

A Degree is a decimal in [0, 1] with at most the configured number of
fractional digits (default 6). Values are stored as decimal.Decimal, never
as binary floats, so equality and ordering are exact. Comparison-table
counting treats ties as significant, which makes representation error
unacceptable anywhere in the pipeline.

Precision is a process-wide setting. Changing it affects subsequent
construction and rounding only; existing Degree objects keep their digits.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from decimal import Context, Decimal, InvalidOperation, ROUND_HALF_EVEN

from .errors import DegreeError

# Ample working precision for intermediate raw arithmetic. Two 30-digit
# operands multiply exactly within 60 significant digits.
CTX = Context(prec=60, rounding=ROUND_HALF_EVEN)

_MAX_PRECISION = 30

_state = threading.local()


def get_precision() -> int:
    return getattr(_state, "precision", 6)


def set_precision(digits: int) -> None:
    if not isinstance(digits, int) or isinstance(digits, bool):
        raise DegreeError(f"precision must be an int, got {type(digits).__name__}")
    if not 0 < digits <= _MAX_PRECISION:
        raise DegreeError(f"precision must be in 1..{_MAX_PRECISION}, got {digits}")
    _state.precision = digits


@contextmanager
def precision(digits: int):
    """Temporarily switch the configured precision."""
    old = get_precision()
    set_precision(digits)
    try:
        yield
    finally:
        _state.precision = old


def ulp() -> Decimal:
    """One unit in the last place at the configured precision."""
    return Decimal(1).scaleb(-get_precision())


def quantize(raw: Decimal) -> Decimal:
    """Round half-to-even to the configured precision."""
    return raw.quantize(ulp(), rounding=ROUND_HALF_EVEN, context=CTX)


@dataclass(frozen=True, order=True)
class Degree:
    """An exact decimal in [0, 1]."""

    value: Decimal

    def __init__(self, value: str | int | Decimal | "Degree"):
        if isinstance(value, Degree):
            dec = value.value
        elif isinstance(value, Decimal):
            dec = value
        elif isinstance(value, bool):
            dec = Decimal(int(value))
        elif isinstance(value, int):
            dec = Decimal(value)
        elif isinstance(value, float):
            raise DegreeError(
                f"binary float {value!r} rejected; pass a decimal string for exactness"
            )
        elif isinstance(value, str):
            try:
                dec = Decimal(value)
            except InvalidOperation:
                raise DegreeError(f"not a decimal literal: {value!r}") from None
        else:
            raise DegreeError(f"cannot build a degree from {type(value).__name__}")
        if dec.is_nan() or dec.is_infinite():
            raise DegreeError(f"degree must be finite, got {dec}")
        if not (0 <= dec <= 1):
            raise DegreeError(f"degree must lie in [0, 1], got {dec}")
        if dec != dec.quantize(ulp(), context=CTX):
            raise DegreeError(
                f"degree {dec} has more than {get_precision()} fractional digits"
            )
        object.__setattr__(self, "value", dec.normalize(CTX))

    def complement(self) -> "Degree":
        """The exact reflection 1 - value."""
        return Degree(CTX.subtract(Decimal(1), self.value))

    def __str__(self) -> str:
        return format_decimal(self.value)

    def __repr__(self) -> str:
        return f"Degree({format_decimal(self.value)!r})"


def format_decimal(dec: Decimal) -> str:
    """Canonical text form: trailing zeros trimmed, integers bare."""
    norm = dec.normalize(CTX)
    if norm == norm.to_integral_value():
        return str(norm.to_integral_value())
    return format(norm, "f")


ZERO = Degree(0)
ONE = Degree(1)
