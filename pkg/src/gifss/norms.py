"""Triangular norm and conorm pairs on exact degrees.

Three dual pairs are built in: product with probabilistic sum, minimum with
maximum, and the Lukasiewicz norm with the bounded sum. Every set and
relation operation takes one of these pairs as a parameter. Results of
tnorm/tconorm are rounded half-to-even at the configured precision; the
_raw variants skip rounding for infinite-precision law checks.

User-defined pairs may be registered. Registration replays the defining
axioms on a grid of sample points and rejects the pair if any fails, so a
registered pair is as trustworthy as a built-in one for everything except
continuity, which a finite grid cannot witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from typing import Callable

from .degrees import CTX, Degree, ZERO, ONE, quantize
from .errors import NormPairError

RawOp = Callable[[Decimal, Decimal], Decimal]

_D0 = Decimal(0)
_D1 = Decimal(1)


def _product(a: Decimal, b: Decimal) -> Decimal:
    return CTX.multiply(a, b)


def _prob_sum(a: Decimal, b: Decimal) -> Decimal:
    return CTX.subtract(CTX.add(a, b), CTX.multiply(a, b))


def _minimum(a: Decimal, b: Decimal) -> Decimal:
    return min(a, b)


def _maximum(a: Decimal, b: Decimal) -> Decimal:
    return max(a, b)


def _lukasiewicz(a: Decimal, b: Decimal) -> Decimal:
    return max(CTX.subtract(CTX.add(a, b), _D1), _D0)


def _bounded_sum(a: Decimal, b: Decimal) -> Decimal:
    return min(CTX.add(a, b), _D1)


_TNORM_IDS = ("Product", "Min", "Lukasiewicz")
_TCONORM_IDS = ("ProbabilisticSum", "Max", "BoundedSum")
_DUALS = {
    "Product": "ProbabilisticSum",
    "Min": "Max",
    "Lukasiewicz": "BoundedSum",
}


@dataclass(frozen=True)
class NormPair:
    """A named t-norm/t-conorm pair used to parameterise operations."""

    name: str
    tnorm_id: str
    tconorm_id: str
    tnorm_func: RawOp = field(compare=False, repr=False)
    tconorm_func: RawOp = field(compare=False, repr=False)

    def __post_init__(self):
        builtin_t = self.tnorm_id in _TNORM_IDS
        builtin_c = self.tconorm_id in _TCONORM_IDS
        if builtin_t != builtin_c or (
            builtin_t and _DUALS[self.tnorm_id] != self.tconorm_id
        ):
            raise NormPairError(
                f"{self.tnorm_id} and {self.tconorm_id} are not a dual pairing"
            )


PRODUCT = NormPair("product", "Product", "ProbabilisticSum", _product, _prob_sum)
MINMAX = NormPair("minmax", "Min", "Max", _minimum, _maximum)
LUKASIEWICZ = NormPair("lukasiewicz", "Lukasiewicz", "BoundedSum", _lukasiewicz, _bounded_sum)

_registry: dict[str, NormPair] = {
    PRODUCT.name: PRODUCT,
    MINMAX.name: MINMAX,
    LUKASIEWICZ.name: LUKASIEWICZ,
}


def pair_names() -> tuple[str, ...]:
    return tuple(_registry)


def pair_from_name(name: str) -> NormPair:
    try:
        return _registry[name]
    except KeyError:
        raise NormPairError(
            f"unknown norm pair {name!r}; known: {', '.join(_registry)}"
        ) from None


def builtin_pairs() -> tuple[NormPair, ...]:
    return (PRODUCT, MINMAX, LUKASIEWICZ)


def tnorm(pair: NormPair, a: Degree, b: Degree) -> Degree:
    """Apply the pair's t-norm and round half-to-even."""
    return Degree(quantize(pair.tnorm_func(a.value, b.value)))


def tconorm(pair: NormPair, a: Degree, b: Degree) -> Degree:
    """Apply the pair's t-conorm and round half-to-even."""
    return Degree(quantize(pair.tconorm_func(a.value, b.value)))


def tnorm_raw(pair: NormPair, a: Decimal, b: Decimal) -> Decimal:
    """The t-norm without rounding, on bare decimals."""
    return pair.tnorm_func(a, b)


def tconorm_raw(pair: NormPair, a: Decimal, b: Decimal) -> Decimal:
    """The t-conorm without rounding, on bare decimals."""
    return pair.tconorm_func(a, b)


# Sample grid for the registration axiom check: all multiples of 1/8 plus
# points that stress boundary behaviour.
_AXIOM_GRID = tuple(
    Decimal(n) / Decimal(8) for n in range(9)
) + (Decimal("0.001"), Decimal("0.999"))


def _check_axioms(name: str, op: RawOp, identity: Decimal) -> None:
    kind = "t-norm" if identity == _D1 else "t-conorm"
    for a in _AXIOM_GRID:
        r = op(a, identity)
        if r != a:
            raise NormPairError(
                f"{name}: {kind} violates identity at {a}: op(a, {identity}) = {r}"
            )
        for b in _AXIOM_GRID:
            ab = op(a, b)
            if not (_D0 <= ab <= _D1):
                raise NormPairError(f"{name}: {kind} leaves [0,1] at ({a}, {b}): {ab}")
            if ab != op(b, a):
                raise NormPairError(f"{name}: {kind} not commutative at ({a}, {b})")
            for c in _AXIOM_GRID:
                if op(a, op(b, c)) != op(op(a, b), c):
                    raise NormPairError(
                        f"{name}: {kind} not associative at ({a}, {b}, {c})"
                    )
                if c >= a and op(c, b) < ab:
                    raise NormPairError(
                        f"{name}: {kind} not monotone at ({a}, {b}) vs ({c}, {b})"
                    )


def _check_duality(name: str, t: RawOp, s: RawOp) -> None:
    for a in _AXIOM_GRID:
        for b in _AXIOM_GRID:
            lhs = s(a, b)
            rhs = CTX.subtract(_D1, t(CTX.subtract(_D1, a), CTX.subtract(_D1, b)))
            if lhs != rhs:
                raise NormPairError(
                    f"{name}: conorm is not the dual of the norm at ({a}, {b})"
                )


def register_pair(
    name: str,
    tnorm_id: str,
    tconorm_id: str,
    tnorm_func: RawOp,
    tconorm_func: RawOp,
) -> NormPair:
    """Register a user-defined dual pair after verifying its axioms.

    The check exercises identity, range, commutativity, associativity and
    monotonicity for both operations, plus duality between them, on a fixed
    sample grid. Violations raise NormPairError and nothing is registered.
    """
    if name in _registry:
        raise NormPairError(f"norm pair name {name!r} already registered")
    if tnorm_id in _TNORM_IDS or tconorm_id in _TCONORM_IDS:
        raise NormPairError("user-defined pairs must use fresh operation ids")
    _check_axioms(name, tnorm_func, _D1)
    _check_axioms(name, tconorm_func, _D0)
    _check_duality(name, tnorm_func, tconorm_func)
    pair = NormPair(name, tnorm_id, tconorm_id, tnorm_func, tconorm_func)
    _registry[name] = pair
    return pair
