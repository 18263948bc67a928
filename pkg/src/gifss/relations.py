"""Relations between two generalised intuitionistic fuzzy soft sets.

A relation assigns every (source parameter, target parameter) pair an
intuitionistic fuzzy set and a degree, bounded above by the intersection
of the parents' entries under the relation's norm pair. The bound is
checked exactly at construction, so every reachable Gifsr is valid.

Composition comes in two forms: compose_at keeps the middle parameter
fixed and returns one raw cell, compose aggregates over the middle
parameter with pointwise max on memberships and degrees and pointwise
min on non-memberships.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .degrees import Degree, ZERO, ONE
from .errors import (
    ChainMismatchError,
    ContainmentError,
    CoverageError,
    NormPairError,
    ParentMismatchError,
)
from .norms import NormPair, tnorm
from .sets import (
    Gifss,
    IfSet,
    IfsValue,
    ifs_intersect,
    _require_same_universe,
    equals,
)

RelKey = tuple[str, str]
RelCell = tuple[IfSet, Degree]


class Gifsr:
    """A validated relation from one Gifss to another under a norm pair."""

    __slots__ = ("source", "target", "pair", "_entries")

    def __init__(
        self,
        source: Gifss,
        target: Gifss,
        entries: Mapping[RelKey, RelCell],
        pair: NormPair,
    ):
        _require_same_universe(source.universe, target.universe)
        keys = {(a, b) for a in source.params for b in target.params}
        given = set(entries)
        missing = sorted(keys - given)
        extra = sorted(given - keys)
        if missing:
            raise CoverageError(f"relation misses parameter pairs {missing}")
        if extra:
            raise CoverageError(f"relation has stray parameter pairs {extra}")
        table: dict[RelKey, RelCell] = {}
        for a in source.params:
            fa, alpha = source.ifset(a), source.preference(a)
            for b in target.params:
                ifset, degree = entries[(a, b)]
                _require_same_universe(source.universe, ifset.universe)
                gb, beta = target.ifset(b), target.preference(b)
                for x, v, w, u in zip(source.universe, ifset.values, fa.values, gb.values):
                    bound = ifs_intersect(w, u, pair)
                    if v.mu > bound.mu:
                        raise ContainmentError(
                            f"mu at ({a}, {b}, {x}) is {v.mu}, above bound {bound.mu}"
                        )
                    if v.nu < bound.nu:
                        raise ContainmentError(
                            f"nu at ({a}, {b}, {x}) is {v.nu}, below bound {bound.nu}"
                        )
                dbound = tnorm(pair, alpha, beta)
                if degree > dbound:
                    raise ContainmentError(
                        f"degree at ({a}, {b}) is {degree}, above bound {dbound}"
                    )
                table[(a, b)] = (ifset, degree)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "pair", pair)
        object.__setattr__(self, "_entries", table)

    def __setattr__(self, name, value):
        raise AttributeError("Gifsr is immutable")

    def cell(self, a: str, b: str) -> RelCell:
        return self._entries[(a, b)]

    def cells(self) -> Iterator[tuple[str, str, IfSet, Degree]]:
        for a in self.source.params:
            for b in self.target.params:
                ifset, degree = self._entries[(a, b)]
                yield a, b, ifset, degree

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gifsr):
            return NotImplemented
        return (
            equals(self.source, other.source)
            and equals(self.target, other.target)
            and self.pair == other.pair
            and self._entries == other._entries
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"Gifsr({list(self.source.params)} x {list(self.target.params)}, "
            f"pair={self.pair.name})"
        )


def new_relation(
    f: Gifss, g: Gifss, entries: Mapping[RelKey, RelCell], pair: NormPair
) -> Gifsr:
    return Gifsr(f, g, entries, pair)


def maximal_relation(f: Gifss, g: Gifss, pair: NormPair) -> Gifsr:
    """The relation equal to its containment bound everywhere."""
    entries = {}
    for a in f.params:
        for b in g.params:
            ifset = IfSet(
                f.universe,
                tuple(
                    ifs_intersect(v, w, pair)
                    for v, w in zip(f.ifset(a).values, g.ifset(b).values)
                ),
            )
            entries[(a, b)] = (ifset, tnorm(pair, f.preference(a), g.preference(b)))
    return Gifsr(f, g, entries, pair)


def minimal_relation(f: Gifss, g: Gifss, pair: NormPair) -> Gifsr:
    """All-zero memberships, all-one non-memberships, zero degrees."""
    bottom = IfSet(
        f.universe, tuple(IfsValue(ZERO, ONE) for _ in f.universe.elements)
    )
    entries = {
        (a, b): (bottom, ZERO) for a in f.params for b in g.params
    }
    return Gifsr(f, g, entries, pair)


def _require_same_parents(r1: Gifsr, r2: Gifsr) -> None:
    if not (equals(r1.source, r2.source) and equals(r1.target, r2.target)):
        raise ParentMismatchError("relations have different parent sets")
    if r1.pair != r2.pair:
        raise NormPairError(
            f"relations use different norm pairs: {r1.pair.name} vs {r2.pair.name}"
        )


def union_rel(r1: Gifsr, r2: Gifsr) -> Gifsr:
    """Pointwise max on mu and degree, min on nu."""
    _require_same_parents(r1, r2)
    entries = {}
    for a, b, s1, d1 in r1.cells():
        s2, d2 = r2.cell(a, b)
        ifset = IfSet(
            r1.source.universe,
            tuple(
                IfsValue.unchecked(max(v.mu, w.mu), min(v.nu, w.nu))
                for v, w in zip(s1.values, s2.values)
            ),
        )
        entries[(a, b)] = (ifset, max(d1, d2))
    return Gifsr(r1.source, r1.target, entries, r1.pair)


def intersect_rel(r1: Gifsr, r2: Gifsr) -> Gifsr:
    """Pointwise min on mu and degree, max on nu."""
    _require_same_parents(r1, r2)
    entries = {}
    for a, b, s1, d1 in r1.cells():
        s2, d2 = r2.cell(a, b)
        ifset = IfSet(
            r1.source.universe,
            tuple(
                IfsValue.unchecked(min(v.mu, w.mu), max(v.nu, w.nu))
                for v, w in zip(s1.values, s2.values)
            ),
        )
        entries[(a, b)] = (ifset, min(d1, d2))
    return Gifsr(r1.source, r1.target, entries, r1.pair)


def inverse(r: Gifsr) -> Gifsr:
    """Swap source and target; entry (b, a) is the original entry (a, b)."""
    entries = {(b, a): cell for (a, b), cell in r._entries.items()}
    return Gifsr(r.target, r.source, entries, r.pair)


def is_subrelation(r1: Gifsr, r2: Gifsr) -> bool:
    """Pointwise order on relations with the same parents and pair."""
    _require_same_parents(r1, r2)
    for a, b, s1, d1 in r1.cells():
        s2, d2 = r2.cell(a, b)
        if d1 > d2:
            return False
        for v, w in zip(s1.values, s2.values):
            if v.mu > w.mu or v.nu < w.nu:
                return False
    return True


def _require_chain(r1: Gifsr, r2: Gifsr) -> None:
    if not equals(r1.target, r2.source):
        raise ChainMismatchError(
            "first relation's target differs from second relation's source"
        )
    if r1.pair != r2.pair:
        raise NormPairError(
            f"relations use different norm pairs: {r1.pair.name} vs {r2.pair.name}"
        )


def compose_at(r1: Gifsr, r2: Gifsr, a: str, b: str, c: str) -> RelCell:
    """One composition cell with the middle parameter held fixed."""
    _require_chain(r1, r2)
    s1, d1 = r1.cell(a, b)
    s2, d2 = r2.cell(b, c)
    ifset = IfSet(
        r1.source.universe,
        tuple(
            ifs_intersect(v, w, r1.pair) for v, w in zip(s1.values, s2.values)
        ),
    )
    return ifset, tnorm(r1.pair, d1, d2)


def compose(r1: Gifsr, r2: Gifsr) -> Gifsr:
    """Aggregate compose_at over the middle parameter, max/min pointwise."""
    _require_chain(r1, r2)
    mids = r1.target.params
    entries = {}
    n = len(r1.source.universe)
    for a in r1.source.params:
        for c in r2.target.params:
            parts = [compose_at(r1, r2, a, b, c) for b in mids]
            if parts:
                values = tuple(
                    IfsValue.unchecked(
                        max(s.values[i].mu for s, _ in parts),
                        min(s.values[i].nu for s, _ in parts),
                    )
                    for i in range(n)
                )
                degree = max(d for _, d in parts)
            else:
                # sup over an empty middle set is the bottom cell
                values = tuple(IfsValue(ZERO, ONE) for _ in range(n))
                degree = ZERO
            entries[(a, c)] = (IfSet(r1.source.universe, values), degree)
    return Gifsr(r1.source, r2.target, entries, r1.pair)
