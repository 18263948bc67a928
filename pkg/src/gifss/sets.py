"""Generalised intuitionistic fuzzy soft sets.

A Gifss maps each parameter to an intuitionistic fuzzy set over a fixed
universe together with a preference degree for that parameter. Subset,
union and intersection are parameterised by a norm pair: intersection
combines memberships with the t-norm and non-memberships with the
t-conorm, union does the reverse, and preferences follow the same rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .degrees import CTX, Degree, ZERO
from .errors import GifssError, UniverseMismatchError, ValidityError
from .norms import NormPair, tconorm, tnorm

ElementId = str
ParamId = str


def _check_names(kind: str, names: Iterable[str]) -> tuple[str, ...]:
    out = tuple(names)
    seen = set()
    for n in out:
        if not isinstance(n, str) or not n:
            raise GifssError(f"{kind} name must be a non-empty string, got {n!r}")
        if n in seen:
            raise GifssError(f"duplicate {kind} name {n!r}")
        seen.add(n)
    return out


@dataclass(frozen=True)
class Universe:
    """Ordered, duplicate-free element names. Order fixes all output order."""

    elements: tuple[ElementId, ...]

    def __init__(self, elements: Iterable[ElementId]):
        names = _check_names("element", elements)
        if not names:
            raise GifssError("universe must not be empty")
        object.__setattr__(self, "elements", names)

    def __iter__(self) -> Iterator[ElementId]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, name: object) -> bool:
        return name in self.elements


def _require_same_universe(a: Universe, b: Universe) -> None:
    if a != b:
        raise UniverseMismatchError(
            f"universes differ: {list(a.elements)} vs {list(b.elements)}"
        )


@dataclass(frozen=True)
class IfsValue:
    """A (membership, non-membership) pair with mu + nu <= 1."""

    mu: Degree
    nu: Degree

    def __post_init__(self):
        if CTX.add(self.mu.value, self.nu.value) > 1:
            raise ValidityError(
                f"mu + nu must not exceed 1, got {self.mu} + {self.nu}"
            )

    @classmethod
    def unchecked(cls, mu: Degree, nu: Degree) -> "IfsValue":
        """Build without the validity check. For pre-reduced data only."""
        v = object.__new__(cls)
        object.__setattr__(v, "mu", mu)
        object.__setattr__(v, "nu", nu)
        return v


@dataclass(frozen=True)
class IfSet:
    """An intuitionistic fuzzy set: one IfsValue per universe element."""

    universe: Universe
    values: tuple[IfsValue, ...]

    def __init__(self, universe: Universe, values):
        if isinstance(values, Mapping):
            extra = set(values) - set(universe.elements)
            if extra:
                raise GifssError(f"values given for unknown elements {sorted(extra)}")
            missing = [x for x in universe if x not in values]
            if missing:
                raise GifssError(f"values missing for elements {missing}")
            seq = tuple(values[x] for x in universe)
        else:
            seq = tuple(values)
            if len(seq) != len(universe):
                raise GifssError(
                    f"expected {len(universe)} values, got {len(seq)}"
                )
        if not all(isinstance(v, IfsValue) for v in seq):
            raise GifssError("every value must be an IfsValue")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "values", seq)

    def value(self, element: ElementId) -> IfsValue:
        return self.values[self.universe.elements.index(element)]

    def items(self) -> Iterator[tuple[ElementId, IfsValue]]:
        return zip(self.universe.elements, self.values)


def ifs_intersect(a: IfsValue, b: IfsValue, pair: NormPair) -> IfsValue:
    return IfsValue.unchecked(tnorm(pair, a.mu, b.mu), tconorm(pair, a.nu, b.nu))


def ifs_union(a: IfsValue, b: IfsValue, pair: NormPair) -> IfsValue:
    return IfsValue.unchecked(tconorm(pair, a.mu, b.mu), tnorm(pair, a.nu, b.nu))


class Gifss:
    """Parameters mapped to (intuitionistic fuzzy set, preference degree)."""

    __slots__ = ("universe", "params", "_entries")

    def __init__(
        self,
        universe: Universe,
        entries: Iterable[tuple[ParamId, IfSet, Degree]] = (),
    ):
        if not isinstance(universe, Universe):
            raise GifssError("universe must be a Universe")
        triples = tuple(entries)
        params = _check_names("parameter", (p for p, _, _ in triples))
        table = {}
        for p, ifset, pref in triples:
            if not isinstance(ifset, IfSet):
                raise GifssError(f"parameter {p!r}: expected an IfSet")
            _require_same_universe(universe, ifset.universe)
            if not isinstance(pref, Degree):
                raise GifssError(f"parameter {p!r}: preference must be a Degree")
            table[p] = (ifset, pref)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "_entries", table)

    def __setattr__(self, name, value):
        raise AttributeError("Gifss is immutable")

    def has_param(self, p: ParamId) -> bool:
        return p in self._entries

    def ifset(self, p: ParamId) -> IfSet:
        return self._entries[p][0]

    def preference(self, p: ParamId) -> Degree:
        return self._entries[p][1]

    def entries(self) -> Iterator[tuple[ParamId, IfSet, Degree]]:
        for p in self.params:
            ifset, pref = self._entries[p]
            yield p, ifset, pref

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gifss):
            return NotImplemented
        return equals(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Gifss(universe={list(self.universe)}, params={list(self.params)})"


def equals(f: Gifss, g: Gifss) -> bool:
    """Same universe, same parameter set, identical values and preferences.

    Parameter order is presentation, not content, so it is ignored here.
    """
    if f.universe != g.universe:
        return False
    if set(f.params) != set(g.params):
        return False
    return all(
        f.ifset(p) == g.ifset(p) and f.preference(p) == g.preference(p)
        for p in f.params
    )


def is_subset(f: Gifss, g: Gifss) -> bool:
    """Pointwise order: f's parameters, preferences and values below g's."""
    _require_same_universe(f.universe, g.universe)
    for p, ifset, pref in f.entries():
        if not g.has_param(p):
            return False
        if pref > g.preference(p):
            return False
        other = g.ifset(p)
        for v, w in zip(ifset.values, other.values):
            if v.mu > w.mu or v.nu < w.nu:
                return False
    return True


def intersect(f: Gifss, g: Gifss, pair: NormPair) -> Gifss:
    """Parameters common to both, t-norm on mu, t-conorm on nu and prefs dual."""
    _require_same_universe(f.universe, g.universe)
    out = []
    for p, ifset, pref in f.entries():
        if not g.has_param(p):
            continue
        combined = IfSet(
            f.universe,
            tuple(
                ifs_intersect(v, w, pair)
                for v, w in zip(ifset.values, g.ifset(p).values)
            ),
        )
        out.append((p, combined, tnorm(pair, pref, g.preference(p))))
    return Gifss(f.universe, out)


def union(f: Gifss, g: Gifss, pair: NormPair) -> Gifss:
    """All parameters; common ones combine with t-conorm on mu, t-norm on nu."""
    _require_same_universe(f.universe, g.universe)
    out = []
    for p, ifset, pref in f.entries():
        if g.has_param(p):
            combined = IfSet(
                f.universe,
                tuple(
                    ifs_union(v, w, pair)
                    for v, w in zip(ifset.values, g.ifset(p).values)
                ),
            )
            out.append((p, combined, tconorm(pair, pref, g.preference(p))))
        else:
            out.append((p, ifset, pref))
    for p, ifset, pref in g.entries():
        if not f.has_param(p):
            out.append((p, ifset, pref))
    return Gifss(f.universe, out)
