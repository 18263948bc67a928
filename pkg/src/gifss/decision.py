"""Comparison-table decision pipeline.

Steps: reduce a Gifss by folding each parameter's preference into its
values, build one comparison table from the reduced memberships and one
from the reduced non-memberships, score both, and rank by membership
score minus non-membership score.

The reduction is fixed to mu' = mu + alpha - mu*alpha and nu' = nu*alpha,
which are the probabilistic sum and the product. It deliberately ignores
the norm pair chosen for set operations: the pipeline is defined by these
two formulas, not parameterised over norms. A reduced table is a pair of
score matrices, not a set; mu' + nu' may exceed 1 and no validity check
is applied to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .degrees import Degree
from .errors import UniverseMismatchError
from .norms import PRODUCT, tconorm, tnorm
from .sets import Gifss, Universe

Row = tuple[Degree, ...]


@dataclass(frozen=True)
class ReducedTable:
    """Preference-folded value matrices, one row per parameter."""

    universe: Universe
    params: tuple[str, ...]
    mu_prime: tuple[Row, ...]
    nu_prime: tuple[Row, ...]

    def mu_row(self, element: str) -> Row:
        i = self.universe.elements.index(element)
        return tuple(row[i] for row in self.mu_prime)

    def nu_row(self, element: str) -> Row:
        i = self.universe.elements.index(element)
        return tuple(row[i] for row in self.nu_prime)


@dataclass(frozen=True)
class ComparisonTable:
    """counts[i][j] = number of parameters where element i >= element j."""

    universe: Universe
    param_count: int
    counts: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ScoreVector:
    universe: Universe
    row_sum: tuple[int, ...]
    col_sum: tuple[int, ...]
    score: tuple[int, ...]


@dataclass(frozen=True)
class RankingResult:
    """Final scores with an explicit tie partition.

    order lists elements by descending final score, universe order within
    equal scores. tie_groups is the full partition in the same order; no
    artificial strict order between tied elements is invented.
    """

    universe: Universe
    final_score: tuple[int, ...]
    order: tuple[str, ...]
    tie_groups: tuple[tuple[str, ...], ...]

    @property
    def winner(self) -> str:
        return self.order[0]


@dataclass(frozen=True)
class DecisionReport:
    """Ranking plus every intermediate of the pipeline."""

    reduced: ReducedTable
    mem_comparison: ComparisonTable
    nonmem_comparison: ComparisonTable
    mem_scores: ScoreVector
    nonmem_scores: ScoreVector
    ranking: RankingResult

    @property
    def winner(self) -> str:
        return self.ranking.winner

    @property
    def final_score(self) -> tuple[int, ...]:
        return self.ranking.final_score

    @property
    def order(self) -> tuple[str, ...]:
        return self.ranking.order

    @property
    def tie_groups(self) -> tuple[tuple[str, ...], ...]:
        return self.ranking.tie_groups


def reduce(f: Gifss) -> ReducedTable:
    """Fold each preference into its parameter's values.

    mu' rises with the preference, nu' falls: mu' = mu + a - mu*a and
    nu' = nu*a, rounded half-to-even at the configured precision.
    """
    mu_rows, nu_rows = [], []
    for p, ifset, pref in f.entries():
        mu_rows.append(tuple(tconorm(PRODUCT, v.mu, pref) for v in ifset.values))
        nu_rows.append(tuple(tnorm(PRODUCT, v.nu, pref) for v in ifset.values))
    return ReducedTable(f.universe, f.params, tuple(mu_rows), tuple(nu_rows))


def comparison_table(universe: Universe, rows: Sequence[Row]) -> ComparisonTable:
    """Count, per element pair, the parameters where the first is >= the second."""
    n = len(universe)
    for row in rows:
        if len(row) != n:
            raise UniverseMismatchError(
                f"value row has {len(row)} entries for {n} elements"
            )
    counts = tuple(
        tuple(sum(1 for row in rows if row[i] >= row[j]) for j in range(n))
        for i in range(n)
    )
    return ComparisonTable(universe, len(rows), counts)


def score(t: ComparisonTable) -> ScoreVector:
    n = len(t.universe)
    row = tuple(sum(t.counts[i]) for i in range(n))
    col = tuple(sum(t.counts[i][j] for i in range(n)) for j in range(n))
    return ScoreVector(t.universe, row, col, tuple(r - c for r, c in zip(row, col)))


def final_scores(mem: ScoreVector, nonmem: ScoreVector) -> RankingResult:
    """final = membership score - non-membership score, ranked descending."""
    if mem.universe != nonmem.universe:
        raise UniverseMismatchError("score vectors built over different universes")
    universe = mem.universe
    finals = tuple(m - n for m, n in zip(mem.score, nonmem.score))
    order = tuple(
        universe.elements[i]
        for i in sorted(range(len(finals)), key=lambda i: (-finals[i], i))
    )
    groups: list[tuple[str, ...]] = []
    for distinct in sorted(set(finals), reverse=True):
        groups.append(
            tuple(x for x, s in zip(universe.elements, finals) if s == distinct)
        )
    return RankingResult(universe, finals, order, tuple(groups))


def rank(f: Gifss) -> DecisionReport:
    """Run the whole pipeline and keep all intermediates."""
    reduced = reduce(f)
    mem_cmp = comparison_table(f.universe, reduced.mu_prime)
    nonmem_cmp = comparison_table(f.universe, reduced.nu_prime)
    mem_sc = score(mem_cmp)
    nonmem_sc = score(nonmem_cmp)
    return DecisionReport(
        reduced, mem_cmp, nonmem_cmp, mem_sc, nonmem_sc,
        final_scores(mem_sc, nonmem_sc),
    )
