"""Brute-force Hilbert function values by exact linear algebra.

Under a total-degree ordering every element of I with tdeg <= t is a sum of
w * g with tdeg(w) + tdeg(g) <= t, so the Q-span of {a^j w g} truncated at
degree t is exactly I_{<=t}.  Its corank in A_{<=t} is HF(t); this path never
looks at the staircase.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import standard_monomials
from .errors import NonDegreeOrdering, UncertifiedBasis
from .groebner import GroebnerBasis
from .modfree import ModElement, ModuleGroebnerBasis


@dataclass
class RankProblem:
    """Coordinates of the generator rows over the Q-basis a^j u e_pos of A^rank_{<=t}."""

    columns: dict  # (pos, exps, j) -> column index
    rows: list  # sparse rows {column: Fraction}

    @property
    def width(self) -> int:
        return len(self.columns)


def _as_module(G):
    if isinstance(G, ModuleGroebnerBasis):
        return G.rank, list(G.elements)
    if isinstance(G, GroebnerBasis):
        return 1, [ModElement.embed(g, 0, 1) for g in G.elements]
    raise TypeError(f"expected a Groebner basis, got {type(G).__name__}")


def generator_products(G, t: int):
    """Yield the module elements a^j * w * g spanning the degree-<=t part of the submodule."""
    alg = G.algebra
    _, gens = _as_module(G)
    powers = [alg.field.gen ** j for j in range(alg.field.degree)]
    for g in gens:
        room = t - g.tdeg()
        if room < 0:
            continue
        for w in standard_monomials(alg.l, int(room)):
            for c in powers:
                yield alg.monomial(w, c) * g


def build_problem(G, t: int) -> RankProblem:
    alg = G.algebra
    rank, _ = _as_module(G)
    d = alg.field.degree
    columns = {}
    for pos in range(rank):
        for u in standard_monomials(alg.l, t):
            for j in range(d):
                columns[(pos, u, j)] = len(columns)
    rows = []
    for f in generator_products(G, t):
        row = {}
        for (pos, u), c in f.terms.items():
            for j, x in enumerate(c.coeffs):
                if x:
                    row[columns[(pos, u, j)]] = Fraction(x)
        if row:
            rows.append(row)
    return RankProblem(columns, rows)


def sparse_rank(rows) -> int:
    """Rank of sparse rational rows; pivots are the smallest column, normalised to 1."""
    pivots: dict = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {k: v * inv for k, v in row.items()}
                break
            factor = row[col]
            for k, v in piv.items():
                x = row.get(k, 0) - factor * v
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
    return len(pivots)


def _check(G, check: bool):
    if not G.ordering.is_total_degree():
        raise NonDegreeOrdering(
            f"ordering {G.ordering} is not a total-degree ordering; truncated spans would undercount"
        )
    if check and not G.is_certified():
        raise UncertifiedBasis("some S-polynomial of the basis does not reduce to zero")


def oracle_hf(G, t: int, check: bool = True) -> int:
    """dim_Q of the degree-<=t part of A/I (or A^rank/N) by corank."""
    if t < 0:
        return 0
    _check(G, check)
    alg = G.algebra
    rank, _ = _as_module(G)
    full = alg.field.degree * comb(t + alg.l, alg.l) * rank
    return full - sparse_rank(build_problem(G, t).rows)


def default_bound(stability_threshold: int) -> int:
    return min(stability_threshold + 3, 8)
