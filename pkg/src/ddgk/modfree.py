"""Groebner-Shirshov bases for submodules of the free left module A^p.

Module monomials are pairs ``(pos, exps)`` with 0-based positions; e_1 is
position 0.  Leading-term cancellation reuses the ideal-level cofactors on
the monomial part, since X^a e_i is right divisible by X^b e_j exactly when
i = j and X^b right-divides X^a.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import AlgebraPresentation, Element, coerce_scalar, format_terms
from .errors import PresentationMismatch, RankMismatch, ShapeMismatch, ZeroElement
from .groebner import cofactor, lclm, minimal_antichain, right_divides
from .ordering import ModuleOrderingSpec

DEFAULT_MODULE_ORDERING = ModuleOrderingSpec()


class ModElement:
    """An element of A^rank; ``terms`` maps (pos, exps) to nonzero coefficients."""

    __slots__ = ("alg", "rank", "terms")

    def __init__(self, alg: AlgebraPresentation, rank: int, terms: dict):
        self.alg = alg
        self.rank = rank
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def from_terms(cls, alg: AlgebraPresentation, rank: int, terms: Iterable) -> "ModElement":
        """Build from (coeff, exps, pos) triples with 0-based ``pos``."""
        acc: dict = {}
        for coeff, exps, pos in terms:
            if not 0 <= pos < rank:
                raise RankMismatch(f"position {pos + 1} outside rank {rank}")
            key = (pos, alg.check_exps(exps))
            acc[key] = acc.get(key, alg.field.zero) + alg.field(coeff)
        return cls(alg, rank, acc)

    @classmethod
    def embed(cls, f: Element, pos: int, rank: int) -> "ModElement":
        """f e_{pos+1}."""
        if not 0 <= pos < rank:
            raise RankMismatch(f"position {pos + 1} outside rank {rank}")
        return cls(f.alg, rank, {(pos, e): c for e, c in f.terms.items()})

    @classmethod
    def basis_vector(cls, alg: AlgebraPresentation, pos: int, rank: int) -> "ModElement":
        return cls.embed(alg.one(), pos, rank)

    def component(self, pos: int) -> Element:
        return Element(self.alg, {e: c for (i, e), c in self.terms.items() if i == pos})

    def _same(self, other: "ModElement"):
        if other.alg is not self.alg:
            raise PresentationMismatch("module elements over different presentations")
        if other.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other):
        if not isinstance(other, ModElement):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        zero = self.alg.field.zero
        for k, v in other.terms.items():
            out[k] = out.get(k, zero) + v
        return ModElement(self.alg, self.rank, out)

    def __neg__(self):
        return ModElement(self.alg, self.rank, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ModElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, other):
        """Left action of the algebra (or a scalar)."""
        if isinstance(other, Element):
            if other.alg is not self.alg:
                raise PresentationMismatch("module element over a different presentation")
            out: dict = {}
            zero = self.alg.field.zero
            for pos in sorted({i for i, _ in self.terms}):
                for e, c in (other * self.component(pos)).terms.items():
                    out[(pos, e)] = out.get((pos, e), zero) + c
            return ModElement(self.alg, self.rank, out)
        probe = coerce_scalar(self.alg.field, other)
        if probe is None:
            return NotImplemented
        return ModElement(self.alg, self.rank, {k: probe * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ModElement):
            return NotImplemented
        return self.alg is other.alg and self.rank == other.rank and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def tdeg(self):
        return max((sum(e) for _, e in self.terms), default=float("-inf"))

    def format(self, key=None) -> str:
        key = key or (lambda pm: (sum(pm[1]), -pm[0], pm[1]))
        items = sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)
        return format_terms(items, self.alg.names, suffix=lambda pm: f"e{pm[0] + 1}")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"ModElement({self})"


def mod_leading(f: ModElement, ordering: ModuleOrderingSpec = DEFAULT_MODULE_ORDERING):
    if not f.terms:
        raise ZeroElement("zero module element has no leading term")
    u = max(f.terms, key=ordering.key(f.alg.m))
    return u, f.terms[u]


def mod_lm(f, ordering=DEFAULT_MODULE_ORDERING):
    return mod_leading(f, ordering)[0]


def mod_divides(v, u) -> bool:
    if len(v[1]) != len(u[1]):
        raise ShapeMismatch("module monomials of different shapes")
    return v[0] == u[0] and right_divides(v[1], u[1])


def mod_lclm(u, v):
    """lclm on a shared position, ``None`` (the zero marker) otherwise."""
    if u[0] != v[0]:
        return None
    return (u[0], lclm(u[1], v[1]))


def _check(p, rank, *elements):
    for f in elements:
        if f.alg is not p:
            raise PresentationMismatch("module element over a different presentation")
        if rank is not None and f.rank != rank:
            raise RankMismatch(f"rank {f.rank} vs rank {rank}")


def svect(p: AlgebraPresentation, f: ModElement, g: ModElement, ordering=DEFAULT_MODULE_ORDERING):
    _check(p, f.rank, f, g)
    u, c_u = mod_leading(f, ordering)
    v, c_v = mod_leading(g, ordering)
    w = mod_lclm(u, v)
    if w is None:
        return ModElement(p, f.rank, {})
    one = p.field.one
    return cofactor(p, w[1], one, u[1], c_u) * f - cofactor(p, w[1], one, v[1], c_v) * g


def mod_divide(
    p: AlgebraPresentation,
    f: ModElement,
    G: Sequence[ModElement],
    ordering: ModuleOrderingSpec = DEFAULT_MODULE_ORDERING,
    strategy: str = "first",
):
    """Division with remainder in A^p; same contract as ``groebner.divide``."""
    if strategy not in ("first", "last"):
        raise ValueError(f"unknown strategy {strategy!r}")
    _check(p, f.rank, f, *G)
    key = ordering.key(p.m)
    leads = [mod_leading(g, ordering) if g else None for g in G]
    order = range(len(G)) if strategy == "first" else range(len(G) - 1, -1, -1)
    quotients = [p.zero() for _ in G]
    rem: dict = {}
    work = dict(f.terms)
    while work:
        u = max(work, key=key)
        c = work[u]
        idx = next(
            (i for i in order if leads[i] is not None and mod_divides(leads[i][0], u)), None
        )
        if idx is None:
            rem[u] = c
            del work[u]
            continue
        v, c_v = leads[idx]
        q = cofactor(p, u[1], c, v[1], c_v)
        quotients[idx] = quotients[idx] + q
        work = (ModElement(p, f.rank, work) - q * G[idx]).terms
        if u in work:
            raise AssertionError("leading term failed to cancel; ordering is not left admissible")
    return quotients, ModElement(p, f.rank, rem)


def mod_remainder(p, f, G, ordering=DEFAULT_MODULE_ORDERING, strategy="first") -> ModElement:
    return mod_divide(p, f, G, ordering, strategy)[1]


def mod_monic(f: ModElement, ordering=DEFAULT_MODULE_ORDERING) -> ModElement:
    return mod_leading(f, ordering)[1].inv() * f


@dataclass(frozen=True)
class ModuleStaircase:
    rank: int
    minimal_exponents: tuple  # one antichain per position

    def contains(self, pm) -> bool:
        pos, u = pm
        return any(right_divides(v, u) for v in self.minimal_exponents[pos])

    def is_irreducible(self, pm) -> bool:
        return not self.contains(pm)

    def max_exponent(self) -> int:
        return max(
            (max(v, default=0) for chain in self.minimal_exponents for v in chain), default=0
        )


@dataclass(frozen=True)
class ModuleGroebnerBasis:
    algebra: AlgebraPresentation
    ordering: ModuleOrderingSpec
    rank: int
    elements: tuple
    reduced: bool = False

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list:
        return [mod_lm(g, self.ordering) for g in self.elements]

    def staircase(self) -> ModuleStaircase:
        leads = self.leading_monomials()
        chains = tuple(
            minimal_antichain(u for pos, u in leads if pos == i) for i in range(self.rank)
        )
        return ModuleStaircase(self.rank, chains)

    def remainder(self, f: ModElement, strategy="first") -> ModElement:
        return mod_remainder(self.algebra, f, self.elements, self.ordering, strategy)

    def contains(self, f: ModElement) -> bool:
        return not self.remainder(f)

    def is_certified(self) -> bool:
        G = self.elements
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                s = svect(self.algebra, G[i], G[j], self.ordering)
                if s and mod_remainder(self.algebra, s, G, self.ordering):
                    return False
        return True


def mod_buchberger(
    p: AlgebraPresentation,
    F: Sequence[ModElement],
    ordering: ModuleOrderingSpec = DEFAULT_MODULE_ORDERING,
    rank: int | None = None,
    reduced: bool = True,
) -> ModuleGroebnerBasis:
    """Complete F to a Groebner-Shirshov basis of the submodule it generates.

    Pairs with leading monomials in different positions are never formed.
    ``rank`` is required only when F is empty.
    """
    if rank is None:
        if not F:
            raise RankMismatch("rank must be given for an empty generating set")
        rank = F[0].rank
    _check(p, rank, *F)
    key = ordering.key(p.m)
    G = [mod_monic(f, ordering) for f in F if f]
    heap: list = []
    seq = 0

    def push(i, j):
        nonlocal seq
        w = mod_lclm(mod_lm(G[i], ordering), mod_lm(G[j], ordering))
        if w is not None:
            heapq.heappush(heap, (key(w), seq, i, j))
            seq += 1

    for j in range(len(G)):
        for i in range(j):
            push(i, j)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        r = mod_remainder(p, svect(p, G[i], G[j], ordering), G, ordering)
        if r:
            G.append(mod_monic(r, ordering))
            for i in range(len(G) - 1):
                push(i, len(G) - 1)
    if reduced:
        G = mod_reduce_basis(p, G, ordering)
    return ModuleGroebnerBasis(p, ordering, rank, tuple(G), reduced)


def mod_reduce_basis(p, G: Sequence[ModElement], ordering=DEFAULT_MODULE_ORDERING) -> list:
    leads = [mod_lm(g, ordering) for g in G]
    keep = []
    for i, g in enumerate(G):
        redundant = any(
            j != i and mod_divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
            for j in range(len(G))
        )
        if not redundant:
            keep.append(g)
    for i in range(len(keep)):
        others = keep[:i] + keep[i + 1 :]
        keep[i] = mod_monic(mod_remainder(p, keep[i], others, ordering), ordering)
    key = ordering.key(p.m)
    return sorted(keep, key=lambda g: key(mod_lm(g, ordering)))
