"""Left Groebner-Shirshov bases of left ideals.

Right divisibility of standard monomials is componentwise domination of
exponent vectors, so all leading-monomial bookkeeping happens on tuples.
The exact left quotient of u by v is S^(a-a') sigma^(-a')(D^(b-b')); it is
not a monomial in general.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import AlgebraPresentation, Element
from .errors import NotDivisible, PresentationMismatch, ZeroElement
from .ordering import DEFAULT_ORDERING, OrderingSpec


def leading(f: Element, ordering: OrderingSpec = DEFAULT_ORDERING):
    """Return (lm, lc) of a nonzero element."""
    if not f.terms:
        raise ZeroElement("zero element has no leading term")
    u = max(f.terms, key=ordering.key(f.alg.m))
    return u, f.terms[u]


def lm(f: Element, ordering: OrderingSpec = DEFAULT_ORDERING):
    return leading(f, ordering)[0]


def lc(f: Element, ordering: OrderingSpec = DEFAULT_ORDERING):
    return leading(f, ordering)[1]


def right_divides(v, u) -> bool:
    return all(a <= b for a, b in zip(v, u))


def lclm(u, v) -> tuple:
    return tuple(max(a, b) for a, b in zip(u, v))


@lru_cache(maxsize=1 << 16)
def _left_quotient(alg: AlgebraPresentation, u: tuple, v: tuple) -> Element:
    m = alg.m
    alpha_v = v[:m]
    gamma = tuple(a - b for a, b in zip(u[:m], alpha_v))
    gamma_d = tuple(a - b for a, b in zip(u[m:], v[m:]))
    dpart = alg.sigma_dmono(tuple(-a for a in alpha_v), gamma_d)
    zero_alpha = (0,) * m
    dpoly = Element(alg, {zero_alpha + k: c for k, c in dpart.items()})
    return alg.mul(alg.monomial(gamma + (0,) * alg.n), dpoly)


def left_quotient(p: AlgebraPresentation, u, v) -> Element:
    """The unique h with h * v = u (coefficient 1), when v right-divides u."""
    u, v = tuple(u), tuple(v)
    if not right_divides(v, u):
        raise NotDivisible(f"{list(v)} does not right-divide {list(u)}")
    return _left_quotient(p, u, v)


def cofactor(p: AlgebraPresentation, u, c, v, c_v) -> Element:
    """q with lt(q * g) = c * u for any g with lt(g) = c_v * v."""
    h = left_quotient(p, u, v)
    gamma = tuple(a - b for a, b in zip(u[: p.m], v[: p.m]))
    e = c * p.sigma_field(tuple(-x for x in gamma))(c_v).inv()
    return e * h


def _check(p: AlgebraPresentation, *elements: Element):
    for f in elements:
        if f.alg is not p:
            raise PresentationMismatch("element belongs to another presentation")


def reduce_step(p: AlgebraPresentation, f: Element, g: Element, ordering=DEFAULT_ORDERING) -> Element:
    """One reduction f -> f - q g cancelling lt(f)."""
    _check(p, f, g)
    u, c = leading(f, ordering)
    v, c_v = leading(g, ordering)
    return f - cofactor(p, u, c, v, c_v) * g


def divide(
    p: AlgebraPresentation,
    f: Element,
    G: Sequence[Element],
    ordering: OrderingSpec = DEFAULT_ORDERING,
    strategy: str = "first",
):
    """Division with remainder.

    Returns ``(quotients, r)`` with f = sum quotients[i] * G[i] + r, every
    lm(quotients[i] * G[i]) <= lm(f) and Supp(r) inside Irr(lm(G)).  The
    leading reducible term is always attacked first; ``strategy`` picks the
    first or the last divisor in list order.
    """
    if strategy not in ("first", "last"):
        raise ValueError(f"unknown strategy {strategy!r}")
    _check(p, f, *G)
    key = ordering.key(p.m)
    leads = [leading(g, ordering) if g else None for g in G]
    order = range(len(G)) if strategy == "first" else range(len(G) - 1, -1, -1)
    quotients = [p.zero() for _ in G]
    rem: dict = {}
    work = dict(f.terms)
    while work:
        u = max(work, key=key)
        c = work[u]
        idx = next(
            (i for i in order if leads[i] is not None and right_divides(leads[i][0], u)), None
        )
        if idx is None:
            rem[u] = c
            del work[u]
            continue
        v, c_v = leads[idx]
        q = cofactor(p, u, c, v, c_v)
        quotients[idx] = quotients[idx] + q
        work = (Element(p, work) - q * G[idx]).terms
        if u in work:
            raise AssertionError("leading term failed to cancel; ordering is not left admissible")
    return quotients, Element(p, rem)


def remainder(p, f, G, ordering=DEFAULT_ORDERING, strategy="first") -> Element:
    return divide(p, f, G, ordering, strategy)[1]


def spoly(p: AlgebraPresentation, f: Element, g: Element, ordering=DEFAULT_ORDERING) -> Element:
    _check(p, f, g)
    u, c_u = leading(f, ordering)
    v, c_v = leading(g, ordering)
    w = lclm(u, v)
    one = p.field.one
    return cofactor(p, w, one, u, c_u) * f - cofactor(p, w, one, v, c_v) * g


def monic(f: Element, ordering=DEFAULT_ORDERING) -> Element:
    return leading(f, ordering)[1].inv() * f


def minimal_antichain(vectors) -> tuple:
    """Componentwise-minimal members of a set of exponent vectors, sorted."""
    vs = sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(v), v))
    out: list = []
    for v in vs:
        if not any(right_divides(w, v) for w in out):
            out.append(v)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Staircase:
    minimal_exponents: tuple

    def contains(self, u) -> bool:
        """True if u lies in the leading-monomial ideal (is reducible)."""
        return any(right_divides(v, u) for v in self.minimal_exponents)

    def is_irreducible(self, u) -> bool:
        return not self.contains(u)

    def max_exponent(self) -> int:
        return max((max(v, default=0) for v in self.minimal_exponents), default=0)


@dataclass(frozen=True)
class GroebnerBasis:
    algebra: AlgebraPresentation
    ordering: OrderingSpec
    elements: tuple
    reduced: bool = False

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list:
        return [lm(g, self.ordering) for g in self.elements]

    def staircase(self) -> Staircase:
        return Staircase(minimal_antichain(self.leading_monomials()))

    def remainder(self, f: Element, strategy="first") -> Element:
        return remainder(self.algebra, f, self.elements, self.ordering, strategy)

    def contains(self, f: Element) -> bool:
        return not self.remainder(f)

    def is_certified(self) -> bool:
        """Check that every S-polynomial of a pair reduces to zero."""
        G = self.elements
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                s = spoly(self.algebra, G[i], G[j], self.ordering)
                if remainder(self.algebra, s, G, self.ordering):
                    return False
        return True


def _pair_key(ordering, m, G, i, j):
    return ordering.key(m)(lclm(lm(G[i], ordering), lm(G[j], ordering)))


def buchberger(
    p: AlgebraPresentation,
    F: Sequence[Element],
    ordering: OrderingSpec = DEFAULT_ORDERING,
    reduced: bool = True,
) -> GroebnerBasis:
    """Complete F to a left Groebner-Shirshov basis.

    Pairs are taken smallest lclm first (ties first-in-first-out) and no pair
    criteria are applied.  With ``reduced`` the result is minimalised,
    tail-reduced and sorted by leading monomial; otherwise it contains the
    monic rescaling of F in input order followed by the added remainders.
    """
    _check(p, *F)
    G = [monic(f, ordering) for f in F if f]
    heap: list = []
    seq = 0
    for j in range(len(G)):
        for i in range(j):
            heapq.heappush(heap, (_pair_key(ordering, p.m, G, i, j), seq, i, j))
            seq += 1
    while heap:
        _, _, i, j = heapq.heappop(heap)
        r = remainder(p, spoly(p, G[i], G[j], ordering), G, ordering)
        if r:
            G.append(monic(r, ordering))
            new = len(G) - 1
            for i in range(new):
                heapq.heappush(heap, (_pair_key(ordering, p.m, G, i, new), seq, i, new))
                seq += 1
    if reduced:
        G = reduce_basis(p, G, ordering)
    return GroebnerBasis(p, ordering, tuple(G), reduced)


def reduce_basis(p: AlgebraPresentation, G: Sequence[Element], ordering=DEFAULT_ORDERING) -> list:
    """Drop redundant members, tail-reduce the rest, sort by leading monomial."""
    leads = [lm(g, ordering) for g in G]
    keep = []
    for i, g in enumerate(G):
        redundant = any(
            j != i and right_divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
            for j in range(len(G))
        )
        if not redundant:
            keep.append(g)
    for i in range(len(keep)):
        others = keep[:i] + keep[i + 1 :]
        keep[i] = monic(remainder(p, keep[i], others, ordering), ordering)
    key = ordering.key(p.m)
    return sorted(keep, key=lambda g: key(lm(g, ordering)))


def is_member(p: AlgebraPresentation, f: Element, G: GroebnerBasis) -> bool:
    _check(p, f)
    return G.contains(f)


def staircase_of(G: GroebnerBasis) -> Staircase:
    return G.staircase()
