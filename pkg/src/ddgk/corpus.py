"""Small presentations and ideals used by the tests and scripts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import AlgebraPresentation, Element
from .scalar import NumberField

SQRT2 = NumberField([-2, 0, 1])


def quantum_plane(q=2) -> AlgebraPresentation:
    """Type (1,1) with D S = q S D."""
    return AlgebraPresentation(NumberField.rationals(), 1, 1, sigma_D=[[[q]]])


def swap() -> AlgebraPresentation:
    """Type (1,2) with sigma exchanging D1 and D2."""
    return AlgebraPresentation(NumberField.rationals(), 1, 2, sigma_D=[[[0, 1], [1, 0]]])


def commutative(m: int, n: int) -> AlgebraPresentation:
    return AlgebraPresentation(NumberField.rationals(), m, n)


def sqrt2_twist() -> AlgebraPresentation:
    """Type (1,1) over Q(a), a^2 = 2, with sigma(a) = -a and sigma(D) = a D."""
    a = SQRT2.gen
    return AlgebraPresentation(SQRT2, 1, 1, sigma_R=[-a], sigma_D=[[[a]]])


def shear() -> AlgebraPresentation:
    """Type (2,2): sigma_1(D1) = D1 + D2, sigma_1(D2) = D2; sigma_2 scales by 2."""
    return AlgebraPresentation(
        NumberField.rationals(), 2, 2, sigma_D=[[[1, 1], [0, 1]], [[2, 0], [0, 2]]]
    )


def sqrt2_wide() -> AlgebraPresentation:
    """Type (2,1) over Q(a): S1 twists a and scales D by a, S2 scales D by 2."""
    a = SQRT2.gen
    return AlgebraPresentation(SQRT2, 2, 1, sigma_R=[-a, a], sigma_D=[[[a]], [[2]]])


@dataclass
class CorpusIdeal:
    name: str
    presentation: AlgebraPresentation
    generators: list = field(default_factory=list)


def _ideals(name: str, p: AlgebraPresentation, builders: list[Callable]) -> list:
    return [CorpusIdeal(f"{name}/{i}", p, build(p)) for i, build in enumerate(builders)]


def corpus() -> list[CorpusIdeal]:
    """Proper and improper left ideals over every shipped presentation."""
    out = []
    qp = quantum_plane()
    out += _ideals(
        "quantum_plane",
        qp,
        [
            lambda p: [p.S(1) * p.D(1)],
            lambda p: [p.S(1) * p.D(1) - p.S(1), p.D(1) ** 2 - p.D(1)],
            lambda p: [p.S(1) ** 2 - p.D(1), p.S(1) * p.D(1) + p.one()],
            lambda p: [p.D(1) ** 2 + p.S(1), p.S(1) ** 2 * p.D(1)],
            lambda p: [],
        ],
    )
    out += _ideals(
        "commutative_2_0",
        commutative(2, 0),
        [
            lambda p: [p.S(1) ** 2, p.S(1) * p.S(2)],
            lambda p: [p.S(1) ** 2 - p.S(2), p.S(2) ** 2 - p.S(1)],
        ],
    )
    out += _ideals(
        "swap",
        swap(),
        [
            lambda p: [p.D(1) * p.D(2)],
            lambda p: [p.S(1) * p.D(1) - p.D(2), p.D(1) ** 2],
            lambda p: [p.S(1) ** 2 + p.D(1), p.D(2) ** 2],
        ],
    )
    out += _ideals(
        "sqrt2_twist",
        sqrt2_twist(),
        [
            lambda p: [p.S(1) * p.D(1)],
            lambda p: [p.S(1) * p.D(1) - p.constant(p.field.gen) * p.S(1), p.D(1) ** 2 + p.S(1)],
        ],
    )
    out += _ideals(
        "shear",
        shear(),
        [
            lambda p: [p.S(1) * p.D(2), p.D(1) ** 2],
            lambda p: [p.S(1) * p.S(2) - p.D(1), p.D(2) ** 2],
        ],
    )
    out += _ideals(
        "sqrt2_wide",
        sqrt2_wide(),
        [
            lambda p: [p.S(1) * p.D(1) + p.S(2), p.S(2) ** 2],
        ],
    )
    return out


def presentations() -> dict:
    return {
        "quantum_plane": quantum_plane(),
        "swap": swap(),
        "commutative_1_1": commutative(1, 1),
        "commutative_2_0": commutative(2, 0),
        "commutative_0_2": commutative(0, 2),
        "commutative_1_2": commutative(1, 2),
        "sqrt2_twist": sqrt2_twist(),
        "shear": shear(),
        "sqrt2_wide": sqrt2_wide(),
    }


def element_of(p: AlgebraPresentation, terms) -> Element:
    return p.element(terms)
