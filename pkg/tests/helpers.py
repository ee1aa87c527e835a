"""Random elements and small fixtures shared by the tests."""

import random

from hypothesis import strategies as st

from ddgk.algebra import monomials_of_degree
from ddgk.corpus import quantum_plane, shear, sqrt2_twist, sqrt2_wide, swap

PRESENTATIONS = {
    "quantum_plane": quantum_plane(),
    "swap": swap(),
    "sqrt2_twist": sqrt2_twist(),
    "shear": shear(),
    "sqrt2_wide": sqrt2_wide(),
}


def exps_strategy(l, max_deg=3):
    return st.lists(st.integers(0, max_deg), min_size=l, max_size=l).map(tuple)


def coeff_strategy(field):
    scalar = st.integers(-3, 3)
    return st.lists(scalar, min_size=field.degree, max_size=field.degree).map(field)


def element_strategy(p, max_terms=3, max_deg=2):
    term = st.tuples(coeff_strategy(p.field), exps_strategy(p.l, max_deg))
    return st.lists(term, max_size=max_terms).map(p.element)


def nonzero_element_strategy(p, max_terms=3, max_deg=2):
    return element_strategy(p, max_terms, max_deg).filter(bool)


def random_exps(rng: random.Random, l, max_deg):
    deg = rng.randint(0, max_deg)
    choices = list(monomials_of_degree(l, deg))
    return rng.choice(choices)


def random_coeff(rng: random.Random, field):
    while True:
        c = field([rng.randint(-3, 3) for _ in range(field.degree)])
        if c:
            return c


def random_element(rng: random.Random, p, terms=3, max_deg=3):
    return p.element((random_coeff(rng, p.field), random_exps(rng, p.l, max_deg)) for _ in range(terms))
