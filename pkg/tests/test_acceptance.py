"""The ten acceptance criteria; each test prints one PASS/FAIL line."""

import random
import time
from itertools import combinations
from math import comb

import pytest
from conftest import record
from helpers import random_element, random_exps

from ddgk.algebra import standard_monomials
from ddgk.corpus import commutative, corpus, quantum_plane, shear, sqrt2_twist, swap
from ddgk.dimension import RationalPolynomial, binomial_poly, hilbert_data, hilbert_value
from ddgk.groebner import buchberger, leading, remainder, right_divides
from ddgk.modfree import ModElement, mod_buchberger
from ddgk.oracle import oracle_hf
from ddgk.ordering import OrderingSpec

TDEG = OrderingSpec()


@pytest.fixture(scope="module")
def corpus_bases():
    return [(c, buchberger(c.presentation, c.generators)) for c in corpus()]


def test_01_relation_fidelity():
    p = swap()
    S1, D1, D2 = p.S(1), p.D(1), p.D(2)
    product = D2 * S1
    lhs_ok = product == S1 * D1 and leading(product)[0] == (1, 1, 0)
    not_right = not right_divides((0, 1, 0), (1, 0, 1))
    left_factor = D1 * S1 == S1 * D2  # S1 D2 = D1 * S1, a left factorization
    ok = lhs_ok and not_right and left_factor
    assert record(1, ok, f"D2*S1 = {product}; D1 right-divides S1*D2: {not not_right}; "
                         f"S1*D2 = D1*S1: {left_factor}")


def test_02_left_admissibility():
    rng = random.Random(2024)
    presentations = {"quantum_plane": quantum_plane(), "swap": swap(),
                     "sqrt2_twist": sqrt2_twist(), "shear": shear()}
    key_violations = 0
    checked = 0
    for name, p in presentations.items():
        key = TDEG.key(p.m)
        pairs = 0
        while pairs < 1000:
            u, v = random_exps(rng, p.l, 4), random_exps(rng, p.l, 4)
            if u == v:
                continue
            if key(u) < key(v):
                u, v = v, u
            f = random_element(rng, p, rng.randint(1, 3), 3)
            if not f:
                continue
            fu, fv = f * p.monomial(u), f * p.monomial(v)
            if not key(leading(fu)[0]) > key(leading(fv)[0]):
                key_violations += 1
            pairs += 1
        checked += pairs
    ok = key_violations == 0
    assert record(2, ok, f"{checked} pairs over {len(presentations)} presentations, "
                         f"{key_violations} violations")


def test_03_spoly_criterion_and_basis(corpus_bases):
    spoly_failures = 0
    dependent_pairs = 0
    rank_failures = 0
    pairs = 0
    for ideal, G in corpus_bases:
        if not G.is_certified():
            spoly_failures += 1
        p = ideal.presentation
        stair = G.staircase()
        irr = [u for u in standard_monomials(p.l, 8) if stair.is_irreducible(u)]
        for u, v in combinations(irr, 2):
            pairs += 1
            if not remainder(p, p.monomial(u) - p.monomial(v), list(G)):
                dependent_pairs += 1
        # linear independence of the residues: the corank equals the count
        t = 8 if p.l <= 2 else 5
        if oracle_hf(G, t) != p.field.degree * sum(1 for u in irr if sum(u) <= t):
            rank_failures += 1
    ok = spoly_failures == 0 and dependent_pairs == 0 and rank_failures == 0
    assert record(3, ok, f"{len(corpus_bases)} bases: {spoly_failures} uncertified, "
                         f"{dependent_pairs}/{pairs} pairs with zero remainder, "
                         f"{rank_failures} oracle rank mismatches")


def test_04_quantum_plane_closed_form():
    start = time.perf_counter()
    p = quantum_plane(2)
    G = buchberger(p, [p.S(1) * p.D(1)])
    r = hilbert_data(G)
    h_ok = r.hilbert_polynomial == RationalPolynomial((1, 2))
    head = r.gk_dimension == 1 and r.stability_threshold == 2
    poly_ok = all(hilbert_value(G, t) == r.hilbert_polynomial(t) for t in range(2, 8))
    oracle_ok = all(oracle_hf(G, t) == hilbert_value(G, t) for t in range(8))
    elapsed = time.perf_counter() - start
    ok = h_ok and head and poly_ok and oracle_ok and elapsed < 1.0
    assert record(4, ok, f"h = {r.hilbert_polynomial}, GK = {r.gk_dimension}, "
                         f"threshold {r.stability_threshold}, {elapsed:.3f}s")


def test_05_commutative_specialization():
    p = commutative(2, 0)
    G = buchberger(p, [p.S(1) ** 2, p.S(1) * p.S(2)])
    r = hilbert_data(G)
    formula = [r.value(t) for t in range(9)]
    direct = [hilbert_value(G, t) for t in range(9)]
    oracle = [oracle_hf(G, t) for t in range(9)]
    poly_ok = all(r.hilbert_polynomial(t) == direct[t] for t in range(r.stability_threshold, 9))
    ok = (r.hilbert_polynomial == RationalPolynomial((2, 1)) and r.gk_dimension == 1
          and formula == direct == oracle and poly_ok)
    assert record(5, ok, f"h = {r.hilbert_polynomial}, GK = {r.gk_dimension}, "
                         f"HF(0..8) = {direct}")


def test_06_free_module_baselines():
    failures = []
    for m, n in [(1, 1), (2, 0), (0, 2), (1, 2)]:
        p = commutative(m, n)
        r = hilbert_data(buchberger(p, []))
        l = m + n
        if r.gk_dimension != l or r.hilbert_polynomial != binomial_poly(l) * p.field.degree:
            failures.append(f"zero ideal ({m},{n})")
    for p in (quantum_plane(), sqrt2_twist()):
        d, l = p.field.degree, p.l
        G = mod_buchberger(p, [], rank=2)
        r = hilbert_data(G)
        for t in range(6):
            expected = 2 * d * comb(t + l, l)
            if not (hilbert_value(G, t) == oracle_hf(G, t) == r.hilbert_polynomial(t) == expected):
                failures.append(f"rank-2 zero submodule d={d} t={t}")
    ok = not failures
    assert record(6, ok, "zero ideals and rank-2 zero submodules match d*binom(t+l,l) "
                         f"and 2d*binom(t+l,l); failures: {failures or 'none'}")


def test_07_module_pipeline():
    p = quantum_plane()
    G = mod_buchberger(p, [ModElement.embed(p.D(1), 0, 2), ModElement.embed(p.S(1), 1, 2)])
    r = hilbert_data(G)
    h = r.hilbert_polynomial
    values_ok = all(h(t) == hilbert_value(G, t) == oracle_hf(G, t) for t in range(7))
    ok = r.gk_dimension == 1 and h == RationalPolynomial((2, 2)) and values_ok
    assert record(7, ok, f"GK = {r.gk_dimension}, h = {h}, agreement on t in [0, 6]: {values_ok}")


def test_08_remainder_uniqueness(corpus_bases):
    rng = random.Random(88)
    mismatches = 0
    total = 0
    for ideal, G in corpus_bases:
        p = ideal.presentation
        elements = list(G)
        for _ in range(200):
            f = random_element(rng, p, rng.randint(1, 5), 5)
            a = remainder(p, f, elements, G.ordering, "first")
            b = remainder(p, f, elements, G.ordering, "last")
            total += 1
            if a != b:
                mismatches += 1
    ok = mismatches == 0
    assert record(8, ok, f"{total} random elements over {len(corpus_bases)} bases, "
                         f"{mismatches} mismatches")


def test_09_ordering_invariance():
    other = OrderingSpec("total_degree_dd", "deglex", "degrevlex")
    differing = []
    for ideal in corpus():
        p = ideal.presentation
        a = hilbert_data(buchberger(p, ideal.generators, TDEG)).gk_dimension
        b = hilbert_data(buchberger(p, ideal.generators, other)).gk_dimension
        if a != b:
            differing.append(ideal.name)
    ok = not differing
    assert record(9, ok, f"{len(corpus())} ideals under deglex/deglex vs deglex/degrevlex, "
                         f"differing: {differing or 'none'}")


def test_10_number_field_twist():
    p = sqrt2_twist()
    a = p.field.gen
    S, D = p.S(1), p.D(1)
    mul_ok = D * S == p.monomial((1, 1), -a)
    G = buchberger(p, [S * D])
    r = hilbert_data(G)
    stair = G.staircase()
    rational_counts = [
        sum(1 for u in standard_monomials(p.l, t) if stair.is_irreducible(u)) for t in range(8)
    ]
    values = [hilbert_value(G, t) for t in range(8)]
    oracle = [oracle_hf(G, t) for t in range(6)]
    double = values == [2 * c for c in rational_counts] and oracle == values[:6]
    ok = mul_ok and r.gk_dimension == 1 and double
    assert record(10, ok, f"D*S = {D * S}, GK = {r.gk_dimension}, HF = {values}, "
                          f"staircase counts {rational_counts}")

