from math import comb

import pytest

from ddgk.corpus import commutative, corpus, quantum_plane
from ddgk.dimension import hilbert_data, hilbert_value
from ddgk.errors import NonDegreeOrdering, UncertifiedBasis
from ddgk.groebner import GroebnerBasis, buchberger
from ddgk.modfree import ModElement, mod_buchberger
from ddgk.oracle import build_problem, generator_products, oracle_hf, sparse_rank
from ddgk.ordering import OrderingSpec

QP = quantum_plane()
S, D = QP.S(1), QP.D(1)


def test_quantum_plane_example():
    G = buchberger(QP, [S * D])
    assert oracle_hf(G, 3) == 7
    assert build_problem(G, 3).width == 10


def test_zero_ideal_and_unit():
    p = commutative(1, 2)
    for t in range(4):
        assert oracle_hf(buchberger(p, []), t) == comb(t + 3, 3)
        assert oracle_hf(buchberger(p, [p.one()]), t) == 0


def test_preconditions():
    with pytest.raises(NonDegreeOrdering):
        oracle_hf(buchberger(QP, [S * D], OrderingSpec("block_dd", "lex", "deglex")), 2)
    uncertified = GroebnerBasis(QP, OrderingSpec(), (S * D - S, D ** 2 - S))
    assert not uncertified.is_certified()
    with pytest.raises(UncertifiedBasis):
        oracle_hf(uncertified, 2)


def test_sparse_rank():
    assert sparse_rank([]) == 0
    assert sparse_rank([{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 3}]) == 2


@pytest.mark.parametrize("ideal", corpus(), ids=lambda c: c.name)
def test_oracle_matches_direct_count(ideal):
    G = buchberger(ideal.presentation, ideal.generators)
    bound = min(hilbert_data(G).stability_threshold + 2, 6)
    for t in range(bound + 1):
        assert oracle_hf(G, t) == hilbert_value(G, t)


def test_rows_lie_in_ideal():
    for ideal in corpus()[:6]:
        G = buchberger(ideal.presentation, ideal.generators)
        for f in generator_products(G, 3):
            assert G.contains(f.component(0))


def test_module_oracle():
    G = mod_buchberger(QP, [ModElement.embed(D, 0, 2), ModElement.embed(S, 1, 2)])
    assert [oracle_hf(G, t) for t in range(5)] == [2, 4, 6, 8, 10]
