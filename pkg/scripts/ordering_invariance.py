"""GK dimension of each corpus ideal under every total-degree ordering."""

from ddgk.corpus import corpus
from ddgk.dimension import hilbert_data
from ddgk.groebner import buchberger
from ddgk.ordering import OrderingSpec

ORDERINGS = [
    OrderingSpec("total_degree_dd", s, d)
    for s in ("lex", "deglex", "degrevlex")
    for d in ("deglex", "degrevlex")
]


def main():
    varying = 0
    for ideal in corpus():
        dims = [
            hilbert_data(buchberger(ideal.presentation, ideal.generators, o)).gk_dimension
            for o in ORDERINGS
        ]
        varying += len(set(dims)) != 1
        print(f"{ideal.name:20s} {dims}")
    print("invariant" if not varying else f"{varying} ideals vary")
    return 1 if varying else 0


if __name__ == "__main__":
    raise SystemExit(main())
