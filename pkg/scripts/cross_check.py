"""Compare the three Hilbert function paths on every corpus ideal.

    python3 scripts/cross_check.py [--max-t 6]
"""

import argparse

from ddgk.corpus import corpus
from ddgk.dimension import hilbert_data, hilbert_value
from ddgk.groebner import buchberger
from ddgk.oracle import oracle_hf


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-t", type=int, default=6)
    args = ap.parse_args()
    bad = 0
    for ideal in corpus():
        G = buchberger(ideal.presentation, ideal.generators)
        r = hilbert_data(G)
        rows = []
        for t in range(args.max_t + 1):
            trio = (r.value(t), hilbert_value(G, t), oracle_hf(G, t))
            rows.append(trio[1])
            bad += len(set(trio)) != 1
        gk = "-inf" if r.gk_dimension == float("-inf") else r.gk_dimension
        print(f"{ideal.name:20s} GK={gk!s:5s} h={r.hilbert_polynomial!s:24s} HF={rows}")
    print("all paths agree" if not bad else f"{bad} disagreements")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
