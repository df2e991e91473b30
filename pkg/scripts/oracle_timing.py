"""Wall time of the Takayama enumeration against polarization plus Hochster on random complexes."""
import argparse
import random
import time

from serredepth.monomials import depth_monomial, sr_ideal, symbolic_power
from serredepth.symbolic import symbolic_depth
from serredepth.verify import random_pure_complex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=2026)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    tot_a = tot_b = 0.0
    for k in range(args.count):
        cx = random_pure_complex(rng)
        ell = rng.choice([2, 3])
        t = time.perf_counter()
        a = symbolic_depth(cx, ell)
        ta = time.perf_counter() - t
        t = time.perf_counter()
        b = depth_monomial(symbolic_power(sr_ideal(cx), ell))
        tb = time.perf_counter() - t
        tot_a, tot_b = tot_a + ta, tot_b + tb
        flag = "" if a == b else "  MISMATCH"
        print(f"{k:>3} n={cx.n} l={ell} depth={a}/{b} takayama {ta:.3f}s polarization {tb:.3f}s{flag}", flush=True)
    print(f"total: takayama {tot_a:.1f}s, polarization {tot_b:.1f}s")


if __name__ == "__main__":
    main()
