"""Depth and S_2-depth sequences of S/I^(l) for the shellable counterexample family."""
import argparse
import time

from serredepth.complex_core import counterexample_complex, is_pure, is_shellable
from serredepth.hochster import depth
from serredepth.symbolic import symbolic_depth, symbolic_serre_depth


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--max", type=int, default=5)
    ap.add_argument("--max-enum", type=int, default=5_000_000)
    args = ap.parse_args()

    cx = counterexample_complex(args.d)
    found, _ = is_shellable(cx)
    print(f"d={args.d}: n={cx.n}, facets={len(cx.facets)}, pure={is_pure(cx)}, shellable={found}, depth={depth(cx)}")
    print(f"{'l':>3} {'depth':>6} {'S2-depth':>9} {'secs':>6}")
    for ell in range(1, args.max + 1):
        t = time.perf_counter()
        d = symbolic_depth(cx, ell, max_enum=args.max_enum)
        s2 = symbolic_serre_depth(cx, ell, 2, max_enum=args.max_enum)
        print(f"{ell:>3} {d:>6} {s2:>9} {time.perf_counter() - t:>6.1f}", flush=True)


if __name__ == "__main__":
    main()
