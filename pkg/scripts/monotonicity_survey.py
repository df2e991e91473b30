"""Count prefix violations of non-increasing depth / S_2-depth over the small families."""
import argparse

from serredepth.verify import VerifyConfig, check_non_increasing


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-enum", type=int, default=5_000_000)
    args = ap.parse_args()
    ok, detail = check_non_increasing(VerifyConfig(max_enum=args.max_enum))
    for part in detail.split("; "):
        print(part)
    print("all non-increasing" if ok else "VIOLATION FOUND")


if __name__ == "__main__":
    main()
