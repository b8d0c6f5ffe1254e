"""Print every solution with c - a <= 33 and the non-parameterized ones up to 10048."""
import argparse
import time

from socs import enumerate_up_to
from socs.core import classify_parameterized


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--small", type=int, default=33)
    ap.add_argument("--large", type=int, default=10048)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    small = enumerate_up_to(args.small)
    print(f"all solutions with c - a <= {args.small}: {len(small)}")
    for t in small:
        k = classify_parameterized(t)
        print(f"  {t}" + (f"  k={k}" if k else ""))

    t0 = time.perf_counter()
    large = enumerate_up_to(args.large, workers=args.workers)
    odd = [t for t in large if classify_parameterized(t) is None]
    print(f"\nnon-parameterized with c - a <= {args.large}: {len(odd)} "
          f"(of {len(large)}, {time.perf_counter() - t0:.2f}s)")
    for t in odd:
        print(f"  {t}  N={t.N}  {'even' if t.N % 2 == 0 else 'odd'}")


if __name__ == "__main__":
    main()
