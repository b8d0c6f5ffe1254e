"""Inward-turning candidate for every solution under the convexity cap."""
import argparse

from socs.census import run_census
from socs.geometry import convexity_side_cap, mu_lower_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nu", type=int, default=0)
    args = ap.parse_args()
    cap = convexity_side_cap(args.nu)
    rows = run_census(args.nu)
    print(f"nu={args.nu}: cap {cap} sides, {len(rows)} candidates")
    print(f"{'triple':>22} {'N':>4} {'k':>3} {'mu':>3} {'bound':>7}  flags")
    for r in rows:
        flags = " ".join(f for f, on in (("CONVEX", r.convex), ("crossing", r.self_intersecting),
                                         ("degenerate", r.degenerate)) if on)
        k = r.parameterized_k or "-"
        print(f"{str(r.triple):>22} {r.triple.N:>4} {k:>3} {r.mu:>3} {mu_lower_bound(r.triple.N):>7.3f}  {flags}")
    print("\nconvex:", [str(r.triple) for r in rows if r.convex])


if __name__ == "__main__":
    main()
