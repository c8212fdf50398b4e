"""Compare the SU(2,1) diagonal family against its displayed invariants."""
import argparse

from suhiggs.cameral import su21_paper_example


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--range", type=int, default=3, help="scan l, l' in [-R, R]")
    args = ap.parse_args()
    r = args.range
    mismatches = 0
    for l in range(-r, r + 1):
        for lp in range(-r, r + 1):
            rep = su21_paper_example(l, lp)
            mismatches += not (rep.sigma2_matches and rep.sigma3_matches)
    print(f"(l, l') grid of {(2 * r + 1) ** 2}: {mismatches} points where displayed sigma2/sigma3 differ")
    rep = su21_paper_example(1, 0)
    print(f"at (1, 0): eigenvalues {' '.join(map(str, rep.eigenvalues))}")
    print(f"  sigma2 {rep.sigma2} (displayed {rep.displayed_sigma2}), sigma3 {rep.sigma3} (displayed {rep.displayed_sigma3})")
    for c in rep.subcovers:
        print(
            f"  {c.label}: locus {c.locus} (displayed {c.displayed_locus}), involution {c.involution}, "
            f"swaps {c.involution_swaps}, displayed locus in fiber {c.displayed_locus_in_fiber}"
        )


if __name__ == "__main__":
    main()
