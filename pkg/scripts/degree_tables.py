"""Print degree, dimension and torsor tables over a grid of (p, g)."""
import argparse

from suhiggs import audit


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=4)
    ap.add_argument("--g-max", type=int, default=5)
    args = ap.parse_args()

    print(f"{'p':>2} {'g':>2} {'base':>6} {'fiber':>6} {'moduli':>6} {'torsor':>6} {'comps':>5}  stable deg F_-")
    for p in range(1, args.p_max + 1):
        for g in range(2, args.g_max + 1):
            d = audit.dimension_report(p, g)
            lo, hi = audit.stable_bounds(p, g)
            window = [f for f in range(max(lo + 1, 0), hi) if audit.stable_range(p, g, f)]
            span = f"{window[0]}..{window[-1]}" if window else "-"
            print(
                f"{p:>2} {g:>2} {d.base_dim:>6} {d.fiber_dim:>6} {d.moduli_dim:>6} "
                f"{audit.torsor_rank(p, g):>6} {audit.component_count(p, g):>5}  {span}"
            )


if __name__ == "__main__":
    main()
