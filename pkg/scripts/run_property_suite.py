"""Run the seeded property suite and write the machine report to a file."""
import argparse
import sys
from pathlib import Path

from suhiggs.cli import emit_report
from suhiggs.properties import run_property_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--out", type=Path, default=Path("property_suite.json"))
    args = ap.parse_args()

    summary = run_property_suite(args.seed, args.p, args.trials)
    args.out.write_text(emit_report("property-suite", summary.to_dict()))
    for name, (ok, bad) in sorted(summary.counts.items()):
        print(f"{name:28s} {ok:5d} ok {bad:3d} failed")
    print(f"report written to {args.out}")
    return 0 if summary.ok else 1


if __name__ == "__main__":
    sys.exit(main())
