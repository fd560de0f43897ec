"""Run every randomized suite and print one timing line per suite."""

import argparse
import time

from courantkit.suites import SUITES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--verbose", action="store_true", help="print every identity")
    ap.add_argument("names", nargs="*", default=list(SUITES))
    args = ap.parse_args()
    cfg = SuiteConfig(args.seed, args.count, args.max_degree)
    failed = 0
    for name in args.names:
        t = time.perf_counter()
        rep = run_suite(name, cfg)
        secs = time.perf_counter() - t
        status = "PASS" if rep.ok else "FAIL"
        print(f"{status}  {name:<10} {len(rep.checks):>3} identities  {secs:6.2f}s")
        if args.verbose or not rep.ok:
            for c in rep.checks:
                print("    " + c.human_line())
        failed += not rep.ok
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
