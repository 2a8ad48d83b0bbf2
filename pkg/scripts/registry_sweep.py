"""Run the full law suite over every registered instance and tabulate
which laws fail, against each instance's declared expectations."""
import argparse
import time

from travlaw.lawcheck import LAWS, REGISTRY, failing_laws, run_suite
from travlaw.reports import GenerationBudget


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--size", type=int, default=3)
    p.add_argument("--only", nargs="*", default=None, help="instance names")
    args = p.parse_args()
    budget = GenerationBudget(max_structure_size=args.size)

    width = max(map(len, REGISTRY))
    print(f"{'instance':{width}}  " + "  ".join(f"{law[:6]:6}" for law in LAWS) + "  secs  match")
    for name, T in REGISTRY.items():
        if args.only and name not in args.only:
            continue
        start = time.perf_counter()
        reports = run_suite(T, budget)
        elapsed = time.perf_counter() - start
        failed = failing_laws(reports)
        cells = "  ".join(f"{'FAIL' if law in failed else 'ok':6}" for law in LAWS)
        match = "yes" if failed == set(T.expected_failures) else "NO"
        print(f"{name:{width}}  {cells}  {elapsed:4.1f}  {match}")


if __name__ == "__main__":
    main()
