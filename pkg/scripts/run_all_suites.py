#!/usr/bin/env python3
"""Run every verification suite at its default bound and summarize.

Exit status is 0 iff all suites pass.  Worker count comes from --jobs or
the LW_JOBS environment variable.
"""

import argparse
import os
import sys

from liewords import suites


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--jobs", type=int, default=int(os.environ.get("LW_JOBS", "1"))
    )
    parser.add_argument("--alphabet", default="ab")
    args = parser.parse_args()

    names = list(suites.SUITES) + ["tabloid-theorem3"]
    failed = []
    for name in names:
        report = suites.run_suite(name, alphabet=args.alphabet, jobs=args.jobs)
        status = "pass" if report.ok else f"FAIL ({len(report.failures)})"
        print(f"{name:20s} {report.cases:7d} cases  {report.millis:6d} ms  {status}")
        for line in report.failures[:5]:
            print(f"    {line}")
        if len(report.failures) > 5:
            print(f"    ... and {len(report.failures) - 5} more")
        if not report.ok:
            failed.append(name)
    if failed:
        print(f"failing suites: {', '.join(failed)}")
        return 1
    print("all suites pass")
    return 0


if __name__ == "__main__":
    sys.exit(main())
