#!/usr/bin/env python3
"""Run the verification campaigns and print their reports.

The default scales match the acceptance suite; --quick trims them to a
smoke-test size.  Exit status is non-zero if any campaign records a
mismatch.
"""

import argparse
import sys

from planarcert.harness import (
    verify_chartrand_harary,
    verify_kuratowski,
    verify_kuratowski_classes,
    verify_lemma_characterization,
    verify_lifting,
    verify_menger_cubic,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="reduced scales")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument(
        "--skip-classes",
        action="store_true",
        help="skip the n=7 isomorphism-class sweep (the slowest stage)",
    )
    args = parser.parse_args()

    max_n = 5 if args.quick else 6
    samples = 100 if args.quick else 500
    lift_samples = 100 if args.quick else 1000

    reports = [
        verify_kuratowski(max_n),
        verify_lemma_characterization(max_n),
        verify_chartrand_harary(max_n),
        verify_menger_cubic(samples, seed=args.seed),
        verify_lifting(lift_samples, seed=args.seed),
    ]
    if not args.quick and not args.skip_classes:
        reports.append(verify_kuratowski_classes(7))

    for report in reports:
        print(report.render_text())
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
