#!/usr/bin/env python3
"""Sweep finiteness certificates over (r, f) and report sizes and timings.

Builds the certificate at the default window 2f+2 for every supported
pair, verifies it by full re-expansion, and prints one row per case.
Use --max-r / --max-f to restrict, --window to override the window.
"""

import argparse
import time

from basechange.finiteness import WindowTooSmall, finiteness_certificate


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-r", type=int, default=3)
    parser.add_argument("--max-f", type=int, default=3)
    parser.add_argument("--window", type=int, default=None)
    args = parser.parse_args()

    print(f"{'r':>2} {'f':>2} {'window':>6} {'gens':>5} {'targets':>7} "
          f"{'maxcoef':>7} {'verified':>8} {'seconds':>8}")
    for r in range(1, args.max_r + 1):
        for f in range(2, args.max_f + 1):
            window = args.window if args.window is not None else 2 * f + 2
            start = time.perf_counter()
            try:
                cert = finiteness_certificate(r, f, window)
            except WindowTooSmall as exc:
                print(f"{r:>2} {f:>2} {window:>6}  window too small "
                      f"(suggested {exc.suggested_window})")
                continue
            verified = cert.verify()
            elapsed = time.perf_counter() - start
            print(f"{r:>2} {f:>2} {window:>6} {len(cert.generators):>5} "
                  f"{len(cert.reductions):>7} {cert.max_coefficient_exponent():>7} "
                  f"{str(verified):>8} {elapsed:>8.2f}")


if __name__ == "__main__":
    main()
