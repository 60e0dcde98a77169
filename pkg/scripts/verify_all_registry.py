#!/usr/bin/env python3
"""Rebuild every stored code and report d, alpha, beta with timings.

Equivalent to `nega3 verify --all` plus per-entry wall times, so slow
entries are easy to spot when the data files grow.
"""

import argparse
import sys
import time

from nega3 import (
    build_generator,
    classify,
    count_weight,
    is_self_dual,
    load_registry,
    min_weight,
    neighbor,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only-length", type=int, default=None,
                    help="restrict to entries of one code length")
    args = ap.parse_args()

    registry = load_registry()
    failures = 0
    for label, entry in registry.entries.items():
        if args.only_length is not None and entry.length != args.only_length:
            continue
        t0 = time.time()
        if entry.kind == "neighbor-vector":
            parent = registry.entry(entry.parent)
            code = neighbor(build_generator(parent.spec), entry.x)
            head = f"{label} (neighbor of {entry.parent})"
        else:
            if not is_self_dual(entry.spec):
                print(f"{label}: FAIL not self-dual")
                failures += 1
                continue
            code = build_generator(entry.spec)
            head = label
        d = min_weight(code)
        alpha = count_weight(code, d)
        cls = classify(code).value
        ok = True
        if entry.expected_d is not None and d != entry.expected_d:
            ok = False
        if entry.expected_beta is not None and alpha != 8 * entry.expected_beta:
            ok = False
        failures += 0 if ok else 1
        beta = alpha // 8 if alpha % 8 == 0 else "n/a"
        status = "ok" if ok else "MISMATCH"
        print(f"{head}: [{code.n},{code.k}] d={d} alpha={alpha} beta={beta} "
              f"{cls} {status} ({time.time() - t0:.1f}s)")
    print(f"{failures} failure(s)", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
