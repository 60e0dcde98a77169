#!/usr/bin/env python3
"""Sampled survey at length 36: random corner of the build space, then a
neighbor sweep from one stored base code, then the combined novelty table.

The full space is far beyond desk scale; this script shows the machinery
at a budget that finishes over coffee.  Findings go to stdout as JSON
lines, the novelty summary to stderr.
"""

import argparse
import json
import sys

from nega3 import (
    SearchPlan,
    build_generator,
    load_registry,
    neighbor_sweep,
    novelty_report,
    run_search,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--budget", type=int, default=300,
                    help="sampled trials for the build-space survey")
    ap.add_argument("--sweep", type=int, default=20,
                    help="random seeds for the neighbor sweep")
    ap.add_argument("--base", default="C2",
                    help="registry label for the neighbor-sweep base code")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    registry = load_registry()
    plan = SearchPlan(block_size=6, mode="sampled", seed=args.seed,
                      budget=args.budget)
    findings = []
    for finding in run_search(plan, registry=registry, workers=args.workers):
        findings.append(finding)
        print(json.dumps(finding.to_record()))
    print(f"survey: {len(findings)} finding(s) in {args.budget} trials",
          file=sys.stderr)

    base = build_generator(registry.entry(args.base).spec)
    for finding in neighbor_sweep(base, args.sweep, args.seed,
                                  registry=registry, parent_label=args.base):
        findings.append(finding)
        print(json.dumps(finding.to_record()))
    print(f"after sweep of {args.base}: {len(findings)} finding(s) total",
          file=sys.stderr)

    if findings:
        print(novelty_report(findings, 36, registry).summary(), file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
