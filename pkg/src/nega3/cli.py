"""Command-line surface: construct, verify, search, sweep, report.

Exit codes are part of the interface and stay stable:

    0  success
    1  a verification failed (non-self-dual spec, wrong d or beta,
       neighbor precondition violated)
    2  usage error (bad flags, unknown label, unsupported size, malformed
       input file)
    3  resource guard: the request implies a computation past the default
       budget; the printed message carries the estimate and the flag that
       overrides it

Machine-readable output (one JSON object per line) goes to stdout; all
human-facing summaries go to stderr, so pipelines can consume findings
without scraping.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .errors import (
    GuardError,
    NeighborError,
    NeighborMembershipError,
    RegistryError,
    VectorFileError,
)
from .gf3 import Code, Gf3Vector
from .gleason import alpha_constraint, near_extremal_family
from .nega import CodeSpec, build_generator, self_dual_violations
from .registry import Registry, RegistryEntry, ingest_vector_file, load_registry
from .search import (
    Finding,
    SearchPlan,
    beta_set_matches,
    neighbor,
    neighbor_sweep,
    novelty_report,
    run_search,
)
from .weights import (
    ExtremalityClass,
    classify,
    count_weight,
    full_distribution,
    min_weight,
)


class _Usage(Exception):
    pass


def _emit(record: dict):
    print(json.dumps(record), flush=True)


def _say(text: str):
    print(text, file=sys.stderr)


# -- verify -----------------------------------------------------------------


def _class_word(c: ExtremalityClass) -> str:
    return {
        ExtremalityClass.EXTREMAL: "extremal",
        ExtremalityClass.NEAR_EXTREMAL: "near-extremal",
        ExtremalityClass.NEITHER: "neither extremal nor near-extremal",
    }[c]


def _gleason_check(code: Code, d: int, alpha: int, cls: ExtremalityClass,
                   deep: bool, allow_long: bool) -> str | None:
    """Cross-check the measured counts against the enumerator family.

    Returns a verdict string, or None when no family applies at this
    length/class.  deep compares the complete distribution; the default
    checks what is cheap: the admissible-count range for near-extremal
    codes, the forced count at d for extremal ones.
    """
    n = code.n
    if n % 12 or cls is ExtremalityClass.NEITHER:
        return None
    family = near_extremal_family(n)
    expected_alpha = 0 if cls is ExtremalityClass.EXTREMAL else alpha
    if deep:
        dist = full_distribution(code, allow_long=allow_long)
        poly = family.at(expected_alpha)
        ok = all(dist.counts.get(e, 0) == c for e, c in poly.items()) and all(
            c == 0 for w, c in dist.counts.items() if w not in poly.coeffs
        )
        return "Gleason-consistent (full distribution)" if ok else "GLEASON MISMATCH"
    if cls is ExtremalityClass.EXTREMAL:
        want = family.at(0).coefficient(d)
        return "Gleason-consistent" if alpha == want else "GLEASON MISMATCH"
    try:
        rng = alpha_constraint(n)
    except ValueError:
        return None
    return "Gleason-consistent" if rng.contains_alpha(alpha) else "GLEASON MISMATCH"


def _verify_spec_entry(entry: RegistryEntry, deep: bool, allow_long: bool) -> tuple[bool, str]:
    assert entry.spec is not None
    bad = self_dual_violations(entry.spec)
    if bad:
        pairs = ", ".join(f"({i},{j})" for i, j in bad)
        return False, f"FAIL: not self-dual; failing block identities at {pairs}"
    code = build_generator(entry.spec)
    d = min_weight(code)
    alpha = count_weight(code, d)
    cls = classify(code)
    parts = ["self-dual", f"d={d}", f"alpha={alpha}"]
    ok = True
    if alpha % 8 == 0:
        parts.append(f"beta={alpha // 8}")
    parts.append(_class_word(cls))
    if entry.expected_d is not None and d != entry.expected_d:
        ok = False
        parts.append(f"FAIL: expected d={entry.expected_d}")
    if entry.expected_beta is not None and alpha != 8 * entry.expected_beta:
        ok = False
        parts.append(f"FAIL: expected beta={entry.expected_beta}")
    verdict = _gleason_check(code, d, alpha, cls, deep, allow_long)
    if verdict is not None:
        parts.append(verdict)
        ok = ok and not verdict.startswith("GLEASON")
    return ok, ", ".join(parts)


def _verify_neighbor_entry(entry: RegistryEntry, registry: Registry,
                           deep: bool, allow_long: bool) -> tuple[bool, str]:
    assert entry.x is not None and entry.parent is not None
    parent = registry.entry(entry.parent)
    if parent.spec is None:
        return False, f"FAIL: parent {entry.parent} is not a code spec"
    code = neighbor(build_generator(parent.spec), entry.x)
    d = min_weight(code)
    alpha = count_weight(code, d)
    cls = classify(code)
    parts = [f"neighbor of {entry.parent}", f"d={d}", f"alpha={alpha}"]
    ok = True
    if alpha % 8 == 0:
        parts.append(f"beta={alpha // 8}")
    parts.append(_class_word(cls))
    if entry.expected_d is not None and d != entry.expected_d:
        ok = False
        parts.append(f"FAIL: expected d={entry.expected_d}")
    if entry.expected_beta is not None and alpha != 8 * entry.expected_beta:
        ok = False
        parts.append(f"FAIL: expected beta={entry.expected_beta}")
    verdict = _gleason_check(code, d, alpha, cls, deep, allow_long)
    if verdict is not None:
        parts.append(verdict)
        ok = ok and not verdict.startswith("GLEASON")
    return ok, ", ".join(parts)


def cmd_verify(args) -> int:
    registry = load_registry()
    todo: list[RegistryEntry] = []
    if args.all:
        todo.extend(registry.entries.values())
    for label in args.registry or ():
        todo.append(registry.entry(label))
    if args.file is not None:
        todo.extend(ingest_vector_file(args.file))
    if not todo:
        raise _Usage("nothing to verify: pass --registry LABEL, --file PATH or --all")

    all_ok = True
    for entry in todo:
        if entry.kind == "neighbor-vector":
            ok, text = _verify_neighbor_entry(entry, registry, args.deep, args.allow_long)
        else:
            ok, text = _verify_spec_entry(entry, args.deep, args.allow_long)
        all_ok = all_ok and ok
        print(f"{entry.label}: {text}", flush=True)
    return 0 if all_ok else 1


# -- search -----------------------------------------------------------------


def _parse_partition(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)/(\d+)", text.strip())
    if not m:
        raise _Usage(f"partition must look like INDEX/TOTAL, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def cmd_search(args) -> int:
    if args.n < 1:
        raise _Usage("block size must be positive")
    if args.n % 2 == 1:
        _say(
            f"refusing: block size {args.n} gives length {6 * args.n}, which is "
            "2 mod 4; ternary self-dual codes exist only for lengths divisible "
            "by 4, so there is nothing to search"
        )
        return 2
    if args.mode == "sampled" and args.seed is None:
        raise _Usage("sampled mode requires --seed (no wall-clock seeding)")
    if args.mode == "sampled" and args.budget is None:
        raise _Usage("sampled mode requires --budget")
    try:
        plan = SearchPlan(
            block_size=args.n,
            target=args.target,
            mode=args.mode,
            seed=args.seed if args.seed is not None else 0,
            partition=_parse_partition(args.partition),
            budget=args.budget,
        )
    except ValueError as exc:
        raise _Usage(str(exc)) from None

    registry = load_registry()
    findings: list[Finding] = []
    for finding in run_search(
        plan, registry=registry, workers=args.workers, checkpoint=args.checkpoint
    ):
        findings.append(finding)
        _emit(finding.to_record())

    _say(f"search complete: {len(findings)} finding(s)")
    if findings:
        try:
            _say(novelty_report(findings, plan.length, registry).summary())
        except RegistryError as exc:
            _say(f"novelty not assessed: {exc}")
    return 0


# -- gleason ----------------------------------------------------------------


def cmd_gleason(args) -> int:
    try:
        family = near_extremal_family(args.n)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    exponents = range(0, args.n + 1, 3)
    if args.alpha is None:
        for e in exponents:
            print(f"{e} {family.base.coefficient(e)} {family.direction.coefficient(e)}")
        return 0
    poly = family.at(args.alpha)
    for e in exponents:
        print(f"{e} {poly.coefficient(e)}")
    negative = poly.negative_exponents()
    if negative:
        _say(
            f"alpha={args.alpha} is infeasible: negative coefficients at weights "
            + ", ".join(str(e) for e in negative)
        )
    try:
        rng = alpha_constraint(args.n)
        _say(
            f"admissible counts at length {args.n}: alpha = {rng.divisor} * beta, "
            f"beta in [{rng.beta_min}, {rng.beta_max}]"
        )
    except ValueError:
        pass
    return 0


# -- neighbor ---------------------------------------------------------------


def _digits_vector(text: str) -> Gf3Vector:
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if not tokens or any(t not in ("0", "1", "2") for t in tokens):
        raise _Usage("--x takes space- or comma-separated digits in {0,1,2}")
    return Gf3Vector(int(t) for t in tokens)


def _parent_spec(args, registry: Registry) -> tuple[str, CodeSpec]:
    if args.registry is not None:
        entry = registry.entry(args.registry)
        if entry.spec is None:
            raise _Usage(f"{args.registry} is not a code spec")
        return entry.label, entry.spec
    if args.file is not None:
        entries = ingest_vector_file(args.file)
        if not entries:
            raise _Usage(f"{args.file} holds no spec records")
        assert entries[0].spec is not None
        return str(args.file), entries[0].spec
    raise _Usage("pass --registry LABEL or --file PATH for the base code")


def cmd_neighbor(args) -> int:
    registry = load_registry()
    parent_label, spec = _parent_spec(args, registry)
    code = build_generator(spec)

    if args.sweep is not None:
        if args.seed is None:
            raise _Usage("--sweep requires --seed (no wall-clock seeding)")
        findings = []
        for finding in neighbor_sweep(
            code, args.sweep, args.seed,
            target=args.target, registry=registry, parent_label=parent_label,
        ):
            findings.append(finding)
            _emit(finding.to_record())
        _say(f"sweep complete: {len(findings)} finding(s) in {args.sweep} trials")
        if findings:
            _say(novelty_report(findings, code.n, registry).summary())
        return 0

    if args.x_registry is not None:
        entry = registry.entry(args.x_registry)
        if entry.x is None:
            raise _Usage(f"{args.x_registry} is not a neighbor seed vector")
        x = entry.x
    elif args.x is not None:
        x = _digits_vector(args.x)
    else:
        raise _Usage("pass --x-registry LABEL, --x DIGITS or --sweep BUDGET")

    ncode = neighbor(code, x)
    d = min_weight(ncode)
    alpha = count_weight(ncode, d)
    beta = alpha // 8 if alpha % 8 == 0 else None
    sets = beta_set_matches(registry, ncode.n, beta)
    finding = Finding(
        kind="neighbor", n=ncode.n, d=d, alpha=alpha, beta=beta,
        novelty=not sets, sets=sets, x=tuple(x.entries()), parent=parent_label,
    )
    _emit(finding.to_record())
    known = ", ".join(sets) if sets else "none"
    _say(
        f"neighbor of {parent_label}: d={d}, alpha={alpha}, "
        f"beta={beta if beta is not None else 'n/a'}, matching sets: {known}"
    )
    return 0


# -- plumbing -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nega3",
        description="Ternary self-dual codes from negacirculant block tilings.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("verify", help="rebuild stored codes and check d, alpha, beta")
    p.add_argument("--registry", action="append", metavar="LABEL",
                   help="registry label to verify (repeatable)")
    p.add_argument("--file", type=Path, help="plain vector file to verify")
    p.add_argument("--all", action="store_true", help="verify every registry entry")
    p.add_argument("--deep", action="store_true",
                   help="compare the complete weight distribution against the enumerator family")
    p.add_argument("--allow-long", action="store_true",
                   help="run computations past the default budget")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search first-row triples for codes in the target class")
    p.add_argument("--n", type=int, required=True, help="block size (code length is 6n)")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--target", choices=("near-extremal", "extremal"), default="near-extremal")
    p.add_argument("--seed", type=int, help="base seed (required in sampled mode)")
    p.add_argument("--budget", type=int, help="number of sampled trials")
    p.add_argument("--partition", default="0/1", metavar="I/N",
                   help="process share I of N round-robin shares (default 0/1)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint", type=Path,
                   help="cursor file for resumable runs (single worker only)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gleason", help="print the enumerator family for a length")
    p.add_argument("--n", type=int, required=True, help="code length (multiple of 12)")
    p.add_argument("--alpha", type=int,
                   help="evaluate the family at this minimum-weight count")
    p.set_defaults(func=cmd_gleason)

    p = sub.add_parser("neighbor", help="build and classify neighboring self-dual codes")
    p.add_argument("--registry", metavar="LABEL", help="base code label")
    p.add_argument("--file", type=Path, help="vector file with the base code spec")
    p.add_argument("--x-registry", metavar="LABEL", help="stored seed vector label")
    p.add_argument("--x", metavar="DIGITS", help="seed vector as digits in {0,1,2}")
    p.add_argument("--sweep", type=int, metavar="BUDGET",
                   help="try BUDGET random seed vectors instead of a single one")
    p.add_argument("--seed", type=int, help="sweep seed (required with --sweep)")
    p.add_argument("--target", choices=("near-extremal", "extremal"),
                   default="near-extremal", help="class kept by the sweep")
    p.set_defaults(func=cmd_neighbor)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        code = exc.code
        return code if isinstance(code, int) else 2
    if getattr(args, "func", None) is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        return args.func(args)
    except _Usage as exc:
        _say(f"usage error: {exc}")
        return 2
    except GuardError as exc:
        _say(f"refused (resource guard): {exc}")
        return 3
    except NeighborMembershipError as exc:
        _say(f"x in C: {exc}")
        return 1
    except NeighborError as exc:
        _say(f"neighbor precondition failed: {exc}")
        return 1
    except (RegistryError, VectorFileError) as exc:
        _say(f"error: {exc}")
        return 2
    except ValueError as exc:
        _say(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
