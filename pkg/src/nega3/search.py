"""Candidate enumeration and verified search over the reduced parameter space.

The search walks triples (r1, r2, r3) of first rows.  Structural constraints
cut the space down hard before any linear algebra happens:

- r1 is assembled from a pool of width-n blocks that are zero or start
  with 1, in non-increasing f-value order (f reads a vector as a base-3
  integer, first entry least significant);
- r2 is drawn from the dual of the block rows of r1, r3 from the dual of
  the block rows of r1 and r2, both with f-value at most that of the
  previous row;
- every row must have weight congruent to 2 mod 3 and at least d - 1.

Dual spaces are echelonized with pivots taken from the high end, which makes
enumeration by a base-3 odometer over the coefficients visit dual vectors in
exactly ascending f order; the f-value ceilings then become simple early
exits.  run_search additionally prunes rows whose diagonal Gram identity
fails and r1 choices whose n-row subcode already contains a word below the
target weight, then verifies each survivor end to end.

Exhaustive runs shard by round-robin over r1 candidates (partition index and
total), checkpoint their cursor plus all findings atomically, and can fan
out over worker processes; results are merged in (f(r1), f(r2), f(r3))
order so the output is identical for any worker count.  Sampled runs derive
an independent generator per trial from the plan seed, so they too are
reproducible and shardable.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    InternalInconsistencyError,
    LengthMismatchError,
    NeighborCodeError,
    NeighborMembershipError,
    NeighborWeightError,
    RegistryError,
)
from .gf3 import Code, Gf3Vector, _rref_rows
from .nega import (
    CodeSpec,
    block_row_vectors,
    build_generator,
    f_value,
    row_gram_is_two,
    vector_from_f,
)
from .registry import Registry, load_registry
from .weights import count_weight, min_weight, ms_bound, near_extremal_weight

log = logging.getLogger(__name__)

_SAMPLE_TRIES_R1 = 64
_SAMPLE_TRIES_R23 = 1024


@dataclass(frozen=True)
class SearchPlan:
    """Everything that determines a search run.

    partition = (index, total) assigns this run a round-robin share of the
    r1 candidates (exhaustive) or trials (sampled).  budget is the number
    of sampled trials and is ignored in exhaustive mode.
    """

    block_size: int
    target: str = "near-extremal"  # or "extremal"
    mode: str = "exhaustive"  # or "sampled"
    seed: int = 0
    partition: tuple[int, int] = (0, 1)
    budget: int | None = None

    def __post_init__(self):
        if self.block_size < 1:
            raise ValueError("block size must be positive")
        if self.target not in ("near-extremal", "extremal"):
            raise ValueError(f"unknown target class {self.target!r}")
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        index, total = self.partition
        if total < 1 or not 0 <= index < total:
            raise ValueError(f"bad partition {self.partition}")
        if self.mode == "sampled" and (self.budget is None or self.budget < 1):
            raise ValueError("sampled mode needs a budget of at least 1")

    @property
    def length(self) -> int:
        return 6 * self.block_size

    @property
    def target_min_weight(self) -> int:
        base = near_extremal_weight(self.length)
        return base + 3 if self.target == "extremal" else base

    def to_dict(self) -> dict:
        return {
            "block_size": self.block_size,
            "target": self.target,
            "mode": self.mode,
            "seed": self.seed,
            "partition": list(self.partition),
            "budget": self.budget,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchPlan":
        return cls(
            block_size=d["block_size"],
            target=d["target"],
            mode=d["mode"],
            seed=d["seed"],
            partition=tuple(d["partition"]),
            budget=d["budget"],
        )


@dataclass(frozen=True)
class Finding:
    """One verified search result.

    kind "spec" carries the build vectors; kind "neighbor" carries the seed
    vector x and the label of the code it was applied to.  sets lists the
    names of the stored beta sets containing this beta; novelty is true
    when none do.
    """

    kind: str
    n: int
    d: int
    alpha: int
    beta: int | None
    novelty: bool
    sets: tuple[str, ...] = ()
    spec: CodeSpec | None = None
    x: tuple[int, ...] | None = None
    parent: str | None = None

    def sort_key(self) -> tuple:
        if self.spec is not None:
            return (0,) + tuple(f_value(r) for r in self.spec.rows)
        return (1, f_value(Gf3Vector(self.x or ())))

    def to_record(self) -> dict:
        rec: dict = {"kind": self.kind, "n": self.n}
        if self.spec is not None:
            rec["r1"] = self.spec.r1.entries()
            rec["r2"] = self.spec.r2.entries()
            rec["r3"] = self.spec.r3.entries()
        if self.x is not None:
            rec["x"] = list(self.x)
        if self.parent is not None:
            rec["parent"] = self.parent
        rec.update(d=self.d, alpha=self.alpha, beta=self.beta, novelty=self.novelty)
        rec["sets"] = list(self.sets)
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "Finding":
        spec = None
        if "r1" in rec:
            spec = CodeSpec.from_entry_rows([rec["r1"], rec["r2"], rec["r3"]])
        return cls(
            kind=rec["kind"],
            n=rec["n"],
            d=rec["d"],
            alpha=rec["alpha"],
            beta=rec["beta"],
            novelty=rec["novelty"],
            sets=tuple(rec.get("sets", ())),
            spec=spec,
            x=tuple(rec["x"]) if "x" in rec else None,
            parent=rec.get("parent"),
        )


def read_findings(lines) -> list[Finding]:
    """Parse a findings stream (JSON lines, blanks ignored) back into
    Finding objects.  Inverse of printing to_record() one per line."""
    out = []
    for line in lines:
        line = line.strip()
        if line:
            out.append(Finding.from_record(json.loads(line)))
    return out


# -- building blocks ----------------------------------------------------------


class _PoolVec(NamedTuple):
    f: int
    vec: Gf3Vector
    weight: int


def _block_pool(m: int) -> list[_PoolVec]:
    """All width-m vectors allowed as r1 blocks (zero or leading 1), in
    ascending f order."""
    pool = []
    for f in range(3**m):
        v = vector_from_f(m, f)
        nz = v.first_nonzero()
        if nz is None or nz[1] == 1:
            pool.append(_PoolVec(f, v, v.weight()))
    return pool


class _DualSpace:
    """Dual of a set of rows, echelonized from the high end so that the
    base-3 coefficient odometer spans dual vectors in ascending f order."""

    def __init__(self, span_rows: Sequence[Gf3Vector], width: int):
        dual = Code(width, list(span_rows)).dual()
        rows, pivots = _rref_rows(dual.basis, column_order=range(width - 1, -1, -1))
        self.width = width
        self.basis = rows[: len(pivots)]  # pivot positions strictly descending

    def ascending_f(self, limit: int) -> Iterator[Gf3Vector]:
        """Nonzero dual vectors with f-value at most limit, ascending."""
        t = len(self.basis)
        if t == 0:
            return
        digits = [0] * t  # digits[j] is the coefficient of basis[t - 1 - j]
        v = Gf3Vector.zeros(self.width)
        for _ in range(3**t - 1):
            j = 0
            while digits[j] == 2:
                digits[j] = 0
                v = v + self.basis[t - 1 - j]  # 2 -> 0 is adding 1 mod 3
                j += 1
            digits[j] += 1
            v = v + self.basis[t - 1 - j]
            if f_value(v) > limit:
                return
            yield v

    def random_member(self, rng: random.Random) -> Gf3Vector:
        v = Gf3Vector.zeros(self.width)
        for u in self.basis:
            c = rng.randrange(3)
            if c == 1:
                v = v + u
            elif c == 2:
                v = v - u
        return v


def _row_passes(v: Gf3Vector, d: int) -> bool:
    nz = v.first_nonzero()
    if nz is None or nz[1] != 1:
        return False
    w = v.weight()
    return w % 3 == 2 and w >= d - 1


def _d_prune_survives(spec_r1: Gf3Vector, m: int, d: int) -> bool:
    """Whether the subcode spanned by the n full generator rows built from
    r1 clears the target weight.  Those rows are (e_i | block row i), so the
    subcode sits inside every completed code; a light word here dooms all of
    them."""
    n6 = 6 * m
    rows = []
    for i, right in enumerate(block_row_vectors(m, spec_r1)):
        left = [0] * (3 * m)
        left[i] = 1
        rows.append(Gf3Vector(left).concat(right))
    return min_weight(Code(n6, rows), abort_below=d) >= d


# -- exhaustive engine ----------------------------------------------------------


def _iter_exhaustive(
    plan: SearchPlan,
    *,
    verified: bool,
    cursor: tuple[int | None, int | None, int | None] = (None, None, None),
    sub: tuple[int, int] = (0, 1),
) -> Iterator[tuple]:
    """Core enumeration, emitting events:

    ("spec", CodeSpec), ("r1_start", f1), ("r2_done", f1, f2), ("r1_done", f1).

    verified adds the diagonal Gram and minimum-weight prunes (sound:
    they only drop candidates that could never verify).  cursor resumes
    from checkpoint state; sub is a worker's round-robin share of this
    plan's partition.
    """
    m = plan.block_size
    width = 3 * m
    d = plan.target_min_weight
    shift = 3**m
    index, total = plan.partition
    r1_done_f, r1_active_f, r2_done_f = cursor

    pool = _block_pool(m)
    rank = 0
    slot = 0
    for x, y, z in itertools.combinations_with_replacement(pool, 3):
        w = x.weight + y.weight + z.weight
        if w % 3 != 2 or w < d - 1:
            continue
        mine = rank % total == index
        rank += 1
        if not mine:
            continue
        ours = slot % sub[1] == sub[0]
        slot += 1
        if not ours:
            continue

        b1, b2, b3 = z, y, x  # non-increasing f left to right
        f1 = b1.f + shift * b2.f + shift * shift * b3.f
        if r1_done_f is not None and f1 <= r1_done_f:
            continue
        r2_skip = r2_done_f if (r1_active_f is not None and f1 == r1_active_f) else None

        r1 = b1.vec.concat(b2.vec).concat(b3.vec)
        yield ("r1_start", f1)
        if verified and not (row_gram_is_two(m, r1) and _d_prune_survives(r1, m, d)):
            yield ("r1_done", f1)
            continue

        span1 = block_row_vectors(m, r1)
        dual1 = _DualSpace(span1, width)
        for r2 in dual1.ascending_f(limit=f1):
            if not _row_passes(r2, d):
                continue
            f2 = f_value(r2)
            if r2_skip is not None and f2 <= r2_skip:
                continue
            if verified and not row_gram_is_two(m, r2):
                yield ("r2_done", f1, f2)
                continue
            dual2 = _DualSpace(span1 + block_row_vectors(m, r2), width)
            for r3 in dual2.ascending_f(limit=f2):
                if not _row_passes(r3, d):
                    continue
                if verified and not row_gram_is_two(m, r3):
                    continue
                yield ("spec", CodeSpec(m, r1, r2, r3))
            yield ("r2_done", f1, f2)
        yield ("r1_done", f1)


# -- sampled engine -------------------------------------------------------------


def _sample_dual(
    space: _DualSpace,
    rng: random.Random,
    limit: int,
    m: int,
    d: int,
    want_self_dual: bool,
) -> Gf3Vector | None:
    for _ in range(_SAMPLE_TRIES_R23):
        v = space.random_member(rng)
        if not _row_passes(v, d):
            continue
        if f_value(v) > limit:
            continue
        if want_self_dual and not row_gram_is_two(m, v):
            continue
        return v
    return None


def _sample_spec(
    pool: list[_PoolVec], m: int, d: int, rng: random.Random, want_self_dual: bool
) -> CodeSpec | None:
    shift = 3**m
    width = 3 * m
    r1 = None
    for _ in range(_SAMPLE_TRIES_R1):
        picks = sorted(
            (pool[rng.randrange(len(pool))] for _ in range(3)),
            key=lambda p: p.f,
            reverse=True,
        )
        w = sum(p.weight for p in picks)
        if w % 3 != 2 or w < d - 1:
            continue
        cand = picks[0].vec.concat(picks[1].vec).concat(picks[2].vec)
        if want_self_dual and not row_gram_is_two(m, cand):
            continue
        r1 = cand
        f1 = picks[0].f + shift * picks[1].f + shift * shift * picks[2].f
        break
    if r1 is None:
        return None
    span1 = block_row_vectors(m, r1)
    r2 = _sample_dual(_DualSpace(span1, width), rng, f1, m, d, want_self_dual)
    if r2 is None:
        return None
    dual2 = _DualSpace(span1 + block_row_vectors(m, r2), width)
    r3 = _sample_dual(dual2, rng, f_value(r2), m, d, want_self_dual)
    if r3 is None:
        return None
    return CodeSpec(m, r1, r2, r3)


def _iter_sampled(
    plan: SearchPlan, *, want_self_dual: bool, sub: tuple[int, int] = (0, 1)
) -> Iterator[tuple[int, CodeSpec]]:
    """Yield (trial, spec) pairs.  Each trial draws from its own generator
    seeded by (plan seed, trial index), so outcomes do not depend on how
    trials are distributed over partitions or workers."""
    m = plan.block_size
    d = plan.target_min_weight
    index, total = plan.partition
    pool = _block_pool(m)
    slot = 0
    assert plan.budget is not None
    for trial in range(plan.budget):
        if trial % total != index:
            continue
        ours = slot % sub[1] == sub[0]
        slot += 1
        if not ours:
            continue
        rng = random.Random(f"{plan.seed}:{trial}")
        spec = _sample_spec(pool, m, d, rng, want_self_dual)
        if spec is not None:
            yield trial, spec


# -- public operations ----------------------------------------------------------


def enumerate_candidates(plan: SearchPlan) -> Iterator[CodeSpec]:
    """Stream the specs passing the structural constraints alone.

    No self-duality or weight filtering happens here; exhaustive mode covers
    the plan's partition completely in ascending (f(r1), f(r2), f(r3))
    order, sampled mode draws with the plan's seeded generator.
    """
    if plan.mode == "sampled":
        for _trial, spec in _iter_sampled(plan, want_self_dual=False):
            yield spec
        return
    for event in _iter_exhaustive(plan, verified=False):
        if event[0] == "spec":
            yield event[1]


def beta_set_matches(registry: Registry, length: int, beta: int | None) -> tuple[str, ...]:
    """Names of the stored beta sets at this length containing beta."""
    if beta is None:
        return ()
    return tuple(
        sorted(g.name for g in registry.sets_for_length(length) if beta in g.beta8_members())
    )


def _verify_candidate(spec: CodeSpec, plan: SearchPlan, registry: Registry) -> Finding | None:
    code = build_generator(spec)
    if not code.is_self_dual():
        raise InternalInconsistencyError("candidate passed all identities but is not self-dual")
    d = plan.target_min_weight
    if min_weight(code, abort_below=d) != d:
        return None
    alpha = count_weight(code, d)
    beta = alpha // 8 if alpha % 8 == 0 else None
    sets = beta_set_matches(registry, code.n, beta)
    return Finding(
        kind="spec", n=code.n, d=d, alpha=alpha, beta=beta,
        novelty=not sets, sets=sets, spec=spec,
    )


@dataclass
class _CheckpointState:
    plan: SearchPlan
    r1_done_f: int | None = None
    r1_active_f: int | None = None
    r2_done_f: int | None = None
    complete: bool = False
    findings: list[Finding] = field(default_factory=list)

    def cursor(self) -> tuple[int | None, int | None, int | None]:
        return (self.r1_done_f, self.r1_active_f, self.r2_done_f)

    def write(self, path: Path):
        doc = {
            "version": 1,
            "plan": self.plan.to_dict(),
            "r1_done_f": self.r1_done_f,
            "r1_active_f": self.r1_active_f,
            "r2_done_f": self.r2_done_f,
            "complete": self.complete,
            "findings": [f.to_record() for f in self.findings],
        }
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(json.dumps(doc, indent=1) + "\n")
        os.replace(tmp, path)

    @classmethod
    def load_or_new(cls, path: Path | None, plan: SearchPlan) -> "_CheckpointState":
        if path is None or not path.exists():
            return cls(plan)
        doc = json.loads(path.read_text())
        if doc.get("version") != 1:
            raise ValueError(f"unknown checkpoint version in {path}")
        if doc["plan"] != plan.to_dict():
            raise ValueError(
                f"checkpoint {path} was written for a different plan: {doc['plan']}"
            )
        state = cls(
            plan,
            r1_done_f=doc["r1_done_f"],
            r1_active_f=doc["r1_active_f"],
            r2_done_f=doc["r2_done_f"],
            complete=doc["complete"],
            findings=[Finding.from_record(r) for r in doc["findings"]],
        )
        return state


def _run_exhaustive_seq(
    plan: SearchPlan,
    registry: Registry,
    checkpoint: Path | None,
    checkpoint_every: int,
) -> Iterator[Finding]:
    state = _CheckpointState.load_or_new(checkpoint, plan)
    yield from state.findings
    if state.complete:
        return
    since_write = 0
    for event in _iter_exhaustive(plan, verified=True, cursor=state.cursor()):
        tag = event[0]
        if tag == "spec":
            finding = _verify_candidate(event[1], plan, registry)
            if finding is not None:
                state.findings.append(finding)
                yield finding
        elif tag == "r1_start":
            state.r1_active_f = event[1]
            state.r2_done_f = None
        elif tag == "r2_done":
            state.r2_done_f = event[2]
            since_write += 1
            if checkpoint is not None and since_write >= checkpoint_every:
                state.write(checkpoint)
                since_write = 0
        elif tag == "r1_done":
            state.r1_done_f = event[1]
            state.r1_active_f = None
            state.r2_done_f = None
            if checkpoint is not None:
                state.write(checkpoint)
                since_write = 0
    state.complete = True
    if checkpoint is not None:
        state.write(checkpoint)


def _run_sampled_seq(plan: SearchPlan, registry: Registry) -> Iterator[Finding]:
    found: dict[CodeSpec, Finding] = {}
    for _trial, spec in _iter_sampled(plan, want_self_dual=True):
        if spec in found:
            continue
        finding = _verify_candidate(spec, plan, registry)
        if finding is not None:
            found[spec] = finding
    yield from sorted(found.values(), key=Finding.sort_key)


def _parallel_worker(args: tuple) -> list[tuple[int, dict]]:
    plan_dict, w, workers = args
    plan = SearchPlan.from_dict(plan_dict)
    registry = load_registry()
    out: list[tuple[int, dict]] = []
    if plan.mode == "sampled":
        for trial, spec in _iter_sampled(plan, want_self_dual=True, sub=(w, workers)):
            finding = _verify_candidate(spec, plan, registry)
            if finding is not None:
                out.append((trial, finding.to_record()))
    else:
        for event in _iter_exhaustive(plan, verified=True, sub=(w, workers)):
            if event[0] == "spec":
                finding = _verify_candidate(event[1], plan, registry)
                if finding is not None:
                    out.append((0, finding.to_record()))
    return out


def _run_parallel(plan: SearchPlan, workers: int) -> Iterator[Finding]:
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_parallel_worker, (plan.to_dict(), w, workers))
            for w in range(workers)
        ]
        tagged = [pair for fut in futures for pair in fut.result()]
    if plan.mode == "sampled":
        tagged.sort(key=lambda p: p[0])
        found: dict[CodeSpec, Finding] = {}
        for _trial, rec in tagged:
            f = Finding.from_record(rec)
            assert f.spec is not None
            found.setdefault(f.spec, f)
        yield from sorted(found.values(), key=Finding.sort_key)
    else:
        findings = [Finding.from_record(rec) for _t, rec in tagged]
        yield from sorted(findings, key=Finding.sort_key)


def run_search(
    plan: SearchPlan,
    *,
    registry: Registry | None = None,
    workers: int = 1,
    checkpoint: Path | str | None = None,
    checkpoint_every: int = 1000,
) -> Iterator[Finding]:
    """Search the plan's share of the space and yield verified findings.

    Every finding is a self-dual code whose minimum weight equals the
    plan's target exactly, with its weight-d count computed under the
    covering certificate.  Output order is ascending (f(r1), f(r2), f(r3))
    regardless of mode or worker count.

    Block sizes with no self-dual codes at all (odd sizes: the code length
    is then 6 mod 12, and self-dual codes need length 0 mod 4) return an
    empty stream immediately.

    Checkpointing is supported for single-worker runs: the cursor and the
    findings so far are written atomically, and a rerun with the same plan
    and checkpoint file resumes where it stopped.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if workers > 1 and checkpoint is not None:
        raise ValueError("checkpointing requires workers=1")
    if plan.block_size % 2 == 1:
        log.warning(
            "length %d is 6 mod 12; no self-dual code of that length exists, "
            "returning an empty stream", plan.length,
        )
        return iter(())
    if workers > 1:
        return _run_parallel(plan, workers)
    if registry is None:
        registry = load_registry()
    if plan.mode == "sampled":
        return _run_sampled_seq(plan, registry)
    path = Path(checkpoint) if checkpoint is not None else None
    return _run_exhaustive_seq(plan, registry, path, checkpoint_every)


# -- neighbors ------------------------------------------------------------------


def neighbor(c: Code, x: Gf3Vector) -> Code:
    """The self-dual code spanned by x and the subcode of c orthogonal to x.

    Requires wt(x) divisible by 3 (so x is self-orthogonal), x outside c,
    and c itself self-dual; each violated clause raises its own error.
    """
    if len(x) != c.n:
        raise LengthMismatchError(f"vector length {len(x)} != code length {c.n}")
    if x.weight() % 3 != 0:
        raise NeighborWeightError(f"wt(x) = {x.weight()} is not divisible by 3")
    if not c.is_self_dual():
        raise NeighborCodeError("base code is not self-dual")
    if c.contains(x):
        raise NeighborMembershipError("x lies in the code; the neighbor would be c itself")

    scored = [(b, b.dot(x)) for b in c.basis]
    kept = [b for b, s in scored if s == 0]
    crossing = [(b, s) for b, s in scored if s != 0]
    if not crossing:
        raise InternalInconsistencyError("x orthogonal to a self-dual code but not in it")
    p, sp = crossing[0]
    for b, s in crossing[1:]:
        # b - (s / sp) p; inverses in GF(3) are 1 -> 1, 2 -> 2
        kept.append(b + p.scale((-s * sp) % 3))
    out = Code(c.n, kept + [x])
    if out.k != c.k or not out.is_self_dual():
        raise InternalInconsistencyError("neighbor construction lost self-duality")
    return out


def neighbor_sweep(
    c: Code,
    budget: int,
    seed: int,
    *,
    target: str = "near-extremal",
    registry: Registry | None = None,
    parent_label: str | None = None,
) -> Iterator[Finding]:
    """Try budget random neighbor seeds and yield the findings in the
    target class.  Seeds are drawn uniformly over vectors with weight
    divisible by 3 and outside c, by rejection; the stream is a pure
    function of (c, budget, seed)."""
    if not c.is_self_dual():
        raise NeighborCodeError("base code is not self-dual")
    if target not in ("near-extremal", "extremal"):
        raise ValueError(f"unknown target class {target!r}")
    if registry is None:
        registry = load_registry()
    d = near_extremal_weight(c.n) if target == "near-extremal" else ms_bound(c.n)
    rng = random.Random(f"{seed}")
    for _ in range(budget):
        for _attempt in range(100000):
            x = Gf3Vector(rng.randrange(3) for _ in range(c.n))
            if x.weight() % 3 != 0:
                continue
            if c.contains(x):
                log.debug("rejected x inside the code")
                continue
            break
        else:
            raise InternalInconsistencyError("rejection sampling stalled")
        ncode = neighbor(c, x)
        if min_weight(ncode, abort_below=d) != d:
            continue
        alpha = count_weight(ncode, d)
        beta = alpha // 8 if alpha % 8 == 0 else None
        sets = beta_set_matches(registry, c.n, beta)
        yield Finding(
            kind="neighbor", n=c.n, d=d, alpha=alpha, beta=beta,
            novelty=not sets, sets=sets, x=tuple(x.entries()), parent=parent_label,
        )


# -- novelty bookkeeping ----------------------------------------------------------


@dataclass(frozen=True)
class BetaStatus:
    beta: int
    prior_sets: tuple[str, ...]
    found_sets: tuple[str, ...]

    @property
    def known(self) -> bool:
        return bool(self.prior_sets or self.found_sets)


@dataclass(frozen=True)
class NoveltyReport:
    length: int
    statuses: tuple[BetaStatus, ...]
    partial_knowledge: bool
    unclassified: int  # findings whose alpha is not a multiple of 8

    def new_betas(self) -> list[int]:
        return [s.beta for s in self.statuses if not s.known]

    def summary(self) -> str:
        lines = [f"novelty at length {self.length}:"]
        for s in self.statuses:
            matched = ", ".join(s.prior_sets + s.found_sets) or "none"
            tag = "known" if s.known else "NEW"
            lines.append(f"  beta={s.beta}: {tag} (sets: {matched})")
        if self.unclassified:
            lines.append(f"  {self.unclassified} finding(s) with alpha not divisible by 8")
        if self.partial_knowledge:
            lines.append(
                "  note: stored prior knowledge for this length is incomplete; "
                "'NEW' here only means absent from the carried sets"
            )
        return "\n".join(lines)


def novelty_report(
    findings: Sequence[Finding], length: int, registry: Registry | None = None
) -> NoveltyReport:
    """Partition the betas seen at the given length into known and new,
    citing the beta sets that matched."""
    if registry is None:
        registry = load_registry()
    sets = registry.sets_for_length(length)
    if not sets:
        raise RegistryError(f"no beta bookkeeping carried for length {length}")
    betas = sorted({f.beta for f in findings if f.n == length and f.beta is not None})
    unclassified = sum(1 for f in findings if f.n == length and f.beta is None)
    statuses = []
    for beta in betas:
        prior = tuple(sorted(g.name for g in sets if g.origin == "prior" and beta in g.beta8_members()))
        found = tuple(sorted(g.name for g in sets if g.origin == "found" and beta in g.beta8_members()))
        statuses.append(BetaStatus(beta, prior, found))
    return NoveltyReport(
        length=length,
        statuses=tuple(statuses),
        partial_knowledge=not registry.prior_knowledge_complete(length),
        unclassified=unclassified,
    )
