"""Audits of bad-sequence validity.

``verify_explicit_sequence`` replays the two defining conditions (vertex
budgets, no earlier member inf-embedding into a later one) on materialized
trees, pair by pair. ``verify_phases`` audits a phase-encoded sequence
symbolically: every ordered pair of positions falls into a named pair class
decided by family-level arguments in O(#phases^2 * #sweeps) exact integer
arithmetic, independent of the sequence length. ``cross_validate``
materializes the small members and checks that the explicit and symbolic
verdicts coincide on every covered pair.

A verdict of "valid" means both violation lists are empty and no pair class
was left undecided; "inconclusive" flags classes the family rules cannot
settle. Violations are findings, not errors.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .construction import (
    DescriptorListPhase,
    LegRunPhase,
    LegState,
    Phase,
    SequenceDescription,
    label_of,
    simulate_leg_elimination,
)
from .embedding import EmbeddingWitness, inf_embeds, inf_embeds_witness
from .errors import CapacityError, ConstructionError
from .families import (
    Chain,
    TreeDescriptor,
    TwoLeg,
    descriptor_size,
    expand,
    family_embeds,
    format_descriptor,
    recognize_family,
)
from .trees import RootedTree, parse_tree

CLEAR = "clear"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

VALID = "valid"
INVALID = "invalid"

MAX_LISTED_PER_CLASS = 24


@dataclass(frozen=True)
class BudgetViolation:
    position: int
    size: int
    budget: int


@dataclass(frozen=True)
class EmbeddingViolation:
    earlier: int
    later: int
    witness: EmbeddingWitness | None
    detail: str


@dataclass(frozen=True)
class PairClassResult:
    """Outcome for one class of ordered position pairs."""

    name: str
    pairs: int
    status: str
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    verdict: str
    checked_pairs: int
    budget_violations: tuple[BudgetViolation, ...]
    embedding_violations: tuple[EmbeddingViolation, ...]
    pair_classes: tuple[PairClassResult, ...] = ()
    notes: tuple[str, ...] = ()


def _verdict(
    budget: Sequence[BudgetViolation],
    embeddings: Sequence[EmbeddingViolation],
    classes: Sequence[PairClassResult],
) -> str:
    if budget or embeddings or any(c.status == VIOLATED for c in classes):
        return INVALID
    if any(c.status == INCONCLUSIVE for c in classes):
        return INCONCLUSIVE
    return VALID


# ---------------------------------------------------------------------------
# explicit checking


def _pair_scan_rows(args: tuple[list[str], list[int]]) -> list[tuple[int, int, tuple]]:
    codes, rows = args
    trees = [parse_tree(c) for c in codes]
    found: list[tuple[int, int, tuple]] = []
    for i in rows:
        earlier = trees[i]
        for j in range(i + 1, len(trees)):
            if inf_embeds(earlier, trees[j]):
                witness = inf_embeds_witness(earlier, trees[j])
                found.append((i, j, witness.pairs if witness else ()))
    return found


def _pairwise_embeddings(trees: Sequence[RootedTree], jobs: int) -> list[tuple[int, int, EmbeddingWitness | None]]:
    """All index pairs i < j where trees[i] inf-embeds into trees[j], with witnesses."""
    m = len(trees)
    if jobs <= 1 or m < 8:
        out = []
        for i in range(m):
            for j in range(i + 1, m):
                if inf_embeds(trees[i], trees[j]):
                    out.append((i, j, inf_embeds_witness(trees[i], trees[j])))
        return out
    codes = [t.code for t in trees]
    chunks = [(codes, [i for i in range(m) if i % jobs == w]) for w in range(jobs)]
    found: list[tuple[int, int, tuple]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_pair_scan_rows, chunks):
            found.extend(part)
    found.sort()
    return [(i, j, EmbeddingWitness(w) if w else None) for i, j, w in found]


def verify_explicit_sequence(
    trees: Sequence[RootedTree], n: int, jobs: int = 1
) -> VerificationReport:
    """Check budgets (size of the k-th tree at most k + n) and pairwise non-embedding."""
    trees = list(trees)
    if not trees:
        raise ValueError("cannot verify an empty sequence")
    if n < 0:
        raise ValueError("slack must be nonnegative")
    budget = tuple(
        BudgetViolation(k, t.size, k + n)
        for k, t in enumerate(trees, start=1)
        if t.size > k + n
    )
    embeddings = tuple(
        EmbeddingViolation(i + 1, j + 1, w, f"{trees[i].code} into {trees[j].code}")
        for i, j, w in _pairwise_embeddings(trees, jobs)
    )
    m = len(trees)
    return VerificationReport(
        mode="explicit",
        verdict=_verdict(budget, embeddings, ()),
        checked_pairs=m * (m - 1) // 2,
        budget_violations=budget,
        embedding_violations=embeddings,
    )


# ---------------------------------------------------------------------------
# symbolic checking


def _phase_tag(phase: Phase) -> str:
    if isinstance(phase, DescriptorListPhase):
        return "descriptors"
    if isinstance(phase, LegRunPhase):
        return "leg-run"
    return "chain-countdown"


def _shape_of(d: TreeDescriptor) -> Chain | TwoLeg | None:
    """Chain/TwoLeg view of a descriptor, or None for trees with 3+ leaves."""
    if isinstance(d, (Chain, TwoLeg)):
        return d
    return recognize_family(d.tree)


def _pairs_of(count: int) -> int:
    return count * (count - 1) // 2


def _budget_violations(phase: Phase) -> list[BudgetViolation]:
    out: list[BudgetViolation] = []
    if isinstance(phase, DescriptorListPhase):
        for off, d in enumerate(phase.descriptors):
            pos = phase.start_position + off
            size = descriptor_size(d)
            if size > label_of(pos):
                out.append(BudgetViolation(pos, size, label_of(pos)))
    elif isinstance(phase, LegRunPhase):
        stem = phase.run.initial.stem
        for sw in phase.run.sweeps:
            if stem + sw.ext_left + sw.right != sw.first_label:
                raise ConstructionError("run extension does not fill its budget")
        # within a sweep sizes fall while labels rise, so the extension is extremal
    else:
        overshoot = phase.start_length - label_of(phase.start_position)
        count = min(max(0, (overshoot + 1) // 2), phase.length)
        for off in range(min(count, MAX_LISTED_PER_CLASS)):
            pos = phase.start_position + off
            out.append(BudgetViolation(pos, phase.start_length - off, label_of(pos)))
    return out


def _run_positions_head(phase: LegRunPhase, sweep_idx: int, count: int) -> list[int]:
    sw = phase.run.sweeps[sweep_idx]
    base = phase.start_position + sw.first_step - 1
    return [base + off for off in range(count)]


def _member_into_run(shape: Chain | TwoLeg | None, run_phase: LegRunPhase) -> tuple[int, list[tuple[int, str]]]:
    """Count run states the shape embeds into; list the first violating positions."""
    run = run_phase.run
    stem = run.initial.stem
    total = 0
    listed: list[tuple[int, str]] = []
    if shape is None:
        return 0, []
    for idx, sw in enumerate(run.sweeps):
        if isinstance(shape, Chain):
            lo = max(shape.length - stem, sw.right)
        else:
            if shape.stem > stem or sw.right < shape.right:
                continue
            lo = max(shape.left, sw.right)
        if lo > sw.ext_left:
            continue
        count = sw.ext_left - lo + 1
        total += count
        for pos in _run_positions_head(run_phase, idx, min(count, MAX_LISTED_PER_CLASS)):
            if len(listed) < MAX_LISTED_PER_CLASS:
                offset = pos - (run_phase.start_position + sw.first_step - 1)
                state = sw.state_at(offset, stem)
                listed.append((pos, format_descriptor(state.descriptor())))
    return total, listed


def _run_states_into_member(
    run_phase: LegRunPhase, d: TreeDescriptor
) -> tuple[int, list[tuple[int, str]]]:
    """Count run states embedding into a later descriptor; list the first positions."""
    run = run_phase.run
    stem = run.initial.stem
    shape = _shape_of(d)
    total = 0
    listed: list[tuple[int, str]] = []
    if isinstance(shape, Chain):
        return 0, []  # two-leg states have two leaves, chains accept one
    if isinstance(shape, TwoLeg):
        if stem > shape.stem:
            return 0, []
        for idx, sw in enumerate(run.sweeps):
            if sw.right > shape.right:
                continue
            hi = min(sw.ext_left, shape.left)
            if hi < sw.right:
                continue
            count = hi - sw.right + 1
            total += count
            base = run_phase.start_position + sw.first_step - 1
            first_off = sw.ext_left - hi
            for off in range(first_off, min(first_off + count, first_off + MAX_LISTED_PER_CLASS)):
                if len(listed) < MAX_LISTED_PER_CLASS:
                    state = sw.state_at(off, stem)
                    listed.append((base + off, format_descriptor(state.descriptor())))
        return total, listed
    # explicit target with 3+ leaves: only run states no larger than it can fit
    target_size = descriptor_size(d)
    for idx, sw in enumerate(run.sweeps):
        hi = min(sw.ext_left, target_size - stem - sw.right)
        if hi < sw.right:
            continue
        base = run_phase.start_position + sw.first_step - 1
        for left in range(hi, sw.right - 1, -1):
            state = TwoLeg(stem, left, sw.right)
            if family_embeds(state, d):
                total += 1
                if len(listed) < MAX_LISTED_PER_CLASS:
                    listed.append((base + (sw.ext_left - left), format_descriptor(state)))
    return total, listed


def _internal_class(idx: int, phase: Phase) -> tuple[PairClassResult, list[EmbeddingViolation]]:
    name = f"{_phase_tag(phase)}[{idx}] internal"
    pairs = _pairs_of(phase.length)
    viols: list[EmbeddingViolation] = []
    if isinstance(phase, DescriptorListPhase):
        status = CLEAR
        note = ""
        for a in range(phase.length):
            for b in range(a + 1, phase.length):
                da, db = phase.descriptors[a], phase.descriptors[b]
                try:
                    hit = family_embeds(da, db)
                except CapacityError:
                    status = INCONCLUSIVE
                    note = f"pair {a}, {b} too large for the family rules"
                    continue
                if hit:
                    viols.append(
                        EmbeddingViolation(
                            phase.start_position + a,
                            phase.start_position + b,
                            None,
                            f"{format_descriptor(da)} into {format_descriptor(db)}",
                        )
                    )
        if viols:
            status = VIOLATED
        return PairClassResult(name, pairs, status, note), viols
    if isinstance(phase, LegRunPhase):
        sweeps = phase.run.sweeps
        for k, sw in enumerate(sweeps):
            if sw.ext_left < sw.right:
                raise ConstructionError("sweep left leg falls below its right leg")
            if k + 1 < len(sweeps) and sweeps[k + 1].right >= sw.right:
                raise ConstructionError("right legs must strictly shrink across sweeps")
        note = (
            "within a sweep the left leg strictly falls at a fixed right leg;"
            " across sweeps the right leg strictly falls"
        )
        return PairClassResult(name, pairs, CLEAR, note), []
    note = "chain lengths strictly fall along the countdown"
    return PairClassResult(name, pairs, CLEAR, note), []


def _cross_class(
    i: int, earlier: Phase, j: int, later: Phase
) -> tuple[PairClassResult, list[EmbeddingViolation]]:
    name = f"{_phase_tag(earlier)}[{i}] -> {_phase_tag(later)}[{j}]"
    pairs = earlier.length * later.length
    viols: list[EmbeddingViolation] = []
    status = CLEAR
    note = ""

    if isinstance(earlier, DescriptorListPhase):
        if isinstance(later, DescriptorListPhase):
            for a in range(earlier.length):
                for b in range(later.length):
                    da, db = earlier.descriptors[a], later.descriptors[b]
                    try:
                        hit = family_embeds(da, db)
                    except CapacityError:
                        status = INCONCLUSIVE
                        note = f"pair {a}, {b} too large for the family rules"
                        continue
                    if hit:
                        viols.append(
                            EmbeddingViolation(
                                earlier.start_position + a,
                                later.start_position + b,
                                None,
                                f"{format_descriptor(da)} into {format_descriptor(db)}",
                            )
                        )
        elif isinstance(later, LegRunPhase):
            hits = 0
            for a, d in enumerate(earlier.descriptors):
                total, listed = _member_into_run(_shape_of(d), later)
                hits += total
                for pos, desc in listed:
                    if len(viols) < MAX_LISTED_PER_CLASS:
                        viols.append(
                            EmbeddingViolation(
                                earlier.start_position + a,
                                pos,
                                None,
                                f"{format_descriptor(d)} into {desc}",
                            )
                        )
            if hits:
                note = f"{hits} violating pair(s)"
        else:
            hits = 0
            for a, d in enumerate(earlier.descriptors):
                shape = _shape_of(d)
                if not isinstance(shape, Chain):
                    continue
                count = min(max(0, later.start_length - shape.length + 1), later.length)
                hits += count
                for off in range(min(count, MAX_LISTED_PER_CLASS)):
                    if len(viols) < MAX_LISTED_PER_CLASS:
                        viols.append(
                            EmbeddingViolation(
                                earlier.start_position + a,
                                later.start_position + off,
                                None,
                                f"{format_descriptor(d)} into chain:{later.start_length - off}",
                            )
                        )
            if hits:
                note = f"{hits} violating pair(s)"

    elif isinstance(earlier, LegRunPhase):
        if isinstance(later, DescriptorListPhase):
            hits = 0
            for b, d in enumerate(later.descriptors):
                total, listed = _run_states_into_member(earlier, d)
                hits += total
                for pos, desc in listed:
                    if len(viols) < MAX_LISTED_PER_CLASS:
                        viols.append(
                            EmbeddingViolation(
                                pos,
                                later.start_position + b,
                                None,
                                f"{desc} into {format_descriptor(d)}",
                            )
                        )
            if hits:
                note = f"{hits} violating pair(s)"
        elif isinstance(later, LegRunPhase):
            if earlier.run.initial.stem <= later.run.initial.stem:
                # the earlier run bottoms out at legs (1, 1), which fits any state
                end_pos = earlier.start_position + earlier.length - 1
                end_state = earlier.run.state_at(earlier.run.step_count)
                first_state = later.run.state_at(1)
                viols.append(
                    EmbeddingViolation(
                        end_pos,
                        later.start_position,
                        None,
                        f"{format_descriptor(end_state.descriptor())} into "
                        f"{format_descriptor(first_state.descriptor())}",
                    )
                )
                note = "stems allow embeddings; exemplar pair listed, count not enumerated"
            else:
                note = "earlier stem exceeds later stem"
        else:
            note = "two-leg states have two leaves, chains accept one"

    else:  # earlier is a countdown: it ends at a single vertex
        end_pos = earlier.start_position + earlier.length - 1
        if isinstance(later, DescriptorListPhase):
            target = format_descriptor(later.descriptors[0])
        elif isinstance(later, LegRunPhase):
            target = format_descriptor(later.run.state_at(1).descriptor())
        else:
            target = f"chain:{later.start_length}"
        viols.append(
            EmbeddingViolation(
                end_pos, later.start_position, None, f"chain:1 into {target}"
            )
        )
        note = "a single vertex embeds everywhere; exemplar pair listed"

    if viols:
        status = VIOLATED
    return PairClassResult(name, pairs, status, note), viols


def _restart_notes(phases: Sequence[Phase]) -> list[str]:
    """Flag runs whose start state differs from the stored tree just before them."""
    notes: list[str] = []
    for prev, nxt in zip(phases, phases[1:]):
        if not isinstance(prev, DescriptorListPhase) or not isinstance(nxt, LegRunPhase):
            continue
        stored = _shape_of(prev.descriptors[-1])
        initial = nxt.run.initial
        if not isinstance(stored, TwoLeg):
            continue
        if (stored.stem, stored.left, stored.right) == (initial.stem, initial.left, initial.right):
            continue
        pos = prev.start_position + prev.length - 1
        msg = (
            f"run at positions {nxt.start_position}..{nxt.start_position + nxt.length - 1} "
            f"starts from stem {initial.stem}, legs ({initial.left}, {initial.right}) "
            f"rather than the stored {format_descriptor(stored)} at position {pos}"
        )
        if stored.left == stored.right >= 2:
            alt = simulate_leg_elimination(
                LegState(label_of(pos), stored.stem, stored.left, stored.right)
            )
            msg += (
                f"; greedy elimination from the stored tree would span {alt.step_count} "
                f"steps instead of {nxt.run.step_count}"
            )
        notes.append(msg)
    return notes


def verify_phases(seq: SequenceDescription) -> VerificationReport:
    """Symbolic audit covering every ordered pair of positions via pair classes."""
    phases = seq.phases
    budget: list[BudgetViolation] = []
    classes: list[PairClassResult] = []
    embeddings: list[EmbeddingViolation] = []
    for ph in phases:
        budget.extend(_budget_violations(ph))
    for idx, ph in enumerate(phases):
        cls, viols = _internal_class(idx, ph)
        classes.append(cls)
        embeddings.extend(viols)
    for i in range(len(phases)):
        for j in range(i + 1, len(phases)):
            cls, viols = _cross_class(i, phases[i], j, phases[j])
            classes.append(cls)
            embeddings.extend(viols)
    covered = sum(c.pairs for c in classes)
    expected = _pairs_of(seq.total_length)
    if covered != expected:
        raise ConstructionError(
            f"pair classes cover {covered} pairs, sequence has {expected}"
        )
    embeddings.sort(key=lambda v: (v.earlier, v.later))
    budget.sort(key=lambda v: v.position)
    return VerificationReport(
        mode="symbolic",
        verdict=_verdict(budget, embeddings, classes),
        checked_pairs=expected,
        budget_violations=tuple(budget),
        embedding_violations=tuple(embeddings),
        pair_classes=tuple(classes),
        notes=tuple(_restart_notes(phases)),
    )


# ---------------------------------------------------------------------------
# cross validation


def _small_positions(phase: Phase, limit: int) -> list[tuple[int, TreeDescriptor]]:
    """Positions in the phase whose descriptors have at most ``limit`` vertices."""
    out: list[tuple[int, TreeDescriptor]] = []
    if isinstance(phase, DescriptorListPhase):
        for off, d in enumerate(phase.descriptors):
            if descriptor_size(d) <= limit:
                out.append((phase.start_position + off, d))
    elif isinstance(phase, LegRunPhase):
        stem = phase.run.initial.stem
        for sw in phase.run.sweeps:
            hi = min(sw.ext_left, limit - stem - sw.right)
            if hi < sw.right:
                continue
            base = phase.start_position + sw.first_step - 1
            for left in range(hi, sw.right - 1, -1):
                off = sw.ext_left - left
                out.append((base + off, TwoLeg(stem, left, sw.right)))
    else:
        for length in range(min(limit, phase.start_length), 0, -1):
            off = phase.start_length - length
            out.append((phase.start_position + off, Chain(length)))
    return out


def _stratified(per_phase: list[list[tuple[int, TreeDescriptor]]], budget: int | None) -> list[tuple[int, TreeDescriptor]]:
    total = sum(len(lst) for lst in per_phase)
    if budget is None or total <= budget:
        return [item for lst in per_phase for item in lst]
    nonempty = sum(1 for lst in per_phase if lst)
    quota = max(12, budget // max(1, nonempty))
    selected: list[tuple[int, TreeDescriptor]] = []
    for lst in per_phase:
        if len(lst) <= quota:
            selected.extend(lst)
            continue
        head, tail = 8, 4
        middle = lst[head:-tail]
        strides = quota - head - tail
        picks = [middle[(k * len(middle)) // strides] for k in range(strides)]
        selected.extend(lst[:head] + picks + lst[-tail:])
    return selected


def cross_validate(
    seq: SequenceDescription,
    limit: int,
    position_budget: int | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Materialize members of at most ``limit`` vertices and compare both check paths.

    Runs the explicit pairwise checker over the covered positions and asserts
    per-pair agreement with the family-level verdicts. ``position_budget``
    caps coverage with a deterministic per-phase selection (heads, tails, and
    an even stride) so every pair class keeps representatives.
    """
    per_phase = [_small_positions(ph, limit) for ph in seq.phases]
    qualifying = sum(len(lst) for lst in per_phase)
    covered = _stratified(per_phase, position_budget)
    positions = [pos for pos, _ in covered]
    descriptors = [d for _, d in covered]
    trees = [expand(d, limit) for d in descriptors]

    budget: list[BudgetViolation] = []
    for pos, t in zip(positions, trees):
        if t.size > label_of(pos):
            budget.append(BudgetViolation(pos, t.size, label_of(pos)))

    explicit_true = {
        (i, j): w for i, j, w in _pairwise_embeddings(trees, jobs)
    }
    symbolic_true: set[tuple[int, int]] = set()
    undecided: list[tuple[int, int]] = []
    for i in range(len(covered)):
        for j in range(i + 1, len(covered)):
            try:
                if family_embeds(descriptors[i], descriptors[j]):
                    symbolic_true.add((i, j))
            except CapacityError:
                undecided.append((i, j))
    disagreements = sorted((set(explicit_true) ^ symbolic_true) - set(undecided))

    embeddings = tuple(
        EmbeddingViolation(
            positions[i],
            positions[j],
            w,
            f"{format_descriptor(descriptors[i])} into {format_descriptor(descriptors[j])}",
        )
        for (i, j), w in sorted(explicit_true.items())
    )
    pair_count = _pairs_of(len(covered))
    notes = [
        f"covered {len(covered)} of {qualifying} qualifying positions (size limit {limit})",
    ]
    if disagreements:
        shown = ", ".join(
            f"({positions[i]}, {positions[j]})" for i, j in disagreements[:MAX_LISTED_PER_CLASS]
        )
        notes.append(f"{len(disagreements)} explicit/symbolic disagreement(s): {shown}")
    else:
        notes.append("explicit and symbolic verdicts agree on every covered pair")
    status = VIOLATED if embeddings else CLEAR
    if disagreements or undecided:
        status = INCONCLUSIVE
    classes = (
        PairClassResult("cross-validation", pair_count, status, notes[-1]),
    )
    return VerificationReport(
        mode="mixed",
        verdict=_verdict(budget, embeddings, classes),
        checked_pairs=pair_count,
        budget_violations=tuple(budget),
        embedding_violations=embeddings,
        pair_classes=classes,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# serialization


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "mode": report.mode,
        "verdict": report.verdict,
        "checked_pairs": report.checked_pairs,
        "budget_violations": [
            {"position": v.position, "size": v.size, "budget": v.budget}
            for v in report.budget_violations
        ],
        "embedding_violations": [
            {
                "earlier": v.earlier,
                "later": v.later,
                "witness": [list(p) for p in v.witness.pairs] if v.witness else None,
                "detail": v.detail,
            }
            for v in report.embedding_violations
        ],
        "pair_classes": [
            {"name": c.name, "pairs": c.pairs, "status": c.status, "note": c.note}
            for c in report.pair_classes
        ],
        "notes": list(report.notes),
    }


def report_from_dict(data: dict) -> VerificationReport:
    return VerificationReport(
        mode=data["mode"],
        verdict=data["verdict"],
        checked_pairs=data["checked_pairs"],
        budget_violations=tuple(
            BudgetViolation(v["position"], v["size"], v["budget"])
            for v in data["budget_violations"]
        ),
        embedding_violations=tuple(
            EmbeddingViolation(
                v["earlier"],
                v["later"],
                EmbeddingWitness(tuple((int(a), int(b)) for a, b in v["witness"]))
                if v["witness"]
                else None,
                v["detail"],
            )
            for v in data["embedding_violations"]
        ),
        pair_classes=tuple(
            PairClassResult(c["name"], c["pairs"], c["status"], c["note"])
            for c in data["pair_classes"]
        ),
        notes=tuple(data["notes"]),
    )


def format_report(report: VerificationReport) -> str:
    lines = [
        f"mode: {report.mode}",
        f"verdict: {report.verdict}",
        f"checked pairs: {report.checked_pairs}",
    ]
    if report.budget_violations:
        lines.append(f"budget violations ({len(report.budget_violations)}):")
        lines.extend(
            f"  position {v.position}: size {v.size} > budget {v.budget}"
            for v in report.budget_violations
        )
    else:
        lines.append("budget violations: none")
    if report.embedding_violations:
        lines.append(f"embedding violations ({len(report.embedding_violations)}):")
        lines.extend(
            f"  {v.earlier} -> {v.later}: {v.detail}"
            for v in report.embedding_violations
        )
    else:
        lines.append("embedding violations: none")
    if report.pair_classes:
        lines.append("pair classes:")
        for c in report.pair_classes:
            suffix = f" ({c.note})" if c.note else ""
            lines.append(f"  {c.name}: {c.status}, {c.pairs} pairs{suffix}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
