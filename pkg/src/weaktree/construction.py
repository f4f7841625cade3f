"""The long bad-sequence construction and its exact arithmetic.

The built-in sequence opens with nine explicit trees (labels 4..12), runs a
leg-elimination sweep from the symmetric (5, 5) two-leg state down to
(1, 1), restarts with a fresh two-leg tree, eliminates again, and finishes
with a chain countdown. Position k holds the tree labeled k + 3, and every
tree at position k has at most k + 3 vertices.

Leg elimination, from a symmetric state with legs (d, d): one step shortens
the right leg to d - 1 and extends the left leg to fill the vertex budget
exactly; each following step shortens the left leg by one until the legs
reach (d - 1, d - 1); repeat down to (1, 1). A run is stored as its sweeps
in closed form, so runs spanning ~1e14 steps index in O(#sweeps).

The restart run is pinned to the budget-filling symmetric start, which is
the unique greedy run matching the configured segment arithmetic; the stored
restart tree itself has shorter legs, and the verifier reports the
difference rather than patching it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import ConstructionError
from .families import Chain, Explicit, TreeDescriptor, TwoLeg, descriptor_size
from .trees import parse_tree

LABEL_OFFSET = 3
EXPORT_RECORD_CAP = 1_000_000


def label_of(position: int) -> int:
    """Vertex-budget label of a sequence position."""
    return position + LABEL_OFFSET


def leg_elimination_steps(depth: int) -> int:
    """Steps a budget-filling elimination takes from legs of depth + 1 vertices.

    Exact evaluation of 6 * 2**depth - 2*depth - 6 for depth >= 1.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    return 6 * (1 << depth) - 2 * depth - 6


@dataclass(frozen=True)
class LegState:
    """Two-leg bookkeeping state: budget label, stem length, leg lengths.

    Legs are normalized so left >= right. A stem of 0 tracks the bare leg
    pattern with no tree realization; states with stem >= 1 materialize as
    ``TwoLeg(stem, left, right)``.
    """

    label: int
    stem: int
    left: int
    right: int

    def __post_init__(self) -> None:
        if self.stem < 0 or self.left < 1 or self.right < 1:
            raise ValueError("legs must be at least 1 and the stem nonnegative")
        if self.left < self.right:
            longer, shorter = self.right, self.left
            object.__setattr__(self, "left", longer)
            object.__setattr__(self, "right", shorter)
        if self.stem + self.left + self.right > self.label:
            raise ValueError("state exceeds its vertex budget")

    @property
    def size(self) -> int:
        return self.stem + self.left + self.right

    @property
    def symmetric(self) -> bool:
        return self.left == self.right

    def descriptor(self) -> TwoLeg:
        if self.stem < 1:
            raise ValueError("stem-0 states have no tree realization")
        return TwoLeg(self.stem, self.left, self.right)


@dataclass(frozen=True)
class Sweep:
    """One elimination sweep: the extension step plus its unit decrements."""

    first_step: int
    first_label: int
    ext_left: int
    right: int
    length: int

    @property
    def last_step(self) -> int:
        return self.first_step + self.length - 1

    def state_at(self, offset: int, stem: int) -> LegState:
        return LegState(self.first_label + offset, stem, self.ext_left - offset, self.right)


@dataclass(frozen=True)
class EliminationRun:
    initial: LegState
    sweeps: tuple[Sweep, ...]
    step_count: int

    @property
    def checkpoints(self) -> tuple[LegState, ...]:
        """Symmetric states: the initial one plus each sweep's last state."""
        out = [self.initial]
        out.extend(sw.state_at(sw.length - 1, self.initial.stem) for sw in self.sweeps)
        return tuple(out)

    def state_at(self, step: int) -> LegState:
        """State after ``step`` steps; step 0 is the initial state."""
        if step == 0:
            return self.initial
        if not 1 <= step <= self.step_count:
            raise ValueError(f"step out of range 0..{self.step_count}")
        for sw in self.sweeps:
            if step <= sw.last_step:
                return sw.state_at(step - sw.first_step, self.initial.stem)
        raise ConstructionError("sweeps do not tile the run")

    def iter_states(self) -> Iterator[LegState]:
        """States after steps 1..step_count, in order (initial state excluded)."""
        for sw in self.sweeps:
            for offset in range(sw.length):
                yield sw.state_at(offset, self.initial.stem)


def simulate_leg_elimination(initial: LegState) -> EliminationRun:
    """Greedy elimination from a symmetric state with legs >= 2 down to (1, 1).

    Each extension fills the budget exactly: from (d, d) at label B the next
    state is (B + 1 - stem - (d - 1), d - 1). Sweeps are aggregated in
    closed form, so the run is cheap to build even when it spans ~1e14 steps.
    """
    if not initial.symmetric or initial.left < 2:
        raise ValueError("elimination starts from a symmetric state with legs of at least 2")
    sweeps: list[Sweep] = []
    label = initial.label
    depth = initial.left
    step = 1
    while depth >= 2:
        ext_left = label + 1 - initial.stem - (depth - 1)
        if ext_left < depth - 1:
            raise ConstructionError("extension undershoots the next symmetric state")
        length = ext_left - (depth - 1) + 1
        sweeps.append(Sweep(step, label + 1, ext_left, depth - 1, length))
        step += length
        label += length
        depth -= 1
    return EliminationRun(initial, tuple(sweeps), step - 1)


def initial_segment() -> tuple[tuple[int, TreeDescriptor], ...]:
    """The opening trees, labels 4 through 12."""
    return (
        (4, Explicit(parse_tree("(()()())"))),
        (5, Explicit(parse_tree("(()(()()))"))),
        (6, TwoLeg(4, 1, 1)),
        (7, TwoLeg(3, 2, 2)),
        (8, TwoLeg(3, 4, 1)),
        (9, TwoLeg(3, 3, 1)),
        (10, TwoLeg(3, 2, 1)),
        (11, TwoLeg(3, 1, 1)),
        (12, TwoLeg(2, 5, 5)),
    )


@dataclass(frozen=True)
class DescriptorListPhase:
    """A contiguous run of explicitly listed descriptors."""

    start_position: int
    descriptors: tuple[TreeDescriptor, ...]

    @property
    def length(self) -> int:
        return len(self.descriptors)

    def descriptor_at(self, offset: int) -> TreeDescriptor:
        return self.descriptors[offset]


@dataclass(frozen=True)
class LegRunPhase:
    """A leg-elimination run; position offsets map to run steps 1.. ."""

    start_position: int
    run: EliminationRun

    def __post_init__(self) -> None:
        if self.run.initial.stem < 1:
            raise ValueError("sequence phases need materializable states (stem >= 1)")
        if label_of(self.start_position) != self.run.initial.label + 1:
            raise ConstructionError("run labels do not line up with the phase position")

    @property
    def length(self) -> int:
        return self.run.step_count

    def descriptor_at(self, offset: int) -> TreeDescriptor:
        return self.run.state_at(offset + 1).descriptor()


@dataclass(frozen=True)
class ChainCountdownPhase:
    """Chains of start_length, start_length - 1, ..., 1."""

    start_position: int
    start_length: int

    @property
    def length(self) -> int:
        return self.start_length

    def descriptor_at(self, offset: int) -> TreeDescriptor:
        return Chain(self.start_length - offset)


Phase = Union[DescriptorListPhase, LegRunPhase, ChainCountdownPhase]


def chain_countdown(start_label: int, start_length: int) -> ChainCountdownPhase:
    """Countdown phase whose first chain carries ``start_label``."""
    if start_length < 1:
        raise ValueError("countdown must start from a chain of at least 1 vertex")
    start_position = start_label - LABEL_OFFSET
    if start_position < 1:
        raise ValueError("countdown would start before position 1")
    return ChainCountdownPhase(start_position, start_length)


@dataclass(frozen=True)
class SequenceDescription:
    """Phases tiling a contiguous block of positions."""

    phases: tuple[Phase, ...]
    total_length: int
    label_offset: int = LABEL_OFFSET

    @property
    def start_position(self) -> int:
        return self.phases[0].start_position

    @property
    def last_position(self) -> int:
        return self.start_position + self.total_length - 1


def assemble_sequence(phases: tuple[Phase, ...]) -> SequenceDescription:
    """Validate tiling and wrap the phases; raises ConstructionError on gaps."""
    if not phases:
        raise ValueError("a sequence needs at least one phase")
    if phases[0].start_position < 1:
        raise ConstructionError("positions start at 1")
    pos = phases[0].start_position
    for ph in phases:
        if ph.start_position != pos:
            raise ConstructionError(
                f"phase at position {ph.start_position} does not tile (expected {pos})"
            )
        if ph.length < 1:
            raise ConstructionError("phases must be nonempty")
        pos += ph.length
    return SequenceDescription(tuple(phases), pos - phases[0].start_position)


def tree_at(seq: SequenceDescription, position: int) -> TreeDescriptor:
    """Descriptor at a position; O(#phases + #sweeps) regardless of position."""
    if not seq.start_position <= position <= seq.last_position:
        raise ValueError(f"position out of range {seq.start_position}..{seq.last_position}")
    for ph in seq.phases:
        if position < ph.start_position + ph.length:
            return ph.descriptor_at(position - ph.start_position)
    raise ConstructionError("phases do not tile the sequence")


def iter_sequence(
    seq: SequenceDescription, start: int | None = None, stop: int | None = None
) -> Iterator[tuple[int, int, TreeDescriptor]]:
    """Yield (position, label, descriptor) for positions start..stop inclusive."""
    lo = seq.start_position if start is None else start
    hi = seq.last_position if stop is None else stop
    if lo > hi:
        return
    if not (seq.start_position <= lo and hi <= seq.last_position):
        raise ValueError(f"range out of bounds {seq.start_position}..{seq.last_position}")
    for ph in seq.phases:
        ph_end = ph.start_position + ph.length - 1
        if ph_end < lo or ph.start_position > hi:
            continue
        first = max(lo, ph.start_position) - ph.start_position
        last = min(hi, ph_end) - ph.start_position
        if isinstance(ph, LegRunPhase):
            stem = ph.run.initial.stem
            for sw in ph.run.sweeps:
                if sw.last_step < first + 1 or sw.first_step > last + 1:
                    continue
                off_lo = max(first + 1, sw.first_step) - sw.first_step
                off_hi = min(last + 1, sw.last_step) - sw.first_step
                for off in range(off_lo, off_hi + 1):
                    pos = ph.start_position + sw.first_step - 1 + off
                    yield pos, label_of(pos), sw.state_at(off, stem).descriptor()
        else:
            for off in range(first, last + 1):
                pos = ph.start_position + off
                yield pos, label_of(pos), ph.descriptor_at(off)


def build_full_sequence() -> SequenceDescription:
    """Assemble the full construction; every boundary is recomputed and checked."""
    opening = initial_segment()
    for pos, (label, desc) in enumerate(opening, start=1):
        if label != label_of(pos):
            raise ConstructionError("opening labels are not contiguous from 4")
        if descriptor_size(desc) > label:
            raise ConstructionError(f"opening tree at label {label} exceeds its budget")
    phases: list[Phase] = [DescriptorListPhase(1, tuple(d for _, d in opening))]
    pos = 1 + len(opening)

    run_a = simulate_leg_elimination(LegState(label_of(pos - 1), 2, 5, 5))
    if run_a.step_count != leg_elimination_steps(4):
        raise ConstructionError("first elimination does not match the step formula")
    end_a = run_a.state_at(run_a.step_count)
    if (end_a.left, end_a.right) != (1, 1):
        raise ConstructionError("first elimination does not end at legs (1, 1)")
    phases.append(LegRunPhase(pos, run_a))
    pos += run_a.step_count

    restart_label = label_of(pos)
    phases.append(DescriptorListPhase(pos, (TwoLeg(1, 46, 46),)))
    pos += 1

    # Budget-filling start: the unique greedy run spanning the configured
    # segment; the stored restart tree above keeps its shorter legs.
    run_b = simulate_leg_elimination(LegState(restart_label, 1, 47, 47))
    if run_b.step_count != leg_elimination_steps(46):
        raise ConstructionError("restart elimination does not match the step formula")
    phases.append(LegRunPhase(pos, run_b))
    pos += run_b.step_count

    chain_start_label = label_of(pos)
    phases.append(chain_countdown(chain_start_label, chain_start_label))

    seq = assemble_sequence(tuple(phases))
    if seq.total_length != total_bound():
        raise ConstructionError("phase arithmetic disagrees with the bound arithmetic")
    return seq


def total_bound() -> int:
    """Sequence length recomputed from the segment arithmetic, not a constant."""
    restart_label = 12 + leg_elimination_steps(4) + 1
    last_two_leg_label = restart_label + leg_elimination_steps(46)
    chain_start_label = last_two_leg_label + 1
    last_label = chain_start_label + (chain_start_label - 1)
    return last_label - LABEL_OFFSET


def greedy_restart_steps() -> int:
    """Steps a greedy elimination starting from the stored restart tree would take."""
    restart_label = 12 + leg_elimination_steps(4) + 1
    return simulate_leg_elimination(LegState(restart_label, 1, 46, 46)).step_count


def bound_breakdown() -> tuple[tuple[str, int], ...]:
    """The arithmetic chain behind ``total_bound``, as (description, value) rows."""
    first_steps = leg_elimination_steps(4)
    restart_label = 12 + first_steps + 1
    restart_steps = leg_elimination_steps(46)
    last_two_leg_label = restart_label + restart_steps
    chain_start_label = last_two_leg_label + 1
    last_label = chain_start_label + (chain_start_label - 1)
    return (
        ("opening trees (labels 4-12)", 9),
        ("first elimination steps", first_steps),
        ("first elimination end label", 12 + first_steps),
        ("restart label", restart_label),
        ("restart elimination steps (configured)", restart_steps),
        ("restart elimination steps (greedy from the stored tree)", greedy_restart_steps()),
        ("last two-leg label", last_two_leg_label),
        ("chain countdown start label and length", chain_start_label),
        ("final label", last_label),
        ("label offset subtracted", LABEL_OFFSET),
        ("sequence length", last_label - LABEL_OFFSET),
    )
