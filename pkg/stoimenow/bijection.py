"""
Recursive removal and addition of arcs on Stoimenow matchings, and the resulting bijection with ascent sequences.

`remove_arc()` deletes the reduction arc and reports its label i, `add_arc()` inverts it.
Block moves of the Rem3/Add3 rules work on a list of point identities taken from the input matching.
All labels and partitions are computed on the input, the points are renumbered once at the end.
"""
import logging
from dataclasses import dataclass
from typing import List, Dict, NamedTuple, Sequence, Union

from .ascent import AscentSequence
from .core import Matching, labels, maxarc, redarc, stat_m, stat_M, is_stoimenow, require_stoimenow, LabeledMatching

logger = logging.getLogger(__name__)

REM1 = 'Rem1'
REM2 = 'Rem2'
REM3 = 'Rem3'
ADD1 = 'Add1'
ADD2 = 'Add2'
ADD3 = 'Add3'
REMOVAL_RULES = (REM1, REM2, REM3)
ADDITION_RULES = (ADD1, ADD2, ADD3)

VERIFY_STEPS = True  # check closure and the statistic laws after every step


class BijectionError(RuntimeError):
    pass


class Removal(NamedTuple):
    matching: Matching
    i: int
    rule: str


class Addition(NamedTuple):
    matching: Matching
    rule: str


@dataclass(frozen=True)
class TraceEntry:
    rule: str
    i: int
    before: Matching
    after: Matching

    def __str__(self):
        return f"{self.rule} {self.i}: {self.before} -> {self.after}"


def _renumber(order: List[int], partner: Dict[int, int]) -> Matching:
    position = {point: k for k, point in enumerate(order, start=1)}
    return Matching(tuple(position[partner[point]] for point in order))


def _partner_map(m: Matching) -> Dict[int, int]:
    return {p: m.partner(p) for p in range(1, m.size + 1)}


def _rearrange_run(order: List[int], run: List[int], arranged: List[int]):
    """Places the openers `arranged` into the slots currently held by `run`."""
    slots = [order.index(p) for p in run]
    for slot, point in zip(slots, arranged):
        order[slot] = point


def _remove(m: Matching, removed) -> Matching:
    partner = _partner_map(m)
    order = [p for p in range(1, m.size + 1) if p not in (removed.opener, removed.closer)]
    return _renumber(order, partner)


def _rem3(m: Matching, lab: LabeledMatching, i: int) -> Matching:
    red = redarc(m)
    d = next(p for p in range(red.opener + 1, m.size + 1) if m.is_opener(p))
    block = list(range(red.opener + 1, d))  # closers between the reduction opener and the next opener
    moved = set(block)
    order = [p for p in range(1, m.size + 1) if p not in moved]
    k = order.index(red.closer) + 1
    order[k:k] = block
    for j in range(i):
        run = lab.opener_run(j)
        x = [o for o in run if m.partner(o) < red.opener]
        y = [o for o in run if m.partner(o) in moved]
        z = [o for o in run if o not in x and o not in y]
        _rearrange_run(order, run, x + z + y)
    order.remove(red.opener)
    order.remove(red.closer)
    return _renumber(order, _partner_map(m))


def remove_arc(m: Matching) -> Removal:
    """
    Removes the reduction arc of `m`, returning the smaller matching, the label `i = stat_m(m)` of the removed arc
    and the rule that fired.

    Args:
        m: Stoimenow matching with at least two arcs.
    """
    if m.n < 2:
        raise ValueError(f"Removal needs at least 2 arcs but {m} has {m.n}")
    require_stoimenow(m)
    lab = labels(m)
    i = stat_m(m, lab)
    big_m = stat_M(m, lab)
    if len(lab.level(i)) > 1:
        rule, result = REM1, _remove(m, redarc(m))
    elif i == big_m:
        rule, result = REM2, _remove(m, maxarc(m))
    else:
        rule, result = REM3, _rem3(m, lab, i)
    logger.debug(f"{rule} {i}: {m} -> {result}")
    if VERIFY_STEPS:
        check_step(TraceEntry(rule, i, m, result))
    return Removal(result, i, rule)


def check_step(step: TraceEntry):
    """
    Raises a `BijectionError` unless `step` keeps the Stoimenow property, changes the arc count by one
    and updates the statistics m and M as the removal and addition laws demand.
    """
    if not is_stoimenow(step.after):
        raise BijectionError(f"{step.rule} produced a non-Stoimenow matching: {step}")
    if step.rule in REMOVAL_RULES:
        pi, sigma, direction = step.before, step.after, -1
    elif step.rule in ADDITION_RULES:
        sigma, pi, direction = step.before, step.after, 1
    else:
        raise ValueError(f"Unknown rule '{step.rule}'")
    if step.after.n != step.before.n + direction:
        raise BijectionError(f"{step.rule} changed the arc count from {step.before.n} to {step.after.n}: {step}")
    if stat_m(pi) != step.i:
        raise BijectionError(f"Reduction arc of {pi} has label {stat_m(pi)} but the step records {step.i}: {step}")
    # M(sigma) = M(pi) if i <= m(sigma), else M(pi) - 1
    expected = stat_M(pi) if step.i <= stat_m(sigma) else stat_M(pi) - 1
    if stat_M(sigma) != expected:
        raise BijectionError(f"M({sigma}) = {stat_M(sigma)} but the statistic law gives {expected}: {step}")


def _add1(m: Matching, lab: LabeledMatching, i: int) -> Matching:
    c = maxarc(m).opener
    run = lab.opener_run(i)
    before_max = [o for o in run if o != c and m.partner(o) < c]  # not crossing the maximal arc
    crossing = [o for o in run if o not in before_max]
    a, b = m.size + 1, m.size + 2
    order = list(range(1, m.size + 1))
    if crossing:
        order.insert(order.index(crossing[0]), a)
    else:
        order.insert(order.index(before_max[-1]) + 1, a)
    order.insert(order.index(c) + 1, b)
    partner = _partner_map(m)
    partner[a], partner[b] = b, a
    return _renumber(order, partner)


def _add2(m: Matching) -> Matching:
    return Matching(m.pairing + (m.size + 2, m.size + 1))


def _add3(m: Matching, lab: LabeledMatching, i: int) -> Matching:
    c = maxarc(m).opener
    d = lab.opener_run(i)[0]
    block = []  # closers right after c whose openers lie left of d
    p = c + 1
    while p <= m.size and m.is_closer(p) and m.partner(p) < d:
        block.append(p)
        p += 1
    a, b = m.size + 1, m.size + 2
    order = list(range(1, m.size + 1))
    order.insert(order.index(d), a)
    order.insert(order.index(block[-1] if block else c) + 1, b)
    moved = set(block)
    for j in range(i):
        run = lab.opener_run(j)
        x = [o for o in run if m.partner(o) < d]
        y = [o for o in run if m.partner(o) in moved]
        z = [o for o in run if o not in x and o not in y]
        _rearrange_run(order, run, x + y + z)
    order = [point for point in order if point not in moved]
    k = order.index(a) + 1
    order[k:k] = block
    partner = _partner_map(m)
    partner[a], partner[b] = b, a
    return _renumber(order, partner)


def add_arc(m: Matching, i: int) -> Addition:
    """
    Inserts an arc into `m` so that it becomes the reduction arc with label `i`.
    This is the inverse of `remove_arc()`.

    Args:
        m: Stoimenow matching.
        i: Label of the new reduction arc, 0 <= i <= 1 + stat_M(m).
    """
    require_stoimenow(m)
    lab = labels(m)
    small_m, big_m = stat_m(m, lab), stat_M(m, lab)
    if not 0 <= i <= 1 + big_m:
        raise ValueError(f"Label i must lie in [0, {1 + big_m}] for {m} but got {i}")
    if i <= small_m:
        rule, result = ADD1, _add1(m, lab, i)
    elif i == 1 + big_m:
        rule, result = ADD2, _add2(m)
    else:
        rule, result = ADD3, _add3(m, lab, i)
    logger.debug(f"{rule} {i}: {m} -> {result}")
    if VERIFY_STEPS:
        check_step(TraceEntry(rule, i, m, result))
    return Addition(result, rule)


def trace_encode(m: Matching) -> List[TraceEntry]:
    """Removal steps from `m` down to the single arc, in the order they are applied."""
    require_stoimenow(m)
    steps = []
    while m.n > 1:
        smaller, i, rule = remove_arc(m)
        steps.append(TraceEntry(rule, i, m, smaller))
        m = smaller
    return steps


def encode(m: Matching) -> AscentSequence:
    """Maps a Stoimenow matching with n arcs to an ascent sequence of length n."""
    steps = trace_encode(m)
    return AscentSequence((0,) + tuple(step.i for step in reversed(steps)))


SINGLE_ARC = Matching((2, 1))


def trace_decode(x: Union[AscentSequence, Sequence[int]]) -> List[TraceEntry]:
    """Addition steps building `decode(x)` from the single arc, one per entry x_2, ..., x_n."""
    x = x if isinstance(x, AscentSequence) else AscentSequence(tuple(x))
    steps = []
    m = SINGLE_ARC
    for i in x.values[1:]:
        bigger, rule = add_arc(m, i)
        steps.append(TraceEntry(rule, i, m, bigger))
        m = bigger
    return steps


def decode(x: Union[AscentSequence, Sequence[int]]) -> Matching:
    """Inverse of `encode()`."""
    steps = trace_decode(x)
    return steps[-1].after if steps else SINGLE_ARC
