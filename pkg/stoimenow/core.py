import logging
import numbers
from dataclasses import dataclass
from typing import Tuple, Dict, List, Optional, Sequence

logger = logging.getLogger(__name__)

TYPE1 = 'Type1'  # nesting with adjacent closers
TYPE2 = 'Type2'  # nesting with adjacent openers


class MatchingError(ValueError):

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        ValueError.__init__(self, message)
        self.position = position


class NotStoimenowError(MatchingError):

    def __init__(self, message: str, violations: Sequence['ViolationReport'] = ()):
        MatchingError.__init__(self, message)
        self.violations = tuple(violations)


@dataclass(frozen=True, order=True)
class Arc:
    opener: int
    closer: int

    def __post_init__(self):
        if not 1 <= self.opener < self.closer:
            raise MatchingError(f"Arc needs 1 <= opener < closer but got [{self.opener}, {self.closer}]")

    def __str__(self):
        return f"{self.opener}-{self.closer}"

    @property
    def span(self):
        return self.closer - self.opener

    def contains(self, other: 'Arc') -> bool:
        """True if `other` is nested strictly inside this arc."""
        return self.opener < other.opener and other.closer < self.closer

    def crosses(self, other: 'Arc') -> bool:
        first, second = (self, other) if self.opener < other.opener else (other, self)
        return first.opener < second.opener < first.closer < second.closer


@dataclass(frozen=True)
class Matching:
    """
    Fixed-point-free involution on {1,...,2n}.

    `pairing[p - 1]` is the partner of point `p`. Positions are 1-based throughout.
    Construction validates the involution but not the Stoimenow property, see `find_violations()`.
    """
    pairing: Tuple[int, ...]

    def __post_init__(self):
        for position, p in enumerate(self.pairing, start=1):
            if isinstance(p, bool) or not isinstance(p, numbers.Integral):
                raise MatchingError(f"Partner {p!r} is not an integer", position)
        pairing = tuple(int(p) for p in self.pairing)
        object.__setattr__(self, 'pairing', pairing)
        size = len(pairing)
        if size == 0:
            raise MatchingError("Matching needs at least one arc")
        if size % 2:
            raise MatchingError(f"Matching needs an even number of points but got {size}")
        seen = {}
        for position, partner in enumerate(pairing, start=1):
            if not 1 <= partner <= size:
                raise MatchingError(f"Partner {partner} lies outside 1...{size}", position)
            if partner in seen:
                raise MatchingError(f"Point {partner} is the partner of both {seen[partner]} and {position}", position)
            seen[partner] = position
            if partner == position:
                raise MatchingError(f"Point {position} is a fixed point", position)
        for position, partner in enumerate(pairing, start=1):
            if pairing[partner - 1] != position:
                raise MatchingError(f"Not an involution: {position} -> {partner} -> {pairing[partner - 1]}", position)

    @staticmethod
    def from_arcs(arcs: Sequence[Tuple[int, int]]) -> 'Matching':
        size = 2 * len(arcs)
        pairing = [0] * size
        for a, b in arcs:
            arc = Arc(min(a, b), max(a, b))
            for point in (arc.opener, arc.closer):
                if point > size:
                    raise MatchingError(f"Endpoint {point} lies outside 1...{size}", point)
                if pairing[point - 1]:
                    raise MatchingError(f"Endpoint {point} is used by more than one arc", point)
            pairing[arc.opener - 1], pairing[arc.closer - 1] = arc.closer, arc.opener
        if 0 in pairing:
            raise MatchingError(f"Point {pairing.index(0) + 1} is not covered by any arc", pairing.index(0) + 1)
        return Matching(tuple(pairing))

    @property
    def n(self) -> int:
        """Number of arcs."""
        return len(self.pairing) // 2

    @property
    def size(self) -> int:
        """Number of points, 2n."""
        return len(self.pairing)

    def partner(self, position: int) -> int:
        return self.pairing[position - 1]

    def is_opener(self, position: int) -> bool:
        return self.pairing[position - 1] > position

    def is_closer(self, position: int) -> bool:
        return self.pairing[position - 1] < position

    def arc_at(self, position: int) -> Arc:
        partner = self.pairing[position - 1]
        return Arc(min(position, partner), max(position, partner))

    @property
    def openers(self) -> Tuple[int, ...]:
        return tuple(p for p in range(1, self.size + 1) if self.is_opener(p))

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        """All arcs, sorted by opener."""
        return tuple(Arc(p, self.partner(p)) for p in self.openers)

    def __str__(self):
        return ' '.join(str(p) for p in self.pairing)

    def __repr__(self):
        return f"Matching({self})"

    def arc_text(self) -> str:
        return ','.join(str(arc) for arc in self.arcs)


@dataclass(frozen=True)
class ViolationReport:
    kind: str  # TYPE1 or TYPE2
    outer: Arc
    inner: Arc

    def __str__(self):
        return f"{self.kind}: outer {self.outer} inner {self.inner}"


@dataclass(frozen=True)
class LabeledMatching:
    matching: Matching
    label_of: Dict[Arc, int]

    def __getitem__(self, arc: Arc) -> int:
        return self.label_of[arc]

    def label_at(self, position: int) -> int:
        """Label of the arc with an endpoint at `position`."""
        return self.label_of[self.matching.arc_at(position)]

    @property
    def max_label(self) -> int:
        return max(self.label_of.values())

    def level(self, label: int) -> Tuple[Arc, ...]:
        """Arcs with the given label, sorted by opener. This is L_i."""
        return tuple(arc for arc in self.matching.arcs if self.label_of[arc] == label)

    def opener_run(self, label: int) -> List[int]:
        """Openers carrying `label`, left to right. These positions are consecutive."""
        return [arc.opener for arc in self.level(label)]


def parse_matching(text: str) -> Matching:
    """
    Reads either the involution form `"3 4 1 2 6 5"` or the arc form `"1-3,2-4,5-6"`.
    Arcs may be listed in any order.
    """
    text = text.strip()
    if not text:
        raise MatchingError("Empty matching text")
    if '-' in text or ',' in text:
        arcs = []
        for token_index, token in enumerate(text.split(','), start=1):
            parts = token.strip().split('-')
            if len(parts) != 2 or not all(part.strip().isdigit() for part in parts):
                raise MatchingError(f"Malformed arc token '{token.strip()}', expected 'opener-closer'", token_index)
            a, b = int(parts[0]), int(parts[1])
            if a == b:
                raise MatchingError(f"Arc token '{token.strip()}' joins a point to itself", token_index)
            arcs.append((a, b))
        return Matching.from_arcs(arcs)
    tokens = text.split()
    for token_index, token in enumerate(tokens, start=1):
        if not token.isdigit():
            raise MatchingError(f"Malformed token '{token}', expected a positive integer", token_index)
    return Matching(tuple(int(token) for token in tokens))


def format_matching(m: Matching, form: str = 'involution') -> str:
    if form == 'involution':
        return str(m)
    if form == 'arcs':
        return m.arc_text()
    raise ValueError(f"Unknown matching text form '{form}'. Use 'involution' or 'arcs'.")


def _violation_order(report: ViolationReport):
    return report.outer.opener, report.inner.opener, 0 if report.kind == TYPE2 else 1


def find_violations(m: Matching) -> List[ViolationReport]:
    """
    All Type 1 and Type 2 nestings of `m`. Empty exactly if `m` is Stoimenow.

    Both kinds involve two adjacent endpoints of the same sort, so only neighbouring positions are compared.
    """
    result = []
    for p in range(1, m.size):
        q = p + 1
        if m.is_opener(p) and m.is_opener(q) and m.partner(q) < m.partner(p):
            result.append(ViolationReport(TYPE2, m.arc_at(p), m.arc_at(q)))
        elif m.is_closer(p) and m.is_closer(q) and m.partner(q) < m.partner(p):
            result.append(ViolationReport(TYPE1, m.arc_at(q), m.arc_at(p)))
    return sorted(result, key=_violation_order)


def find_violations_brute_force(m: Matching) -> List[ViolationReport]:
    """Quadratic scan over all arc pairs. Reference for `find_violations()`."""
    result = []
    for outer in m.arcs:
        for inner in m.arcs:
            if not outer.contains(inner):
                continue
            if inner.opener == outer.opener + 1:
                result.append(ViolationReport(TYPE2, outer, inner))
            if outer.closer == inner.closer + 1:
                result.append(ViolationReport(TYPE1, outer, inner))
    return sorted(result, key=_violation_order)


def is_stoimenow(m: Matching) -> bool:
    return not find_violations(m)


def require_stoimenow(m: Matching):
    violations = find_violations(m)
    if violations:
        raise NotStoimenowError(f"{m} is not a Stoimenow matching: {'; '.join(str(v) for v in violations)}", violations)


def labels(m: Matching) -> LabeledMatching:
    """Labels every arc with the number of maximal runs of closers strictly left of its opener."""
    label_of = {}
    runs = 0
    for p in range(1, m.size + 1):
        if m.is_opener(p):
            label_of[m.arc_at(p)] = runs
        elif p == 1 or m.is_opener(p - 1):
            runs += 1  # a new run of closers starts here
    return LabeledMatching(m, label_of)


def maxarc(m: Matching) -> Arc:
    return Arc(m.partner(m.size), m.size)


def redarc(m: Matching) -> Arc:
    """The arc whose closer sits immediately right of the maximal arc's opener."""
    position = 1 + m.partner(m.size)
    if m.is_opener(position):
        raise NotStoimenowError(f"{m} has an opener at {position}, right after the maximal arc's opener, so it is not Stoimenow")
    return m.arc_at(position)


def stat_m(m: Matching, labeled: LabeledMatching = None) -> int:
    """Label of the reduction arc."""
    return (labeled or labels(m))[redarc(m)]


def stat_M(m: Matching, labeled: LabeledMatching = None) -> int:
    """Label of the maximal arc. This is also the largest label."""
    return (labeled or labels(m))[maxarc(m)]


def level_set_size(m: Matching, i: int) -> int:
    if i < 0:
        raise ValueError(f"Labels are non-negative but got {i}")
    return len(labels(m).level(i))
