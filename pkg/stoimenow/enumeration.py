import logging
import warnings
from dataclasses import dataclass, field
from typing import List, Tuple, Optional

from .ascent import AscentSequence, count_sequences, is_valid, sample_uniform
from .bijection import decode, trace_encode, check_step, BijectionError
from .core import Matching, is_stoimenow
from .helper import parallel_map

logger = logging.getLogger(__name__)

CENSUS_LIMIT = 7  # largest n enumerated by default
MAX_ENUMERATION_SIZE = 8  # reachable with large=True


def _check_size(n: int, large: bool):
    limit = MAX_ENUMERATION_SIZE if large else CENSUS_LIMIT
    if not 1 <= n <= limit:
        raise ValueError(f"Enumeration supports 1 <= n <= {limit} but got n={n}. The hard limit with large=True is {MAX_ENUMERATION_SIZE}.")
    if n > CENSUS_LIMIT:
        warnings.warn(f"Enumerating matchings with n={n} arcs exceeds the census limit {CENSUS_LIMIT} and may take a while.")


def _creates_violation(pairing: List[int], s: int, t: int) -> bool:
    """
    Whether the new arc (s, t) becomes the inner arc of a Type 1 or Type 2 nesting.
    All points left of `s` are matched already, so every arc placed earlier has a smaller opener.
    """
    if s > 1 and pairing[s - 2] > t:  # point s-1 opens an arc ending after t
        return True
    if t < len(pairing) and pairing[t]:  # point t+1 closes an arc opened before s
        return True
    return False


def _complete(pairing: List[int], prune: bool, out: List[Matching]):
    if 0 not in pairing:
        out.append(Matching(tuple(pairing)))
        return
    s = pairing.index(0) + 1
    for t in range(s + 1, len(pairing) + 1):
        if pairing[t - 1] or (prune and _creates_violation(pairing, s, t)):
            continue
        pairing[s - 1], pairing[t - 1] = t, s
        _complete(pairing, prune, out)
        pairing[s - 1] = pairing[t - 1] = 0


def _matchings_with_first_arc(args: Tuple[int, int, bool]) -> List[Matching]:
    n, closer, prune = args
    pairing = [0] * (2 * n)
    pairing[0], pairing[closer - 1] = closer, 1
    out = []
    _complete(pairing, prune, out)
    return out


def _generate(n: int, prune: bool, jobs: int) -> List[Matching]:
    # split on the closer of the arc starting at 1
    chunks = parallel_map(_matchings_with_first_arc, [(n, closer, prune) for closer in range(2, 2 * n + 1)], jobs)
    return sorted((m for chunk in chunks for m in chunk), key=str)


def enumerate_matchings(n: int, jobs: int = 1, large: bool = False) -> List[Matching]:
    """
    All Stoimenow matchings with `n` arcs, sorted by their involution text form, e.g. "2 1 4 3" before "3 4 1 2".
    Backtracking rejects every partial matching that already contains a Type 1 or Type 2 nesting.

    Args:
        n: number of arcs
        jobs: worker processes. The output does not depend on this.
        large: allow n up to `MAX_ENUMERATION_SIZE` instead of `CENSUS_LIMIT`.
    """
    _check_size(n, large)
    result = _generate(n, True, jobs)
    logger.info(f"Enumerated {len(result)} Stoimenow matchings with n={n}")
    return result


def enumerate_all_matchings(n: int, jobs: int = 1, large: bool = False) -> List[Matching]:
    """All (2n-1)!! perfect matchings with `n` arcs, in the same order as `enumerate_matchings()`."""
    _check_size(n, large)
    return _generate(n, False, jobs)


def enumerate_matchings_naive(n: int, jobs: int = 1, large: bool = False) -> List[Matching]:
    """Reference for `enumerate_matchings()`: filters all perfect matchings by `is_stoimenow()`."""
    return [m for m in enumerate_all_matchings(n, jobs, large) if is_stoimenow(m)]


def count_matchings(n: int, jobs: int = 1, large: bool = False) -> int:
    return len(enumerate_matchings(n, jobs, large))


def sample_matching(n: int, seed: int) -> Matching:
    """Uniformly random Stoimenow matching, obtained by decoding a uniformly random ascent sequence."""
    return decode(sample_uniform(n, seed))


@dataclass
class CensusReport:
    n: int
    matching_count: int
    sequence_count: int
    failures: List[Tuple[Matching, str]] = field(default_factory=list)

    @property
    def bijective(self) -> bool:
        return not self.failures and self.matching_count == self.sequence_count

    def __str__(self):
        lines = [f"n={self.n} matchings={self.matching_count} sequences={self.sequence_count} bijective={str(self.bijective).lower()}"]
        lines.extend(f"failure {m}: {reason}" for m, reason in self.failures)
        return '\n'.join(lines)


def _census_check(m: Matching) -> Tuple[Optional[AscentSequence], List[str]]:
    try:
        steps = trace_encode(m)
        for step in steps:
            check_step(step)
    except (BijectionError, ValueError) as exc:
        return None, [f"encoding failed: {exc}"]
    values = (0,) + tuple(step.i for step in reversed(steps))
    if not is_valid(values):
        return None, [f"image {','.join(map(str, values))} is not an ascent sequence"]
    x = AscentSequence(values)
    try:
        back = decode(x)
    except (BijectionError, ValueError) as exc:
        return x, [f"decoding {x} failed: {exc}"]
    return x, [] if back == m else [f"decode({x}) = {back}"]


def verify_bijection(n: int, jobs: int = 1, large: bool = False) -> CensusReport:
    """
    Encodes every Stoimenow matching with `n` arcs and checks that the images are distinct ascent sequences,
    that decoding inverts encoding, that both families have the same size and that every removal step obeys
    the closure and statistic laws.
    """
    logger.info(f"Census for n={n}")
    matchings = enumerate_matchings(n, jobs, large)
    report = CensusReport(n, len(matchings), count_sequences(n))
    images = {}
    for m in matchings:
        x, reasons = _census_check(m)
        report.failures.extend((m, reason) for reason in reasons)
        if x is None:
            continue
        if x in images:
            report.failures.append((m, f"same image {x} as {images[x]}"))
        else:
            images[x] = m
    if not report.bijective:
        warnings.warn(f"Census for n={n} is not bijective: {report.matching_count} matchings, {report.sequence_count} sequences, {len(report.failures)} failures")
    logger.info(f"Census for n={n} done: bijective={report.bijective}")
    return report
