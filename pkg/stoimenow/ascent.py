"""
Ascent sequences (x_1, ..., x_n) with x_1 = 0 and 0 <= x_i <= 1 + asc(x_1, ..., x_{i-1}).

Counting, ranking and sampling share one table of completion counts.
The number of ways to extend a prefix depends only on its last value and its number of ascents.
"""
import logging
import numbers
import random
import threading
from dataclasses import dataclass
from typing import Tuple, Sequence, Optional, List, Dict, Iterator

logger = logging.getLogger(__name__)


class InvalidSequenceError(ValueError):

    def __init__(self, message: str, index: Optional[int] = None):
        if index is not None:
            message = f"{message} (at index {index})"
        ValueError.__init__(self, message)
        self.index = index


def asc(x: Sequence[int]) -> int:
    """Number of positions i with x_i < x_{i+1}."""
    return sum(1 for a, b in zip(x, x[1:]) if a < b)


def first_violation(x: Sequence[int]) -> Optional[int]:
    """1-based index of the first entry breaking the ascent condition, `None` if `x` is an ascent sequence."""
    if len(x) == 0:
        return 1
    if x[0] != 0:
        return 1
    ascents = 0
    for i in range(1, len(x)):
        if not 0 <= x[i] <= 1 + ascents:
            return i + 1
        if x[i] > x[i - 1]:
            ascents += 1
    return None


def is_valid(x: Sequence[int]) -> bool:
    return first_violation(x) is None


@dataclass(frozen=True)
class AscentSequence:
    values: Tuple[int, ...]

    def __post_init__(self):
        for index, v in enumerate(self.values, start=1):
            if isinstance(v, bool) or not isinstance(v, numbers.Integral):
                raise InvalidSequenceError(f"Entry {v!r} is not an integer", index)
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, 'values', values)
        index = first_violation(values)
        if index is not None:
            if not values:
                raise InvalidSequenceError("Ascent sequences have at least one entry", index)
            if index == 1:
                raise InvalidSequenceError(f"Ascent sequences start with 0 but got {values[0]}", index)
            bound = 1 + asc(values[:index - 1])
            raise InvalidSequenceError(f"Entry {values[index - 1]} exceeds the bound {bound} or is negative", index)

    def __len__(self):
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, item):
        return self.values[item]

    def __str__(self):
        return ','.join(str(v) for v in self.values)

    def __repr__(self):
        return f"AscentSequence({self})"

    @property
    def asc(self) -> int:
        return asc(self.values)


def parse_sequence(text: str) -> AscentSequence:
    """Reads the text form `"0,1,0,1"`."""
    tokens = [token.strip() for token in text.strip().strip('()').split(',')]
    for index, token in enumerate(tokens, start=1):
        if not token.isdigit():
            raise InvalidSequenceError(f"Malformed entry '{token}', expected a non-negative integer", index)
    return AscentSequence(tuple(int(token) for token in tokens))


def enumerate_sequences(n: int) -> List[AscentSequence]:
    """All ascent sequences of length n in lexicographic order."""
    if n < 1:
        raise ValueError(f"Ascent sequences have length n >= 1 but got n={n}")
    result = []

    def extend(prefix: List[int], ascents: int):
        if len(prefix) == n:
            result.append(AscentSequence(tuple(prefix)))
            return
        for y in range(ascents + 2):
            prefix.append(y)
            extend(prefix, ascents + (y > prefix[-2]))
            prefix.pop()

    extend([0], 0)
    return result


_LOCK = threading.Lock()
_TABLE: List[Dict[Tuple[int, int], int]] = []  # table[remaining][(last, ascents)], covers every n up to _TABLE_SIZE
_TABLE_SIZE = 0


def _build_table(n: int) -> List[Dict[Tuple[int, int], int]]:
    # A prefix of length k has at most k - 1 ascents and its last value never exceeds its ascent count.
    table = [{(v, a): 1 for a in range(n) for v in range(a + 1)}]
    for remaining in range(1, n):
        previous = table[-1]
        table.append({(v, a): sum(previous[(y, a + (y > v))] for y in range(a + 2))
                      for a in range(n - remaining) for v in range(a + 1)})
    return table


def _completion_table(n: int) -> List[Dict[Tuple[int, int], int]]:
    """Shared table, rebuilt only when `n` exceeds every length requested so far. Entries do not depend on n."""
    global _TABLE, _TABLE_SIZE
    with _LOCK:
        if n > _TABLE_SIZE:
            logger.debug(f"Growing completion table from n={_TABLE_SIZE} to n={n}")
            _TABLE, _TABLE_SIZE = _build_table(n), n
        return _TABLE


def count_sequences(n: int) -> int:
    """|A_n| as an exact integer. These are the Fishburn numbers 1, 2, 5, 15, 53, 217, ..."""
    if n < 1:
        raise ValueError(f"Ascent sequences have length n >= 1 but got n={n}")
    return _completion_table(n)[n - 1][(0, 0)]


def rank_sequence(x: Sequence[int]) -> int:
    """Position of `x` in the lexicographic order of `enumerate_sequences(len(x))`."""
    x = AscentSequence(tuple(x)).values
    n = len(x)
    table = _completion_table(n)
    rank, ascents = 0, 0
    for k in range(1, n):
        remaining = n - k - 1
        for y in range(x[k]):
            rank += table[remaining][(y, ascents + (y > x[k - 1]))]
        ascents += x[k] > x[k - 1]
    return rank


def unrank_sequence(n: int, rank: int) -> AscentSequence:
    """Inverse of `rank_sequence()`."""
    total = count_sequences(n)
    if not 0 <= rank < total:
        raise ValueError(f"Rank must lie in [0, {total}) for n={n} but got {rank}")
    table = _completion_table(n)
    values, ascents = [0], 0
    for k in range(1, n):
        remaining = n - k - 1
        for y in range(ascents + 2):
            weight = table[remaining][(y, ascents + (y > values[-1]))]
            if rank < weight:
                break
            rank -= weight
        ascents += y > values[-1]
        values.append(y)
    return AscentSequence(tuple(values))


def sample_sequences(n: int, count: int, seed: int) -> List[AscentSequence]:
    """
    `count` exactly uniform draws from A_n.

    Each draw picks a uniform rank with Python's Mersenne Twister (`random.Random(seed)`),
    which accepts arbitrarily large bounds, and unranks it.
    """
    total = count_sequences(n)
    rng = random.Random(seed)
    return [unrank_sequence(n, rng.randrange(total)) for _ in range(count)]


def sample_uniform(n: int, seed: int) -> AscentSequence:
    return sample_sequences(n, 1, seed)[0]
