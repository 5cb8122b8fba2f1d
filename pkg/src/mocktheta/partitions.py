"""Integer partitions, their statistics, and exhaustive class enumeration.

A partition is stored as a weakly decreasing tuple of positive parts plus an
optional single zero part.  The zero part only appears in the class ``D0``
(distinct parts, zero allowed); everywhere else construction rejects it.

Statistics that may not exist on a given partition (smallest odd part of a
partition with no odd parts, repeated part of a partition with distinct
parts, ...) are returned as ``ABSENT``, which compares greater than every
integer, so guard conditions can be written without special cases.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

ABSENT: float = float("inf")


class PartitionClass(Enum):
    """Partition families used by the involutions and the identities.

    P    all partitions
    D    distinct parts
    D0   distinct parts, a single zero part allowed
    DO   distinct odd parts
    OC   odd parts without gaps (every odd value up to the largest occurs)
    Pdo  distinct parts, smallest part odd
    Pde  distinct parts, smallest part even
    """

    P = "P"
    D = "D"
    D0 = "D0"
    DO = "DO"
    OC = "OC"
    PDO = "Pdo"
    PDE = "Pde"

    @classmethod
    def from_tag(cls, tag: str) -> "PartitionClass":
        for member in cls:
            if member.value == tag:
                return member
        raise ValueError(f"unknown partition class {tag!r}")


CLASS_TAGS = tuple(member.value for member in PartitionClass)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts, plus an optional zero part."""

    parts: tuple[int, ...] = ()
    has_zero: bool = False

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of positive parts."""
        return len(self.parts)

    @property
    def length_with_zero(self) -> int:
        """Number of parts counting the zero part; used as the alpha weight."""
        return len(self.parts) + (1 if self.has_zero else 0)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int | float:
        """Smallest part; the zero part counts, the empty partition has none."""
        if self.has_zero:
            return 0
        return self.parts[-1] if self.parts else ABSENT

    @property
    def is_empty(self) -> bool:
        return not self.parts and not self.has_zero

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def add_part(self, value: int) -> "Partition":
        if value < 1:
            raise ValueError("can only add a positive part")
        for i, p in enumerate(self.parts):
            if p < value:
                return Partition(self.parts[:i] + (value,) + self.parts[i:], self.has_zero)
        return Partition(self.parts + (value,), self.has_zero)

    def remove_part(self, value: int) -> "Partition":
        i = self.parts.index(value)
        return Partition(self.parts[:i] + self.parts[i + 1:], self.has_zero)

    def with_zero(self, flag: bool = True) -> "Partition":
        return Partition(self.parts, flag)

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Bipartition:
    """Ordered pair of partitions; its size is the total."""

    first: Partition
    second: Partition

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def __str__(self) -> str:
        return f"({self.first},{self.second})"


class Stats(NamedTuple):
    """Per-partition statistics; missing values are ABSENT."""

    l: int
    largest: int
    m: int
    s: int | float
    s_o: int | float
    s_e: int | float
    c: int
    r_p: int | float


class PdoParity(NamedTuple):
    even_count: int
    odd_count: int


def rank(p: Partition) -> int:
    """Largest part minus number of parts; zero for the empty partition."""
    if p.has_zero:
        raise ValueError("rank is undefined for a partition with a zero part")
    return p.largest - p.length


def stats(p: Partition) -> Stats:
    """All scalar statistics in one pass.

    The zero part counts as an even part of size 0, so it drives both ``s``
    and ``s_e``.  ``c`` is the longest prefix forming consecutive descending
    odd numbers; ``r_p`` is the largest part occurring at least twice.
    """
    parts = p.parts
    largest = parts[0] if parts else 0
    m = 0
    for q in parts:
        if q != largest:
            break
        m += 1
    s_o: int | float = ABSENT
    s_e: int | float = 0 if p.has_zero else ABSENT
    for q in parts:
        if q % 2:
            s_o = q
        elif not p.has_zero:
            s_e = q
    c = 0
    while c < len(parts) and parts[c] % 2 == 1 and parts[c] == largest - 2 * c:
        c += 1
    r_p: int | float = ABSENT
    for i in range(len(parts) - 1):
        if parts[i] == parts[i + 1]:
            r_p = parts[i]
            break
    return Stats(len(parts), largest, m, p.smallest, s_o, s_e, c, r_p)


def smallest_repeated_part(p: Partition) -> int | float:
    """Smallest positive part occurring at least twice; ABSENT if none."""
    best: int | float = ABSENT
    parts = p.parts
    for i in range(len(parts) - 1):
        if parts[i] == parts[i + 1]:
            best = parts[i]
    return best


def staircase(k: int) -> Partition:
    """The partition (2k-1, 2k-3, ..., 1) of size k*k."""
    if k < 0:
        raise ValueError("staircase index must be nonnegative")
    return Partition(tuple(range(2 * k - 1, 0, -2)))


def is_staircase(p: Partition) -> bool:
    if p.has_zero:
        return False
    return all(v == 2 * (p.length - i) - 1 for i, v in enumerate(p.parts))


def is_member(p: Partition, cls: PartitionClass) -> bool:
    """Membership test; only D0 tolerates the zero part."""
    if p.has_zero and cls is not PartitionClass.D0:
        return False
    parts = p.parts
    if cls is PartitionClass.P:
        return True
    distinct = all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))
    if cls is PartitionClass.D or cls is PartitionClass.D0:
        return distinct
    if cls is PartitionClass.DO:
        return distinct and all(v % 2 for v in parts)
    if cls is PartitionClass.OC:
        if not all(v % 2 for v in parts):
            return False
        values = set(parts)
        return all(v in values for v in range(1, p.largest + 1, 2))
    if cls is PartitionClass.PDO:
        return distinct and bool(parts) and parts[-1] % 2 == 1
    if cls is PartitionClass.PDE:
        return distinct and bool(parts) and parts[-1] % 2 == 0
    raise ValueError(f"unknown partition class {cls!r}")


def _plain(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _plain(n - first, first):
            yield (first,) + rest


def _distinct(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _distinct(n - first, first - 1):
            yield (first,) + rest


def _distinct_odd(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = min(n, cap)
    if top % 2 == 0:
        top -= 1
    for first in range(top, 0, -2):
        for rest in _distinct_odd(n - first, first - 2):
            yield (first,) + rest


def _odd(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = min(n, cap)
    if top % 2 == 0:
        top -= 1
    for first in range(top, 0, -2):
        for rest in _odd(n - first, first):
            yield (first,) + rest


def _gap_free(parts: tuple[int, ...]) -> bool:
    values = set(parts)
    return all(v in values for v in range(1, (parts[0] if parts else 0) + 1, 2))


@functools.lru_cache(maxsize=None)
def enumerate_class(cls: PartitionClass, n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in ``cls``, in decreasing lexicographic order.

    For D0, each distinct-parts partition appears twice, the zero-part
    variant immediately after its zero-free twin.
    """
    if n < 0:
        raise ValueError("partition size must be nonnegative")
    if cls is PartitionClass.P:
        return tuple(Partition(t) for t in _plain(n, n))
    if cls is PartitionClass.D:
        return tuple(Partition(t) for t in _distinct(n, n))
    if cls is PartitionClass.D0:
        out: list[Partition] = []
        for t in _distinct(n, n):
            out.append(Partition(t))
            out.append(Partition(t, has_zero=True))
        return tuple(out)
    if cls is PartitionClass.DO:
        return tuple(Partition(t) for t in _distinct_odd(n, n))
    if cls is PartitionClass.OC:
        return tuple(Partition(t) for t in _odd(n, n) if _gap_free(t))
    if cls is PartitionClass.PDO:
        return tuple(Partition(t) for t in _distinct(n, n) if t and t[-1] % 2 == 1)
    if cls is PartitionClass.PDE:
        return tuple(Partition(t) for t in _distinct(n, n) if t and t[-1] % 2 == 0)
    raise ValueError(f"unknown partition class {cls!r}")


def enumerate_bipartitions(cls_a: PartitionClass, cls_b: PartitionClass, n: int) -> list[Bipartition]:
    """All pairs (first in cls_a, second in cls_b) of total size ``n``.

    Ordered by first-component size descending, then the per-class orders.
    """
    out: list[Bipartition] = []
    for a in range(n, -1, -1):
        for lam in enumerate_class(cls_a, a):
            for mu in enumerate_class(cls_b, n - a):
                out.append(Bipartition(lam, mu))
    return out


def count_pdo_by_length_parity(n: int) -> PdoParity:
    """Distinct-part partitions of n with odd smallest part, split by length parity."""
    if n < 1:
        raise ValueError("n must be positive")
    even = odd = 0
    for p in enumerate_class(PartitionClass.PDO, n):
        if p.length % 2:
            odd += 1
        else:
            even += 1
    return PdoParity(even, odd)


class DistinctProfile(NamedTuple):
    """Per-size counts over all distinct-part partitions up to a limit."""

    pdo: tuple[int, ...]
    pde: tuple[int, ...]
    pdo_even_length: tuple[int, ...]
    pdo_odd_length: tuple[int, ...]


@functools.lru_cache(maxsize=8)
def distinct_part_profile(limit: int) -> DistinctProfile:
    """Walk every distinct-part partition of size <= limit once and tally.

    The walk visits each partition explicitly (depth-first over increasing
    parts), so the tables are enumeration-derived rather than computed from
    a generating function.
    """
    pdo = [0] * (limit + 1)
    pde = [0] * (limit + 1)
    pdo_even = [0] * (limit + 1)
    pdo_odd = [0] * (limit + 1)

    def grow(total: int, next_min: int, odd_length: bool, odd_smallest: bool) -> None:
        for part in range(next_min, limit - total + 1):
            t = total + part
            longer = not odd_length
            if odd_smallest:
                pdo[t] += 1
                if longer:
                    pdo_odd[t] += 1
                else:
                    pdo_even[t] += 1
            else:
                pde[t] += 1
            grow(t, part + 1, longer, odd_smallest)

    for smallest in range(1, limit + 1):
        odd_smallest = smallest % 2 == 1
        if odd_smallest:
            pdo[smallest] += 1
            pdo_odd[smallest] += 1
        else:
            pde[smallest] += 1
        grow(smallest, smallest + 1, True, odd_smallest)

    return DistinctProfile(tuple(pdo), tuple(pde), tuple(pdo_even), tuple(pdo_odd))


def format_partition(p: Partition) -> str:
    """Comma list in parentheses; the zero part is a literal trailing 0."""
    items = [str(v) for v in p.parts]
    if p.has_zero:
        items.append("0")
    return "(" + ",".join(items) + ")"


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated decreasing part list; trailing 0 = zero part.

    The empty string means the empty partition.
    """
    text = text.strip().strip("()")
    if not text:
        return Partition()
    values = [int(tok) for tok in text.split(",")]
    has_zero = False
    if values and values[-1] == 0:
        has_zero = True
        values = values[:-1]
    if any(v == 0 for v in values):
        raise ValueError("only a single trailing zero part is allowed")
    return Partition(tuple(values), has_zero)
