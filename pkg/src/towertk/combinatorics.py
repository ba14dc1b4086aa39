"""
Index combinatorics shared by every tower.

Permutations in one-line notation, compositions with their ribbon diagrams,
partitions, words and shuffles. Every value here is immutable, so the
functions are safe to call from concurrent checkers.

Conventions:
    - Permutations compose as functions: (sigma * tau)(i) = sigma(tau(i)).
    - Left multiplication by s_i swaps the values i and i+1; right
      multiplication swaps the positions i and i+1.
    - The weak order is the left weak order: sigma <= tau iff the
      position-inversion set of sigma is contained in that of tau.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

from .errors import CombinatoricsError

logger = logging.getLogger(__name__)


def _join(values: Sequence[int]) -> str:
    if all(0 <= v < 10 for v in values):
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n} in one-line notation (n = 0 allowed)."""

    window: Tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise CombinatoricsError(f"Not a permutation of 1..{len(window)}: {window}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        """The simple transposition s_i of S_n."""
        if not 1 <= i < n:
            raise CombinatoricsError(f"s_{i} is not a simple transposition of S_{n}")
        return cls.identity(n).right_multiply_simple(i)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse '21534' or '2,1,5,3,4' (the empty string is the empty permutation)."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            if "," in text:
                return cls(tuple(int(part) for part in text.split(",")))
            return cls(tuple(int(ch) for ch in text))
        except ValueError:
            raise CombinatoricsError(f"Cannot parse permutation: {text!r}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __str__(self) -> str:
        return _join(self.window)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self * other, i.e. i -> self(other(i))."""
        if self.n != other.n:
            raise CombinatoricsError(f"Cannot compose permutations of {self.n} and {other.n}")
        return Permutation(tuple(self.window[v - 1] for v in other.window))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for position, value in enumerate(self.window, start=1):
            inv[value - 1] = position
        return Permutation(tuple(inv))

    def inversions(self) -> FrozenSet[Tuple[int, int]]:
        """Position pairs (i, j), i < j, with sigma(i) > sigma(j)."""
        w = self.window
        return frozenset(
            (i + 1, j + 1)
            for i in range(self.n) for j in range(i + 1, self.n)
            if w[i] > w[j]
        )

    def length(self) -> int:
        w = self.window
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def descents(self) -> Tuple[int, ...]:
        w = self.window
        return tuple(i for i in range(1, self.n) if w[i - 1] > w[i])

    def left_multiply_simple(self, i: int) -> "Permutation":
        """s_i * self: swap the values i and i+1."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(v, v) for v in self.window))

    def right_multiply_simple(self, i: int) -> "Permutation":
        """self * s_i: swap the positions i and i+1."""
        w = list(self.window)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def left_length_increases(self, i: int) -> bool:
        """True iff l(s_i * self) = l(self) + 1, i.e. value i sits left of i+1."""
        return self.window.index(i) < self.window.index(i + 1)

    def reduced_word(self) -> Tuple[int, ...]:
        """A reduced word (i_1, ..., i_r) with self = s_{i_1} * ... * s_{i_r}.

        Built by bubble sort on the leftmost descent.
        """
        word: List[int] = []
        current = self
        while True:
            found = current.descents()
            if not found:
                break
            i = found[0]
            word.append(i)
            current = current.right_multiply_simple(i)
        word.reverse()
        return tuple(word)

    def shifted(self, offset: int) -> Tuple[int, ...]:
        return tuple(v + offset for v in self.window)


def direct_sum(sigma: Permutation, tau: Permutation) -> Permutation:
    """One-line concatenation of sigma with tau shifted past sigma's values."""
    return Permutation(sigma.window + tau.shifted(sigma.n))


def permutations(n: int) -> List[Permutation]:
    """All permutations of {1..n} in lexicographic order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def descents(sigma: Permutation) -> Tuple[int, ...]:
    return sigma.descents()


def weak_order_leq(sigma: Permutation, tau: Permutation) -> bool:
    """Left weak order: inv(sigma) is a subset of inv(tau) on positions.

    Equivalently l(tau * sigma^{-1}) = l(tau) - l(sigma).
    """
    if sigma.n != tau.n:
        raise CombinatoricsError(f"Cannot compare permutations of {sigma.n} and {tau.n}")
    return sigma.inversions() <= tau.inversions()


@dataclass(frozen=True)
class Composition:
    """A composition of n; the empty composition is the unique one of 0."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise CombinatoricsError(f"Composition parts must be positive: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip().strip("()")
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError:
            raise CombinatoricsError(f"Cannot parse composition: {text!r}")

    @classmethod
    def from_descents(cls, descent_set: Iterable[int], n: int) -> "Composition":
        """The unique composition I of n with D(I) = descent_set."""
        cuts = sorted(set(descent_set))
        if any(not 1 <= d < n for d in cuts):
            raise CombinatoricsError(f"Descent set {cuts} is not inside [1, {n - 1}]")
        if n == 0:
            return cls(())
        bounds = [0] + cuts + [n]
        return cls(tuple(b - a for a, b in zip(bounds, bounds[1:])))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def descent_set(self) -> Tuple[int, ...]:
        """D(I): the partial sums i_1, i_1 + i_2, ... excluding the total."""
        sums = list(itertools.accumulate(self.parts))
        return tuple(sums[:-1])

    def sort_key(self) -> Tuple[int, ...]:
        return self.descent_set()

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Composition({self})"

    def __lt__(self, other: "Composition") -> bool:
        return (self.weight, self.sort_key()) < (other.weight, other.sort_key())


def compositions(n: int) -> List[Composition]:
    """All compositions of n in lexicographic order of their descent sets."""
    if n == 0:
        return [Composition(())]
    subsets = [
        subset
        for r in range(n)
        for subset in itertools.combinations(range(1, n), r)
    ]
    return [Composition.from_descents(subset, n) for subset in sorted(subsets)]


def composition_from_descents(descent_set: Iterable[int], n: int) -> Composition:
    return Composition.from_descents(descent_set, n)


def descent_composition(sigma: Permutation) -> Composition:
    """C(sigma): the composition of n whose descent set is Des(sigma)."""
    return Composition.from_descents(sigma.descents(), sigma.n)


def _ribbon_rows(comp: Composition) -> List[List[int]]:
    """Column index of every box, row by row from the top row down."""
    rows: List[List[int]] = []
    start = 0
    for part in comp.parts:
        rows.append(list(range(start, start + part)))
        start += part - 1
    return rows


def mirror(comp: Composition) -> Composition:
    return Composition(tuple(reversed(comp.parts)))


def conjugate(comp: Composition) -> Composition:
    """Column lengths of the ribbon of comp, read from right to left."""
    rows = _ribbon_rows(comp)
    heights: Counter = Counter(column for row in rows for column in row)
    return Composition(tuple(heights[c] for c in sorted(heights, reverse=True)))


def _fill(comp: Composition, order: List[Tuple[int, int]]) -> Permutation:
    # order lists (row, offset) boxes in the order they receive 1, 2, ...
    rows = _ribbon_rows(comp)
    value: Dict[Tuple[int, int], int] = {box: k for k, box in enumerate(order, start=1)}
    reading = [value[(r, k)] for r, row in enumerate(rows) for k in range(len(row))]
    return Permutation(tuple(reading))


def alpha(comp: Composition) -> Permutation:
    """Fill the columns of the ribbon bottom to top, left to right.

    The result is the minimum of the descent class of comp in weak order.
    """
    rows = _ribbon_rows(comp)
    boxes = [(r, k, column) for r, row in enumerate(rows) for k, column in enumerate(row)]
    boxes.sort(key=lambda box: (box[2], -box[0]))
    return _fill(comp, [(r, k) for r, k, _ in boxes])


def omega(comp: Composition) -> Permutation:
    """Fill the rows of the ribbon left to right, bottom row first.

    The result is the maximum of the descent class of comp in weak order.
    """
    rows = _ribbon_rows(comp)
    order = [(r, k) for r in reversed(range(len(rows))) for k in range(len(rows[r]))]
    return _fill(comp, order)


def descent_class(comp: Composition) -> List[Permutation]:
    """All permutations whose descent set is D(comp), in lexicographic order."""
    target = comp.descent_set()
    return [p for p in permutations(comp.weight) if p.descents() == target]


@dataclass(frozen=True)
class Partition:
    """A partition of n, parts weakly decreasing (the empty partition is 0)."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise CombinatoricsError(f"Not a partition: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()")
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError:
            raise CombinatoricsError(f"Cannot parse partition: {text!r}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(
            sum(1 for p in self.parts if p > i) for i in range(self.parts[0])
        ))

    def union(self, other: "Partition") -> "Partition":
        """The partition whose parts are the parts of both."""
        return Partition(tuple(sorted(self.parts + other.parts, reverse=True)))

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(-p for p in self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self})"

    def __lt__(self, other: "Partition") -> bool:
        return (self.weight, self.sort_key()) < (other.weight, other.sort_key())


@lru_cache(maxsize=None)
def _partitions(n: int) -> Tuple[Partition, ...]:
    if n == 0:
        return (Partition(()),)
    found = []
    for multiplicity in _sympy_partitions(n):
        parts = [k for k, m in sorted(multiplicity.items(), reverse=True) for _ in range(m)]
        found.append(tuple(parts))
    return tuple(Partition(p) for p in sorted(found, reverse=True))


def partitions(n: int) -> List[Partition]:
    """All partitions of n in reverse lexicographic order: (n) first."""
    return list(_partitions(n))


def z_mu(mu: Partition) -> int:
    """The centralizer order prod_i i^{m_i} m_i! of a permutation of cycle type mu."""
    result = 1
    for part, count in mu.multiplicities().items():
        result *= part ** count * factorial(count)
    return result


def class_representative(mu: Partition) -> Permutation:
    """A permutation of cycle type mu made of consecutive cycles (1 2 .. mu_1)..."""
    window: List[int] = []
    start = 1
    for part in mu.parts:
        cycle = list(range(start, start + part))
        window.extend(cycle[1:] + cycle[:1])
        start += part
    return Permutation(tuple(window))


def cycle_type(sigma: Permutation) -> Partition:
    seen = set()
    lengths = []
    for start in range(1, sigma.n + 1):
        if start in seen:
            continue
        size = 0
        current = start
        while current not in seen:
            seen.add(current)
            current = sigma(current)
            size += 1
        lengths.append(size)
    return Partition(tuple(sorted(lengths, reverse=True)))


@dataclass(frozen=True, order=True)
class Word:
    """A word on pairwise distinct positive letters."""

    letters: Tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(v) for v in self.letters)
        object.__setattr__(self, "letters", letters)
        if any(v <= 0 for v in letters) or len(set(letters)) != len(letters):
            raise CombinatoricsError(f"Word letters must be distinct positive integers: {letters}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if not text:
            return cls(())
        try:
            if "," in text:
                return cls(tuple(int(part) for part in text.split(",")))
            return cls(tuple(int(ch) for ch in text))
        except ValueError:
            raise CombinatoricsError(f"Cannot parse word: {text!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __getitem__(self, index: slice) -> "Word":
        return Word(self.letters[index])

    def __str__(self) -> str:
        return _join(self.letters)

    def __repr__(self) -> str:
        return f"Word({self})"

    def descents(self) -> Tuple[int, ...]:
        w = self.letters
        return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def _require_disjoint(u: Word, v: Word) -> None:
    if set(u.letters) & set(v.letters):
        raise CombinatoricsError(f"Shuffle operands share letters: {u} and {v}")


def shuffle(u: Word, v: Word) -> List[Word]:
    """All interleavings of u and v keeping each word's internal order, sorted."""
    _require_disjoint(u, v)
    a, b = u.letters, v.letters

    @lru_cache(maxsize=None)
    def interleave(i: int, j: int) -> Tuple[Tuple[int, ...], ...]:
        if i == len(a):
            return (b[j:],)
        if j == len(b):
            return (a[i:],)
        return tuple((a[i],) + rest for rest in interleave(i + 1, j)) + \
            tuple((b[j],) + rest for rest in interleave(i, j + 1))

    return sorted(Word(w) for w in interleave(0, 0))


def shuffle_split(u: Word, v: Word, k: int) -> List[Word]:
    """Union over i + j = k of (u[:i] sh v[:j]) . (u[i:] sh v[j:]), sorted.

    As a multiset this equals shuffle(u, v) for every admissible k.
    """
    _require_disjoint(u, v)
    if not 0 <= k <= len(u) + len(v):
        raise CombinatoricsError(f"Split position {k} outside [0, {len(u) + len(v)}]")
    result: List[Word] = []
    for i in range(max(0, k - len(v)), min(k, len(u)) + 1):
        j = k - i
        heads = shuffle(u[:i], v[:j])
        tails = shuffle(u[i:], v[j:])
        result.extend(head + tail for head in heads for tail in tails)
    return sorted(result)


def min_coset_reps(m: int, n: int) -> List[Permutation]:
    """Minimal length representatives of S_{m+n} / (S_m x S_n).

    These are the permutations increasing on positions 1..m and on
    m+1..m+n; there are C(m+n, m) of them, in lexicographic order.
    """
    if m < 0 or n < 0:
        raise CombinatoricsError(f"Negative degrees ({m}, {n})")
    total = m + n
    reps = []
    for head in itertools.combinations(range(1, total + 1), m):
        tail = tuple(v for v in range(1, total + 1) if v not in head)
        reps.append(Permutation(head + tail))
    reps.sort()
    return reps


def young_subgroup(m: int, n: int) -> List[Permutation]:
    """The image of S_m x S_n in S_{m+n} under direct_sum."""
    return [direct_sum(s, t) for s in permutations(m) for t in permutations(n)]
