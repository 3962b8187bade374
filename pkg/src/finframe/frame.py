"""Finite frames (complete Heyting algebras) with precomputed operation tables.

Elements are dense integer ids ``0..size-1``.  The order is stored as
per-element upset bitmasks and all binary operations (meet, join, Heyting
implication) are precomputed into ``size x size`` tables at build time, so
every downstream algorithm is table-lookup bound.  Frames are immutable
after construction and safe to share across threads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernel
from .errors import NotALattice, NotAntisymmetric, NotDistributive

__all__ = [
    "Frame",
    "LawCheck",
    "LawReport",
    "build_frame",
    "frame_from_tables",
    "iter_bits",
    "verify_heyting_laws",
]

# exhaustive subset checks for the family laws up to this many elements
SUBSET_EXHAUSTIVE_LIMIT = 12
SUBSET_SAMPLES = 1000


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Frame:
    """A finite frame given by order bitmasks and full operation tables.

    Construct through :func:`build_frame` or the builders module; this
    constructor trusts its inputs and performs no validation.
    """

    __slots__ = (
        "size",
        "up",
        "down",
        "meet_table",
        "join_table",
        "heyting_table",
        "bottom",
        "top",
        "labels",
        "name",
        "_open_masks",
        "_colmasks",
    )

    def __init__(self, size, up, meet_table, join_table, heyting_table,
                 bottom, top, labels=None, name=None):
        self.size = size
        self.up = tuple(up)
        down = [0] * size
        for a in range(size):
            for b in iter_bits(self.up[a]):
                down[b] |= 1 << a
        self.down = tuple(down)
        self.meet_table = tuple(tuple(row) for row in meet_table)
        self.join_table = tuple(tuple(row) for row in join_table)
        self.heyting_table = tuple(tuple(row) for row in heyting_table)
        self.bottom = bottom
        self.top = top
        if labels is None:
            labels = tuple(str(i) for i in range(size))
        self.labels = tuple(labels)
        self.name = name
        self._open_masks = None
        self._colmasks = None

    # -- element plumbing -------------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.size:
            raise IndexError(f"element id {a!r} out of range for frame of size {self.size}")
        return a

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def as_mask(self, elems) -> int:
        """Normalize an element set (bitmask or iterable of ids) to a bitmask."""
        if isinstance(elems, int):
            if elems < 0 or elems > self.full_mask:
                raise IndexError(f"bitmask {elems:#x} out of range for frame of size {self.size}")
            return elems
        mask = 0
        for a in elems:
            mask |= 1 << self.check(a)
        return mask

    def label(self, a: int) -> str:
        return self.labels[self.check(a)]

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[a] for a in iter_bits(mask)]

    # -- order and lattice operations -------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return bool((self.up[self.check(a)] >> self.check(b)) & 1)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[self.check(a)][self.check(b)]

    def join(self, a: int, b: int) -> int:
        return self.join_table[self.check(a)][self.check(b)]

    def heyting(self, a: int, b: int) -> int:
        """Largest c with a meet c <= b (the implication a -> b)."""
        return self.heyting_table[self.check(a)][self.check(b)]

    def pseudocomplement(self, a: int) -> int:
        return self.heyting_table[self.check(a)][self.bottom]

    def is_dense_element(self, a: int) -> bool:
        return self.pseudocomplement(a) == self.bottom

    def big_meet(self, elems) -> int:
        """Infimum of an element set; the empty meet is the top."""
        acc = self.top
        table = self.meet_table
        for a in iter_bits(self.as_mask(elems)):
            acc = table[acc][a]
        return acc

    def big_join(self, elems) -> int:
        """Supremum of an element set; the empty join is the bottom."""
        acc = self.bottom
        table = self.join_table
        for a in iter_bits(self.as_mask(elems)):
            acc = table[acc][a]
        return acc

    # -- cached derived data ----------------------------------------------

    def open_masks(self) -> tuple:
        """Member bitmask of the open sublocale o(u), indexed by u."""
        if self._open_masks is None:
            masks = []
            for u in range(self.size):
                row = self.heyting_table[u]
                m = 0
                for b in range(self.size):
                    m |= 1 << row[b]
                masks.append(m)
            self._open_masks = tuple(masks)
        return self._open_masks

    def heyting_column_masks(self) -> tuple:
        """Bitmask of {a -> s | a in L}, indexed by s."""
        if self._colmasks is None:
            cols = [0] * self.size
            for a in range(self.size):
                row = self.heyting_table[a]
                for s in range(self.size):
                    cols[s] |= 1 << row[s]
            self._colmasks = tuple(cols)
        return self._colmasks

    def __repr__(self):
        tag = self.name or f"{self.size} elements"
        return f"<Frame {tag}>"


def _transitive_closure(size: int, pairs) -> list[int]:
    up = [1 << a for a in range(size)]
    for a, b in pairs:
        if not (0 <= a < size and 0 <= b < size):
            raise ValueError(f"order pair ({a}, {b}) references ids outside 0..{size - 1}")
        up[a] |= 1 << b
    for k in range(size):
        bit = 1 << k
        row_k = up[k]
        for a in range(size):
            if up[a] & bit:
                up[a] |= row_k
    return up


def _check_antisymmetry(size: int, up: Sequence[int], labels=None) -> None:
    for a in range(size):
        for b in iter_bits(up[a]):
            if b != a and (up[b] >> a) & 1:
                la, lb = (labels[a], labels[b]) if labels else (a, b)
                raise NotAntisymmetric(f"order cycle between {la!r} and {lb!r}")


def _greatest(mask: int, down: Sequence[int]):
    for x in iter_bits(mask):
        if not mask & ~down[x]:
            return x
    return None


def _least(mask: int, up: Sequence[int]):
    for x in iter_bits(mask):
        if not mask & ~up[x]:
            return x
    return None


def build_frame(size: int, pairs: Iterable[tuple[int, int]], labels=None, name=None) -> Frame:
    """Build a validated frame from an order relation.

    ``pairs`` lists (lower, upper) id pairs; the reflexive-transitive
    closure is taken before validation, so covering relations suffice.
    Raises NotAntisymmetric, NotALattice or NotDistributive on bad input.
    """
    if size < 1:
        raise NotALattice("a frame needs at least one element")
    up = _transitive_closure(size, pairs)
    _check_antisymmetry(size, up, labels)
    down = [0] * size
    for a in range(size):
        for b in iter_bits(up[a]):
            down[b] |= 1 << a

    meet = [[0] * size for _ in range(size)]
    join = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            lb = down[a] & down[b]
            m = _greatest(lb, down)
            if m is None:
                raise NotALattice(f"elements {a} and {b} have no meet")
            ub = up[a] & up[b]
            j = _least(ub, up)
            if j is None:
                raise NotALattice(f"elements {a} and {b} have no join")
            meet[a][b] = meet[b][a] = m
            join[a][b] = join[b][a] = j

    bottom = 0
    top = 0
    for a in range(1, size):
        bottom = meet[bottom][a]
        top = join[top][a]

    for a in range(size):
        meet_a = meet[a]
        for b in range(size):
            ab = meet_a[b]
            join_b = join[b]
            for c in range(size):
                if meet_a[join_b[c]] != join[ab][meet_a[c]]:
                    witness = (a, b, c)
                    if labels:
                        shown = tuple(labels[x] for x in witness)
                    else:
                        shown = witness
                    raise NotDistributive(
                        f"meet fails to distribute over join at {shown}", witness=witness)

    heyting = [[0] * size for _ in range(size)]
    for a in range(size):
        meet_a = meet[a]
        row = heyting[a]
        for b in range(size):
            acc = bottom
            for c in range(size):
                if (up[meet_a[c]] >> b) & 1:
                    acc = join[acc][c]
            row[b] = acc

    return Frame(size, up, meet, join, heyting, bottom, top, labels, name)


def frame_from_tables(size, pairs, meet_table, join_table, heyting_table,
                      labels=None, name=None) -> Frame:
    """Assemble a frame from explicit tables, validating only shape and order.

    This is the raw ingestion path: the tables are taken as given, so a
    corrupted table yields a frame whose defects are caught by
    :func:`verify_heyting_laws` rather than at construction.
    """
    if size < 1:
        raise NotALattice("a frame needs at least one element")
    up = _transitive_closure(size, pairs)
    _check_antisymmetry(size, up, labels)
    for tag, table in (("meet", meet_table), ("join", join_table), ("heyting", heyting_table)):
        if len(table) != size or any(len(row) != size for row in table):
            raise NotALattice(f"{tag} table must be {size}x{size}")
        for row in table:
            for v in row:
                if not 0 <= v < size:
                    raise NotALattice(f"{tag} table entry {v} out of range")
    full = (1 << size) - 1
    bottom = next((a for a in range(size) if up[a] == full), None)
    top = next((a for a in range(size) if up[a] == 1 << a), None)
    if bottom is None or top is None:
        raise NotALattice("order has no global least or greatest element")
    return Frame(size, up, meet_table, join_table, heyting_table, bottom, top, labels, name)


@dataclass(frozen=True)
class LawCheck:
    law: str
    passed: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class LawReport:
    checks: tuple
    subset_mode: str

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def verify_heyting_laws(frame: Frame, *, seed: int = 0) -> LawReport:
    """Check the twelve Heyting laws, returning per-law results with witnesses.

    Laws 1-10 are scanned over all element pairs/triples.  The two family
    laws quantify over subsets: all subsets when the frame has at most
    ``SUBSET_EXHAUSTIVE_LIMIT`` elements, else a seeded random sample of
    ``SUBSET_SAMPLES`` subsets per law.
    """
    n = frame.size
    pw = kernel.pointwise_law_failures(
        n, frame.bottom, frame.top, frame.up,
        frame.meet_table, frame.join_table, frame.heyting_table)
    if n <= SUBSET_EXHAUSTIVE_LIMIT:
        subsets = list(range(1 << n))
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        subsets = [rng.getrandbits(n) for _ in range(SUBSET_SAMPLES)]
        mode = "sampled"
    fam = kernel.family_law_failures(
        n, frame.bottom, frame.top,
        frame.meet_table, frame.join_table, frame.heyting_table, subsets)

    witness = {}
    for law, a, b, c in pw:
        witness[law] = tuple(x for x in (a, b, c) if x >= 0)
    for law, subset_mask, b in fam:
        witness[law] = (subset_mask, b)

    checks = tuple(
        LawCheck(f"H{i}", i not in witness, witness.get(i))
        for i in range(1, 13))
    return LawReport(checks, mode)
