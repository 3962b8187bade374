"""Sublocales of a finite frame.

A sublocale is a subset of the frame containing the top, closed under all
meets and closed under implications from arbitrary elements.  Subsets are
stored as member bitmasks; in a finite lattice, closure under pairwise
meets plus the top implies closure under all meets, so the recognizer
checks only pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import kernel
from .errors import EmptyList, FrameMismatch, IntegrityError, NotPrime, TooLarge
from .frame import Frame, iter_bits

__all__ = [
    "Sublocale",
    "Nucleus",
    "InducedFrame",
    "CoframeReport",
    "is_sublocale",
    "open_sublocale",
    "closed_sublocale",
    "closure",
    "is_dense",
    "fitting",
    "is_fitted",
    "intersect_sublocales",
    "join_sublocales",
    "nucleus_of",
    "induced_frame",
    "enumerate_sublocales",
    "prime_elements",
    "is_isolated_point",
    "verify_coframe_law",
    "DEFAULT_ENUM_CAP",
]

DEFAULT_ENUM_CAP = 16
COFRAME_EXHAUSTIVE_LIMIT = 200


class Sublocale:
    """A sublocale as a member bitmask over its ambient frame.

    Equality is bitmask equality over the identical frame object;
    comparing sublocales of different frames raises FrameMismatch so that
    harness bugs surface instead of silently comparing unequal.
    """

    __slots__ = ("frame", "members")

    def __init__(self, frame: Frame, members: int):
        self.frame = frame
        self.members = members

    @classmethod
    def from_elements(cls, frame: Frame, elems) -> "Sublocale":
        return cls(frame, frame.as_mask(elems))

    def _check_same_frame(self, other: "Sublocale") -> None:
        if self.frame is not other.frame:
            raise FrameMismatch("sublocales belong to different frames")

    def __eq__(self, other):
        if not isinstance(other, Sublocale):
            return NotImplemented
        self._check_same_frame(other)
        return self.members == other.members

    def __hash__(self):
        return hash((id(self.frame), self.members))

    def __le__(self, other):
        if not isinstance(other, Sublocale):
            return NotImplemented
        self._check_same_frame(other)
        return self.members & ~other.members == 0

    def __lt__(self, other):
        return self <= other and self.members != other.members

    def __contains__(self, a: int) -> bool:
        return bool((self.members >> self.frame.check(a)) & 1)

    def __iter__(self):
        return iter_bits(self.members)

    def __len__(self):
        return bin(self.members).count("1")

    def labels(self) -> list[str]:
        """Member element labels in frame element order."""
        return self.frame.labels_of(self.members)

    def is_whole_frame(self) -> bool:
        return self.members == self.frame.full_mask

    def __repr__(self):
        tag = self.frame.name or f"{self.frame.size}-element frame"
        return f"<Sublocale of {tag}: {{{','.join(self.labels())}}}>"


class Nucleus:
    """The inflationary idempotent meet-preserving map attached to a sublocale."""

    __slots__ = ("frame", "table")

    def __init__(self, frame: Frame, table):
        self.frame = frame
        self.table = tuple(table)

    def __call__(self, a: int) -> int:
        return self.table[self.frame.check(a)]

    def __eq__(self, other):
        if not isinstance(other, Nucleus):
            return NotImplemented
        if self.frame is not other.frame:
            raise FrameMismatch("nuclei belong to different frames")
        return self.table == other.table

    def __hash__(self):
        return hash((id(self.frame), self.table))

    def __repr__(self):
        return f"<Nucleus {list(self.table)}>"


class InducedFrame(Frame):
    """A frame living on the members of a sublocale.

    Meets and implications agree with the ambient frame; joins apply the
    nucleus to ambient joins; the bottom is the meet of all members.
    ``ambient_ids[i]`` maps local element i to its ambient id.
    """

    __slots__ = ("ambient", "ambient_ids", "_local")

    def __init__(self, ambient: Frame, ambient_ids, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.ambient = ambient
        self.ambient_ids = tuple(ambient_ids)
        local = {a: i for i, a in enumerate(self.ambient_ids)}
        self._local = local

    def to_ambient(self, i: int) -> int:
        return self.ambient_ids[self.check(i)]

    def from_ambient(self, a: int) -> int:
        try:
            return self._local[a]
        except KeyError:
            raise IndexError(f"ambient element {a} is not a member of the sublocale") from None


def _members_mask(frame: Frame, members) -> int:
    if isinstance(members, Sublocale):
        if members.frame is not frame:
            raise FrameMismatch("sublocale belongs to a different frame")
        return members.members
    return frame.as_mask(members)


def is_sublocale(frame: Frame, members) -> bool:
    """True iff the subset contains top, is meet-closed and implication-closed."""
    mask = _members_mask(frame, members)
    if not (mask >> frame.top) & 1:
        return False
    need = 0
    cols = frame.heyting_column_masks()
    bits = []
    for s in iter_bits(mask):
        need |= cols[s]
        bits.append(s)
    if need & ~mask:
        return False
    meet = frame.meet_table
    nb = len(bits)
    for i in range(nb):
        row = meet[bits[i]]
        for j in range(i, nb):
            if not (mask >> row[bits[j]]) & 1:
                return False
    return True


def open_sublocale(frame: Frame, a: int) -> Sublocale:
    """o(a): the image of the implication a -> (-) ."""
    return Sublocale(frame, frame.open_masks()[frame.check(a)])


def closed_sublocale(frame: Frame, a: int) -> Sublocale:
    """c(a): the upset of a."""
    return Sublocale(frame, frame.up[frame.check(a)])


def closure(s: Sublocale) -> Sublocale:
    """Smallest closed sublocale containing s: the upset of the meet of s."""
    return closed_sublocale(s.frame, s.frame.big_meet(s.members))


def is_dense(s: Sublocale) -> bool:
    """Dense iff the closure is everything, i.e. the meet of s is the bottom."""
    return s.frame.big_meet(s.members) == s.frame.bottom


def fitting(s: Sublocale) -> Sublocale:
    """Smallest fitted sublocale containing s: the intersection of the opens above it."""
    frame = s.frame
    acc = frame.full_mask
    for om in frame.open_masks():
        if s.members & ~om == 0:
            acc &= om
    return Sublocale(frame, acc)


def is_fitted(s: Sublocale) -> bool:
    return fitting(s).members == s.members


def intersect_sublocales(subs, frame: Frame | None = None) -> Sublocale:
    """Intersection of sublocales; the empty intersection is the whole frame."""
    subs = list(subs)
    if not subs:
        if frame is None:
            raise EmptyList("cannot intersect an empty family without a frame")
        return Sublocale(frame, frame.full_mask)
    base = subs[0].frame
    if frame is not None and base is not frame:
        raise FrameMismatch("sublocales belong to a different frame")
    acc = base.full_mask
    for s in subs:
        if s.frame is not base:
            raise FrameMismatch("sublocales belong to different frames")
        acc &= s.members
    return Sublocale(base, acc)


def _meet_closure_mask(frame: Frame, mask: int) -> int:
    """Close a member bitmask under pairwise meets (top must already be in)."""
    meet = frame.meet_table
    cur = mask
    while True:
        add = 0
        bits = list(iter_bits(cur))
        nb = len(bits)
        for i in range(nb):
            row = meet[bits[i]]
            for j in range(i + 1, nb):
                v = row[bits[j]]
                if not (cur >> v) & 1:
                    add |= 1 << v
        if not add:
            return cur
        cur |= add


def join_sublocales(subs, frame: Frame | None = None) -> Sublocale:
    """Join in the coframe of sublocales: all meets of subsets of the union."""
    subs = list(subs)
    if not subs:
        if frame is None:
            raise EmptyList("cannot join an empty family without a frame")
        return Sublocale(frame, 1 << frame.top)
    base = subs[0].frame
    if frame is not None and base is not frame:
        raise FrameMismatch("sublocales belong to a different frame")
    union = 1 << base.top
    for s in subs:
        if s.frame is not base:
            raise FrameMismatch("sublocales belong to different frames")
        union |= s.members
    return Sublocale(base, _meet_closure_mask(base, union))


def nucleus_of(s: Sublocale) -> Nucleus:
    """The map sending a to the least member of s above a."""
    frame = s.frame
    table = []
    for a in range(frame.size):
        table.append(frame.big_meet(s.members & frame.up[a]))
    return Nucleus(frame, table)


def induced_frame(s: Sublocale) -> InducedFrame:
    """The frame structure carried by the members of a sublocale."""
    frame = s.frame
    ids = list(iter_bits(s.members))
    k = len(ids)
    local = {a: i for i, a in enumerate(ids)}

    def loc(x):
        try:
            return local[x]
        except KeyError:
            raise IntegrityError(
                "subset is not closed under the frame operations") from None

    nu = nucleus_of(s).table
    up = [0] * k
    for i, a in enumerate(ids):
        for j, b in enumerate(ids):
            if (frame.up[a] >> b) & 1:
                up[i] |= 1 << j
    meet = [[loc(frame.meet_table[a][b]) for b in ids] for a in ids]
    join = [[loc(nu[frame.join_table[a][b]]) for b in ids] for a in ids]
    heyting = [[loc(frame.heyting_table[a][b]) for b in ids] for a in ids]
    bottom = loc(frame.big_meet(s.members))
    top = local[frame.top]
    labels = tuple(frame.labels[a] for a in ids)
    name = None
    if frame.name:
        name = f"{frame.name}|{{{','.join(labels)}}}"
    return InducedFrame(frame, ids, k, up, meet, join, heyting, bottom, top, labels, name)


def enumerate_sublocales(frame: Frame, cap: int = DEFAULT_ENUM_CAP) -> list[Sublocale]:
    """All sublocales, sorted ascending by member bitmask value."""
    if frame.size > cap:
        raise TooLarge(
            f"sublocale enumeration capped at {cap} elements, frame has {frame.size}")
    masks = kernel.sublocale_masks(
        frame.size, frame.top, frame.meet_table, frame.heyting_column_masks())
    return [Sublocale(frame, m) for m in masks]


def prime_elements(frame: Frame) -> int:
    """Bitmask of primes: p != 1 with a∧b <= p implying a <= p or b <= p."""
    n = frame.size
    meet = frame.meet_table
    up = frame.up
    result = 0
    for p in range(n):
        if p == frame.top:
            continue
        pbit_holders = 0  # mask of a with a <= p
        for a in range(n):
            if (up[a] >> p) & 1:
                pbit_holders |= 1 << a
        prime = True
        for a in range(n):
            row = meet[a]
            a_le = (pbit_holders >> a) & 1
            for b in range(a, n):
                if (up[row[b]] >> p) & 1 and not a_le and not (pbit_holders >> b) & 1:
                    prime = False
                    break
            if not prime:
                break
        if prime:
            result |= 1 << p
    return result


def is_isolated_point(frame: Frame, p: int) -> bool:
    """True iff the two-element sublocale {1, p} is open."""
    p = frame.check(p)
    if not (prime_elements(frame) >> p) & 1:
        raise NotPrime(f"element {frame.labels[p]!r} is not a prime of the frame")
    bp = (1 << p) | (1 << frame.top)
    return bp in set(frame.open_masks())


@dataclass(frozen=True)
class CoframeReport:
    passed: bool
    mode: str
    checked: int
    witnesses: tuple

    def __bool__(self):
        return self.passed


def verify_coframe_law(frame: Frame, samples: int | None = None, *,
                       seed: int = 0, cap: int = DEFAULT_ENUM_CAP) -> CoframeReport:
    """Check join-distributes-over-intersections on the sublocale lattice.

    With ``samples=None`` the check is exhaustive over all (S, T1, T2)
    triples when there are at most ``COFRAME_EXHAUSTIVE_LIMIT`` sublocales
    (falling back to 1000 samples above that); an explicit ``samples``
    count always samples seeded random triples.
    """
    subs = enumerate_sublocales(frame, cap)
    masks = [s.members for s in subs]
    k = len(masks)
    index = {m: i for i, m in enumerate(masks)}
    memo = {}

    def join_mask(i, j):
        if i > j:
            i, j = j, i
        key = (i, j)
        got = memo.get(key)
        if got is None:
            got = _meet_closure_mask(frame, masks[i] | masks[j])
            memo[key] = got
        return got

    witnesses = []
    checked = 0
    if samples is None and k <= COFRAME_EXHAUSTIVE_LIMIT:
        mode = "exhaustive"
        for si in range(k):
            for t1 in range(k):
                for t2 in range(t1, k):
                    inter = index[masks[t1] & masks[t2]]
                    checked += 1
                    if join_mask(si, inter) != join_mask(si, t1) & join_mask(si, t2):
                        if len(witnesses) < 5:
                            witnesses.append((masks[si], masks[t1], masks[t2]))
    else:
        mode = "sampled"
        if samples is None:
            samples = 1000
        rng = random.Random(seed)
        for _ in range(samples):
            si = rng.randrange(k)
            t1 = rng.randrange(k)
            t2 = rng.randrange(k)
            inter = index[masks[t1] & masks[t2]]
            checked += 1
            if join_mask(si, inter) != join_mask(si, t1) & join_mask(si, t2):
                if len(witnesses) < 5:
                    witnesses.append((masks[si], masks[t1], masks[t2]))
    return CoframeReport(not witnesses, mode, checked, tuple(witnesses))
