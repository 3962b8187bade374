"""Frame constructors: topologies, posets, standard families, products, corpora.

Also ships the three canonical fixtures C3 (three-element chain), B4
(four-element Boolean frame) and F5 (five-element non-extremally-
disconnected frame) used as regression anchors throughout the tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CyclicPoset, NotATopology, TooLarge
from .frame import Frame, build_frame, iter_bits

__all__ = [
    "TopologySpec",
    "PosetSpec",
    "from_topology",
    "downset_frame",
    "standard_frame",
    "product_frame",
    "random_topology",
    "enumerate_topologies",
    "fixture",
    "c3",
    "b4",
    "f5",
    "DEFAULT_SIZE_CAP",
]

DEFAULT_SIZE_CAP = 1 << 16
RANDOM_POINT_LIMIT = 6
CENSUS_POINT_LIMIT = 4
_POINT_NAMES = ("x", "y", "z", "w", "v", "u")


@dataclass(frozen=True)
class TopologySpec:
    """Points plus the family of open point-sets."""

    points: tuple
    opens: tuple
    name: str | None = None


@dataclass(frozen=True)
class PosetSpec:
    """Named elements plus (lower, upper) cover pairs."""

    elements: tuple
    covers: tuple
    name: str | None = None


def _set_label(mask: int, names) -> str:
    if mask == 0:
        return "∅"
    return "{" + ",".join(names[i] for i in iter_bits(mask)) + "}"


def _frame_of_setsystem(point_count: int, masks, names, name=None) -> Frame:
    """Frame of a family of point-set bitmasks closed under union/intersection.

    ``masks`` must be sorted, contain the empty and the full set, and be
    closed under pairwise & and |.  Meets are intersections, joins unions,
    and the implication is the union of all members c with a & c <= b.
    """
    size = len(masks)
    index = {m: i for i, m in enumerate(masks)}
    up = [0] * size
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            if mi & ~mj == 0:
                up[i] |= 1 << j
    meet = [[index[ma & mb] for mb in masks] for ma in masks]
    join = [[index[ma | mb] for mb in masks] for ma in masks]
    heyting = []
    for ma in masks:
        row = []
        for mb in masks:
            u = 0
            for mc in masks:
                if ma & mc & ~mb == 0:
                    u |= mc
            row.append(index[u])
        heyting.append(row)
    labels = tuple(_set_label(m, names) for m in masks)
    full = (1 << point_count) - 1
    return Frame(size, up, meet, join, heyting, index[0], index[full], labels, name)


def _sorted_masks(masks) -> list[int]:
    return sorted(masks, key=lambda m: (bin(m).count("1"), m))


def from_topology(spec: TopologySpec) -> Frame:
    """Frame of opens of a finite topological space, ordered by inclusion."""
    points = tuple(spec.points)
    if len(set(points)) != len(points):
        raise NotATopology("duplicate point names")
    npts = len(points)
    if npts == 0:
        raise NotATopology("a space needs at least one point")
    index = {p: i for i, p in enumerate(points)}
    masks = []
    for o in spec.opens:
        m = 0
        for p in o:
            if p not in index:
                raise NotATopology(f"open set mentions unknown point {p!r}")
            m |= 1 << index[p]
        if m in masks:
            raise NotATopology(f"duplicate open set {sorted(o)!r}")
        masks.append(m)
    full = (1 << npts) - 1
    have = set(masks)
    if 0 not in have:
        raise NotATopology("the empty set is not open")
    if full not in have:
        raise NotATopology("the full point set is not open")
    for i, ma in enumerate(masks):
        for mb in masks[i + 1:]:
            if ma | mb not in have:
                raise NotATopology(
                    f"union of {_set_label(ma, points)} and {_set_label(mb, points)} is not open")
            if ma & mb not in have:
                raise NotATopology(
                    f"intersection of {_set_label(ma, points)} and {_set_label(mb, points)} is not open")
    return _frame_of_setsystem(npts, _sorted_masks(masks), points, spec.name)


def downset_frame(spec: PosetSpec) -> Frame:
    """Frame of downward-closed subsets of a finite poset, ordered by inclusion."""
    elems = tuple(spec.elements)
    if len(set(elems)) != len(elems):
        raise CyclicPoset("duplicate element names")
    p = len(elems)
    if p == 0:
        raise CyclicPoset("a poset needs at least one element")
    if p > 20:
        raise TooLarge(f"downset enumeration capped at 20 poset elements, got {p}")
    index = {e: i for i, e in enumerate(elems)}
    down = [1 << i for i in range(p)]
    edges = []
    for lo, hi in spec.covers:
        if lo not in index or hi not in index:
            raise CyclicPoset(f"cover ({lo!r}, {hi!r}) mentions unknown elements")
        edges.append((index[lo], index[hi]))
    changed = True
    while changed:
        changed = False
        for lo, hi in edges:
            new = down[hi] | down[lo]
            if new != down[hi]:
                down[hi] = new
                changed = True
    for a in range(p):
        for b in iter_bits(down[a]):
            if b != a and (down[b] >> a) & 1:
                raise CyclicPoset(f"cover cycle through {elems[a]!r} and {elems[b]!r}")
    ideals = [m for m in range(1 << p)
              if all(down[e] & ~m == 0 for e in iter_bits(m))]
    return _frame_of_setsystem(p, _sorted_masks(ideals), elems, spec.name)


def standard_frame(kind: str, n: int, *, size_cap: int = DEFAULT_SIZE_CAP) -> Frame:
    """A chain with n elements, or the Boolean frame with 2**n elements."""
    if kind == "chain":
        if n < 1:
            raise ValueError("a chain needs at least one element")
        if n > size_cap:
            raise TooLarge(f"chain size {n} exceeds cap {size_cap}")
        up = [((1 << n) - 1) >> i << i for i in range(n)]
        meet = [[min(a, b) for b in range(n)] for a in range(n)]
        join = [[max(a, b) for b in range(n)] for a in range(n)]
        heyting = [[n - 1 if a <= b else b for b in range(n)] for a in range(n)]
        return Frame(n, up, meet, join, heyting, 0, n - 1,
                     tuple(str(i) for i in range(n)), f"chain{n}")
    if kind == "boolean":
        if n < 0:
            raise ValueError("the Boolean family needs n >= 0 atoms")
        size = 1 << n
        if size > size_cap:
            raise TooLarge(f"Boolean frame with 2**{n} elements exceeds cap {size_cap}")
        full = size - 1
        up = [0] * size
        for a in range(size):
            for b in range(size):
                if a & ~b == 0:
                    up[a] |= 1 << b
        meet = [[a & b for b in range(size)] for a in range(size)]
        join = [[a | b for b in range(size)] for a in range(size)]
        heyting = [[(~a | b) & full for b in range(size)] for a in range(size)]
        atoms = tuple(f"a{i}" for i in range(n))
        labels = tuple(_set_label(m, atoms) for m in range(size))
        return Frame(size, up, meet, join, heyting, 0, full, labels, f"boolean{n}")
    raise ValueError(f"unknown standard family {kind!r}")


def product_frame(left: Frame, right: Frame, *, size_cap: int = DEFAULT_SIZE_CAP) -> Frame:
    """Componentwise-ordered product; all operations act componentwise."""
    size = left.size * right.size
    if size > size_cap:
        raise TooLarge(f"product with {size} elements exceeds cap {size_cap}")
    gn = right.size

    def idx(i, j):
        return i * gn + j

    up = [0] * size
    for i in range(left.size):
        for j in range(gn):
            m = 0
            for k in iter_bits(left.up[i]):
                m |= right.up[j] << (k * gn)
            up[idx(i, j)] = m

    meet = [[0] * size for _ in range(size)]
    join = [[0] * size for _ in range(size)]
    heyting = [[0] * size for _ in range(size)]
    for i in range(left.size):
        for j in range(gn):
            a = idx(i, j)
            for k in range(left.size):
                for l in range(gn):
                    b = idx(k, l)
                    meet[a][b] = idx(left.meet_table[i][k], right.meet_table[j][l])
                    join[a][b] = idx(left.join_table[i][k], right.join_table[j][l])
                    heyting[a][b] = idx(left.heyting_table[i][k], right.heyting_table[j][l])
    labels = tuple(f"({left.labels[i]},{right.labels[j]})"
                   for i in range(left.size) for j in range(gn))
    name = None
    if left.name and right.name:
        name = f"{left.name}x{right.name}"
    return Frame(size, up, meet, join, heyting,
                 idx(left.bottom, right.bottom), idx(left.top, right.top), labels, name)


def _close_family(family: set[int]) -> set[int]:
    fam = set(family)
    changed = True
    while changed:
        changed = False
        items = list(fam)
        for i, a in enumerate(items):
            for b in items[i + 1:]:
                for c in (a | b, a & b):
                    if c not in fam:
                        fam.add(c)
                        changed = True
    return fam


def random_topology(n_points: int, seed: int) -> TopologySpec:
    """A topology generated by closing a random subbasis; deterministic per seed.

    The distribution is not uniform over topologies; the generator exists
    for corpus diversity.
    """
    if n_points < 1:
        raise ValueError("a space needs at least one point")
    if n_points > RANDOM_POINT_LIMIT:
        raise TooLarge(f"random topologies support at most {RANDOM_POINT_LIMIT} points")
    rng = random.Random(seed)
    full = (1 << n_points) - 1
    fam = {0, full}
    for _ in range(n_points):
        fam.add(rng.randrange(0, full + 1))
    fam = _close_family(fam)
    points = _POINT_NAMES[:n_points]
    opens = tuple(tuple(points[i] for i in iter_bits(m)) for m in _sorted_masks(fam))
    return TopologySpec(points, opens, name=f"rand{n_points}p-seed{seed}")


def enumerate_topologies(n_points: int):
    """Yield every topology on n labeled points, in a fixed deterministic order."""
    if n_points < 1:
        raise ValueError("a space needs at least one point")
    if n_points > CENSUS_POINT_LIMIT:
        raise TooLarge(f"exhaustive topology census capped at {CENSUS_POINT_LIMIT} points")
    points = _POINT_NAMES[:n_points]
    full = (1 << n_points) - 1
    count = 0
    for mid in range(1 << max(full - 1, 0)):
        fam_bits = 1 | (mid << 1) | (1 << full)
        members = list(iter_bits(fam_bits))
        ok = True
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if not (fam_bits >> (a | b)) & 1 or not (fam_bits >> (a & b)) & 1:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        opens = tuple(tuple(points[i] for i in iter_bits(m))
                      for m in _sorted_masks(members))
        yield TopologySpec(points, opens, name=f"topo{n_points}p-{count:04d}")
        count += 1


# -- fixtures -------------------------------------------------------------

def c3() -> Frame:
    """Three-element chain 0 < m < 1."""
    return build_frame(3, [(0, 1), (1, 2)], labels=("0", "m", "1"), name="C3")


def b4() -> Frame:
    """Four-element Boolean frame with atoms a, b."""
    return build_frame(4, [(0, 1), (0, 2), (1, 3), (2, 3)],
                       labels=("0", "a", "b", "1"), name="B4")


def f5() -> Frame:
    """Five-element frame 0 < a,b < a∨b < 1; not extremally disconnected."""
    return build_frame(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
                       labels=("0", "a", "b", "a∨b", "1"), name="F5")


_FIXTURES = {"C3": c3, "B4": b4, "F5": f5}


def fixture(name: str) -> Frame:
    """Return a named built-in fixture frame: C3, B4 or F5."""
    try:
        return _FIXTURES[name.upper()]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; expected one of {sorted(_FIXTURES)}") from None
