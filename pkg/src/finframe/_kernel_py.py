"""Pure-Python implementations of the hot kernels.

Same contracts as the compiled module ``finframe._kernel``; the scan
orders are identical so both backends return bit-identical results.
Element sets are plain integer bitmasks.
"""

from __future__ import annotations


def sublocale_masks(n, top, meet_rows, colmasks):
    """All member bitmasks of sublocales, ascending by mask value.

    ``colmasks[s]`` must be the bitmask of ``{a -> s | a in L}``.  A candidate
    survives when it contains ``top``, is closed under the implication columns
    of its members and is closed under pairwise meets.
    """
    total = 1 << n
    full = total - 1
    topbit = 1 << top
    out = []
    append = out.append
    for m in range(total):
        if not m & topbit:
            continue
        need = 0
        bits = []
        push = bits.append
        mm = m
        while mm:
            low = mm & -mm
            s = low.bit_length() - 1
            need |= colmasks[s]
            push(s)
            mm ^= low
        if need & (full ^ m):
            continue
        ok = True
        nb = len(bits)
        for i in range(nb):
            row = meet_rows[bits[i]]
            for j in range(i, nb):
                if not (m >> row[bits[j]]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            append(m)
    return out


def pointwise_law_failures(n, bot, top, up, meet, join, imp):
    """First witness per failing law among the pointwise Heyting laws 1..10.

    Returns a list of ``(law, a, b, c)`` tuples; ``c`` is -1 for pair laws
    and ``b = c = -1`` for law 1.  An intact frame yields an empty list.
    """
    fails = []
    hit = set()

    row_top = imp[top]
    for a in range(n):
        if row_top[a] != a:
            fails.append((1, a, -1, -1))
            break

    for a in range(n):
        meet_a = meet[a]
        imp_a = imp[a]
        join_a = join[a]
        up_a = up[a]
        for b in range(n):
            if 2 not in hit and ((up_a >> b) & 1) != (imp_a[b] == top):
                hit.add(2)
                fails.append((2, a, b, -1))
            if 3 not in hit and not (up_a >> imp[b][a]) & 1:
                hit.add(3)
                fails.append((3, a, b, -1))
            if 4 not in hit and imp_a[b] != imp_a[meet_a[b]]:
                hit.add(4)
                fails.append((4, a, b, -1))
            if 5 not in hit and meet_a[imp_a[b]] != meet_a[b]:
                hit.add(5)
                fails.append((5, a, b, -1))
            if 8 not in hit and a != meet[join_a[b]][imp[b][a]]:
                hit.add(8)
                fails.append((8, a, b, -1))
            if 9 not in hit and not (up_a >> imp[imp_a[b]][b]) & 1:
                hit.add(9)
                fails.append((9, a, b, -1))
            if 10 not in hit and imp[imp[imp_a[b]][b]][b] != imp_a[b]:
                hit.add(10)
                fails.append((10, a, b, -1))

    for a in range(n):
        meet_a = meet[a]
        imp_a = imp[a]
        for b in range(n):
            m_ab = meet_a[b]
            imp_b = imp[b]
            for c in range(n):
                if 6 not in hit and (meet_a[b] == meet_a[c]) != (imp_a[b] == imp_a[c]):
                    hit.add(6)
                    fails.append((6, a, b, c))
                if 7 not in hit:
                    lhs = imp[m_ab][c]
                    if lhs != imp_a[imp_b[c]] or lhs != imp_b[imp_a[c]]:
                        hit.add(7)
                        fails.append((7, a, b, c))
                if 6 in hit and 7 in hit:
                    break
            if 6 in hit and 7 in hit:
                break
        if 6 in hit and 7 in hit:
            break

    fails.sort()
    return fails


def family_law_failures(n, bot, top, meet, join, imp, subsets):
    """First witness per failing family law (11 and 12).

    For each subset bitmask ``S`` in ``subsets`` checks, over every ``b``,
    that ``(sup S) -> b`` equals the meet of the memberwise implications,
    and dually for meets.  Returns ``(law, subset_mask, b)`` tuples.
    """
    fails = []
    found11 = False
    found12 = False
    for sm in subsets:
        members = []
        push = members.append
        mm = sm
        while mm:
            low = mm & -mm
            push(low.bit_length() - 1)
            mm ^= low
        sup = bot
        inf = top
        for e in members:
            sup = join[sup][e]
            inf = meet[inf][e]
        if not found11:
            row_sup = imp[sup]
            for b in range(n):
                acc = top
                for e in members:
                    acc = meet[acc][imp[e][b]]
                if row_sup[b] != acc:
                    found11 = True
                    fails.append((11, sm, b))
                    break
        if not found12:
            for b in range(n):
                imp_b = imp[b]
                acc = top
                for e in members:
                    acc = meet[acc][imp_b[e]]
                if imp_b[inf] != acc:
                    found12 = True
                    fails.append((12, sm, b))
                    break
        if found11 and found12:
            break
    fails.sort()
    return fails
