# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels: sublocale candidate filtering and Heyting law scans.

Mirrors finframe._kernel_py exactly (same scan orders, same return
shapes); the selector in finframe.kernel routes oversized frames to the
pure backend, so these kernels may assume masks fit in 64 bits.
"""

from cpython cimport array
import array as _array


cdef array.array _int_template = _array.array("i", [])
cdef array.array _ull_template = _array.array("Q", [])


cdef array.array _flatten(rows):
    flat = []
    for row in rows:
        flat.extend(row)
    return _array.array("i", flat)


def sublocale_masks(int n, int top, meet_rows, colmasks):
    cdef array.array meet_arr = _flatten(meet_rows)
    cdef array.array col_arr = _array.array("Q", list(colmasks))
    cdef int[::1] meet = meet_arr
    cdef unsigned long long[::1] col = col_arr
    cdef unsigned long long total = (<unsigned long long> 1) << n
    cdef unsigned long long full = total - 1
    cdef unsigned long long topbit = (<unsigned long long> 1) << top
    cdef unsigned long long m, need
    cdef int bits[32]
    cdef int nb, i, j, s
    cdef bint ok
    out = []
    for m in range(total):
        if not (m & topbit):
            continue
        need = 0
        nb = 0
        for s in range(n):
            if (m >> s) & 1:
                bits[nb] = s
                nb += 1
                need |= col[s]
        if need & (full ^ m):
            continue
        ok = True
        for i in range(nb):
            for j in range(i, nb):
                if not ((m >> meet[bits[i] * n + bits[j]]) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(m)
    return out


def pointwise_law_failures(int n, int bot, int top, up_masks, meet_rows, join_rows, imp_rows):
    cdef array.array up_arr = _array.array("Q", list(up_masks))
    cdef array.array meet_arr = _flatten(meet_rows)
    cdef array.array join_arr = _flatten(join_rows)
    cdef array.array imp_arr = _flatten(imp_rows)
    cdef unsigned long long[::1] up = up_arr
    cdef int[::1] meet = meet_arr
    cdef int[::1] join = join_arr
    cdef int[::1] imp = imp_arr
    cdef int a, b, c, lhs, m_ab
    cdef bint h2 = False, h3 = False, h4 = False, h5 = False
    cdef bint h6 = False, h7 = False, h8 = False, h9 = False, h10 = False
    fails = []

    for a in range(n):
        if imp[top * n + a] != a:
            fails.append((1, a, -1, -1))
            break

    for a in range(n):
        for b in range(n):
            if not h2 and (((up[a] >> b) & 1) != (imp[a * n + b] == top)):
                h2 = True
                fails.append((2, a, b, -1))
            if not h3 and not (up[a] >> imp[b * n + a]) & 1:
                h3 = True
                fails.append((3, a, b, -1))
            if not h4 and imp[a * n + b] != imp[a * n + meet[a * n + b]]:
                h4 = True
                fails.append((4, a, b, -1))
            if not h5 and meet[a * n + imp[a * n + b]] != meet[a * n + b]:
                h5 = True
                fails.append((5, a, b, -1))
            if not h8 and a != meet[join[a * n + b] * n + imp[b * n + a]]:
                h8 = True
                fails.append((8, a, b, -1))
            if not h9 and not (up[a] >> imp[imp[a * n + b] * n + b]) & 1:
                h9 = True
                fails.append((9, a, b, -1))
            if not h10 and imp[imp[imp[a * n + b] * n + b] * n + b] != imp[a * n + b]:
                h10 = True
                fails.append((10, a, b, -1))

    for a in range(n):
        for b in range(n):
            m_ab = meet[a * n + b]
            for c in range(n):
                if not h6 and ((meet[a * n + b] == meet[a * n + c]) !=
                               (imp[a * n + b] == imp[a * n + c])):
                    h6 = True
                    fails.append((6, a, b, c))
                if not h7:
                    lhs = imp[m_ab * n + c]
                    if (lhs != imp[a * n + imp[b * n + c]] or
                            lhs != imp[b * n + imp[a * n + c]]):
                        h7 = True
                        fails.append((7, a, b, c))
                if h6 and h7:
                    break
            if h6 and h7:
                break
        if h6 and h7:
            break

    fails.sort()
    return fails


def family_law_failures(int n, int bot, int top, meet_rows, join_rows, imp_rows, subsets):
    cdef array.array meet_arr = _flatten(meet_rows)
    cdef array.array join_arr = _flatten(join_rows)
    cdef array.array imp_arr = _flatten(imp_rows)
    cdef int[::1] meet = meet_arr
    cdef int[::1] join = join_arr
    cdef int[::1] imp = imp_arr
    cdef unsigned long long sm
    cdef int members[64]
    cdef int na, i, b, sup, inf, acc, s
    cdef bint found11 = False, found12 = False
    fails = []
    for obj in subsets:
        sm = obj
        na = 0
        for s in range(n):
            if (sm >> s) & 1:
                members[na] = s
                na += 1
        sup = bot
        inf = top
        for i in range(na):
            sup = join[sup * n + members[i]]
            inf = meet[inf * n + members[i]]
        if not found11:
            for b in range(n):
                acc = top
                for i in range(na):
                    acc = meet[acc * n + imp[members[i] * n + b]]
                if imp[sup * n + b] != acc:
                    found11 = True
                    fails.append((11, int(sm), b))
                    break
        if not found12:
            for b in range(n):
                acc = top
                for i in range(na):
                    acc = meet[acc * n + imp[b * n + members[i]]]
                if imp[b * n + inf] != acc:
                    found12 = True
                    fails.append((12, int(sm), b))
                    break
        if found11 and found12:
            break
    fails.sort()
    return fails
