"""Per-frame analysis reports.

A report is a plain JSON-shaped dict:

    frame_name, frame_size,
    booleanization: [labels], demorganization: [labels],
    flags: {dense_ok, fitted_B, fitted_M, ed, boolean, B_equals_M, M_equals_L},
    oracle: {ran} or {ran, agree},
    law_failures: [strings], runtime_ms

``oracle.agree`` is present only when the oracle ran.  Corpus runs pass
``runtime_fixed=0`` so output bytes do not depend on wall time.
"""

from __future__ import annotations

import time

from .demorgan import (
    booleanization,
    booleanization_via_dense_opens,
    demorganization,
    is_boolean,
    is_extremally_disconnected,
    oracle_largest_dense_ed,
    oracle_least_dense,
    oracle_unique_boolean_dense,
    verify_nearly_open,
)
from .errors import IntegrityError, OracleFailure
from .frame import Frame, iter_bits, verify_heyting_laws
from .sublocales import (
    DEFAULT_ENUM_CAP,
    Sublocale,
    closed_sublocale,
    enumerate_sublocales,
    fitting,
    intersect_sublocales,
    is_dense,
    is_fitted,
    join_sublocales,
    nucleus_of,
    open_sublocale,
    verify_coframe_law,
)

__all__ = ["analyze_frame", "error_report", "report_failures"]


def _law_failure_strings(frame: Frame, law_report) -> list:
    out = []
    for check in law_report.failures:
        if check.witness is None:
            out.append(check.law)
        elif check.law in ("H11", "H12"):
            mask, b = check.witness
            members = ",".join(frame.labels[i] for i in iter_bits(mask))
            out.append(f"{check.law}[S={{{members}}},b={frame.labels[b]}]")
        else:
            args = ",".join(frame.labels[i] for i in check.witness)
            out.append(f"{check.law}[{args}]")
    return out


def _extended_checks(frame: Frame, B, M, failures: list, *, seed: int,
                     enum_cap: int) -> None:
    """Invariant suite beyond the Heyting laws; appends failure strings."""
    n = frame.size
    up = frame.up
    meet = frame.meet_table
    join = frame.join_table
    hey = frame.heyting_table
    bot = frame.bottom
    top = frame.top
    labels = frame.labels

    # adjunction: c <= a->b iff a ^ c <= b
    for a in range(n):
        for b in range(n):
            ab = hey[a][b]
            for c in range(n):
                if ((up[c] >> ab) & 1) != ((up[meet[a][c]] >> b) & 1):
                    failures.append(f"ADJ[{labels[a]},{labels[b]},{labels[c]}]")
                    break
            else:
                continue
            break
        else:
            continue
        break

    # lattice table sanity: commutative, idempotent, absorptive, associative
    for a in range(n):
        if meet[a][a] != a or join[a][a] != a:
            failures.append(f"LAT[idempotence,{labels[a]}]")
            break
        bad = False
        for b in range(n):
            if meet[a][b] != meet[b][a] or join[a][b] != join[b][a]:
                failures.append(f"LAT[commutativity,{labels[a]},{labels[b]}]")
                bad = True
                break
            if meet[a][join[a][b]] != a or join[a][meet[a][b]] != a:
                failures.append(f"LAT[absorption,{labels[a]},{labels[b]}]")
                bad = True
                break
            for c in range(n):
                if meet[meet[a][b]][c] != meet[a][meet[b][c]] or \
                        join[join[a][b]][c] != join[a][join[b][c]]:
                    failures.append(f"LAT[associativity,{labels[a]},{labels[b]},{labels[c]}]")
                    bad = True
                    break
            if bad:
                break
        if bad:
            break

    # regularization: a <= a**, a* = a***, (a^b)** = a** ^ b**
    def star(x):
        return hey[x][bot]

    for a in range(n):
        if not (up[a] >> star(star(a))) & 1 or star(a) != star(star(star(a))):
            failures.append(f"REG[closure,{labels[a]}]")
            break
        ok = True
        for b in range(n):
            if star(star(meet[a][b])) != meet[star(star(a))][star(star(b))]:
                failures.append(f"REG[meets,{labels[a]},{labels[b]}]")
                ok = False
                break
        if not ok:
            break

    # dense elements are exactly those of the form b v b*
    dense_mask = 0
    forms = 0
    for a in range(n):
        if star(a) == bot:
            dense_mask |= 1 << a
        forms |= 1 << join[a][star(a)]
    if dense_mask != forms:
        failures.append("DENSE-FORM")

    # open/closed complementation and the pairwise o/c identities
    omasks = frame.open_masks()
    for a in range(n):
        o = Sublocale(frame, omasks[a])
        cl = closed_sublocale(frame, a)
        if intersect_sublocales([o, cl]).members != 1 << top or \
                not join_sublocales([o, cl]).is_whole_frame():
            failures.append(f"SUB-ID[complement,{labels[a]}]")
            break
        ok = True
        for b in range(n):
            if omasks[a] & omasks[b] != omasks[meet[a][b]]:
                failures.append(f"SUB-ID[o-meet,{labels[a]},{labels[b]}]")
                ok = False
                break
            if up[a] & up[b] != up[join[a][b]]:
                failures.append(f"SUB-ID[c-join,{labels[a]},{labels[b]}]")
                ok = False
                break
            if join_sublocales([o, Sublocale(frame, omasks[b])]).members != omasks[join[a][b]]:
                failures.append(f"SUB-ID[o-join,{labels[a]},{labels[b]}]")
                ok = False
                break
            if join_sublocales([cl, closed_sublocale(frame, b)]).members != up[meet[a][b]]:
                failures.append(f"SUB-ID[c-meet,{labels[a]},{labels[b]}]")
                ok = False
                break
        if not ok:
            break

    # o(a) dense iff a is a dense element
    for a in range(n):
        if is_dense(Sublocale(frame, omasks[a])) != (star(a) == bot):
            failures.append(f"SUB-ID[o-dense,{labels[a]}]")
            break

    # nucleus law: nu(a) -> s == a -> s, for opens, closed, B and M
    probes = [Sublocale(frame, omasks[a]) for a in range(n)]
    probes += [closed_sublocale(frame, a) for a in range(n)]
    if B is not None:
        probes.append(B)
    if M is not None:
        probes.append(M)
    done = False
    for s in probes:
        nu = nucleus_of(s).table
        for a in range(n):
            na = nu[a]
            for t in iter_bits(s.members):
                if hey[na][t] != hey[a][t]:
                    failures.append(f"LM[{labels[a]},{labels[t]}]")
                    done = True
                    break
            if done:
                break
        if done:
            break

    # fitting is a closure operator
    for s in probes:
        f1 = fitting(s)
        if s.members & ~f1.members or fitting(f1).members != f1.members:
            failures.append("FIT[closure-operator]")
            break

    # dense surjections commute with pseudocomplementation
    for s, tag in ((B, "B"), (M, "M")):
        if s is None:
            continue
        rep = verify_nearly_open(frame, s)
        if not rep.passed:
            a, lhs, rhs = rep.witnesses[0]
            failures.append(f"NEARLY-OPEN[{tag},{labels[a]}]")

    # coframe distributivity, lightly sampled
    if n <= enum_cap:
        rep = verify_coframe_law(frame, samples=60, seed=seed)
        if not rep.passed:
            failures.append("COFRAME")


def analyze_frame(frame: Frame, name: str, *, oracle: bool = False,
                  extended: bool = False, seed: int = 0,
                  enum_cap: int = DEFAULT_ENUM_CAP,
                  runtime_fixed: int | None = None) -> dict:
    """Compute the full report for one frame.

    ``extended`` adds the invariant suite beyond the Heyting laws.
    ``oracle`` runs the enumeration oracles when the frame is within the
    enumeration cap; larger frames record ``oracle.ran = false``.
    """
    t0 = time.perf_counter()
    failures: list = []

    law_report = verify_heyting_laws(frame, seed=seed)
    failures.extend(_law_failure_strings(frame, law_report))

    B = M = None
    try:
        B = booleanization(frame)
        B2 = booleanization_via_dense_opens(frame)
        if B != B2:
            failures.append("INTEGRITY[booleanization-routes]")
    except IntegrityError as exc:
        failures.append(f"INTEGRITY[booleanization: {exc}]")
    try:
        M = demorganization(frame)
    except IntegrityError as exc:
        failures.append(f"INTEGRITY[demorganization: {exc}]")

    def guard(label, fn, default=False):
        try:
            return fn()
        except IntegrityError as exc:
            failures.append(f"INTEGRITY[{label}: {exc}]")
            return default

    flags = {
        "dense_ok": bool(B and M and is_dense(B) and is_dense(M)),
        "fitted_B": bool(B and is_fitted(B)),
        "fitted_M": bool(M and is_fitted(M)),
        "ed": guard("ed", lambda: is_extremally_disconnected(frame)),
        "boolean": is_boolean(frame),
        "B_equals_M": bool(B and M and B.members == M.members),
        "M_equals_L": bool(M and M.is_whole_frame()),
    }
    if B is not None and M is not None and B.members & ~M.members:
        failures.append("INTEGRITY[B-not-inside-M]")
    if flags["ed"] != flags["M_equals_L"] and M is not None:
        failures.append("INTEGRITY[ed-vs-M]")
    if M is not None and flags["boolean"] != bool(B and B.is_whole_frame()):
        failures.append("INTEGRITY[boolean-vs-B]")

    if extended:
        try:
            _extended_checks(frame, B, M, failures, seed=seed, enum_cap=enum_cap)
        except (IntegrityError, IndexError, KeyError) as exc:
            # corrupted tables can break invariant computations midway
            failures.append(f"INTEGRITY[invariant-suite: {exc}]")

    oracle_block: dict = {"ran": False}
    if oracle and frame.size <= enum_cap:
        try:
            subs = enumerate_sublocales(frame, enum_cap)
            least = oracle_least_dense(frame, subs)
            largest = oracle_largest_dense_ed(frame, subs)
            unique = oracle_unique_boolean_dense(frame, subs)
            agree = bool(B and M and least == B and unique == B and largest == M)
            oracle_block = {"ran": True, "agree": agree}
            if not agree:
                failures.append("ORACLE[disagree]")
        except OracleFailure as exc:
            oracle_block = {"ran": True, "agree": False}
            failures.append(f"ORACLE[{exc}]")

    runtime = runtime_fixed
    if runtime is None:
        runtime = int((time.perf_counter() - t0) * 1000)
    return {
        "frame_name": name,
        "frame_size": frame.size,
        "booleanization": B.labels() if B else [],
        "demorganization": M.labels() if M else [],
        "flags": flags,
        "oracle": oracle_block,
        "law_failures": failures,
        "runtime_ms": runtime,
    }


def error_report(name: str, message: str) -> dict:
    """Deterministic placeholder report for a frame that failed to analyze."""
    return {
        "frame_name": name,
        "frame_size": 0,
        "booleanization": [],
        "demorganization": [],
        "flags": {"dense_ok": False, "fitted_B": False, "fitted_M": False,
                  "ed": False, "boolean": False, "B_equals_M": False,
                  "M_equals_L": False},
        "oracle": {"ran": False},
        "law_failures": [f"ERROR[{message}]"],
        "runtime_ms": 0,
    }


def report_failures(report: dict) -> bool:
    if report["law_failures"]:
        return True
    oracle = report["oracle"]
    return bool(oracle.get("ran")) and not oracle.get("agree", False)
