"""Acceptance suite: one test per criterion, each printing a pass/fail line.

The corpus is every topology on up to 4 labeled points (1 + 4 + 29 + 355
frames) plus 200 seeded random topologies on 5 points.  All checks are
exact equalities; there are no tolerances anywhere.
"""

import pytest

from finframe.builders import (
    b4,
    c3,
    enumerate_topologies,
    f5,
    from_topology,
    random_topology,
)
from finframe.cli import main
from finframe.demorgan import (
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
from finframe.frame import verify_heyting_laws
from finframe.sublocales import (
    DEFAULT_ENUM_CAP,
    enumerate_sublocales,
    is_dense,
    is_fitted,
    nucleus_of,
    verify_coframe_law,
)

RANDOM_FRAMES = 200
CENSUS = (1, 4, 29, 355)


@pytest.fixture(scope="session")
def corpus():
    frames = []
    for n in range(1, 5):
        for spec in enumerate_topologies(n):
            frames.append((spec.name, from_topology(spec)))
    for seed in range(RANDOM_FRAMES):
        spec = random_topology(5, seed)
        frames.append((spec.name, from_topology(spec)))
    return frames


@pytest.fixture(scope="session")
def sublocale_cache(corpus):
    cache = {}
    for name, frame in corpus:
        if frame.size <= DEFAULT_ENUM_CAP:
            cache[name] = enumerate_sublocales(frame)
    return cache


def _report(criterion, ok, detail):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_heyting_law_suite(corpus):
    bad = []
    for name, frame in corpus:
        report = verify_heyting_laws(frame)
        if not report.all_passed:
            bad.append((name, [c.law for c in report.failures]))
    _report(1, not bad,
            f"all 12 laws pass exactly on {len(corpus)} corpus frames"
            if not bad else f"failures: {bad[:3]}")


def test_criterion_2_demorganization_oracle(corpus, sublocale_cache):
    checked = 0
    bad = []
    for name, frame in corpus:
        if frame.size > DEFAULT_ENUM_CAP:
            continue
        got = demorganization(frame)
        want = oracle_largest_dense_ed(frame, sublocale_cache[name])
        checked += 1
        if got != want:
            bad.append(name)
    _report(2, not bad,
            f"demorganization equals the enumeration oracle on {checked} frames"
            if not bad else f"disagreements: {bad[:3]}")


def test_criterion_3_booleanization_triple_agreement(corpus, sublocale_cache):
    checked_routes = 0
    checked_oracles = 0
    bad = []
    for name, frame in corpus:
        B = booleanization(frame)
        if B != booleanization_via_dense_opens(frame):
            bad.append((name, "routes"))
        checked_routes += 1
        if frame.size <= DEFAULT_ENUM_CAP:
            subs = sublocale_cache[name]
            if oracle_least_dense(frame, subs) != B:
                bad.append((name, "least-dense"))
            if oracle_unique_boolean_dense(frame, subs) != B:
                bad.append((name, "unique-boolean"))
            checked_oracles += 1
    _report(3, not bad,
            f"both formulas agree on {checked_routes} frames; "
            f"both oracles agree on {checked_oracles} enumerable frames"
            if not bad else f"disagreements: {bad[:3]}")


def test_criterion_4_structural_flags(corpus):
    bad = []
    for name, frame in corpus:
        B, M = booleanization(frame), demorganization(frame)
        if B.members & ~M.members:
            bad.append((name, "B-not-in-M"))
        if not is_fitted(B) or not is_fitted(M):
            bad.append((name, "fitted"))
        if is_extremally_disconnected(frame) != M.is_whole_frame():
            bad.append((name, "ed-vs-M"))
        if is_boolean(frame) != B.is_whole_frame():
            bad.append((name, "boolean-vs-B"))
    _report(4, not bad,
            f"inclusion, fittedness and the two equivalences hold on {len(corpus)} frames"
            if not bad else f"violations: {bad[:3]}")


def test_criterion_5_nucleus_rule_and_near_openness(corpus, sublocale_cache):
    frames_checked = 0
    sublocales_checked = 0
    bad = []
    for name, frame in corpus:
        if frame.size > 10:
            continue
        frames_checked += 1
        for s in sublocale_cache[name]:
            if not is_dense(s):
                continue
            sublocales_checked += 1
            nu = nucleus_of(s).table
            for a in range(frame.size):
                for t in s:
                    if frame.heyting(nu[a], t) != frame.heyting(a, t):
                        bad.append((name, "nucleus-rule"))
                        break
                else:
                    continue
                break
            if not verify_nearly_open(frame, s).passed:
                bad.append((name, "nearly-open"))
    _report(5, not bad,
            f"nucleus rule and near-openness hold for {sublocales_checked} dense "
            f"sublocales across {frames_checked} frames (≤10 elements)"
            if not bad else f"violations: {bad[:3]}")


def test_criterion_6_coframe_law(corpus):
    bad = []
    for frame in (c3(), b4(), f5()):
        report = verify_coframe_law(frame)
        if not (report.passed and report.mode == "exhaustive"):
            bad.append((frame.name, "exhaustive"))
    sampled = 0
    for name, frame in corpus:
        if frame.size > 10:
            continue
        report = verify_coframe_law(frame, samples=100, seed=0)
        sampled += 1
        if not report.passed:
            bad.append((name, "sampled"))
    _report(6, not bad,
            f"exhaustive on the three fixtures, 100 sampled triples on {sampled} frames"
            if not bad else f"violations: {bad[:3]}")


def test_criterion_7_fixture_regressions():
    problems = []

    C3 = c3()
    subs = enumerate_sublocales(C3)
    masks = [s.members for s in subs]
    if masks != [0b100, 0b101, 0b110, 0b111]:
        problems.append("C3 sublocales")
    B, M = booleanization(C3), demorganization(C3)
    if B != oracle_least_dense(C3, subs) or B.members != 0b101:
        problems.append("C3 booleanization")
    if M != oracle_largest_dense_ed(C3, subs) or not M.is_whole_frame() or not B < M:
        problems.append("C3 demorganization")

    F5 = f5()
    subs = enumerate_sublocales(F5)
    B, M = booleanization(F5), demorganization(F5)
    if [s.members for s in subs] != [16, 18, 20, 23, 24, 26, 28, 31]:
        problems.append("F5 sublocales")
    if B != oracle_least_dense(F5, subs) or M != oracle_largest_dense_ed(F5, subs):
        problems.append("F5 oracle agreement")
    if B.members != 0b10111 or B != M or M.is_whole_frame():
        problems.append("F5 B=M strictly below")
    a = F5.labels.index("a")
    star = F5.pseudocomplement(a)
    if is_extremally_disconnected(F5) or \
            F5.join(star, F5.pseudocomplement(star)) == F5.top:
        problems.append("F5 ed witness")

    B4 = b4()
    subs = enumerate_sublocales(B4)
    if len(subs) != 4:
        problems.append("B4 sublocale count")
    if not (booleanization(B4).is_whole_frame() and
            demorganization(B4).is_whole_frame() and
            oracle_least_dense(B4, subs).is_whole_frame()):
        problems.append("B4 B=M=L")

    _report(7, not problems,
            "C3/F5/B4 goldens match the enumeration oracle"
            if not problems else f"regressions: {problems}")


def test_criterion_8_corpus_determinism(tmp_path, capsys):
    blobs = []
    for i, workers in enumerate(("1", "2")):
        out = tmp_path / f"corpus{i}.jsonl"
        code = main(["corpus", "--points", "4", "--all", "--oracle", "--seed", "1",
                     "--workers", workers, "--out", str(out), "--no-cache"])
        capsys.readouterr()
        assert code == 0
        blobs.append(out.read_bytes())
    ok = blobs[0] == blobs[1] and len(blobs[0].splitlines()) == 355
    with capsys.disabled():
        _report(8, ok, "355-frame oracle sweep is byte-identical across worker counts"
                if ok else "outputs differ between worker counts")


def test_criterion_9_topology_census():
    got = tuple(sum(1 for _ in enumerate_topologies(n)) for n in range(1, 5))
    _report(9, got == CENSUS,
            f"census {got} matches the labeled-topology counting sequence"
            if got == CENSUS else f"census {got} != {CENSUS}")
