"""CLI surface: commands, exit codes, determinism, cache, DOT export."""

import json

import pytest

from finframe.cli import main

C3_TOPOLOGY = ('{"kind":"topology","payload":{"points":["x","y"],'
               '"opens":[[],["x"],["x","y"]]},"name":"C3"}')
F5_TOPOLOGY = ('{"kind":"topology","payload":{"points":["x","y","z"],'
               '"opens":[[],["x"],["y"],["x","y"],["x","y","z"]]},"name":"F5"}')
B4_STANDARD = '{"kind":"standard","payload":{"family":"boolean","n":2},"name":"B4"}'
BAD_TOPOLOGY = '{"kind":"topology","payload":{"points":["x"],"opens":[["x"]]}}'
TAMPERED_LATTICE = (
    '{"kind":"lattice","payload":{"elements":["0","m","1"],'
    '"leq":[["0","m"],["m","1"]],'
    '"tables":{"meet":[[0,0,0],[0,1,1],[0,1,2]],'
    '"join":[[0,1,2],[1,1,2],[2,2,2]],'
    '"heyting":[[2,2,2],[1,2,2],[0,1,2]]}},"name":"tampered"}')
BIG_CHAIN = '{"kind":"standard","payload":{"family":"chain","n":20},"name":"big"}'


@pytest.fixture
def write_spec(tmp_path):
    def _write(text, name="frame.json"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_f5(self, write_spec, capsys):
        code, out, _ = run(capsys, "analyze", write_spec(F5_TOPOLOGY), "--no-cache")
        assert code == 0
        report = json.loads(out)
        assert report["frame_name"] == "F5"
        assert report["booleanization"] == ["∅", "{x}", "{y}", "{x,y,z}"]
        assert report["demorganization"] == ["∅", "{x}", "{y}", "{x,y,z}"]
        assert report["flags"]["ed"] is False
        assert report["flags"]["B_equals_M"] is True
        assert report["oracle"] == {"ran": False}

    def test_c3(self, write_spec, capsys):
        code, out, _ = run(capsys, "analyze", write_spec(C3_TOPOLOGY), "--no-cache")
        assert code == 0
        report = json.loads(out)
        assert report["booleanization"] == ["∅", "{x,y}"]
        assert report["demorganization"] == ["∅", "{x}", "{x,y}"]
        assert report["flags"]["ed"] is True
        assert report["flags"]["B_equals_M"] is False
        assert report["flags"]["M_equals_L"] is True

    def test_boolean_standard(self, write_spec, capsys):
        code, out, _ = run(capsys, "analyze", write_spec(B4_STANDARD), "--no-cache")
        assert code == 0
        report = json.loads(out)
        assert report["flags"]["boolean"] is True
        assert report["flags"]["M_equals_L"] is True

    def test_oracle_flag(self, write_spec, capsys):
        code, out, _ = run(capsys, "analyze", write_spec(C3_TOPOLOGY),
                           "--oracle", "--no-cache")
        assert code == 0
        assert json.loads(out)["oracle"] == {"ran": True, "agree": True}

    def test_parse_error_exits_one(self, write_spec, capsys):
        code, _, err = run(capsys, "analyze", write_spec(BAD_TOPOLOGY), "--no-cache")
        assert code == 1
        assert "error" in err

    def test_missing_file_exits_one(self, capsys, tmp_path):
        code, _, err = run(capsys, "analyze", str(tmp_path / "nope.json"), "--no-cache")
        assert code == 1


class TestVerify:
    def test_fixture_passes_with_oracle(self, write_spec, capsys):
        code, out, _ = run(capsys, "verify", write_spec(F5_TOPOLOGY),
                           "--oracle", "--no-cache")
        assert code == 0
        report = json.loads(out)
        assert report["law_failures"] == []
        assert report["oracle"] == {"ran": True, "agree": True}

    def test_tampered_lattice_exits_two_with_witness(self, write_spec, capsys):
        code, out, _ = run(capsys, "verify", write_spec(TAMPERED_LATTICE), "--no-cache")
        assert code == 2
        report = json.loads(out)
        assert any(f.startswith("H") for f in report["law_failures"])

    def test_oracle_mode_too_large_exits_one(self, write_spec, capsys):
        code, _, err = run(capsys, "verify", write_spec(BIG_CHAIN),
                           "--oracle", "--no-cache")
        assert code == 1
        assert "oracle" in err


class TestCorpus:
    def test_points_two_all(self, capsys, tmp_path):
        out_path = tmp_path / "reports.jsonl"
        code, out, _ = run(capsys, "corpus", "--points", "2", "--all",
                           "--out", str(out_path), "--no-cache")
        assert code == 0
        lines = out_path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 4
        summary = json.loads(out)
        assert summary["frames"] == 4
        assert summary["failures"] == 0

    def test_points_three_all_oracle(self, capsys, tmp_path):
        out_path = tmp_path / "reports.jsonl"
        code, out, _ = run(capsys, "corpus", "--points", "3", "--all", "--oracle",
                           "--out", str(out_path), "--no-cache")
        assert code == 0
        lines = out_path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 29
        for line in lines:
            report = json.loads(line)
            assert report["oracle"] == {"ran": True, "agree": True}
            assert report["runtime_ms"] == 0

    def test_worker_counts_agree(self, capsys, tmp_path):
        paths = []
        for i, workers in enumerate(("1", "2")):
            out_path = tmp_path / f"r{i}.jsonl"
            code, _, _ = run(capsys, "corpus", "--points", "3", "--all", "--oracle",
                             "--workers", workers, "--out", str(out_path), "--no-cache")
            assert code == 0
            paths.append(out_path)
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_random_mode_deterministic(self, capsys, tmp_path):
        blobs = []
        for i in range(2):
            out_path = tmp_path / f"rand{i}.jsonl"
            code, _, _ = run(capsys, "corpus", "--points", "5", "--random", "6",
                             "--seed", "9", "--out", str(out_path), "--no-cache")
            assert code == 0
            blobs.append(out_path.read_bytes())
        assert blobs[0] == blobs[1]
        assert len(blobs[0].splitlines()) == 6

    def test_cache_round_trip(self, capsys, tmp_path):
        cache_dir = tmp_path / "cache"
        blobs = []
        for i in range(2):
            out_path = tmp_path / f"c{i}.jsonl"
            code, _, _ = run(capsys, "corpus", "--points", "2", "--all",
                             "--cache-dir", str(cache_dir), "--out", str(out_path))
            assert code == 0
            blobs.append(out_path.read_bytes())
        assert blobs[0] == blobs[1]
        assert list(cache_dir.glob("*.json"))

    def test_all_caps_at_four_points(self, capsys):
        code, _, err = run(capsys, "corpus", "--points", "5", "--all", "--no-cache")
        assert code == 1


class TestExportDot:
    def test_c3_frame(self, write_spec, capsys):
        code, out, _ = run(capsys, "export-dot", write_spec(C3_TOPOLOGY))
        assert code == 0
        assert out.count("[label=") == 3
        assert out.count("->") == 2
        assert "rankdir=BT" in out

    def test_c3_sublocales(self, write_spec, capsys):
        code, out, _ = run(capsys, "export-dot", write_spec(C3_TOPOLOGY),
                           "--what", "sublocales")
        assert code == 0
        assert out.count("[label=") == 4
        assert out.count("->") == 4

    def test_b4_frame_is_diamond(self, write_spec, capsys):
        code, out, _ = run(capsys, "export-dot", write_spec(B4_STANDARD))
        assert code == 0
        assert out.count("[label=") == 4
        assert out.count("->") == 4
