import io
import json
import subprocess
import sys

import pytest

from sumfree.cli import CommandRequest, UsageError, main, parse_args


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv("SUMFREE_CACHE", raising=False)


def test_parse_examples():
    req = parse_args(["count", "--n", "12", "--maximal"])
    assert isinstance(req, CommandRequest)
    assert (req.command, req.n, req.maximal) == ("count", 12, True)
    req = parse_args(["growth", "--from", "4", "--to", "24", "--format", "csv"])
    assert (req.command, req.n_from, req.n_to, req.fmt) == ("growth", 4, 24, "csv")
    assert parse_args(["enumerate", "--n", "3"]).emit
    assert parse_args(["verify", "lemma8"]).seed == 20140101


@pytest.mark.parametrize(
    "argv",
    [
        ["count"],
        ["count", "--n", "0"],
        ["count", "--n", "4", "--bogus"],
        ["growth", "--from", "9", "--to", "3"],
        ["verify", "no-such-suite"],
        ["construct", "triangle", "--n", "8"],
        ["classify", "--set", "1,2", "--n", "4", "--epsilon", "1.5"],
        [],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(UsageError):
        parse_args(argv)
    code, out, err = run(*argv)
    assert code == 2 and out == "" and "error" in err


def test_count_prints_value():
    assert run("count", "--n", "4", "--maximal") == (0, "4\n", "")
    assert run("count", "--n", "4") == (0, "9\n", "")


def test_count_json_schema():
    code, out, _ = run("count", "--n", "6", "--maximal", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"n", "mode", "algorithm", "count", "nodes_explored"}
    assert data["count"] == 6 and data["mode"] == "maximal_sum_free"


def test_enumerate_text_and_json():
    code, out, _ = run("enumerate", "--n", "4", "--maximal")
    assert out.splitlines() == ["# mode=maximal_sum_free n=4 count=4", "3,4", "2,3", "1,4", "1,3"]
    code, out, _ = run("enumerate", "--n", "3", "--format", "json")
    assert json.loads(out)["sets"] == ["", "3", "2", "2,3", "1", "1,3"]


def test_resource_limit_exit_code():
    code, out, err = run("count", "--n", "40", "--maximal")
    assert code == 3 and "resource limit" in err


def test_bad_set_is_usage_error():
    assert run("classify", "--set", "1,9", "--n", "4")[0] == 2
    assert run("classify", "--set", "a,b", "--n", "4")[0] == 2
    assert run("construct", "quarter", "--n", "10")[0] == 2


def test_cache_round_trip(tmp_path):
    path = tmp_path / "cache.jsonl"
    first = json.loads(run("count", "--n", "14", "--maximal", "--format", "json", "--cache", str(path))[1])
    second = json.loads(run("count", "--n", "14", "--maximal", "--format", "json", "--cache", str(path))[1])
    assert first["count"] == second["count"] == 66
    assert first["nodes_explored"] > 0
    assert second["nodes_explored"] == 0
    assert len(path.read_text().splitlines()) == 1


def test_cache_latest_record_wins(tmp_path, monkeypatch):
    path = tmp_path / "c.jsonl"
    monkeypatch.setenv("SUMFREE_CACHE", str(path))
    run("count", "--n", "5")
    lines = path.read_text().splitlines()
    rec = json.loads(lines[0])
    rec["value"]["count"] = 999
    path.write_text(lines[0] + "\n" + json.dumps(rec) + "\n{torn")
    assert run("count", "--n", "5")[1] == "999\n"


def test_verify_claim12():
    code, out, _ = run("verify", "claim12", "--n", "40", "--trials", "500", "--seed", "7")
    assert code == 0
    assert out.splitlines()[-1] == "# result=PASS"


def test_verify_json():
    code, out, _ = run("verify", "forced24", "--trials", "20", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["suite"] == "forced24"
    assert all(c["failures"] == 0 and c["counterexample"] is None for c in data["checks"])


def test_construct_quarter():
    code, out, _ = run("construct", "quarter", "--n", "8")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "# family=quarter n=8 size=4"
    assert len([l for l in lines if not l.startswith("#")]) == 4
    assert "# distinct_maximal=4" in lines


def test_construct_ce():
    code, out, _ = run("construct", "ce", "--n", "12")
    assert code == 0 and "# distinct_maximal=8" in out.splitlines()


def test_classify_outputs():
    code, out, _ = run("classify", "--set", "3,4", "--n", "5")
    data = json.loads(out)
    assert data["structure"] == {"alt_small": True, "alt_odd": False, "alt_min": True}
    assert data["container_case"]["gamma"] == "1/10"
    code, out, _ = run("classify", "--set", "3,4", "--n", "5", "--format", "text")
    assert "structure.alt_min=True" in out.splitlines()


def test_growth_csv_and_plot(tmp_path):
    png = tmp_path / "g.png"
    code, out, _ = run("growth", "--from", "1", "--to", "6", "--plot", str(png))
    assert code == 0
    assert out.splitlines()[0] == "n,f,fmax,log2fmax_over_n"
    assert out.splitlines()[4] == "4,9,4,0.500000"
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_growth_json():
    code, out, _ = run("growth", "--from", "3", "--to", "4", "--format", "json")
    assert json.loads(out)[0] == {"n": 3, "f": 6, "fmax": 2, "log2fmax_over_n": 0.333333}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sumfree", "count", "--n", "3", "--maximal"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"
