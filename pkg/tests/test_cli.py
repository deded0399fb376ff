import csv
import io
import json
import subprocess
import sys

import pytest

from regsynth.cli import CSV_COLUMNS, main
from regsynth.engine import Synthesizer
from regsynth.infix import validate_spec
from regsynth.regex import CostFn, cost, parse_regex
from regsynth.specfile import SpecFileError, format_spec, parse_spec_text

from conftest import E1_N, E1_P, TABLE_N, TABLE_P


def spec_file(tmp_path, pos, neg, name="s.spec"):
    path = tmp_path / name
    path.write_text(format_spec(validate_spec(pos, neg)), encoding="utf-8")
    return str(path)


def test_synth_e1(tmp_path, capsys):
    assert main(["synth", spec_file(tmp_path, E1_P, E1_N)]) == 0
    out = capsys.readouterr().out.strip()
    assert cost(parse_regex(out), CostFn()) == 7


def test_synth_json_superset_of_csv(tmp_path, capsys):
    assert main(["synth", spec_file(tmp_path, E1_P, E1_N), "--json", "--deterministic"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert set(CSV_COLUMNS) <= set(rep)
    assert rep["result"] == "found" and rep["cost"] == 7
    assert rep["unique_cs"] <= rep["cs_generated"]
    assert rep["onthefly_from"] is None


def test_synth_overlap_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.spec"
    path.write_text("+10\n-10\n", encoding="utf-8")
    assert main(["synth", str(path)]) == 1
    assert "10" in capsys.readouterr().err


def test_synth_malformed_and_missing(tmp_path, capsys):
    path = tmp_path / "bad.spec"
    path.write_text("+1\n*0\n", encoding="utf-8")
    assert main(["synth", str(path)]) == 1
    assert "line 2" in capsys.readouterr().err
    assert main(["synth", str(tmp_path / "nope.spec")]) == 1


def test_synth_error_half(tmp_path, capsys):
    path = spec_file(tmp_path, TABLE_P, TABLE_N)
    assert main(["synth", path, "--error", "0.5", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["regex"] == "empty" and rep["cost"] == 1


def test_synth_not_found_and_oom(tmp_path, capsys):
    path = spec_file(tmp_path, E1_P, E1_N)
    assert main(["synth", path, "--max-cost", "5"]) == 2
    assert main(["synth", path, "--memory", str(2 * 24), "--json"]) == 3
    rep = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert rep["result"] == "oom" and rep["last_complete_cost"] == 1


def test_synth_cost_option(tmp_path, capsys):
    path = spec_file(tmp_path, E1_P, E1_N)
    assert main(["synth", path, "--cost", "5,2,7,2,19", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert cost(parse_regex(rep["regex"]), CostFn(5, 2, 7, 2, 19)) == rep["cost"]
    with pytest.raises(SystemExit):
        main(["synth", path, "--cost", "1,1,0,1,1"])
    with pytest.raises(SystemExit):
        main(["synth", path, "--error", "1.5"])


def run_bench(tmp_path, text, *extra):
    manifest = tmp_path / "m.csv"
    manifest.write_text(text, encoding="utf-8")
    out = tmp_path / "out.csv"
    assert main(["bench", str(manifest), "--out", str(out), *extra]) == 0
    return list(csv.reader(io.StringIO(out.read_text())))


def test_bench_empty_manifest(tmp_path):
    assert run_bench(tmp_path, "") == [list(CSV_COLUMNS)]


def test_bench_epsilon_row(tmp_path):
    rows = run_bench(tmp_path, "1,0,2,0,1,0\n")
    row = dict(zip(rows[0], rows[1]))
    assert row["result"] == "found" and row["regex"] == "eps" and row["cost"] == "1"


def test_bench_rerun_is_deterministic(tmp_path, capsys):
    text = "type,seed,k,le,p,n\n1,1,2,3,3,3\n2,2,2,4,4,4\n1,3,3,2,2,2\n"
    strip = lambda rows: [r[:-1] for r in rows]  # noqa: E731 -- drop millis
    assert strip(run_bench(tmp_path, text)) == strip(run_bench(tmp_path, text))
    assert "unique CSs/s" in capsys.readouterr().err


def test_bench_timeout_and_oom_markers(tmp_path):
    rows = run_bench(tmp_path, "1,5,2,7,10,10\n", "--timeout", "0.01")
    assert rows[1][CSV_COLUMNS.index("result")] == "timeout"
    rows = run_bench(tmp_path, "1,5,2,7,10,10\n", "--memory", "100")
    assert rows[1][CSV_COLUMNS.index("result")] == "oom"


def test_gen_writes_readable_specs(tmp_path, capsys):
    manifest = tmp_path / "m.csv"
    manifest.write_text("2,7,3,3,2,2\n", encoding="utf-8")
    assert main(["gen", str(manifest), "--outdir", str(tmp_path / "specs")]) == 0
    [name] = capsys.readouterr().out.split()
    spec = parse_spec_text(open(name, encoding="utf-8").read())
    assert spec.alphabet == ("0", "1", "2")
    assert len(spec.positive) == 2 and len(spec.negative) == 2


def test_oracle_check_vacuous(capsys):
    assert main(["oracle-check", "--instances", "0"]) == 0
    assert "0/0 agree" in capsys.readouterr().out


def test_oracle_check_small(capsys):
    assert main(["oracle-check", "--instances", "8", "--seed", "4"]) == 0
    assert "8/8 agree" in capsys.readouterr().out


def test_oracle_check_catches_missing_star_level(monkeypatch, capsys):
    monkeypatch.setattr(Synthesizer, "_star_blocks", lambda self, c: iter(()))
    assert main(["oracle-check", "--instances", "30"]) == 1
    out = capsys.readouterr().out
    assert "MISMATCH" in out and "/30 agree" in out


def test_spec_file_round_trip():
    text = "# a comment\n+\n+10\n\n+0110\n-1\n-00\n"
    body = "".join(l + "\n" for l in text.splitlines() if l and not l.startswith("#"))
    assert format_spec(parse_spec_text(text)) == body
    spec = parse_spec_text("# alphabet: 012\n+1\n")
    assert spec.alphabet == ("0", "1", "2")
    assert parse_spec_text(format_spec(spec, alphabet=True)) == spec
    with pytest.raises(SpecFileError) as err:
        parse_spec_text("+1\n\n 0\n")
    assert err.value.lineno == 3


def test_module_entry_point(tmp_path):
    path = spec_file(tmp_path, ["1"], ["0"])
    proc = subprocess.run([sys.executable, "-m", "regsynth", "synth", path],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
