import csv
import io
import json
import subprocess
import sys

import pytest

import sopfr.aggregates as agg
from sopfr.cli import main, parse_int
from sopfr.asymptotics import ratio_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_parse_int():
    assert parse_int("1e6") == 10**6
    assert parse_int("10_000") == 10**4
    assert parse_int("2.5e1") == 25
    for bad in ("1.5", "1e-3", "abc", "inf"):
        with pytest.raises(Exception):
            parse_int(bad)


def test_eval_sopfr(capsys):
    code, out, _ = run(capsys, "eval", "sopfr", "1000000008", "--format", "csv")
    assert code == 0
    assert rows_csv(out) == [{"n": "1000000008", "sopfr": "404"}]
    _, out, _ = run(capsys, "eval", "sopfr", "1", "--format", "csv")
    assert rows_csv(out)[0]["sopfr"] == "0"


def test_eval_factor(capsys):
    code, out, _ = run(capsys, "eval", "factor", "12")
    assert code == 0 and "2^2 * 3" in out


def test_eval_domain_error(capsys):
    code, _, err = run(capsys, "eval", "sopfr", "0")
    assert code == 3 and "domain" in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sum", "B", "1.5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sum", "P", "10", "--method", "prime_contrib"])
    assert exc.value.code == 2


def _value(out):
    return int(json.loads(out)["rows"][0]["value"])


def test_sum_examples(capsys):
    code, out, _ = run(capsys, "sum", "B", "10", "--method", "direct", "--format", "json")
    assert code == 0 and _value(out) == 45
    _, out, _ = run(capsys, "sum", "P", "10", "--format", "json")
    assert _value(out) == 17
    _, out, _ = run(capsys, "sum", "pi", "1e6", "--format", "json")
    assert _value(out) == 78498
    _, out, _ = run(capsys, "sum", "pi", "1e6", "--method", "sublinear", "--format", "json")
    assert _value(out) == 78498
    _, out, _ = run(capsys, "sum", "Bdist", "10", "--method", "prime-contrib", "--format", "json")
    assert _value(out) == 36


def test_sum_methods_agree_1e7(capsys):
    _, a, _ = run(capsys, "sum", "B", "10000000", "--method", "sublinear", "--format", "json")
    _, b, _ = run(capsys, "sum", "B", "10000000", "--method", "direct", "--format", "json")
    assert _value(a) == _value(b)


def test_sum_resource_error(capsys):
    code, _, err = run(capsys, "sum", "B", "1e10", "--method", "direct")
    assert code == 4 and "--method sublinear" in err


def test_check_pass(capsys):
    code, out, _ = run(capsys, "check", "1000", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["result"] == "PASS"
    assert all(r["status"] == "PASS" for r in doc["rows"])


def test_check_x1(capsys):
    code, _, _ = run(capsys, "check", "1")
    assert code == 0


def test_check_spot_decades(capsys):
    code, out, _ = run(capsys, "check", "1e5", "--format", "json")
    assert code == 0
    spot = [r for r in json.loads(out)["rows"] if r["x"] == 100000]
    assert len(spot) == 2 and all(r["methods"] == "direct+prime_contrib+sublinear" for r in spot)


def test_check_detects_tampering(capsys, monkeypatch):
    real = agg.main_term
    monkeypatch.setattr(agg, "main_term", lambda t: real(t) + (t.x == 777))
    code, out, err = run(capsys, "check", "1000", "--format", "json")
    assert code == 1
    assert json.loads(out)["meta"]["first_failure"] == {"x": 777, "target": "B"}
    assert "777" in err


def test_asym_csv_shape_and_roundtrip(capsys, tmp_path):
    path = tmp_path / "asym.csv"
    code, _, _ = run(capsys, "asym", "B", "1e4,1e5,1e6", "--format", "csv", "--output", str(path))
    assert code == 0
    text = path.read_text()
    lines = text.strip().split("\n")
    assert lines[0] == "x,exact,model,ratio,scaled_error" and len(lines) == 4
    expected = ratio_table([10**4, 10**5, 10**6], "B")
    for row, rep in zip(rows_csv(text), expected):
        assert int(row["x"]) == rep.x and int(row["exact"]) == rep.exact
        assert float(row["model"]) == rep.model
        assert float(row["ratio"]) == rep.ratio
        assert float(row["scaled_error"]) == rep.scaled_error


def test_asym_json_roundtrip(capsys):
    _, out, _ = run(capsys, "asym", "Bdist", "1e4,2e4", "--format", "json")
    doc = json.loads(out)
    assert doc["command"] == "asym" and {"version", "elapsed"} <= set(doc["meta"])
    expected = [r.as_dict() for r in ratio_table([10**4, 2 * 10**4], "B_dist")]
    assert doc["rows"] == expected


def test_asym_p_100(capsys):
    _, out, _ = run(capsys, "asym", "P", "100", "--format", "csv")
    assert rows_csv(out)[0]["exact"] == "1060"


def test_asym_rejects_small_x(capsys):
    code, _, _ = run(capsys, "asym", "B", "1")
    assert code == 3


def test_mertens(capsys):
    code, out, _ = run(capsys, "mertens", "1e6", "--format", "csv")
    assert code == 0
    (row,) = rows_csv(out)
    assert list(row) == ["x", "sum_recip_p", "loglog_x", "difference", "sum_1_over_p_p_minus_1"]
    assert abs(float(row["difference"]) - 0.2615) < 1e-3


def test_table(capsys):
    _, out, _ = run(capsys, "table", "1", "10", "--format", "csv")
    rows = rows_csv(out)
    assert [int(r["sopfr"]) for r in rows] == [0, 2, 3, 4, 5, 5, 7, 6, 6, 7]
    assert [int(r["sopf"]) for r in rows] == [0, 2, 3, 2, 5, 5, 7, 2, 3, 7]


def test_workers_do_not_change_numbers(capsys):
    outs = []
    for w in ("1", "2", "8"):
        _, out, _ = run(capsys, "sum", "B", "2e6", "--method", "direct", "--workers", w,
                        "--segment-size", "65536", "--format", "json")
        outs.append(_value(out))
    assert len(set(outs)) == 1


def test_segment_size_env(capsys, monkeypatch):
    monkeypatch.setenv("SOPFR_SEGMENT_SIZE", "4096")
    _, out, _ = run(capsys, "sum", "B", "100000", "--method", "direct", "--format", "json")
    monkeypatch.delenv("SOPFR_SEGMENT_SIZE")
    _, ref, _ = run(capsys, "sum", "B", "100000", "--method", "direct", "--format", "json")
    assert _value(out) == _value(ref)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sopfr", "eval", "sopfr", "1000000008"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "404" in proc.stdout
