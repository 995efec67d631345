import json
import os

import pytest

from mtv.cli import main


@pytest.fixture
def cache_in_tmp(tmp_path, monkeypatch):
    path = tmp_path / "cache.json"
    monkeypatch.setenv("MTV_CACHE_PATH", str(path))
    return path


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_value_exact(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "value", "t", "--args", "2,2", "--exact")
    assert rc == 0 and out == "1/384 * pi^4\n"


def test_value_exact_star(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "value", "tstar", "--args", "2,2", "--exact")
    assert rc == 0 and out == "5/384 * pi^4\n"


def test_value_exact_json(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "value", "t", "--args", "8", "--format", "json")
    assert rc == 0
    assert json.loads(out) == {"kind": "exact", "rational": "17/161280", "pi_power": 8}


def test_value_divergent_numeric_exits_2(cache_in_tmp, capsys):
    rc, out, err = run(capsys, "value", "t", "--args", "2,1", "--numeric")
    assert rc == 2 and out == "" and "divergent" in err


def test_value_odd_exact_exits_2(cache_in_tmp, capsys):
    rc, _, err = run(capsys, "value", "t", "--args", "3,3", "--exact")
    assert rc == 2 and "--numeric" in err


def test_value_mixed_args_exact_exits_2(cache_in_tmp, capsys):
    rc, _, err = run(capsys, "value", "t", "--args", "2,4")
    assert rc == 2 and "--numeric" in err


def test_value_numeric_json_schema(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "value", "t", "--args", "2", "--numeric",
                     "--terms", "2000", "--prec", "128")
    assert rc == 0
    rc, out, _ = run(capsys, "value", "t", "--args", "2", "--numeric",
                     "--terms", "2000", "--prec", "128", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert set(payload) == {"kind", "center", "radius", "bits"}
    assert payload["kind"] == "numeric" and payload["bits"] == 128
    assert payload["center"].startswith("1.2337005")


def test_value_numeric_cap_warning(cache_in_tmp, capsys):
    rc, out, err = run(capsys, "value", "t", "--args", "2", "--numeric")
    assert rc == 0 and "cap" in err


def test_sum_exact(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "sum", "T", "--m", "2", "--n", "2", "--k", "1")
    assert rc == 0 and out == "1/96 * pi^4\n"
    rc, out, _ = run(capsys, "sum", "Tstar", "--m", "2", "--n", "2", "--k", "2")
    assert rc == 0 and out == "5/384 * pi^4\n"


def test_sum_odd_exact_exits_2(cache_in_tmp, capsys):
    rc, _, err = run(capsys, "sum", "T", "--m", "3", "--n", "2", "--k", "1")
    assert rc == 2 and "--numeric" in err


def test_sum_domain_error_exits_2(cache_in_tmp, capsys):
    rc, _, err = run(capsys, "sum", "T", "--m", "2", "--n", "2", "--k", "3")
    assert rc == 2 and "error" in err


def test_sum_numeric(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "sum", "T", "--m", "3", "--n", "2", "--k", "2",
                     "--numeric", "--terms", "5000")
    assert rc == 0 and out.startswith("5.2417")


def test_euler_output(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "euler", "--max", "3")
    assert rc == 0
    assert out == "E_0 = 1\nE_2 = -1\nE_4 = 5\nE_6 = -61\n"


def test_table_csv(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "table", "--m", "2", "--nmax", "2", "--kind", "T",
                     "--format", "csv")
    assert rc == 0
    assert out.splitlines() == [
        "kind,m,n,k,rational,pi_power",
        "T,2,1,1,1/8,2",
        "T,2,2,1,1/96,4",
        "T,2,2,2,1/384,4",
    ]


def test_table_json_and_plain(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "table", "--m", "2", "--nmax", "2", "--kind", "tstar",
                     "--format", "json")
    assert rc == 0
    rows = json.loads(out)
    assert rows[1] == {"kind": "tstar", "m": 2, "n": 2, "k": 2,
                       "rational": "5/384", "pi_power": 4}
    rc, out, _ = run(capsys, "table", "--m", "2", "--nmax", "1", "--kind", "tstar")
    assert rc == 0 and out == "t*({2}^1) = 1/8 * pi^2\n"


def test_table_odd_m_exits_2(cache_in_tmp, capsys):
    rc, _, err = run(capsys, "table", "--m", "3", "--nmax", "2", "--kind", "t")
    assert rc == 2 and "exact" in err


def test_verify_suite_exit_codes(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "euler-identity", "--nmax", "10")
    assert rc == 0
    report = json.loads(out)
    assert report["suite"] == "euler-identity"
    assert all(c["status"] == "pass" for c in report["cases"])


def test_verify_props_multiple_reports(cache_in_tmp, capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "props", "--nmax", "1")
    assert rc == 0
    reports = json.loads(out)
    assert [r["grid"]["arg"] for r in reports] == [4, 6, 8, 10, 12]


def test_usage_error_exits_2(cache_in_tmp, capsys):
    assert main(["value", "t", "--args", "x,y"]) == 2
    capsys.readouterr()
    assert main(["value"]) == 2
    capsys.readouterr()
    assert main(["verify", "--suite", "bogus"]) == 2
    capsys.readouterr()


def test_cache_does_not_change_output(cache_in_tmp, capsys):
    rc1, out1, _ = run(capsys, "value", "t", "--args", "2,2", "--exact")
    assert cache_in_tmp.exists()
    first_bytes = cache_in_tmp.read_bytes()
    rc2, out2, _ = run(capsys, "value", "t", "--args", "2,2", "--exact")
    assert (rc1, out1) == (rc2, out2)
    assert cache_in_tmp.read_bytes() == first_bytes
    # deleting the cache changes nothing
    os.unlink(cache_in_tmp)
    rc3, out3, _ = run(capsys, "value", "t", "--args", "2,2", "--exact")
    assert (rc1, out1) == (rc3, out3)


def test_corrupt_cache_rejected(cache_in_tmp, capsys):
    cache_in_tmp.write_text('{"version":1,"euler":{"0":"1","2":"7"},"power_sums":{}}')
    rc, out, err = run(capsys, "euler", "--max", "1")
    assert rc == 0
    assert out == "E_0 = 1\nE_2 = -1\n"
    assert "ignored" in err
    # the bad file gets replaced by a valid one
    rc, out, err = run(capsys, "euler", "--max", "1")
    assert rc == 0 and "ignored" not in err


def test_cache_grows_monotonically(cache_in_tmp, capsys):
    # the saved table covers everything computed in this process and
    # never shrinks on later runs with smaller requests
    run(capsys, "euler", "--max", "4")
    first = set(json.loads(cache_in_tmp.read_text())["euler"])
    assert first >= {"0", "2", "4", "6", "8"}
    run(capsys, "euler", "--max", "2")
    assert set(json.loads(cache_in_tmp.read_text())["euler"]) >= first
