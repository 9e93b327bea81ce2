import io
import json
import subprocess
import sys

import pytest

from dumont.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestEnumerate:
    def test_first_kind(self):
        assert run("enumerate", "--n", "4", "--kind", "dumont-first") == (0, "2143\n3421\n4213\n")

    def test_avoid(self):
        assert run("enumerate", "--n", "4", "--kind", "dumont-first", "--avoid", "1-3-2") == (0, "3421\n4213\n")

    def test_contain(self):
        assert run("enumerate", "--n", "3", "--kind", "dumont-first", "--contain", "21-3:1") == (0, "213\n")

    def test_json(self):
        code, text = run("enumerate", "--n", "4", "--kind", "dumont-second", "--format", "json")
        assert code == 0
        assert json.loads(text) == ["2143", "3142", "4132"]

    def test_empty(self):
        assert run("enumerate", "--n", "0") == (0, "\n")

    @pytest.mark.parametrize(
        "argv",
        [
            ["enumerate", "--n", "4", "--avoid", "1-1-2"],
            ["enumerate", "--n", "4", "--contain", "21-3"],
            ["enumerate", "--n", "4", "--kind", "bogus"],
            ["enumerate"],
            ["enumerate", "--n", "11", "--kind", "all"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        code, _ = run(*argv)
        assert code == 2
        err = capsys.readouterr().err.strip().splitlines()
        assert err


class TestCount:
    def test_catalan(self):
        code, text = run("count", "--n-max", "6", "--kind", "dumont-first", "--avoid", "1-3-2")
        assert code == 0
        lines = text.splitlines()
        assert lines[0] == "n,count"
        assert [int(l.split(",")[1]) for l in lines[1:]] == [1, 1, 1, 1, 2, 2, 5]

    def test_by_stat(self):
        code, text = run("count", "--n-max", "4", "--kind", "dumont-first", "--avoid", "1-3-2", "--by-stat", "descents")
        lines = text.splitlines()
        assert lines[0] == "n,k,count"
        assert "4,2,2" in lines

    def test_zero(self):
        assert run("count", "--n-max", "0") == (0, "n,count\n0,1\n")

    def test_json(self):
        code, text = run("count", "--n-max", "2", "--format", "json")
        assert json.loads(text) == {"rows": [{"n": 0, "count": 1}, {"n": 1, "count": 1}, {"n": 2, "count": 1}]}

    def test_threads_do_not_change_output(self):
        argv = ["count", "--n-max", "9", "--kind", "dumont-first", "--avoid", "3-1-2", "--by-stat", "rlm"]
        assert run(*argv) == run(*argv, "--threads", "3")

    @pytest.mark.parametrize(
        "flags",
        [
            ["--kind", "all", "--avoid", "1-3-2"],
            ["--kind", "dumont-first"],
            ["--kind", "dumont-second", "--avoid", "3-2-1"],
            ["--kind", "dumont-first-132-avoiding", "--contain", "1-2-3:1"],
            ["--kind", "all", "--avoid", "23-1", "--contain", "12-3:2"],
        ],
    )
    def test_totals_match_enumerate(self, flags):
        _, table = run("count", "--n-max", "8", *flags)
        counts = [int(l.split(",")[1]) for l in table.splitlines()[1:]]
        for n in range(9):
            _, listing = run("enumerate", "--n", str(n), "--format", "json", *flags)
            assert len(json.loads(listing)) == counts[n]


class TestSeries:
    def test_d_empty(self):
        assert run("series", "--formula", "d-empty", "--terms", "5") == (0, "1 1 1 1 2 2\n")

    def test_pell(self):
        assert run("series", "--formula", "d-23k1", "--k", "5", "--terms", "8") == (0, "1 1 1 1 2 2 5 5 12\n")

    def test_contain_once(self):
        # x^5 (1 + x - x^2) / (1 - x^2)
        assert run("series", "--formula", "contain-once-incr", "--k", "3", "--terms", "7") == (0, "0 0 0 0 0 1 1 0\n")

    def test_json(self):
        code, text = run("series", "--formula", "d-incr", "--k", "3", "--terms", "3", "--format", "json")
        assert json.loads(text) == ["1", "1", "1", "1"]

    @pytest.mark.parametrize(
        "argv",
        [
            ["series", "--formula", "nosuch"],
            ["series", "--formula", "d-incr"],
            ["series", "--formula", "d-incr", "--k", "0"],
            ["series", "--formula", "explicit-123-r", "--r", "9"],
        ],
    )
    def test_errors(self, argv):
        assert run(*argv)[0] == 2


class TestStats:
    def test_rises(self):
        code, text = run("stats", "--stat", "rises", "--n-max", "8")
        assert code == 0
        lines = text.splitlines()
        assert lines[0] == "n,k,count,formula"
        for line in lines[1:]:
            n, k, c, f = line.split(",")
            assert c == f


class TestVerify:
    def test_single(self):
        code, text = run("verify", "--theorem", "th2a", "--n-max", "12")
        assert code == 0
        assert text.startswith("PASS")

    def test_unknown(self):
        assert run("verify", "--theorem", "nosuch")[0] == 2

    def test_all_json(self):
        code, text = run("verify", "--n-max", "10", "--format", "json", "--threads", "4")
        assert code == 0
        data = json.loads(text)
        assert len(data["checks"]) >= 20
        assert data["summary"]["mismatch"] >= 2
        assert all(c["tier"] != "must-pass" or c["status"] == "pass" for c in data["checks"])

    def test_list(self):
        code, text = run("verify", "--list")
        assert code == 0
        assert any(line.startswith("th2a\t") for line in text.splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dumont", "enumerate", "--n", "4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "2143\n3421\n4213\n"
