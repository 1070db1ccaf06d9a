import io
import json
import subprocess
import sys

import pytest

from degreal.cli import main


@pytest.fixture
def cli(tmp_path, capsys, monkeypatch):
    def call(args, text=None, stdin=None):
        args = list(args)
        if text is not None:
            path = tmp_path / "input.txt"
            path.write_text(text)
            args.append(str(path))
        if stdin is not None:
            monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        code = main(args)
        out = capsys.readouterr()
        return code, out.out, out.err

    return call


def test_certify_sparsest(cli):
    code, out, _ = cli(["certify", "--mode", "sparsest", "--json"], "3\n1 2 1 2 1 2\n")
    data = json.loads(out)
    assert code == 0 and data["status"] == "realizable"
    assert sorted(data["certificate"]) == [1, 1, 2] and data["edges"] == 2


def test_certify_human(cli):
    code, out, _ = cli(["certify"], "3 1 1 1 1 1 1")
    assert code == 1 and out.strip() == "not realizable"
    code, out, _ = cli(["certify", "--mode", "densest"], "3 1 2 1 2 1 2")
    assert code == 0 and out.splitlines() == ["realizable: 3 edges (densest)", "2 2 2"]


def test_check(cli):
    code, out, _ = cli(["check", "--json"], "3\n1 1 1\n")
    assert code == 1 and json.loads(out) == {"status": "not_graphic"}
    code, out, _ = cli(["check"], "3 2 2 2")
    assert code == 0 and out.strip() == "graphic"


def test_check_over_range_is_not_graphic(cli):
    code, _, _ = cli(["check"], "2 5 1")
    assert code == 1


def test_min_deviation(cli):
    code, out, _ = cli(["min-deviation", "--json"], "3 2 2 0 0 0 0")
    data = json.loads(out)
    assert code == 0 and data["deviation"]["total"] == 2 and data["status"] == "ok"


def test_most_regular(cli):
    code, out, _ = cli(["most-regular", "--json"], "4 3 3 1 2 1 2 1 2")
    assert code == 0 and json.loads(out)["spread"] == 6
    code, out, _ = cli(["most-regular", "--json"], "3 1 1 1 1 1 1")
    assert code == 1 and json.loads(out)["status"] == "not_realizable"


def test_realizable(cli):
    assert cli(["realizable"], "3 1 2 1 2 1 2")[0] == 0
    assert cli(["realizable"], "3 2 2 0 0 0 0")[0] == 1


def test_extensions(cli):
    code, out, _ = cli(["extend", "--json"], "3 3 3 3")
    assert code == 0 and json.loads(out) == {"status": "ok", "n0": 4, "certificate": [3, 3, 3, 3]}
    code, out, _ = cli(["chebyshev", "--json"], "3 2 0 0")
    assert code == 0 and json.loads(out)["radius"] == 1
    code, out, _ = cli(["relative", "--json"], "3 1 0 0")
    data = json.loads(out)
    assert code == 0 and data["radius"] == "1" and data["certificate"] == [0, 0, 0]
    code, out, _ = cli(["relative"], "2 1 1")
    assert code == 0 and out.splitlines()[0] == "epsilon 0"


def test_graph(cli):
    code, out, _ = cli(["graph"], "3 2 1 1")
    assert code == 0 and out.splitlines() == ["graphic: 3 vertices, 2 edges", "1 2", "1 3"]
    code, out, _ = cli(["graph", "--json"], "4 3 3 1 1")
    assert code == 1 and json.loads(out)["status"] == "not_graphic"


def test_stdin(cli):
    code, out, _ = cli(["check", "-"], stdin="2\n1 1\n")
    assert code == 0 and out.strip() == "graphic"


def test_output_file(cli, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = cli(["check", "--json", "--output", str(target)], "2 1 1")
    assert code == 0 and out == "" and json.loads(target.read_text())["status"] == "graphic"


@pytest.mark.parametrize(
    "args, text",
    [
        (["check"], ""),
        (["check"], "3 1 1"),
        (["check"], "3 1 1 1 1"),
        (["check"], "2 a b"),
        (["check"], "0"),
        (["check"], "2 -1 1"),
        (["check"], f"{2**20 + 1}"),
        (["realizable"], "2 1 0 0 0"),
        (["realizable"], "2 0 2 0 0"),
        (["chebyshev"], "2 3 0"),
        (["certify", "--mode", "bogus"], "1 0 0"),
    ],
)
def test_input_errors(cli, args, text):
    code, _, err = cli(args, text)
    assert code == 2 and err


def test_error_json(cli):
    code, out, err = cli(["realizable", "--json"], "2 1 0 0 0")
    assert code == 2 and json.loads(out)["status"] == "error" and "message" in json.loads(out)
    assert err.startswith("error:")


def test_missing_file(cli):
    code, _, err = cli(["check", "/nonexistent/file"])
    assert code == 2 and "cannot read" in err


def test_mode_only_for_certify(cli):
    assert cli(["check", "--mode", "sparsest"], "2 1 1")[0] == 2


def test_deterministic(cli):
    text = "6 0 5 1 3 2 4 0 5 3 3 1 2"
    runs = {cli(["most-regular", "--json"], text)[1] for _ in range(3)}
    assert len(runs) == 1


def test_json_certificate_round_trip(cli):
    _, out, _ = cli(["certify", "--json"], "5 0 4 1 3 2 2 0 1 3 4")
    cert = json.loads(out)["certificate"]
    code, _, _ = cli(["check"], f"{len(cert)} " + " ".join(map(str, cert)))
    assert code == 0


def test_bench(cli):
    code, out, _ = cli(["bench", "--sizes", "64,128", "--repeat", "1", "--backend", "numba"])
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "size,backend,seconds,verdict"
    assert [r.split(",")[0] for r in rows[1:]] == ["64", "128"]
    assert all(r.endswith("realizable") for r in rows[1:])
    assert cli(["bench", "--sizes", "x"])[0] == 2
    assert cli(["bench", "--sizes", "0"])[0] == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("3 2 1 1")
    proc = subprocess.run([sys.executable, "-m", "degreal", "graph", str(path)], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[1:] == ["1 2", "1 3"]
