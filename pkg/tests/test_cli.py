import io
import json
import subprocess
import sys

import pytest

from conftest import NONASSOC_TEXT
from invgroupoid import cli, zoo
from invgroupoid.tables import parse_structure, serialize_structure

Z3_G_TEXT = """\
elements: g0 g1 g2
table:
g0 g1 g2
g1 g2 g0
g2 g0 g1
"""


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = cli.main(argv, stdout=out, stderr=err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_check_z3(write):
    code, out, _ = run(["check", write("z3.txt", Z3_G_TEXT)])
    assert code == 0
    assert out.startswith("associative=true\n")
    assert "unit=g0" in out and "zero=none" in out


def test_check_nonassociative(write):
    code, out, _ = run(["check", write("bad.txt", NONASSOC_TEXT)])
    assert code == 1
    assert out.splitlines()[0] == "associative=false witness=a,a,a"
    assert "regular=n/a" in out


def test_check_duplicate_names(write):
    code, out, err = run(["check", write("dup.txt", "elements: a a\ntable:\na a\na a\n")])
    assert code == 2
    assert "line 1" in err and out == ""


def test_check_groupoid_and_json(write):
    path = write("pair.txt", serialize_structure(zoo.gen_pair_groupoid(2)))
    code, out, _ = run(["check", path])
    assert code == 0 and "groupoid=true" in out and "units=1:1,2:2" in out
    code, out, _ = run(["--json", "check", path])
    data = json.loads(out)
    assert data["groupoid"] is True and data["units"] == ["1:1", "2:2"]
    assert run(["check", "--json", path])[1] == out


def test_check_quiet(write):
    code, out, err = run(["check", "--quiet", write("bad.txt", NONASSOC_TEXT)])
    assert code == 1 and out == "" and err == ""


def test_check_broken_groupoid(write):
    text = serialize_structure(zoo.gen_pair_groupoid(2)).replace(". . 1:1 1:2", ". . . 1:2")
    code, out, _ = run(["check", write("broken.txt", text)])
    assert code == 1
    assert out.startswith("groupoid=false witness=")


def test_to_semigroup_pair2(write):
    code, out, _ = run(["to-semigroup", write("p.txt", serialize_structure(zoo.gen_pair_groupoid(2)))])
    assert code == 0
    s = parse_structure(out)
    assert s.order == 5 and "zero: 0\n" in out


def test_to_groupoid_i2(write):
    code, out, _ = run(["to-groupoid", write("i2.txt", serialize_structure(zoo.gen_symmetric_inverse_monoid(2)))])
    assert code == 1
    assert "kind=nonorthogonal-idempotents" in out and "12" in out.split("witness=")[1]


def test_to_groupoid_zero_e(write):
    code, out, _ = run(["to-groupoid", write("ze.txt", "elements: 0 e\ntable:\n0 0\n0 e\n")])
    assert code == 0
    assert out == "elements: e\ninverse: e->e\ntable:\ne\n"


def test_to_semigroup_wrong_kind(write):
    assert run(["to-semigroup", write("z3.txt", Z3_G_TEXT)])[0] == 2


def test_pipeline_gen_roundtrip():
    _, text, _ = run(["gen", "pair", "3"])
    code, out, _ = run(["roundtrip", "-"], stdin=text)
    assert code == 0 and out == "roundtrip=identity\n"


def test_roundtrip_semigroup(write):
    code, out, _ = run(["roundtrip", write("ze.txt", "elements: 0 e\ntable:\n0 0\n0 e\n")])
    assert code == 0
    _, text, _ = run(["gen", "sim", "2"])
    assert run(["roundtrip", "-"], stdin=text)[0] == 1


def test_algebra_check():
    _, text, _ = run(["gen", "pair", "2"])
    code, out, _ = run(["algebra-check", "-"], stdin=text)
    assert code == 0
    assert out == "constants_identical=true\nstar_representation=pass\n"


def test_gen_union(write):
    a = write("a.txt", run(["gen", "cyclic", "2"])[1])
    b = write("b.txt", run(["gen", "cyclic", "3"])[1])
    code, out, _ = run(["gen", "union", a, b])
    assert code == 0
    assert parse_structure(out).order == 5


@pytest.mark.parametrize("argv", [["gen", "pair", "x"], ["gen", "sim", "9"], ["gen", "pair"], ["gen", "bogus", "2"]])
def test_gen_usage_errors(argv):
    assert run(argv)[0] == 2


def test_vagner_order3():
    code, out, _ = run(["vagner", "--order", "3"])
    assert code == 0
    assert out == (
        "order=3\nmode=exhaustive\ntables_scanned=19683\nassociative=113\n"
        "regular=50\ninverse=24\nvagner_consistent=true\n"
    )


def test_vagner_order4_requires_backtracking():
    assert run(["vagner", "--order", "4"])[0] == 2
    code, out, _ = run(["vagner", "--order", "4", "--mode", "backtracking"])
    assert code == 0 and "associative=3492" in out


def test_missing_file():
    assert run(["check", "/nonexistent/file"])[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "invgroupoid", "gen", "cyclic", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("elements: g0 g1 g2\ninverse: g0->g0 g1->g2 g2->g1\n")
