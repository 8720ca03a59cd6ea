import io
import json

import pytest

from bistrata.cli import main, parse_range, parse_type_spec, SpecError
from bistrata.collide import SingularitySpec


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_type_specs():
    assert parse_type_spec("omp:4") == SingularitySpec.omp(4)
    assert parse_type_spec("cusp:3") == SingularitySpec.cusp(3)
    assert parse_type_spec("kbranch:2,1") == SingularitySpec.kbranch(2, 1)
    nd_spec = parse_type_spec("diagram:0,4,2,1,3,0")
    assert nd_spec.diagram.vertices == ((0, 4), (2, 1), (3, 0))
    for bad in ("omp", "omp:x", "omp:1", "what:3", "diagram:1,2,3"):
        with pytest.raises(SpecError):
            parse_type_spec(bad)


def test_parse_range():
    assert parse_range("1..5") == (1, 5)
    with pytest.raises(SpecError):
        parse_range("5..1")
    with pytest.raises(SpecError):
        parse_range("1-5")


def test_degree_two_nodes_json():
    code, out, err = run_cli("degree", "--x", "omp:2", "--y", "omp:2",
                             "--symbolic-d", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    # raw coefficient list of 9(d-1)^4 - 42(d-1)^2 + 33(d-1), divided by 2
    assert payload["degree"] == ["-66", "81", "12", "-36", "9"]
    assert payload["aut_applied"] == 2
    assert payload["d"] == "symbolic"


def test_degree_numeric_with_value():
    # d=3 sits below the validity bound p+q+2=4, yet the classical count
    # of binodal cubics still comes out; the payload records the caveat
    code, out, err = run_cli("degree", "--x", "omp:2", "--y", "omp:2",
                             "--d", "3", "--format", "json")
    payload = json.loads(out)
    assert payload["value"] == 21
    assert payload["below_validity"] is True
    assert "below the validity bound" in err
    code, out, _ = run_cli("degree", "--x", "omp:2", "--y", "omp:2",
                           "--d", "4", "--format", "json")
    payload = json.loads(out)
    assert payload["value"] == 225
    assert payload["below_validity"] is False


def test_degree_below_validity_warns_but_succeeds():
    code, out, err = run_cli("degree", "--x", "omp:4", "--d", "2")
    assert code == 0
    assert "below the validity bound" in err


def test_collide_output():
    code, out, _ = run_cli("collide", "--x", "omp:4", "--y", "omp:2",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["vertices"] == [[0, 6], [2, 2], [4, 0]]
    assert payload["multiplicity"] == 4
    assert payload["residual_multiplicity"] == 2
    # the order of the two types does not matter
    code2, out2, _ = run_cli("collide", "--x", "omp:2", "--y", "omp:4",
                             "--format", "json")
    assert out2 == out


def test_collide_rejects_non_ordinary_types():
    code, _, err = run_cli("collide", "--x", "cusp:3", "--y", "omp:2")
    assert code == 1
    assert "ordinary points" in err


def test_class_json_schema():
    code, out, _ = run_cli("class", "--x", "omp:2", "--format", "json")
    payload = json.loads(out)
    assert payload["variables"] == [{"name": "X", "trunc": 3}]
    assert payload["total_degree"] == 3
    assert payload["aut"] == 1


def test_table_sorted_and_deterministic(monkeypatch, tmp_path):
    args = ("table", "--family", "two-omp", "--p-range", "1..4",
            "--q-range", "1..3", "--d", "10")
    code1, out1, _ = run_cli(*args)
    code2, out2, _ = run_cli(*args)
    assert code1 == code2 == 0
    assert out1 == out2
    rows = [line.split(",") for line in out1.strip().splitlines()[1:]]
    keys = [(r[0], int(r[1]), int(r[2])) for r in rows]
    assert keys == sorted(keys)
    assert all(int(r[2]) <= int(r[1]) for r in rows)  # q <= p cells only
    # honoring the thread-count variable must not change the bytes
    monkeypatch.setenv("STRATA_THREADS", "3")
    code3, out3, _ = run_cli(*args)
    assert out3 == out1


def test_table_writes_file(tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run_cli("table", "--family", "omp", "--p-range", "1..3",
                           "--d", "6", "--out", str(target))
    assert code == 0
    assert out == ""
    content = target.read_text()
    assert content.startswith("family,p,q,d,degree\n")
    assert "omp,1,,6,75" in content  # 3(d-1)^2 at d=6


def test_verify_suite_exits_zero():
    code, out, _ = run_cli("verify", "--suite", "corollary")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("identities hold")


def test_usage_error_exit_code():
    code, _, _ = run_cli("degree", "--x", "nope:3")
    assert code == 2
    code, _, _ = run_cli("degree")
    assert code == 2


def test_domain_error_exit_code():
    code, _, err = run_cli("degree", "--x", "cusp:2", "--y", "cusp:2")
    assert code == 1
    assert "unsupported pair" in err
