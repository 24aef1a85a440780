import json

import pytest

from reacalc.cli import EXIT_FAIL, EXIT_INPUT, EXIT_PASS, EXIT_RESOURCE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_symmetry_build(capsys, tmp_path):
    path = tmp_path / "dj3.json"
    code, out, _ = run(capsys, "symmetry", "build", "--kind", "dj", "--n", "3", "--out", str(path))
    assert code == EXIT_PASS
    assert "hecke: ok" in out
    code, out, _ = run(capsys, "symmetry", "birank", "--load", str(path), "--kmax", "4")
    assert code == EXIT_PASS
    assert "[3, 3, 1, 0]" in out


def test_birank_superflip(capsys):
    code, out, _ = run(capsys, "symmetry", "birank", "--kind", "superflip", "--kmax", "3", "--json")
    rep = json.loads(out)
    assert rep["artifacts"]["hilbert_dims"] == [2, 2, 2]


def test_central_ch_reports_power_trace(capsys):
    code, out, _ = run(capsys, "central", "ch", "--element", "t1.t2", "--n", "3", "--variant", "re")
    assert code == EXIT_PASS
    assert "equals Tr_R L^3" in out


def test_cayley_hamilton(capsys):
    for variant in ("re", "mod"):
        code, out, _ = run(capsys, "central", "cayley-hamilton", "--variant", variant)
        assert code == EXIT_PASS
        assert out.count("pass") == 4


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "--element", "t1.t2.t1", "--variant", "re", "--json")
    rep = json.loads(out)
    assert code == EXIT_PASS
    assert rep["artifacts"]["e_basis"] is not None


def test_spectral(capsys):
    code, out, _ = run(capsys, "spectral", "powersum", "--k", "1", "--m", "2")
    assert out.strip() == "(1/q) * mu1 + (1/q) * mu2"
    code, out, _ = run(capsys, "spectral", "character", "--lambda", "1,0", "--k", "1", "--hat", "--q1")
    assert out.strip() == "1"
    code, out, _ = run(capsys, "spectral", "character", "--lambda", "0,0", "--k", "1")
    assert out.strip() == "(q^2+1)/q^3"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "spectral", "character", "--lambda", "0,1", "--k", "1")
    assert code == EXIT_INPUT and "not a partition" in err
    code, _, _ = run(capsys, "central", "ch", "--element", "t1.t2", "--n", "3", "--degree", "2")
    assert code == EXIT_RESOURCE
    code, _, _ = run(capsys, "central", "ch", "--element", "t7", "--n", "3")
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, "central", "ch", "--element", "t1", "--n", "2", "--load", "/nonexistent.json")
    assert code == EXIT_INPUT
    with pytest.raises(SystemExit) as exc:
        main(["spectral", "powersum"])
    assert exc.value.code == 2


def test_verify_subset_and_determinism(capsys):
    a = run(capsys, "verify", "all", "--only", "1,2,11", "--json")
    b = run(capsys, "verify", "all", "--only", "1,2,11", "--json")
    assert a == b
    code, out, _ = a
    rep = json.loads(out)
    assert code == EXIT_PASS
    assert rep["schema"] == "rea-report/1"
    assert [c["criterion"] for c in rep["artifacts"]["criteria"]] == [1, 2, 11]


def test_verify_reports_failures(capsys):
    code, out, _ = run(capsys, "verify", "all", "--only", "3")
    assert code == EXIT_FAIL
    assert "superflip" in out
