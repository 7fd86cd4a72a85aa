import json

import pytest

from rank2greedy.cli import main
from rank2greedy.laurent import LaurentPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_trivial(capsys):
    code, out, _ = run(capsys, "compute", "-b", "2", "-c", "2", "-a", "0", "0")
    assert code == 0
    assert out.strip() == "1"


def test_compute_json_golden(capsys):
    code, out, _ = run(capsys, "compute", "-b", "2", "-c", "2",
                       "-a", "1", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "terms": [{"e": [-1, -1], "c": "1"}, {"e": [-1, 1], "c": "1"},
                  {"e": [1, -1], "c": "1"}]
    }


def test_compute_json_round_trips(capsys):
    code, out, _ = run(capsys, "compute", "-b", "3", "-c", "2",
                       "-a", "3", "3", "--format", "json")
    assert code == 0
    p = LaurentPoly.from_json(out)
    assert p.to_json() == out.strip()


def test_compute_all_methods_agree(capsys):
    code, out, _ = run(capsys, "compute", "-b", "3", "-c", "3",
                       "-a", "4", "3", "--method", "all")
    assert code == 0


def test_compute_linear_needs_positive(capsys):
    code, _, err = run(capsys, "compute", "-b", "2", "-c", "2",
                       "-a", "0", "1", "--method", "linear")
    assert code == 1
    assert "a1, a2 > 0" in err


def test_bad_params_exit_one(capsys):
    code, _, _ = run(capsys, "compute", "-b", "0", "-c", "2", "-a", "1", "1")
    assert code == 1


def test_cluster_var(capsys):
    code, out, _ = run(capsys, "cluster-var", "-b", "1", "-c", "1", "-m", "4")
    assert code == 0
    assert out.strip() == "x1^-1*x2^-1 + x1^-1 + x2^-1"


def test_expand_basis_text(capsys):
    code, out, _ = run(capsys, "expand-basis", "-b", "2", "-c", "2",
                       "-a", "1", "1", "--kind", "standard")
    assert code == 0
    assert out.splitlines() == ["(-1,-1) -1", "(1,1) 1"]


def test_expand_basis_json(capsys):
    code, out, _ = run(capsys, "expand-basis", "-b", "2", "-c", "2",
                       "-a", "1", "1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "standard"
    assert obj["coeffs"] == [{"d": [-1, -1], "u": "-1"}, {"d": [1, 1], "u": "1"}]


def test_expand_basis_needs_input(capsys):
    code, _, err = run(capsys, "expand-basis", "-b", "2", "-c", "2")
    assert code == 1


def test_probe_conjecture_small_window(capsys):
    code, out, _ = run(capsys, "probe-conjecture", "-b", "3", "-c", "3",
                       "--window", "0", "2")
    assert code == 0
    assert "evidence only" in out
    assert "m=1: min coefficient 1" in out


def test_verify_suites_pass(capsys):
    for suite in ["equivalence", "symmetry", "supports", "basis"]:
        code, out, _ = run(capsys, "verify", suite, "-b", "2", "-c", "2",
                           "--max", "3")
        assert code == 0, (suite, out)
        assert out.splitlines()[-1].startswith("PASS"), suite


def test_verify_positivity(capsys):
    code, out, _ = run(capsys, "verify", "positivity", "-b", "2", "-c", "2",
                       "--max", "2")
    assert code == 0
    assert "evidence only" in out


def test_render_dyck_deterministic(capsys):
    code1, out1, _ = run(capsys, "render", "dyck", "-a", "6", "4")
    code2, out2, _ = run(capsys, "render", "dyck", "-a", "6", "4")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith("<?xml") and "</svg>" in out1


def test_render_shadows(capsys):
    code, out, _ = run(capsys, "render", "shadows", "-a", "13", "8",
                       "-b", "4", "--s2", "2,6,8")
    assert code == 0
    assert "</svg>" in out


def test_render_support(capsys):
    code, out, _ = run(capsys, "render", "support", "-a", "1", "1",
                       "-b", "2", "-c", "2")
    assert code == 0
    assert "polygon" in out


def test_render_to_file(tmp_path, capsys):
    target = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "render", "dyck", "-a", "3", "3",
                       "-o", str(target))
    assert code == 0
    assert target.read_text().startswith("<?xml")


def test_env_threads_validated(capsys, monkeypatch):
    monkeypatch.setenv("GREEDY_THREADS", "0")
    with pytest.raises(SystemExit):
        main(["verify", "basis", "-b", "2", "-c", "2", "--max", "1"])


def test_parallel_sweep_matches_serial(capsys, monkeypatch):
    code1, out1, _ = run(capsys, "verify", "equivalence", "-b", "2", "-c", "2",
                         "--max", "2")
    monkeypatch.setenv("GREEDY_THREADS", "3")
    code2, out2, _ = run(capsys, "verify", "equivalence", "-b", "2", "-c", "2",
                         "--max", "2")
    assert (code1, out1) == (code2, out2)
