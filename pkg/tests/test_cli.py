"""The command-line surface: formats, exit codes, determinism."""

import pytest

from tits27 import cli, exactlinalg as la, generators


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cubic_emits_45_sorted_lines(capsys):
    code, out = run(capsys, "cubic")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 45
    assert lines[0] == "+ -3 -2 -1"
    payload = [tuple(int(x) for x in ln.split()[1:]) for ln in lines]
    assert payload == sorted(payload)
    signs = [ln.split()[0] for ln in lines]
    assert set(signs) == {"+", "-"}


def test_cubic_check(capsys):
    code, out = run(capsys, "cubic", "--check")
    assert code == 0
    assert "invariant under eprime: PASS" in out


def test_gens_round_trip(tmp_path, capsys):
    code, out = run(capsys, "gens", "--out", str(tmp_path))
    assert code == 0
    g = generators.build_all()
    for name, m in g.as_dict().items():
        assert la.load_matrix(tmp_path / f"{name}.mat") == m


def test_gens_gf41_round_trip(tmp_path, capsys):
    code, _ = run(capsys, "gens", "--gf41", "--out", str(tmp_path))
    assert code == 0
    for name, m in zip(generators.NAMES, generators.build_all_gf41()):
        assert la.load_matrix(tmp_path / f"{name}.mat") == m


def test_gens_stdout_deterministic(capsys):
    _, out1 = run(capsys, "gens", "--gf41")
    _, out2 = run(capsys, "gens", "--gf41")
    assert out1 == out2
    assert out1.startswith("# f1\ngf41 27 27\n")


def test_orbit_subset(capsys):
    code, out = run(capsys, "orbit", "--seed", "fixed", "--gens", "f1,f2")
    assert code == 0
    assert out.strip() == "orbit size: 1"


def test_orbit_perms_of_singleton(capsys):
    code, out = run(capsys, "orbit", "--seed", "fixed", "--gens", "f1", "--perms")
    assert code == 0
    assert "f1 0" in out


def test_orbit_unknown_gen(capsys):
    code, _ = run(capsys, "orbit", "--seed", "fixed", "--gens", "bogus")
    assert code == 2


def test_eval_round_trip(tmp_path, capsys):
    g = generators.build_all()
    la.save_matrix(g.f1, tmp_path / "f1.mat")
    la.save_matrix(g.ac, tmp_path / "ac.mat")
    code, out = run(capsys, "eval", "--word", "f1^ac",
                    "--bind", f"f1={tmp_path / 'f1.mat'}",
                    "--bind", f"ac={tmp_path / 'ac.mat'}")
    assert code == 0
    assert la.parse_matrix(out) == g.f2


def test_eval_bad_word(capsys):
    code, _ = run(capsys, "eval", "--word", "a^(b")
    assert code == 2


def test_eval_bad_binding(capsys):
    code, _ = run(capsys, "eval", "--word", "a", "--bind", "nonsense")
    assert code == 2


def test_reduce41(tmp_path, capsys):
    g = generators.build_all()
    la.save_matrix(g.eprime, tmp_path / "ep.mat")
    code, out = run(capsys, "reduce41", "--in", str(tmp_path / "ep.mat"))
    assert code == 0
    reduced = la.parse_matrix(out)
    assert reduced == la.reduce_matrix_mod41(g.eprime)


def test_reduce41_missing_file(capsys):
    code, _ = run(capsys, "reduce41", "--in", "/nonexistent/m.mat")
    assert code == 2


def test_basis_selftest_one_seed_block(capsys):
    code, out = run(capsys, "basis", "--selftest", "--seed", "21")
    assert code == 0
    assert out.count("scramble seed") == 5
    assert "FAIL" not in out


def test_basis_requires_mode(capsys):
    code, _ = run(capsys, "basis")
    assert code == 2


def test_basis_missing_input_dir(tmp_path, capsys):
    code, _ = run(capsys, "basis", "--in", str(tmp_path))
    assert code == 2


def test_verify_fast(capsys):
    code, out = run(capsys, "verify", "--fast")
    assert code == 0
    assert "FAIL" not in out
    assert "eprime inverts ac" in out


def test_usage_errors(capsys):
    assert cli.run(["nonsense"]) == 2
    assert cli.run([]) == 2
