import json

from inctrees.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_plain(capsys):
    code, out, _ = run(capsys, "seq", "bilabelled/unordered", "6")
    assert code == 0
    assert out.strip() == "1 1 4 34 496 11056"


def test_seq_bfile(capsys):
    code, out, _ = run(capsys, "seq", "free/unary-binary", "5", "--format", "bfile")
    assert code == 0
    assert out == "1 1\n2 2\n3 6\n4 24\n5 120\n"


def test_seq_bfile_is_byte_stable(capsys):
    _, first, _ = run(capsys, "seq", "bilabelled/ordered", "6", "--format", "bfile")
    _, second, _ = run(capsys, "seq", "bilabelled/ordered", "6", "--format", "bfile")
    assert first == second


def test_seq_json(capsys):
    code, out, _ = run(capsys, "seq", "trilabelled/unordered", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "trilabelled/unordered"
    assert payload["values"] == [1, 1, 11, 375]


def test_seq_ktuple_identifier(capsys):
    code, out, _ = run(capsys, "seq", "ktuple/ordered:k=2", "4")
    assert code == 0
    assert out.strip() == "1 1 5 59"


def test_seq_unknown_family_fails(capsys):
    code, out, err = run(capsys, "seq", "nosuch", "3")
    assert code != 0
    assert "unknown family" in err


def test_seq_capacity_error_is_reported(capsys, monkeypatch):
    monkeypatch.setenv("INCTREE_CAPACITY", "2")
    code, _, err = run(capsys, "hook", "klabelled", "--weights", "exp", "--max-n", "5")
    assert code != 0
    assert "capacity" in err


def test_reverse_values(capsys):
    code, out, _ = run(capsys, "reverse", "--values", "1,2,22,584")
    assert code == 0
    assert "phi_0 = 1" in out
    assert "phi_3 = 4" in out
    assert "admissible: yes" in out
    assert "round trip reproduces input: yes" in out


def test_reverse_family(capsys):
    code, out, _ = run(
        capsys, "reverse", "--family", "bilabelled/3-bundled", "--terms", "8"
    )
    assert code == 0
    assert "phi_1 = 3" in out and "phi_2 = 6" in out and "phi_3 = 10" in out


def test_reverse_zero_start_fails(capsys):
    code, _, err = run(capsys, "reverse", "--values", "0,1")
    assert code != 0
    assert "T_1" in err


def test_reverse_json(capsys):
    code, out, _ = run(
        capsys, "reverse", "--values", "1,2,22,584", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["phi"] == ["1", "2", "3", "4"]
    assert payload["admissible"] is True


def test_bijection_free(capsys):
    code, out, _ = run(capsys, "bijection", "free", "--max-m", "4")
    assert code == 0
    assert "m=4: 30 objects" in out
    assert "PASS" in out


def test_bijection_unibi_show(capsys):
    code, out, _ = run(capsys, "bijection", "unibi", "--max-m", "2", "--show")
    assert code == 0
    assert "({1,2}) -> ({1}w) [m-1]" in out


def test_hook_klabelled(capsys):
    code, out, _ = run(
        capsys, "hook", "klabelled", "--weights", "exp", "-k", "2", "--max-n", "4"
    )
    assert code == 0
    assert out.count("equal") == 4


def test_hook_family_weights(capsys):
    code, out, _ = run(
        capsys, "hook", "ktuple", "--family", "bilabelled/ordered", "-k", "2",
        "--max-n", "3", "--format", "json",
    )
    assert code == 0
    reports = json.loads(out)
    assert all(r["verdict"] == "equal" for r in reports)


def test_hook_bucket(capsys):
    code, out, _ = run(
        capsys, "hook", "bucket", "--weights", "exp", "--max-m", "4",
        "--max-bucket", "2",
    )
    assert code == 0
    assert "bucket-uni-bi" in out


def test_hook_bucket_rejects_other_caps(capsys):
    code, _, err = run(
        capsys, "hook", "bucket", "--weights", "exp", "--max-m", "3",
        "--max-bucket", "3",
    )
    assert code != 0
    assert "max-bucket" in err


def test_hook_rho(capsys):
    code, out, _ = run(
        capsys, "hook", "rho", "--tree-family", "binary",
        "--rho-num", "1,1", "--rho-den", "0,1", "--max-n", "3",
    )
    assert code == 0
    assert "n=3 sum=64/3" in out


def test_verify_bijection_suite(capsys):
    code, out, _ = run(capsys, "verify", "bijection", "--max-m", "4")
    assert code == 0
    assert "OK" in out


def test_verify_invariants_suite(capsys):
    code, out, _ = run(
        capsys, "verify", "invariants", "--max-n", "4", "--max-m", "4"
    )
    assert code == 0
    assert "FAIL" not in out


def test_verify_hook_suite_small(capsys):
    code, out, _ = run(capsys, "verify", "hook", "--max-n", "4", "--max-m", "4")
    assert code == 0


def test_verify_closed_forms_json(capsys):
    code, out, _ = run(
        capsys, "verify", "closed-forms", "--max-n", "6", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(c["ok"] for c in payload["checks"])
