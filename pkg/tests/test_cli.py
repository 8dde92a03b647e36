import json

from permlcs import dumps_permset, identity, PermSet, read_permset
from permlcs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_construct_algebraic(tmp_path, capsys):
    out = tmp_path / "s.permset"
    code, report, _ = run_json(
        capsys, "construct", "algebraic", "--n", "72", "--k", "3", "--out", str(out)
    )
    assert code == 0
    assert set(report) == {"command", "params", "results", "pass"}
    assert report["pass"] is True
    assert report["results"]["p"] == 29
    assert report["results"]["lcs_bound"] == 57
    parsed = read_permset(out)
    assert parsed.k == 3 and parsed.n == 72


def test_construct_hadamard(tmp_path, capsys):
    out = tmp_path / "h.permset"
    code, report, _ = run_json(
        capsys, "construct", "hadamard", "--k", "4", "--s", "2", "--out", str(out)
    )
    assert code == 0
    assert report["results"]["n_prime"] == 8
    assert report["results"]["lcs_bound"] == 2
    assert read_permset(out).k == 4


def test_construct_round_trip_equal(tmp_path, capsys):
    out = tmp_path / "s.permset"
    code, _, _ = run(capsys, "construct", "algebraic", "--n", "45", "--k", "3",
                     "--out", str(out))
    assert code == 0
    from permlcs import build_general

    assert read_permset(out).perms == build_general(45, 3).perms


def test_construct_parameter_errors(capsys):
    code, _, err = run(capsys, "construct", "algebraic", "--n", "8", "--k", "3")
    assert code == 2 and "k^2" in err
    code, _, _ = run(capsys, "construct", "algebraic", "--k", "3")
    assert code == 2
    code, _, _ = run(capsys, "construct", "hadamard", "--k", "10", "--s", "2")
    assert code == 2
    code, _, _ = run(capsys, "construct", "badkind", "--k", "3")
    assert code == 2


def test_verify_theorem2_pass(tmp_path, capsys):
    out = tmp_path / "s.permset"
    run(capsys, "construct", "algebraic", "--n", "72", "--k", "3", "--out", str(out))
    code, report, _ = run_json(capsys, "verify", str(out), "--bound", "theorem2")
    assert code == 0 and report["pass"] is True
    b = report["results"]["bounds"]["theorem2"]
    assert b["holds"] and b["threshold"] >= 192.0
    assert len(report["results"]["pairwise_lcs"]) == 3


def test_verify_theorem1_pass(tmp_path, capsys):
    out = tmp_path / "h.permset"
    run(capsys, "construct", "hadamard", "--k", "4", "--s", "2", "--out", str(out))
    code, report, _ = run_json(capsys, "verify", str(out), "--bound", "theorem1")
    assert code == 0
    assert report["results"]["bounds"]["theorem1"]["threshold"] == 2


def test_verify_duplicate_set_fails_theorem2(tmp_path, capsys):
    n = 300  # n^2 > 32^3 * k makes LCS = n a violation
    path = tmp_path / "dup.permset"
    path.write_text(dumps_permset(PermSet((identity(n), identity(n)))))
    code, report, _ = run_json(capsys, "verify", str(path), "--bound", "theorem2")
    assert code == 1 and report["pass"] is False


def test_verify_all_skips_inapplicable(tmp_path, capsys):
    out = tmp_path / "s.permset"
    run(capsys, "construct", "algebraic", "--n", "72", "--k", "3", "--out", str(out))
    code, report, _ = run_json(capsys, "verify", str(out))
    assert code == 0
    bounds = report["results"]["bounds"]
    assert bounds["theorem1"]["applicable"] is False  # k=3 is odd
    assert bounds["lower"]["holds"] and bounds["theorem2"]["holds"]


def test_verify_single_inapplicable_bound_is_usage_error(tmp_path, capsys):
    path = tmp_path / "two.permset"
    path.write_text(dumps_permset(PermSet((identity(9), identity(9)))))
    code, _, err = run(capsys, "verify", str(path), "--bound", "lower")
    assert code == 2 and "not applicable" in err


def test_verify_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.permset"
    path.write_text("permset 9 9\n")
    code, _, _ = run(capsys, "verify", str(path))
    assert code == 2
    code, _, _ = run(capsys, "verify", str(tmp_path / "missing.permset"))
    assert code == 2


def test_sample_deterministic(capsys):
    code, rep1, _ = run_json(capsys, "sample", "--n", "100", "--k", "3",
                             "--trials", "10", "--seed", "7")
    code2, rep2, _ = run_json(capsys, "sample", "--n", "100", "--k", "3",
                              "--trials", "10", "--seed", "7")
    assert code == code2 == 0
    assert rep1 == rep2
    assert rep1["results"]["violations"] == 0
    assert len(rep1["results"]["max_lcs_distribution"]) == 10


def test_sample_lis_csv(tmp_path, capsys):
    csv_path = tmp_path / "lis.csv"
    code, report, _ = run_json(capsys, "sample", "--n", "50", "--k", "2",
                               "--trials", "5", "--seed", "1",
                               "--lis-csv", str(csv_path))
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "trial,length" and len(lines) == 6
    assert report["results"]["lis_csv"] == str(csv_path)


def test_sample_zero_trials(capsys):
    code, _, _ = run(capsys, "sample", "--n", "10", "--k", "2", "--trials", "0")
    assert code == 2


def test_distance_report(tmp_path, capsys):
    out = tmp_path / "h.permset"
    run(capsys, "construct", "hadamard", "--k", "4", "--s", "2", "--out", str(out))
    code, report, _ = run_json(capsys, "distance", str(out))
    assert code == 0
    assert report["results"]["code"]["min_distance"] >= 6
    assert report["results"]["code"]["min_distance"] + report["results"]["code"]["max_pair_lcs"] == 8


def test_distance_single_perm_rejected(tmp_path, capsys):
    path = tmp_path / "one.permset"
    path.write_text("permset 1 1 3\n1 2 3\n")
    code, _, _ = run(capsys, "distance", str(path))
    assert code == 2


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--grid", "algebraic:k=3,4:s1=1",
                       "--grid", "hadamard:k=4:s=2", "--seed", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "construction,n,k,max_lcs,bound,elapsed_ms"
    assert len(lines) == 4
    for line in lines[1:]:
        kind, n, k, max_lcs, bound, elapsed = line.split(",")
        assert kind in ("algebraic", "hadamard")
        assert int(max_lcs) <= float(bound)
        assert elapsed == "0"


def test_bench_deterministic_with_random_rows(capsys):
    args = ("bench", "--grid", "random:n=60,100:k=3", "--seed", "11")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_bench_bad_grids(capsys):
    assert run(capsys, "bench", "--grid", "algebraic:k=3")[0] == 2
    assert run(capsys, "bench", "--grid", "mystery:k=3:s1=1")[0] == 2
    assert run(capsys, "bench", "--grid", "algebraic:k=:s1=1")[0] == 2
    assert run(capsys, "bench")[0] == 2


def test_threads_env_cap(tmp_path, capsys, monkeypatch):
    out = tmp_path / "s.permset"
    run(capsys, "construct", "algebraic", "--n", "72", "--k", "3", "--out", str(out))
    monkeypatch.setenv("PERMLCS_THREADS", "4")
    code, report, _ = run_json(capsys, "verify", str(out))
    assert code == 0 and report["pass"]
    monkeypatch.setenv("PERMLCS_THREADS", "nonsense")
    assert run(capsys, "verify", str(out))[0] == 0


def test_usage_error_exit_code(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys)[0] == 2
