import json
import shutil
import subprocess

import pytest

from posetops.cli import _split_support, main
from posetops.errors import PosetOpsError


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def terms_by_word(data):
    assert data["terms"] == sorted(
        data["terms"], key=lambda t: (len(t["word"]), t["word"])
    )
    return {t["word"]: (t["num"], t["den"]) for t in data["terms"]}


def write_poly(path, alphabet, terms):
    path.write_text(
        json.dumps(
            {
                "alphabet": alphabet,
                "terms": [
                    {"word": w, "num": num, "den": den} for w, num, den in terms
                ],
            }
        ),
        encoding="utf-8",
    )


def test_gen_emits_the_poset(capsys):
    code, out, err = run_cli(capsys, ["poset", "gen", "--kind", "boolean", "--n", "2"])
    assert code == 0 and err == ""
    data = json.loads(out)
    assert sorted(data["elements"]) == sorted(["{}", "{1}", "{2}", "{1,2}"])
    assert data["bottom"] == "{}"
    assert data["top"] == "{1,2}"
    assert data["rank"]["{2}"] == 1


def test_index_cd_on_generated_boolean(capsys):
    code, out, err = run_cli(capsys, ["index", "cd", "--kind", "boolean", "--n", "3"])
    assert code == 0
    data = json.loads(out)
    assert data["alphabet"] == "cd"
    assert terms_by_word(data) == {"d": (1, 1), "cc": (1, 1)}


def test_index_cd_rejects_non_eulerian_input(capsys):
    code, out, err = run_cli(capsys, ["index", "cd", "--kind", "chain", "--n", "2"])
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_index_reads_poset_files(tmp_path, capsys):
    poset_path = tmp_path / "ladder4.json"
    code, _, _ = run_cli(
        capsys,
        ["poset", "gen", "--kind", "ladder", "--n", "4", "--out", str(poset_path)],
    )
    assert code == 0
    code, out, _ = run_cli(capsys, ["index", "cd", "--in", str(poset_path)])
    assert code == 0
    assert terms_by_word(json.loads(out)) == {"cccc": (1, 1)}


def test_chains_counts_with_bracketed_support(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "poset",
            "chains",
            "--kind",
            "boolean",
            "--n",
            "2",
            "--support",
            "{},{1},{1,2}",
        ],
    )
    assert code == 0
    assert json.loads(out) == 7


def test_chains_counts_on_ladder(capsys):
    code, out, _ = run_cli(
        capsys,
        ["poset", "chains", "--kind", "ladder", "--n", "2", "--support", "0̂,+1,1̂"],
    )
    assert code == 0
    assert json.loads(out) == 7


def test_chains_needs_a_poset_source(capsys):
    code, out, err = run_cli(capsys, ["poset", "chains", "--support", "x"])
    assert code == 2
    assert "error:" in err


def test_second_kind_lists_one_member_per_element(tmp_path, capsys):
    poset_path = tmp_path / "chain2.json"
    run_cli(capsys, ["poset", "gen", "--kind", "chain", "--n", "2", "--out", str(poset_path)])
    code, out, _ = run_cli(capsys, ["poset", "second-kind", "--in", str(poset_path)])
    assert code == 0
    data = json.loads(out)
    assert len(data["members"]) == 3
    assert all(set(m) == {"generator", "poset"} for m in data["members"])


def test_eulerian_flag(tmp_path, capsys):
    poset_path = tmp_path / "b2.json"
    run_cli(capsys, ["poset", "gen", "--kind", "boolean", "--n", "2", "--out", str(poset_path)])
    code, out, _ = run_cli(capsys, ["poset", "eulerian", "--in", str(poset_path)])
    assert code == 0 and json.loads(out) == {"eulerian": True}
    chain_path = tmp_path / "c2.json"
    run_cli(capsys, ["poset", "gen", "--kind", "chain", "--n", "2", "--out", str(chain_path)])
    code, out, _ = run_cli(capsys, ["poset", "eulerian", "--in", str(chain_path)])
    assert code == 0 and json.loads(out) == {"eulerian": False}


def test_op_delannoy_small_case(capsys):
    code, out, _ = run_cli(capsys, ["op", "delannoy", "--i", "1", "--j", "1"])
    assert code == 0
    assert terms_by_word(json.loads(out)) == {
        "ccc": (1, 1),
        "cd": (2, 1),
        "dc": (2, 1),
    }


def test_op_mixing_units_gives_c(tmp_path, capsys):
    unit = tmp_path / "unit.json"
    write_poly(unit, "cd", [("", 1, 1)])
    code, out, _ = run_cli(
        capsys, ["op", "M", "--in", str(unit), "--in2", str(unit)]
    )
    assert code == 0
    assert terms_by_word(json.loads(out)) == {"c": (1, 1)}


def test_op_mixing_rejects_mixed_alphabets(tmp_path, capsys):
    ab_path = tmp_path / "ab.json"
    cd_path = tmp_path / "cd.json"
    write_poly(ab_path, "ab", [("a", 1, 1)])
    write_poly(cd_path, "cd", [("c", 1, 1)])
    code, _, err = run_cli(
        capsys, ["op", "M", "--in", str(ab_path), "--in2", str(cd_path)]
    )
    assert code == 2
    assert "error:" in err


def test_op_lift_requires_ab_input(tmp_path, capsys):
    cd_path = tmp_path / "cd.json"
    write_poly(cd_path, "cd", [("c", 1, 1)])
    code, _, err = run_cli(capsys, ["op", "lift", "--in", str(cd_path)])
    assert code == 2
    assert "error:" in err


def test_out_file_keeps_stdout_quiet(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, out, _ = run_cli(
        capsys,
        ["index", "ab", "--kind", "boolean", "--n", "2", "--out", str(target)],
    )
    assert code == 0
    assert out == ""
    text = target.read_text(encoding="utf-8")
    assert text.endswith("\n")
    assert terms_by_word(json.loads(text)) == {"a": (1, 1), "b": (1, 1)}


def test_repeated_runs_are_byte_identical(tmp_path, capsys):
    argv = ["index", "upsilon", "--kind", "cube", "--n", "2"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second
    a_path, b_path = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(capsys, argv + ["--out", str(a_path)])
    run_cli(capsys, argv + ["--out", str(b_path)])
    assert a_path.read_bytes() == b_path.read_bytes()


def test_usage_errors_exit_64(capsys):
    assert main(["bogus"]) == 64
    assert main([]) == 64
    assert main(["verify", "--suite", "no-such-suite"]) == 64
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_verify_ladder_passes(capsys):
    code, out, _ = run_cli(capsys, ["verify", "--suite", "ladder"])
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "ladder"
    assert report["summary"]["failed"] == 0


def test_verify_eigen_reports_failure_exit(capsys):
    code, out, _ = run_cli(capsys, ["verify", "--suite", "eigen"])
    assert code == 1
    assert json.loads(out)["summary"]["failed"] == 2


def test_split_support_honors_brackets():
    assert _split_support("{},{1},{1,2}") == ["{}", "{1}", "{1,2}"]
    assert _split_support("[u,v], (p,q)") == ["[u,v]", "(p,q)"]
    assert _split_support("x") == ["x"]
    with pytest.raises(PosetOpsError):
        _split_support("{1,{2}")
    with pytest.raises(PosetOpsError):
        _split_support("a,,b")


def test_console_script_runs_a_suite():
    exe = shutil.which("posetops")
    assert exe is not None
    proc = subprocess.run(
        [exe, "verify", "--suite", "ladder"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["failed"] == 0
