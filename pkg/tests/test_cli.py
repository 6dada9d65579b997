import json

import pytest

from levicycles import families
from levicycles.arrangement import arrangement_to_json
from levicycles.cli import EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, EXIT_USAGE, run


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("arrangements")
    out = {}
    for name, arr in [
        ("nine_three", families.nine_three()),
        ("mu4", families.mu4()),
        ("generic3", families.generic(3)),
        ("ten_line", families.ten_line()),
    ]:
        path = root / f"{name}.json"
        path.write_text(arrangement_to_json(arr) + "\n", encoding="utf-8")
        out[name] = str(path)
    return out


# -- build / stats


def test_build_and_stats_text(tmp_path, capsys):
    target = str(tmp_path / "np5.json")
    assert run(["build", "near_pencil", "--k", "5", "-o", target]) == EXIT_OK
    assert capsys.readouterr().out == f"wrote {target}: k = 5, s = 5\n"
    assert run(["stats", target]) == EXIT_OK
    assert capsys.readouterr().out == (
        "k = 5\ns = 5\nt_2 = 4\nt_4 = 1\nmodular points: 0, 1, 2, 3, 4\n"
    )


def test_stats_json(tmp_path, capsys):
    target = str(tmp_path / "tm.json")
    assert run(["build", "two_modular", "--a", "5", "--b", "6", "-o", target]) == EXIT_OK
    capsys.readouterr()
    assert run(["stats", target, "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["k"] == 10
    assert doc["s"] == 22
    assert doc["t"] == {"2": 20, "5": 1, "6": 1}
    assert len(doc["modular_points"]) == 2


def test_build_with_chosen(tmp_path, capsys):
    target = str(tmp_path / "awk.json")
    code = run(["build", "a_w_k", "--m", "5", "--k", "2", "--chosen", "0,2", "-o", target])
    assert code == EXIT_OK
    assert "k = 11" in capsys.readouterr().out


def test_build_missing_parameter(tmp_path, capsys):
    code = run(["build", "generic", "-o", str(tmp_path / "g.json")])
    assert code == EXIT_USAGE
    assert "needs parameters: k" in capsys.readouterr().err


def test_build_bad_chosen(tmp_path, capsys):
    code = run(["build", "a_w_k", "--m", "5", "--k", "1", "--chosen", "1,x",
                "-o", str(tmp_path / "x.json")])
    assert code == EXIT_USAGE
    assert "comma-separated integers" in capsys.readouterr().err


def test_build_unknown_family(tmp_path, capsys):
    assert run(["build", "nope", "-o", str(tmp_path / "x.json")]) == EXIT_USAGE


def test_stats_rejects_invalid_arrangement(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"k": 3, "points": [{"id": 0, "lines": [0, 2]}]}', encoding="utf-8")
    assert run(["stats", str(bad)]) == EXIT_USAGE
    assert "invalid arrangement" in capsys.readouterr().err


def test_missing_file(capsys):
    assert run(["stats", "/nonexistent/thing.json"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


# -- levi


def test_levi_dot(files, capsys):
    assert run(["levi", files["mu4"], "--dot"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("graph levi {\n")
    assert out.endswith("}\n")
    assert '  x0 [shape=circle, part="point"];' in out
    assert "  x0 -- y0;" in out


def test_levi_json(files, capsys):
    assert run(["levi", files["nine_three"], "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["s"] == 18 and doc["k"] == 9
    assert len(doc["edges"]) == 45


def test_levi_requires_format_flag(files, capsys):
    assert run(["levi", files["mu4"]]) == EXIT_USAGE


# -- cycles


def test_cycles_longest_text(files, capsys):
    assert run(["cycles", files["nine_three"], "--longest"]) == EXIT_OK
    assert capsys.readouterr().out == "longest induced cycle: length 18 (9 lines)\n"


def test_cycles_longest_witness(files, capsys):
    assert run(["cycles", files["nine_three"], "--longest", "--witness"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "longest induced cycle: length 18 (9 lines)"
    assert out[1].startswith("witness lines=[0, ")


def test_cycles_exists_text(files, capsys):
    assert run(["cycles", files["nine_three"], "--exists", "8"]) == EXIT_OK
    assert capsys.readouterr().out == "length 16: absent\n"
    assert run(["cycles", files["nine_three"], "--exists", "9"]) == EXIT_OK
    assert capsys.readouterr().out == "length 18: found\n"


def test_cycles_exists_bad_length(files, capsys):
    assert run(["cycles", files["nine_three"], "--exists", "2"]) == EXIT_USAGE
    assert "i >= 3" in capsys.readouterr().err


def test_cycles_spectrum_text(files, capsys):
    assert run(["cycles", files["mu4"], "--spectrum", "6"]) == EXIT_OK
    assert capsys.readouterr().out == (
        "i =  3  length   6  found\n"
        "i =  4  length   8  found\n"
        "i =  5  length  10  absent\n"
        "i =  6  length  12  absent\n"
    )


def test_cycles_longest_json(files, capsys):
    assert run(["cycles", files["nine_three"], "--longest", "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "found"
    assert doc["length"] == 18
    assert doc["nodes"] > 0
    assert len(doc["witness"]["lines"]) == 9


def test_cycles_exists_json(files, capsys):
    assert run(["cycles", files["mu4"], "--exists", "5", "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"i": 5, "status": "absent", "nodes": doc["nodes"]}


def test_cycles_spectrum_json(files, capsys):
    assert run(["cycles", files["mu4"], "--spectrum", "4", "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"3", "4"}
    assert doc["3"]["status"] == "found"


def test_cycles_budget_exhausted(files, capsys):
    assert run(["cycles", files["nine_three"], "--longest", "--budget", "0"]) == EXIT_UNKNOWN
    assert capsys.readouterr().out == "unknown: budget exhausted\n"
    assert run(["cycles", files["nine_three"], "--spectrum", "4", "--budget", "0"]) == EXIT_UNKNOWN


def test_cycles_threads_flag(files, capsys):
    assert run(["cycles", files["nine_three"], "--exists", "9", "--threads", "2"]) == EXIT_OK
    assert capsys.readouterr().out == "length 18: found\n"


def test_cycles_requires_mode(files):
    assert run(["cycles", files["mu4"]]) == EXIT_USAGE


# -- verify


def test_verify_single_checker(files, capsys):
    assert run(["verify", files["nine_three"], "--claim", "c6"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("c6: Confirmed\n")
    assert "[+] not all lines concurrent" in out


def test_verify_all_exit_codes(files, capsys):
    assert run(["verify", files["ten_line"], "--all"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "c6: Confirmed" in out and "no-2k-supersolvable: NotApplicable" in out
    # the triangle's full-length cycle refutes the modular obstruction
    assert run(["verify", files["generic3"], "--all"]) == EXIT_REFUTED


def test_verify_named_claim_refuted(files, capsys):
    assert run(["verify", files["mu4"], "--claim", "nine-three-longest"]) == EXIT_REFUTED
    out = capsys.readouterr().out
    assert out.startswith("nine-three-longest: Refuted")
    assert "witness (length 18)" in out


def test_verify_named_claim_with_params(files, capsys):
    assert run(["verify", files["mu4"], "--claim", "ceva-range", "--n", "5"]) == EXIT_OK
    capsys.readouterr()
    assert run(["verify", files["mu4"], "--claim", "ceva-range"]) == EXIT_USAGE
    assert "requires parameter 'n'" in capsys.readouterr().err


def test_verify_guarded_claim_is_unknown(files, capsys):
    code = run(["verify", files["mu4"], "--claim", "awk-max", "--m", "8", "--k", "2"])
    assert code == EXIT_UNKNOWN


def test_verify_unknown_claim(files, capsys):
    assert run(["verify", files["mu4"], "--claim", "bogus"]) == EXIT_USAGE
    assert "unknown claim" in capsys.readouterr().err


def test_verify_json_omits_wall_time_by_default(files, capsys):
    assert run(["verify", files["mu4"], "--claim", "c6", "--format", "json"]) == EXIT_OK
    docs = json.loads(capsys.readouterr().out)
    assert len(docs) == 1
    assert "wall_time" not in docs[0]
    assert docs[0]["verdict"] == "Confirmed"


def test_verify_json_with_timing(files, capsys):
    code = run(["verify", files["mu4"], "--claim", "c6", "--format", "json", "--timing"])
    assert code == EXIT_OK
    docs = json.loads(capsys.readouterr().out)
    assert "wall_time" in docs[0]


def test_verify_text_timing_line(files, capsys):
    assert run(["verify", files["mu4"], "--claim", "c6", "--timing"]) == EXIT_OK
    assert "wall time:" in capsys.readouterr().out


def test_verify_deterministic_output(files, capsys):
    run(["verify", files["ten_line"], "--all"])
    first = capsys.readouterr().out
    run(["verify", files["ten_line"], "--all"])
    assert capsys.readouterr().out == first


# -- oracle-check


def test_oracle_check_agrees(files, capsys):
    assert run(["oracle-check", files["mu4"]]) == EXIT_OK
    assert capsys.readouterr().out == (
        "solver lengths: 6, 8\noracle lengths: 6, 8\nagree\n"
    )


def test_oracle_check_too_large(tmp_path, capsys):
    target = str(tmp_path / "big.json")
    run(["build", "ceva", "--n", "5", "-o", target])
    capsys.readouterr()
    # 15 lines + 28 points = 43 Levi vertices, past the oracle's cap
    assert run(["oracle-check", target]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


# -- top-level behavior


def test_no_arguments_is_usage_error():
    assert run([]) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == EXIT_OK
    assert "levicycles" in capsys.readouterr().out
