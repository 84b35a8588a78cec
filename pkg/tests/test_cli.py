import json

import pytest

from grigor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_reduce(capsys):
    assert run(capsys, "reduce", "bc") == (0, "d", "")
    assert run(capsys, "reduce", "abba")[1] == "1"


def test_reduce_bad_literal(capsys):
    code, _, err = run(capsys, "reduce", "abz")
    assert code == 2
    assert "z" in err


def test_eq(capsys):
    assert run(capsys, "eq", "bc", "d") == (0, "true", "")
    assert run(capsys, "eq", "a", "b")[1] == "false"


def test_order(capsys):
    assert run(capsys, "order", "ab")[1] == "16"
    code, data = run_json(capsys, "order", "ab")
    assert code == 0 and data["order"] == 16 and data["exact"] is True


def test_act_and_sections(capsys):
    assert run(capsys, "act", "a", "010")[1] == "110"
    code, data = run_json(capsys, "sections", "d", "1")
    assert data["sections"] == ["1", "b"]
    assert data["perm"] == [0, 1]


def test_stab_first_active(capsys):
    assert run(capsys, "stab", "b", "1")[1] == "true"
    assert run(capsys, "first-active", "d")[1] == "2"
    assert run(capsys, "first-active", "1")[1] == "none"


def test_k_test_and_embed(capsys):
    assert run(capsys, "k-test", "abab")[1] == "inside"
    assert run(capsys, "k-test", "a")[1] == "outside"
    code, out, _ = run(capsys, "k-embed", "1^+1", "")
    assert out == "badabada"


def test_lift(capsys):
    assert run(capsys, "lift", "a")[1] == "b"
    assert run(capsys, "lift", "--second", "b")[1] == "d"


def test_quotient(capsys):
    code, data = run_json(capsys, "quotient", "3")
    assert data["group_order"] == 128
    assert data["k_image_index"] == 16


def test_engel_probe_exit_codes(capsys):
    code, out, _ = run(capsys, "engel-probe", "--g", "d", "--x", "abab", "--bound", "20")
    assert code == 0 and "sink" in out
    # ad has order 4; the tower against daca survives past depth 6
    code, out, _ = run(
        capsys, "engel-probe", "--g", "ad", "--x", "daca", "--bound", "6"
    )
    assert code == 1
    assert "no sink" in out


def test_lemma_subcommands(capsys):
    code, data = run_json(capsys, "lemma1", "--k", "1^+1", "--g", "1", "--m", "4")
    assert code == 0 and data["holds"] is True
    code, data = run_json(capsys, "lemma2", "--x", "a", "--y", "badabada", "--m", "1")
    assert code == 0 and data["holds"] is True


def test_replay_and_verify_round_trip(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, _, _ = run(capsys, "replay-left", "a", "-N", "3", "--output", str(path))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and out.startswith("OK")

    data = json.loads(path.read_text())
    data["bound"] = 7
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and out.startswith("FAIL")


def test_replay_right_cli(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, _, _ = run(capsys, "replay-right", "a", "-N", "2", "--output", str(path))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and out.startswith("OK")


def test_search_pair(capsys):
    code, data = run_json(capsys, "search-pair", "-N", "2")
    assert code == 0
    assert data["h"] and data["y1"]


def test_survey(capsys):
    code, data = run_json(
        capsys, "survey", "--samples", "5", "--bound", "30", "--opponents", "2"
    )
    assert code == 0
    assert data["sinks"] == 10


def test_resource_cap_exit(capsys):
    code, _, err = run(capsys, "replay-left", "a", "-N", "11", "--budget", "3")
    assert code == 3
    assert "cap" in err


def test_json_round_trip_words(capsys):
    for literal in ("1", "a", "aba", "bc"):
        _, data = run_json(capsys, "reduce", literal)
        _, again = run_json(capsys, "reduce", data["word"])
        assert data["word"] == again["word"]
