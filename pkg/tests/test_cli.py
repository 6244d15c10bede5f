import json

import pytest

from nearsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_partitions_text(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "6")
    assert code == 0
    assert out == "{C, D, E, F#, G#, A#}\n{C#, D#, F, G, A, B}\n"


def test_partitions_flats(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "3", "--accidentals", "flats")
    assert code == 0
    assert out.splitlines()[1] == "{Db, F, A}"


def test_partitions_json(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == [[0, 4, 8], [1, 5, 9], [2, 6, 10], [3, 7, 11]]


def test_partitions_rejects_unsupported_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["partitions", "--n", "5"])
    assert exc.value.code == 2


def test_apply_single_transformation(capsys):
    code, out, _ = run(capsys, "apply", "--genus", "6", "--chord", "C+", "--seq", "SA(3)")
    assert (code, out) == (0, "B-\n")


def test_apply_involution_squares_to_identity(capsys):
    code, out, _ = run(capsys, "apply", "--genus", "4", "--chord", "C+", "--seq", "O,O")
    assert (code, out) == (0, "C+\n")


def test_apply_sequence_with_trace(capsys):
    code, out, _ = run(
        capsys, "apply", "--genus", "3", "--chord", "C+", "--seq", "R,S,N", "--trace"
    )
    assert code == 0
    assert out == (
        "C+ -R-> A- [P0,1]\n"
        "A- -S-> G#+ [P2,0]\n"
        "G#+ -N-> C#- [P2,0]\n"
        "C#-\n"
    )


def test_apply_accepts_superscript_tokens(capsys):
    code, out, _ = run(capsys, "apply", "--genus", "4", "--chord", "C+", "--seq", "S^{3(4)}")
    assert (code, out) == (0, "G-\n")


def test_apply_json(capsys):
    code, out, _ = run(
        capsys, "apply", "--genus", "3", "--chord", "C+", "--seq", "R", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {
        "start": "C+",
        "steps": [{"transform": "R", "result": "A-", "relation": [0, 1]}],
        "result": "A-",
    }


def test_apply_bad_chord_is_a_parse_error(capsys):
    code, _, err = run(capsys, "apply", "--genus", "3", "--chord", "X+", "--seq", "R")
    assert code == 2
    assert "error" in err


def test_apply_wrong_genus_token_is_a_domain_error(capsys):
    code, _, err = run(capsys, "apply", "--genus", "3", "--chord", "C+", "--seq", "Z")
    assert code == 3
    assert "n=6" in err


def test_relate_examples(capsys):
    assert run(capsys, "relate", "--genus", "3", "C+", "A-")[:2] == (0, "P0,1 R\n")
    assert run(capsys, "relate", "--genus", "6", "C+", "D-")[:2] == (0, "disjoint Z\n")
    assert run(capsys, "relate", "--genus", "3", "C+", "C+")[:2] == (0, "P0,0 identity\n")
    assert run(capsys, "relate", "--genus", "3", "C+", "E+")[:2] == (0, "P2,0 none\n")


def test_relate_json(capsys):
    code, out, _ = run(capsys, "relate", "--genus", "6", "C+", "D-", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "a": "C+",
        "b": "D-",
        "relation": [6, 0],
        "disjoint": True,
        "transform": "Z",
    }


def test_region_containing(capsys):
    code, out, _ = run(
        capsys, "region", "--genus", "6", "--kind", "arthropod", "--containing", "C+"
    )
    assert code == 0
    assert out.startswith("centipede 0:")
    listed = set(out.split(":")[1].split())
    assert listed == {
        "A#+", "C#-", "C+", "D#-", "D+", "F-", "E+", "G-", "F#+", "A-", "G#+", "B-"
    }


def test_region_listing_all(capsys):
    code, out, _ = run(capsys, "region", "--genus", "3", "--kind", "bridge")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("hexatonic 0 (Northern):")


def test_region_json_matches_schema(capsys):
    code, out, _ = run(
        capsys, "region", "--genus", "4", "--kind", "bridge", "--containing", "C+",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 1
    assert payload[0]["kind"] == "bridge"
    assert payload[0]["set_class"] == "8-28"
    assert len(payload[0]["edges"]) == 12


def test_cycles_hamiltonian_count(capsys):
    code, out, _ = run(
        capsys, "cycles", "--genus", "4", "--containing", "C+",
        "--min-len", "8", "--max-len", "8",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "total: 6"
    assert len(lines) == 7


def test_cycles_json(capsys):
    code, out, _ = run(
        capsys, "cycles", "--genus", "3", "--containing", "C+", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1
    assert payload["cycles"][0]["length"] == 6
    assert payload["cycles"][0]["set_class"] == "6-20"


def test_cycles_rejects_bad_bounds(capsys):
    code, _, err = run(
        capsys, "cycles", "--genus", "3", "--containing", "C+", "--min-len", "3"
    )
    assert code == 2
    assert "cycle lengths" in err


def test_export_dot(capsys):
    code, out, _ = run(
        capsys, "export", "--genus", "3", "--kind", "bridge", "--containing", "C+",
        "--format", "dot",
    )
    assert code == 0
    assert out.startswith("graph hexatonic_0 {")
    assert out.count('";') == 6
    assert out.count(" -- ") == 6


def test_export_rejects_text_format(capsys):
    code, _, err = run(
        capsys, "export", "--genus", "3", "--kind", "bridge", "--containing", "C+",
        "--format", "text",
    )
    assert code == 2
    assert "export format" in err


def test_export_json_round_trips(capsys):
    code, out, _ = run(
        capsys, "export", "--genus", "6", "--kind", "bridge", "--containing", "C+",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["set_class"] == "12-1"
    assert len(payload["edges"]) == 30


def test_verify_single_genus(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "3")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("0 failed")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["failed"] == 0
    assert payload["total"] == len(payload["checks"])


def test_printed_chords_reparse(capsys):
    # round-trip property of the chord grammar over a full region listing
    from nearsym.chord import genus, parse_chord

    for style in ("sharps", "flats"):
        code, out, _ = run(
            capsys, "region", "--genus", "6", "--kind", "bridge", "--accidentals", style
        )
        assert code == 0
        for line in out.splitlines():
            for token in line.split(":")[1].split():
                parse_chord(token, genus(6))
