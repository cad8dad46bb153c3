"""CLI verbs, exit codes, deterministic output, JSON round-trips."""

import json

from qrr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def canonical(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "--family", "A", "--n", "2")
    assert code == 0
    assert out == "1 + q + q^2 + q^4\n"


def test_expand_json_round_trip(capsys):
    code, out, _ = run(capsys, "expand", "--family", "B", "--n", "3", "--format", "json")
    assert code == 0
    assert canonical(json.loads(out)) == out.strip()


def test_expand_unknown_family(capsys):
    code, out, err = run(capsys, "expand", "--family", "X", "--n", "2")
    assert code == 2
    assert not out
    assert "invalid choice" in err


def test_expand_negative_n(capsys):
    code, _, err = run(capsys, "expand", "--family", "A", "--n", "-1")
    assert code == 2
    assert "nonnegative" in err


def test_unknown_verb(capsys):
    code, _, _ = run(capsys, "transmogrify")
    assert code == 2


def test_verify_identity_pass(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "bressoud1", "--n-max", "15")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == [
        "pass bressoud1:A=B range=[0,15]",
        "pass bressoud1:A range=[0,13]",
        "pass bressoud1:B range=[0,13]",
    ]


def test_verify_identity_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "santos-t", "--n-max", "12", "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert canonical(parsed) == out.strip()
    assert [r["status"] for r in parsed] == ["pass", "pass", "pass"]


def test_verify_recurrence_pass(capsys):
    code, out, _ = run(capsys, "verify-recurrence", "--key", "u", "--family", "U_ALT", "--n-max", "15")
    assert code == 0
    assert out == "pass u:U_ALT range=[0,13]\n"


def test_verify_recurrence_failure_witness(capsys):
    # mismatched recurrence/family pairing: exit 1 plus a witness block
    code, out, _ = run(capsys, "verify-recurrence", "--key", "u", "--family", "A", "--n-max", "10")
    assert code == 1
    assert "FAIL u:A" in out
    assert "n=0" in out and "residual=-q^3" in out


def test_verify_recurrence_failure_json(capsys):
    code, out, _ = run(capsys, "verify-recurrence", "--key", "santos", "--family", "A",
                       "--n-max", "10", "--format", "json")
    assert code == 1
    parsed = json.loads(out)
    assert canonical(parsed) == out.strip()
    report = parsed[0]
    assert report["status"] == "fail"
    assert report["witness"]["n"] == 0
    assert report["witness"]["residual"]["terms"]


def test_guess_text(capsys):
    code, out, _ = run(capsys, "guess", "--family", "S", "--order", "2", "--deg-t", "2",
                       "--deg-q", "2", "--fit", "0..12", "--confirm", "13..16")
    assert code == 0
    assert out == "(q - q^2*t^2)*P[n+0] + (-1 - q)*P[n+1] + P[n+2] = 0\n"


def test_guess_json_round_trip(capsys):
    code, out, _ = run(capsys, "guess", "--family", "U", "--order", "2", "--deg-t", "2",
                       "--deg-q", "3", "--fit", "0..12", "--confirm", "13..16",
                       "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert canonical(parsed) == out.strip()
    assert parsed[0]["order"] == 2


def test_guess_empty_result(capsys):
    code, out, _ = run(capsys, "guess", "--family", "A", "--order", "1", "--deg-t", "0",
                       "--deg-q", "0", "--fit", "0..8", "--confirm", "9..11")
    assert code == 0
    assert out == "no recurrence within the ansatz\n"


def test_guess_bad_ranges(capsys):
    code, _, err = run(capsys, "guess", "--family", "A", "--order", "2", "--deg-t", "2",
                       "--deg-q", "3", "--fit", "0..12", "--confirm", "10..14")
    assert code == 2
    assert "disjoint" in err
    code, _, err = run(capsys, "guess", "--family", "A", "--order", "2", "--deg-t", "2",
                       "--deg-q", "3", "--fit", "oops", "--confirm", "10..14")
    assert code == 2


def test_limit_text_and_json(capsys):
    code, out, _ = run(capsys, "limit", "--family", "A", "--n-max", "12")
    assert code == 0
    assert out == "pass limit:A range=[0,12]\n"
    code, out, _ = run(capsys, "limit", "--family", "C", "--n-max", "10", "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert canonical(parsed) == out.strip()
    assert parsed[0]["witness"] is None


def test_limit_rejects_sum_side_only_choices(capsys):
    code, _, _ = run(capsys, "limit", "--family", "S", "--n-max", "5")
    assert code == 2


def test_results_deterministic(capsys):
    first = run(capsys, "verify", "--identity", "u", "--n-max", "10", "--format", "json")
    second = run(capsys, "verify", "--identity", "u", "--n-max", "10", "--format", "json")
    assert first == second


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("ok ") for line in lines[:-1])
    assert "13/13 checks passed" in lines[-1]


def test_timing_goes_to_stderr(capsys):
    code, out, err = run(capsys, "expand", "--family", "A", "--n", "1", "--timing")
    assert code == 0
    assert out == "1 + q\n"
    assert "expand:" in err
