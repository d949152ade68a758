import json
from fractions import Fraction as F

import pytest

from logcave.cli import (
    ParseError,
    canonical_payload,
    format_partition,
    format_weight,
    main,
    parse_partition,
    parse_polynomial,
    parse_sequence,
    parse_shape,
    parse_weight,
)

def test_parse_partition():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("0") == ()
    assert parse_partition("") == ()
    assert parse_partition(" 4, 2 ,2") == (4, 2, 2)
    with pytest.raises(ParseError, match="entry 1"):
        parse_partition("3,x")
    with pytest.raises(ParseError):
        parse_partition("1,2")


def test_parse_weight():
    assert parse_weight("2,1,0@3") == (2, 1, 0)
    assert parse_weight("-1,-2@2") == (-1, -2)
    with pytest.raises(ParseError, match="missing @rank"):
        parse_weight("2,1,0")
    with pytest.raises(ParseError, match="3 entries for rank 2"):
        parse_weight("2,1,0@2")
    with pytest.raises(ParseError, match="entry 1"):
        parse_weight("2,?@2")


def test_partition_weight_round_trip():
    for p in [(), (3, 1), (5, 5, 2)]:
        assert parse_partition(format_partition(p)) == p
    for w in [(2, 1, 0), (-1, -2), (0, 0, 0, 0)]:
        assert parse_weight(format_weight(w)) == w


def test_parse_shape():
    s = parse_shape("3,1/1")
    assert (s.outer, s.inner) == ((3, 1), (1,))
    s = parse_shape("2,2")
    assert (s.outer, s.inner) == ((2, 2), ())


def test_parse_polynomial():
    p = parse_polynomial("x^2*y - 1/2", 2)
    assert p.terms == {(2, 1): F(1), (0, 0): F(-1, 2)}
    p = parse_polynomial("3*x^2*y - 1/2*y", 2)
    assert p.terms == {(2, 1): F(3), (0, 1): F(-1, 2)}
    assert parse_polynomial("1", 2).terms == {(0, 0): F(1)}
    assert parse_polynomial("-x + x", 1).is_zero()
    p = parse_polynomial("x*x*y^2", 2)
    assert p.terms == {(2, 2): F(1)}
    with pytest.raises(ParseError, match="unknown variable"):
        parse_polynomial("x*w", 2)
    with pytest.raises(ParseError):
        parse_polynomial("", 2)


def test_parse_sequence():
    s = parse_sequence("0:1,1:1/2")
    assert s.support == {0: F(1), 1: F(1, 2)}
    s = parse_sequence("-1:2, 3:1")
    assert s.support == {-1: F(2), 3: F(1)}
    with pytest.raises(ParseError, match="bad index"):
        parse_sequence("a:1")
    with pytest.raises(ParseError, match="bad value"):
        parse_sequence("0:x")


def test_cli_schur(capsys):
    assert main(["schur", "--shape", "3,1/1", "--vars", "4", "--basis", "schur"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["terms"] == {"3": "1", "2,1": "1"}


def test_cli_lr(capsys):
    assert main(["lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--rank", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["value"] == "2"


def test_cli_restrict(capsys):
    assert main(["restrict", "--lam", "2,1", "--mu", "0", "--n", "3", "--k", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["value"] == "2"


def test_cli_toeplitz_exit_codes(capsys):
    assert main(["toeplitz", "--seq", "0:1,1:1", "--check", "2x2"]) == 0
    capsys.readouterr()
    assert main(["toeplitz", "--seq", "0:1,2:1", "--check", "schur", "--rank", "2", "--bound", "4"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["failing_weight"] == "1,1"


def test_cli_body(tmp_path):
    out = tmp_path / "body.json"
    code = main(
        ["body", "--dim", "2", "--basis", "1; x; y", "--kmax", "4", "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["volume"] == "1/2"
    assert doc["degree"] == "1"
    assert doc["stable"] is True
    assert ["1", "0"] in doc["hull_vertices"]


def test_cli_error_exit_code(capsys):
    assert main(["lr", "--lam", "1,2", "--mu", "0", "--nu", "0", "--rank", "2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_verify_report_and_csv(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "weyl", "--rank", "3", "--bound", "3", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["violations"] == []
    assert doc["checked"] > 0
    assert doc["manifest"]["output_digest"].startswith("sha256:")
    csv_text = (tmp_path / "report.csv").read_text()
    assert "weyl" in csv_text and str(doc["checked"]) in csv_text


def _payload(doc):
    return canonical_payload(
        doc["subcommand"], doc["params"], doc["checked"], doc["violations"]
    )


def test_verify_reports_identical_across_worker_counts(tmp_path):
    docs = []
    for jobs in ("1", "8"):
        out = tmp_path / f"t{jobs}.json"
        code = main(
            ["verify", "theorem1", "--bound", "4", "--jobs", jobs, "--out", str(out)]
        )
        assert code == 0
        docs.append(json.loads(out.read_text()))
    assert _payload(docs[0]) == _payload(docs[1])
    assert (
        docs[0]["manifest"]["output_digest"] == docs[1]["manifest"]["output_digest"]
    )


def test_manifest_replay_reproduces_reports(tmp_path):
    runs = [
        ["verify", "weyl", "--rank", "2", "--bound", "3"],
        ["verify", "conj1", "--rank", "1", "--bound", "2"],
        ["verify", "convolution", "--bound", "8", "--cases", "20", "--seed", "5"],
    ]
    for i, argv in enumerate(runs):
        first = tmp_path / f"a{i}.json"
        second = tmp_path / f"b{i}.json"
        assert main(argv + ["--out", str(first)]) == 0
        # replay with the parameters recorded in the manifest
        doc = json.loads(first.read_text())
        replay_argv = [a for a in doc["manifest"]["argv"] if not a.endswith(".json")]
        replay_argv = [a for a in replay_argv if a != "--out"]
        assert main(replay_argv + ["--out", str(second)]) == 0
        doc2 = json.loads(second.read_text())
        assert _payload(doc) == _payload(doc2)


def test_cli_usage_error_is_exit_2():
    assert main(["verify", "nonsense"]) == 2
    assert main([]) == 2
