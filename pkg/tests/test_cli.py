import json

import pytest
import yaml

from localh.main import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def records(out):
    return [json.loads(line) for line in out.splitlines() if line]


def test_xi_exceptional(capsys):
    code, out, _ = run(capsys, "xi", "--type", "E8")
    assert code == 0
    assert records(out) == [{"type": "E8", "rank": 8, "xi": ["0", "44", "484", "784", "120"]}]


def test_xi_and_local_h_type_a(capsys):
    code, out, _ = run(capsys, "xi", "--type", "A", "--rank", "4")
    assert code == 0
    assert records(out)[0]["xi"] == ["0", "1", "2"]
    code, out, _ = run(capsys, "local-h", "--type", "A", "--rank", "4")
    assert code == 0
    assert records(out)[0]["coeffs"] == ["0", "1", "4", "1", "0"]


def test_invalid_rank_is_usage_error(capsys):
    code, out, err = run(capsys, "xi", "--type", "A", "--rank", "0")
    assert code == 2
    assert out == ""
    assert "rank >= 1" in err


def test_missing_type_is_usage_error(capsys):
    code, _, err = run(capsys, "certify", "--ranks", "2..4")
    assert code == 2
    assert "type" in err


def test_certify_type_a_range(capsys):
    code, out, _ = run(capsys, "certify", "--type", "A", "--ranks", "2..8")
    assert code == 0
    rows = records(out)
    assert [row["rank"] for row in rows] == list(range(2, 9))
    for row in rows:
        assert row["real_rooted"]
        assert row["runtime_ms"] is None
        assert len(row["coeffs"]) == row["rank"] + 1
        assert row["counts"]["at_0"] == 1
        assert "intervals" not in row


def test_certify_f4(capsys):
    code, out, _ = run(capsys, "certify", "--type", "F4", "--show-roots", "--timings")
    assert code == 0
    (row,) = records(out)
    assert row["coeffs"] == ["0", "10", "29", "10", "0"]
    assert row["distinct_roots"] == 3
    assert row["counts"] == {"neg_inf_to_m1": 1, "m1_to_0": 1, "at_0": 1, "at_m1": 0}
    assert isinstance(row["runtime_ms"], int)
    assert len(row["intervals"]) == 3


def test_certify_degenerate_d2(capsys):
    code, out, _ = run(capsys, "certify", "--type", "D", "--ranks", "2..2")
    assert code == 0
    (row,) = records(out)
    assert row["degenerate"]
    assert row["real_rooted"]
    assert row["counts"] is None
    assert row["coeffs"] == ["0", "0", "0"]


def test_certify_dihedral_needs_param(capsys):
    code, _, _ = run(capsys, "certify", "--type", "I2")
    assert code == 2
    code, out, _ = run(capsys, "certify", "--type", "I2", "--param", "5", "--param", "3")
    assert code == 0
    assert [row["param"] for row in records(out)] == [3, 5]


def test_certify_all_sorted(capsys):
    code, out, _ = run(capsys, "certify", "--type", "all", "--ranks", "1..3")
    assert code == 0
    labels = [(row["type"], row["rank"]) for row in records(out)]
    assert labels[:5] == [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3)]
    assert ("E8", 8) in labels
    assert len(labels) == len(set(labels))


def test_ms_test_named_sequence(capsys):
    code, out, _ = run(capsys, "ms-test", "--seq", "reciprocal-factorial", "--depth", "6")
    assert code == 0
    rows = records(out)
    assert len(rows) == 7
    assert rows[-1] == {
        "sequence": "reciprocal-factorial",
        "max_n": 6,
        "partial": True,
        "first_failure": None,
        "passed": True,
    }


def test_ms_test_parametrised_sequence(capsys):
    code, out, _ = run(
        capsys, "ms-test", "--seq", "binomial-reciprocal", "--param", "4", "--depth", "8"
    )
    assert code == 0
    assert records(out)[-1]["sequence"] == "binomial-reciprocal(4)"


def test_ms_test_explicit_failure(capsys):
    code, out, _ = run(capsys, "ms-test", "--explicit", "1,0,1", "--depth", "3")
    assert code == 1
    rows = records(out)
    assert rows[1]["n"] == 2
    assert not rows[1]["real_rooted"]
    assert rows[-1]["first_failure"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("ms-test", "--seq", "no-such-sequence"),
        ("ms-test",),
        ("ms-test", "--seq", "reciprocal-factorial", "--depth", "0"),
        ("ms-test", "--explicit", "1,x"),
    ],
)
def test_ms_test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("localh:")


def test_chebyshev_order(capsys):
    code, out, _ = run(capsys, "chebyshev", "--n", "10")
    assert code == 0
    rows = records(out)
    assert [row["check"] for row in rows] == [
        "recurrence_closed_form",
        "reciprocal_substitution",
        "reindex",
        "h_poly_certificate",
        "oracle_agreement",
    ]
    assert all(row["passed"] for row in rows)
    assert [m["k"] for m in rows[-1]["matches"]] == [1, 2, 3, 4, 5]


def test_chebyshev_order_zero(capsys):
    code, out, _ = run(capsys, "chebyshev", "--n", "0")
    assert code == 0
    rows = records(out)
    assert len(rows) == 4
    assert all(row["passed"] for row in rows)


def test_chebyshev_small_orders(capsys):
    code, out, _ = run(capsys, "chebyshev", "--ranks", "0..1")
    assert code == 0
    rows = records(out)
    assert len(rows) == 8
    assert all(row["check"] != "reindex" for row in rows)
    assert rows[3]["matches"] == []


def test_chebyshev_show_roots(capsys):
    code, out, _ = run(capsys, "chebyshev", "--n", "4", "--show-roots")
    assert code == 0
    certificate = records(out)[3]
    assert certificate["distinct_roots"] == 2
    assert [i["multiplicity"] for i in certificate["intervals"]] == [1, 1]


def test_chebyshev_single_oracle_value(capsys):
    code, out, _ = run(capsys, "chebyshev", "--n", "4", "--k", "1")
    assert code == 0
    (row,) = records(out)
    assert row["check"] == "oracle_value"
    assert row["value"].startswith("-0.381966011250105")


@pytest.mark.parametrize(
    "argv",
    [
        ("chebyshev", "--n", "4", "--k", "3"),
        ("chebyshev", "--n", "-1"),
        ("chebyshev",),
        ("chebyshev", "--n", "4", "--precision-bits", "32"),
    ],
)
def test_chebyshev_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_narayana_check(capsys):
    code, out, _ = run(capsys, "narayana-check", "--ranks", "2..9")
    assert code == 0
    rows = records(out)
    assert [row["n"] for row in rows] == list(range(2, 10))
    assert all(row["passed"] for row in rows)


def test_transfer_check_types(capsys):
    code, out, _ = run(capsys, "transfer-check", "--type", "A", "--type", "B", "--ranks", "3..6")
    assert code == 0
    rows = records(out)
    assert len(rows) == 8
    assert all(row["passed"] and row["agreement"] for row in rows)


def test_transfer_check_degenerate_is_skipped(capsys):
    code, out, _ = run(capsys, "transfer-check", "--type", "D", "--ranks", "2..2")
    assert code == 0
    assert records(out)[0]["skipped"]


def test_transfer_check_explicit_vector(capsys):
    code, out, _ = run(capsys, "transfer-check", "--xi", "0,1,2", "--n", "4")
    assert code == 0
    (row,) = records(out)
    assert row["counts"] == {"neg_inf_to_m1": 1, "m1_to_0": 1, "at_0": 1, "at_m1": 0}
    assert row["locations_match"]
    code, out, _ = run(capsys, "transfer-check", "--xi", "0,1,1,1", "--n", "6")
    (row,) = records(out)
    assert row["agreement"]
    assert not row["xi_real_rooted"]
    assert row["locations_match"] is None


def test_transfer_check_bad_vector(capsys):
    code, _, _ = run(capsys, "transfer-check", "--xi", "0,1", "--n", "4")
    assert code == 2
    code, _, _ = run(capsys, "transfer-check", "--xi", "0,1,2")
    assert code == 2


def test_csv_format(capsys):
    code, out, _ = run(capsys, "certify", "--type", "A", "--ranks", "2..3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("type,rank,coeffs,real_rooted,distinct_roots,counts.neg_inf_to_m1")
    assert lines[2].startswith("A,3,0;1;1;0,True,")


def test_pretty_format(capsys):
    code, out, _ = run(capsys, "certify", "--type", "E6", "--format", "pretty")
    assert code == 0
    assert "real_rooted" in out
    assert "PASS" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "records.jsonl"
    code, out, _ = run(capsys, "xi", "--type", "H3", "--out", str(target))
    assert code == 0
    assert out == ""
    assert records(target.read_text(encoding="utf-8"))[0]["type"] == "H3"


def test_yaml_config_is_merged_under_flags(capsys, tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text(
        yaml.safe_dump({"types": ["B"], "ranks": [2, 4], "format": "csv"}), encoding="utf-8"
    )
    code, out, _ = run(capsys, "certify", "--config", str(config), "--format", "json-lines")
    assert code == 0
    assert [row["rank"] for row in records(out)] == [2, 3, 4]


def test_yaml_config_errors(capsys, tmp_path):
    config = tmp_path / "bad.yaml"
    config.write_text("- just\n- a list\n", encoding="utf-8")
    code, _, _ = run(capsys, "xi", "--config", str(config))
    assert code == 2
    config.write_text("no_such_field: 1\n", encoding="utf-8")
    code, _, _ = run(capsys, "xi", "--config", str(config))
    assert code == 2


def test_log_file_written(capsys, localh_home):
    code, _, _ = run(capsys, "xi", "--type", "G2")
    assert code == 0
    logs = list((localh_home / "log").glob("log_*.log"))
    assert logs
    assert "FINISHED xi" in logs[0].read_text(encoding="utf-8")


def test_output_independent_of_worker_count(capsys):
    argv = ("certify", "--type", "A", "--type", "D", "--ranks", "2..12", "--show-roots")
    code, serial, _ = run(capsys, *argv, "--workers", "1")
    assert code == 0
    code, parallel, _ = run(capsys, *argv, "--workers", "2")
    assert code == 0
    assert serial == parallel


def test_unknown_command_exits():
    with pytest.raises(SystemExit):
        main(["bogus"])


@pytest.mark.parametrize("xi", ["1,0", "0,0"])
def test_transfer_check_rejects_unsupported_vectors(capsys, xi):
    code, out, err = run(capsys, "transfer-check", "--xi", xi, "--n", "2")
    assert code == 2
    assert out == ""
    assert err.startswith("localh:")


def test_unwritable_output_path(capsys, tmp_path):
    target = tmp_path / "missing" / "records.jsonl"
    code, out, err = run(capsys, "certify", "--type", "A", "--ranks", "2..3", "--out", str(target))
    assert code == 2
    assert out == ""
    assert "out" in err
    assert not target.exists()


def test_rank_is_validated_for_exceptional_types(capsys):
    code, _, err = run(capsys, "xi", "--type", "E6", "--rank", "7")
    assert code == 2
    assert "rank == 6" in err
    code, out, _ = run(capsys, "xi", "--type", "E6", "--rank", "6")
    assert code == 0
    assert records(out)[0]["type"] == "E6"
    code, _, _ = run(capsys, "xi", "--type", "G2", "--rank", "3")
    assert code == 2
