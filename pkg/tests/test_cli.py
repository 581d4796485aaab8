import json
import shutil
from importlib import resources

import pytest

from a5fano import cli


@pytest.fixture(scope="module")
def burkhardt_report():
    return cli.run_suite("burkhardt")


def test_catalog_is_complete_and_ordered():
    names = [name for name, _, _ in cli.CATALOG]
    assert names == [
        "burkhardt/orbits", "burkhardt/nodes", "burkhardt/incidence",
        "burkhardt/meet-rule", "burkhardt/gram-rank", "burkhardt/invariant-ranks",
        "barth/orbits", "barth/invariance", "barth/nodes", "barth/restrictions",
        "barth/plane-classification", "barth/surfaces", "barth/table1",
        "barth/table2", "barth/invariant-rank", "barth/rationality",
    ]


def test_list_checks_output(capsys):
    assert cli.main(["list-checks"]) == 0
    out = capsys.readouterr().out
    for name, _, _ in cli.CATALOG:
        assert name in out
    # stable across runs
    cli.main(["list-checks"])
    assert capsys.readouterr().out == out


def test_verify_single_check_exit_zero(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code = cli.main([
        "verify", "burkhardt", "--check", "gram-rank",
        "--format", "json", "--out", str(out_file),
    ])
    assert code == 0
    report = json.loads(out_file.read_text())
    assert report["suite"] == "burkhardt"
    assert report["summary"] == {"pass": 1, "fail": 0, "skipped": 0}
    (chk,) = report["checks"]
    assert chk["name"] == "burkhardt/gram-rank"
    assert "full 16" in chk["actual"]
    assert chk["status"] == "pass"


def test_verify_barth_table2_json(capsys):
    code = cli.main(["verify", "barth", "--check", "table2", "--format", "json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    (chk,) = report["checks"]
    assert chk["name"] == "barth/table2"
    assert "400/400 entries" in chk["actual"]
    assert "rank 14" in chk["actual"]


def test_full_burkhardt_suite_passes(burkhardt_report):
    assert burkhardt_report["summary"]["fail"] == 0
    assert burkhardt_report["summary"]["pass"] == 6
    assert [c["name"] for c in burkhardt_report["checks"]] == \
        [n for n, _, _ in cli.CATALOG if n.startswith("burkhardt/")]


def test_reports_are_deterministic_except_millis(burkhardt_report):
    again = cli.run_suite("burkhardt")

    def strip(report):
        return [
            {k: v for k, v in chk.items() if k != "millis"}
            for chk in report["checks"]
        ]

    assert strip(again) == strip(burkhardt_report)
    assert again["summary"] == burkhardt_report["summary"]


def test_jobs_do_not_change_results(burkhardt_report):
    parallel = cli.run_suite("burkhardt", jobs=4)
    for a, b in zip(burkhardt_report["checks"], parallel["checks"]):
        assert a["name"] == b["name"]
        assert a["status"] == b["status"]
        assert a["expected"] == b["expected"]
        assert a["actual"] == b["actual"]


def test_corrupted_fixture_fails_with_coordinates(tmp_path, capsys):
    src = resources.files("a5fano.fixtures")
    for name in ("xi_planes.json", "theta_planes.json",
                 "table1_words.json", "table2.json"):
        shutil.copy(str(src.joinpath(name)), tmp_path / name)
    data = json.loads((tmp_path / "table2.json").read_text())
    assert data["rows"][0][1] == 1
    data["rows"][0][1], data["rows"][1][0] = 0, 0
    (tmp_path / "table2.json").write_text(json.dumps(data))
    code = cli.main([
        "verify", "barth", "--check", "table2",
        "--fixtures", str(tmp_path), "--format", "json",
    ])
    assert code == 1
    report = json.loads(capsys.readouterr().out)
    (chk,) = report["checks"]
    assert chk["status"] == "fail"
    assert "(1,1,1)" in chk["actual"] and "(1,1,-1)" in chk["actual"]


def test_missing_fixture_reported_as_failure(tmp_path, capsys):
    code = cli.main([
        "verify", "barth", "--check", "table1",
        "--fixtures", str(tmp_path), "--format", "json",
    ])
    assert code == 1
    report = json.loads(capsys.readouterr().out)
    assert report["checks"][0]["status"] == "fail"
    assert "error" in report["checks"][0]["actual"]


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense"])
    assert exc.value.code == 2
    assert cli.main(["verify", "barth", "--check", "no-such-check"]) == 2


def test_text_format_mentions_every_check(burkhardt_report):
    text = cli.format_text(burkhardt_report)
    for name in (n for n, _, _ in cli.CATALOG if n.startswith("burkhardt/")):
        assert name in text
    assert "pass 6, fail 0" in text


def test_every_catalog_entry_is_selected_by_verify_all():
    names = cli.checks_for_suite("all")
    assert names == [n for n, _, _ in cli.CATALOG]
    assert cli.checks_for_suite("barth") == [n for n, _, _ in cli.CATALOG
                                             if n.startswith("barth/")]
