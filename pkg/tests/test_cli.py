import json

import pytest

from fernhex.cli import main


def test_count_both_match(capsys):
    code = main(["count", "E:1 x=2,y=0,z=2 a= c= b=", "--method", "both"])
    out = capsys.readouterr().out
    assert code == 0
    assert "count=20" in out
    assert "MATCH" in out


def test_count_enumerate_json_roundtrip(capsys):
    code = main(["count", "E:1 x=2,y=0,z=2 a= c= b=", "--method", "enumerate",
                 "--json"])
    assert code == 0
    records = json.loads(capsys.readouterr().out)
    assert records[0]["count"] == "20"
    assert json.loads(json.dumps(records)) == records


def test_count_parse_error_exit_2(capsys):
    assert main(["count", "E:1 x=1,y=0,z=2 a= c= b="]) == 2
    assert main(["count", "gibberish"]) == 2


def test_count_resource_limit_exit_3(capsys):
    code = main(["count", "E:1 x=2,y=2,z=4 a=1,2 c=3,2 b=2,1,1",
                 "--method", "enumerate", "--limit-states", "3"])
    assert code == 3


def test_count_svg_dump(tmp_path, capsys):
    target = tmp_path / "region.svg"
    code = main(["count", "E:1 x=2,y=0,z=2 a= c= b=", "--method", "enumerate",
                 "--svg", str(target)])
    assert code == 0
    assert target.read_text().startswith("<svg")


def test_recur_list(capsys):
    assert main(["recur", "--list"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    assert len(lines) == 66


def test_recur_unknown_id(capsys):
    assert main(["recur", "nope", "E:1 x=2,y=2,z=2 a=1,1 c=1,1 b=1,1"]) == 2


def test_recur_small_instance(capsys):
    code = main(["recur", "E1-le", "E:1 x=2,y=2,z=2 a=1,1 c=1,1 b=1,1", "--json"])
    assert code == 0
    record = json.loads(capsys.readouterr().out)
    assert record["equal"] is True
    assert len(record["terms"]) == 6


def test_verify_tiny_grid(capsys):
    code = main(["verify", "--families", "E", "--max-x", "2", "--max-z", "2",
                 "--per-row", "2", "--max-cells", "420", "--json"])
    out = capsys.readouterr().out
    assert code == 0
    records = json.loads(out)
    assert all(r["status"] in ("MATCH",) or r["status"].startswith("SKIP")
               for r in records)


def test_sweep_csv_output(capsys):
    code = main(["sweep", "--families", "E", "--max-x", "2", "--max-z", "2",
                 "--per-row", "1", "--max-cells", "420", "--csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0].startswith("enumerate,formula")
