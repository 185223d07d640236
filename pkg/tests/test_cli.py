import csv
import io
import json

import pytest

from singcay.cli import main, parse_cycle_type, parse_partition
from singcay.config import CONFIG


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parsers():
    assert parse_partition("[4,1]") == ((4, 1), "")
    assert parse_cycle_type("(5)+") == ((5,), "+")
    assert parse_partition("[]") == ((), "")


def test_char_text_and_json():
    assert run("--format", "text", "char", "5", "[4,1]", "(3,1,1)") == (0, "1\n")
    code, text = run("--format", "text", "char", "5", "[3,1,1]+", "(5)+")
    assert code == 0 and "sqrt(5)" in text
    code, text = run("--format", "json", "char", "5", "[3,1,1]+", "(5)+")
    obj = json.loads(text)
    assert obj["group"] == "A" and obj["class"] == "(5)+"
    code, text2 = run("char", "5", "[3,1,1]+", "(5)+", "--format", "json")
    assert text2 == text


def test_char_convention_swaps_value():
    _, a = run("--format", "text", "char", "5", "[3,1,1]+", "(5)+", "--convention", "1")
    _, b = run("--format", "text", "char", "5", "[3,1,1]-", "(5)+", "--convention", "-1")
    assert a == b


def test_blocks():
    code, text = run("--format", "json", "blocks", "14", "2")
    obj = json.loads(text)
    assert code == 0 and obj["min_defect_support"] == 4
    _, text = run("--format", "csv", "blocks", "13", "3")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][0] == "n" and rows[1][:2] == ["13", "3"]


def test_tables():
    code, text = run("tables", "--table", "1")
    assert code == 0 and text.splitlines()[0] == "n,t,n-t"
    _, both = run("tables")
    assert "51,9,42" in both


def test_singular():
    code, text = run("--format", "json", "singular", "S", "3", "(2,1)")
    obj = json.loads(text)
    assert code == 0 and obj["singular"] and obj["nullity"] == 4
    _, text = run("--format", "json", "singular", "A", "4", "(2,2)", "--brute")
    obj = json.loads(text)
    assert obj["generates"] is False and obj["brute_force_nullity"] == obj["nullity"]
    _, text = run("--format", "text", "singular", "S", "3", "(2,1)")
    assert "spectrum:" in text and "0^4" in text


def test_vanishing():
    _, text = run("--format", "json", "vanishing", "A", "7")
    assert "(3,2,2)" in json.loads(text)["nonvanishing"]
    _, text = run("--format", "json", "vanishing", "A", "5", "(5)+")
    assert json.loads(text)["status"] == "vanishing"
    _, text = run("--format", "json", "vanishing", "S", "16", "(2,2,1,1,1,1,1,1,1,1,1,1,1,1)")
    assert json.loads(text)["status"] == "unknown"


def test_verify_exit_codes():
    code, text = run("--format", "text", "verify", "nr5", "7..9")
    assert code == 0 and text.count("pass") == 3
    code, text = run("--format", "text", "verify", "mt2", "11")
    assert code == 1 and "fail" in text
    code, text = run("--format", "json", "verify", "ma3", "7")
    assert code == 0 and json.loads(text)["reports"][0]["status"] == "known_exception"


def test_verify_parallel_matches_serial():
    _, a = run("verify", "k9", "4..8")
    _, b = run("--jobs", "2", "verify", "k9", "4..8")
    assert a == b


def test_errors():
    with pytest.raises(SystemExit) as e:
        run("char", "5", "[4,2]", "(5)")
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        run("verify", "nope")
    with pytest.raises(SystemExit):
        run("singular", "X", "3", "(2,1)")
    assert run("--max-n", "5", "singular", "S", "6", "(2,1,1,1,1)")[0] == 3
    assert CONFIG.max_table_n != 5
