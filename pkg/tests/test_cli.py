import io
import json
import subprocess
import sys

import pytest

from cliffrank import RankTable, build_table
from cliffrank.cli import (
    EXIT_BUDGET,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    DocumentError,
    dump_document,
    golden_text,
    main,
    overlay,
    parse_document,
    parse_table_text,
)
from cliffrank.rank_formulas import KINDS


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def cell(text, k, l):
    return parse_table_text(text)[1][(k, l)]


class TestTables:
    def test_cells(self):
        assert cell(run("tables", "--n", "6")[1], 3, 4) == "1/5"
        assert cell(run("tables", "--n", "8", "--kind", "anticommutator")[1], 4, 4) == "0/4/8"
        assert cell(run("tables", "--n", "1")[1], 1, 1) == "-"
        assert cell(run("tables", "--n", "1", "--kind", "anticommutator")[1], 1, 1) == "0"

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("n", range(1, 11))
    def test_golden(self, n, kind):
        code, text = run("tables", "--n", str(n), "--kind", kind)
        assert code == EXIT_OK
        gold = golden_text(n, kind)
        if (kind, n) == ("anticommutator", 7):
            diff = {kl for kl, v in parse_table_text(gold)[1].items() if parse_table_text(text)[1][kl] != v}
            assert diff == {(3, 4)}
        else:
            assert text == gold

    def test_overlay(self):
        assert overlay() == {("anticommutator", 7, 3, 4): ("13/7", "3/7", overlay()[("anticommutator", 7, 3, 4)][2])}

    @pytest.mark.parametrize("kind", KINDS)
    def test_json_roundtrip(self, kind):
        code, text = run("tables", "--n", "9", "--kind", kind, "--format", "json")
        assert code == EXIT_OK
        assert RankTable.from_json(text) == build_table(9, kind)

    def test_both_kinds(self):
        code, text = run("tables", "--n", "3", "--kind", "both", "--format", "json")
        assert [d["kind"] for d in json.loads(text)] == list(KINDS)

    def test_deterministic(self):
        assert run("tables", "--n", "10", "--kind", "both") == run("tables", "--n", "10", "--kind", "both")

    def test_out_of_cap(self):
        assert run("tables", "--n", "40")[0] == EXIT_USAGE


class TestVerify:
    def test_small(self):
        code, text = run("verify", "--n", "6")
        assert code == EXIT_OK
        assert text.splitlines()[-1].startswith("0 mismatches")

    def test_warns_on_known_typo(self):
        code, text = run("verify", "--n", "7", "--kind", "anticommutator")
        assert code == EXIT_OK
        assert any(l.startswith("WARN anticommutator n=7 cell (3,4)") and "'13/7'" in l for l in text.splitlines())

    def test_budget(self):
        assert run("verify", "--n", "6", "--budget", "3")[0] == EXIT_BUDGET

    def test_mismatch_exit(self, monkeypatch):
        from cliffrank import cli

        monkeypatch.setattr(cli, "golden_text", lambda n, kind: build_table(n, kind).to_text().replace("\n1\t2\t", "\n1\t9\t"))
        code, text = run("verify", "--n", "3")
        assert code == EXIT_MISMATCH
        assert "FAIL golden tables" in text


class TestSubalgebras:
    def test_counts(self):
        for n, count in ((4, 6), (10, 12)):
            code, text = run("subalgebras", "--n", str(n))
            entries = [l for l in text.splitlines() if l[:1].isdigit()]
            assert code == EXIT_OK and len(entries) == count
            assert all("closed" in l and "NOT" not in l for l in entries)

    def test_labels(self):
        text = run("subalgebras", "--n", "4")[1]
        assert "5) i u^1 + u^2 + u^3 + i u^4\t" in text
        plain = run("subalgebras", "--n", "4", "--variant", "plain")[1]
        assert "5) u^1 + u^2 + u^3 + u^4\t" in plain

    def test_enumerate(self):
        code, text = run("subalgebras", "--n", "5", "--enumerate", "--pq", "3,2")
        assert code == EXIT_OK
        assert "Cl(3,2)" in text
        assert "n=5: 7 listed, 7 catalogued" in text

    def test_augmented(self):
        text = run("subalgebras", "--n", "3", "--augmented")[1]
        assert "i u^0 + i u^1 + u^2\t[augmented item 3; closed]" in text

    def test_bad_pq(self):
        assert run("subalgebras", "--n", "4", "--pq", "1,1")[0] == EXIT_USAGE
        assert run("subalgebras", "--n", "4", "--pq", "x")[0] == EXIT_USAGE


def doc(p, q, *terms):
    return json.dumps({"signature": [p, q],
                       "terms": [{"indices": i, "re": re, "im": im} for i, re, im in terms]})


class TestCheck:
    @pytest.fixture
    def write(self, tmp_path):
        def _write(text):
            path = tmp_path / "mv.json"
            path.write_text(text)
            return str(path)
        return _write

    def test_group(self, write):
        assert run("check", write(doc(1, 0, ([1], 1, 0))), "--predicate", "group") == (EXIT_OK, "group: true\n")

    def test_lie(self, write):
        assert run("check", write(doc(2, 0, ([1, 2], 1, 0))), "--predicate", "lie") == (EXIT_OK, "lie: true\n")
        assert run("check", write(doc(1, 0, ([1], 1, 0))), "--predicate", "lie") == \
            (EXIT_OK, "lie: false\nresidual: 2e^1\n")

    def test_group_residual(self, write):
        code, text = run("check", write(doc(1, 0, ([], 2, 0))), "--predicate", "group")
        assert text == "group: false\nresidual: 3\n"

    @pytest.mark.parametrize("text,fragment", [
        ('{"signature": [1, 0], "terms": [', "line 1"),
        ('[1, 2]', "object"),
        (doc(2, 0, ([2, 1], 1, 0)), "terms[0].indices"),
        (doc(2, 0, ([3], 1, 0)), "terms[0].indices"),
        (doc(2, 0, ([1], 1, 0), ([1], 2, 0)), "terms[1]: duplicate"),
        ('{"signature": [1, 0], "terms": [{"indices": [1], "re": 0.5}]}', "integers"),
        ('{"signature": [0, 0], "terms": []}', "signature"),
    ])
    def test_parse_errors(self, write, text, fragment, capsys):
        with pytest.raises(DocumentError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
            parse_document(text)
        assert run("check", write(text), "--predicate", "lie")[0] == EXIT_USAGE

    def test_roundtrip(self):
        text = doc(2, 1, ([1, 3], 2, -1), ([], 0, 1))
        x = parse_document(text)
        assert parse_document(json.dumps(dump_document(x))) == x


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cliffrank.cli", "tables", "--n", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "n=2\t1\t2\n1\t2\t1\n2\t1\t-\n"
