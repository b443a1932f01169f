import json
import subprocess
import sys

import pytest

from cdgraph.cli import main


def test_analyze_agl(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code = main(["analyze", "--group", "AGammaL(1,8)", "--prime", "2",
                 "--json", str(out_json), "--dot", str(tmp_path / "dot")])
    assert code == 0
    text = capsys.readouterr().out
    assert "complete" in text and "holds" in text
    data = json.loads(out_json.read_text())
    assert data["entries"][0]["cs_p"] == [1, 24, 28]
    dots = sorted(p.name for p in (tmp_path / "dot").iterdir())
    assert dots == ["AGammaL_1_8_p2_delta.dot", "AGammaL_1_8_p2_gamma.dot"]


def test_analyze_default_primes(capsys):
    assert main(["analyze", "--group", "Sym(3)"]) == 0
    assert capsys.readouterr().out.count("|G|=6") == 3


def test_conjecture_alt5(capsys):
    assert main(["conjecture", "--group", "Alt(5)", "--prime", "2"]) == 0
    assert capsys.readouterr().out.startswith("0 findings (3 class pairs, coprime: 0")


def test_group_too_large(capsys):
    assert main(["analyze", "--group", "Sym(9)"]) == 2
    assert "group too large" in capsys.readouterr().err


def test_cap_flag(capsys):
    assert main(["analyze", "--group", "Sym(5)", "--prime", "2", "--cap", "50"]) == 2


def test_bad_spec_and_prime(capsys):
    assert main(["analyze", "--group", "Nope(3)"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--group", "Sym(3)", "--prime", "6"])
    assert info.value.code == 2


def test_graph_command(tmp_path, capsys):
    assert main(["graph", "--group", "Sym(4)", "--prime", "3", "--dot", str(tmp_path)]) == 0
    gamma = (tmp_path / "Sym_4_p3_gamma.dot").read_text()
    assert "3 -- 6;" in gamma


def test_scan_corpus_file(tmp_path, capsys):
    corpus = tmp_path / "c.txt"
    corpus.write_text("Sym(3) | 2,3\nFrob(20)\n")
    out = tmp_path / "scan.json"
    assert main(["scan", "--corpus", str(corpus), "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["tool_version"] and len(data["entries"]) == 5
    assert data["summary"]["failed"] == 0


def test_scan_bad_corpus(tmp_path, capsys):
    corpus = tmp_path / "c.txt"
    corpus.write_text("Sym(4) | 6\n")
    assert main(["scan", "--corpus", str(corpus)]) == 2
    assert "6 is not prime" in capsys.readouterr().err


def test_scan_entry_error_exit_code(tmp_path, capsys):
    corpus = tmp_path / "c.txt"
    corpus.write_text("Sym(9)\n")
    assert main(["scan", "--corpus", str(corpus)]) == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cdgraph", "conjecture", "--group", "Sym(3) x Cyc(5)", "--prime", "5"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "coprime: 1" in proc.stdout
