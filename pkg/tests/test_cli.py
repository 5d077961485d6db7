import pytest

from bidicpp.cli import main
from bidicpp.debruijn import canonical_spectrum


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def acggt(tmp_path, capsys):
    fa = tmp_path / "r.fa"
    fa.write_text(">r1\nACGGT\n")
    prefix = tmp_path / "g"
    code, out, _ = run(["build", "--fasta", fa, "-k", 3, "--out", prefix], capsys)
    assert code == 0 and out == "|V|=3\t|E|=2\n"
    return tmp_path / "g.edges"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_build_bounds_and_errors(tmp_path, capsys):
    empty = write(tmp_path, "e.fa", "")
    assert run(["build", "--fasta", empty, "-k", 3, "--out", tmp_path / "e"], capsys)[:2] == \
        (0, "|V|=0\t|E|=0\n")
    assert run(["build", "--fasta", empty, "-k", 1, "--out", tmp_path / "x"], capsys)[0] == 3
    assert run(["build", "--fasta", tmp_path / "missing", "-k", 3, "--out", tmp_path / "x"],
               capsys)[0] == 2
    bad = write(tmp_path, "bad.fa", "ACGT\n>r\nA\n")
    assert run(["build", "--fasta", bad, "-k", 3, "--out", tmp_path / "x"], capsys)[0] == 4


def test_malformed_graph_exit_4(tmp_path, capsys):
    g = write(tmp_path, "bad.edges", "1 2 >\n")
    assert run(["stats", "--graph", g], capsys)[0] == 4


def test_stats_path(tmp_path, capsys):
    g = write(tmp_path, "p.edges", "1 2 > >\n2 3 > >\n")
    code, out, _ = run(["stats", "--graph", g], capsys)
    assert code == 0
    assert out.splitlines()[1].split("\t")[-2:] == ["1", "33.333"]


def test_compare_matching_eulerian(tmp_path, capsys):
    g = write(tmp_path, "t.edges", "1 2 > >\n2 3 > >\n3 1 > >\n")
    code, out, _ = run(["compare-matching", "--graph", g], capsys)
    assert out.splitlines()[1].split("\t")[3:] == ["0", "0", "0", "0", "0", "1.0000"]


def test_cpp_reports(tmp_path, capsys):
    tri = write(tmp_path, "t.edges", "1 2 > >\n2 3 > >\n3 1 > >\n")
    code, out, _ = run(["cpp", "--graph", tri], capsys)
    assert code == 0
    assert out.splitlines()[:2] == ["kind\tCYCLIC_CP_WALK", "base=3 matching=0 total=3"]
    one = write(tmp_path, "one.edges", "1 2 > >\n")
    code, out, err = run(["cpp", "--graph", one], capsys)
    assert code == 5 and "NO_CYCLIC_CP_WALK" in err
    split = write(tmp_path, "two.edges", "1 1 > >\n2 2 > >\n")
    assert run(["cpp", "--graph", split], capsys)[0] == 6
    code, out, _ = run(["contigs", "--graph", split], capsys)
    assert code == 0 and out.count("walk ") == 2


def test_contigs_spell_the_read(acggt, capsys):
    code, out, _ = run(["contigs", "--graph", acggt], capsys)
    assert code == 0
    fasta = out[out.index("\n>") + 1:].splitlines()
    assert fasta[0].startswith(">contig_1")
    assert canonical_spectrum(fasta[1], 4) == canonical_spectrum("ACGGT", 4)


def test_shortest_command(tmp_path, capsys):
    g = write(tmp_path, "s.edges", "1 2 > >\n2 3 < >\n")
    code, out, err = run(["shortest", "--graph", g, "--source", 1, "--oracle"], capsys)
    assert out == "1\t0\n2\t1\n3\tINF\n" and "OK" in err
    code, out, _ = run(["shortest", "--graph", g, "--source", 2, "--target", 1, "--terminal"], capsys)
    assert out == "1\tINF\n"
    assert run(["shortest", "--graph", g, "--source", 9], capsys)[0] == 4


def test_out_flag_writes_file(tmp_path, capsys):
    g = write(tmp_path, "p.edges", "1 2 > >\n2 3 > >\n")
    dest = tmp_path / "o.tsv"
    code, out, _ = run(["stats", "--graph", g, "--out", dest], capsys)
    assert out == "" and dest.read_text().startswith("reads\tk")
