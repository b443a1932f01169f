import io
import math

import pytest

from cdgraph.constructors import (
    Constructor,
    DirectProduct,
    ExplicitGenerators,
    SpecError,
    build,
    gf2_mul,
    parse_spec,
)
from cdgraph.corpus import CorpusError, default_corpus, parse_corpus, parse_corpus_text
from cdgraph.perm import CycleParseError, GroupTooLarge, class_size_set


def test_parse_spec_forms():
    assert parse_spec("Sym(4)") == Constructor("Sym", (4,))
    assert parse_spec(" SL(2, 5) ") == Constructor("SL", (2, 5))
    assert parse_spec("Perm[3]: (1 2); (1 2 3)") == ExplicitGenerators(3, ("(1 2)", "(1 2 3)"))
    prod = parse_spec("Sym(3) x Cyc(5)")
    assert prod == DirectProduct((Constructor("Sym", (3,)), Constructor("Cyc", (5,))))
    assert str(prod) == "Sym(3) x Cyc(5)"


@pytest.mark.parametrize("bad", ["", "Sym", "Sym(3", "x Sym(3)", "Perm[3]: (1 4)"])
def test_parse_spec_errors(bad):
    with pytest.raises((SpecError, CycleParseError)):
        parse_spec(bad)


def test_gf8_arithmetic():
    mod = 0b1011  # t^3 + t + 1
    t = 0b010
    assert gf2_mul(t, 0b100, mod, 3) == 0b011  # t^3 = t + 1
    powers = set()
    x = 1
    for _ in range(7):
        powers.add(x)
        x = gf2_mul(x, t, mod, 3)
    assert x == 1 and powers == set(range(1, 8))  # t is primitive


def test_agammal_18():
    g = build("AGammaL(1,8)")
    assert g.order == 168 and g.degree == 8
    assert class_size_set(g) == (1, 7, 24, 28)
    # generators: x+1, t*x, x^2 on bit-encoded field elements
    assert [s.images for s in g.generators] == [
        (1, 0, 3, 2, 5, 4, 7, 6),
        (0, 2, 4, 6, 3, 1, 7, 5),
        (0, 1, 4, 5, 6, 7, 2, 3),
    ]


@pytest.mark.parametrize(
    "spec,order",
    [
        ("Sym(1)", 1), ("Sym(2)", 2), ("Sym(5)", 120), ("Alt(3)", 3), ("Alt(4)", 12),
        ("Alt(6)", 360), ("Alt(7)", 2520), ("Cyc(1)", 1), ("Cyc(12)", 12), ("Dih(7)", 14),
        ("Frob(20)", 20), ("Frob(42)", 42), ("SL(2,3)", 24), ("SL(2,4)", 60), ("SL(2,5)", 120),
        ("AGammaL(1,4)", 24), ("Perm[3]: (1 2); (1 2 3)", 6), ("Perm[2]: ", 1),
    ],
)
def test_constructor_orders(spec, order):
    assert build(spec).order == order


def test_direct_product():
    g = build("Sym(3) x Cyc(5)")
    assert g.order == 30 and g.degree == 8
    assert class_size_set(g) == (1, 2, 3)
    assert g.label == "Sym(3) x Cyc(5)"


def test_direct_product_class_sizes(corpus_groups):
    parts = {
        "Sym(3) x Cyc(5)": ("Sym(3)", "Cyc(5)"),
        "Sym(4) x Cyc(3)": ("Sym(4)", "Cyc(3)"),
        "Dih(5) x Cyc(4)": ("Dih(5)", "Cyc(4)"),
        "Alt(4) x Dih(4)": ("Alt(4)", "Dih(4)"),
    }
    for spec, (a, b) in parts.items():
        g = build(spec)
        assert g.order <= 2000
        want = {x * y for x in class_size_set(build(a)) for y in class_size_set(build(b))}
        assert set(class_size_set(g)) == want


def test_build_is_deterministic():
    a, b = build("SL(2,5)"), build("SL(2,5)")
    assert a.generators == b.generators and a.label == b.label


def test_build_errors():
    with pytest.raises(SpecError, match="unknown"):
        build("Foo(3)")
    with pytest.raises(SpecError):
        build("Dih(2)")
    with pytest.raises(SpecError):
        build("SL(3,2)")
    with pytest.raises(SpecError):
        build("Frob(21)")
    with pytest.raises(SpecError):
        build("Sym(3,4)")
    with pytest.raises(GroupTooLarge):
        build("Sym(9)")
    with pytest.raises(GroupTooLarge):
        build("Sym(6) x Sym(6)", cap=1000)
    with pytest.raises(GroupTooLarge):
        build("Sym(7)", cap=5039)
    assert build("Sym(7)", cap=5040).order == 5040
    with pytest.raises(GroupTooLarge):
        build("Perm[7]: (1 2); (1 2 3 4 5 6 7)", cap=100)

def test_sym8_within_default_cap():
    assert math.factorial(8) <= 200_000 < math.factorial(9)


def test_parse_corpus():
    entries = parse_corpus_text("# c\n\nSym(4) | 2,3\nAGammaL(1,8)  # golden\n")
    assert [str(e.spec) for e in entries] == ["Sym(4)", "AGammaL(1,8)"]
    assert entries[0].primes == (2, 3) and entries[0].line == 3
    assert entries[1].primes is None and entries[1].line == 4


def test_parse_corpus_errors():
    with pytest.raises(CorpusError, match="line 2: 6 is not prime"):
        parse_corpus(io.StringIO("Sym(3)\nSym(4) | 6\n"))
    with pytest.raises(CorpusError, match="line 1"):
        parse_corpus(io.StringIO("Sym(4 | 2\n"))


def test_parse_corpus_from_path(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("Cyc(6) | 2, 3\n")
    assert parse_corpus(path)[0].primes == (2, 3)


def test_default_corpus_contents(monkeypatch, tmp_path):
    specs = [str(e.spec) for e in default_corpus()]
    want = (
        [f"Sym({n})" for n in range(3, 7)] + [f"Alt({n})" for n in range(4, 7)]
        + [f"Cyc({n})" for n in range(2, 13)] + [f"Dih({n})" for n in range(3, 11)]
        + ["SL(2,3)", "SL(2,5)", "Frob(20)", "AGammaL(1,8)",
           "Sym(3) x Cyc(5)", "Sym(4) x Cyc(3)", "Dih(5) x Cyc(4)"]
    )
    assert specs == want
    alt = tmp_path / "alt.txt"
    alt.write_text("Cyc(3)\n")
    monkeypatch.setenv("CDGRAPH_CORPUS", str(alt))
    assert [str(e.spec) for e in default_corpus()] == ["Cyc(3)"]
