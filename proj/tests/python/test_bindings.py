from fractions import Fraction

import pytest

import deltaforge as df


def test_corpus_and_registry():
    ids = df.corpus_ids()
    assert "frakA" in ids and "B3" in ids
    names = df.identity_names()
    assert "delta-leibniz-right" in names and "anti-right-commutative" in names


def test_check_and_witness(corpus_dir):
    b = df.load_algebra(str(corpus_dir / "B2_1.json"))
    r = df.check(b, "delta-leibniz-right", Fraction(1))
    assert r["pass"] is False
    assert r["witness"] == [2, 2, 1]
    assert df.check(df.corpus_algebra("B3"), "delta_leibniz_right", "1")["pass"] is True


def test_passing_sets():
    assert df.passing_deltas(df.corpus_algebra("A3"), "delta-leibniz-right")["passing"] == "all"
    assert df.passing_deltas(df.corpus_algebra("B3"), "delta-leibniz-right")["passing"] == ["1"]


def test_analyze_seven_dim():
    for name, anti in (("frakA", True), ("frakB", False)):
        a = df.corpus_algebra(name)
        rep = df.analyze(a)
        assert rep["nilpotency_index"] == 4
        assert rep["series"]["lower_central"]["dims"] == [7, 4, 1, 0]
        assert rep["fingerprint"]["anticommutative"] is anti


def test_round_trip(corpus_dir):
    for f in sorted(corpus_dir.glob("*.json")):
        text = f.read_text()
        a = df.parse_algebra(text)
        if not a.has_second:
            assert a.serialize() == text
        assert df.parse_algebra(a.to_json()) == a


def test_parametric_instance():
    g = df.corpus_algebra("g3(alpha)", ["1/2"])
    assert g.dim == 3
    with pytest.raises(KeyError):
        df.corpus_algebra("no-such-entry")


def test_implications():
    r = df.implies(["anticommutative", "delta-lie"], "antiassociative")
    assert r["holds"] and r["verified"]
    assert r["certificate"]["excluded_deltas"] == ["1"]
    assert df.implies(["delta-lie"], "two-step-nilpotent", delta="1")["holds"] is False


def test_parse_errors():
    with pytest.raises(ValueError):
        df.parse_algebra('{"dim": 2, "products": [{"left": 3, "right": 1, "result": []}]}')
    with pytest.raises(KeyError):
        df.check(df.corpus_algebra("A3"), "no-such-identity")


def test_mutation():
    m = df.mutate_commutator(df.corpus_algebra("g1"), "2")
    assert m.dim == 3


def test_suite_filters():
    rep = df.verify(table="cldn")
    assert rep["summary"]["fail"] == 0
    assert sum(r["check"] == "membership/cldn" for r in rep["records"]) == 9
    ent = df.verify(entry="B3")
    assert any("passing set {1}" in r["detail"] for r in ent["records"])
