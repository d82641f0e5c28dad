"""Runs the CLI binary and validates every JSON output against the shipped schemas."""

import json
import subprocess

import jsonschema
import pytest


def run(cli_path, *args):
    p = subprocess.run([cli_path, *map(str, args)], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def schema(schema_dir, name):
    return json.loads((schema_dir / f"{name}.schema.json").read_text())


def validate(doc, s):
    jsonschema.Draft202012Validator(s).validate(doc)


def test_corpus_files_match_schema(corpus_dir, schema_dir):
    alg, di = schema(schema_dir, "algebra"), schema(schema_dir, "dialgebra")
    files = sorted(corpus_dir.glob("*.json"))
    assert len(files) >= 80
    for f in files:
        doc = json.loads(f.read_text())
        validate(doc, di if "left_products" in doc else alg)


def test_relation_fixtures_match_schema(schema_dir, corpus_dir):
    s = schema(schema_dir, "relations")
    for f in (corpus_dir.parent / "tests" / "data").glob("*relations.json"):
        validate(json.loads(f.read_text()), s)


@pytest.mark.parametrize(
    "args, schema_name, code",
    [
        (["check", "{c}/A3.json", "--identity", "delta-leibniz-right", "--all-delta"], "check", 0),
        (["check", "{c}/zero.json", "--identity", "jacobi"], "check", 0),
        (["check", "{c}/B2_1.json", "--identity", "delta-leibniz-right", "--delta", "1"], "check", 1),
        (["analyze", "{c}/frakA.json"], "analysis", 0),
        (["analyze", "{c}/zero2.json"], "analysis", 0),
        (["mutate", "{c}/g1.json", "--delta", "2"], "algebra", 0),
        (["mutate", "{c}/di_g1.json", "--kind", "bracket", "--delta", "2"], "algebra", 0),
        (["implies", "--hyp", "anticommutative", "--hyp", "delta-lie", "--conclusion", "antiassociative",
          "--degree", "3", "--field", "delta"], "implication", 0),
        (["implies", "--hyp", "delta-leibniz-right", "--conclusion", "antiassociative"], "implication", 1),
        (["dual", "--variety", "delta-leibniz"], "dual", 0),
        (["dual", "--variety", "aar"], "dual", 0),
        (["dual", "--variety", "free"], "dual", 0),
        (["free-aar", "--generators", "2", "--word", "(xy)x", "--table"], "free_aar", 0),
        (["extend", "{c}/frakA_quotient.json", "--identity", "antiassociative", "--identity",
          "anti-right-commutative", "--scan"], "extend", 0),
        (["extend", "{c}/zero1.json", "--identity", "delta-leibniz-right", "--delta", "1/2"], "extend", 0),
        (["dialgebra-check", "{c}/di_g1.json", "--system", "delta-lie", "--delta", "2"], "dialgebra_check", 0),
        (["verify-paper", "--table", "cldz"], "report", 0),
        (["verify-paper", "--entry", "frakB"], "report", 0),
    ],
)
def test_outputs_validate(cli_path, corpus_dir, schema_dir, args, schema_name, code):
    args = [a.replace("{c}", str(corpus_dir)) for a in args]
    rc, out, err = run(cli_path, *args)
    assert rc == code, err
    doc = json.loads(out)
    validate(doc, schema(schema_dir, schema_name))
    if schema_name == "extend":
        for w in doc["cocycles"]:
            validate(w, schema(schema_dir, "cocycle"))


def test_dual_matches(cli_path):
    assert json.loads(run(cli_path, "dual", "--variety", "delta-leibniz")[1])["matched"] == "delta-zinbiel"
    assert json.loads(run(cli_path, "dual", "--variety", "aar")[1])["matched"] == "anti-right-alternative"
    free = json.loads(run(cli_path, "dual", "--variety", "free")[1])
    assert free["relation_dim"] == 0 and free["dual_dim"] == 12


def test_exit_codes(cli_path, corpus_dir):
    assert run(cli_path, "check", corpus_dir / "nope.json", "--identity", "jacobi")[0] == 2
    assert run(cli_path, "check", corpus_dir / "A3.json", "--identity", "nope")[0] == 2
    assert run(cli_path, "extend", corpus_dir / "B2_1.json", "--identity", "antiassociative")[0] == 1
    assert run(cli_path, "dual", "--relations", corpus_dir.parent / "tests/data/unclosed_relations.json")[0] == 2
    assert run(cli_path, "verify-paper", "--entry", "nope")[0] == 2
    assert run(cli_path, "--help")[0] == 0


def test_plain_renderer(cli_path, corpus_dir):
    rc, out, _ = run(cli_path, "check", corpus_dir / "A3.json", "--identity", "delta-leibniz-right", "--all-delta", "--plain")
    assert rc == 0 and out.strip() == "A3 delta-leibniz-right: passing delta all"
