"""CLI checks: exit codes, golden output fragments, and report schema.

usage: run_cli_tests.py golden|schema LCX_BINARY SOURCE_DIR
"""

import json
import subprocess
import sys
from pathlib import Path

mode, lcx, src = sys.argv[1], sys.argv[2], Path(sys.argv[3])
inputs = src / "tests" / "cli" / "inputs"
failures = []


def run(*args):
    p = subprocess.run([lcx, *map(str, args)], capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")


def cardinal_arg(c):
    if isinstance(c, dict):
        return str(c["finite"]) if "finite" in c else f"aleph{c['aleph']}"
    return str(c)


EXIT = {"Holds": 0, "Fails": 1, "Unknown": 2}


def golden():
    code, out, _ = run("derive", "--space", inputs / "finsupp.json", "--property", "cnp")
    expect("derive finsupp", code == 0, f"exit {code}")
    expect("derive finsupp tree", "[finite-support-sequences]" in out and "verdict: Holds" in out, out)

    code, out, _ = run("repro", "examp3", "--n", 3)
    expect("examp3 n=3", code == 1, f"exit {code}")
    expect("examp3 n=3 text", "Violation(i=1, j=3, x=y=e_4, lhs=1, rhs=0)" in out, out)

    code, out, _ = run("classify-convolution", "--group", "infinite-compact", "--r", 0, "--s", "inf", "--t", "inf",
                       "--b-pe", "yes")
    expect("compact group", code == 0, f"exit {code}")
    expect("compact group verdicts", "continuous: Holds\nproductEstimates: Fails" in out, out)

    code, _, err = run("classify-convolution", "--group", "finite", "--r", 1, "--s", 1, "--t", 3, "--b-pe", "yes")
    expect("degree violation", code == 64 and "DegreeViolation" in err, f"exit {code}: {err}")

    code, _, err = run("repro", "examp3")
    expect("missing --n", code == 64 and err.strip(), f"exit {code}")
    code, _, err = run()
    expect("no verb", code == 64 and err.strip(), f"exit {code}")
    code, _, err = run("falsify", "--input", inputs / "falsify_pass.json")
    expect("falsify without seed", code == 64, f"exit {code}")
    code, _, err = run("derive", "--space", "{not json", "--property", "cnp")
    expect("malformed space", code == 64 and "ParseError" in err, f"exit {code}: {err}")

    code, out, _ = run("convolve", "--group", '{"kind": "cyclic", "size": 3}', "--gamma", "[1,2,0]", "--eta", "[1,0,1]")
    expect("convolve", code == 0 and "(3, 2, 1)" in out, out)

    code, out, _ = run("theta", "--base", '{"components": {"aleph": 1}}')
    expect("theta", code == 0 and "aleph1" in out, out)

    code, out, _ = run("witness", "--kind", "split", "--input", '{"C": [[1, 2], [3, 4]]}')
    expect("split", code == 0 and "d = (1, 4)" in out, out)

    code, out, _ = run("falsify", "--input", inputs / "falsify_pass.json", "--seed", 3, "--count", 5000,
                       "--strategies", "basis,randomSparse,randomDense")
    expect("falsify pass", code == 0 and out.startswith("Pass (5000 samples"), f"exit {code}: {out}")
    code, out, _ = run("falsify", "--input", inputs / "falsify_violation.json", "--seed", 3, "--count", 100,
                       "--strategies", "basis")
    expect("falsify violation", code == 1 and "Violation at i=1 j=1" in out, f"exit {code}: {out}")

    code, out, _ = run("repro", "examp4", "--k", 1, "--t", "0.125,0.0625,0.03125")
    expect("examp4", code == 1 and "Blowup" in out, f"exit {code}: {out}")
    code, out, _ = run("repro", "examp4", "--k", 1, "--t", "0.125,0.1")
    expect("examp4 no claim", code == 2 and "NoClaim" in out, f"exit {code}: {out}")

    corpus = json.loads((src / "tests" / "golden" / "np_corpus.json").read_text())
    for row in corpus:
        args = ["--json", "derive", "--space", json.dumps(row["space"]), "--property", row["property"]]
        if "theta" in row:
            args += ["--theta", cardinal_arg(row["theta"])]
        code, out, err = run(*args)
        name = "corpus " + row["name"]
        expect(name, code == EXIT[row["status"]], f"exit {code}: {err}")
        if code in EXIT.values():
            report = json.loads(out)
            expect(name, report["status"] == row["status"], report["status"])
            expect(name, report["derivation"]["rule"] == row["rule"], report["derivation"]["rule"])


def schema():
    import jsonschema

    root = json.loads((src / "schema" / "lcx.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(root)
    registry_root = {"$schema": root["$schema"], "$defs": root["$defs"]}

    def validate(name, definition, args, codes):
        code, out, err = run("--json", *args)
        expect(name, code in codes, f"exit {code}: {err}")
        try:
            report = json.loads(out)
        except json.JSONDecodeError as e:
            expect(name, False, f"not JSON: {e}")
            return
        schema = dict(registry_root, **{"$ref": f"#/$defs/{definition}"})
        errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(report), key=str)
        expect(name, not errors, "; ".join(e.message for e in errors[:3]))

    fin = str(inputs / "finsupp.json")
    validate("derive cnp", "deriveReport", ["derive", "--space", fin, "--property", "cnp"], {0})
    validate("derive theta", "deriveReport",
             ["derive", "--space", '{"node": "ell-infinity-theta", "theta": {"aleph": 0}}', "--property", "theta-np",
              "--theta", "aleph1"], {1})
    validate("derive continuous norm", "deriveReport",
             ["derive", "--space", fin, "--property", "continuous-norm"], {0, 1, 2})
    validate("derive psi", "deriveReport",
             ["derive", "--space", '{"node": "normed", "label": "E"}', "--property", "psi", "--base",
              '{"components": {"aleph": 1}}'], {0})
    validate("witness schedule", "witnessReport",
             ["witness", "--kind", "schedule", "--input", '{"r": [[1, 2], [3, 4]], "s": [[1, 1], [1, 1]]}'], {0})
    validate("witness split", "witnessReport", ["witness", "--kind", "split", "--input", '{"C": [[1, 2], [3, 4]]}'], {0})
    validate("witness exponent", "witnessReport",
             ["witness", "--kind", "exponent", "--input", '{"t": [[1, 2], [3, 4]]}'], {0})
    validate("witness target-cnp", "witnessReport",
             ["witness", "--kind", "target-cnp", "--input", inputs / "target_cnp.json"], {0})
    validate("witness exenew", "witnessReport", ["witness", "--kind", "exenew", "--input", inputs / "exenew.json"], {0})
    validate("witness direct-sum", "witnessReport",
             ["witness", "--kind", "direct-sum", "--input",
              '{"C": [[[[2, 1]], [[4, 8]]]], "P_blocks": [[{"node": "prefix-sup", "n": 1}]],'
              ' "Q_blocks": [[{"node": "prefix-sup", "n": 2}, {"node": "prefix-sup", "n": 3}],'
              ' [{"node": "prefix-sup", "n": 1}, {"node": "prefix-sup", "n": 1}]]}'], {0})
    validate("falsify pass", "falsifyReport",
             ["falsify", "--input", inputs / "falsify_pass.json", "--seed", 1, "--count", 500,
              "--strategies", "basis,randomSparse,randomDense"], {0})
    validate("falsify violation", "falsifyReport",
             ["falsify", "--input", inputs / "falsify_violation.json", "--seed", 1, "--count", 500,
              "--strategies", "randomDense", "--search"], {1})
    for n in (1, 3, 8):
        validate(f"repro examp3 n={n}", "examp3Report", ["repro", "examp3", "--n", n], {1})
    validate("repro examp4", "examp4Report", ["repro", "examp4", "--k", 2, "--t", "0.125,0.0625,0.03125"], {1})
    validate("convolve cyclic", "convolveReport",
             ["convolve", "--group", '{"kind": "cyclic", "size": 3}', "--gamma", "[1,2,0]", "--eta", "[1,0,1]"], {0})
    validate("convolve circle", "convolveReport",
             ["convolve", "--group", '{"kind": "circle", "size": 4}', "--gamma", "[1,0,0,0]", "--eta", "[1,2,3,4]"], {0})
    validate("theta", "thetaReport", ["theta", "--base", '{"components": {"aleph": 1}}'], {0})
    for group, r, s, t in [("infinite-compact", 0, "inf", "inf"), ("finite", 1, 2, 3), ("infinite-discrete", 0, 0, 0)]:
        validate(f"classify {group}", "classifyReport",
                 ["classify-convolution", "--group", group, "--r", r, "--s", s, "--t", t, "--b-pe", "yes"], {0, 1, 2})


{"golden": golden, "schema": schema}[mode]()
for f in failures:
    print("FAIL", f)
print(f"{mode}: {len(failures)} failure(s)")
sys.exit(1 if failures else 0)
