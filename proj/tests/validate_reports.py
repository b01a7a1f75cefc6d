"""Runs every JSON-producing beba command and validates the output against the shipped schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    beba, schema_path = sys.argv[1], pathlib.Path(sys.argv[2])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        (tmp / "two.el").write_text("0 1\n")
        (tmp / "two.csv").write_text("node,opinion\n0,0.5\n1,-0.5\n")
        (tmp / "beta.csv").write_text("".join(f"{i},{1 + i % 3}\n" for i in range(34)))
        commands = {
            "simulate_beba": ["simulate", "--graph", "karate", "--opinions", "uniform:42", "--beta", "1",
                              "--trajectory", str(tmp / "t.csv")],
            "simulate_beta_file": ["simulate", "--graph", "karate", "--opinions", "uniform:1", "--beta",
                                   str(tmp / "beta.csv")],
            "simulate_polarized": ["simulate", "--graph", str(tmp / "two.el"), "--opinions", str(tmp / "two.csv"),
                                   "--beta", "5"],
            "simulate_degroot": ["simulate", "--graph", "karate", "--opinions", "uniform:2", "--model", "degroot"],
            "simulate_bof": ["simulate", "--graph", "karate", "--opinions", "uniform:2", "--model", "bof",
                             "--bias", "1.5", "--self-weight", "2"],
            "simulate_not_converged": ["simulate", "--graph", "karate", "--opinions", "uniform:2", "--beta", "1",
                                       "--max-iters", "3"],
            "betap_single": ["betap", "--graph", str(tmp / "two.el"), "--opinions", str(tmp / "two.csv")],
            "betap_batch": ["betap", "--graph", "karate", "--opinions", "uniform:batch:5:3", "--search", "scan"],
            "campaign": ["campaign", "--graph", "karate", "--vectors", "8", "--seed", "1", "--betas", "1,10",
                         "--betap-range", "0:20"],
            "campaign_generator": ["campaign", "--graph", "ba:30:3:2", "--vectors", "4", "--seed", "2", "--betas",
                                   "2", "--graph-per-vector"],
        }
        failures = 0
        for name, args in commands.items():
            out = tmp / f"{name}.json"
            proc = subprocess.run([beba, *args, "--out", str(out)], capture_output=True, text=True)
            if proc.returncode != 0:
                print(f"FAIL {name}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            errors = sorted(validator.iter_errors(json.loads(out.read_text())), key=str)
            if errors:
                print(f"FAIL {name}: {errors[0].message}")
                failures += 1
            else:
                print(f"ok   {name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
