# Copyright 2026 The cycalg Authors
# SPDX-License-Identifier: Apache-2.0
"""Runs every subcommand in each output-relevant mode and validates the JSON
against the published schema. Also checks the exit-code contract."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    (["pn", "6"], 0),
    (["pn", "12", "--list"], 0),
    (["z1", "--target", "W", "--n", "4"], 0),
    (["z1", "--target", "T", "--q", "3", "--n", "2"], 0),
    (["h1", "--target", "W", "--n", "2"], 0),
    (["h1", "--target", "W", "--n", "5", "--list"], 0),
    (["h1", "--target", "T", "--q", "2", "--n", "3"], 0),
    (["h1", "--target", "N", "--q", "5", "--n", "2", "--b", "2"], 0),
    (["h1", "--target", "Tg", "--q", "3", "--n", "2", "--b", "2", "--twist", "(1 2)"], 0),
    (["pstar-check", "--q", "3", "--n", "2", "--b", "2"], 0),
    (["embed", "--q", "3", "--n", "3", "--b", "2"], 0),
    (["embed", "--field", "cyclo", "--m", "4", "--s", "3", "--b", "-1", "--element", '["1+2*z","3+4*z"]'], 0),
    (["embed", "--field", "padic", "--l", "5", "--n", "2", "--b", "5", "--prec", "16"], 0),
    (["act", "--q", "5", "--n", "2", "--b", "2", "--samples", "20"], 0),
    (["act", "--field", "cyclo", "--m", "5", "--s", "2", "--b", "3", "--samples", "3"], 0),
    (["fixcheck", "--q", "3", "--n", "2", "--b", "2"], 0),
    (["fixcheck", "--q", "2", "--n", "3", "--samples", "50"], 0),
    (["wedderburn", "--field", "cyclo", "--m", "4", "--s", "3", "--b", "-1"], 0),
    (["wedderburn", "--q", "5", "--n", "2", "--b", "3"], 0),
    (["wedderburn", "--field", "padic", "--l", "7", "--n", "3", "--b", "7", "--prec", "16"], 0),
    (["localex", "--l", "5", "--p", "3", "--n", "2", "--prec", "32"], 0),
    (["localex", "--l", "7", "--p", "19", "--n", "3", "--prec", "32"], 0),
]

USAGE = [
    ["pn", "0"],
    ["h1", "--target", "T", "--field", "cyclo"],
    ["wedderburn", "--q", "3", "--n", "2", "--b", "t"],
    ["localex", "--l", "7", "--p", "3", "--n", "3"],
    ["act", "--q", "5", "--n", "2", "--matrix", "[[1,2],[2,4]]"],
    ["--format", "xml", "pn", "3"],
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, code in CASES:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        if proc.returncode != code:
            print(f"FAIL exit {proc.returncode} != {code}: {' '.join(args)}\n{proc.stderr}")
            failures += 1
            continue
        report = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL schema: {' '.join(args)}: {list(e.path)}: {e.message}")
        failures += bool(errors)
        pretty = subprocess.run([cli, "--format", "pretty", *args], capture_output=True, text=True)
        if json.loads(pretty.stdout) != report:
            print(f"FAIL pretty output differs: {' '.join(args)}")
            failures += 1
    for args in USAGE:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        if proc.returncode != 2 or proc.stdout:
            print(f"FAIL usage error expected (exit 2, empty stdout): {' '.join(args)} -> {proc.returncode}")
            failures += 1
    print(f"{len(CASES)} reports and {len(USAGE)} usage errors checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
