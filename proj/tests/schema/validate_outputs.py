"""Runs the CLI on a spread of inputs and validates each JSON document
against the shipped schema for its subcommand."""

import copy
import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ["paving", "--type", "A", "--rank", "2", "--hess-fn", "2,3,3"],
    ["paving", "--type", "D", "--rank", "4", "--hess", "peterson"],
    ["paving", "--type", "C", "--rank", "3", "--hess", "neg=-1,0,0;0,-1,0;0,0,-1;-1,-1,0"],
    ["betti", "--type", "B", "--rank", "3", "--hess", "full"],
    ["betti", "--type", "A", "--rank", "3", "--hess", "borel"],
    ["enumerate-hess", "--type", "A", "--rank", "3"],
    ["enumerate-hess", "--type", "D", "--rank", "4"],
    ["witness", "--type", "A", "--rank", "2", "--hess", "peterson", "--word", "1 2 1"],
    ["witness", "--type", "D", "--rank", "4", "--hess", "full", "--word", "1 2 3 4", "--random-n"],
    ["verify-lemmata", "--type", "C", "--rank", "3", "--trials", "5"],
    ["verify-lemmata", "--type", "D", "--rank", "4", "--trials", "5"],
    ["count-points", "--n", "3", "--q", "2", "--hess-fn", "2,3,3"],
    ["count-points", "--n", "4", "--q", "3", "--hess-fn", "2,3,4,4"],
    ["sweep", "--type", "B", "--rank", "2"],
    ["sweep", "--type", "A", "--rank", "3", "--witness", "--seed", "4"],
]


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {}
    failures = 0
    for case in CASES:
        command = case[0]
        if command not in schemas:
            schema = json.loads((schema_dir / f"{command}.schema.json").read_text())
            jsonschema.Draft202012Validator.check_schema(schema)
            schemas[command] = jsonschema.Draft202012Validator(schema)
        proc = subprocess.run([binary, *case, "--format", "json"], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(case)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = list(schemas[command].iter_errors(doc))
        if errors:
            print(f"FAIL {' '.join(case)}: {errors[0].message}")
            failures += 1
            continue
        # a schema that accepts anything proves nothing
        broken = copy.deepcopy(doc)
        broken["unexpected_field"] = 1
        if schemas[command].is_valid(broken):
            print(f"FAIL {' '.join(case)}: schema accepts unknown fields")
            failures += 1
            continue
        print(f"ok   {' '.join(case)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
