"""Runs the CLI in JSON mode over the test problems and validates every report."""

import argparse
import copy
import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ("closure", "nonclosed.ideal", ["--reduction-from-file"]),
    ("closure", "small.ideal", ["--mode", "certified"]),
    ("check-closed", "closed.ideal", []),
    ("closure-power", "square.ideal", ["--n", "2"]),
    ("poincare", "nonclosed.ideal", []),
    ("poincare", "small.ideal", ["--mode", "certified"]),
    ("hilbert", "square.ideal", ["--n", "3"]),
    ("reduction", "nonclosed.ideal", ["--seed", "4"]),
    ("colon-powers", "nonclosed.ideal", ["--k", "3"]),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("cli")
    parser.add_argument("schema")
    parser.add_argument("data")
    args = parser.parse_args()

    schema = json.loads(pathlib.Path(args.schema).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    reports = []
    for command, problem, extra in RUNS:
        cmd = [args.cli, command, str(pathlib.Path(args.data) / problem), "--format", "json", *extra]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        label = " ".join([command, problem, *extra])
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        report = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
            reports.append(report)

    # the schema has to reject broken reports too
    if reports:
        broken = copy.deepcopy(reports[0])
        broken["result"]["closure"]["colength"] = "32"
        del broken["provenance"]["seed"]
        broken["extra"] = 1
        if validator.is_valid(broken):
            print("FAIL a malformed report validates")
            failures += 1
        else:
            print("ok   malformed report rejected")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
