"""Runs `ggg verify` over a few family members and validates each report
against schemas/report.schema.json."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    (["--family", "G", "--m", "5"], 0),
    (["--family", "H", "--m", "6"], 0),
    (["--family", "G", "--m", "7"], 0),
    (["--family", "H", "--m", "8"], 1),
    (["--family", "H", "--m", "10", "--checks", "remark1,maximal"], 1),
    (["--family", "G", "--m", "9", "--checks", "color", "--budget", "2"], 3),
]


def main() -> int:
    ggg, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failed = 0
    for args, expected_code in CASES:
        proc = subprocess.run([ggg, "verify", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected_code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected_code}")
            failed += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for err in errors:
            print(f"FAIL {label}: {'/'.join(map(str, err.path))}: {err.message}")
        failed += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
