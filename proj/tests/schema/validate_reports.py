"""Runs every --json verb of the CLI and validates the output against the schema."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    exe, schema_path, data = sys.argv[1:4]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)

    runs = [
        ["check", "--json", f"{data}/example_fraction.txt"],
        ["check", "--json", "--oracle", f"{data}/three_cycle.txt"],
        ["check", "--json", f"{data}/four_cycle.txt"],
        ["matrix", "--json", "--I", "3", "--J", "4"],
        ["matrix", "--json", f"{data}/example_fraction.json"],
        ["det", "--json", f"{data}/example_fraction.txt"],
        ["count", "--json", "--I", "6", "--J", "6", "--probability"],
        ["count", "--json", "--margins", "3,2,1,1", "2,2,2,1"],
        ["decompose", "--json", f"{data}/four_cycle.txt"],
        ["find-cycle", "--json", f"{data}/three_cycle.txt"],
        ["find-cycle", "--json", f"{data}/example_fraction.txt"],
        ["basis", "--json", "--I", "3", "--J", "3"],
        ["verify", "--json", "--margins", "3,1,2", "3,1,1,1"],
    ]
    failures = 0
    for args in runs:
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        try:
            doc = json.loads(proc.stdout)
            validator.validate(doc)
            if doc["command"] != args[0]:
                raise ValueError(f"command field {doc['command']!r}")
            if (doc["status"] == "ok") != (proc.returncode == 0):
                raise ValueError(f"status {doc['status']} with exit code {proc.returncode}")
        except (ValueError, jsonschema.ValidationError) as exc:
            failures += 1
            print(f"FAIL {' '.join(args)}: {exc}")
            continue
        print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
