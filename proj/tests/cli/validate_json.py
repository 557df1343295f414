"""Run a qcliff subcommand with --json and validate its output.

usage: validate_json.py SCHEMA DEFINITION EXPECTED_EXIT -- CLI ARGS...
"""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    sep = sys.argv.index("--")
    schema_path, definition, expected = sys.argv[1], sys.argv[2], int(sys.argv[3])
    cmd = sys.argv[sep + 1:]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    proc = subprocess.run(cmd, capture_output=True, text=True, timeout=120)
    if proc.returncode != expected:
        print(f"exit {proc.returncode}, expected {expected}\n{proc.stderr}")
        return 1
    doc = json.loads(proc.stdout)
    root = {"$schema": schema["$schema"], "$defs": schema["$defs"], "$ref": f"#/$defs/{definition}"}
    jsonschema.Draft202012Validator.check_schema(root)
    errors = sorted(jsonschema.Draft202012Validator(root).iter_errors(doc), key=lambda e: list(e.path))
    for e in errors[:5]:
        print(f"{list(e.path)}: {e.message[:300]}")
    if errors:
        return 1
    # a second run must give byte-identical output
    again = subprocess.run(cmd, capture_output=True, text=True, timeout=120)
    if again.stdout != proc.stdout:
        print("output differs between runs")
        return 1
    print(f"{definition}: valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
