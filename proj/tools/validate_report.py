#!/usr/bin/env python3
"""Runs every subdue subcommand on the fixtures and validates the JSON reports."""

import argparse
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def kind_schema(schema, kind):
    s = {k: v for k, v in schema.items() if k != "oneOf"}
    s["$ref"] = f"#/$defs/{kind}"
    return s


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--fixtures", required=True)
    args = ap.parse_args()

    schema = json.loads(Path(args.schema).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    fx = Path(args.fixtures)
    tmp = Path(tempfile.mkdtemp(prefix="subdue_schema_"))

    runs = [
        ("encode", ["encode", fx / "figure3.graph"]),
        ("encode", ["encode", fx / "triangles.graph", "--label-count", "9"]),
        ("match", ["match", fx / "figure4_g1.graph", fx / "figure4_g2.graph"]),
        ("match", ["match", fx / "triangles.graph", fx / "figure3.graph", "--node-limit", "5"]),
        ("discover", ["discover", fx / "figure3.graph", "--threshold", "0.3", "--nbest", "5"]),
        ("discover", ["discover", fx / "triangles.graph", "--passes", "3", "--label-pref", "a=2"]),
        ("compress", ["compress", fx / "triangles.graph", "--passes", "3"]),
        ("compress", ["compress", fx / "figure4_g1.graph"]),
        ("sweep", ["sweep", fx / "figure3.graph", "--thresholds", "0,0.25,0.5"]),
        ("generate", ["generate", "--sub-name", "s5e6", "--distort", "1", "--seed", "7", "--out", tmp]),
    ]

    failures = 0
    for kind, argv in runs:
        cmd = [args.cli] + [str(a) for a in argv]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        label = " ".join(str(a) for a in argv)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        docs = [(kind, doc)]
        if kind == "generate":
            for g in doc["graphs"]:
                docs.append(("truth", json.loads((tmp / g["truth_file"]).read_text())))
        for k, d in docs:
            try:
                jsonschema.validate(d, kind_schema(schema, k), cls=jsonschema.Draft202012Validator)
                jsonschema.validate(d, schema, cls=jsonschema.Draft202012Validator)
                print(f"ok   {k}: {label}")
            except jsonschema.ValidationError as e:
                print(f"FAIL {k}: {label}: {e.message} at {list(e.absolute_path)}")
                failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
