#!/usr/bin/env python3
"""Run every CLI command in JSON mode and validate against schemas/."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    cli, data, schemas = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    runs = [
        ("sssp", ["sssp", "--input", data / "fig6.g", "--source", "A", "--stats"]),
        ("sssp", ["sssp", "--input", data / "demo.g", "--source", "A", "-k", "8"]),
        ("sdsp", ["sdsp", "--input", data / "demo.g", "--dest", "A", "--stats"]),
        ("trace", ["trace", "--input", data / "demo.g", "--source", "A", "--stats"]),
        ("mst", ["mst", "--input", data / "fig4.g", "--stats"]),
        ("mst", ["mst", "--input", data / "fig1.g", "--root", "C"]),
        ("bench", ["bench", "--n", "3000", "--seed", "9"]),
        ("bench", ["bench", "--n", "500", "--queue", "ptrie", "--timing"]),
        ("analyze", ["analyze", "--n", "256", "--trials", "50", "--seed", "3"]),
    ]
    failures = 0
    for name, args in runs:
        schema = json.loads((schemas / f"{name}.schema.json").read_text())
        cmd = [cli, *map(str, args), "--json"]
        out = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
        try:
            jsonschema.validate(json.loads(out), schema)
        except jsonschema.ValidationError as e:
            print(f"FAIL {' '.join(map(str, args))}: {e.message}")
            failures += 1
            continue
        if "--timing" not in args:
            again = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
            if again != out:
                print(f"FAIL {' '.join(map(str, args))}: output differs between runs")
                failures += 1
                continue
        print(f"ok   {' '.join(map(str, args))}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
