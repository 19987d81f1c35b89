#!/usr/bin/env python3
"""Runs the stratsys binary over fixed command lines.

modes:
  schema       every --json report validates against schema/report.schema.json
  determinism  two runs give byte-identical output; --jobs does not change details
Exit 77 when the jsonschema package is missing (ctest SKIP_RETURN_CODE).
"""
import json
import subprocess
import sys
from pathlib import Path

CASES = [
    (["kron", "list", "--m", "2", "--bound", "3"], 0),
    (["kron", "list", "--m", "3", "--bound", "2"], 0),
    (["kron", "enumerate", "--m", "2", "--cap", "9"], 0),
    (["ss", "check", "bad.json"], 1),
    (["ss", "check", "kron2_family1.json"], 0),
    (["ss", "css", "kron2_family1.json"], 0),
    (["ss", "extend", "kron2_partial.json"], 0),
    (["ss", "filtfinite", "kron2_family1.json"], 0),
    (["ss", "check", "apq23_fg.json"], 0),
    (["rep", "hom", "kron2_brick.json", "kron2_brick.json"], 0),
    (["rep", "ext", "kron2_p1.json", "kron2_brick.json"], 0),
    (["rep", "supp", "kron2_p1.json"], 0),
    (["ar", "tau", "kron2_p1.json", "--k", "2"], 0),
    (["ar", "tauinv", "kron2_brick.json"], 0),
    (["ar", "pos", "kron2_p1.json"], 0),
    (["quiver", "validate", "kron2_quiver.json"], 0),
    (["quiver", "validate", "cyclic_quiver.json"], 1),
    (["quiver", "classify", "double_path.json"], 0),
    (["apq", "tubes", "--p", "2", "--q", "3"], 0),
    (["apq", "ysearch-post", "--p", "2", "--q", "3", "--tbound", "12"], 0),
    (["apq", "ysearch-pre", "--p", "2", "--q", "3", "--tbound", "12"], 0),
    (["apq", "sincerity", "--p", "2", "--q", "3"], 1),
    (["apq", "families", "--p", "2", "--q", "3", "--tbound", "12"], 1),
    (["wild", "regcss", "double_path.json", "--cap", "6"], 1),
]

ERROR_CASES = [
    ["rep", "hom", "malformed_map.json", "kron2_brick.json"],
    ["ss", "check", "syntax_error.json"],
    ["ss", "check", "unknown_name.json"],
    ["ss", "check", "missing.json"],
    ["kron", "list", "--m", "2", "--bogus"],
]


def run(binary, data, args):
    p = subprocess.run([binary, "--json", *args], cwd=data, capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def main():
    mode, binary, schema_path, data = sys.argv[1:5]
    binary = str(Path(binary).resolve())
    failures = []
    if mode == "schema":
        try:
            import jsonschema
        except ImportError:
            print("jsonschema not installed")
            return 77
        schema = json.loads(Path(schema_path).read_text())
        validator = jsonschema.Draft202012Validator(schema)
        for args, expected in CASES:
            code, out, err = run(binary, data, args)
            if code != expected:
                failures.append(f"{args}: exit {code}, expected {expected}: {err.strip()}")
                continue
            report = json.loads(out)
            for e in validator.iter_errors(report):
                failures.append(f"{args}: {e.json_path}: {e.message}")
            if (report["verdict"] == "pass") != (code == 0):
                failures.append(f"{args}: verdict {report['verdict']} with exit {code}")
        for args in ERROR_CASES:
            code, out, err = run(binary, data, args)
            if code != 2 or not err.strip():
                failures.append(f"{args}: exit {code}, expected 2 with a message")
            if out:
                failures.append(f"{args}: wrote a report despite the input error")
    else:
        for args, _ in CASES:
            first, second = run(binary, data, args), run(binary, data, args)
            if first != second:
                failures.append(f"{args}: output differs between runs")
        for args in (["apq", "families", "--p", "2", "--q", "3", "--tbound", "12"],
                     ["apq", "ysearch-pre", "--p", "3", "--q", "4", "--tbound", "8"]):
            serial = json.loads(run(binary, data, ["--jobs", "1", *args])[1])
            threaded = json.loads(run(binary, data, ["--jobs", "4", *args])[1])
            if serial["details"] != threaded["details"]:
                failures.append(f"{args}: --jobs 4 changes the details")
    for f in failures:
        print("FAIL", f)
    print(f"{mode}: {len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
