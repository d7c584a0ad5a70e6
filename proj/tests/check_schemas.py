"""Validates qpart JSON output against the schemas in docs/schemas."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

qpart, schema_dir = sys.argv[1], Path(sys.argv[2])


def load(name):
    return json.loads((schema_dir / name).read_text())


def run(*args):
    out = subprocess.run([qpart, *args], capture_output=True, text=True)
    return json.loads(out.stdout)


table = load("count-table.schema.json")
report = load("verification-report.schema.json")
partition = load("partition.schema.json")

jsonschema.validate(run("count", "--class", "Dk", "--k", "2", "--nmin", "0", "--nmax", "10", "--format", "json"), table)
jsonschema.validate(run("count", "--class", "A", "--nmin", "1", "--nmax", "5", "--method", "enumeration", "--format", "json"), table)
jsonschema.validate(run("verify", "--all", "--nmax", "20", "--kmax", "2", "--order", "60", "--big-n-max", "4", "--format", "json"), report)
failing = run("verify", "--task", "T3", "--kmin", "2", "--kmax", "2", "--nmin", "0", "--nmax", "10", "--format", "json", "--no-timestamp")
jsonschema.validate(failing, report)
assert "witness" in failing["tasks"][0]
for cls in ("Ck_o", "Dk"):
    for m in run("enumerate", "--class", cls, "--k", "2", "--n", "9", "--format", "json")["members"]:
        jsonschema.validate(m, partition)
print("schemas ok")
