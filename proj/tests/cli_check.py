#!/usr/bin/env python3
# end-to-end checks on the rosegbs binary: exit codes, determinism, schema
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SRC = sys.argv[1], sys.argv[2]
with open(os.path.join(SRC, "schemas", "report.schema.json")) as f:
    SCHEMA = json.load(f)
jsonschema.Draft202012Validator.check_schema(SCHEMA)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

failures = []


def run(*args, env=None):
    e = {k: v for k, v in os.environ.items() if not k.startswith("ROSEGBS_")}
    e.update(env or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=e, timeout=600)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f"  ({detail})" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def json_of(r):
    try:
        return json.loads(r.stdout)
    except json.JSONDecodeError:
        return None


BS31 = "<a,t1 | t1 a^3 t1^-1 = a>"
TWO = "<a,t1,t2 | t1 a^3 t1^-1 = a ; t2 a^5 t2^-1 = a>"
RES = "<a,t1,t2 | t1 a^2 t1^-1 = a^2 ; t2 a^4 t2^-1 = a^4>"
XI1 = "<a,t1 | t1 a^2 t1^-1 = a^12>"

# exit codes
r = run("classify", "-p", "2", "<a,t1 | t1 a^3 t1^-1 = a")
check("parse error exits 2", r.returncode == 2, r.stderr)
check("parse error reports on stderr", r.stderr != "" and r.stdout == "")
check("composite p exits 2", run("classify", "-p", "4", BS31).returncode == 2)
check("unknown flag exits 2", run("classify", "-p", "2", "--frob", BS31).returncode == 2)
check("bad orientation exits 2",
      run("verify", "-p", "2", "--orientation", "sideways", BS31).returncode == 2)
check("verify residual case exits 0", run("verify", "-p", "2", RES).returncode == 0)
check("verify two loops exits 0", run("verify", "-p", "2", TWO).returncode == 0)
r = run("verify", "-p", "2", "--budget.max-order", "0", "--budget.s-max", "0", XI1)
check("empty budget exits 3", r.returncode == 3, r.stdout)
r = run("verify", "-p", "2", "--orientation", "intro-verbatim", BS31)
check("intro orientation is a violation", r.returncode == 1, r.stdout[-400:])

# every command emits schema-valid, byte-identical JSON
runs = [
    ["classify", "-p", "2", TWO],
    ["classify", "-p", "3", "<a,t1 | t1 a^-9 t1^-1 = a^6>"],
    ["residual", "-p", "2", TWO],
    ["residual", "-p", "3", RES],
    ["generators", "-p", "2", "--bounds.k-max", "1", TWO],
    ["generators", "-p", "2", XI1],
    ["verify", "-p", "2", TWO],
    ["verify", "-p", "2", XI1],
    ["verify", "-p", "2", "--budget.max-order", "0", "--budget.s-max", "0", XI1],
    ["verify", "-p", "2", "--orientation", "intro-verbatim", "--mixed-order", "verbatim", BS31],
    ["verify", "-p", "3", "--bounds.k-max", "1", "--bounds.comm-len", "4", RES],
    ["catalog-validate"],
]
for args in runs:
    a = run(*args, "--format", "json")
    b = run(*args, "--format", "json")
    name = " ".join(args[:1] + args[1:3])
    check(f"deterministic: {name}", a.stdout == b.stdout and a.stdout != "")
    doc = json_of(a)
    if doc is None:
        check(f"valid json: {name}", False, a.stderr)
        continue
    errs = sorted(VALIDATOR.iter_errors(doc), key=lambda e: list(e.path))
    check(f"schema: {name}", not errs, "; ".join(e.message for e in errs[:3]))

# verify json agrees with the exit code
r = run("verify", "-p", "2", "--format", "json", "--orientation", "intro-verbatim", BS31)
doc = json_of(r) or {}
check("json exit_code matches process", doc.get("exit_code") == r.returncode == 1)
check("violation carries a witness",
      any(v["verdict"] == "SeparatedBy" and v["witness"] is not None for v in doc.get("verdicts", [])))

# environment overrides, flags win over env
r = run("classify", "--format", "json", BS31, env={"ROSEGBS_P": "3"})
check("env sets p", (json_of(r) or {}).get("config", {}).get("p") == 3, r.stderr)
r = run("classify", "-p", "5", "--format", "json", BS31, env={"ROSEGBS_P": "3"})
check("flag beats env", (json_of(r) or {}).get("config", {}).get("p") == 5)
r = run("generators", "-p", "2", TWO, env={"ROSEGBS_FORMAT": "json", "ROSEGBS_BOUNDS_K_MAX": "1"})
check("env sets format and bounds",
      (json_of(r) or {}).get("config", {}).get("bounds", {}).get("k_max") == 1)

# truncation
r = run("generators", "-p", "2", "--format", "json", "--bounds.count-limit", "5", TWO)
doc = json_of(r) or {}
check("count limit truncates",
      doc.get("truncation", {}).get("truncated") is True and len(doc.get("generators", [])) == 5)
r = run("generators", "-p", "2", "--bounds.count-limit", "5", TWO)
check("text output flags truncation", "# truncated" in r.stdout)

# input from a file
with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
    f.write(TWO + "\n")
try:
    a = run("classify", "-p", "2", "--format", "json", f.name).stdout
    b = run("classify", "-p", "2", "--format", "json", TWO).stdout
    check("file input equals inline input", a == b and a != "")
finally:
    os.unlink(f.name)

# catalog-validate on the shipped file and on a broken one
r = run("catalog-validate", "--format", "json", "--catalog", os.path.join(SRC, "data", "catalog.txt"))
doc = json_of(r) or {}
check("shipped catalog validates", r.returncode == 0 and doc.get("status") == "PASS")
with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
    f.write("group Bad p=2 n=2\npow 1 = g2^1\ncomm 2 1 = g2^1\nend\ngroup C2 p=2 n=1\nend\n")
try:
    r = run("catalog-validate", "--format", "json", "--catalog", f.name)
    doc = json_of(r) or {}
    check("broken group is reported", doc.get("status") == "WARN" and len(doc.get("groups", [])) == 1,
          r.stdout + r.stderr)
finally:
    os.unlink(f.name)
check("missing catalog exits 2",
      run("catalog-validate", "--catalog", "/nonexistent/catalog.txt").returncode == 2)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
