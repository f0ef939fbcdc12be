"""End-to-end checks of the nagata CLI: report schema, reproducibility,
exit codes and diagnostics.

usage: cli_test.py <nagata-binary> <schema-dir> <scratch-dir>
"""

import json
import pathlib
import shutil
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

BIN, SCHEMAS, SCRATCH = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

failures = []


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


report_schema = load_schema("report.schema.json")
config_schema = load_schema("point_config.schema.json")
registry = Registry().with_resource(
    "https://example.invalid/nagata/point_config.schema.json", Resource.from_contents(config_schema)
)
validator = jsonschema.Draft202012Validator(report_schema, registry=registry)


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)


def strip_time(text):
    doc = json.loads(text)
    doc["meta"]["elapsed_ms"] = 0
    return json.dumps(doc, sort_keys=True)


shutil.rmtree(SCRATCH, ignore_errors=True)
SCRATCH.mkdir(parents=True)

cases = {
    "omega": ["omega", "--n", "2", "--r", "9", "--seed", "4"],
    "interval": ["interval", "--grid", "2", "--l-max", "3", "--scalar", "rational"],
    "nagata": ["nagata", "--n", "2", "--r", "12", "--l-max", "4", "--seed", "3"],
    "harbourne": ["harbourne", "--m-max", "6", "--seed", "1"],
    "profile": ["green-profile", "--example", "two-point", "--t", "1/100", "--samples", "1024"],
    "collide": ["collide", "--example", "paper-two-point", "--t", "0.5,0.25,0.1", "--d", "2", "--samples", "1024"],
    "schwarz": ["schwarz", "--example", "origin", "--l-max", "3", "--samples", "1024"],
}

outputs = {}
for name, args in cases.items():
    first = run(*args)
    check(first.returncode == 0, f"{name}: exit 0 (stderr: {first.stderr.strip()})")
    if first.returncode != 0:
        continue
    doc = json.loads(first.stdout)
    outputs[name] = doc
    errors = sorted(validator.iter_errors(doc), key=str)
    check(not errors, f"{name}: report validates against the schema" + (f" ({errors[0].message})" if errors else ""))
    second = run(*args)
    check(strip_time(first.stdout) == strip_time(second.stdout), f"{name}: rerun reproduces the report")

if "nagata" in outputs:
    v = outputs["nagata"]["verdicts"]
    check(len(v) == 4 and all(x["pass"] for x in v), "nagata r=12: four true verdicts")
    check(outputs["nagata"]["meta"]["seed"] == 3, "nagata: meta.seed echoes --seed")
if "harbourne" in outputs:
    v = outputs["harbourne"]["verdicts"]
    check(len(v) == 54 and all(x["pass"] for x in v), "harbourne m-max 6: 54 passing rows")
if "collide" in outputs:
    ts = outputs["collide"]["spec"]["t"]
    check(ts == ["1/2", "1/4", "1/10"], "collide: decimal t values parsed exactly")
    devs = [row["deviation"] for row in outputs["collide"]["results"]["rows"]]
    check(all(a > b for a, b in zip(devs, devs[1:])), "collide: deviation decreases with t")

# CSV and --out persistence.
out_dir = SCRATCH / "collide"
res = run(*cases["collide"], "--format", "both", "--out", str(out_dir))
check(res.returncode == 0 and res.stdout == "", "collide --out: quiet success")
csv_path, json_path = out_dir / "collide.csv", out_dir / "collide.json"
check(csv_path.exists() and json_path.exists(), "collide --out: writes JSON and CSV")
if csv_path.exists():
    lines = csv_path.read_text().splitlines()
    check(lines[0].startswith("t,deviation,") and len(lines) == 4, "collide CSV: header plus one row per t")
res = run("green-profile", "--example", "two-point", "--target", "polydisc-limit", "--sphere", "sup-norm", "--format", "csv")
check(res.returncode == 0 and res.stdout.startswith("radius,sup,residual\n"), "green-profile CSV output")

# Config round trip through a file.
cfg = SCRATCH / "config.json"
cfg.write_text(json.dumps(outputs.get("omega", {}).get("spec", {}).get("config", {"dimension": 2, "points": [[0, 0]]})))
jsonschema.validate(json.loads(cfg.read_text()), config_schema)
res = run("omega", "--config", str(cfg))
check(res.returncode == 0 and json.loads(res.stdout)["results"]["omega"] == 3, "omega from a config file")

# Exit code 2: a failed verdict is not an error.
res = run("nagata", "--n", "2", "--r", "9", "--l-max", "2", "--seed", "1")
check(res.returncode == 2, "nagata r=9: exit 2 on failed strictness verdict")
if res.returncode == 2:
    check(validator.is_valid(json.loads(res.stdout)), "exit-2 report still validates")

# Exit code 1 with a diagnostic naming the field.
for args, field in [
    (["omega", "--r", "3", "--scalar", "complex"], "scalar"),
    (["omega", "--config-json", '{"dimension": 2, "points": [[1, "x"]]}'], "config.points"),
    (["omega", "--config-json", '{"dimension": 2}'], "config.points"),
    (["collide", "--t", "1/2,abc"], "t"),
    (["collide", "--t", "3/2"], "t"),
    (["omega", "--r", "3", "--prime", "15"], "prime"),
    (["omega", "--r", "3", "--format", "xml"], "format"),
    (["schwarz", "--rho", "0"], "rho"),
    (["interval", "--r", "3", "--l-max", "0"], "l-max"),
    (["omega", "--r", "3", "--example", "origin"], "config"),
]:
    res = run(*args)
    check(res.returncode == 1 and field in res.stderr, f"{' '.join(args)}: exit 1 naming '{field}' ({res.stderr.strip()})")
res = run("omega", "--config", str(SCRATCH / "missing.json"))
check(res.returncode == 1, "missing config file: exit 1")
res = run("--help")
check(res.returncode == 0, "--help exits 0")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
