import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

exe, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
data = root / "data"
failures = 0


def run(args, code=0):
    global failures
    first = subprocess.run([exe, *args], capture_output=True, text=True)
    second = subprocess.run([exe, *args], capture_output=True, text=True)
    if first.returncode != code:
        print(f"FAIL exit {first.returncode} != {code}: {' '.join(args)}\n{first.stderr}")
        failures += 1
    if first.stdout != second.stdout:
        print(f"FAIL nondeterministic output: {' '.join(args)}")
        failures += 1
    return first.stdout


def validate(schema, text, args):
    global failures
    errors = list(Draft202012Validator(schemas[schema], registry=registry).iter_errors(json.loads(text)))
    for e in errors:
        print(f"FAIL {schema} on {' '.join(args)}: {e.message}")
    failures += len(errors)
    if not errors:
        print(f"ok {schema}: {' '.join(args)}")


def check_json(schema, args, code=0):
    out = run(args, code)
    validate(schema, out.strip().splitlines()[-1], args)
    return out


trefoil = str(data / "diagrams/trefoil.pd")
fig8 = str(data / "diagrams/figure8.pd")
torus = str(data / "templates/torus2.tmpl")
twobridge = str(data / "templates/twobridge.tmpl")

check_json("polynomial.schema.json", ["jones", "--n", "1", trefoil])
check_json("polynomial.schema.json", ["--format", "json", "bracket", fig8])
check_json("polynomial.schema.json", ["bracket", "--n", "2", str(data / "diagrams/unknot.pd")])
check_json("colored_jones.schema.json", ["--format", "json", "colored-jones", "--n", "1..3", "--reduced", trefoil])
check_json("kh.schema.json", ["--format", "json", "kh", trefoil])
check_json("kh.schema.json", ["--format", "json", "kh", "--k", "4", torus])
for ktg in sorted((data / "ktg").glob("*.ktg")):
    check_json("reduce_ktg.schema.json", ["--format", "json", "reduce-ktg", str(ktg)])
out = check_json("asymptote.schema.json", ["asymptote", "--template", twobridge, "--n", "2..8"])
if not out.startswith("n,abs_value,rate,target,rate_alt\n2,"):
    print("FAIL asymptote csv header")
    failures += 1
check_json("asymptote.schema.json", ["--format", "json", "asymptote", "--octahedron", "--n", "10,20"])
check_json("fusion_check.schema.json", ["--format", "json", "fusion-check", "--template", torus, "--n", "2", "--k", "3"])

run(["kh", "--max-crossings", "4", str(data / "diagrams/nonsense.pd")], 2)
run(["jones", "--n", "1", str(data / "diagrams/missing.pd")], 2)
run(["frobnicate"], 2)
run(["kh", "--max-crossings", "4", "--k", "6", torus], 1)
stab = run(["stabilize", "--template", torus, "--k", "2..5"])
if stab.splitlines()[0] != "k,m,shift_i,shift_j" or len(stab.splitlines()) != 4:
    print("FAIL stabilize csv")
    failures += 1

print(f"{failures} failures")
sys.exit(1 if failures else 0)
