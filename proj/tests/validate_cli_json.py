"""Runs the command-line tool in --json mode and validates every output
against the published schemas. Usage: validate_cli_json.py <qsuper> <schema dir>"""

import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator

CASES = [
    # (arguments, expected exit code, schema name)
    (["nf", "d*a", "--ring", "B"], 0, "nf"),
    (["nf", "a*d + t*b*c"], 0, "nf"),
    (["nf", "zeta^2 - 3/7*s", "--numeric", "q=-2"], 0, "nf"),
    (["delta", "a*b"], 0, "delta"),
    (["delta", "zeta", "--numeric", "q=-1/2"], 0, "delta"),
    (["eps", "a^2 + c"], 0, "eps"),
    (["antipode", "a*b"], 0, "antipode"),
    (["star", "b*s"], 0, "star"),
    (["grade", "b*a"], 0, "grade"),
    (["grade", "a + b"], 0, "grade"),
    (["grade", "0"], 0, "grade"),
    (["pair", "e", "b"], 0, "pair"),
    (["pair", "k*e - f*kinv", "a*b + c"], 0, "pair"),
    (["haar", "zeta"], 0, "haar"),
    (["haar", "zeta", "--numeric", "q=-2"], 0, "haar"),
    (["inner", "a", "a"], 0, "inner"),
    (["inner", "1", "s", "--form", "L"], 0, "inner"),
    (["jacobi", "--n", "2", "--alpha", "1", "--beta", "0"], 0, "jacobi"),
    (["matcoef", "--l", "1", "--i", "0", "--j", "0"], 0, "matcoef"),
    (["matcoef", "--l", "3/2", "--i", "1/2", "--j", "-1/2", "--s", "1", "--source", "closed"], 0, "matcoef"),
    (["gram", "--words", "2"], 0, "gram"),
    (["sphere", "--infinity"], 0, "sphere"),
    (["sphere", "--infinity", "--reading", "printed"], 1, "sphere"),
    (["sphere", "--infinity", "--check", "characters"], 0, "sphere"),
    (["sphere", "--alpha", "1,0,1"], 0, "sphere"),
    (["sphere", "--alpha", "0,1,0", "--check", "basis", "--degree", "2"], 0, "sphere"),
    (["sphere", "--alpha", "1,2,3", "--check", "coideal"], 0, "sphere"),
    (["verify", "--suite", "hopf", "--degree", "2"], 0, "verify"),
    (["verify", "--suite", "qfun", "--degree", "3"], 0, "verify"),
    (["nf", "a*("], 2, "error"),
    (["nf", "foo"], 2, "error"),
    (["nf", "s", "--ring", "B"], 2, "error"),
    (["haar", "a", "--ring", "B"], 2, "error"),
    (["nf", "a", "--ring", "C"], 2, "error"),
    (["sphere", "--alpha", "0,0,0"], 2, "error"),
]


def main():
    exe, schema_dir = sys.argv[1], Path(sys.argv[2])
    validators = {p.name.split(".")[0]: Draft202012Validator(json.loads(p.read_text()))
                  for p in schema_dir.glob("*.schema.json")}
    for v in validators.values():
        Draft202012Validator.check_schema(v.schema)
    failures = 0
    for args, code, schema in CASES:
        proc = subprocess.run([exe, "--json", *args], capture_output=True, text=True, timeout=600)
        label = " ".join(args)
        if proc.returncode != code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {code}\n{proc.stderr}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: output is not JSON ({e})\n{proc.stdout}")
            failures += 1
            continue
        errors = list(validators[schema].iter_errors(doc))
        if errors:
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].absolute_path)}")
            failures += 1
        else:
            print(f"ok   {label}")
    print(f"{len(CASES) - failures}/{len(CASES)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
