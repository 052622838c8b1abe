"""Runs one CLI case from cases.json and compares stdout with its golden file."""
import argparse
import json
import os
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
DATA = HERE.parent / "data"
GOLDEN = DATA / "golden"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--exe", required=True)
    ap.add_argument("--case", required=True)
    ap.add_argument("--update", action="store_true")
    args = ap.parse_args()

    cases = {c["name"]: c for c in json.loads((HERE / "cases.json").read_text())}
    case = cases[args.case]
    env = dict(os.environ)
    env.pop("SATROUTE_BUDGET", None)
    env.update(case.get("env", {}))
    proc = subprocess.run([str(Path(args.exe).resolve()), *case["args"]], cwd=DATA, env=env,
                          capture_output=True, text=True, timeout=300)

    failures = []
    want_exit = case.get("exit", 0)
    if proc.returncode != want_exit:
        failures.append(f"exit code {proc.returncode}, expected {want_exit}")
    if "stderr" in case and case["stderr"] not in proc.stderr:
        failures.append(f"stderr lacks {case['stderr']!r}: {proc.stderr!r}")
    if proc.returncode != 0:
        for line in proc.stderr.splitlines():
            try:
                json.loads(line)
            except ValueError:
                failures.append(f"stderr line is not JSON: {line!r}")

    golden = GOLDEN / f"{args.case}.out"
    if args.update:
        golden.write_text(proc.stdout)
    elif not golden.exists():
        failures.append(f"missing golden {golden}")
    elif golden.read_text() != proc.stdout:
        failures.append(f"stdout differs from {golden.name}:\n{proc.stdout}")

    for f in failures:
        print("FAIL", args.case, f)
    if failures:
        sys.exit(1)
    print("ok", args.case)


if __name__ == "__main__":
    main()
