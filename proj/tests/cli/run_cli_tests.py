"""Golden-output and exit-code tests for the tassign command line.

usage: run_cli_tests.py TASSIGN CORPUS_DIR GOLDEN_DIR [--update]
"""

import json
import os
import subprocess
import sys
import tempfile

# (golden name or None, expected exit code, arguments)
CASES = [
    ("validate_cp1.txt", 0, ["validate", "{c}/ex_cp1.json"]),
    ("validate_cp1sq.txt", 0, ["validate", "{c}/ex_cp1sq.json"]),
    ("validate_cp1cube.txt", 0, ["validate", "{c}/ex_cp1cube.json"]),
    ("validate_cp1.json", 0, ["validate", "--json", "{c}/ex_cp1.json"]),
    ("validate_cp1sq.json", 0, ["validate", "--json", "{c}/ex_cp1sq.json"]),
    ("validate_cp1cube.json", 0, ["validate", "--json", "{c}/ex_cp1cube.json"]),
    ("check_cp1sq.txt", 1, ["check", "{c}/ex_cp1sq.json", "{c}/f_cp1sq.json"]),
    ("check_cp1cube.txt", 1, ["check", "{c}/ex_cp1cube.json", "{c}/f_cp1cube.json"]),
    ("check_cp1.txt", 0, ["check", "{c}/ex_cp1.json", "{c}/c1_cp1.json"]),
    ("canonical_cp2_s1.txt", 0, ["canonical", "{c}/ex_cp2_s1.json"]),
    ("defect_cp1sq.txt", 0, ["defect", "{c}/ex_cp1sq.json", "--degree", "3"]),
    ("pullback_diagonal.json", 0, ["pullback", "--json", "{c}/diagonal_cp1.json", "{c}/f_cp1sq.json"]),
    (None, 3, ["check", "{c}/ex_cp1.json", "{c}/f_cp1sq.json"]),
    (None, 2, ["basis", "{c}/ex_cp1.json"]),
    (None, 2, ["validate", "{c}/ex_cp1.json", "--xi", "0,1"]),
    (None, 2, ["no-such-command"]),
]


def run(tool, args):
    return subprocess.run([tool] + args, capture_output=True, text=True)


def check_basis_round_trip(tool, corpus):
    """Every basis element printed by `basis --json` is accepted by `check`."""
    proc = run(tool, ["basis", "--json", "--degree", "1", os.path.join(corpus, "ex_cp1xcp1_gkm.json")])
    if proc.returncode != 0:
        return ["basis exited %d: %s" % (proc.returncode, proc.stderr.strip())]
    doc = json.loads(proc.stdout)
    errors = []
    with tempfile.TemporaryDirectory() as tmp:
        for i, element in enumerate(doc["basis"]):
            path = os.path.join(tmp, "b%d.json" % i)
            with open(path, "w") as fh:
                json.dump(element, fh)
            p = run(tool, ["check", os.path.join(corpus, "ex_cp1xcp1_gkm.json"), path])
            if p.returncode != 0:
                errors.append("basis element %d: check exited %d" % (i, p.returncode))
    if len(doc["basis"]) != doc["dimension"]:
        errors.append("basis length %d != dimension %d" % (len(doc["basis"]), doc["dimension"]))
    return errors


def main():
    tool, corpus, golden = sys.argv[1:4]
    update = "--update" in sys.argv[4:]
    errors = []
    for name, code, args in CASES:
        args = [a.replace("{c}", corpus) for a in args]
        proc = run(tool, args)
        label = " ".join(os.path.basename(a) for a in args)
        if proc.returncode != code:
            errors.append("%s: exit %d, expected %d\n%s" % (label, proc.returncode, code, proc.stderr))
            continue
        if name is None:
            continue
        path = os.path.join(golden, name)
        if update:
            with open(path, "w") as fh:
                fh.write(proc.stdout)
            continue
        with open(path) as fh:
            want = fh.read()
        if proc.stdout != want:
            errors.append("%s: output differs from %s\n--- got\n%s--- want\n%s" % (label, name, proc.stdout, want))
    errors += check_basis_round_trip(tool, corpus)
    for e in errors:
        print("FAIL", e)
    print("%d cases, %d failures" % (len(CASES) + 1, len(errors)))
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
