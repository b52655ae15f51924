#!/usr/bin/env python3
"""Check solver output against a DIMACS CNF file.

    check_model.py FORMULA.cnf OUTPUT.txt      verify one saved run
    check_model.py --solver PATH --self-test   run the solver on generated
                                               instances and verify each model

Exit status is 0 when every "s SATISFIABLE" answer comes with a "v" model
that satisfies its formula, 1 otherwise.
"""

import argparse
import os
import random
import subprocess
import sys
import tempfile


def read_cnf(path):
    clauses, clause, num_vars = [], [], 0
    with open(path) as f:
        for line in f:
            tokens = line.split()
            if not tokens or tokens[0].startswith("c"):
                continue
            if tokens[0].startswith("%"):
                break
            if tokens[0] == "p":
                num_vars = int(tokens[2])
                continue
            for token in tokens:
                k = int(token)
                if k == 0:
                    clauses.append(clause)
                    clause = []
                else:
                    clause.append(k)
    return num_vars, clauses


def check_output(cnf_path, output):
    num_vars, clauses = read_cnf(cnf_path)
    status = [l for l in output.splitlines() if l.startswith("s ")]
    if status == ["s UNKNOWN"]:
        return True, "unknown"
    if status != ["s SATISFIABLE"]:
        return False, "bad status lines %r" % status
    model, terminated = {}, False
    for line in output.splitlines():
        if not line.startswith("v"):
            continue
        for token in line[1:].split():
            k = int(token)
            if k == 0:
                terminated = True
            elif abs(k) in model:
                return False, "variable %d assigned twice" % abs(k)
            else:
                model[abs(k)] = k > 0
    if not terminated:
        return False, "model not terminated by 0"
    if sorted(model) != list(range(1, num_vars + 1)):
        return False, "model does not cover all variables"
    for i, clause in enumerate(clauses):
        if not any(model[abs(k)] == (k > 0) for k in clause):
            return False, "clause %d falsified" % (i + 1)
    return True, "model verified"


def planted(rng, n, m, k=3):
    hidden = [None] + [rng.random() < 0.5 for _ in range(n)]
    clauses = []
    while len(clauses) < m:
        vs = rng.sample(range(1, n + 1), k)
        clause = [v if rng.random() < 0.5 else -v for v in vs]
        if any(hidden[abs(l)] == (l > 0) for l in clause):
            clauses.append(clause)
    return n, clauses


def self_test(solver):
    rng = random.Random(2024)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        cases = [(1, [[1]]), (2, [[1, 2], [-1]]), (3, [])]
        cases += [planted(rng, n, int(4 * n)) for n in (20, 50, 100, 150)]
        for i, (n, clauses) in enumerate(cases):
            path = os.path.join(tmp, "case%d.cnf" % i)
            with open(path, "w") as f:
                f.write("p cnf %d %d\n" % (n, len(clauses)))
                for c in clauses:
                    f.write(" ".join(map(str, c)) + " 0\n")
            for extra in ([], ["--copies", "4"], ["--copies", "2", "--threads", "2"]):
                run = subprocess.run([solver, path] + extra, capture_output=True, text=True)
                ok, why = check_output(path, run.stdout)
                ok = ok and run.returncode == 10 and why == "model verified"
                print("%s case%d %s: exit %d, %s" % ("ok  " if ok else "FAIL", i,
                                                    " ".join(extra), run.returncode, why))
                failures += not ok
    return failures == 0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("files", nargs="*")
    parser.add_argument("--solver")
    parser.add_argument("--self-test", action="store_true")
    args = parser.parse_args()
    if args.self_test:
        if not args.solver:
            parser.error("--self-test needs --solver")
        return 0 if self_test(args.solver) else 1
    if len(args.files) != 2:
        parser.error("expected FORMULA and OUTPUT")
    with open(args.files[1]) as f:
        ok, why = check_output(args.files[0], f.read())
    print(why)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
