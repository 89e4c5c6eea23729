"""End-to-end checks of the rstack command line tool."""

import json
import os
import re
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def check(name, ok, detail=""):
    print(("ok   " if ok else "FAIL ") + name + ("" if ok else ": " + detail))
    if not ok:
        failures.append(name)


def generate(tmp, name, *args):
    path = os.path.join(tmp, name)
    res = run("generate", *args, "-o", path)
    check("generate " + " ".join(args), res.returncode == 0, res.stderr)
    return path


def lines(path):
    with open(path) as f:
        return f.read().splitlines()


def text_tuple(report, label):
    m = re.search(r"^" + re.escape(label) + r" = \((.*)\)$", report, re.M)
    return [int(x) for x in m.group(1).split(", ")] if m else None


with tempfile.TemporaryDirectory() as tmp:
    k37 = generate(tmp, "k37.txt", "kuhnel-lassmann", "3", "7")
    k35 = generate(tmp, "k35.txt", "kuhnel-lassmann", "3", "5")
    kn41 = generate(tmp, "kn41.txt", "klee-novik", "4", "1")
    kn61 = generate(tmp, "kn61.txt", "klee-novik", "6", "1")
    join = generate(tmp, "join.txt", "join-boundaries", "2", "2")
    s3 = generate(tmp, "s3.txt", "simplex-boundary", "3")
    check("kuhnel-lassmann 3 7 has 7 facets", len(lines(k37)) == 7)
    check("klee-novik 4 1 has 8 facets", len(lines(kn41)) == 8)
    check("join-boundaries 2 2 has 9 facets", len(lines(join)) == 9)

    res = run("analyze", k37)
    check("analyze K(3,7) exit", res.returncode == 0, res.stderr)
    check("analyze K(3,7) h''", "h'' = (1, 4, 0, 0)" in res.stdout, res.stdout)
    check("analyze K(3,7) 1-stacked", "1-stacked: yes" in res.stdout, res.stdout)

    res = run("analyze", s3)
    check("analyze sphere", "homology sphere: yes" in res.stdout and "g~ = (1, 0)" in res.stdout, res.stdout)

    res = run("analyze", join, "--max-r", "2")
    check("analyze join", "locally 1-stacked: yes; 1-stacked: no" in res.stdout, res.stdout)

    res = run("check-stacked", k37, "--r", "2", "--mode", "with-boundary")
    check("check-stacked K(3,7)", res.returncode == 0, res.stdout + res.stderr)
    res = run("check-stacked", join, "--r", "2", "--mode", "closed")
    check("check-stacked join", res.returncode == 1, res.stdout + res.stderr)
    res = run("check-stacked", k37, "--r", "2", "--mode", "closed")
    check("check-stacked mode mismatch", res.returncode == 2 and "closed" in res.stderr, res.stderr)

    db61 = os.path.join(tmp, "db61.txt")
    res = run("boundary", kn61, "-o", db61)
    check("boundary of B(6,1)", res.returncode == 0, res.stderr)
    res = run("check-stacked", db61, "--r", "2", "--mode", "closed")
    check("check-stacked boundary B(6,1)", res.returncode == 0 and "witness: 12 facets" in res.stdout,
          res.stdout + res.stderr)
    res = run("check-stacked", db61, "--r", "2")
    check("check-stacked auto mode", res.returncode == 0 and "mode: closed" in res.stdout, res.stdout)

    res = run("reconstruct", db61, "--r", "2")
    check("reconstruct B(6,1)", res.stdout == open(kn61).read(), res.stdout)
    res = run("boundary", k35)
    check("boundary of K(3,5) has 5 edges", res.returncode == 0 and len(res.stdout.splitlines()) == 5, res.stdout)
    res = run("reconstruct", s3, "--r", "3")
    check("reconstruct sphere with r = dim + 1", res.stdout == open(s3).read(), res.stdout)

    a = run("generate", "stacked-sphere", "4", "12", "--seed", "9").stdout
    b = run("generate", "stacked-sphere", "4", "12", "--seed", "9").stdout
    c = run("generate", "stacked-sphere", "4", "12", "--seed", "10").stdout
    check("stacked-sphere is deterministic", a == b and a != c)
    sphere = os.path.join(tmp, "sphere.txt")
    open(sphere, "w").write(a)
    r1 = run("reconstruct", sphere, "--r", "1").stdout
    r2 = run("reconstruct", sphere, "--r", "1").stdout
    check("reconstruct is deterministic", r1 == r2 and r1)
    j1 = run("analyze", sphere, "--format", "json").stdout
    j2 = run("analyze", sphere, "--format", "json", "--serial").stdout
    check("serial and parallel reports agree", j1 == j2)

    res = run("analyze", os.path.join(tmp, "missing.txt"))
    check("missing file exits 2", res.returncode == 2, res.stderr)
    bad = os.path.join(tmp, "bad.txt")
    open(bad, "w").write("1 2 2\n")
    res = run("analyze", bad)
    check("duplicate vertex exits 2", res.returncode == 2 and "duplicate" in res.stderr, res.stderr)
    empty = os.path.join(tmp, "empty.txt")
    open(empty, "w").write("# nothing\n")
    check("empty file exits 2", run("analyze", empty).returncode == 2)
    check("bad generator params exit 2", run("generate", "klee-novik", "4", "5").returncode == 2)
    check("unknown family exits 2", run("generate", "torus", "3").returncode == 2)
    check("bad field exits 2", run("analyze", k37, "--field", "gf:4").returncode == 2)
    res = run("reconstruct", join, "--r", "1", env={"RSTACK_SEARCH_CAP": "2"})
    check("size guard exits 2", res.returncode == 2 and "size guard" in res.stderr, res.stderr)

    res = run("analyze", k37, "--field", "gf2")
    check("analyze over GF(2)", res.returncode == 0 and "field: GF(2)" in res.stdout, res.stdout)

    labelled = os.path.join(tmp, "labelled.txt")
    open(labelled, "w").write("# triangle boundary\nx y\ny z\nz x\n")
    res = run("analyze", labelled)
    check("symbolic labels are echoed", "labels: x->1 y->2 z->3" in res.stdout, res.stdout)

    for path in (k37, kn41, join, s3, db61, labelled, sphere):
        res = run("analyze", path, "--format", "json")
        name = os.path.basename(path)
        try:
            report = json.loads(res.stdout)
            jsonschema.validate(report, SCHEMA)
            valid = True
        except (ValueError, jsonschema.ValidationError) as e:
            valid = False
            check("json schema " + name, False, str(e)[:500])
            continue
        check("json schema " + name, valid)
        text = run("analyze", path).stdout
        same = all(text_tuple(text, label) == report["vectors"][key]
                   for label, key in (("f", "f"), ("h", "h"), ("h'", "h_prime"), ("h''", "h_double_prime"),
                                      ("g", "g"), ("g~", "g_tilde")))
        check("text and json agree " + name, same)

print("%d failure(s)" % len(failures))
sys.exit(1 if failures else 0)
