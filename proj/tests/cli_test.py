"""End-to-end checks of the arboreal command-line tool.

Usage: cli_test.py <path to arboreal binary>
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]

SEVEN = """# two roots
1
2 a
3 a b
4 a b c
5 a b c b
6 - - c c c
7 - - c c c a
"""

C4 = {"taxa": ["1", "2", "3", "4"], "edges": [["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]]}
G6 = {
    "taxa": ["1", "2", "3", "4", "5", "6"],
    "edges": [[a, b] for a in "123456" for b in "123456" if a < b and ({a, b} <= set("1234") or {a, b} <= set("3456"))],
}

failures = []


def run(*args, stdin=""):
    p = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")


code, out, _ = run("check", stdin=SEVEN)
expect("check arboreal", code == 0 and json.loads(out)["verdict"] == "arboreal", out)

code, out, _ = run("check", stdin="x\ny a\nz b c\n")
doc = json.loads(out)
expect("check delta", code == 1 and doc["violation"]["kind"] == "Delta", out)
expect("check witness", sorted(doc["violation"]["witness"]) == ["x", "y", "z"], out)

code, out, _ = run("ptolemaic", stdin=json.dumps(C4))
doc = json.loads(out)
expect("ptolemaic C4", code == 1 and doc["obstruction"]["kind"] == "hole", out)
expect("ptolemaic C4 witness", sorted(doc["obstruction"]["vertices"]) == ["1", "2", "3", "4"], out)
code, out, _ = run("ptolemaic", stdin=json.dumps(G6))
expect("ptolemaic G6", code == 0, out)

code, out, _ = run("ecc", stdin=json.dumps(G6))
expect("ecc G6", code == 0 and json.loads(out)["ecc"] == 2, out)

code, out, _ = run("represent", "--arboreal", stdin=json.dumps(C4))
expect("represent C4", code == 1, out)
code, rep, _ = run("represent", "--arboreal", stdin=json.dumps(G6))
expect("represent G6", code == 0, rep)
code, out, _ = run("sag", stdin=rep)
expect("sag round trip", code == 0 and json.loads(out)["edges"] == json.loads(json.dumps(G6))["edges"], out)

with tempfile.TemporaryDirectory() as tmp:
    dot = Path(tmp) / "n.dot"
    code, explained, _ = run("explain", "--dot", str(dot), stdin=SEVEN)
    expect("explain", code == 0, explained)
    expect("explain dot", dot.exists() and dot.read_text().startswith("digraph"))
    code, once, _ = run("normalize", stdin=explained)
    code2, twice, _ = run("normalize", stdin=once)
    expect("normalize idempotent", code == 0 and code2 == 0 and once == twice, once + twice)
    code, ev, _ = run("evaluate", "--format", "text", stdin=once)
    expect("evaluate", code == 0 and ev == "".join(l + "\n" for l in SEVEN.splitlines()[1:]), ev)

code, out, err = run("check", stdin='{"taxa": ["a", "b"], "values": [["a", "b", "x"]')
expect("parse error exit", code == 2 and "line" in err, err)
code, out, err = run("check", stdin="x\ny a b\n")
expect("triangular error exit", code == 2 and "line 2" in err, err)
code, _, _ = run("bogus")
expect("unknown verb", code == 2)

code, a, _ = run("gen", "--kind", "labelled", "--seed", "5", "--count", "3")
code2, b, _ = run("gen", "--kind", "labelled", "--seed", "5", "--count", "3")
expect("gen deterministic", code == 0 and a == b and len(a.splitlines()) == 3, a)
for line in a.splitlines():
    c, out, _ = run("evaluate", stdin=line)
    c2, chk, _ = run("check", stdin=out)
    expect("gen evaluate check", c == 0 and c2 == 0, chk)

code, out, _ = run("selftest", "--only", "10", "11")
expect("selftest", code == 0 and out.count("PASS") == 2, out)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("all CLI checks passed")
