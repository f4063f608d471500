"""Exit codes, determinism and JSON round trips of the lf command."""
import json
import os
import pathlib
import subprocess
import sys
import tempfile

cli = sys.argv[1]
root = pathlib.Path(sys.argv[2])
failures = 0


def run(*args, env=None):
    return subprocess.run([cli, *args], capture_output=True, text=True, env={**os.environ, **(env or {})})


def expect(label, ok, detail=""):
    global failures
    failures += not ok
    print(("ok   " if ok else "FAIL ") + label + ("" if ok else f": {detail}"))


def code(label, want, *args, env=None):
    r = run(*args, env=env)
    expect(f"{label} exits {want}", r.returncode == want, f"got {r.returncode}; {r.stderr.strip()}")
    return r


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    def write(name, data):
        p = tmp / name
        p.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return str(p)

    code("P2 check", 0, "check", "P2")
    code("unknown fixture", 2, "check", "no-such-fixture")
    code("unknown option", 2, "period", "P2", "--bogus")
    code("malformed json", 2, "period", write("bad.json", "{"))
    code("term budget", 3, "period", "Q38989", "-k", "10", env={"LF_MAX_TERMS": "10"})

    fx = json.loads((root / "fixtures" / "Q38989.json").read_text())
    fx["scaffolding"]["struts"][0]["chi"] = [5]
    code("broken scaffolding", 4, "check", write("broken.json", fx))

    fx = json.loads((root / "fixtures" / "cubic3.json").read_text())
    fx["expected"]["degree"]["value"] = "25"
    r = code("wrong expected degree", 5, "check", write("wrong.json", fx))
    expect("mismatch shows expected and actual", "expected: 25" in r.stdout and "actual:   24" in r.stdout, r.stdout)

    # order of fixtures in the output and the exit code do not depend on the thread count
    one = run("check", "--all", "-j", "1")
    four = run("check", "--all", "-j", "4")
    expect("check --all deterministic across threads", one.stdout == four.stdout and one.returncode == four.returncode)
    expect("check --all exit code is the first failure", one.returncode == 5, one.returncode)

    r = run("--format", "json", "period", "P2")
    expect("P2 period", json.loads(r.stdout) == [1, 0, 0, 6, 0, 0, 90, 0, 0, 1680, 0], r.stdout)
    text = run("period", "P2").stdout.split()
    expect("text and json periods agree", [int(x) for x in text] == json.loads(r.stdout))

    # invert output feeds back in as a model
    inv = json.loads(run("--format", "json", "invert", "Q38989").stdout)
    model = write("model.json", inv["model"])
    a = json.loads(run("--format", "json", "period", model, "--mode", "quantum-ci").stdout)
    b = json.loads(run("--format", "json", "period", "Q38989", "--mode", "quantum-ci").stdout)
    expect("invert model round-trips into period", a == b, f"{a} vs {b}")
    expect("invert anticanonical", inv["anticanonical"] == [2, 3], inv["anticanonical"])

    g = json.loads(run("--format", "json", "graph", "P2", "--depth", "0").stdout)
    expect("depth-zero graph has one vertex", len(g["vertices"]) == 1 and not g["edges"], g)
    dot = tmp / "g.dot"
    code("graph with dot output", 0, "graph", "P2", "--depth", "1", "--dot", str(dot))
    expect("dot file written", dot.exists() and dot.read_text().startswith("graph"), dot.read_text()[:40] if dot.exists() else "")

    cands = json.loads(run("--format", "json", "mutate", "P2").stdout)
    expect("mutation candidates listed", len(cands) > 0)
    datum = write("datum.json", {"w": cands[0]["w"], "a": cands[0]["a"]})
    m = json.loads(run("--format", "json", "mutate", "P2", "--datum", datum).stdout)
    expect("explicit datum matches the listing", m == cands[0]["result"])

sys.exit(1 if failures else 0)
