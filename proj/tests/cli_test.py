"""End-to-end checks of the epsnet command line tool.

usage: cli_test.py EPSNET {exit-codes|golden|schema|determinism} [--update]
"""
import json
import os
import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

HERE = Path(__file__).resolve().parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
SCHEMA = HERE.parent / "schemas" / "report.schema.json"

# name, arguments, expected exit code, files written besides the report
CASES = [
    ("construct_boxes1", ["construct", "--ranges", "boxes", "--size", "1", "--eps", "1/2", "--input", "random70.json",
                          "--verify"], 0, []),
    ("construct_boxes2", ["construct", "--ranges", "boxes", "--size", "2", "--eps", "3/7,4/7", "--input",
                          "random70.json", "--verify", "--svg", "boxes2.svg"], 0, ["boxes2.svg"]),
    ("construct_boxes3", ["construct", "--ranges", "boxes", "--size", "3", "--eps", "3/8,1/2,5/8", "--input",
                          "random70.json", "--verify"], 0, []),
    ("construct_convex2", ["construct", "--ranges", "convex", "--size", "2", "--eps", "3/5,4/5", "--input",
                           "random10.json", "--verify", "--svg", "convex2.svg"], 0, ["convex2.svg"]),
    ("construct_convex_bad_eps", ["construct", "--ranges", "convex", "--size", "2", "--eps", "1/2,4/5", "--input",
                                  "random10.json"], 2, []),
    ("construct_bad_number", ["construct", "--ranges", "boxes", "--size", "2", "--eps", "3/7,x", "--input",
                              "random70.json"], 2, []),
    ("construct_missing_input", ["construct", "--ranges", "boxes", "--size", "1", "--eps", "1/2", "--input",
                                 "nothing.json"], 2, []),
    ("verify_median", ["verify", "--input", "random70.json", "--net", "median_net.json", "--eps", "1/2", "--ranges",
                       "boxes"], 0, []),
    ("verify_far", ["verify", "--input", "random70.json", "--net", "far_net.json", "--eps", "1/2", "--ranges", "boxes",
                    "--adversarial", "200,7"], 3, []),
    ("verify_budget", ["verify", "--input", "random30.json", "--net", "far_net.json", "--eps", "3/5", "--ranges",
                       "convex"], 4, []),
    ("gadget_hexagon", ["gadget", "--name", "hexagon3d", "--out", "hexagon.json", "--svg", "hexagon.svg",
                        "--certify"], 0, ["hexagon.json", "hexagon.claims.json", "hexagon.svg"]),
    ("gadget_simplex4", ["gadget", "--name", "simplex", "--dim", "4", "--out", "simplex4.json", "--certify"], 0,
     ["simplex4.json", "simplex4.claims.json"]),
    ("gadget_five2", ["gadget", "--name", "five-clusters", "--k", "2", "--out", "five2.json", "--svg", "five2.svg",
                      "--certify"], 0, ["five2.json", "five2.claims.json", "five2.svg"]),
    ("gadget_five_bad_delta", ["gadget", "--name", "five-clusters", "--k", "2", "--delta", "3", "--out",
                               "bad.json"], 2, []),
    ("search_boxes1", ["search", "--ranges", "boxes", "--size", "1", "--input", "small12.json"], 0, []),
    ("search_boxes1_grid16", ["search", "--ranges", "boxes", "--size", "1", "--input", "small12.json",
                              "--candidates", "grid:16"], 0, []),
    ("search_boxes1_grid64", ["search", "--ranges", "boxes", "--size", "1", "--input", "small12.json",
                              "--candidates", "grid:64"], 0, []),
    ("search_convex_hexagon", ["search", "--ranges", "convex", "--size", "2", "--input", "hexagon_xy.json"], 0, []),
]


def run_all(epsnet, workdir, threads):
    for f in DATA.glob("*.json"):
        shutil.copy(f, workdir / f.name)
    env = dict(os.environ, EPSNET_THREADS=str(threads))
    out = {}
    for name, args, _, files in CASES:
        p = subprocess.run([epsnet] + args, cwd=workdir, env=env, capture_output=True, text=True, timeout=600)
        written = {f: (workdir / f).read_bytes() for f in files}
        out[name] = (p.returncode, p.stdout, p.stderr, written)
    return out


def fail(msg):
    print("FAIL:", msg)
    return 1


def check_exit_codes(results):
    bad = 0
    for name, args, code, _ in CASES:
        got, stdout, stderr, _ = results[name]
        if got != code:
            bad += fail(f"{name}: exit {got}, expected {code}\n{stderr}")
            continue
        report = json.loads(stdout)
        if report["exit_code"] != got:
            bad += fail(f"{name}: report exit_code {report['exit_code']} but process exited {got}")
    reports = {name: json.loads(r[1]) for name, r in results.items()}

    msg = reports["construct_convex_bad_eps"]["message"]
    if "(ii)" not in msg or "1/2 < 3/5" not in msg:
        bad += fail(f"condition message does not name (ii): {msg}")
    if "54627300" not in reports["verify_budget"]["message"]:
        bad += fail("budget message lacks the required count")
    far = reports["verify_far"]["verification"]
    if not far["violations"] or far["violations"][0]["range"]["type"] != "box":
        bad += fail("far net report has no witness box")
    for name in ("construct_boxes1", "construct_boxes2", "construct_boxes3", "construct_convex2"):
        v = reports[name]["verification"]
        if not v["passed"] or any(not lv["pass"] for lv in v["levels"]):
            bad += fail(f"{name}: verification did not pass")
    for name in ("gadget_hexagon", "gadget_simplex4", "gadget_five2"):
        claims = reports[name]["verification"]["claims"]
        if not claims or not all(c["pass"] for c in claims):
            bad += fail(f"{name}: some claim failed")
    five = {c["kind"] for c in reports["gadget_five2"]["verification"]["claims"]}
    if "NotTwoPierceable" not in five:
        bad += fail("five-cluster report lacks the piercing claim")

    def best_eps1(name):
        r = reports[name]
        if r.get("empirical") is not True:
            raise AssertionError(f"{name} not labelled empirical")
        return Fraction(r["best"]["profile"][0])

    if best_eps1("search_boxes1") > Fraction(1, 2):
        bad += fail("size-1 box search found nothing at 1/2")
    if best_eps1("search_boxes1_grid64") > best_eps1("search_boxes1_grid16"):
        bad += fail("grid:64 is worse than grid:16")
    if best_eps1("search_convex_hexagon") < Fraction(5, 8) - Fraction(1, 8):
        bad += fail("hexagon projection search beat 5/8 - 1/n")
    return bad


def check_golden(results, update):
    bad = 0
    GOLDEN.mkdir(exist_ok=True)
    for name, _, _, files in CASES:
        _, stdout, _, written = results[name]
        pinned = {name + ".json": stdout.encode()}
        for f, data in written.items():
            if f.endswith(".svg"):
                pinned[name + "." + f] = data
        for fname, data in pinned.items():
            path = GOLDEN / fname
            if update:
                path.write_bytes(data)
            elif not path.exists():
                bad += fail(f"missing golden file {fname}")
            elif path.read_bytes() != data:
                bad += fail(f"{fname} differs from the golden copy")
    return bad


def check_schema(results):
    import jsonschema

    schema = json.loads(SCHEMA.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    for name, (_, stdout, _, _) in results.items():
        errors = list(validator.iter_errors(json.loads(stdout)))
        for e in errors[:3]:
            bad += fail(f"{name}: {e.message} at {list(e.absolute_path)}")
    for f in GOLDEN.glob("*.json"):
        for e in list(validator.iter_errors(json.loads(f.read_text())))[:3]:
            bad += fail(f"golden {f.name}: {e.message}")
    # a report whose status and exit code disagree must be rejected
    doctored = json.loads(results["verify_far"][1])
    doctored["exit_code"] = 0
    if validator.is_valid(doctored):
        bad += fail("schema accepts a failed report with exit code 0")
    return bad


def check_determinism(epsnet, tmp):
    a_dir, b_dir, c_dir = (tmp / x for x in ("a", "b", "c"))
    for d in (a_dir, b_dir, c_dir):
        d.mkdir()
    runs = [run_all(epsnet, a_dir, 1), run_all(epsnet, b_dir, 4), run_all(epsnet, c_dir, 4)]
    bad = 0
    for name, *_ in CASES:
        first = runs[0][name]
        for other in runs[1:]:
            if other[name][:2] != first[:2]:
                bad += fail(f"{name}: report or exit code differs between runs")
            if other[name][3] != first[3]:
                bad += fail(f"{name}: written files differ between runs")
    return bad


def main():
    epsnet, mode = str(Path(sys.argv[1]).resolve()), sys.argv[2]
    update = "--update" in sys.argv
    with tempfile.TemporaryDirectory() as t:
        tmp = Path(t)
        if mode == "determinism":
            bad = check_determinism(epsnet, tmp)
        else:
            results = run_all(epsnet, tmp, 2)
            if mode == "exit-codes":
                bad = check_exit_codes(results)
            elif mode == "golden":
                bad = check_golden(results, update)
            elif mode == "schema":
                bad = check_schema(results)
            else:
                raise SystemExit(f"unknown mode {mode}")
    print(f"{mode}: {'ok' if bad == 0 else str(bad) + ' problems'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
