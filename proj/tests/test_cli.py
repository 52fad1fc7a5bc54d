#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: every subcommand runs, output
descriptors round-trip into the commands that consume them, and repeated runs
are byte-identical."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1] if len(sys.argv) > 1 else "build/nichols"

failures = []


def run(*args, expect_code=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures.append(f"{' '.join(args)}: exit {proc.returncode} (expected {expect_code}): {proc.stderr}")
    return proc.stdout


def check(cond, label):
    if not cond:
        failures.append(label)


def main():
    tmp = Path(tempfile.mkdtemp(prefix="nichols_cli_"))

    group = tmp / "group.json"
    group.write_text(json.dumps({"factors": [2, 2, 2]}))

    out = run("group", "--in", str(group), "--hat")
    info = json.loads(out)
    check(info["order"] == 8, "group order")
    check(info["hat"]["factors"] == [4, 4, 4], "hat factors")

    # deterministic byte-identical output
    out2 = run("group", "--in", str(group), "--hat")
    check(out == out2, "group output determinism")

    # cocycles table
    z4 = tmp / "z4.json"
    z4.write_text(json.dumps({"factors": [4]}))
    rows = json.loads(run("cocycles", "--group", str(z4), "--enumerate", "--verify", "--abelian"))
    check(rows["count"] == 4, "Z4 cocycle count")
    check(all(r["cocycle_identity"] and r["abelian"] for r in rows["rows"]), "Z4 rows verified abelian")

    rows = json.loads(run("cocycles", "--group", str(group), "--enumerate", "--abelian"))
    check(rows["count"] == 128, "Z2^3 cocycle count")
    nonabelian = sum(0 if r["abelian"] else 1 for r in rows["rows"])
    check(nonabelian == 64, "Z2^3 nonabelian count")

    # malformed input: exit 2
    bad = tmp / "bad.json"
    bad.write_text("{not json")
    run("group", "--in", str(bad), expect_code=2)
    badrank = tmp / "badrank.json"
    badrank.write_text(json.dumps({"cocycle": {"group": {"factors": [2, 2]}, "c": [0, 0], "c2": [],
                                               "c3": [[1, 2, 3, 1]]},
                                   "degree": [1, 0], "context": [[1, 0], [0, 1]]}))
    run("module", "simple", "--in", str(badrank), expect_code=2)

    # build a diagonal module pair over the trivial cocycle on Z5^2
    phi = {"kind": "trivial", "group": {"factors": [5, 5]}}
    spec1 = tmp / "m1_spec.json"
    spec1.write_text(json.dumps({"cocycle": phi, "degree": [1, 0], "context": [[1, 0], [0, 1]],
                                 "alpha": "1/5", "beta": "4/5"}))
    spec2 = tmp / "m2_spec.json"
    spec2.write_text(json.dumps({"cocycle": phi, "degree": [0, 1], "context": [[0, 1], [1, 0]],
                                 "alpha": "1/5", "beta": "0"}))
    m1 = tmp / "m1.json"
    m2 = tmp / "m2.json"
    run("module", "simple", "--in", str(spec1), "--out", str(m1))
    run("module", "simple", "--in", str(spec2), "--out", str(m2))
    msum = tmp / "sum.json"
    run("module", "sum", "--in", str(m1), str(m2), "--out", str(msum))

    verdict = json.loads(run("classify", "--module", str(msum)))
    check(verdict["verdict"] == "finite", "zeta5 verdict")
    check(verdict["dim_B"] == 125, "zeta5 dimension")
    check(verdict["dim_bosonization"] == 3125, "zeta5 bosonization")
    check(verdict["status"] == 0, "zeta5 status flag")

    oracle = json.loads(run("oracle", "--module", str(msum), "--max-degree", "4"))
    check(oracle["hilbert"] == [1, 2, 4, 6, 9], "zeta5 oracle series")
    check(oracle["degrees"][2] == {"degree": 2, "rank": 4, "kernel_dim": 0}, "zeta5 degree report")

    dot = run("diagram", "--module", str(msum))
    check("graph dynkin" in dot and "1/5" in dot, "diagram dot output")

    dot2 = tmp / "d.dot"
    run("classify", "--module", str(msum), "--dot", str(dot2))
    check(dot2.read_text() == dot, "classify --dot matches diagram")

    # budget exhaustion: exit 3
    run("oracle", "--module", str(msum), "--max-degree", "9", "--budget", "100", expect_code=3)

    # an affine pattern: inconclusive verdict, auxiliary status 1, exit still 0
    phi44 = {"kind": "trivial", "group": {"factors": [4, 4]}}
    cyc_specs = [
        {"degree": [1, 0], "context": [[1, 0], [0, 1]], "alpha": "1/2", "beta": "1/4"},
        {"degree": [1, 0], "context": [[1, 0], [0, 1]], "alpha": "1/2", "beta": "3/4"},
        {"degree": [0, 1], "context": [[0, 1], [1, 0]], "alpha": "1/2", "beta": "0"},
        {"degree": [0, 1], "context": [[0, 1], [1, 0]], "alpha": "1/2", "beta": "1/2"},
    ]
    parts = []
    for k, s in enumerate(cyc_specs):
        s["cocycle"] = phi44
        sp = tmp / f"cyc_spec{k}.json"
        sp.write_text(json.dumps(s))
        mp = tmp / f"cyc{k}.json"
        run("module", "simple", "--in", str(sp), "--out", str(mp))
        parts.append(str(mp))
    cyc4 = tmp / "cyc4.json"
    run("module", "sum", "--in", *parts, "--out", str(cyc4))
    verdict = json.loads(run("classify", "--module", str(cyc4)))
    check(verdict["verdict"] == "inconclusive", "affine cycle verdict")
    check(verdict["status"] == 1, "inconclusive status flag")

    # twist pipeline over Z2 with the nontrivial parameter cocycle
    omega = {"group": {"factors": [2]}, "c": [1], "c2": [], "c3": []}
    omega_path = tmp / "omega.json"
    omega_path.write_text(json.dumps(omega))
    spec3 = tmp / "mod_spec.json"
    spec3.write_text(json.dumps({"cocycle": omega, "degree": [1], "context": [[1]], "alpha": "1/4"}))
    mod = tmp / "mod.json"
    run("module", "simple", "--in", str(spec3), "--out", str(mod))
    base_series = json.loads(run("oracle", "--module", str(mod), "--max-degree", "3"))["hilbert"]

    lifted = tmp / "lifted.json"
    run("change-base", "--module", str(mod), "--out", str(lifted))
    lifted_series = json.loads(run("oracle", "--module", str(lifted), "--max-degree", "3"))["hilbert"]
    check(base_series == lifted_series, "base change preserves the series")

    j = tmp / "j.json"
    run("twist", "solve-j", "--cocycle", str(omega_path), "--out", str(j))
    untwisted = tmp / "untwisted.json"
    run("twist", "apply", "--module", str(lifted), "--cochain", str(j), "--inverse",
        "--out", str(untwisted))
    untwisted_series = json.loads(run("oracle", "--module", str(untwisted), "--max-degree", "3"))["hilbert"]
    check(base_series == untwisted_series, "solved twist preserves the series")

    # solving directly on the base group must fail: the class is nontrivial
    run("twist", "solve-j", "--cocycle", str(omega_path), "--direct", expect_code=2)

    # the emitted twisted module descriptor is consumable again (round trip)
    reread = json.loads(run("classify", "--module", str(untwisted)))
    check(reread["standard_basis"] is True, "twisted module round trip")

    # nondiagonal module: infinite verdict without a standard basis
    z2cubed = {"group": {"factors": [2, 2, 2]}, "c": [0, 0, 0], "c2": [], "c3": [[1, 2, 3, 1]]}

    def swap_entries(phase):
        return [{"col": 0, "row": 1, "phase": phase}, {"col": 1, "row": 0, "phase": phase}]

    def diag_entries(a, b):
        return [{"col": 0, "row": 0, "phase": a}, {"col": 1, "row": 1, "phase": b}]

    u = {"group": {"factors": [2, 2, 2]}, "cocycle": z2cubed, "degrees": [[1, 0, 0], [1, 0, 0]],
         "actions": [diag_entries("1/2", "1/2"), diag_entries("0", "1/2"), swap_entries("0")]}
    v = {"group": {"factors": [2, 2, 2]}, "cocycle": z2cubed, "degrees": [[0, 1, 0], [0, 1, 0]],
         "actions": [swap_entries("1/2"), diag_entries("1/2", "1/2"), diag_entries("0", "1/2")]}
    w = {"group": {"factors": [2, 2, 2]}, "cocycle": z2cubed, "degrees": [[0, 0, 1], [0, 0, 1]],
         "actions": [swap_entries("1/2"), diag_entries("1/2", "0"), diag_entries("1/2", "1/2")]}
    paths = []
    for name, desc in [("u", u), ("v", v), ("w", w)]:
        p = tmp / f"{name}.json"
        p.write_text(json.dumps(desc))
        paths.append(str(p))
    uvw = tmp / "uvw.json"
    run("module", "sum", "--in", *paths, "--out", str(uvw))
    verdict = json.loads(run("classify", "--module", str(uvw)))
    check(verdict["standard_basis"] is False, "nondiagonal: no standard basis")
    check(verdict["verdict"] == "infinite", "nondiagonal verdict")

    series = json.loads(run("oracle", "--module", str(uvw), "--max-degree", "3"))["hilbert"]
    check(all(d > 0 for d in series), "nondiagonal growth")

    # relation file: one vanishing and one surviving adjoint element
    relations = tmp / "relations.json"
    relations.write_text(json.dumps({"relations": [
        {"name": "ad_y1_z2", "expr": {"kind": "ad", "x": 2, "y": 5}},
        {"name": "ad_y1_z1", "expr": {"kind": "ad", "x": 2, "y": 4}},
        {"name": "mixed", "expr": {"kind": "lincomb", "terms": [
            {"phase": "0", "expr": {"kind": "ad", "x": 0, "y": 4}},
            {"phase": "1/2", "expr": {"kind": "ad", "x": 1, "y": 5}}]}},
    ]}))
    rep = json.loads(run("oracle", "--module", str(uvw), "--max-degree", "2",
                         "--relations", str(relations)))
    got = {r["name"]: r["in_ideal"] for r in rep["relations"]}
    check(got == {"ad_y1_z2": True, "ad_y1_z1": False, "mixed": True}, f"relation results {got}")

    if failures:
        print("CLI test failures:")
        for f in failures:
            print("  -", f)
        sys.exit(1)
    print("cli ok")


if __name__ == "__main__":
    main()
