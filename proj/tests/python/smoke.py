"""Smoke tests for the python module and the CLI binary."""

import json
import subprocess
import sys

import polyalg

RING = [[0, 0], [1, 0], [2, 0], [0, 1], [2, 1], [0, 2], [1, 2], [2, 2]]


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def module_smoke():
    ring = polyalg.Polyomino(RING)
    check(ring.rank == 8, "ring rank")
    check(ring.num_vertices == 16, "ring vertex count")
    check(ring.ascii() == "###\n#.#\n###", "ring ascii")

    check(polyalg.rook_polynomial(ring) == [1, 8, 16, 8, 1], "ring rook polynomial")
    check(polyalg.rook_number(ring) == 4, "ring rook number")

    cls = polyalg.classify(ring)
    check(not cls["is_simple"] and cls["is_thin"], "ring classification")
    check(cls["is_closed_path"] and cls["is_prime_closed_path"], "ring closed path")

    inv = polyalg.invariants(ring)
    check(inv["h"] == [1, 8, 16, 8, 1], "ring h")
    check(inv["krull_dim"] == 8 and inv["regularity"] == 4, "ring dim/reg")
    check(inv["gorenstein"] and inv["methods_agree"], "ring gorenstein/agreement")

    num, denom = polyalg.hilbert_series(polyalg.Polyomino([[0, 0]]))
    check(num == [1, 1] and denom == 3, "single cell series")

    rings = polyalg.generate(max_rank=12, closed_paths=True)
    check(len(rings) == 5, "closed paths up to rank 12")
    check(polyalg.generate(max_rank=7, closed_paths=True) == [], "no small closed paths")

    tromino = polyalg.Polyomino.parse("##\n#.")
    check(polyalg.invariants(tromino)["h"] == [1, 3, 1], "tromino h")

    try:
        polyalg.Polyomino([[0, 0], [5, 5]])
        check(False, "disconnected input must raise")
    except polyalg.PolyalgError:
        pass


def cli_smoke(binary):
    grid = "###\n#.#\n###"

    out = subprocess.run([binary, "invariants", "--json"], input=grid,
                         capture_output=True, text=True)
    check(out.returncode == 0, "invariants exit code")
    doc = json.loads(out.stdout)
    check(doc["schema_version"] == 1, "schema version")
    check(doc["invariants"]["h"] == [1, 8, 16, 8, 1], "cli h")
    check(doc["invariants"]["gorenstein"] is True, "cli gorenstein")

    out2 = subprocess.run([binary, "render", "--ascii"], input=grid,
                          capture_output=True, text=True)
    check(out2.stdout.strip() == grid, "render round trip")

    gen = subprocess.run([binary, "generate", "--closed-paths", "--max-rank", "8", "--json"],
                         capture_output=True, text=True)
    lines = [l for l in gen.stdout.splitlines() if l.strip()]
    check(len(lines) == 1, "one closed path at rank 8")
    cells = json.loads(lines[0])["cells"]
    inv = subprocess.run([binary, "invariants", "--json"], input=json.dumps({"cells": cells}),
                         capture_output=True, text=True)
    check(json.loads(inv.stdout)["invariants"]["methods_agree"] is True, "generated ring agrees")

    bad = subprocess.run([binary, "invariants"], input="#.#", capture_output=True, text=True)
    check(bad.returncode == 2, "disconnected input exits 2")

    svg = subprocess.run([binary, "render", "--svg", "--rooks", "1,0;0,1;2,1;1,2"],
                         input=grid, capture_output=True, text=True)
    check(svg.stdout.count("<rect") == 8 and svg.stdout.count("<circle") == 4, "svg structure")


def main():
    module_smoke()
    if len(sys.argv) > 1:
        cli_smoke(sys.argv[1])
    print("smoke ok")


if __name__ == "__main__":
    main()
