#!/usr/bin/env python3
"""Regenerate data/golden/*.json from data/corpus with sympy.

Usage: tools/make_goldens.py [--check]
"""
import argparse
import json
import sys
from fractions import Fraction
from itertools import product
from math import lcm
from pathlib import Path

import sympy as sp

DATA = Path(__file__).resolve().parent.parent / "data"


def parse(text):
    lines = [l for l in text.strip().splitlines() if l.strip()]
    names = None
    if lines[0].startswith("vars:"):
        names = lines[0][5:].split()
        lines = lines[1:]
    expr = sp.sympify(" ".join(lines).replace("^", "**"), rational=True)
    if names is None:
        found = sorted(expr.free_symbols, key=lambda s: text.index(s.name))
        names = [s.name for s in found]
    return [sp.Symbol(n) for n in names], expr


def weights(gens, f):
    # Solve sum_i q_i a_i = 1 over all monomials of f.
    q = sp.symbols(f"q0:{len(gens)}")
    eqs = [sum(qi * a for qi, a in zip(q, m)) - 1 for m in sp.Poly(f, *gens).monoms()]
    sol = sp.solve(eqs, q, dict=True)
    if len(sol) != 1 or len(sol[0]) != len(gens):
        raise ValueError("weights are not determined")
    return [Fraction(str(sol[0][qi])) for qi in q]


def standard_monomials(gens, f):
    jac = [sp.diff(f, g) for g in gens]
    gb = sp.groebner(jac, *gens, order="grevlex", domain=sp.QQ)
    leads = [sp.Poly(p, *gens).monoms(order="grevlex")[0] for p in gb.exprs]
    bound = [0] * len(gens)
    for lm in leads:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            bound[support[0]] = lm[support[0]]
    if 0 in bound:
        raise ValueError("not an isolated singularity")

    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    return [m for m in product(*(range(b) for b in bound)) if not any(divides(lm, m) for lm in leads)]


def case_label(d, n):
    N = n + 2
    if d > N:
        return "GreaterThan"
    if d == N:
        return "CalabiYau"
    return "DividesProperly" if N % d == 0 else "LessNotDividing"


def golden(case, text):
    gens, f = parse(text)
    q = weights(gens, f)
    D = lcm(*(w.denominator for w in q))
    basis = standard_monomials(gens, f)
    degs = [sum(int(w * D) * e for w, e in zip(q, m)) for m in basis]
    dims = {}
    for k in sorted(set(degs)):
        dims[str(k)] = degs.count(k)
    g = {"mu": len(basis), "graded_dims": dims, "residue_hess": str(len(basis))}
    if "n" not in case:
        return g
    n, d = case["n"], case["d"]
    selected = [k for k in degs if (k + n + 2) % d == 0]
    g["mu_s"] = len(selected)
    g["hodge_levels"] = [degs.count((a + 1) * d - (n + 2)) for a in range(n + 1)]
    g["case"] = case_label(d, n)
    g["filtration"] = [len(selected), len(basis) - len(selected)]
    if d == n + 2:
        g["invariant_count"] = sum(1 for k in degs if k % (n + 2) == 0)
    g["closed"] = (n + 2) % d == 0
    return g


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args()
    manifest = json.loads((DATA / "corpus" / "manifest.json").read_text())
    status = 0
    for case in manifest:
        text = (DATA / "corpus" / case["file"]).read_text()
        out = json.dumps(golden(case, text), indent=2) + "\n"
        path = DATA / "golden" / case["golden"]
        if args.check:
            same = path.exists() and json.loads(path.read_text()) == json.loads(out)
            print(f"{case['name']}: {'ok' if same else 'DIFFERS'}")
            status |= not same
        else:
            path.write_text(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
