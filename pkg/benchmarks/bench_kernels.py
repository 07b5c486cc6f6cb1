"""Time the compiled kernels against the NumPy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Inputs are subgroup lattices of elementary abelian 2-groups and a few
cyclic groups, built once with the active backend. Each check also confirms
that both backends return identical results.
"""
import argparse
import json
import sys
import timeit

import numpy as np

from lattika import _pykernels
from lattika.abelian import AbelianGroup, subgroups

try:
    from lattika import _ckernels
except ImportError:
    _ckernels = None

SPECS = ["2x2x2", "2x4x4", "2x2x2x2", "3x3x3", "2x2x2x2x2"]


def _inputs(spec):
    L = subgroups(AbelianGroup.parse(spec)).lattice
    leq = L.order.astype(np.uint8)
    # covers only, so closure has real work to do
    covers = np.zeros_like(leq)
    for a, b in L.covers():
        covers[a, b] = 1
    coatoms = [a for a, b in L.covers() if b == L.top][:12]
    return L, {
        "transitive_closure": (covers,),
        "meet_join_tables": (leq,),
        "cosmall_matrix": (leq, L.join_table, L.top),
        "modular_violation": (leq, L.meet_table, L.join_table),
        "meet_independent": (L.meet_table, L.join_table, L.top, coatoms),
    }


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return bool(np.array_equal(np.asarray(a), np.asarray(b)))


def run(repeat):
    rows = []
    for spec in SPECS:
        L, cases = _inputs(spec)
        for kernel, args in cases.items():
            py = getattr(_pykernels, kernel)
            row = {"group": spec, "n": L.n, "kernel": kernel}
            row["python_ms"] = 1000 * min(timeit.repeat(lambda: py(*args), number=1, repeat=repeat))
            if _ckernels is not None:
                cy = getattr(_ckernels, kernel)
                row["cython_ms"] = 1000 * min(timeit.repeat(lambda: cy(*args), number=1, repeat=repeat))
                row["speedup"] = row["python_ms"] / max(row["cython_ms"], 1e-9)
                row["agree"] = _same(py(*args), cy(*args))
            rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    rows = run(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        if _ckernels is None:
            print("compiled kernels not available; timing the fallback only")
        print(f"{'group':<12}{'n':>5}  {'kernel':<20}{'python ms':>11}{'cython ms':>11}{'speedup':>9}")
        for r in rows:
            cy = f"{r['cython_ms']:11.3f}{r['speedup']:8.1f}x" if "cython_ms" in r else ""
            print(f"{r['group']:<12}{r['n']:>5}  {r['kernel']:<20}{r['python_ms']:11.3f}{cy}")
    return 0 if all(r.get("agree", True) for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
