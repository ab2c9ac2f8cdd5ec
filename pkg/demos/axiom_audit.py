"""Audit the 16-index roster against the mobility principles.

Each cell is either a tick (holds), a parenthesised weak form (holds only
when both periods are rescaled or shifted together) or blank. Cells that
disagree with the reference matrix are listed with the concrete profiles
that decide them.

Run: python3 demos/axiom_audit.py [seed]
"""

import sys

from mobility.axioms import COLUMNS, property_report

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
rep = property_report(seed=seed)

width = max(len(lab) for lab in rep.labels)
print(" " * width, " ".join(f"{c:>11s}" for c in COLUMNS))
for lab, cells in rep.matrix().items():
    print(f"{lab:>{width}s}", " ".join(f"{c or '-':>11s}" for c in cells))

mism = rep.mismatches()
print(f"\n{len(mism)} cells differ from the reference matrix:")
rows = dict(zip(rep.labels, rep.rows))
for lab, col, got, want in mism:
    v = rows[lab][col]
    print(f"\n  {lab} / {col}: got {got or 'blank'}, reference {want or 'blank'}")
    if v.witness is not None:
        w = v.witness
        print(f"    u={w.profile.u.round(2).tolist()} v={w.profile.v.round(2).tolist()} -> {w.value:.4f}")
        if w.other is not None:
            print(f"    u={w.other.u.round(2).tolist()} v={w.other.v.round(2).tolist()} -> {w.other_value:.4f}")
    else:
        print("    (holds on every probe, so no counterexample exists to show)")
