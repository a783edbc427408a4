"""Step through the 50-link example: relabeling, counters, construction.

Run: python3 demos/02_worked_example.py
"""

from pathlib import Path

from lgroot import LabeledLam, lam_of, matrix_relabeling, reconstruct
from lgroot.io import read_graph
from lgroot.reconstruct import construct, initialization

here = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
lam = read_graph(here / "worked_lam.mat").adjacency()
print(f"LAM of order {lam.order}")
print("row 1 ones at links", [j + 1 for j in range(lam.order) if lam.get(0, j)])

# first group swap: move link 1's neighbours to labels 2..10
w = LabeledLam(lam)
xs, ys = w.group_label_swapping(0, 1, lam.row_sum(0, 1, lam.order), lam.order)
print("swapped pairs (1-based):", [(x + 1, y + 1) for x, y in zip(xs, ys)])

rel = matrix_relabeling(lam)
print(f"s1={rel.s1} s2={rel.s2} s3={rel.s3}")
left = list(range(2, rel.s3 + 4))
right = list(range(rel.s3 + 4, rel.s1 + 2))
print("left neighbours of link 1:", left)
print("right neighbours of link 1:", right)

table = initialization(rel.relabeled, rel.s1, rel.s2, rel.s3)[0]
print("initial state", table.template, "first endnodes:", table.e1[: rel.s1 + 1])
done = construct(rel.relabeled, table)
print("constructed nodes:", done.node_count())
print("link 36 joins nodes", done.e1[35], "and", done.e2[35])

rep = reconstruct(lam)
print(f"full reconstruction: {rep.root.node_count} nodes, {rep.root.edge_count} links, verified={rep.verified}")
assert lam_of(rep.root) == lam
