"""Draw a random root, take its line graph, and get the root back.

Run: python3 demos/01_round_trip.py
"""

from lgroot import generate_er, lam_of, reconstruct
from lgroot.graph import isomorphic_small

root = generate_er(8, 0.45, seed=12)
print(f"random root: {root.node_count} nodes, {root.edge_count} edges")

# node i of the line graph is edge i of the root
lam = lam_of(root)
print(f"line graph adjacency: order {lam.order}, {lam.ones()} ones above the diagonal")

rep = reconstruct(lam)
# isolated root nodes leave no trace in the line graph
touched = len({v for e in root.edges for v in e})
print(f"recovered root: {rep.root.node_count} nodes; the original has {touched} nodes with edges")
print("verified:", rep.verified)

# identical line graphs under the identity labeling
assert lam_of(rep.root) == lam

used = sorted({v for e in root.edges for v in e})
pos = {v: k for k, v in enumerate(used)}
core = type(root)(len(used), tuple((pos[u], pos[v]) for u, v in root.edges))
print("isomorphic to the original (ignoring isolated nodes):", isomorphic_small(core, rep.root))

for link, (u, v) in list(rep.link_to_edge.items())[:5]:
    print(f"  link {link} -> edge {u}-{v}")
