"""Three ways to say "not a line graph", and where they agree.

Run: python3 demos/03_recognizers.py
"""

from lgroot import Graph, NotALineGraph, reconstruct
from lgroot.cli import check_graph
from lgroot.reference import beineke_graphs, find_beineke_subgraph, smallest_eigenvalue

print("cycle C5")
print("\n".join("  " + line for line in check_graph(Graph.cycle(5))[0]))

print("\nstar K1,5: the spectrum alone rules it out")
print(f"  smallest eigenvalue {smallest_eigenvalue(Graph.star(5).adjacency()):.4f}")

print("\nthe nine forbidden graphs")
for name, g in beineke_graphs():
    lam = smallest_eigenvalue(g.adjacency())
    try:
        reconstruct(g.adjacency())
        verdict = "reconstructed (unexpected)"
    except NotALineGraph as exc:
        verdict = f"rejected at {exc.stage}"
    print(f"  {name:<60} lambda_min={lam:+.3f}  {verdict}")

# a claw hidden in a bigger graph is still found
g = Graph(7, ((0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (5, 6)))
idx, nodes = find_beineke_subgraph(g)
print("\nclaw found inside a tree on nodes", nodes)
