"""Planar tilings built tile by tile; nested diamonds."""

from koszulkit import families, run_script, tiling_script, tor_table
from koszulkit.io import to_dot

positions = [(0, 0), (1, 1), (2, 0), (1, -1), (3, 1)]
scr = tiling_script(positions)
for step in scr.steps:
    print(step)
res = run_script(scr)
print(len(res.poset), "points,", len(res.poset.covers), "edges, certified:", res.certified)
print(tor_table(res.poset).diagonal())
print(to_dot(families.tiling(positions[:2])))

for n in range(2, 6):
    t = tor_table(families.vdiamond(n))
    print("vdiamond", n, t.diagonal(), t.koszul)
for ij in [(1, 1), (2, 2), (3, 2)]:
    t = tor_table(families.hdiamond(*ij))
    print("hdiamond", ij, t.diagonal(), t.koszul)
