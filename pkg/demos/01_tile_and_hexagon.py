"""Tor tables of two small posets: one Koszul, one not."""

from koszulkit import families, tor_table
from koszulkit.bar import enumerate_chains, build_differential, homology_witnesses, format_chain

tile = families.tile()          # s < u, v < t
print(tile)

# the bar complex in internal degree 2: two 2-chains, both collapse onto [s,t]
print(enumerate_chains(tile, 2, 2).chains)
print(build_differential(tile, 2, 2).to_dense())

t = tor_table(tile)
print(t.nonzero())              # {(0,0): 4, (1,1): 4, (2,2): 1}
print("koszul:", t.koszul)

hexagon = families.hexagon()    # two disjoint paths s-x-u-t and s-v-y-t
h = tor_table(hexagon)
print(h.nonzero())
print("koszul:", h.koszul, "witnesses:", h.witnesses)

# a cycle spanning the off-diagonal class
for z in homology_witnesses(hexagon, 2, 3):
    print(" ".join("%+d%s" % (v, format_chain(c)) for c, v in z.items()))

# same answer mod a large prime
from koszulkit import GF
print(tor_table(hexagon, GF(32003)).dims == h.dims)
