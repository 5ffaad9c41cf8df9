"""The quadratic dual and the Koszul complex, next to the Tor diagonal."""

from koszulkit import families, compute_shriek, koszul_complex_exact, phi_dimension_check

tile = families.tile()
w = compute_shriek(tile, 2)
print(w.dim, w.vectors)   # one relation: [s,u,t] - [s,v,t]

for name in ("tile", "hexagon", "vdiamond", "hdiamond"):
    args = {"vdiamond": (4,), "hdiamond": (2, 2)}.get(name, ())
    p = families.generate(name, *args)
    phi = phi_dimension_check(p)
    kc = koszul_complex_exact(p, check=True)   # check=True also verifies d*d = 0
    print(name, "dual vs diagonal:", [(a, b) for _, a, b in phi.pairs])
    print("   koszul (Tor):", phi.koszul, " complex exact:", kc.exact, " failure:", kc.failure)

# hexagon: the diagonal matches the dual dimension by dimension,
# yet the Koszul complex has homology at (n, q) = (1, 3)
print(koszul_complex_exact(families.hexagon()).homology)
