"""Growing posets one element at a time, and what gets refused."""

from koszulkit import families, Poset, Step, BuildScript, run_script, adjoin_above, tor_table
from koszulkit.builder import random_script
from koszulkit.errors import DaggerViolationError

script = BuildScript(Poset(["s"], []), [
    Step(1, "u", ["s"]),        # above one element
    Step(1, "v", ["s"]),
    Step(3, "t", ["u", "v"]),   # above a frontier with common lower cover s
])
res = run_script(script)
print("\n".join(res.log))
print(res.poset == families.tile())

# u and v have no meet in the horizontal diamond, so the frontier is refused
p22 = families.hdiamond(2, 2)
try:
    adjoin_above(p22, "w", ["u", "v"])
except DaggerViolationError as e:
    print("refused:", e)
print("hdiamond(2,2) is still Koszul:", tor_table(p22).koszul)

# random proposals; accepted ones keep the poset Koszul
start = families.random_graded(5, 4, 0.6)
scr, rejected = random_script(5, start, length=8)
out = run_script(scr)
print(len(scr.steps), "steps accepted,", len(rejected), "refused")
print("certified:", out.certified, " checked:", tor_table(out.poset).koszul)
