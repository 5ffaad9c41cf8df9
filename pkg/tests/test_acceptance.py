"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line and also records it so the
lines are repeated in the "acceptance criteria" section of the pytest summary.
"""

import io


from koszulkit import families
from koszulkit.bar import homology_witnesses, module_tor, tor_dimension, tor_table
from koszulkit.builder import random_script, run_script
from koszulkit.cli import main
from koszulkit.errors import DaggerViolationError, InvalidFrontierError, NameCollisionError
from koszulkit.io import dump_poset
from koszulkit.linalg import GF, QQ
from koszulkit.poset import disjoint_union, dual
from koszulkit.quadratic import koszul_complex_exact, phi_dimension_check

import conftest
import oracles
from conftest import builtin_corpus, plain, random_corpus

OMEGA = {("s", "y", "t"): 1, ("s", "x", "t"): -1}
PRIMES = (2, 3, 5, 7, 32003)


def report(number, title, ok, detail=""):
    line = "[%s] criterion %2d: %s%s" % ("PASS" if ok else "FAIL", number, title, (" (%s)" % detail) if detail else "")
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    assert ok, line


def cli(argv, poset, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(dump_poset(poset)))
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


# criteria 1-4 as functions of the field, so criterion 10 can rerun them


def tile_check(field):
    p = families.tile()
    table = tor_table(p, field)
    brute = oracles.tor_table(*plain(p), p=None if field.is_rational else field.p)
    ok = table.koszul and table.nonzero() == {(0, 0): 4, (1, 1): 4, (2, 2): 1} and table.dims == brute
    return ok, "diagonal %s" % table.diagonal()


def hexagon_check(field):
    p = families.hexagon()
    table = tor_table(p, field)
    brute = oracles.tor_table(*plain(p), p=None if field.is_rational else field.p)
    cycles = homology_witnesses(p, 2, 3, field)
    targets = [OMEGA, {c: -v for c, v in OMEGA.items()}]
    if not field.is_rational:
        targets = [{c: v % field.p for c, v in z.items()} for z in targets]
    ok = (not table.koszul and table.witnesses == ((2, 3, 1),) and table.dims == brute
          and len(cycles) == 1 and cycles[0] in targets)
    return ok, "witnesses %s" % (table.witnesses,)


def vdiamond_check(field):
    got = {}
    ok = True
    for n in range(2, 6):
        table = tor_table(families.vdiamond(n), field)
        brute = oracles.tor_table(*plain(families.vdiamond(n)), p=None if field.is_rational else field.p)
        got[n] = table[(2, 2)]
        ok &= table.koszul and table[(2, 2)] == n - 1 and table.dims == brute
    return ok, "T22 %s" % got


def hdiamond_check(field):
    ok = True
    diag = {}
    for ij in ((1, 1), (2, 2), (3, 2)):
        table = tor_table(families.hdiamond(*ij), field)
        diag[ij] = table.diagonal()
        ok &= table.koszul
    return ok, "diagonals %s" % diag


def test_criterion_01_tile(monkeypatch):
    ok, detail = tile_check(QQ)
    code, out = cli(["koszul", "-"], families.tile(), monkeypatch)
    ok &= code == 0 and out == "koszul: true (field Q)\n"
    report(1, "tile is Koszul with Tor diagonal (4, 4, 1)", ok, detail)


def test_criterion_02_hexagon(monkeypatch):
    ok, detail = hexagon_check(QQ)
    code, out = cli(["koszul", "-", "--witness"], families.hexagon(), monkeypatch)
    lines = out.splitlines()
    ok &= code == 1 and "witness: n=2 m=3 dim=1" in lines
    ok &= lines[-1] in ("cycle n=2 m=3: -[s,x,t] +[s,y,t]", "cycle n=2 m=3: +[s,x,t] -[s,y,t]")
    report(2, "hexagon has the single obstruction T_{2,3} = 1 carried by omega", ok, detail)


def test_criterion_03_vertical_diamonds():
    ok, detail = vdiamond_check(QQ)
    report(3, "vdiamond(n) Koszul with T_{2,2} = n - 1 for n = 2..5", ok, detail)


def test_criterion_04_horizontal_diamonds():
    ok, detail = hdiamond_check(QQ)
    report(4, "hdiamond (1,1), (2,2), (3,2) Koszul over Q", ok, detail)


def test_criterion_05_splitting():
    corpus = random_corpus(60)
    bad = []
    cells = 0
    for idx, p in enumerate(corpus):
        full = tor_table(p)
        t = p.maximal_elements()[-1]
        preds = p.lower_covers(t)
        if not preds:
            continue
        rest = p.remove(t)
        for m in range(p.max_length + 1):
            for n in range(m + 1):
                extra = module_tor(p, t, preds, n - 1, m) if n >= 1 else int(m == 0)
                cells += 1
                if full[(n, m)] != tor_dimension(rest, n, m) + extra:
                    bad.append((idx, n, m))
    ok = not bad and len(corpus) >= 50
    report(5, "splitting identity on %d random posets" % len(corpus), ok, "%d cells, %d mismatches" % (cells, len(bad)))


def test_criterion_06_three_way():
    corpus = random_corpus(50) + builtin_corpus()
    bad = []
    for idx, p in enumerate(corpus):
        verdicts = (tor_table(p).koszul, koszul_complex_exact(p).exact, phi_dimension_check(p).agree)
        if len(set(verdicts)) != 1:
            bad.append((idx, verdicts))
    report(6, "Tor, Koszul complex and dual-dimension verdicts agree", not bad,
           "%d posets, %d disagreements" % (len(corpus), len(bad)))


def test_criterion_07_products():
    corpus = random_corpus(40, max_size=8, seed0=3000)
    bad = 0
    for p, q in zip(corpus[::2], corpus[1::2]):
        both = tor_table(disjoint_union(p, q))
        a, b = tor_table(p), tor_table(q)
        cells = set(both.dims) | set(a.dims) | set(b.dims)
        bad += any(both[c] != a[c] + b[c] for c in cells)
    report(7, "Tor of a disjoint union is the cellwise sum", bad == 0, "20 pairs, %d mismatches" % bad)


def _rejection_is_correct(p, step, exc):
    current = p if step.kind in (1, 3) else dual(p)
    els, covs = plain(current)
    if isinstance(exc, DaggerViolationError):
        return not oracles.dagger_holds(els, covs, step.frontier)
    if isinstance(exc, InvalidFrontierError):
        lt = oracles.closure(els, covs)
        f = step.frontier
        return len(f) == 0 or (step.kind in (1, 2) and len(set(f)) > 1) or any((a, b) in lt for a in f for b in f)
    return isinstance(exc, NameCollisionError) and step.new in els


def test_criterion_08_build_soundness():
    built = rejected = wrong = not_koszul = 0
    for seed in range(100):
        start = families.random_graded(seed, 1 + seed % 4, 0.6)
        script, refused = random_script(seed, start, length=8)
        result = run_script(script)
        built += 1
        if not (result.certified and tor_table(result.poset).koszul):
            not_koszul += 1
        # every accepted step must satisfy the literal condition and stay graded
        p = start
        for step in script.steps:
            current = p if step.kind in (1, 3) else dual(p)
            if not oracles.dagger_holds(*plain(current), step.frontier):
                wrong += 1
            p = run_script(type(script)(p, (step,)), check_start=False).poset
            oracles.lengths(*plain(p))
        for q, step, exc in refused:
            rejected += 1
            wrong += not _rejection_is_correct(q, step, exc)
    ok = built == 100 and not_koszul == 0 and wrong == 0
    report(8, "100 random build scripts yield Koszul posets", ok,
           "%d rejected proposals, %d misclassified, %d non-Koszul outputs" % (rejected, wrong, not_koszul))


def test_criterion_09_duality():
    corpus = random_corpus(50) + builtin_corpus()
    bad = sum(tor_table(p).dims != tor_table(dual(p)).dims for p in corpus)
    report(9, "a poset and its dual have identical Tor tables", bad == 0, "%d posets, %d mismatches" % (len(corpus), bad))


def test_criterion_10_prime_fields():
    checks = (tile_check, hexagon_check, vdiamond_check, hdiamond_check)
    divergent = []
    for prime in PRIMES:
        for number, check in enumerate(checks, 1):
            if not check(GF(prime))[0]:
                divergent.append((prime, number))
    for prime, number in divergent:
        print("divergence: criterion %d fails over F_%d" % (number, prime))
    ok = all(prime != 32003 for prime, _ in divergent)
    report(10, "criteria 1-4 reproduce over F_32003", ok,
           "divergences at %s" % (divergent or "no tested prime"))
