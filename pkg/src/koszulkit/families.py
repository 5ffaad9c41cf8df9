"""Named poset families and the random graded poset generator."""

from __future__ import annotations

import random as _random
from typing import Sequence

from .errors import InvalidParameterError
from .poset import Poset

__all__ = [
    "tile",
    "tiling",
    "tile_points",
    "vdiamond",
    "hdiamond",
    "hexagon",
    "chain",
    "antichain",
    "random_graded",
    "generate",
    "parse_generator",
    "FAMILIES",
]


def tile() -> Poset:
    return Poset(["s", "u", "v", "t"], [("s", "u"), ("s", "v"), ("u", "t"), ("v", "t")])


def _point(x, y):
    return "%d,%d" % (x, y)


def tile_points(p: int, q: int) -> dict:
    """Grid points of the tile centred at (p, q), keyed by role."""
    return {
        "s": _point(p, q - 1),
        "u": _point(p - 1, q),
        "v": _point(p + 1, q),
        "t": _point(p, q + 1),
    }


def tiling(positions: Sequence) -> Poset:
    """Union of grid tiles; a tile shares poset elements with any tile touching the same grid points.

    Elements are named ``"x,y"`` and listed bottom row first, left to right.
    """
    positions = [tuple(int(c) for c in pos) for pos in positions]
    if not positions:
        raise InvalidParameterError("a tiling needs at least one tile")
    if any(len(pos) != 2 for pos in positions):
        raise InvalidParameterError("tile positions are (p, q) pairs")
    points = set()
    covers = set()
    for p, q in positions:
        r = tile_points(p, q)
        points.update(r.values())
        covers.update([(r["s"], r["u"]), (r["s"], r["v"]), (r["u"], r["t"]), (r["v"], r["t"])])

    def key(name):
        x, y = map(int, name.split(","))
        return (y, x)

    return Poset(sorted(points, key=key), covers)


def vdiamond(n: int) -> Poset:
    """s below u1..un below t."""
    if n < 1:
        raise InvalidParameterError("vdiamond needs n >= 1")
    us = ["u%d" % i for i in range(1, n + 1)]
    return Poset(["s"] + us + ["t"], [("s", u) for u in us] + [(u, "t") for u in us])


def hdiamond(i: int, j: int) -> Poset:
    """s1..si all below u and v, which are both below t1..tj."""
    if i < 1 or j < 1:
        raise InvalidParameterError("hdiamond needs i, j >= 1")
    ss = ["s%d" % k for k in range(1, i + 1)]
    ts = ["t%d" % k for k in range(1, j + 1)]
    covers = [(s, m) for s in ss for m in ("u", "v")] + [(m, t) for m in ("u", "v") for t in ts]
    return Poset(ss + ["u", "v"] + ts, covers)


def hexagon() -> Poset:
    """Two disjoint cover paths s-x-u-t and s-v-y-t: the smallest non-Koszul planar tiling shape."""
    return Poset(
        ["s", "x", "y", "u", "v", "t"],
        [("s", "x"), ("s", "v"), ("x", "u"), ("v", "y"), ("u", "t"), ("y", "t")],
    )


def chain(n: int) -> Poset:
    if n < 1:
        raise InvalidParameterError("chain needs n >= 1")
    els = ["c%d" % i for i in range(n)]
    return Poset(els, list(zip(els, els[1:])))


def antichain(n: int) -> Poset:
    if n < 1:
        raise InvalidParameterError("antichain needs n >= 1")
    return Poset(["a%d" % i for i in range(n)], [])


def random_graded(seed: int, size: int, density: float = 0.5) -> Poset:
    """Layered random poset: covers only join adjacent layers, so it is graded by construction."""
    if size < 1:
        raise InvalidParameterError("random poset needs size >= 1")
    if not 0 <= density <= 1:
        raise InvalidParameterError("density must lie in [0, 1]")
    rng = _random.Random(seed)
    nlayers = rng.randint(1, min(size, 5))
    # random composition of `size` into nlayers positive parts
    cuts = sorted(rng.sample(range(1, size), nlayers - 1))
    widths = [b - a for a, b in zip([0] + cuts, cuts + [size])]
    layers = []
    k = 0
    for w in widths:
        layers.append(["p%d" % (k + i) for i in range(w)])
        k += w
    covers = []
    for lower, upper in zip(layers, layers[1:]):
        for x in lower:
            for y in upper:
                if rng.random() < density:
                    covers.append((x, y))
    return Poset([x for layer in layers for x in layer], covers)


FAMILIES = {
    "tile": tile,
    "tiling": tiling,
    "vdiamond": vdiamond,
    "hdiamond": hdiamond,
    "hexagon": hexagon,
    "chain": chain,
    "antichain": antichain,
    "random": random_graded,
}


def generate(family: str, *args) -> Poset:
    try:
        make = FAMILIES[family]
    except KeyError:
        raise InvalidParameterError("unknown generator %r (known: %s)" % (family, ", ".join(FAMILIES))) from None
    try:
        return make(*args)
    except TypeError as exc:
        raise InvalidParameterError("bad arguments for %s: %s" % (family, exc)) from None


def parse_generator(text: str) -> tuple:
    """Parse ``name[:args]`` into ``(name, args)``.

    ``hdiamond:2,3`` gives integer arguments, ``random:7,10,0.4`` mixes
    integers and a float, and ``tiling:0,0;1,1`` gives a list of tile
    positions separated by semicolons.
    """
    name, _, rest = text.partition(":")
    name = name.strip()
    if not rest:
        return name, ()
    if name == "tiling":
        return name, ([_numbers(part) for part in rest.split(";")],)
    return name, tuple(_numbers(rest))


def _numbers(text):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            out.append(int(tok))
        except ValueError:
            try:
                out.append(float(tok))
            except ValueError:
                raise InvalidParameterError("bad generator argument %r" % tok) from None
    return out
