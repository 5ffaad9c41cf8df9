"""Growing Koszul posets one element at a time.

Four constructions are available, applied to a Koszul poset Q:

1. a new element above a single element,
2. a new element below a single element,
3. a new element above a frontier satisfying (dagger),
4. a new element below a frontier satisfying (double dagger).

Each preserves Koszulity.  Gradedness of the result is re-validated after
every step even though a valid frontier already implies it.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .bar import tor_table
from .errors import (
    DaggerViolationError,
    GradednessViolationError,
    InvalidFrontierError,
    InvalidParameterError,
    KoszulkitError,
    NameCollisionError,
)
from .families import tile_points
from .linalg import QQ, Field
from .poset import Poset, check_dagger, dual

__all__ = [
    "Step",
    "BuildScript",
    "BuildResult",
    "adjoin_above",
    "adjoin_below",
    "run_script",
    "tiling_script",
    "random_script",
]


def _fresh(p: Poset, t: str):
    if not isinstance(t, str) or not t:
        raise InvalidParameterError("new element name must be a nonempty string")
    if t in p:
        raise NameCollisionError("element %r already present" % t)


def _adjoin_above(p: Poset, t: str, frontier):
    _fresh(p, t)
    p.require_graded()
    check = check_dagger(p, frontier)
    if not check.satisfied:
        raise DaggerViolationError(check, sorted(set(frontier), key=p.index.__getitem__))
    out = Poset(p.elements + (t,), p.covers | {(u, t) for u in frontier})
    if not out.is_graded:
        raise GradednessViolationError(out.grading_witness)
    return out, check


def adjoin_above(p: Poset, t: str, frontier) -> Poset:
    """Add ``t`` covering exactly the elements of ``frontier``."""
    return _adjoin_above(p, t, frontier)[0]


def _adjoin_below(p: Poset, t: str, frontier):
    try:
        q, check = _adjoin_above(dual(p), t, frontier)
    except DaggerViolationError as exc:
        raise DaggerViolationError(exc.check, exc.frontier, dual=True) from None
    return dual(q), check


def adjoin_below(p: Poset, t: str, frontier) -> Poset:
    """Add ``t`` covered by exactly the elements of ``frontier`` (the dual construction)."""
    return _adjoin_below(p, t, frontier)[0]


class Step(NamedTuple):
    kind: int
    new: str
    frontier: tuple


@dataclass(frozen=True)
class BuildScript:
    start: Poset
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Step(s[0], s[1], tuple(s[2])) for s in self.steps))


@dataclass
class BuildResult:
    poset: Poset
    log: list = field(default_factory=list)
    start_koszul: Optional[bool] = None
    field: Field = QQ

    @property
    def certified(self) -> bool:
        """Koszul by construction: the start is Koszul and every step was accepted."""
        return bool(self.start_koszul)


def _describe(step: Step) -> str:
    where = "above" if step.kind in (1, 3) else "below"
    return "step kind %d: adjoin %s %s {%s}" % (step.kind, step.new, where, ", ".join(step.frontier))


def apply_step(p: Poset, step: Step):
    """Apply one step; return the new poset and a log fragment."""
    if step.kind not in (1, 2, 3, 4):
        raise InvalidParameterError("step kind must be 1, 2, 3 or 4, got %r" % (step.kind,))
    if not step.frontier:
        raise InvalidFrontierError("frontier is empty")
    if step.kind in (1, 2) and len(set(step.frontier)) != 1:
        raise InvalidFrontierError("constructions 1 and 2 take a single element, got %d" % len(step.frontier))
    if step.kind in (1, 3):
        q, check = _adjoin_above(p, step.new, step.frontier)
        cond = "dagger"
    else:
        q, check = _adjoin_below(p, step.new, step.frontier)
        cond = "ddagger"
    if check.pivot is None:
        how = "%s ok (singleton)" % cond
    else:
        how = "%s ok (pivot %s)" % (cond, check.pivot)
    return q, "%s; graded ok" % how


def run_script(script: BuildScript, field: Field = QQ, check_start: bool = True) -> BuildResult:
    """Apply the steps in order.

    The first rejected step re-raises its error with ``step_index`` and the
    partial ``log`` attached.  With ``check_start`` the start poset's Koszul
    verdict is computed so the result can carry a certificate.
    """
    p = script.start
    p.require_graded()
    result = BuildResult(p, field=field)
    if check_start:
        result.start_koszul = tor_table(p, field, workers=1).koszul
        result.log.append("start: %d elements, koszul=%s (field %s)" % (
            len(p), str(result.start_koszul).lower(), field))
    else:
        result.log.append("start: %d elements, koszul assumed" % len(p))
        result.start_koszul = True
    for i, step in enumerate(script.steps, 1):
        line = "%d: %s" % (i, _describe(step))
        try:
            p, note = apply_step(p, step)
        except KoszulkitError as exc:
            result.log.append("%s: REJECTED %s" % (line, exc))
            exc.step_index = i
            exc.log = list(result.log)
            raise
        result.log.append("%s: %s" % (line, note))
    result.poset = p
    result.log.append("done: %d elements, %s" % (
        len(p), "koszul by construction" if result.certified else "no certificate (start not koszul)"))
    return result


# -- scripts for planar tilings ---------------------------------------------------


def tiling_script(positions: Sequence) -> BuildScript:
    """A build script for a tiling, patching tiles in the given order.

    The first tile is built from its bottom point.  Every later tile must
    meet the tiles already placed in one point, one edge, or three points
    including both side points; the missing points are then added with the
    constructions matching that overlap.  Other overlaps raise
    :class:`InvalidParameterError`.
    """
    positions = [tuple(pos) for pos in positions]
    if not positions:
        raise InvalidParameterError("empty tiling")
    first = tile_points(*positions[0])
    start = Poset([first["s"]], [])
    steps = [
        Step(1, first["u"], (first["s"],)),
        Step(1, first["v"], (first["s"],)),
        Step(3, first["t"], (first["u"], first["v"])),
    ]
    present = set(first.values())
    for pos in positions[1:]:
        r = tile_points(*pos)
        have = {role for role, name in r.items() if name in present}
        steps.extend(_patch(r, have, pos))
        present.update(r.values())
    return BuildScript(start, tuple(steps))


def _patch(r, have, pos):
    s, u, v, t = r["s"], r["u"], r["v"], r["t"]
    if have == {"s", "u", "v", "t"}:
        return []
    if not have:
        raise InvalidParameterError("tile at %s is disjoint from the tiles before it" % (pos,))
    if have == {"u"} or have == {"v"}:
        side, other = (u, v) if have == {"u"} else (v, u)
        return [Step(1, t, (side,)), Step(2, other, (t,)), Step(4, s, (u, v))]
    if have == {"t"}:
        return [Step(2, u, (t,)), Step(2, v, (t,)), Step(4, s, (u, v))]
    if have == {"s"}:
        return [Step(1, u, (s,)), Step(1, v, (s,)), Step(3, t, (u, v))]
    if have == {"u", "t"}:
        return [Step(2, v, (t,)), Step(4, s, (u, v))]
    if have == {"v", "t"}:
        return [Step(2, u, (t,)), Step(4, s, (u, v))]
    if have == {"s", "u"}:
        return [Step(1, v, (s,)), Step(3, t, (u, v))]
    if have == {"s", "v"}:
        return [Step(1, u, (s,)), Step(3, t, (u, v))]
    if have == {"u", "v", "t"}:
        return [Step(4, s, (u, v))]
    if have == {"u", "v", "s"}:
        return [Step(3, t, (u, v))]
    raise InvalidParameterError("tile at %s meets the previous tiles in an unsupported pattern %s" % (
        pos, sorted(have)))


# -- random scripts -----------------------------------------------------------------


def random_candidate(rng: _random.Random, p: Poset, new: str) -> Step:
    """A random step proposal on ``p``; it may well be rejected."""
    kind = rng.choice((1, 2, 3, 4))
    els = list(p.elements)
    if kind in (1, 2):
        return Step(kind, new, (rng.choice(els),))
    up = kind == 3
    if rng.random() < 0.6:
        # frontier drawn from the covers of one pivot: usually acceptable
        s = rng.choice(els)
        pool = list(p.upper_covers(s) if up else p.lower_covers(s))
        if len(pool) >= 2:
            k = rng.randint(2, len(pool))
            return Step(kind, new, tuple(rng.sample(pool, k)))
    k = rng.randint(1, min(3, len(els)))
    return Step(kind, new, tuple(rng.sample(els, k)))


def random_script(seed: int, start: Poset, length: int = 8, attempts: int = 40) -> tuple:
    """Draw up to ``length`` accepted steps, returning ``(script, rejected)``.

    ``rejected`` lists ``(poset, step, error)`` for every proposal that was
    turned down along the way.
    """
    rng = _random.Random(seed)
    p = start
    steps = []
    rejected = []
    tries = 0
    while len(steps) < length and tries < attempts:
        tries += 1
        step = random_candidate(rng, p, "n%d" % len(steps))
        try:
            p, _ = apply_step(p, step)
        except KoszulkitError as exc:
            rejected.append((p, step, exc))
            continue
        steps.append(step)
    return BuildScript(start, tuple(steps)), rejected
