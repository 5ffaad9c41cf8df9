"""Finite posets given by their Hasse diagrams.

A :class:`Poset` stores the element identifiers in input order together with
the cover relation.  Everything else (the order, ranks, interval lengths,
meets) is derived lazily and cached on the instance.  Instances are
immutable and hashable, so they can be used as cache keys and shipped to
worker processes.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .errors import (
    IncomparableError,
    InvalidFrontierError,
    MalformedPosetError,
    NotGradedError,
    UnknownElementError,
)

__all__ = [
    "Poset",
    "GradedReport",
    "FrontierCheck",
    "validate_graded",
    "interval_length",
    "check_dagger",
    "check_ddagger",
    "dual",
    "disjoint_union",
]


@dataclass(frozen=True)
class Poset:
    """A finite poset.

    ``covers`` holds pairs ``(x, y)`` meaning ``x`` is a predecessor of ``y``.
    Construction checks that the covers form an acyclic Hasse diagram; it does
    not require gradedness (see :func:`validate_graded`).

    >>> p = Poset(["s", "u", "v", "t"], [("s", "u"), ("s", "v"), ("u", "t"), ("v", "t")])
    >>> p.interval_length("s", "t")
    2
    """

    elements: tuple
    covers: frozenset

    def __post_init__(self):
        elements = tuple(self.elements)
        covers = frozenset(tuple(c) for c in self.covers)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "covers", covers)

        seen = set()
        for x in elements:
            if not isinstance(x, str):
                raise MalformedPosetError("element identifiers must be strings, got %r" % (x,))
            if x in seen:
                raise MalformedPosetError("duplicate element identifier %r" % x)
            seen.add(x)
        for c in covers:
            if len(c) != 2:
                raise MalformedPosetError("cover %r is not a pair" % (c,))
            x, y = c
            if x not in seen or y not in seen:
                raise MalformedPosetError("cover (%s, %s) mentions an unknown element" % (x, y))
            if x == y:
                raise MalformedPosetError("cover (%s, %s) is a loop" % (x, y))

        # touching these validates acyclicity and Hasse minimality
        self._topological
        for x, y in sorted(covers, key=self._pair_key):
            for z in self.upper_covers(x):
                if z != y and y in self._strict_up[z]:
                    raise MalformedPosetError(
                        "cover (%s, %s) is implied by transitivity through %s" % (x, y, z))

    @classmethod
    def from_order(cls, elements: Iterable[str], relations: Iterable[tuple]) -> "Poset":
        """Build a poset from any generating set of order relations ``x <= y``.

        The transitive closure is reduced to its Hasse diagram.
        """
        elements = tuple(elements)
        rel = {(x, y) for x, y in relations if x != y}
        known = set(elements)
        for x, y in rel:
            if x not in known or y not in known:
                raise MalformedPosetError("relation (%s, %s) mentions an unknown element" % (x, y))
        succ = {x: set() for x in elements}
        for x, y in rel:
            succ[x].add(y)
        try:
            order = list(graphlib.TopologicalSorter({y: succ[y] for y in elements}).static_order())
        except graphlib.CycleError as exc:
            raise MalformedPosetError("order relation has a cycle: %s" % (exc.args[1],)) from None
        # static_order lists successors first, so this fills `up` bottom-up in the reversed sense
        up = {}
        for x in order:
            reach = set()
            for y in succ[x]:
                reach.add(y)
                reach |= up[y]
            up[x] = reach
        covers = set()
        for x in elements:
            for y in up[x]:
                if not any(y in up[z] for z in up[x]):
                    covers.add((x, y))
        return cls(elements, covers)

    # -- basic container protocol -------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        covers = sorted(self.covers, key=self._pair_key)
        return "Poset(%r, %r)" % (list(self.elements), covers)

    # -- derived structure ----------------------------------------------------

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    def _pair_key(self, pair):
        return (self.index[pair[0]], self.index[pair[1]])

    def _check(self, x):
        if x not in self.index:
            raise UnknownElementError("unknown element %r" % (x,))

    @cached_property
    def _succ(self) -> dict:
        succ = {x: [] for x in self.elements}
        for x, y in self.covers:
            succ[x].append(y)
        return {x: tuple(sorted(ys, key=self.index.__getitem__)) for x, ys in succ.items()}

    @cached_property
    def _pred(self) -> dict:
        pred = {x: [] for x in self.elements}
        for x, y in self.covers:
            pred[y].append(x)
        return {y: tuple(sorted(xs, key=self.index.__getitem__)) for y, xs in pred.items()}

    @cached_property
    def _topological(self) -> tuple:
        # bottom-up order; ties broken by input position for determinism
        ts = graphlib.TopologicalSorter({y: self._pred[y] for y in self.elements})
        try:
            ts.prepare()
        except graphlib.CycleError as exc:
            raise MalformedPosetError("covers contain a cycle: %s" % " -> ".join(exc.args[1])) from None
        out = []
        while ts.is_active():
            ready = sorted(ts.get_ready(), key=self.index.__getitem__)
            out.extend(ready)
            ts.done(*ready)
        return tuple(out)

    @cached_property
    def _strict_up(self) -> dict:
        up = {}
        for x in reversed(self._topological):
            reach = set()
            for y in self._succ[x]:
                reach.add(y)
                reach |= up[y]
            up[x] = frozenset(reach)
        return up

    @cached_property
    def _strict_down(self) -> dict:
        down = {x: set() for x in self.elements}
        for x, ups in self._strict_up.items():
            for y in ups:
                down[y].add(x)
        return {x: frozenset(s) for x, s in down.items()}

    @cached_property
    def _path_lengths(self) -> dict:
        """(x, y) -> (shortest, longest) cover path length, for all x <= y."""
        out = {}
        topo = self._topological
        pos = {x: i for i, x in enumerate(topo)}
        for x in self.elements:
            lo = {x: 0}
            hi = {x: 0}
            targets = sorted(self._strict_up[x], key=pos.__getitem__)
            for y in targets:
                preds = [z for z in self._pred[y] if z in lo]
                lo[y] = 1 + min(lo[z] for z in preds)
                hi[y] = 1 + max(hi[z] for z in preds)
            for y in lo:
                out[(x, y)] = (lo[y], hi[y])
        return out

    @cached_property
    def grading_witness(self) -> Optional[tuple]:
        """First interval (in element order) whose maximal chains differ in length."""
        for x in self.elements:
            for y in self.above(x):
                lo, hi = self._path_lengths[(x, y)]
                if lo != hi:
                    return (x, y, (lo, hi))
        return None

    @property
    def is_graded(self) -> bool:
        return self.grading_witness is None

    def require_graded(self):
        if self.grading_witness is not None:
            raise NotGradedError(self.grading_witness)

    @cached_property
    def lengths(self) -> dict:
        """(x, y) -> l([x, y]) for every comparable pair; graded posets only."""
        self.require_graded()
        return {pair: lo for pair, (lo, _) in self._path_lengths.items()}

    @cached_property
    def max_length(self) -> int:
        return max(self.lengths.values(), default=0)

    # -- order predicates -----------------------------------------------------

    def upper_covers(self, x) -> tuple:
        self._check(x)
        return self._succ[x]

    def lower_covers(self, x) -> tuple:
        self._check(x)
        return self._pred[x]

    def above(self, x) -> tuple:
        """Elements strictly greater than ``x``, in element order."""
        self._check(x)
        return tuple(y for y in self.elements if y in self._strict_up[x])

    def below(self, x) -> tuple:
        self._check(x)
        return tuple(y for y in self.elements if y in self._strict_down[x])

    def lt(self, x, y) -> bool:
        self._check(x)
        self._check(y)
        return y in self._strict_up[x]

    def leq(self, x, y) -> bool:
        return x == y and x in self.index or self.lt(x, y)

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def is_cover(self, x, y) -> bool:
        return (x, y) in self.covers

    def interval_length(self, x, y) -> int:
        return interval_length(self, x, y)

    def interval(self, x, y) -> tuple:
        if not self.leq(x, y):
            raise IncomparableError("%s is not below %s" % (x, y))
        return tuple(z for z in self.elements if self.leq(x, z) and self.leq(z, y))

    def minimal_elements(self) -> tuple:
        return tuple(x for x in self.elements if not self._pred[x])

    def maximal_elements(self) -> tuple:
        return tuple(x for x in self.elements if not self._succ[x])

    def lower_bounds(self, xs) -> tuple:
        """Common lower bounds (inclusive) of ``xs``."""
        xs = list(xs)
        for x in xs:
            self._check(x)
        return tuple(z for z in self.elements if all(self.leq(z, x) for x in xs))

    def upper_bounds(self, xs) -> tuple:
        xs = list(xs)
        for x in xs:
            self._check(x)
        return tuple(z for z in self.elements if all(self.leq(x, z) for x in xs))

    def meet(self, x, y) -> Optional[str]:
        """The unique maximum of the common lower bounds, or None."""
        return _unique_extreme(self, self.lower_bounds((x, y)), top=True)

    def join(self, x, y) -> Optional[str]:
        return _unique_extreme(self, self.upper_bounds((x, y)), top=False)

    @cached_property
    def ranks(self) -> dict:
        """Longest cover path from a minimal element."""
        rank = {}
        for x in self._topological:
            rank[x] = max((rank[z] + 1 for z in self._pred[x]), default=0)
        return rank

    # -- constructions --------------------------------------------------------

    def restrict(self, keep: Iterable[str]) -> "Poset":
        """Induced subposet on ``keep`` (kept in this poset's element order)."""
        keep = set(keep)
        for x in keep:
            self._check(x)
        elements = [x for x in self.elements if x in keep]
        rel = [(x, y) for x in elements for y in self._strict_up[x] if y in keep]
        return Poset.from_order(elements, rel)

    def remove(self, x: str) -> "Poset":
        self._check(x)
        return self.restrict(y for y in self.elements if y != x)

    def rename(self, mapping) -> "Poset":
        """Relabel elements; a dict may leave some elements unmapped."""
        f = (lambda x: mapping.get(x, x)) if isinstance(mapping, dict) else mapping
        return Poset([f(x) for x in self.elements], [(f(x), f(y)) for x, y in self.covers])

    def sorted_covers(self) -> list:
        return sorted(self.covers, key=self._pair_key)


def _unique_extreme(p, candidates, top):
    if not candidates:
        return None
    if top:
        maxima = [z for z in candidates if not any(p.lt(z, w) for w in candidates)]
    else:
        maxima = [z for z in candidates if not any(p.lt(w, z) for w in candidates)]
    return maxima[0] if len(maxima) == 1 else None


class GradedReport(NamedTuple):
    graded: bool
    witness: Optional[tuple]  # (x, y, (shortest, longest))


def validate_graded(p: Poset) -> GradedReport:
    """Check that every interval has all maximal chains of one length."""
    w = p.grading_witness
    return GradedReport(w is None, w)


def interval_length(p: Poset, x: str, y: str) -> int:
    p._check(x)
    p._check(y)
    if not p.leq(x, y):
        raise IncomparableError("%s is not below %s" % (x, y))
    return p.lengths[(x, y)]


class FrontierCheck(NamedTuple):
    satisfied: bool
    pivot: Optional[str] = None
    failure_reason: Optional[str] = None
    pair: Optional[tuple] = None


FRONTIER_FAILURES = ("no_common_pivot", "pair_without_meet", "meet_not_pivot", "pivot_not_cover")


def check_dagger(p: Poset, frontier) -> FrontierCheck:
    """Test whether ``frontier`` may receive a new common successor.

    Satisfied when the frontier is a singleton, or some ``s`` is covered by
    every frontier element and is the meet of every pair of distinct ones.
    Frontier elements must be pairwise incomparable.
    """
    frontier = list(dict.fromkeys(frontier))
    if not frontier:
        raise InvalidFrontierError("frontier is empty")
    for u in frontier:
        p._check(u)
    frontier.sort(key=p.index.__getitem__)
    for u, v in combinations(frontier, 2):
        if p.comparable(u, v):
            raise InvalidFrontierError("frontier elements %s and %s are comparable" % (u, v))
    if len(frontier) == 1:
        return FrontierCheck(True)

    meets = {}
    for u, v in combinations(frontier, 2):
        lower = p.lower_bounds((u, v))
        if not lower:
            return FrontierCheck(False, None, "no_common_pivot", (u, v))
        m = _unique_extreme(p, lower, top=True)
        if m is None:
            return FrontierCheck(False, None, "pair_without_meet", (u, v))
        meets[(u, v)] = m
    pairs = list(meets)
    s = meets[pairs[0]]
    for pair in pairs[1:]:
        if meets[pair] != s:
            return FrontierCheck(False, None, "meet_not_pivot", pair)
    for u in frontier:
        if not p.is_cover(s, u):
            other = next(v for v in frontier if v != u)
            pair = tuple(sorted((u, other), key=p.index.__getitem__))
            return FrontierCheck(False, s, "pivot_not_cover", pair)
    return FrontierCheck(True, s)


def check_ddagger(p: Poset, frontier) -> FrontierCheck:
    """The order-dual of :func:`check_dagger`: a common successor that is every pairwise join."""
    return check_dagger(dual(p), frontier)


def dual(p: Poset) -> Poset:
    return Poset(p.elements, [(y, x) for x, y in p.covers])


def disjoint_union(p: Poset, q: Poset) -> Poset:
    """Side-by-side union with no relations across the two parts.

    If the identifier sets overlap, every element is prefixed with ``1.`` or
    ``2.`` according to its side.
    """
    if set(p.elements) & set(q.elements):
        p = p.rename(lambda x: "1." + x)
        q = q.rename(lambda x: "2." + x)
    return Poset(p.elements + q.elements, p.covers | q.covers)
