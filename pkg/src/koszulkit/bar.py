"""Normalized bar complex of an incidence ring and its bigraded Tor.

For a graded poset the degree ``n`` part of the bar complex in internal
degree ``m`` has one basis vector per chain ``x0 < x1 < ... < xn`` with
``l([x0, xn]) = m``.  The differential deletes an interior element ``x_i``
with sign ``(-1)**(i-1)``; the two outer positions never contribute.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import InvalidGeneratorError, InvalidParameterError, InvalidTargetError
from .linalg import QQ, Echelon, Field, SparseMatrix, kernel_basis, rank
from .poset import Poset

__all__ = [
    "ChainFamily",
    "TorTable",
    "enumerate_chains",
    "build_differential",
    "tor_dimension",
    "tor_table",
    "module_tor",
    "homology_witnesses",
    "format_chain",
]


class ChainFamily(NamedTuple):
    n: int
    m: int
    chains: tuple

    def __len__(self):
        return len(self.chains)

    def index(self) -> dict:
        return {c: i for i, c in enumerate(self.chains)}


@lru_cache(maxsize=32)
def _chains_by_degree(p: Poset) -> dict:
    """All chains of ``p`` grouped by (number of steps, total length), lexicographic."""
    p.require_graded()
    lengths = p.lengths
    groups = {}

    def extend(chain):
        groups.setdefault((len(chain) - 1, lengths[(chain[0], chain[-1])]), []).append(chain)
        for y in p.above(chain[-1]):
            extend(chain + (y,))

    for x in p.elements:
        extend((x,))
    return {key: tuple(v) for key, v in groups.items()}


def enumerate_chains(p: Poset, n: int, m: int) -> ChainFamily:
    """The ``n``-chains of ``p`` of internal length ``m``, in lexicographic element order."""
    if n < 0 or m < 0:
        raise InvalidParameterError("degrees must be nonnegative")
    return ChainFamily(n, m, _chains_by_degree(p).get((n, m), ()))


def _delete(chain, i):
    return chain[:i] + chain[i + 1:]


def _bar_columns(chains, target_index):
    cols = []
    for c in chains:
        col = {}
        for i in range(1, len(c) - 1):
            col[target_index[_delete(c, i)]] = 1 if i % 2 == 1 else -1
        cols.append(col)
    return cols


def build_differential(p: Poset, n: int, m: int) -> SparseMatrix:
    """Matrix of ``d_n`` from the ``(n, m)`` chains to the ``(n-1, m)`` chains."""
    if n < 1:
        raise InvalidParameterError("differential degree must be at least 1")
    src = enumerate_chains(p, n, m)
    dst = enumerate_chains(p, n - 1, m)
    return SparseMatrix.from_columns(len(dst), _bar_columns(src.chains, dst.index()))


@lru_cache(maxsize=1024)
def _rank_d(p: Poset, n: int, m: int, field: Field) -> int:
    if n <= 1:
        return 0
    if not enumerate_chains(p, n, m).chains or not enumerate_chains(p, n - 1, m).chains:
        return 0
    return rank(build_differential(p, n, m), field)


def tor_dimension(p: Poset, n: int, m: int, field: Field = QQ) -> int:
    """dim T_{n,m}: homology of the bar complex at (n, m)."""
    p.require_graded()
    size = len(enumerate_chains(p, n, m))
    if size == 0:
        return 0
    return size - _rank_d(p, n, m, field) - _rank_d(p, n + 1, m, field)


@dataclass(frozen=True)
class TorTable:
    field: Field
    dims: dict  # (n, m) -> dim, for 0 <= n <= m <= max interval length
    koszul: bool
    witnesses: tuple  # (n, m, dim) with n != m and dim > 0

    def __getitem__(self, nm):
        return self.dims.get(nm, 0)

    @property
    def max_length(self) -> int:
        return max((m for _, m in self.dims), default=0)

    def diagonal(self) -> list:
        return [self.dims[(n, n)] for n in range(self.max_length + 1)]

    def nonzero(self) -> dict:
        return {k: v for k, v in self.dims.items() if v}


def _cell(args):
    p, n, m, field = args
    return tor_dimension(p, n, m, field)


def _default_workers() -> int:
    raw = os.environ.get("KOSZULKIT_THREADS", "1")
    try:
        w = int(raw)
    except ValueError:
        raise InvalidParameterError("KOSZULKIT_THREADS must be an integer, got %r" % raw) from None
    if w <= 0:
        return os.cpu_count() or 1
    return w


def tor_table(p: Poset, field: Field = QQ, workers: Optional[int] = None) -> TorTable:
    """Every T_{n,m} with 0 <= n <= m <= L and the Koszul verdict.

    Cells with ``m > L`` vanish because there are no chains of that length, so
    the table is a complete decision procedure.  ``workers`` (default taken
    from ``KOSZULKIT_THREADS``) spreads the cells over processes.
    """
    p.require_graded()
    L = p.max_length
    cells = [(n, m) for m in range(L + 1) for n in range(m + 1)]
    if workers is None:
        workers = _default_workers()
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            values = list(ex.map(_cell, [(p, n, m, field) for n, m in cells]))
    else:
        values = [tor_dimension(p, n, m, field) for n, m in cells]
    dims = dict(zip(cells, values))
    witnesses = tuple((n, m, d) for (n, m), d in dims.items() if n != m and d)
    return TorTable(field, dims, not witnesses, witnesses)


def homology_witnesses(p: Poset, n: int, m: int, field: Field = QQ) -> list:
    """Cycles representing a basis of T_{n,m}, as ``{chain: coefficient}`` dicts.

    The boundaries are put into an echelon basis first; the kernel basis
    vectors of ``d_n`` are then added in order, and those that enlarge the
    span are reported.
    """
    p.require_graded()
    chains = enumerate_chains(p, n, m).chains
    if not chains:
        return []
    if n >= 2 and enumerate_chains(p, n - 1, m).chains:
        cycles = kernel_basis(build_differential(p, n, m), field)
    else:
        one = QQ.coerce(1) if field.is_rational else 1
        cycles = [[one if i == j else 0 * one for j in range(len(chains))] for i in range(len(chains))]
    ech = Echelon(field)
    if enumerate_chains(p, n + 1, m).chains:
        for col in build_differential(p, n + 1, m).column_dicts():
            if col:
                ech.add(col)
    out = []
    for z in cycles:
        if ech.add({j: v for j, v in enumerate(z) if v}):
            out.append({chains[j]: v for j, v in enumerate(z) if v})
    return out


def format_chain(chain) -> str:
    return "[" + ",".join(chain) + "]"


# -- Tor against the frontier module ------------------------------------------------


def _module_chains(p: Poset, t: str, allowed: frozenset, k: int, m: int) -> tuple:
    """k-chains ending at t, of total length m, whose element before t lies in ``allowed``."""
    if k == 0:
        return ((t,),) if m == 0 else ()
    return tuple(c for c in enumerate_chains(p, k, m).chains if c[-1] == t and c[-2] in allowed)


def _module_rank(p, t, allowed, k, m, field):
    if k <= 1:
        return 0
    src = _module_chains(p, t, allowed, k, m)
    dst = _module_chains(p, t, allowed, k - 1, m)
    if not src or not dst:
        return 0
    return rank(SparseMatrix.from_columns(len(dst), _bar_columns(src, {c: i for i, c in enumerate(dst)})), field)


def module_tor(p: Poset, t: str, gens, n: int, m: int, field: Field = QQ) -> int:
    """dim Tor^B_{n,m}(S, M) where M is generated by the e_{u,t}, u in ``gens``.

    B is the incidence ring of ``p`` without the maximal element ``t``.  The
    value is the homology in degree n+1 of the subcomplex of bar chains ending
    at ``t`` whose second to last element lies below some generator.
    """
    p.require_graded()
    if t not in p:
        raise InvalidTargetError("unknown target %r" % (t,))
    if p.upper_covers(t):
        raise InvalidTargetError("target %s is not maximal" % t)
    gens = list(gens)
    if not gens:
        raise InvalidGeneratorError("generator set is empty")
    for u in gens:
        if u not in p or not p.lt(u, t):
            raise InvalidGeneratorError("generator %r is not below %s" % (u, t))
    if n < 0 or m < 0:
        raise InvalidParameterError("degrees must be nonnegative")
    allowed = frozenset(x for x in p.below(t) if any(p.leq(x, u) for u in gens))
    k = n + 1
    size = len(_module_chains(p, t, allowed, k, m))
    if size == 0:
        return 0
    return size - _module_rank(p, t, allowed, k, m, field) - _module_rank(p, t, allowed, k + 1, m, field)
