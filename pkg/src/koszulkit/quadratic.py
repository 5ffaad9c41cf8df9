"""Quadratic dual coring and Koszul complex of an incidence ring.

V is spanned by the covers, V (x) V by cover 2-chains, and the relations W are
the kernel of multiplication into the length-2 intervals.  The degree ``n``
part of the dual is the intersection, over the inner positions, of the
kernels of "multiply at that position" on the cover ``n``-chains.  Every map
involved preserves the endpoints of a chain, so the computation is done one
``(start, end)`` block at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .bar import enumerate_chains, tor_table
from .linalg import QQ, Echelon, Field, SparseMatrix, intersect_subspaces, kernel_basis
from .poset import Poset

__all__ = [
    "ShriekBasis",
    "QuadraticData",
    "compute_shriek",
    "quadratic_data",
    "koszul_complex_exact",
    "KoszulComplexReport",
    "phi_dimension_check",
    "PhiReport",
]


@dataclass(frozen=True)
class ShriekBasis:
    n: int
    chains: tuple  # cover n-chains, the ambient basis
    vectors: tuple  # each a {chain: coefficient} dict
    blocks: dict  # (start, end) -> tuple of vectors supported there

    def __len__(self):
        return len(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors)


def _block_shriek(chains, n, field):
    """Basis of the degree-n dual inside one endpoint block of cover chains."""
    kernels = []
    for pos in range(1, n):
        targets = {}
        cols = []
        for c in chains:
            merged = c[:pos] + c[pos + 1:]
            i = targets.setdefault(merged, len(targets))
            cols.append({i: 1})
        kernels.append(kernel_basis(SparseMatrix.from_columns(len(targets), cols), field))
    return intersect_subspaces(kernels, len(chains), field)


def compute_shriek(p: Poset, n: int, field: Field = QQ) -> ShriekBasis:
    """Basis of the degree ``n`` component of the quadratic dual coring."""
    p.require_graded()
    chains = enumerate_chains(p, n, n).chains
    one = field.coerce(1)
    if n <= 1:
        vectors = tuple({c: one} for c in chains)
        blocks = {}
        for v in vectors:
            (c,) = v
            blocks.setdefault((c[0], c[-1]), []).append(v)
        return ShriekBasis(n, chains, vectors, {k: tuple(b) for k, b in blocks.items()})

    by_block = {}
    for c in chains:
        by_block.setdefault((c[0], c[-1]), []).append(c)
    vectors = []
    blocks = {}
    for key, block in by_block.items():
        vecs = []
        for v in _block_shriek(block, n, field):
            vecs.append({block[j]: x for j, x in enumerate(v) if x})
        if vecs:
            blocks[key] = tuple(vecs)
            vectors.extend(vecs)
    return ShriekBasis(n, chains, tuple(vectors), blocks)


@dataclass(frozen=True)
class QuadraticData:
    field: Field
    cover_basis: tuple
    relation_basis: tuple  # vectors over cover 2-chains spanning Ker mu_{1,1}
    shriek: dict  # n -> ShriekBasis, for 0 <= n <= max interval length


def quadratic_data(p: Poset, field: Field = QQ) -> QuadraticData:
    p.require_graded()
    shriek = {n: compute_shriek(p, n, field) for n in range(p.max_length + 1)}
    covers = enumerate_chains(p, 1, 1).chains
    relations = shriek[2].vectors if 2 in shriek else ()
    return QuadraticData(field, covers, relations, shriek)


# -- Koszul complex ---------------------------------------------------------------


class KoszulComplexReport(NamedTuple):
    exact: bool
    failure: Optional[tuple]  # (n, q): homological and internal degree of the first nonzero homology
    homology: dict  # (n, q) -> dim, n = 0 being the augmented position


class _Indexer(dict):
    def __missing__(self, key):
        i = self[key] = len(self)
        return i


def _koszul_terms(p, data, q):
    """Basis of K_n(A)_q for n = 0..q as {ambient key: coefficient} dicts.

    Ambient keys are ``(w, chain)``: the algebra factor e_{w, chain[0]}
    followed by a cover chain.
    """
    lengths = p.lengths
    terms = {}
    for n in range(q + 1):
        sh = data.shriek.get(n)
        if sh is None:
            terms[n] = []
            continue
        by_start = {}
        for v in sh.vectors:
            start = next(iter(v))[0]
            by_start.setdefault(start, []).append(v)
        basis = []
        for w in p.elements:
            for x in (w,) + p.above(w):
                if lengths[(w, x)] != q - n:
                    continue
                for v in by_start.get(x, ()):
                    basis.append({(w, c): a for c, a in v.items()})
        terms[n] = basis
    return terms


def _boundary(vec, field):
    """Apply the Koszul differential on ambient coordinates: fold the first cover into the algebra factor."""
    out = {}
    for (w, c), a in vec.items():
        key = (w, c[1:])
        out[key] = out.get(key, 0) + a
    if not field.is_rational:
        return {k: v % field.p for k, v in out.items() if v % field.p}
    return {k: v for k, v in out.items() if v}


def _rank_of(vectors, field, indexer):
    ech = Echelon(field)
    for v in vectors:
        if v:
            ech.add({indexer[k]: a for k, a in v.items()})
    return ech.rank


def koszul_complex_exact(p: Poset, field: Field = QQ, check: bool = False) -> KoszulComplexReport:
    """Decide whether K_*(A) -> R -> 0 is exact, one internal degree at a time.

    With ``check`` set, also verify that the differential squares to zero and
    that each boundary lands in the span of the next term's basis (the tails
    of dual vectors are dual vectors again).
    """
    data = quadratic_data(p, field)
    n_elements = len(p)
    homology = {}
    failure = None
    for q in range(p.max_length + 1):
        terms = _koszul_terms(p, data, q)
        indexer = _Indexer()
        ranks = {}
        for n in range(1, q + 1):
            images = [_boundary(v, field) for v in terms[n]]
            ranks[n] = _rank_of(images, field, indexer)
            if check:
                _verify(terms, images, n, field)
        ranks[q + 1] = 0
        rank0 = n_elements if q == 0 else 0
        for n in range(q + 1):
            incoming = ranks[n + 1]
            outgoing = rank0 if n == 0 else ranks[n]
            h = len(terms[n]) - outgoing - incoming
            homology[(n, q)] = h
            if h and failure is None:
                failure = (n, q)
    return KoszulComplexReport(failure is None, failure, homology)


def _verify(terms, images, n, field):
    for img in images if n >= 2 else ():
        if _boundary(img, field):
            raise AssertionError("Koszul differential does not square to zero in degree %d" % n)
    indexer = _Indexer()
    ech = Echelon(field)
    for v in terms[n - 1]:
        ech.add({indexer[k]: a for k, a in v.items()})
    for img in images:
        if img and not ech.contains({indexer[k]: a for k, a in img.items()}):
            raise AssertionError("boundary of a degree %d generator leaves K_%d" % (n, n - 1))


class PhiReport(NamedTuple):
    agree: bool
    koszul: bool
    pairs: tuple  # (n, dim of dual in degree n, dim T_{n,n})


def phi_dimension_check(p: Poset, field: Field = QQ) -> PhiReport:
    """Compare the graded dimensions of the quadratic dual with the Tor diagonal."""
    table = tor_table(p, field)
    pairs = tuple((n, compute_shriek(p, n, field).dim, table[(n, n)]) for n in range(p.max_length + 1))
    same = all(a == b for _, a, b in pairs)
    return PhiReport(same and table.koszul, table.koszul, pairs)
