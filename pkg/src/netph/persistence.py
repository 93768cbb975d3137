"""Persistent homology over the two-element field by boundary-matrix reduction."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .complex import MAX_DIM, FilteredComplex, facets
from .errors import StructuralError

#: prime of the coefficient field
FIELD_CHARACTERISTIC = 2
#: death weight reported for classes that never die
ESSENTIAL_DEATH = 1.0


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse mod-2 boundary matrix; column ``j`` lists the positions of the
    facets of simplex ``j``, ascending."""

    columns: tuple[tuple[int, ...], ...]
    dims: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.columns)


@dataclass(frozen=True, order=True)
class PersistencePair:
    dim: int
    birth_index: int
    death_index: int | None = None

    @property
    def essential(self) -> bool:
        return self.death_index is None


@dataclass(frozen=True)
class Interval:
    dim: int
    birth: float
    death: float
    essential: bool
    birth_index: int
    death_index: int | None

    @property
    def persistence(self) -> float:
        return self.death - self.birth


def boundary_matrix(fc: FilteredComplex) -> BoundaryMatrix:
    index = fc.index
    cols = []
    for pos, s in enumerate(fc.simplices):
        try:
            col = sorted(index[f] for f in facets(s))
        except KeyError as exc:
            raise StructuralError(f"face {exc.args[0]} of {s} is not in the complex") from None
        if col and col[-1] >= pos:
            raise StructuralError(f"face of {s} appears after it in the filtration")
        cols.append(tuple(col))
    return BoundaryMatrix(columns=tuple(cols), dims=tuple(len(s) - 1 for s in fc.simplices))


def boundary_squared_is_zero(m: BoundaryMatrix) -> bool:
    """Check that composing the boundary with itself vanishes mod 2."""
    for col in m.columns:
        parity: Counter[int] = Counter()
        for f in col:
            parity.update(m.columns[f])
        if any(c % FIELD_CHARACTERISTIC for c in parity.values()):
            return False
    return True


def reduce(m: BoundaryMatrix) -> list[PersistencePair]:
    """Pair births with deaths by the standard column reduction.

    Dimensions are reduced from the top down. When a column of dimension p
    gets lowest entry i, simplex i creates a class and its own column is
    known to reduce to zero, so it is skipped ("clearing"). Columns are held
    as Python ints used as bitsets over the row simplices of one dimension,
    so a column addition is a single XOR. Pairs come back sorted by
    dimension, then birth position.
    """
    dims = m.dims
    n = len(dims)
    if n == 0:
        return []
    top = max(dims)
    by_dim: list[list[int]] = [[] for _ in range(top + 1)]
    local = [0] * n
    for j, d in enumerate(dims):
        local[j] = len(by_dim[d])
        by_dim[d].append(j)

    death_of: dict[int, int] = {}
    for p in range(top, 0, -1):
        rows = by_dim[p - 1]
        pivots: dict[int, int] = {}
        for j in by_dim[p]:
            if j in death_of:
                continue
            col = 0
            for f in m.columns[j]:
                col ^= 1 << local[f]
            while col:
                low = col.bit_length() - 1
                other = pivots.get(low)
                if other is None:
                    pivots[low] = col
                    death_of[rows[low]] = j
                    break
                col ^= other

    deaths = set(death_of.values())
    pairs = [
        PersistencePair(dims[j], j, death_of.get(j))
        for j in range(n)
        if j not in deaths
    ]
    pairs.sort()
    return pairs


def compute_persistence(fc: FilteredComplex) -> list[PersistencePair]:
    return reduce(boundary_matrix(fc))


def betti_numbers(pairs: Sequence[PersistencePair], top: int = MAX_DIM) -> list[int]:
    """Betti numbers of the full complex: essential classes per dimension."""
    out = [0] * (top + 1)
    for pr in pairs:
        if pr.essential and pr.dim <= top:
            out[pr.dim] += 1
    return out


def persistent_betti(
    pairs: Sequence[PersistencePair], fc: FilteredComplex, i: int, j: int, p: int
) -> int:
    """Rank of ``H_p(K_i) -> H_p(K_{i+j})`` for the stage filtration of ``fc``.

    Stage ``i`` is the subcomplex of weight at most ``fc.levels[i-1]``; stage 0
    is empty. Counts dimension-``p`` classes born by stage ``i`` and still
    alive at stage ``i + j``.
    """
    n = fc.num_stages
    if i < 0 or j < 0 or i + j > n:
        raise IndexError(f"stages must satisfy 0 <= i <= i+j <= {n}")
    if i == 0:
        return 0
    lam_i = fc.levels[i - 1]
    lam_ij = fc.levels[i + j - 1]
    w = fc.weights
    count = 0
    for pr in pairs:
        if pr.dim != p or w[pr.birth_index] > lam_i:
            continue
        if pr.essential or w[pr.death_index] > lam_ij:
            count += 1
    return count


def barcodes(
    pairs: Sequence[PersistencePair], fc: FilteredComplex, top: int = MAX_DIM
) -> dict[int, list[Interval]]:
    """Intervals in weight coordinates, per dimension ``0..top``.

    Essential classes get death ``ESSENTIAL_DEATH``. Zero-length intervals
    are kept.
    """
    w = fc.weights
    out: dict[int, list[Interval]] = {d: [] for d in range(top + 1)}
    for pr in pairs:
        if pr.dim > top:
            continue
        death = ESSENTIAL_DEATH if pr.essential else float(w[pr.death_index])
        out[pr.dim].append(
            Interval(pr.dim, float(w[pr.birth_index]), death, pr.essential, pr.birth_index, pr.death_index)
        )
    return out


def euler_characteristic(counts: Sequence[int]) -> int:
    return sum((-1) ** p * c for p, c in enumerate(counts))


def pairing_counts_consistent(pairs: Sequence[PersistencePair], fc: FilteredComplex) -> bool:
    """Every simplex is exactly one of: paired birth, paired death, essential birth."""
    top = max(fc.max_dim, 0)
    births = [0] * (top + 2)
    ess = [0] * (top + 2)
    deaths = [0] * (top + 2)
    dims = fc.dims
    for pr in pairs:
        if pr.essential:
            ess[pr.dim] += 1
        else:
            births[pr.dim] += 1
            deaths[int(dims[pr.death_index])] += 1
    counts = fc.count_by_dim(top) + [0]
    return all(births[p] + ess[p] + deaths[p] == counts[p] for p in range(top + 1))


def as_array(intervals: Sequence[Interval]) -> np.ndarray:
    return np.array([(iv.birth, iv.death) for iv in intervals], dtype=np.float64).reshape(-1, 2)
