"""Partitions and their cell combinatorics.

A partition is a tuple of weakly decreasing positive ints.  Cells are
(i, j) with i the column and j the row, both 0-based (French orientation:
row 0 is the longest).  Arm and leg are extended to the whole grid: for
a cell inside the shape they are the usual counts; for a cell outside
they measure the distance back to the boundary of the shape, so both
kinds of "boundary" cells have arm (resp. leg) zero.
"""

from __future__ import annotations

from functools import lru_cache

from .qtring import INF, QTPoly, qint

__all__ = [
    "mk", "conj", "partitions_of", "cells", "part", "sigma", "eta",
    "arm", "leg", "leg_below", "bmu", "tmu", "dominates", "contains",
    "inner_corners", "outer_corners", "add_cell", "remove_cell",
    "horizontal_strip", "is_hook", "leftmost_cells", "rightmost_cells",
]


def mk(seq):
    """Normalize to a canonical partition tuple (drop zeros, validate)."""
    p = tuple(int(x) for x in seq if x)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError("not a partition: %r" % (seq,))
    return p


def part(mu, r):
    """Row length mu_{r+1} (r is 0-based); 0 beyond the shape."""
    return mu[r] if 0 <= r < len(mu) else 0


@lru_cache(maxsize=None)
def conj(mu):
    if not mu:
        return ()
    return tuple(sum(1 for x in mu if x > i) for i in range(mu[0]))


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n, lex-descending, parts bounded by max_part."""
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def cells(mu):
    return [(i, j) for j, row in enumerate(mu) for i in range(row)]


def sigma(mu, i):
    """Step size mu_i - mu_{i+1} (1-based rows); sigma(0) is infinite."""
    if i == 0:
        return INF
    return part(mu, i - 1) - part(mu, i)


def eta(mu):
    """Sum of (i-1)*mu_i over rows, i.e. j-weight of the cells."""
    return sum(j * row for j, row in enumerate(mu))


def arm(mu, i, j):
    row = part(mu, j)
    return row - (i + 1) if i < row else i - row


def leg(mu, i, j):
    return arm(conj(mu), j, i)


def leg_below(mu, i):
    """Leg of the virtual cell (i, -1) sitting in the infinite row below."""
    return conj(mu)[i] if i < part(mu, 0) else 0


def bmu(mu):
    """Sum of q^i t^j over the cells."""
    return QTPoly({(i, j): 1 for (i, j) in cells(mu)})


def tmu(mu):
    """q^eta(conj) * t^eta as a monomial."""
    return QTPoly.mono(1, eta(conj(mu)), eta(mu))


def dominates(lam, mu):
    """lam >= mu in dominance (assumes equal size)."""
    s = 0
    for k in range(max(len(lam), len(mu))):
        s += part(lam, k) - part(mu, k)
        if s < 0:
            return False
    return True


def contains(lam, mu):
    """mu sits inside lam."""
    return all(part(lam, j) >= row for j, row in enumerate(mu))


def inner_corners(mu):
    """Removable cells (arm = leg = 0, inside)."""
    return [(mu[j] - 1, j) for j in range(len(mu))
            if mu[j] > part(mu, j + 1)]


def outer_corners(mu):
    """Addable positions (arm = leg = 0, outside)."""
    out = []
    for j in range(len(mu) + 1):
        if part(mu, j - 1) > part(mu, j) or j == 0:
            out.append((part(mu, j), j))
    return out


def add_cell(mu, i, j):
    if (i, j) not in outer_corners(mu):
        raise ValueError("cannot add cell %r to %r" % ((i, j), mu))
    rows = list(mu) + [0] * (j + 1 - len(mu))
    rows[j] += 1
    return mk(rows)


def remove_cell(mu, i, j):
    if (i, j) not in inner_corners(mu):
        raise ValueError("cannot remove cell %r from %r" % ((i, j), mu))
    rows = list(mu)
    rows[j] -= 1
    return mk(rows)


def horizontal_strip(lam, mu):
    """lam/mu is a horizontal strip (mu inside lam, at most one cell per column)."""
    if not contains(lam, mu):
        return False
    return all(part(mu, k) >= part(lam, k + 1) for k in range(len(lam)))


def is_hook(mu):
    return len(mu) == 0 or part(mu, 1) <= 1


def leftmost_cells(lam, c):
    """Cells c' with c ->_lam c': in lam, leg 0, weakly NE of c, leftmost per row.

    Returns a list of (i', j') cells; empty when c is outside lam.
    """
    i, j = c
    if not (0 <= j < len(lam) and 0 <= i < lam[j]):
        return []
    out = []
    for jj in range(j, len(lam)):
        # leg-0 cells of row jj span columns [part(jj+1), part(jj))
        lo = max(i, part(lam, jj + 1))
        if lo < part(lam, jj):
            out.append((lo, jj))
    return out


def rightmost_cells(mu, c):
    """Cells c' with c' ->_mu c: outside mu, leg 0, weakly SW of c, rightmost
    per row; includes (INF, 0) when c = (INF, j).

    Coordinates of c may be INF.  Returns [] when c lies in mu.
    """
    i, j = c
    if j != INF and i != INF and 0 <= j < len(mu) and i < mu[j]:
        return []
    out = []
    jtop = len(mu) if j == INF else min(j, len(mu))
    for jj in range(jtop, -1, -1):
        # leg-0 cells outside mu on row jj span [part(jj), part(jj-1))
        hi = part(mu, jj - 1) if jj > 0 else INF
        lo = part(mu, jj)
        if hi == lo:
            continue
        best = hi - 1 if i == INF else min(i, hi - 1)
        if best == INF:
            out.append((INF, 0))
        elif best >= lo:
            out.append((best, jj))
    return out


def step_coeff(mu, j):
    """[sigma_mu(j+1)]_q as a rational (the weight of row j's boundary cell)."""
    return qint(sigma(mu, j + 1))
