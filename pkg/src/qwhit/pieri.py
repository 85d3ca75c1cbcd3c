"""Pieri rules and cell-indexed up/down operators on the W basis.

Operators act on single basis elements and return sparse W-expansions
as ``{partition: QTRat}`` dicts.  The down/up operators come in two
equivalent forms: the defining recursion on cells, and a closed form
that reads the answer off boundary-cell relations; tests compare them
cell by cell.
"""

from __future__ import annotations

from itertools import combinations

from .partitions import (
    INF, add_cell, conj, horizontal_strip, leftmost_cells, mk, part,
    partitions_of, remove_cell, rightmost_cells, sigma,
)
from .qtring import P_ONE, P_ZERO, QTPoly, QTRat, R_ONE, qbinom, qint

__all__ = [
    "c_coeff", "d_coeff", "slide_c_coeff", "h_perp_w", "what_mult_w",
    "w_add_variable", "d_op", "d_op_rec", "u_op", "u_op_rec",
    "down_up_commutator",
]


# ---------------------------------------------------------------------------
# Pieri coefficients
# ---------------------------------------------------------------------------

def c_coeff(mu, lam):
    """Row product of q-binomials qbinom(sigma_lam(i), lam_i - mu_i)."""
    mu, lam = mk(mu), mk(lam)
    out = QTRat.of(1)
    for i in range(1, max(len(lam), len(mu)) + 1):
        k = part(lam, i - 1) - part(mu, i - 1)
        if k < 0:
            return QTRat.of(0)
        out = out * qbinom(sigma(lam, i), k)
    return out


def d_coeff(mu, lam):
    """Dual-side coefficient; the i = 1 row sees sigma_mu(0) = infinity."""
    mu, lam = mk(mu), mk(lam)
    out = QTRat.of(1)
    for i in range(1, max(len(lam), len(mu)) + 1):
        k = part(lam, i - 1) - part(mu, i - 1)
        if k < 0:
            return QTRat.of(0)
        out = out * qbinom(sigma(mu, i - 1), k)
    return out


def _row_slides(slots, m):
    """Brute-force slide weights: m cells in `slots` positions, packed
    right, slid left one step at a time; returns sum of q^steps."""
    out = P_ZERO
    packed = list(range(slots - m, slots))
    for pos in combinations(range(slots), m):
        steps = sum(p - x for p, x in zip(packed, pos))
        out = out + QTPoly.mono(1, steps, 0)
    return out if m >= 0 else P_ZERO


def slide_c_coeff(mu, lam):
    """c_coeff recomputed by enumerating left-slides row by row."""
    mu, lam = mk(mu), mk(lam)
    out = P_ONE
    for i in range(1, max(len(lam), len(mu)) + 1):
        free = sigma(lam, i)
        moved = free - (part(lam, i - 1) - part(mu, i - 1))
        if moved < 0 or moved > free:
            return P_ZERO
        out = out * _row_slides(free, moved)
    return out


# ---------------------------------------------------------------------------
# strip-indexed rules
# ---------------------------------------------------------------------------

def _strips_below(lam, k):
    """Partitions mu with lam/mu a horizontal k-strip."""
    lam = mk(lam)
    out = []
    for mu in partitions_of(sum(lam) - k, max_part=lam[0] if lam else 0):
        if horizontal_strip(lam, mu):
            out.append(mu)
    return out


def _strips_above(mu, n_extra):
    mu = mk(mu)
    out = []
    for lam in partitions_of(sum(mu) + n_extra):
        if horizontal_strip(lam, mu):
            out.append(lam)
    return out


def h_perp_w(k, lam):
    """h_k-skewing of W_lam in the W basis: {mu: c_coeff}."""
    lam = mk(lam)
    if k == 0:
        return {lam: QTRat.of(1)}
    out = {}
    for mu in _strips_below(lam, k):
        c = c_coeff(mu, lam)
        if not c.is_zero():
            out[mu] = c
    return out


def what_mult_w(k, mu):
    """Multiplication What_k * W_mu in the W basis: {lam: d_coeff}."""
    mu = mk(mu)
    out = {}
    for lam in _strips_above(mu, k):
        d = d_coeff(mu, lam)
        if not d.is_zero():
            out[lam] = d
    return out


def w_add_variable(lam):
    """W_lam(z + y) as {k: {mu: coeff}} with y-degree k."""
    lam = mk(lam)
    return {k: h_perp_w(k, lam) for k in range(sum(lam) + 1)}


# ---------------------------------------------------------------------------
# cell-indexed down operators
# ---------------------------------------------------------------------------

def _merge(d, key, val):
    nv = d.get(key, QTRat.of(0)) + val
    if nv.is_zero():
        d.pop(key, None)
    else:
        d[key] = nv


def _leg_in(lam, i, j):
    return conj(lam)[i] - (j + 1) if i < len(conj(lam)) else -1


def d_op(c, lam):
    """Closed form: each boundary cell weakly NE of c removes the inner
    corner of its row, weighted by a q-integer of its arm."""
    lam = mk(lam)
    out = {}
    for (i2, j2) in leftmost_cells(lam, c):
        coeff = qint(lam[j2] - i2)  # [a+1]_q
        nu = remove_cell(lam, lam[j2] - 1, j2)
        _merge(out, nu, coeff)
    return out


def d_op_rec(c, lam):
    """Defining recursion for the down operator."""
    lam = mk(lam)
    i, j = c
    inside = 0 <= j < len(lam) and 0 <= i < lam[j]
    if not inside:
        return {}
    if _leg_in(lam, i, j) > 0:
        out = {}
        for c2, sgn in (((i, j + 1), 1), ((i + 1, j), 1), ((i + 1, j + 1), -1)):
            for nu, v in d_op_rec(c2, lam).items():
                _merge(out, nu, v * QTRat.of(sgn))
        return out
    # leg 0: strip the inner corner of this row
    nu = remove_cell(lam, lam[j] - 1, j)
    return {nu: qint(lam[j] - i)}


# ---------------------------------------------------------------------------
# cell-indexed up operators
# ---------------------------------------------------------------------------

def _ext_leg_out(mu, i, j):
    """Extended leg for a cell outside mu (finite coordinates)."""
    cj = conj(mu)
    height = cj[i] if i < len(cj) else 0
    return j - height


def u_op(c, mu):
    """Closed form: each boundary cell weakly SW of c adds the outer
    corner of its row, weighted by a q-integer of its arm."""
    mu = mk(mu)
    out = {}
    for (i2, j2) in rightmost_cells(mu, c):
        a = INF if i2 == INF else i2 - part(mu, j2)
        lam = add_cell(mu, part(mu, j2), j2)
        _merge(out, lam, qint(a + 1))
    return out


def u_op_rec(c, mu):
    """Defining recursion for the up operator.  An outer corner is the
    terminating case: it adds its own cell with weight 1."""
    mu = mk(mu)
    i, j = c
    if i != INF and j != INF and 0 <= j < len(mu) and i < mu[j]:
        return {}
    if i != INF and j != INF and i == part(mu, j) and \
            (j == 0 or i < part(mu, j - 1)):
        return {add_cell(mu, i, j): QTRat.of(1)}
    if i != INF and j != INF and _ext_leg_out(mu, i, j) == 0:
        coeff = qint(i - part(mu, j) + 1)
        out = {}
        for lam, v in u_op_rec((part(mu, j), j), mu).items():
            _merge(out, lam, v * coeff)
        return out
    if i == INF and j != INF and j == 0:
        # infinitely far east on the first row: arm is infinite
        out = {}
        for lam, v in u_op_rec((part(mu, 0), 0), mu).items():
            _merge(out, lam, v * qint(INF))
        return out
    out = {}
    for c2 in rightmost_cells(mu, c):
        for lam, v in u_op_rec(c2, mu).items():
            _merge(out, lam, v)
    return out


def down_up_commutator(lam):
    """(DU - UD) applied to W_lam, in the W basis."""
    lam = mk(lam)
    out = {}
    for nu, v in u_op((INF, INF), lam).items():
        for rho, w in d_op((0, 0), nu).items():
            _merge(out, rho, v * w)
    for nu, v in d_op((0, 0), lam).items():
        for rho, w in u_op((INF, INF), nu).items():
            _merge(out, rho, -(v * w))
    return out
