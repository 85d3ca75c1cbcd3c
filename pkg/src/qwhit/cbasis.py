"""The t-layer pieces of two-row modified Macdonald polynomials.

Writing n = k + l with k = ceil(n/2), the coefficient of t^j in
Htilde_(k,l) is divisible by the q-binomial [l choose j]_q; the quotients
C_j^n are N[q] Schur-positive and refine every two-row Htilde_(n-i,i)
through an LU-factored change of basis with the W family.  The same
circle of ideas packages the polarization-filtration kernels K_(a,b) and
the corner-interpolation sums Phi_c^(j) built from T_nu weights.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .macdonald import htilde
from .partitions import inner_corners, mk, remove_cell, tmu
from .qtring import P_ONE, QTPoly, QTRat, R_ONE, R_ZERO, qbinom
from .symfunc import from_s_dict, omega, to_s, zero
from .whittaker import from_w, w_

__all__ = [
    "NonIntegralDivision", "c_pieces", "gamma_matrix", "lower_factor",
    "upper_factor", "w_in_c", "c_in_w", "k_ab", "k_top",
    "corner_removals", "p_weight", "phi", "e_of_inverse_weights",
    "reconstruct_htilde", "phi0_two_row",
]


class NonIntegralDivision(Exception):
    """A t-layer of Htilde_(k,l) failed to divide by its q-binomial."""


def _two_row(a, b):
    return mk((a, b) if b else ((a,) if a else ()))


def _t_layer(c, j):
    """The q-polynomial sitting on t^j inside a polynomial coefficient."""
    p = c.as_poly()
    return QTPoly({(a, 0): v for (a, b), v in p.c.items() if b == j})


def c_pieces(n):
    """[C_0^n, ..., C_l^n]: t-layers of Htilde_(k,l) divided by [l/j]_q."""
    k, l = (n + 1) // 2, n // 2
    sd = to_s(htilde(_two_row(k, l)))
    out = []
    for j in range(l + 1):
        d = {}
        for lam, c in sd.items():
            layer = QTRat.of(_t_layer(c, j)) / qbinom(l, j)
            if layer.is_zero():
                continue
            if not layer.is_poly():
                raise NonIntegralDivision("t^%d layer of %s at %s"
                                          % (j, (k, l), lam))
            d[lam] = layer
        out.append(from_s_dict(d))
    return out


# ---------------------------------------------------------------------------
# change of basis against the two-row W family
# ---------------------------------------------------------------------------

def gamma_matrix(n):
    """(l+1) x (l+1) matrix with Htilde_(n-i,i) = sum_j g[i][j] C_j^n,
    solved directly against the Schur coordinates of the C pieces."""
    from .macdonald import _solve_linear
    l = n // 2
    pieces = [to_s(C) for C in c_pieces(n)]
    support = sorted(set().union(*pieces))
    cols = [[d.get(lam, R_ZERO) for d in pieces] for lam in support]
    out = []
    for i in range(l + 1):
        d = to_s(htilde(_two_row(n - i, i)))
        rhs = [d.get(lam, R_ZERO) for lam in support]
        out.append(_solve_linear(cols, rhs, l + 1))
    return out


def htilde_two_row_in_w(n):
    """(l+1) x (l+1) matrix with Htilde_(n-i,i) = sum_j m[i][j] W_(n-j,j)."""
    from .whittaker import w_expand
    l = n // 2
    out = []
    for i in range(l + 1):
        d = w_expand(htilde(_two_row(n - i, i)))
        out.append([d.get(_two_row(n - j, j), R_ZERO) for j in range(l + 1)])
    return out


def lower_factor(n):
    """Lower-triangular factor: [i/j]_q prod_{a<j} (t - q^(n-i-a))."""
    l = n // 2
    out = []
    for i in range(l + 1):
        row = []
        for j in range(l + 1):
            c = qbinom(i, j)
            for a in range(j):
                c = c * QTRat.of(QTPoly.mono(1, 0, 1)
                                 - QTPoly.mono(1, n - i - a, 0))
            row.append(c)
        out.append(row)
    return out


def upper_factor(n):
    """Upper-unitriangular factor: q^((k-i)(j-i)) [l-i choose j-i]_q."""
    k, l = (n + 1) // 2, n // 2
    out = []
    for i in range(l + 1):
        row = []
        for j in range(l + 1):
            c = qbinom(l - i, j - i) if j >= i else R_ZERO
            if not c.is_zero():
                c = c * QTRat.of(QTPoly.mono(1, (k - i) * (j - i), 0))
            row.append(c)
        out.append(row)
    return out


def w_in_c(n, i, pieces=None):
    """W_(n-i,i) as sum_j q^((k-i)(j-i)) [l-i choose j-i]_q C_j^n."""
    l = n // 2
    pieces = c_pieces(n) if pieces is None else pieces
    U = upper_factor(n)
    out = zero()
    for j in range(i, l + 1):
        out = out + pieces[j] * U[i][j]
    return out


def c_in_w(n, i):
    """C_i^n by inverting: alternating q-binomial combination of W's."""
    k, l = (n + 1) // 2, n // 2
    out = zero()
    for j in range(i, l + 1):
        c = qbinom(l - i, l - j) * QTRat.of(QTPoly.mono(
            (-1) ** (i + j),
            comb(k + 1 - i, 2) - comb(k + 1 - j, 2), 0))
        if not c.is_zero():
            out = out + w_(_two_row(n - j, j)) * c
    return out


# ---------------------------------------------------------------------------
# polarization filtration kernels
# ---------------------------------------------------------------------------

def k_ab(a, b):
    """Kernel character of the polarization map W_(a,b) -> W_(a-1,b+1)."""
    if a < b + 2:
        raise ValueError("filtration step needs a >= b + 2")
    return from_w({_two_row(a, b): R_ONE,
                   _two_row(a - 1, b + 1):
                   QTRat.of(QTPoly.mono(-1, a - b - 1, 0))})


def k_top(n):
    """The first kernel K_n, as a q-reversal of W_(n-1,1)."""
    d = QTRat.of(QTPoly.mono(1, comb(n - 1, 2), 0))
    return omega(w_((n - 1, 1)).map_coeffs(lambda c: c.sub_q_inv() * d))


# ---------------------------------------------------------------------------
# corner-interpolation sums
# ---------------------------------------------------------------------------

def corner_removals(lam):
    """Partitions obtained by removing one corner cell of lam."""
    lam = mk(lam)
    return [remove_cell(lam, i, j) for (i, j) in inner_corners(lam)]


def p_weight(nu, c):
    """prod over alpha in c minus nu of 1/(1 - T_nu/T_alpha)."""
    tn = tmu(nu)
    out = R_ONE
    for alpha in c:
        if alpha == nu:
            continue
        ta = tmu(alpha)
        out = out * QTRat(ta, ta - tn)
    return out


def phi(c, j):
    """sum_nu P_nu(c) (-T_nu)^j Htilde_nu over the corner family c."""
    out = zero()
    for nu in c:
        w = p_weight(nu, c) * QTRat.of(-tmu(nu)) ** j
        out = out + htilde(nu) * w
    return out


def e_of_inverse_weights(nu, c, j):
    """e_j evaluated on the finite alphabet {1/T_alpha : alpha != nu}."""
    others = [tmu(alpha) for alpha in c if alpha != nu]
    out = R_ZERO
    for sub in combinations(others, j):
        term = R_ONE
        for ta in sub:
            term = term * QTRat(P_ONE, ta)
        out = out + term
    return out


def reconstruct_htilde(nu, c):
    """Rebuild Htilde_nu from the phi's: sum_j e_j[S_nu(c)] phi(c, j)."""
    m = len(c)
    out = zero()
    for j in range(m):
        out = out + phi(c, j) * e_of_inverse_weights(nu, c, j)
    return out


def phi0_two_row(l):
    """phi(corners of (l+1,l), 0) as a C-positive sum, degree n = 2l."""
    pieces = c_pieces(2 * l)
    out = zero()
    for i in range(l):
        out = out + pieces[i] * (qbinom(l - 1, i)
                                 * QTRat.of(QTPoly.mono(1, 0, i)))
    return out
