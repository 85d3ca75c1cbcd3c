"""Macdonald polynomials, their modified forms, and Hall-Littlewood data.

Two independent routes to the modified basis are implemented:

* the classical one: Gram-Schmidt for P_mu against dominance in the
  monomial basis, then the plethystic twist to H_mu and its renormalized
  modified form (production for degrees <= 6);
* a triangularity solve that pins the modified basis element directly by
  its two dominance-vanishing conditions plus normalization (used as an
  independent oracle at small degree, and as the production route for
  degrees >= 7 where Gram-Schmidt gets expensive).

The Hall-Littlewood layer (charge, q-Kostka, Q') lives here too, since it
is the t = 0 shadow of the same objects.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    arm, cells, conj, dominates, eta, horizontal_strip, leg, mk, part,
    partitions_of,
)
from .qtring import P_ONE, Q, QTPoly, QTRat, R_ONE, R_ZERO, T, parse_rat
from .symfunc import (
    Alphabet, m_, one, pleth, qt_pair, s_, star_pair, to_s, zero,
)

__all__ = [
    "mac_P", "mac_H", "htilde", "htilde_gs", "htilde_tri",
    "qt_kostka", "wmu", "htilde_expand", "from_htilde",
    "charge", "ssyt_words", "kostka_q", "kostka_count", "qprime", "hl_H",
]


# ---------------------------------------------------------------------------
# P_mu by Gram-Schmidt
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _mac_P_all(n):
    """All P_mu for |mu| = n, as {mu: Sym}; computed lex-ascending."""
    out = {}
    norms = {}
    for mu in reversed(partitions_of(n)):  # (1^n) first
        f = m_(mu)
        for lam, P in out.items():
            c = qt_pair(f, P)
            if not c.is_zero():
                f = f - P * (c / norms[lam])
        out[mu] = f
        norms[mu] = qt_pair(f, f)
    return out


def mac_P(mu):
    mu = mk(mu)
    return _mac_P_all(sum(mu))[mu]


def _coeff_sub(f, fn):
    return f.map_coeffs(fn)


@lru_cache(maxsize=None)
def mac_H(mu):
    """Integral-form transform of P: expand the alphabet by 1/(1-t) and
    clear denominators by the arm/leg hook product."""
    mu = mk(mu)
    P = mac_P(mu)
    f = pleth(P, Alphabet.times_z(QTRat(P_ONE, P_ONE - T)))
    fac = R_ONE
    for (i, j) in cells(mu):
        fac = fac * QTRat.of(
            P_ONE - QTPoly.mono(1, arm(mu, i, j), leg(mu, i, j) + 1))
    return f * fac


@lru_cache(maxsize=None)
def htilde_gs(mu):
    """Modified basis element via the Gram-Schmidt route."""
    mu = mk(mu)
    H = mac_H(mu)
    f = _coeff_sub(H, lambda c: c.sub_t_inv())
    return f * QTPoly.mono(1, 0, eta(mu))


# ---------------------------------------------------------------------------
# triangularity route
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _schur_pleth_matrix(n, var):
    """{lam: {nu: QTRat}} giving s_lam[(1-var) Z] = sum_nu c * s_nu."""
    x = Q if var == "q" else T
    out = {}
    for lam in partitions_of(n):
        g = pleth(s_(lam), Alphabet.times_z(QTRat.of(P_ONE - x)))
        out[lam] = to_s(g)
    return out


def _solve_linear(rows, rhs, k):
    """Row-reduce an overdetermined consistent QTRat system; returns list."""
    aug = [row[:] + [r] for row, r in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(k):
        piv = None
        for i in range(r, len(aug)):
            if not aug[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][col].inv()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(col)
        r += 1
        if r == len(aug):
            break
    if len(piv_cols) != k:
        raise ArithmeticError("underdetermined system")
    for i in range(r, len(aug)):
        if not aug[i][k].is_zero():
            raise ArithmeticError("inconsistent system")
    sol = [R_ZERO] * k
    for i, col in enumerate(piv_cols):
        sol[col] = aug[i][k]
    return sol


def htilde_tri(mu):
    """Modified basis element pinned by its triangularity axioms:
    killing s_lam[(1-q)Z] above mu, s_lam[(1-t)Z] above mu', and unit
    coefficient on s_(n)."""
    mu = mk(mu)
    n = sum(mu)
    parts = partitions_of(n)
    Aq = _schur_pleth_matrix(n, "q")
    At = _schur_pleth_matrix(n, "t")
    muc = conj(mu)
    rows, rhs = [], []
    for lam in parts:
        if not dominates(lam, mu):
            rows.append([Aq[kap].get(lam, R_ZERO) for kap in parts])
            rhs.append(R_ZERO)
    for lam in parts:
        if not dominates(lam, muc):
            rows.append([At[kap].get(lam, R_ZERO) for kap in parts])
            rhs.append(R_ZERO)
    rows.append([R_ONE if kap == (n,) else R_ZERO for kap in parts])
    rhs.append(R_ONE)
    sol = _solve_linear(rows, rhs, len(parts))
    out = zero()
    for kap, c in zip(parts, sol):
        if not c.is_zero():
            out = out + s_(kap) * c
    return out


# ---------------------------------------------------------------------------
# triangularity route, solved numerically and interpolated
#
# The symbolic solve above drowns in bivariate gcds around degree 8.  The
# same system solved at integer points (q0, t0) costs next to nothing, and
# the Schur coefficients are polynomials with q-degree <= eta(mu') and
# t-degree <= eta(mu) (both bounded by the s_(1^n) coefficient T_mu), so a
# grid of exact solves plus Lagrange interpolation recovers them exactly.
# Two off-grid residual checks guard the degree bounds; the t = 0 charge
# oracle and the small-degree symbolic routes cross-check it in tests.
# ---------------------------------------------------------------------------

def _eval_poly_num(p, qv, tv):
    return sum(k * qv ** a * tv ** b for (a, b), k in p.c.items())


def _eval_rat_num(c, qv, tv):
    den = _eval_poly_num(c.den, qv, tv)
    return Fraction(_eval_poly_num(c.num, qv, tv), den)


@lru_cache(maxsize=None)
def _pleth_numeric(n, var, val):
    """_schur_pleth_matrix(n, var) rows evaluated at the numeric point."""
    sym = _schur_pleth_matrix(n, var)
    parts = partitions_of(n)
    qv, tv = (val, Fraction(0)) if var == "q" else (Fraction(0), val)
    out = {}
    for lam in parts:
        out[lam] = {kap: _eval_rat_num(c, qv, tv)
                    for kap, c in sym[lam].items()}
    return out


def _solve_numeric(rows, rhs, k):
    aug = [row[:] + [r] for row, r in zip(rows, rhs)]
    r = 0
    piv_cols = []
    for col in range(k):
        piv = next((i for i in range(r, len(aug)) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(col)
        r += 1
    if len(piv_cols) != k:
        raise ArithmeticError("degenerate point")
    for i in range(r, len(aug)):
        if aug[i][k]:
            raise ArithmeticError("inconsistent system")
    sol = [Fraction(0)] * k
    for i, col in enumerate(piv_cols):
        sol[col] = aug[i][k]
    return sol


def _tri_rows_numeric(mu, qv, tv):
    n = sum(mu)
    parts = partitions_of(n)
    Aq = _pleth_numeric(n, "q", qv)
    At = _pleth_numeric(n, "t", tv)
    muc = conj(mu)
    rows, rhs = [], []
    for lam in parts:
        if not dominates(lam, mu):
            rows.append([Aq[kap].get(lam, Fraction(0)) for kap in parts])
            rhs.append(Fraction(0))
    for lam in parts:
        if not dominates(lam, muc):
            rows.append([At[kap].get(lam, Fraction(0)) for kap in parts])
            rhs.append(Fraction(0))
    rows.append([Fraction(kap == (n,)) for kap in parts])
    rhs.append(Fraction(1))
    return rows, rhs


def _newton_interp(xs, ys):
    """Coefficients (low to high) of the poly through (xs[i], ys[i])."""
    m = len(xs)
    dd = list(ys)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * m
    coeffs[0] = dd[m - 1]
    # multiply out the Newton form from the top down
    for i in range(m - 2, -1, -1):
        for k in range(m - 1, 0, -1):
            coeffs[k] = coeffs[k - 1] - xs[i] * coeffs[k]
        coeffs[0] = dd[i] - xs[i] * coeffs[0]
    return coeffs


def htilde_interp(mu):
    """Modified basis element by numeric solves of the triangularity
    system on a grid, interpolated in q then t."""
    mu = mk(mu)
    n = sum(mu)
    parts = partitions_of(n)
    k = len(parts)
    dq, dt = eta(conj(mu)), eta(mu)
    qpts = [Fraction(2 + 2 * i) for i in range(dq + 1)]
    tpts = [Fraction(3 + 2 * i) for i in range(dt + 1)]
    sols = []
    for tv in tpts:
        row_sols = []
        for qv in qpts:
            rows, rhs = _tri_rows_numeric(mu, qv, tv)
            row_sols.append(_solve_numeric(rows, rhs, k))
        sols.append(row_sols)
    coeffs = {}
    for idx, kap in enumerate(parts):
        by_t = [_newton_interp(qpts, [sol[idx] for sol in row_sols])
                for row_sols in sols]
        poly = {}
        for a in range(dq + 1):
            col = _newton_interp(tpts, [by_t[i][a] for i in range(dt + 1)])
            for b, v in enumerate(col):
                if v:
                    if v.denominator != 1:
                        raise ArithmeticError(
                            "non-integral interpolant at %s" % (mu,))
                    poly[(a, b)] = int(v)
        if poly:
            coeffs[kap] = QTPoly(poly)
    # off-grid residual checks: the interpolant must still solve the system
    for qv, tv in [(Fraction(2 + 2 * (dq + 1)), Fraction(3 + 2 * (dt + 1))),
                   (Fraction(97), Fraction(101))]:
        vec = [_eval_poly_num(coeffs.get(kap, QTPoly()), qv, tv)
               for kap in parts]
        rows, rhs = _tri_rows_numeric(mu, qv, tv)
        for row, want in zip(rows, rhs):
            got = sum(r * v for r, v in zip(row, vec) if v)
            if got != want:
                raise ArithmeticError("residual check failed at %s" % (mu,))
    out = zero()
    for kap, c in coeffs.items():
        out = out + s_(kap) * QTRat.of(c)
    return out


# ---------------------------------------------------------------------------
# production dispatch + disk cache
# ---------------------------------------------------------------------------

_CACHE_FORMAT = 1


def _cache_dir():
    return os.environ.get("QWHIT_CACHE")


def _cache_load(name):
    d = _cache_dir()
    if not d:
        return None
    path = os.path.join(d, "%s.json" % name)
    try:
        with open(path) as fh:
            blob = json.load(fh)
    except (OSError, ValueError):
        return None
    if blob.get("format") != _CACHE_FORMAT:
        return None
    return blob["data"]


def _cache_store(name, data):
    d = _cache_dir()
    if not d:
        return
    os.makedirs(d, exist_ok=True)
    path = os.path.join(d, "%s.json" % name)
    tmp = path + ".tmp.%d" % os.getpid()
    with open(tmp, "w") as fh:
        json.dump({"format": _CACHE_FORMAT, "data": data}, fh)
    os.replace(tmp, path)


def _mu_key(mu):
    return ",".join(map(str, mu))


def _sym_to_strs(f):
    return {_mu_key(lam): str(c) for lam, c in to_s(f).items()}


def _sym_from_strs(d):
    out = zero()
    for k, cs in d.items():
        lam = mk(int(x) for x in k.split(",")) if k else ()
        out = out + s_(lam) * parse_rat(cs)
    return out


@lru_cache(maxsize=None)
def _htilde_single(mu):
    """One modified basis element at degree >= 7, disk-cached per mu."""
    name = "htilde_%d_%s" % (sum(mu), "-".join(map(str, mu)))
    cached = _cache_load(name)
    if cached is not None:
        return _sym_from_strs(cached)
    f = htilde_interp(mu)
    _cache_store(name, _sym_to_strs(f))
    return f


@lru_cache(maxsize=None)
def _htilde_degree(n):
    """{mu: Sym} for all mu of size n, production route."""
    name = "htilde_%d" % n
    cached = _cache_load(name)
    if cached is not None:
        return {mk(int(x) for x in k.split(",")): _sym_from_strs(v)
                for k, v in cached.items()}
    if n <= 6:
        out = {mu: htilde_gs(mu) for mu in partitions_of(n)}
        if n == 6:
            _cache_store(name, {_mu_key(mu): _sym_to_strs(f)
                                for mu, f in out.items()})
    else:
        out = {mu: _htilde_single(mu) for mu in partitions_of(n)}
    return out


def htilde(mu):
    mu = mk(mu)
    if not mu:
        return one()
    if sum(mu) <= 6:
        return _htilde_degree(sum(mu))[mu]
    return _htilde_single(mu)


def qt_kostka(n):
    """{(lam, mu): QTRat} with column mu giving the Schur coefficients."""
    out = {}
    for mu in partitions_of(n):
        for lam, c in to_s(htilde(mu)).items():
            out[(lam, mu)] = c
    return out


@lru_cache(maxsize=None)
def wmu(mu):
    """Orthogonality weight: prod over cells of
    (q^a - t^(l+1)) (t^l - q^(a+1))."""
    mu = mk(mu)
    out = P_ONE
    for (i, j) in cells(mu):
        a, l = arm(mu, i, j), leg(mu, i, j)
        out = out * (QTPoly.mono(1, a, 0) - QTPoly.mono(1, 0, l + 1))
        out = out * (QTPoly.mono(1, 0, l) - QTPoly.mono(1, a + 1, 0))
    return out


def htilde_expand(f):
    """Expand f in the modified basis: {mu: QTRat}, degreewise."""
    out = {}
    for n in f.degrees():
        fn = f.homogeneous(n)
        for mu in partitions_of(n):
            c = star_pair(fn, htilde(mu)) / wmu(mu)
            if not c.is_zero():
                out[mu] = c
    return out


def from_htilde(d):
    out = zero()
    for mu, c in d.items():
        out = out + htilde(mk(mu)) * c
    return out


# ---------------------------------------------------------------------------
# Hall-Littlewood: charge, q-Kostka, Q'
# ---------------------------------------------------------------------------

def charge(word):
    """Charge of a word with partition content (Lascoux-Schutzenberger).

    Repeatedly extract a standard subword by scanning right-to-left
    cyclically for 1, 2, 3, ...; the charge is the sum over extracted
    subwords of the index statistic (index of 1 is 0; going from r to r+1
    adds 1 exactly when r+1 sits to the right of r).
    """
    w = list(word)
    total = 0
    while w:
        top = max(w)
        pos = None
        picked = []
        for letter in range(1, top + 1):
            idxs = [i for i, x in enumerate(w) if x == letter]
            if not idxs:
                break
            if pos is None:
                pick = idxs[-1]
            else:
                left = [i for i in idxs if i < pos]
                pick = left[-1] if left else idxs[-1]
            picked.append(pick)
            pos = pick
        # index statistic: letter r+1 gains 1 exactly when it sits to the
        # right of letter r in the original word
        idx_of = {r + 1: picked[r] for r in range(len(picked))}
        val = 0
        cur = 0
        for r in range(1, len(picked)):
            if idx_of[r + 1] > idx_of[r]:
                cur += 1
            val += cur
        total += val
        for i in sorted(picked, reverse=True):
            w.pop(i)
    return total


def ssyt_words(lam, mu):
    """Reading words (bottom row last) of all SSYT of shape lam, content mu.

    A tableau is a chain of horizontal strips; the reading word lists rows
    from the top of the shape down to the bottom, left to right.
    """
    lam, mu = mk(lam), mk(mu)
    if sum(lam) != sum(mu):
        return []
    chains = [[()]]
    for k in mu:
        new = []
        for ch in chains:
            base = ch[-1]
            for nxt in _strip_ups(base, lam, k):
                new.append(ch + [nxt])
        chains = new
    words = []
    for ch in chains:
        entry = {}
        for step, (prev, cur) in enumerate(zip(ch, ch[1:]), start=1):
            for j, row in enumerate(cur):
                plen = prev[j] if j < len(prev) else 0
                for i in range(plen, row):
                    entry[(i, j)] = step
        rows = []
        for j in range(len(lam) - 1, -1, -1):
            rows.extend(entry[(i, j)] for i in range(lam[j]))
        words.append(tuple(rows))
    return words


def _strip_ups(base, lam, k):
    """Shapes nu with base inside nu inside lam, nu/base a horizontal k-strip."""
    rows = len(lam)
    out = []

    def rec(j, left, cur):
        if j == rows:
            if left == 0:
                out.append(mk(cur))
            return
        lo = part(base, j)
        hi = lam[j] if j == 0 else min(lam[j], part(base, j - 1))
        for add in range(min(hi - lo, left) + 1):
            rec(j + 1, left - add, cur + [lo + add])

    rec(0, k, [])
    return out


@lru_cache(maxsize=None)
def kostka_q(lam, mu):
    """q-Kostka polynomial: sum of q^charge over SSYT(lam, mu)."""
    lam, mu = mk(lam), mk(mu)
    out = QTPoly()
    for w in ssyt_words(lam, mu):
        out = out + QTPoly.mono(1, charge(w), 0)
    return out


def kostka_count(lam, mu):
    """Plain Kostka number (tableau count)."""
    return kostka_q(lam, mu).sub_q1().const_value()


@lru_cache(maxsize=None)
def qprime(mu):
    """Q'_mu = sum_lam K_{lam,mu}(q) s_lam."""
    mu = mk(mu)
    out = zero()
    for lam in partitions_of(sum(mu)):
        c = kostka_q(lam, mu)
        if not c.is_zero():
            out = out + s_(lam) * c
    return out


@lru_cache(maxsize=None)
def hl_H(mu):
    """The t = 0 specialization of the modified basis, built independently
    from charge data: q^eta(mu') * Q'_{mu'} with q inverted."""
    mu = mk(mu)
    d = QTRat.of(QTPoly.mono(1, eta(conj(mu)), 0))
    return qprime(conj(mu)).map_coeffs(lambda c: c.sub_q_inv() * d)
