"""Macdonald eigenoperators, their specializations, and the curve operators.

Every operator in the nabla/Delta family is diagonal on the modified
Macdonald basis, so applying one is always expand / scale by eigenvalue /
reassemble.  The two-index curve operators O_mn are generated from
multiplication by e_1 and the degree operator D_0 through a gcd-splitting
commutator recursion; they act on modified-basis coefficient vectors,
which makes the recursion memoize well.

The t = 0 and t = 1/q shadows of these operators produce W-positive
symmetric functions in many cases; the closed forms for those expansions
live here next to the operators themselves so tests can compare both
sides.
"""

from __future__ import annotations

import bisect
from functools import lru_cache
from itertools import product
from math import gcd as igcd

from .macdonald import from_htilde, htilde, htilde_expand, kostka_q
from .partitions import (
    bmu, cells, conj, dominates, eta, leg, mk, part, partitions_of, tmu,
)
from .qtring import (
    P_ONE, P_ZERO, Q, QTPoly, QTRat, R_ONE, R_ZERO, T, qbinom, qint,
    qmultinom,
)
from .symfunc import (
    Alphabet, Sym, e_, h_, hall, m_, omega, one, p_, pleth, s_, to_s, zero,
)
from .whittaker import from_w, w_expand, what_expand

__all__ = [
    "PoleAtSpecialization", "InvalidIndex",
    "eval_finite", "eigenop", "nabla", "delta", "delta_prime", "d0",
    "delta_zero", "delta_bar", "nabla_zero", "nabla_bar",
    "elliptic_O", "elliptic_Q", "qmn_alpha", "formula_Qmn_specialized",
    "positivity", "w_support_t0",
    "delta_zero_expansions", "P_nu_k", "P_nu_k_oracle", "delta_zero_schur",
    "delta_zero_op_identity",
    "prop_delta_W", "delta0_W_top", "delta0_W_second", "delta0_W_two_rows",
    "delta0_W_hook",
    "qt_delta_two_rows", "nabla_W_two_rows",
    "V_n", "dyck_area_seqs", "llt_dyck", "v_n_from_paths",
    "nabla_en_from_paths", "v_series", "forest_count",
    "s_over_1mq_expansion", "gamma_hook",
    "C_coeff", "A_mu",
]


class PoleAtSpecialization(Exception):
    """A coefficient had a pole at the requested (q,t) specialization."""


class InvalidIndex(Exception):
    """No curve operator exists for these indices."""


# ---------------------------------------------------------------------------
# diagonal operators on the modified basis
# ---------------------------------------------------------------------------

def eval_finite(f, al):
    """Plethystic evaluation f[al] at a polynomial alphabet al in q,t."""
    return pleth(f, Alphabet.scalar(QTRat.of(al))).constant()


def eigenop(g, eig):
    """Apply the operator with eigenvalue eig(mu) on the modified basis."""
    d = htilde_expand(g)
    return from_htilde({mu: c * eig(mu) for mu, c in d.items()})


def nabla(g):
    """The nabla operator: eigenvalue T_mu."""
    return eigenop(g, lambda mu: QTRat.of(tmu(mu)))


@lru_cache(maxsize=None)
def _bmu_eval(f, mu, shift):
    return eval_finite(f, QTPoly.const(shift) + bmu(mu))


def delta(f, g):
    """Delta_f: eigenvalue f[B_mu]."""
    return eigenop(g, lambda mu: _bmu_eval(f, mu, 0))


def delta_prime(f, g):
    """Delta'_f: eigenvalue f[B_mu - 1]."""
    return eigenop(g, lambda mu: _bmu_eval(f, mu, -1))


@lru_cache(maxsize=None)
def _d0_eig(mu):
    return QTRat.of(P_ONE - (P_ONE - Q) * (P_ONE - T) * bmu(mu))


def d0(g):
    """The degree-preserving generator: eigenvalue 1 - (1-q)(1-t) B_mu."""
    return eigenop(g, _d0_eig)


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------

def _specialize(g, sub, label):
    try:
        return g.map_coeffs(sub)
    except ZeroDivisionError as exc:
        raise PoleAtSpecialization("%s: %s" % (label, exc)) from exc


def delta_zero(f, g):
    """Delta'_f followed by t := 0."""
    return _specialize(delta_prime(f, g), lambda c: c.sub_t0(), "t=0")


def delta_bar(f, g):
    """Delta_f followed by t := 1/q."""
    return _specialize(delta(f, g), lambda c: c.sub_t_qinv(), "t=1/q")


def nabla_zero(g):
    return _specialize(nabla(g), lambda c: c.sub_t0(), "t=0")


def nabla_bar(g):
    return _specialize(nabla(g), lambda c: c.sub_t_qinv(), "t=1/q")


# ---------------------------------------------------------------------------
# curve operators O_mn and the functions Q_mn = O_mn(1)
# ---------------------------------------------------------------------------

_M_INV = QTRat(P_ONE, (P_ONE - Q) * (P_ONE - T))


@lru_cache(maxsize=None)
def _e1_on(mu):
    """Modified-basis row of multiplication by e_1."""
    d = htilde_expand(htilde(mu) * p_(1))
    return tuple(sorted(d.items()))


def _apply_e1(vec):
    out = {}
    for mu, c in vec.items():
        for lam, w in _e1_on(mu):
            nv = out.get(lam, R_ZERO) + c * w
            if nv.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = nv
    return out


def _apply_d0(vec):
    return {mu: c * _d0_eig(mu) for mu, c in vec.items()}


def _split(m, n):
    """The unique (k0,l0) with 0 <= k0 < m/d, (m/d) l0 - (n/d) k0 = 1,
    0 <= l0 <= n/d; the bracket piece O_{(k0,l0)} acts first."""
    d = igcd(m, n)
    a, b = m // d, n // d
    for k0 in range(a):
        if (1 + b * k0) % a == 0:
            l0 = (1 + b * k0) // a
            if l0 <= b:
                return (k0, l0), (m - k0, n - l0)
    raise InvalidIndex("no splitting for (%d, %d)" % (m, n))


_O_MEMO = {}


def _o_vec(m, n, vec):
    if not vec:
        return {}
    if (m, n) == (0, 1):
        return _apply_e1(vec)
    if (m, n) == (1, 0):
        return _apply_d0(vec)
    key = (m, n, frozenset(vec.items()))
    hit = _O_MEMO.get(key)
    if hit is not None:
        return dict(hit)
    (k0, l0), (u, v) = _split(m, n)
    left = _o_vec(k0, l0, _o_vec(u, v, vec))
    right = _o_vec(u, v, _o_vec(k0, l0, vec))
    out = {}
    for mu, c in left.items():
        out[mu] = c
    for mu, c in right.items():
        nv = out.get(mu, R_ZERO) - c
        if nv.is_zero():
            out.pop(mu, None)
        else:
            out[mu] = nv
    out = {mu: c * _M_INV for mu, c in out.items()}
    _O_MEMO[key] = dict(out)
    return out


def _check_index(m, n):
    if m < 0 or n < 0 or (m, n) == (0, 0):
        raise InvalidIndex("bad curve index (%d, %d)" % (m, n))
    if (n == 0 and m > 1) or (m == 0 and n > 1):
        raise InvalidIndex("index (%d, %d) is outside the generated cone"
                           % (m, n))


def elliptic_O(m, n, g):
    """Apply the curve operator O_mn to g."""
    _check_index(m, n)
    return from_htilde(_o_vec(m, n, htilde_expand(g)))


def elliptic_Q(m, n):
    """Q_mn = O_mn applied to 1."""
    _check_index(m, n)
    return from_htilde(_o_vec(m, n, {(): R_ONE}))


def qmn_alpha(m, n):
    """The q-power normalizing Q_mn at t = 1/q."""
    return (m * n - m - n + igcd(m, n)) // 2


def formula_Qmn_specialized(m, n):
    """Closed-form W-expansion of q^alpha Q_mn(q, 1/q)."""
    d = igcd(m, n)
    ratio = qint(d) / qint(m)
    out = {}
    for mu in partitions_of(n):
        c = QTRat.of(QTPoly.mono(1, eta(conj(mu)), 0)) * ratio
        for (i, j) in cells(mu):
            if leg(mu, i, j) == 0:
                # (1 - q^(m-i)) as (q^i - q^m)/q^i, times 1/(1 - q^(a+1))
                a = mu[j] - i
                c = c * QTRat(QTPoly.mono(1, i, 0) - QTPoly.mono(1, m, 0),
                              QTPoly.mono(1, i, 0))
                c = c / QTRat.of(P_ONE - QTPoly.mono(1, a, 0))
        if not c.is_zero():
            out[mu] = c
    return out


def w_support_t0(m, n):
    """W-expansion of Q_mn(q, 0), computed directly."""
    f = _specialize(elliptic_Q(m, n), lambda c: c.sub_t0(), "t=0")
    return w_expand(f)


# ---------------------------------------------------------------------------
# positivity
# ---------------------------------------------------------------------------

def _nn_poly(c):
    try:
        p = c.as_poly()
    except (ValueError, ArithmeticError):
        return False
    return all(v > 0 for v in p.c.values())


def positivity(f, basis="W"):
    """All coefficients of f in the given basis lie in N[q,t]."""
    if basis == "W":
        d = w_expand(f)
    elif basis == "What":
        d = what_expand(f)
    elif basis == "s":
        d = to_s(f)
    else:
        raise ValueError("unknown basis %r" % basis)
    return all(_nn_poly(c) for c in d.values())


# ---------------------------------------------------------------------------
# the t = 0 expansions of Delta on e_n
# ---------------------------------------------------------------------------

def _mult_vector(mu):
    """Part multiplicities of mu, as a tuple summing to len(mu)."""
    return tuple(mu.count(i) for i in range(1, (mu[0] if mu else 0) + 1))


def delta_zero_expansions(k, n):
    """W-expansion of Delta0_{e_(k-1)} e_n: one term W_{mu'} per length-k mu.

    The weight is q^(eta(mu) - binom(k,2)) [k choose mult(mu)]_q; printed
    sources put eta(mu') here, which fails already at (k,n) = (1,2).
    """
    out = {}
    for mu in partitions_of(n):
        if len(mu) != k:
            continue
        c = qmultinom(k, _mult_vector(mu)) * \
            QTRat(QTPoly.mono(1, eta(mu), 0), QTPoly.mono(1, k * (k - 1) // 2, 0))
        out[conj(mu)] = c
    return out


def P_nu_k_oracle(nu, k, n=None):
    """P_{nu,k} read off the direct operator: the length-(k+1) block of
    the W-expansion of Delta0_{s_nu} e_n determines it uniquely."""
    nu = mk(nu)
    if n is None:
        n = sum(nu) + 1
    direct = w_expand(delta_zero(s_(nu), e_(n)))
    inner = delta_zero_expansions(k + 1, n)
    if not inner:
        raise ValueError("need n >= k + 1")
    scale = QTRat.of(QTPoly.mono(1, (k + 1) * k // 2, 0))
    lam = next(iter(inner))
    p = direct.get(lam, R_ZERO) / (inner[lam] * scale)
    for l2, c2 in inner.items():
        if direct.get(l2, R_ZERO) != p * c2 * scale:
            raise ValueError("inconsistent block for nu=%r k=%d" % (nu, k))
    return p


def P_nu_k(nu, k):
    """Charge-generating-function formula for P_{nu,k}."""
    nu = mk(nu)
    d = sum(nu)
    out = R_ZERO
    for mu in partitions_of(d):
        if len(mu) != k:
            continue
        kq = kostka_q(nu, mu)
        if kq.is_zero():
            continue
        out = out + qmultinom(k, _mult_vector(mu)) * \
            QTRat.of(QTPoly.mono(1, eta(mu), 0)) * kq
    shift = d - k * (k + 1)
    return out * QTRat(QTPoly.mono(1, max(shift, 0), 0),
                       QTPoly.mono(1, max(-shift, 0), 0))


def delta_zero_schur(nu, n):
    """W-expansion of Delta0_{s_nu} e_n assembled from the P polynomials."""
    nu = mk(nu)
    d = sum(nu)
    out = {}
    for k in range(len(nu) + 1, d + 2):
        pk = P_nu_k(nu, k - 1)
        if pk.is_zero():
            continue
        inner = delta_zero_expansions(k, n)
        scale = QTRat.of(QTPoly.mono(1, k * (k - 1) // 2, 0))
        for lam, c in inner.items():
            nv = out.get(lam, R_ZERO) + pk * scale * c
            if nv.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = nv
    return out


def delta_zero_op_identity(f, g):
    """Right side of the expansion of Delta0_f over the Delta0_{e_k}."""
    dg = f.degrees()
    if len(dg) != 1:
        raise ValueError("f must be homogeneous")
    d = dg[0]
    out = zero()
    for k in range(1, d + 1):
        c = hall(delta_zero(e_(k - 1), e_(d)), omega(f))
        if c.is_zero():
            continue
        out = out + delta_zero(e_(k), g) * (c * QTPoly.mono(1, d - k, 0))
    return out


# ---------------------------------------------------------------------------
# Delta0_{e_k} on the W basis: vanishing and closed forms
# ---------------------------------------------------------------------------

def delta0_W_top(mu):
    """Delta0_{e_(n-1)} W_mu."""
    mu = mk(mu)
    return {(sum(mu),): QTRat.of(QTPoly.mono(1, eta(conj(mu)), 0))}


def delta0_W_second(mu):
    """Delta0_{e_(n-2)} W_mu.

    The q-integer on the W_n term is [mu_1 - 1]_q; printed sources have
    [mu_1]_q, which disagrees with the two-row case at mu = (n).
    """
    mu = mk(mu)
    n = sum(mu)
    ec = eta(conj(mu))
    out = {}
    c1 = qbinom(mu[0] - 1, 1) * QTRat(QTPoly.mono(1, ec + 1, 0),
                                      QTPoly.mono(1, mu[0], 0))
    if not c1.is_zero():
        out[(n,)] = c1
    c2 = QTRat.of(QTPoly.mono(1, ec, 0)) * qbinom(n - mu[0], 1)
    if not c2.is_zero():
        out[(n - 1, 1)] = c2
    return out


def delta0_W_two_rows(a, b, k):
    """Delta0_{e_k} W_(a,b) for a >= b >= 0."""
    out = {}
    for i in range(b + 1):
        c = qbinom(b, i) * qbinom(a - 1, k - i)
        if c.is_zero():
            continue
        shift = (k + 1) * k // 2 - i * (k - b + 1)
        c = c * QTRat(QTPoly.mono(1, max(shift, 0), 0),
                      QTPoly.mono(1, max(-shift, 0), 0))
        lam = mk((a + i, b - i))
        nv = out.get(lam, R_ZERO) + c
        if not nv.is_zero():
            out[lam] = nv
    return out


def delta0_W_hook(n, k):
    """Delta0_{e_k} W_(n-2,1,1) for n >= 4."""
    out = {}
    terms = [
        (mk((n - 2, 1, 1)), (k + 1) * k // 2, qbinom(n - 3, k)),
        (mk((n - 1, 1)), k * (k - 1) // 2, qbinom(n - 3, k - 1) * (Q + 1)),
        ((n,), (k - 1) * (k - 2) // 2, qbinom(n - 3, k - 2)),
    ]
    for lam, shift, c in terms:
        if c.is_zero():
            continue
        out[lam] = c * QTRat.of(QTPoly.mono(1, shift, 0))
    return out


def prop_delta_W(mu, k):
    """Direct W-expansion of Delta0_{e_k} W_mu, with the vanishing
    conditions checked, and checked against a closed form when one
    applies."""
    mu = mk(mu)
    n = sum(mu)
    got = w_expand(delta_zero(e_(k), from_w({mu: R_ONE})))
    for nu, c in got.items():
        if dominates(mu, nu) and nu != mu:
            raise ValueError("nonzero on strictly dominated %r" % (nu,))
        if nu[0] < k + 1 and not c.is_zero():
            raise ValueError("nonzero on nu_1 < k+1 at %r" % (nu,))
    closed = None
    if k == n - 1:
        closed = delta0_W_top(mu)
    elif k == n - 2 and n >= 2:
        closed = delta0_W_second(mu)
    elif len(mu) <= 2:
        closed = delta0_W_two_rows(mu[0], part(mu, 1), k)
    elif n >= 4 and mu == mk((n - 2, 1, 1)):
        closed = delta0_W_hook(n, k)
    if closed is not None and closed != got:
        raise ValueError("closed form mismatch for mu=%r k=%d" % (mu, k))
    return got


# ---------------------------------------------------------------------------
# the (q,t) two-row cases
# ---------------------------------------------------------------------------

def _lift_q(d):
    """Reinterpret a pure-q W-expansion as (q,t) coefficients."""
    return {lam: c for lam, c in d.items()}


def qt_delta_two_rows(a, b, k):
    """Closed form for Delta'_{e_k} W_(a,b), k = 1, 2, 3."""
    if k not in (1, 2, 3):
        raise ValueError("closed forms only for k = 1, 2, 3")
    out = {lam: c for lam, c in delta0_W_two_rows(a, b, k).items()}
    ab = mk((a, b))
    t = QTRat.of(T)
    q = QTRat.of(Q)

    def add(lam, c):
        nv = out.get(lam, R_ZERO) + c
        if nv.is_zero():
            out.pop(lam, None)
        else:
            out[lam] = nv

    if k == 1:
        add(ab, t * qint(b))
    elif k == 2:
        add(ab, t * q * qbinom(a - 1, 1) * qbinom(b, 1)
            + t ** 2 * q * qbinom(b, 2))
        if b >= 1:
            add(mk((a + 1, b - 1)),
                t * (q ** b + q ** (b - 1)) * qbinom(b, 2))
    else:
        add(ab, t * q ** 3 * qbinom(a - 1, 2) * qbinom(b, 1)
            + t ** 2 * q ** 2 * qbinom(a - 1, 1) * qbinom(b, 2)
            + t ** 3 * q ** 3 * qbinom(b, 3))
        if b >= 1:
            add(mk((a + 1, b - 1)),
                t * q ** b * qint(2) * qbinom(b, 2) * qbinom(a - 1, 1)
                + t ** 2 * q ** b * qint(3) * qbinom(b, 3))
        if b >= 2:
            add(mk((a + 2, b - 2)),
                t * q ** (2 * b - 3) * qint(3) * qbinom(b, 3))
    return from_w(out)


def nabla_W_two_rows(a, b):
    """Closed-form W-expansion of nabla W_(a,b)."""
    pre = QTPoly.mono(1, a * (a - 1) // 2 + b * (b - 1) // 2, 0)
    out = {}
    for j in range(b + 1):
        c = qbinom(b, j) * QTRat.of(pre * QTPoly.mono(1, 0, b - j))
        if not c.is_zero():
            out[mk((a + j, b - j))] = c
    return out


# ---------------------------------------------------------------------------
# weighted sums of path LLT polynomials
# ---------------------------------------------------------------------------

def V_n(n):
    """Closed-form W-positive sum over height <= 1 paths.

    The inner q-binomial is [k-1 choose j-1]_q; the printed [k-1 choose j]
    collapses the whole sum at n = 1, 2.
    """
    d = {(n,): R_ONE}
    for j in range(1, n // 2 + 1):
        c = R_ZERO
        for k in range(n + 1):
            term = qbinom(n - k, j) * qbinom(k - 1, j - 1)
            if not term.is_zero():
                c = c + term * QTPoly.mono(1, 0, k)
        if not c.is_zero():
            d[mk((n - j, j))] = c
    return from_w(d)


def dyck_area_seqs(n):
    """Area sequences (a_1..a_n): a_1 = 0, 0 <= a_(i+1) <= a_i + 1."""
    seqs = [(0,)]
    for _ in range(n - 1):
        seqs = [s + (x,) for s in seqs for x in range(s[-1] + 2)]
    return seqs


def llt_dyck(aseq):
    """The labeled-path LLT polynomial for an area sequence.

    Labels increase strictly up consecutive steps with a_(i+1) = a_i + 1;
    the q-weight counts diagonal inversions.
    """
    n = len(aseq)
    buckets = {}
    for labels in product(range(1, n + 1), repeat=n):
        if any(aseq[i + 1] == aseq[i] + 1 and labels[i + 1] <= labels[i]
               for i in range(n - 1)):
            continue
        dinv = 0
        for i in range(n):
            for j in range(i + 1, n):
                if aseq[i] == aseq[j] and labels[i] < labels[j]:
                    dinv += 1
                elif aseq[i] == aseq[j] + 1 and labels[i] > labels[j]:
                    dinv += 1
        vec = tuple(labels.count(v) for v in range(1, n + 1))
        buckets[vec] = buckets.get(vec, P_ZERO) + QTPoly.mono(1, dinv, 0)
    out = zero()
    for lam in partitions_of(n):
        vec = lam + (0,) * (n - len(lam))
        c = buckets.get(vec)
        if c and not c.is_zero():
            out = out + m_(lam) * QTRat.of(c)
    return out


def v_n_from_paths(n):
    """Sum of t^area LLT over paths of height <= 1 (the oracle for V_n)."""
    out = zero()
    for aseq in dyck_area_seqs(n):
        if max(aseq) <= 1:
            out = out + llt_dyck(aseq) * QTPoly.mono(1, 0, sum(aseq))
    return out


def nabla_en_from_paths(n):
    """Sum of t^area LLT over all paths; equals nabla e_n."""
    out = zero()
    for aseq in dyck_area_seqs(n):
        out = out + llt_dyck(aseq) * QTPoly.mono(1, 0, sum(aseq))
    return out


def v_series(nmax):
    """x-coefficients of (h1 - x t h2) / (1 - x (t+1) h1 + x^2 t h2)."""
    t = QTRat.of(T)
    u = [zero(), h_(1) * (t + 1), h_(2) * (-t)]  # 1/(1 - u) with this u
    geo = [one()] + [zero()] * nmax
    powu = [one()] + [zero()] * nmax
    for _ in range(nmax):
        nxt = [zero()] * (nmax + 1)
        for i in range(nmax + 1):
            for j in (1, 2):
                if i >= j:
                    nxt[i] = nxt[i] + powu[i - j] * u[j]
        powu = nxt
        if all(f.is_zero() for f in powu):
            break
        geo = [a + b for a, b in zip(geo, powu)]
    out = [zero()] * (nmax + 1)
    for i in range(nmax + 1):
        out[i] = out[i] + geo[i] * h_(1)
        if i >= 1:
            out[i] = out[i] - geo[i - 1] * h_(2) * t
    return out


def forest_count(n):
    """Labeled rooted forests on n nodes in which every root-to-leaf path
    has at most one descent (a child smaller than its parent)."""
    if n == 0:
        return 1
    total = 0
    nodes = n + 1  # tree on {0..n} rooted at 0
    for pruefer in product(range(nodes), repeat=max(nodes - 2, 0)):
        deg = [1] * nodes
        for x in pruefer:
            deg[x] += 1
        seq = list(pruefer)
        edges = []
        avail = sorted(i for i in range(nodes) if deg[i] == 1)
        for x in seq:
            leaf = avail.pop(0)
            edges.append((leaf, x))
            deg[x] -= 1
            if deg[x] == 1:
                bisect.insort(avail, x)
        edges.append((avail[0], avail[1]))
        adj = {i: [] for i in range(nodes)}
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        ok = True
        stack = [(0, -1, 0)]
        while stack:
            v, parent, desc = stack.pop()
            for w in adj[v]:
                if w == parent:
                    continue
                nd = desc + (1 if v != 0 and w < v else 0)
                if nd > 1:
                    ok = False
                    break
                stack.append((w, v, nd))
            if not ok:
                break
        if ok:
            total += 1
    return total


# ---------------------------------------------------------------------------
# expansions over the dual Whittaker basis
# ---------------------------------------------------------------------------

def s_over_1mq_expansion(mu):
    """Expansion of s_mu[z/(1-q)] in the dual basis What."""
    f = pleth(s_(mk(mu)), Alphabet.times_z(QTRat(P_ONE, P_ONE - Q)))
    return what_expand(f)


def gamma_hook(mu, lam):
    """Closed form for the What coefficient when mu is a hook."""
    mu, lam = mk(mu), mk(lam)
    w = eta(conj(lam)) - lam[0] * (lam[0] - 1) // 2 \
        + (lam[0] - mu[0] + 1) * (lam[0] - mu[0]) // 2
    return qbinom(lam[0] - 1, mu[0] - 1) * QTRat.of(QTPoly.mono(1, w, 0))


# ---------------------------------------------------------------------------
# the dominance-product formula for modified Macdonald in the W basis
# ---------------------------------------------------------------------------

def C_coeff(mu, nu):
    """Product over cells of mu-and-nu with nonzero nu-leg of
    (t^leg_mu - q^(arm_mu + 1)); zero unless nu dominates mu."""
    mu, nu = mk(mu), mk(nu)
    if not dominates(nu, mu):
        return R_ZERO
    out = P_ONE
    for j in range(min(len(mu), len(nu))):
        for i in range(min(mu[j], nu[j])):
            if leg(nu, i, j) == 0:
                continue
            out = out * (QTPoly.mono(1, 0, leg(mu, i, j))
                         - QTPoly.mono(1, mu[j] - i, 0))
    return QTRat.of(out)


def A_mu(mu):
    """The dominance-sum approximation of the modified basis element."""
    mu = mk(mu)
    n = sum(mu)
    d = {}
    for nu in partitions_of(n):
        c = C_coeff(mu, nu)
        if c.is_zero():
            continue
        c = c * qbinom(n - mu[0], n - nu[0])
        if not c.is_zero():
            d[nu] = c
    return from_w(d)
