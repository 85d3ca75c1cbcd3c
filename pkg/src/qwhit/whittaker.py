"""q-Whittaker polynomials W_mu and their dual basis.

Three independent constructions are kept alive:

* the top t-coefficient of the modified Macdonald polynomial,
* the t = 0 specialization of the unnormalized (integral) form,
* a direct combinatorial Schur expansion through charge/q-Kostka
  polynomials (the production route -- no (q,t) machinery needed).

``w_routes`` recomputes all three and raises ``RouteMismatch`` if they
ever disagree; the acceptance suite runs it over whole degrees.
"""

from __future__ import annotations

from functools import lru_cache

from .macdonald import htilde, kostka_q, mac_H
from .partitions import cells, conj, dominates, eta, leg, mk, \
    partitions_of, sigma
from .qtring import P_ONE, QTPoly, QTRat, qfact
from .symfunc import Sym, from_s_dict, hall, p_, to_s

__all__ = [
    "RouteMismatch", "w_", "w_via_htilde", "w_via_H", "w_routes",
    "v_mu", "w_hat", "w_expand", "what_expand", "from_w",
    "hilbert", "g_mu", "w_hook_eval", "w_omega_hook_eval", "what_det",
]


class RouteMismatch(Exception):
    """Two supposedly-equivalent constructions returned different answers."""


@lru_cache(maxsize=None)
def w_(mu):
    """W_mu by its combinatorial Schur expansion (charge statistic)."""
    mu = mk(mu)
    n = sum(mu)
    mp = conj(mu)
    d = {}
    for lam in partitions_of(n):
        if not dominates(mu, lam):
            continue
        k = kostka_q(conj(lam), mp)
        if k:
            d[lam] = QTRat.of(k)
    return from_s_dict(d)


def w_via_htilde(mu):
    """W_mu as the coefficient of the top t-power in the modified form."""
    mu = mk(mu)
    e = eta(mu)
    d = {}
    for lam, c in to_s(htilde(mu)).items():
        top = c.as_poly().coeff_of_t(e)
        if top:
            d[lam] = QTRat.of(top)
    return from_s_dict(d)


def w_via_H(mu):
    """W_mu as the t = 0 shadow of the unnormalized form."""
    return mac_H(mk(mu)).map_coeffs(lambda c: c.sub_t0())


def w_routes(mu):
    """All three constructions, checked against each other."""
    mu = mk(mu)
    w = w_(mu)
    for other, name in ((w_via_htilde(mu), "top-t"), (w_via_H(mu), "t=0")):
        if other != w:
            raise RouteMismatch(f"W_{mu}: charge route != {name} route")
    return w


# ---------------------------------------------------------------------------
# dual basis
# ---------------------------------------------------------------------------

def v_mu(mu):
    """prod (1 - q^(a(c)+1)) over cells of mu with leg 0."""
    mu = mk(mu)
    out = P_ONE
    for (i, j) in cells(mu):
        if leg(mu, i, j) == 0:
            out = out * QTPoly({(0, 0): 1, (mu[j] - i, 0): -1})
    return out


def w_hat(mu):
    """Dual Whittaker element W_mu / v_mu."""
    return w_(mu) * QTRat(P_ONE, v_mu(mu))


def w_expand(f):
    """Expand f in the W basis: {mu: QTRat}.  Uses unitriangularity of
    the W's over Schur with respect to (lex refines dominance) order."""
    rest = dict(to_s(f))
    out = {}
    while rest:
        lam = max(rest)
        c = rest.pop(lam)
        out[lam] = c
        for nu, a in to_s(w_(lam)).items():
            if nu == lam:
                continue
            nv = rest.get(nu, QTRat.of(0)) - c * a
            if nv.is_zero():
                rest.pop(nu, None)
            else:
                rest[nu] = nv
    return out


def what_expand(f):
    """Expand f in the dual basis: same solve, rescaled by v_mu."""
    return {mu: c * QTRat.of(v_mu(mu)) for mu, c in w_expand(f).items()}


def from_w(d):
    out = Sym()
    for mu, c in d.items():
        out = out + w_(mu) * c
    return out


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------

def hilbert(mu):
    """Graded dimension <W_mu, p_1^n>, a polynomial in q."""
    mu = mk(mu)
    n = sum(mu)
    return hall(w_(mu), p_((1,) * n)).as_poly()


def g_mu(mu):
    """hilbert(mu) stripped of its prod_i sigma_mu(i)!_q factor."""
    mu = mk(mu)
    den = P_ONE
    for i in range(1, len(mu) + 1):
        den = den * qfact(sigma(mu, i))
    return (QTRat.of(hilbert(mu)) / QTRat.of(den)).as_poly()


# ---------------------------------------------------------------------------
# hook-alphabet evaluations (u lives in the t slot)
# ---------------------------------------------------------------------------

def w_hook_eval(mu):
    """W_mu[1-u] = (-u)^n q^eta' prod_{leg=0} (1 - 1/(u q^i))."""
    mu = mk(mu)
    n = sum(mu)
    out = QTRat.of(QTPoly.mono((-1) ** n, eta(conj(mu)), n))
    for (i, j) in cells(mu):
        if leg(mu, i, j) == 0:
            out = out * QTRat(QTPoly({(i, 1): 1, (0, 0): -1}),
                              QTPoly.mono(1, i, 1))
    return out


def w_omega_hook_eval(mu):
    """(omega W_mu)[1-u] = q^eta' prod_{leg=0} (1 - u/q^i)."""
    mu = mk(mu)
    out = QTRat.of(QTPoly.mono(1, eta(conj(mu)), 0))
    for (i, j) in cells(mu):
        if leg(mu, i, j) == 0:
            out = out * QTRat(QTPoly({(i, 0): 1, (0, 1): -1}),
                              QTPoly.mono(1, i, 0))
    return out


# ---------------------------------------------------------------------------
# determinant of one-row duals
# ---------------------------------------------------------------------------

def what_det(mu):
    """det(What_{mu_i + j - i}) over 1 <= i, j <= l(mu); equals
    s_mu[z/(1-q)]."""
    mu = mk(mu)
    ell = len(mu)

    def entry(k):
        if k < 0:
            return None
        if k == 0:
            return Sym({(): QTRat.of(1)})
        return w_hat((k,))

    out = Sym()
    for perm, sign in _perms_signed(ell):
        term = Sym({(): QTRat.of(sign)})
        dead = False
        for i in range(ell):
            cell = entry(mu[i] + perm[i] - i)
            if cell is None:
                dead = True
                break
            term = term * cell
        if not dead:
            out = out + term
    return out


def _perms_signed(n):
    from itertools import permutations
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n)
                  if perm[a] > perm[b])
        yield perm, (-1) ** inv
