"""Symmetric functions over QQ(q,t), stored in the power-sum basis.

Internally every element is a dict {partition: QTRat} giving its p-expansion;
all the classical bases (s, m, h, e) are converted through that hub.  Schur
conversions use integer character tables built by border-strip recursion;
the monomial basis uses an exact per-degree change-of-basis matrix.

All four scalar products used downstream are diagonal in the p-basis, so
they are cheap here.  Plethysm is supported for alphabets of the shape
r(q,t)*Z + c(q,t) + e(q,t)*eps, which covers every substitution this
package needs (eps is the sign alphabet, p_k[eps] = (-1)^k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import mk, partitions_of
from .qtring import QTPoly, QTRat, R_ONE, R_ZERO

__all__ = [
    "Sym", "Sym2", "Alphabet", "AL_Z",
    "p_", "h_", "e_", "s_", "m_", "one", "zero",
    "zee", "chi", "to_s", "to_m", "from_s_dict",
    "hall", "qt_pair", "q_pair", "star_pair",
    "omega", "perp", "pleth", "add_variable", "tensor", "eval_at",
    "sym_str",
]


def zee(lam):
    """Size of the centralizer of a permutation of cycle type lam."""
    out, run, last = 1, 0, None
    for x in lam:
        if x == last:
            run += 1
        else:
            run, last = 1, x
        out *= x * run
    return out


@lru_cache(maxsize=None)
def chi(lam, mu):
    """Irreducible symmetric-group character chi^lam(mu), |lam| = |mu|."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    l = len(lam)
    beta = [lam[i] + (l - 1 - i) for i in range(l)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        nlam = tuple(newbeta[k] - (l - 1 - k) for k in range(l))
        total += (-1) ** height * chi(mk(nlam), rest)
    return total


# ---------------------------------------------------------------------------
# the element class
# ---------------------------------------------------------------------------

def _coeff(x):
    if isinstance(x, QTRat):
        return x
    return QTRat.of(x)


class Sym:
    """Symmetric function with QQ(q,t) coefficients, p-basis internally."""

    __slots__ = ("p",)

    def __init__(self, pdict=None):
        self.p = {}
        if pdict:
            for k, v in pdict.items():
                if not v.is_zero():
                    self.p[k] = v

    def is_zero(self):
        return not self.p

    def __bool__(self):
        return bool(self.p)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.p
        return isinstance(other, Sym) and self.p == other.p

    def __hash__(self):
        return hash(frozenset(self.p.items()))

    def __add__(self, other):
        if not isinstance(other, Sym):
            return NotImplemented
        d = dict(self.p)
        for k, v in other.p.items():
            nv = d.get(k, R_ZERO) + v
            if nv.is_zero():
                d.pop(k, None)
            else:
                d[k] = nv
        out = Sym.__new__(Sym)
        out.p = d
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = Sym.__new__(Sym)
        out.p = {k: -v for k, v in self.p.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, QTPoly, QTRat, Fraction)):
            c = _coeff(other)
            if c.is_zero():
                return zero()
            out = Sym.__new__(Sym)
            out.p = {k: v * c for k, v in self.p.items()}
            return out
        if not isinstance(other, Sym):
            return NotImplemented
        d = {}
        for k1, v1 in self.p.items():
            for k2, v2 in other.p.items():
                k = mk(sorted(k1 + k2, reverse=True))
                nv = d.get(k, R_ZERO) + v1 * v2
                if nv.is_zero():
                    d.pop(k, None)
                else:
                    d[k] = nv
        out = Sym.__new__(Sym)
        out.p = d
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _coeff(other).inv()

    def map_coeffs(self, fn):
        """Apply fn to every coefficient (e.g. a q,t specialization)."""
        return Sym({k: fn(v) for k, v in self.p.items()})

    def homogeneous(self, n):
        return Sym({k: v for k, v in self.p.items() if sum(k) == n})

    def degrees(self):
        return sorted({sum(k) for k in self.p})

    def constant(self):
        """The coefficient of p_() (the scalar part)."""
        return self.p.get((), R_ZERO)

    def __repr__(self):
        return "Sym(%s)" % sym_str(self, basis="p")


def zero():
    return Sym()


def one():
    return Sym({(): R_ONE})


def p_(mu):
    """Power sum p_mu (mu an int or a partition)."""
    if isinstance(mu, int):
        mu = (mu,)
    return Sym({mk(sorted(mu, reverse=True)): R_ONE})


@lru_cache(maxsize=None)
def _h_one(n):
    """h_n in the p-basis."""
    return Sym({lam: QTRat.of(Fraction(1, zee(lam))) for lam in partitions_of(n)})


@lru_cache(maxsize=None)
def _e_one(n):
    return Sym({lam: QTRat.of(Fraction((-1) ** (n - len(lam)), zee(lam)))
                for lam in partitions_of(n)})


def h_(mu):
    if isinstance(mu, int):
        return _h_one(mu)
    out = one()
    for k in mu:
        out = out * _h_one(k)
    return out


def e_(mu):
    if isinstance(mu, int):
        return _e_one(mu)
    out = one()
    for k in mu:
        out = out * _e_one(k)
    return out


@lru_cache(maxsize=None)
def s_(lam):
    """Schur function s_lam in the p-basis."""
    lam = mk(lam)
    n = sum(lam)
    return Sym({mu: QTRat.of(Fraction(chi(lam, mu), zee(mu)))
                for mu in partitions_of(n) if chi(lam, mu)})


def to_s(f):
    """Schur expansion {lam: QTRat} (f may be inhomogeneous)."""
    out = {}
    for n in f.degrees():
        fn = f.homogeneous(n)
        for lam in partitions_of(n):
            c = R_ZERO
            for mu, v in fn.p.items():
                ch = chi(lam, mu)
                if ch:
                    c = c + v * ch
            if not c.is_zero():
                out[lam] = c
    return out


def from_s_dict(d):
    out = zero()
    for lam, c in d.items():
        out = out + s_(mk(lam)) * _coeff(c)
    return out


# ---------------------------------------------------------------------------
# monomial basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _p_in_m(mu, lam):
    """Coefficient of m_lam in p_mu = coefficient of x^lam (same size)."""
    # count sequences assigning each part of mu to a row of lam, exact fill
    lam_rem = list(lam)

    def dfs(idx):
        if idx == len(mu):
            return 1 if all(x == 0 for x in lam_rem) else 0
        total = 0
        for r in range(len(lam_rem)):
            if lam_rem[r] >= mu[idx]:
                lam_rem[r] -= mu[idx]
                total += dfs(idx + 1)
                lam_rem[r] += mu[idx]
        return total

    return dfs(0)


@lru_cache(maxsize=None)
def _m_in_p(n):
    """Matrix {lam: {mu: Fraction}} with m_lam = sum_mu c * p_mu."""
    parts = partitions_of(n)  # lex descending refines dominance
    # p_mu = sum_{lam <= mu} R[mu][lam] m_lam, triangular with R[mu][mu] != 0
    idx = {lam: i for i, lam in enumerate(parts)}
    R = [[Fraction(_p_in_m(mu, lam)) for lam in parts] for mu in parts]
    k = len(parts)
    inv = [[Fraction(1 if i == j else 0) for j in range(k)] for i in range(k)]
    # gaussian elimination (R is invertible; small sizes only)
    M = [row[:] for row in R]
    for col in range(k):
        piv = next(r for r in range(col, k) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        pv = M[col][col]
        M[col] = [x / pv for x in M[col]]
        inv[col] = [x / pv for x in inv[col]]
        for r in range(k):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
    # m_lam = sum_mu inv^T ... careful: (R^-1)^T maps p-coords to m-coords?
    # p = R m  =>  m = R^-1 p ; row lam of R^-1 gives m_lam in p's
    out = {}
    for i, lam in enumerate(parts):
        out[lam] = {parts[j]: inv[i][j] for j in range(k) if inv[i][j]}
    return out


def m_(lam):
    lam = mk(lam)
    table = _m_in_p(sum(lam))[lam]
    return Sym({mu: QTRat.of(c) for mu, c in table.items()})


def to_m(f):
    """Monomial expansion {lam: QTRat}."""
    out = {}
    for n in f.degrees():
        fn = f.homogeneous(n)
        for lam in partitions_of(n):
            c = R_ZERO
            for mu, v in fn.p.items():
                r = _p_in_m(mu, lam)
                if r:
                    c = c + v * r
            if not c.is_zero():
                out[lam] = c
    return out


# ---------------------------------------------------------------------------
# scalar products (all diagonal in p)
# ---------------------------------------------------------------------------

def _diag_pair(f, g, weight):
    out = R_ZERO
    small, big = (f.p, g.p) if len(f.p) <= len(g.p) else (g.p, f.p)
    for k, v in small.items():
        w = big.get(k)
        if w is not None:
            out = out + v * w * weight(k)
    return out


def hall(f, g):
    """Hall scalar product: <p_lam, p_mu> = z_lam delta."""
    return _diag_pair(f, g, lambda k: QTRat.of(zee(k)))


@lru_cache(maxsize=None)
def _qt_weight(k):
    w = QTRat.of(zee(k))
    for x in k:
        w = w * QTRat(QTPoly({(0, 0): 1, (x, 0): -1}),
                      QTPoly({(0, 0): 1, (0, x): -1}))
    return w


def qt_pair(f, g):
    """Macdonald's q,t scalar product."""
    return _diag_pair(f, g, _qt_weight)


@lru_cache(maxsize=None)
def _q_weight(k):
    w = QTRat.of(zee(k))
    for x in k:
        w = w * QTRat.of(QTPoly({(0, 0): 1, (x, 0): -1}))
    return w


def q_pair(f, g):
    """q-deformed Hall product: weight z_lam prod (1 - q^lam_i)."""
    return _diag_pair(f, g, _q_weight)


@lru_cache(maxsize=None)
def _star_weight(k):
    w = QTRat.of(zee(k) * (-1) ** (sum(k) - len(k)))
    for x in k:
        w = w * QTPoly({(0, 0): 1, (x, 0): -1}) * QTPoly({(0, 0): 1, (0, x): -1})
    return w


def star_pair(f, g):
    """Modified-Macdonald orthogonality product."""
    return _diag_pair(f, g, _star_weight)


# ---------------------------------------------------------------------------
# omega, perp, plethysm
# ---------------------------------------------------------------------------

def omega(f):
    return Sym({k: v * ((-1) ** (sum(k) - len(k))) for k, v in f.p.items()})


def perp(g, f):
    """Hall adjoint of multiplication by g, applied to f: p_k -> k d/dp_k."""
    out = {}
    for nu, a in g.p.items():
        for lam, b in f.p.items():
            # apply prod over parts of nu of (k d/dp_k) to p_lam
            rem = list(lam)
            coef = a * b
            ok = True
            for k in nu:
                mult = rem.count(k)
                if not mult:
                    ok = False
                    break
                coef = coef * (mult * k)
                rem.remove(k)
            if ok:
                key = mk(sorted(rem, reverse=True))
                nv = out.get(key, R_ZERO) + coef
                if nv.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = nv
    return Sym(out)


@dataclass(frozen=True)
class Alphabet:
    """Alphabet r*Z + c + e*eps, with p_k[eps] = (-1)^k."""
    z: QTRat = R_ZERO
    c: QTRat = R_ZERO
    e: QTRat = R_ZERO

    @staticmethod
    def scalar(x):
        return Alphabet(c=_coeff(x))

    @staticmethod
    def times_z(x):
        return Alphabet(z=_coeff(x))


AL_Z = Alphabet(z=R_ONE)


def _sub_pow(r, k):
    """r(q^k, t^k) for a QTRat r."""
    num = r.num.sub_q_pow(k).sub_t_pow(k)
    den = r.den.sub_q_pow(k).sub_t_pow(k)
    return QTRat(num, den, _reduced=True)


def pleth(f, al):
    """Plethystic substitution f[al]; coefficients of f are left alone."""
    if isinstance(al, (QTRat, QTPoly, int, Fraction)):
        al = Alphabet.scalar(al)
    out = zero()
    for lam, coef in f.p.items():
        term = Sym({(): coef})
        for k in lam:
            zk = _sub_pow(al.z, k) if not al.z.is_zero() else R_ZERO
            sk = _sub_pow(al.c, k) if not al.c.is_zero() else R_ZERO
            if not al.e.is_zero():
                sk = sk + _sub_pow(al.e, k) * ((-1) ** k)
            piece = Sym({(k,): zk, (): sk})
            term = term * piece
        out = out + term
    return out


def add_variable(f):
    """f[Z + y] split by y-degree: returns {k: Sym} with f[Z+y] = sum y^k ...

    Works row by row in the p-basis: p_k[Z+y] = p_k + y^k.
    """
    out = {}
    for lam, coef in f.p.items():
        # expand prod_i (p_{lam_i} + y^{lam_i})
        acc = [((), 0)]  # (kept parts, y-degree)
        for k in lam:
            acc = [x for kept, ydeg in acc
                   for x in ((kept + (k,), ydeg), (kept, ydeg + k))]
        for kept, ydeg in acc:
            key = mk(sorted(kept, reverse=True))
            tgt = out.setdefault(ydeg, {})
            nv = tgt.get(key, R_ZERO) + coef
            if nv.is_zero():
                tgt.pop(key, None)
            else:
                tgt[key] = nv
    return {k: Sym(v) for k, v in out.items() if v}


def eval_at(f, xs, qv, tv):
    """Evaluate f at the finite alphabet xs (Fractions), q=qv, t=tv."""
    out = Fraction(0)
    pows = {}
    for lam, coef in f.p.items():
        val = coef.eval_frac(qv, tv)
        for k in lam:
            if k not in pows:
                pows[k] = sum(Fraction(x) ** k for x in xs)
            val *= pows[k]
        out += val
    return out


# ---------------------------------------------------------------------------
# two alphabets (for Cauchy kernels)
# ---------------------------------------------------------------------------

class Sym2:
    """Element of Sym(X) tensor Sym(Y), p-basis pairs internally."""

    __slots__ = ("p",)

    def __init__(self, pdict=None):
        self.p = {k: v for k, v in (pdict or {}).items() if not v.is_zero()}

    def __add__(self, other):
        d = dict(self.p)
        for k, v in other.p.items():
            nv = d.get(k, R_ZERO) + v
            if nv.is_zero():
                d.pop(k, None)
            else:
                d[k] = nv
        return Sym2(d)

    def __sub__(self, other):
        return self + Sym2({k: -v for k, v in other.p.items()})

    def __eq__(self, other):
        return isinstance(other, Sym2) and self.p == other.p

    def is_zero(self):
        return not self.p


def tensor(f, g):
    d = {}
    for k1, v1 in f.p.items():
        for k2, v2 in g.p.items():
            d[(k1, k2)] = d.get((k1, k2), R_ZERO) + v1 * v2
    return Sym2(d)


def kernel_h(n, weight):
    """h_n[X Y * w] as a Sym2; weight maps a part k to a QTRat factor."""
    d = {}
    for lam in partitions_of(n):
        c = QTRat.of(Fraction(1, zee(lam)))
        for k in lam:
            c = c * weight(k)
        d[(lam, lam)] = c
    return Sym2(d)


# ---------------------------------------------------------------------------
# display
# ---------------------------------------------------------------------------

def _fmt_term(coef, label):
    cs = str(coef)
    if cs == "1":
        return label
    if cs == "-1":
        return "-" + label
    if any(op in cs[1:] for op in "+-") or "/" in cs:
        cs = "(" + cs + ")"
    return cs + "*" + label


def sym_str(f, basis="s"):
    """Readable string for a Sym in the given basis (s, m, or p)."""
    if basis == "s":
        d = to_s(f)
    elif basis == "m":
        d = to_m(f)
    elif basis == "p":
        d = f.p
    else:
        raise ValueError("unknown basis %r" % basis)
    if not d:
        return "0"
    keys = sorted(d, key=lambda k: (sum(k), k), reverse=True)
    parts = []
    for k in keys:
        label = "%s[%s]" % (basis, ",".join(map(str, k)))
        parts.append(_fmt_term(d[k], label))
    s = parts[0]
    for t in parts[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s
