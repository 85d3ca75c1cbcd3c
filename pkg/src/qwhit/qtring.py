"""Exact arithmetic in ZZ[q,t] and its fraction field QQ(q,t).

Polynomials are sparse dicts mapping exponent pairs (a, b) -> int for
q^a * t^b.  Rational functions are reduced num/den pairs with a canonical
sign (the denominator's lex-leading coefficient, ordering exponent pairs
by (a, b), is positive).  Everything is exact integer arithmetic; no
floating point anywhere.

The q-analog helpers ([n]_q, q-factorials, q-binomials and their
infinite-argument limits) live here too, since everything downstream is
phrased in terms of them.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from math import gcd as igcd, inf

__all__ = [
    "QTPoly", "QTRat", "INF",
    "P_ZERO", "P_ONE", "Q", "T", "R_ZERO", "R_ONE",
    "poly", "rat", "qint", "qfact", "qbinom", "qmultinom", "parse_rat",
]

INF = inf


# ---------------------------------------------------------------------------
# dense univariate helpers over ZZ (used only inside gcd)
# ---------------------------------------------------------------------------

def _u_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _u_content(p):
    c = 0
    for x in p:
        c = igcd(c, abs(x))
    return c


def _u_mul(p, r):
    if not p or not r:
        return []
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                if b:
                    out[i + j] += a * b
    return _u_trim(out)


def _u_scale(p, c):
    return [x * c for x in p] if c else []


def _u_sub(p, r):
    out = list(p) + [0] * (len(r) - len(p))
    for i, b in enumerate(r):
        out[i] -= b
    return _u_trim(out)


def _u_prem(a, b):
    """Pseudo-remainder of a by b over ZZ (b != 0)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        a = _u_sub(_u_scale(a, lb), _u_scale([0] * (da - db) + list(b), la))
        if len(a) - 1 == da:  # defensive; cannot happen
            raise ArithmeticError("pseudo-division failed to reduce degree")
    return a


def _u_eval(p, x):
    v = 0
    for c in reversed(p):
        v = v * x + c
    return v


def _u_maxnorm(p):
    return max((abs(c) for c in p), default=0)


def _sym_digits(n, xi):
    """Base-xi digits of n in the symmetric range (-xi/2, xi/2]."""
    out = []
    half = xi // 2
    while n:
        d = n % xi
        if d > half:
            d -= xi
        out.append(d)
        n = (n - d) // xi
    return out


def _u_divides(d, p):
    try:
        _u_divexact(p, d)
        return True
    except ArithmeticError:
        return False


def _u_heugcd(a, b):
    """Heuristic gcd of primitive a, b in ZZ[x]; None if it gives up.

    Evaluate at a large integer, take the integer gcd, lift it back
    xi-adically, and certify the candidate by trial division.
    """
    xi = 2 * min(_u_maxnorm(a), _u_maxnorm(b)) + 29
    for _ in range(6):
        fv, gv = _u_eval(a, xi), _u_eval(b, xi)
        h = igcd(fv, gv)
        if h:
            cand = _sym_digits(h, xi)
            c = _u_content(cand)
            if c:
                cand = [x // c for x in cand]
            if cand and cand[-1] < 0:
                cand = [-x for x in cand]
            if _u_divides(cand, a) and _u_divides(cand, b):
                return cand
        xi = 73 * xi // 27 + 27
    return None


def _u_gcd(a, b):
    """gcd in ZZ[x], result with positive leading coeff.

    Heuristic evaluate/lift/verify first, primitive PRS as the fallback.
    """
    a, b = _u_trim(list(a)), _u_trim(list(b))
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = _u_content(a), _u_content(b)
        c = igcd(ca, cb)
        a = [x // ca for x in a]
        b = [x // cb for x in b]
        g = _u_heugcd(a, b)
        if g is None:
            while b:
                r = _u_prem(a, b)
                cr = _u_content(r)
                if cr:
                    r = [x // cr for x in r]
                a, b = b, r
            g = a
        g = _u_scale(g, c)
    if g and g[-1] < 0:
        g = [-x for x in g]
    return g


def _u_divexact(a, b):
    """Exact division in QQ[x] of integer polys; raises if not exact over ZZ."""
    a = _u_trim(list(a))
    b = _u_trim(list(b))
    if not b:
        raise ZeroDivisionError
    if not a:
        return []
    out = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    while a:
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            raise ArithmeticError("inexact division")
        qc, rem = divmod(a[-1], lb)
        if rem:
            raise ArithmeticError("inexact division")
        out[da - db] = qc
        a = _u_sub(a, _u_scale([0] * (da - db) + list(b), qc))
    return _u_trim(out)


# ---------------------------------------------------------------------------
# ZZ[q,t]
# ---------------------------------------------------------------------------

class QTPoly:
    """Sparse integer polynomial in q and t. Immutable."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for (a, b), v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if v:
                    k = (a, b)
                    nv = d.get(k, 0) + v
                    if nv:
                        d[k] = nv
                    elif k in d:
                        del d[k]
        self.c = d
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(n):
        return QTPoly({(0, 0): n}) if n else P_ZERO

    @staticmethod
    def mono(coef, a, b):
        return QTPoly({(a, b): coef})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def is_one(self):
        return self.c == {(0, 0): 1}

    def is_const(self):
        return not self.c or (len(self.c) == 1 and (0, 0) in self.c)

    def is_mono(self):
        return len(self.c) == 1

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant: %s" % self)
        return self.c.get((0, 0), 0)

    # -- basic ring ops ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        if not self.c:
            return other
        if not other.c:
            return self
        d = dict(self.c)
        for k, v in other.c.items():
            nv = d.get(k, 0) + v
            if nv:
                d[k] = nv
            elif k in d:
                del d[k]
        out = QTPoly.__new__(QTPoly)
        out.c = d
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QTPoly.__new__(QTPoly)
        out.c = {k: -v for k, v in self.c.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return P_ZERO
            if other == 1:
                return self
            out = QTPoly.__new__(QTPoly)
            out.c = {k: v * other for k, v in self.c.items()}
            out._hash = None
            return out
        if not isinstance(other, QTPoly):
            return NotImplemented
        if not self.c or not other.c:
            return P_ZERO
        if len(self.c) == 1:
            ((a0, b0), v0), = self.c.items()
            out = QTPoly.__new__(QTPoly)
            out.c = {(a0 + a, b0 + b): v0 * v for (a, b), v in other.c.items()}
            out._hash = None
            return out
        if len(other.c) == 1:
            return other * self
        d = {}
        for (a1, b1), v1 in self.c.items():
            for (a2, b2), v2 in other.c.items():
                k = (a1 + a2, b1 + b2)
                nv = d.get(k, 0) + v1 * v2
                if nv:
                    d[k] = nv
                elif k in d:
                    del d[k]
        out = QTPoly.__new__(QTPoly)
        out.c = d
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("use QTRat for negative powers")
        out = P_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({(0, 0): other} if other else {})
        return isinstance(other, QTPoly) and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.c.items()))
        return self._hash

    # -- structure ---------------------------------------------------------

    def deg_q(self):
        return max((a for a, _ in self.c), default=0)

    def deg_t(self):
        return max((b for _, b in self.c), default=0)

    def lex_lead(self):
        """(exponent pair, coeff) of the lex-largest (a, b) term."""
        k = max(self.c)
        return k, self.c[k]

    def int_content(self):
        c = 0
        for v in self.c.values():
            c = igcd(c, abs(v))
        return c

    def coeff_of_t(self, b):
        """Coefficient of t^b, as a polynomial in q (and t-degree 0)."""
        return QTPoly({(a, 0): v for (a, bb), v in self.c.items() if bb == b})

    def t_coeffs(self):
        """dict t-degree -> dense ZZ[q] list."""
        rows = {}
        for (a, b), v in self.c.items():
            row = rows.setdefault(b, {})
            row[a] = v
        out = {}
        for b, row in rows.items():
            lst = [0] * (max(row) + 1)
            for a, v in row.items():
                lst[a] = v
            out[b] = lst
        return out

    # -- substitutions -----------------------------------------------------

    def flip_qt(self):
        return QTPoly({(b, a): v for (a, b), v in self.c.items()})

    def sub_t0(self):
        return QTPoly({(a, 0): v for (a, b), v in self.c.items() if b == 0})

    def sub_q0(self):
        return QTPoly({(0, b): v for (a, b), v in self.c.items() if a == 0})

    def sub_q1(self):
        d = {}
        for (a, b), v in self.c.items():
            d[(0, b)] = d.get((0, b), 0) + v
        return QTPoly(d)

    def sub_t1(self):
        d = {}
        for (a, b), v in self.c.items():
            d[(a, 0)] = d.get((a, 0), 0) + v
        return QTPoly(d)

    def sub_t_pow(self, m):
        """t -> t^m (m >= 1)."""
        return QTPoly({(a, b * m): v for (a, b), v in self.c.items()})

    def sub_q_pow(self, m):
        return QTPoly({(a * m, b): v for (a, b), v in self.c.items()})

    def eval_frac(self, qv, tv):
        """Evaluate at Fractions (or ints)."""
        tot = Fraction(0)
        for (a, b), v in self.c.items():
            tot += Fraction(v) * (Fraction(qv) ** a) * (Fraction(tv) ** b)
        return tot

    # -- display -----------------------------------------------------------

    def _term_strs(self, keys):
        parts = []
        for k in keys:
            a, b = k
            v = self.c[k]
            vars_ = []
            if a:
                vars_.append("q" if a == 1 else "q^%d" % a)
            if b:
                vars_.append("t" if b == 1 else "t^%d" % b)
            if not vars_:
                parts.append(("-" if v < 0 else "+", str(abs(v))))
            elif abs(v) == 1:
                parts.append(("-" if v < 0 else "+", "*".join(vars_)))
            else:
                parts.append(("-" if v < 0 else "+", str(abs(v)) + "*" + "*".join(vars_)))
        return parts

    def __str__(self):
        if not self.c:
            return "0"
        key = lambda ab: (ab[0] + ab[1], ab[0], ab[1])
        keys = sorted(self.c, key=key, reverse=True)
        # ascending looks nicer for things like 1-q or t-q^3
        if self.c[keys[0]] < 0 and any(v > 0 for v in self.c.values()):
            keys.reverse()
        parts = self._term_strs(keys)
        s = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, body in parts[1:]:
            s += sign + body
        return s

    def __repr__(self):
        return "poly(%r)" % str(self)


P_ZERO = QTPoly()
P_ONE = QTPoly({(0, 0): 1})
Q = QTPoly({(1, 0): 1})
T = QTPoly({(0, 1): 1})


def _qt_gcd(A, B):
    """gcd in ZZ[q,t] (content/primitive-part recursion, primitive PRS in t)."""
    if A.is_zero():
        return _canon_lead_pos(B)
    if B.is_zero():
        return _canon_lead_pos(A)
    if A.c == B.c:
        return _canon_lead_pos(A)
    # monomial fast path
    if A.is_mono() or B.is_mono():
        ga = min(a for a, _ in A.c) if A.c else 0
        gb = min(b for _, b in A.c)
        ha = min(a for a, _ in B.c)
        hb = min(b for _, b in B.c)
        return QTPoly.mono(igcd(A.int_content(), B.int_content()),
                           min(ga, ha), min(gb, hb))
    ta, tb = A.t_coeffs(), B.t_coeffs()
    if len(ta) == 1 and len(tb) == 1:
        # both t-monomial rows: reduce to ZZ[q] gcd
        (ba, pa), = ta.items()
        (bb, pb), = tb.items()
        g = _u_gcd(pa, pb)
        return QTPoly({(i, min(ba, bb)): v for i, v in enumerate(g) if v})
    g = _qt_heugcd(A, B)
    if g is not None:
        return _canon_lead_pos(g)
    return _gcd_recursive(ta, tb)


def _qt_heugcd(A, B):
    """Heuristic gcd in ZZ[q,t]: evaluate t, gcd in ZZ[q], lift, certify."""
    na = max(abs(v) for v in A.c.values())
    nb = max(abs(v) for v in B.c.values())
    ca, cb = A.int_content(), B.int_content()
    c = igcd(ca, cb)
    A1 = QTPoly({k: v // ca for k, v in A.c.items()})
    B1 = QTPoly({k: v // cb for k, v in B.c.items()})
    xi = 2 * min(na // ca, nb // cb) + 29
    for _ in range(6):
        fa = _eval_t(A1, xi)
        fb = _eval_t(B1, xi)
        g = _u_gcd(fa, fb)
        if g:
            cand = _lift_t(g, xi)
            cc = cand.int_content()
            if cc > 1:
                cand = QTPoly({k: v // cc for k, v in cand.c.items()})
            cand = _canon_lead_pos(cand)
            if _qt_divides(cand, A1) and _qt_divides(cand, B1):
                return cand * c
        xi = 73 * xi // 27 + 27
    return None


def _eval_t(p, xi):
    """p(q, xi) as a dense ZZ[q] list."""
    out = [0] * (p.deg_q() + 1)
    for (a, b), v in p.c.items():
        out[a] += v * xi ** b
    return _u_trim(out)


def _lift_t(g, xi):
    """Rebuild a QTPoly from a ZZ[q] poly by symmetric base-xi digits."""
    d = {}
    for a, cv in enumerate(g):
        for b, dv in enumerate(_sym_digits(cv, xi)):
            if dv:
                d[(a, b)] = dv
    return QTPoly(d)


def _qt_divides(d, p):
    try:
        _qt_divexact(p, d)
        return True
    except ArithmeticError:
        return False


def _cont_q(tc):
    """content in ZZ[q] of a t-coefficient table."""
    g = []
    for p in tc.values():
        g = _u_gcd(g, p)
        if g == [1]:
            break
    return g


def _tc_divexact(tc, g):
    if g == [1]:
        return tc
    return {b: _u_divexact(p, g) for b, p in tc.items()}


def _tc_prem(A, B):
    """Pseudo-remainder in t of coefficient tables over ZZ[q]."""
    A = {b: list(p) for b, p in A.items()}
    db = max(B)
    lb = B[db]
    while A and max(A) >= db:
        da = max(A)
        la = A[da]
        # A := lb*A - la*t^(da-db)*B
        newA = {}
        for b, p in A.items():
            newA[b] = _u_mul(p, lb)
        for b, p in B.items():
            k = b + da - db
            newA[k] = _u_sub(newA.get(k, []), _u_mul(p, la))
        A = {b: p for b, p in newA.items() if p}
        if A and max(A) >= da:
            raise ArithmeticError("pseudo-division failed")
    return A


def _gcd_recursive(ta, tb):
    ca, cb = _cont_q(ta), _cont_q(tb)
    cg = _u_gcd(ca, cb)
    A = _tc_divexact(ta, ca)
    B = _tc_divexact(tb, cb)
    if max(A) < max(B):
        A, B = B, A
    while B:
        R = _tc_prem(A, B)
        if R:
            R = _tc_divexact(R, _cont_q(R))
        A, B = B, R
    # result = cg * A (primitive part), as QTPoly
    d = {}
    for b, p in A.items():
        for i, v in enumerate(_u_mul(p, cg)):
            if v:
                d[(i, b)] = v
    return _canon_lead_pos(QTPoly(d))


def _canon_lead_pos(p):
    if p.c and p.lex_lead()[1] < 0:
        return -p
    return p


def _qt_divexact(A, B):
    """Exact division A / B in ZZ[q,t]; raises ArithmeticError if inexact."""
    if B.is_one():
        return A
    if A.is_zero():
        return P_ZERO
    if B.is_mono():
        ((a0, b0), v0), = B.c.items()
        d = {}
        for (a, b), v in A.c.items():
            if a < a0 or b < b0 or v % v0:
                raise ArithmeticError("inexact division")
            d[(a - a0, b - b0)] = v // v0
        return QTPoly(d)
    # long division by lex-leading term of B
    d = {}
    rem = dict(A.c)
    (kb, vb) = B.lex_lead()
    while rem:
        ka = max(rem)
        va = rem[ka]
        a, b = ka[0] - kb[0], ka[1] - kb[1]
        if a < 0 or b < 0 or va % vb:
            raise ArithmeticError("inexact division")
        cq = va // vb
        d[(a, b)] = cq
        for (a2, b2), v2 in B.c.items():
            k = (a + a2, b + b2)
            nv = rem.get(k, 0) - cq * v2
            if nv:
                rem[k] = nv
            elif k in rem:
                del rem[k]
    return QTPoly(d)


# ---------------------------------------------------------------------------
# QQ(q,t)
# ---------------------------------------------------------------------------

class QTRat:
    """Reduced fraction of QTPoly. den's lex-leading coefficient is positive."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, int):
            num = QTPoly.const(num)
        if den is None:
            den = P_ONE
        elif isinstance(den, int):
            den = QTPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("QTRat with zero denominator")
        if not _reduced and not den.is_one():
            g = _qt_gcd(num, den)
            if not g.is_one():
                num = _qt_divexact(num, g)
                den = _qt_divexact(den, g)
            if den.lex_lead()[1] < 0:
                num, den = -num, -den
        elif not den.is_one() and den.lex_lead()[1] < 0:
            num, den = -num, -den
        self.num = num
        self.den = den
        self._hash = None

    # -- helpers -----------------------------------------------------------

    @staticmethod
    def of(x):
        if isinstance(x, QTRat):
            return x
        if isinstance(x, QTPoly):
            return QTRat(x, None, _reduced=True)
        if isinstance(x, int):
            return QTRat(QTPoly.const(x), None, _reduced=True)
        if isinstance(x, Fraction):
            return QTRat(QTPoly.const(x.numerator), QTPoly.const(x.denominator))
        raise TypeError(type(x))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_poly(self):
        return self.den.is_one() or self.den.is_const()

    def as_poly(self):
        """Return the underlying QTPoly; requires an integer-poly value."""
        if self.den.is_one():
            return self.num
        if self.den.is_const():
            return _qt_divexact(self.num, self.den)
        raise ValueError("not a polynomial: %s" % self)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = QTRat.of(other) if not isinstance(other, QTRat) else other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.c == other.den.c:
            return QTRat(self.num + other.num, self.den)
        if self.den.is_one():
            return QTRat(self.num * other.den + other.num, other.den)
        if other.den.is_one():
            return QTRat(self.num + other.num * self.den, self.den)
        g = _qt_gcd(self.den, other.den)
        if g.is_one():
            return QTRat(self.num * other.den + other.num * self.den,
                         self.den * other.den)
        d1 = _qt_divexact(self.den, g)
        d2 = _qt_divexact(other.den, g)
        return QTRat(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = QTRat.__new__(QTRat)
        out.num = -self.num
        out.den = self.den
        out._hash = None
        return out

    def __sub__(self, other):
        other = QTRat.of(other) if not isinstance(other, QTRat) else other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QTRat.of(other) if not isinstance(other, QTRat) else other
        if self.num.is_zero() or other.num.is_zero():
            return R_ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not d2.is_one():
            g = _qt_gcd(n1, d2)
            if not g.is_one():
                n1 = _qt_divexact(n1, g)
                d2 = _qt_divexact(d2, g)
        if not d1.is_one():
            g = _qt_gcd(n2, d1)
            if not g.is_one():
                n2 = _qt_divexact(n2, g)
                d1 = _qt_divexact(d1, g)
        den = d1 * d2
        num = n1 * n2
        if not den.is_one() and den.lex_lead()[1] < 0:
            num, den = -num, -den
        out = QTRat.__new__(QTRat)
        out.num = num
        out.den = den
        out._hash = None
        return out

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError
        return QTRat(self.den, self.num, _reduced=True) if self.num.lex_lead()[1] > 0 \
            else QTRat(-self.den, -self.num, _reduced=True)

    def __truediv__(self, other):
        other = QTRat.of(other) if not isinstance(other, QTRat) else other
        return self * other.inv()

    def __rtruediv__(self, other):
        return QTRat.of(other) * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = R_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, QTPoly, Fraction)):
            other = QTRat.of(other)
        if not isinstance(other, QTRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- substitutions -----------------------------------------------------

    def flip_qt(self):
        return QTRat(self.num.flip_qt(), self.den.flip_qt())

    def sub_t0(self):
        den = self.den.sub_t0()
        if den.is_zero():
            raise ZeroDivisionError("pole at t=0 in %s" % self)
        return QTRat(self.num.sub_t0(), den)

    def sub_q0(self):
        den = self.den.sub_q0()
        if den.is_zero():
            raise ZeroDivisionError("pole at q=0 in %s" % self)
        return QTRat(self.num.sub_q0(), den)

    def sub_q1(self):
        den = self.den.sub_q1()
        if den.is_zero():
            raise ZeroDivisionError("pole at q=1 in %s" % self)
        return QTRat(self.num.sub_q1(), den)

    def sub_t1(self):
        den = self.den.sub_t1()
        if den.is_zero():
            raise ZeroDivisionError("pole at t=1 in %s" % self)
        return QTRat(self.num.sub_t1(), den)

    def sub_q_inv(self):
        """q -> 1/q."""
        sn = self.num.deg_q()
        sd = self.den.deg_q()
        n = QTPoly({(sn - a, b): v for (a, b), v in self.num.c.items()})
        d = QTPoly({(sd - a, b): v for (a, b), v in self.den.c.items()})
        # self(1/q) = q^(sd-sn) * n/d
        shift = sd - sn
        if shift >= 0:
            return QTRat(n * QTPoly.mono(1, shift, 0), d)
        return QTRat(n, d * QTPoly.mono(1, -shift, 0))

    def sub_t_inv(self):
        """t -> 1/t."""
        sn = self.num.deg_t()
        sd = self.den.deg_t()
        n = QTPoly({(a, sn - b): v for (a, b), v in self.num.c.items()})
        d = QTPoly({(a, sd - b): v for (a, b), v in self.den.c.items()})
        shift = sd - sn
        if shift >= 0:
            return QTRat(n * QTPoly.mono(1, 0, shift), d)
        return QTRat(n, d * QTPoly.mono(1, 0, -shift))

    def sub_t_qinv(self):
        """t -> 1/q; asserts the substitution clears all poles."""
        def lauren(p):
            # p(q, 1/q) as (poly in q, power of q to divide by)
            shift = max((b - a for (a, b) in p.c), default=0)
            shift = max(shift, 0)
            d = {}
            for (a, b), v in p.c.items():
                k = (a - b + shift, 0)
                d[k] = d.get(k, 0) + v
            return QTPoly(d), shift
        n, sn = lauren(self.num)
        d, sd = lauren(self.den)
        if d.is_zero():
            raise ZeroDivisionError("pole at t=1/q in %s" % self)
        shift = sd - sn
        if shift >= 0:
            return QTRat(n * QTPoly.mono(1, shift, 0), d)
        return QTRat(n, d * QTPoly.mono(1, -shift, 0))

    def sub_t_qpow(self, m):
        """t -> q^m (m >= 0)."""
        def f(p):
            d = {}
            for (a, b), v in p.c.items():
                k = (a + m * b, 0)
                d[k] = d.get(k, 0) + v
            return QTPoly(d)
        den = f(self.den)
        if den.is_zero():
            raise ZeroDivisionError("pole at t=q^%d in %s" % (m, self))
        return QTRat(f(self.num), den)

    def eval_frac(self, qv, tv):
        dv = self.den.eval_frac(qv, tv)
        if dv == 0:
            raise ZeroDivisionError("pole at (%s, %s)" % (qv, tv))
        return self.num.eval_frac(qv, tv) / dv

    # -- display -----------------------------------------------------------

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        num, den = self.num, self.den
        # cosmetic sign flip so denominators read like 1-q instead of q-1
        cd = den.c.get((0, 0), 0)
        if cd < 0 or (cd == 0 and den.lex_lead()[1] > 0 and
                      any(v < 0 for v in den.c.values())):
            num, den = -num, -den
        ns = str(num)
        ds = str(den)
        if len(num.c) > 1:
            ns = "(" + ns + ")"
        if len(den.c) > 1 or "*" in ds:
            ds = "(" + ds + ")"
        return ns + "/" + ds

    def __repr__(self):
        return "rat(%r)" % str(self)


R_ZERO = QTRat.of(0)
R_ONE = QTRat.of(1)
R_Q = QTRat.of(Q)
R_T = QTRat.of(T)


# ---------------------------------------------------------------------------
# parsing and convenience constructors
# ---------------------------------------------------------------------------

def poly(s):
    """Parse a string like 'q^2+q*t-3' into a QTPoly."""
    r = parse_rat(s)
    if not r.den.is_one():
        raise ValueError("not a polynomial: %s" % s)
    return r.num


def rat(s):
    return parse_rat(s)


def _from_ast(node):
    if isinstance(node, ast.Expression):
        return _from_ast(node.body)
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Add):
            return _from_ast(node.left) + _from_ast(node.right)
        if isinstance(node.op, ast.Sub):
            return _from_ast(node.left) - _from_ast(node.right)
        if isinstance(node.op, ast.Mult):
            return _from_ast(node.left) * _from_ast(node.right)
        if isinstance(node.op, ast.Div):
            return _from_ast(node.left) / _from_ast(node.right)
        if isinstance(node.op, ast.Pow):
            exp = node.right
            neg = False
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                neg, exp = True, exp.operand
            if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                raise ValueError("bad exponent")
            e = -exp.value if neg else exp.value
            return _from_ast(node.left) ** e
        raise ValueError("bad operator")
    if isinstance(node, ast.UnaryOp):
        if isinstance(node.op, ast.USub):
            return -_from_ast(node.operand)
        if isinstance(node.op, ast.UAdd):
            return _from_ast(node.operand)
        raise ValueError("bad unary operator")
    if isinstance(node, ast.Name):
        if node.id == "q":
            return QTRat.of(Q)
        if node.id == "t":
            return QTRat.of(T)
        raise ValueError("unknown symbol %r" % node.id)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return QTRat.of(node.value)
    raise ValueError("cannot parse %r" % node)


def parse_rat(s):
    """Parse a q,t rational-function string (supports + - * / ^ and parens)."""
    if isinstance(s, QTRat):
        return s
    if isinstance(s, (int, QTPoly)):
        return QTRat.of(s)
    txt = s.replace("^", "**").strip()
    try:
        tree = ast.parse(txt, mode="eval")
    except SyntaxError as e:
        raise ValueError("cannot parse %r" % s) from e
    return _from_ast(tree)


# ---------------------------------------------------------------------------
# q-analogs
# ---------------------------------------------------------------------------

def qint(n):
    """[n]_q = 1 + q + ... + q^(n-1); [oo]_q = 1/(1-q)."""
    if n is INF or n == INF:
        return QTRat(P_ONE, P_ONE - Q)
    if n < 0:
        raise ValueError("negative q-integer")
    return QTRat.of(QTPoly({(i, 0): 1 for i in range(n)}))


def qfact(n):
    """[n]!_q."""
    if n < 0:
        raise ValueError("negative q-factorial")
    out = R_ONE
    for i in range(2, n + 1):
        out = out * qint(i)
    return out


def _one_minus_qk(k):
    return QTPoly({(0, 0): 1, (k, 0): -1})


def qbinom(n, k):
    """Gaussian binomial [n choose k]_q; n = INF gives prod 1/(1-q^i).

    Out-of-range integer arguments (k < 0 or k > n or n < 0) give 0,
    matching the combinatorial conventions used everywhere downstream.
    """
    if n is INF or n == INF:
        if k < 0:
            return R_ZERO
        out = R_ONE
        for i in range(1, k + 1):
            out = out * QTRat(P_ONE, _one_minus_qk(i))
        return out
    if k < 0 or n < 0 or k > n:
        return R_ZERO
    k = min(k, n - k)
    num = P_ONE
    den = P_ONE
    for i in range(k):
        num = num * _one_minus_qk(n - i)
        den = den * _one_minus_qk(i + 1)
    return QTRat(num, den)


def qmultinom(n, parts):
    """q-multinomial [n choose parts]_q; parts must sum to n."""
    if sum(parts) != n:
        raise ValueError("multinomial parts must sum to n")
    out = qfact(n)
    for p in parts:
        out = out / qfact(p)
    return out
