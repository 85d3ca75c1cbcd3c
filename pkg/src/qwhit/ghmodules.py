"""Desk-scale Garsia-Haiman modules.

A diagram is a set of cells (a, b); its determinant V_d = det(x_i^a y_i^b)
generates a module under partial derivatives, bigraded by (x, y)-degree.
For partition diagrams the bigraded Frobenius characteristic is the
modified Macdonald polynomial (the n! theorem, checked here exhaustively
at small n), and the top y-layer -- the x-derivative closure with inert
y's -- carries the one-parameter W character.  Everything is exact
Fraction arithmetic on sparse exponent maps; no Groebner machinery, just
breadth-first closure with per-bidegree row reduction.

Cells are (a, b) = (x-exponent, y-exponent) = (column, row), matching the
(i, j) cell convention used for partitions elsewhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .partitions import cells as shape_cells, mk, partitions_of
from .qtring import QTPoly, QTRat
from .symfunc import Sym, zee

__all__ = [
    "DuplicateCells", "vandermonde_det", "derivative_closure",
    "bigraded_frobenius", "gh_frobenius", "whittaker_module_char",
    "punctured_char", "dnk_char", "falling", "kappa_apply", "kappa_on_vd",
    "filtration_report", "y_free_char",
]


class DuplicateCells(Exception):
    pass


# ---------------------------------------------------------------------------
# sparse polynomials in x_1..x_n, y_1..y_n over Fraction
# exponent keys are tuples (x_1..x_n, y_1..y_n)
# ---------------------------------------------------------------------------

def _perm_sign(p):
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def vandermonde_det(d):
    """det(x_i^a y_i^b) over the cells of the diagram, in lex cell order."""
    cells = sorted(d)
    if len(set(cells)) != len(cells):
        raise DuplicateCells(d)
    n = len(cells)
    out = {}
    for p in permutations(range(n)):
        exps = [0] * (2 * n)
        for i in range(n):
            a, b = cells[p[i]]
            exps[i] += a
            exps[n + i] += b
        key = tuple(exps)
        out[key] = out.get(key, 0) + _perm_sign(p)
    return {k: Fraction(v) for k, v in out.items() if v}


def _deriv(p, v):
    out = {}
    for exps, c in p.items():
        e = exps[v]
        if e:
            key = exps[:v] + (e - 1,) + exps[v + 1:]
            nv = out.get(key, 0) + c * e
            if nv:
                out[key] = nv
            else:
                del out[key]
    return out


def _mul_var(p, v):
    return {exps[:v] + (exps[v] + 1,) + exps[v + 1:]: c
            for exps, c in p.items()}


def _apply_perm(p, sigma, n):
    """sigma . x_i = x_{sigma(i)} (and same on y)."""
    out = {}
    for exps, c in p.items():
        ne = [0] * (2 * n)
        for i in range(n):
            ne[sigma[i]] = exps[i]
            ne[n + sigma[i]] = exps[n + i]
        out[tuple(ne)] = c
    return out


# row reduction: echelon kept as {pivot_monomial: poly with pivot coeff 1},
# fully reduced so coordinate extraction is a single sweep

def _reduce(p, ech):
    p = dict(p)
    coords = {}
    while p:
        m = max(p)
        if m not in ech:
            return p, coords
        c = p[m]
        coords[m] = coords.get(m, 0) + c
        for exps, v in ech[m].items():
            nv = p.get(exps, 0) - c * v
            if nv:
                p[exps] = nv
            else:
                p.pop(exps, None)
    return p, coords


def _echelon(gens):
    ech = {}
    for g in gens:
        r, _ = _reduce(g, ech)
        if not r:
            continue
        m = max(r)
        inv = 1 / r[m]
        r = {k: v * inv for k, v in r.items()}
        for piv, row in ech.items():
            c = row.get(m)
            if c:
                ech[piv] = {k: v for k, v in
                            ((k, row.get(k, 0) - c * r.get(k, 0))
                             for k in set(row) | set(r)) if v}
        ech[m] = r
    return ech


def _bidegree(p):
    exps = next(iter(p))
    n = len(exps) // 2
    return sum(exps[:n]), sum(exps[n:])


def derivative_closure(d, x_only=False):
    """{(xdeg, ydeg): echelon basis} of the span of all derivatives of
    V_d (x-derivatives only when x_only)."""
    v = vandermonde_det(d)
    n = len(sorted(d))
    out = {}
    frontier = {_bidegree(v): _echelon([v])}
    while frontier:
        out.update(frontier)
        nxt = {}
        for (kx, ky), ech in frontier.items():
            gens = []
            for row in ech.values():
                gens.extend(_deriv(row, i) for i in range(n))
            gens = [g for g in gens if g]
            if gens and kx:
                nxt.setdefault((kx - 1, ky), []).extend(gens)
            if not x_only:
                gens = []
                for row in ech.values():
                    gens.extend(_deriv(row, n + i) for i in range(n))
                gens = [g for g in gens if g]
                if gens and ky:
                    nxt.setdefault((kx, ky - 1), []).extend(gens)
        frontier = {}
        for key, gens in nxt.items():
            merged = _echelon(list(out.get(key, {}).values()) + gens)
            if len(merged) != len(out.get(key, {})):
                frontier[key] = merged
    return out


def _canonical_perm(lam, n):
    """Permutation with cycle type lam on consecutive indices."""
    sigma = list(range(n))
    pos = 0
    for part_len in lam:
        for i in range(part_len):
            sigma[pos + i] = pos + (i + 1) % part_len
        pos += part_len
    return tuple(sigma)


def _component_char(ech, n):
    """{cycle_type: trace} on the span of one graded component."""
    out = {}
    basis = list(ech.values())
    for lam in partitions_of(n):
        sigma = _canonical_perm(lam, n)
        tr = Fraction(0)
        for b in basis:
            piv = max(b)
            r, coords = _reduce(_apply_perm(b, sigma, n), ech)
            if r:
                raise ArithmeticError("component not S_n-stable")
            tr += coords.get(piv, 0)
        out[lam] = tr
    return out


def _frob_from_char(char_by_type):
    for tr in char_by_type.values():
        if tr.denominator != 1:
            raise ArithmeticError("non-integral trace %r" % tr)
    return Sym({lam: QTRat.of(Fraction(int(tr), zee(lam)))
                for lam, tr in char_by_type.items() if tr})


def bigraded_frobenius(closure, n):
    """sum over components of q^xdeg t^ydeg times the Frobenius image."""
    total = Sym({})
    for (kx, ky), ech in closure.items():
        f = _frob_from_char(_component_char(ech, n))
        total = total + f * QTPoly.mono(1, kx, ky)
    return total


def gh_frobenius(mu):
    """Bigraded Frobenius characteristic of the partition module."""
    mu = mk(mu)
    return bigraded_frobenius(derivative_closure(shape_cells(mu)),
                              sum(mu))


def module_dim(closure):
    return sum(len(ech) for ech in closure.values())


def whittaker_module_char(d):
    """Graded Frobenius of the x-derivative closure, y's inert (the top
    y-layer of the full module), in q alone."""
    cells = sorted(d)
    if len(set(cells)) != len(cells):
        raise DuplicateCells(d)
    n = len(cells)
    closure = derivative_closure(cells, x_only=True)
    total = Sym({})
    for (kx, _ky), ech in closure.items():
        f = _frob_from_char(_component_char(ech, n))
        total = total + f * QTPoly.mono(1, kx, 0)
    return total


def punctured_char(lam, c):
    """Character of the punctured-diagram module lam minus the cell c."""
    lam = mk(lam)
    cs = shape_cells(lam)
    if c not in cs:
        return Sym({})
    return whittaker_module_char([x for x in cs if x != c])


def dnk_char(n, k):
    """Character of the row-segment diagram {(n-k,0),...,(n-1,0)}."""
    return whittaker_module_char([(n - k + i, 0) for i in range(k)])


# ---------------------------------------------------------------------------
# moving boxes
# ---------------------------------------------------------------------------

def falling(a, j):
    out = 1
    for i in range(j):
        out *= a - i
    return out


def kappa_apply(j, k, p, n):
    """sum_i dx_i^j dy_i^k applied to p (j counts x-derivatives)."""
    out = {}
    for i in range(n):
        g = p
        for _ in range(j):
            g = _deriv(g, i)
        for _ in range(k):
            g = _deriv(g, n + i)
        for exps, c in g.items():
            nv = out.get(exps, 0) + c
            if nv:
                out[exps] = nv
            else:
                del out[exps]
    return out


def kappa_on_vd(j, k, d):
    """kappa_(j,k) V_d as {sorted diagram: coefficient}: each cell (a,b)
    moves to (a-j, b-k) with weight +/- (a)_j (b)_k, dropped when it
    leaves the grid or collides; the sign re-sorts the cell list."""
    cells = sorted(d)
    out = {}
    for idx, (a, b) in enumerate(cells):
        ta, tb = a - j, b - k
        if ta < 0 or tb < 0:
            continue
        if (ta, tb) in cells:
            continue
        rest = cells[:idx] + cells[idx + 1:]
        pos = sum(1 for c in rest if c < (ta, tb))
        sign = -1 if (idx - pos) % 2 else 1
        nd = tuple(sorted(rest + [(ta, tb)]))
        coef = sign * falling(a, j) * falling(b, k)
        nv = out.get(nd, 0) + coef
        if nv:
            out[nd] = nv
        else:
            del out[nd]
    return out


# ---------------------------------------------------------------------------
# the polarization filtration, at actual module level
# ---------------------------------------------------------------------------

def _polarize(p, r, n):
    """sum_i y_i dx_i^r."""
    out = {}
    for i in range(n):
        g = p
        for _ in range(r):
            g = _deriv(g, i)
        for exps, c in _mul_var(g, n + i).items():
            nv = out.get(exps, 0) + c
            if nv:
                out[exps] = nv
            else:
                del out[exps]
    return out


def filtration_report(a, b):
    """Apply the polarization map to the x-closure of V_(a,b); return the
    graded characters (kernel, image) -- the kernel should match
    W_ab - q^(a-b-1) W_(a-1,b+1) and the image the W character of the
    smaller shape."""
    if a < b + 2:
        raise ValueError("filtration step needs a >= b + 2")
    mu = mk((a, b) if b else (a,))
    n = sum(mu)
    r = a - b - 1
    closure = derivative_closure(shape_cells(mu), x_only=True)
    kernel = Sym({})
    image = Sym({})
    for (kx, _ky), ech in closure.items():
        basis = list(ech.values())
        imgs = [_polarize(p, r, n) for p in basis]
        img_ech = _echelon([g for g in imgs if g])
        if img_ech:
            f = _frob_from_char(_component_char(img_ech, n))
            image = image + f * QTPoly.mono(1, kx - r, 0)
        # kernel basis: nullspace combinations of the basis elements
        ker = _nullspace_polys(basis, imgs)
        if ker:
            f = _frob_from_char(_component_char(_echelon(ker), n))
            kernel = kernel + f * QTPoly.mono(1, kx, 0)
    return kernel, image


def _nullspace_polys(basis, images):
    """Combinations of basis whose images vanish."""
    ech = {}
    tags = []  # parallel coordinate rows for back-substitution
    out = []
    for bi, (p, img) in enumerate(zip(basis, images)):
        tag = {bi: Fraction(1)}
        img = dict(img)
        while img:
            m = max(img)
            if m not in ech:
                break
            c = img[m]
            row, rtag = ech[m]
            for exps, v in row.items():
                nv = img.get(exps, 0) - c * v
                if nv:
                    img[exps] = nv
                else:
                    img.pop(exps, None)
            for i, v in rtag.items():
                nv = tag.get(i, 0) - c * v
                if nv:
                    tag[i] = nv
                else:
                    tag.pop(i, None)
        if img:
            m = max(img)
            inv = 1 / img[m]
            ech[m] = ({k: v * inv for k, v in img.items()},
                      {i: v * inv for i, v in tag.items()})
        else:
            comb = {}
            for i, v in tag.items():
                for exps, c in basis[i].items():
                    nv = comb.get(exps, 0) + v * c
                    if nv:
                        comb[exps] = nv
                    else:
                        comb.pop(exps, None)
            if comb:
                out.append(comb)
    return out


def y_free_char(mu):
    """Graded character of the y-free slice of the partition module."""
    mu = mk(mu)
    n = sum(mu)
    closure = derivative_closure(shape_cells(mu))
    total = Sym({})
    for (kx, ky), ech in closure.items():
        if ky:
            continue
        f = _frob_from_char(_component_char(ech, n))
        total = total + f * QTPoly.mono(1, kx, 0)
    return total
