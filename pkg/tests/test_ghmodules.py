"""Derivative modules of diagram determinants vs the polynomial side."""

import random
from fractions import Fraction
from math import factorial

import pytest

from qwhit.cbasis import k_ab
from qwhit.ghmodules import (
    DuplicateCells, bigraded_frobenius, derivative_closure, dnk_char,
    filtration_report, kappa_apply, kappa_on_vd, module_dim, punctured_char,
    vandermonde_det, whittaker_module_char, y_free_char,
)
from qwhit.macdonald import hl_H, htilde
from qwhit.partitions import cells, conj, eta, mk, partitions_of
from qwhit.pieri import d_op, u_op
from qwhit.qtring import QTPoly, qbinom
from qwhit.symfunc import omega
from qwhit.whittaker import from_w, w_


def _pmul(p1, p2):
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            nv = out.get(key, 0) + c1 * c2
            if nv:
                out[key] = nv
            else:
                del out[key]
    return out


def test_vandermonde_column_shape():
    # single column of cells: pure y Vandermonde (here n = 2, up to sign)
    v = vandermonde_det([(0, 1), (0, 0)])
    assert v == {(0, 0, 0, 1): 1, (0, 0, 1, 0): -1}


def test_vandermonde_row_is_classic():
    v = vandermonde_det([(0, 0), (1, 0), (2, 0)])
    x1 = {(1, 0, 0, 0, 0, 0): Fraction(1)}
    x2 = {(0, 1, 0, 0, 0, 0): Fraction(1)}
    x3 = {(0, 0, 1, 0, 0, 0): Fraction(1)}
    def sub(a, b):
        out = dict(a)
        for k, c in b.items():
            nv = out.get(k, 0) - c
            if nv:
                out[k] = nv
            else:
                del out[k]
        return out
    want = _pmul(_pmul(sub(x2, x1), sub(x3, x1)), sub(x3, x2))
    assert v == want


def test_duplicate_cells_rejected():
    with pytest.raises(DuplicateCells):
        vandermonde_det([(0, 0), (1, 0), (0, 0)])


def test_bigraded_hilbert_row_two():
    clo = derivative_closure(cells((2,)))
    assert {k: len(v) for k, v in clo.items()} == {(0, 0): 1, (1, 0): 1}


def test_nfact_and_frobenius():
    # dimension n! and bigraded character = modified Macdonald, n <= 4
    for n in range(1, 5):
        for mu in partitions_of(n):
            clo = derivative_closure(cells(mu))
            assert module_dim(clo) == factorial(n), mu
            assert bigraded_frobenius(clo, n) == htilde(mu), mu


def test_x_closure_char_is_w():
    for n in range(1, 6):
        for mu in partitions_of(n):
            assert whittaker_module_char(cells(mu)) == w_(mu), mu


def test_y_free_slice():
    # the y-degree-0 slice carries the t = 0 specialization, and is the
    # degree-reversed omega twist of the x-closure character
    for n in range(1, 5):
        for mu in partitions_of(n):
            got = y_free_char(mu)
            assert got == hl_H(mu), mu
            twist = omega(w_(mu).map_coeffs(
                lambda c: c.sub_q_inv() * QTPoly.mono(1, eta(conj(mu)), 0)))
            assert got == twist, mu


def test_punctured_diagrams():
    # removing any cell c from lam: character = D_c applied to W_lam
    for n in range(2, 6):
        for lam in partitions_of(n):
            for c in cells(lam):
                assert punctured_char(lam, c) == from_w(d_op(c, lam)), (lam, c)


def test_punctured_missing_cell_is_zero():
    assert punctured_char((2, 1), (5, 5)).is_zero()
    assert punctured_char((3,), (0, 1)).is_zero()


def test_up_pieri_modules_small():
    # adjoining any finite cell to mu: character = U_d applied to W_mu
    for n in range(1, 4):
        for mu in partitions_of(n):
            for d in [(i, j) for i in range(5) for j in range(4)]:
                if d in cells(mu):
                    continue
                got = whittaker_module_char(cells(mu) + [d])
                assert got == from_w(u_op(d, mu)), (mu, d)


@pytest.mark.slow
def test_up_pieri_modules_n4():
    for mu in partitions_of(4):
        for d in [(i, j) for i in range(6) for j in range(6)]:
            if d in cells(mu):
                continue
            got = whittaker_module_char(cells(mu) + [d])
            assert got == from_w(u_op(d, mu)), (mu, d)


def test_row_segment_diagrams():
    # k cells at the right end of a length-n row: qbinom(n,k) * W_k
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert dnk_char(n, k) == w_(mk((k,))) * qbinom(n, k), (n, k)


def test_kappa_formula_vs_direct():
    rng = random.Random(7)
    allcells = [(a, b) for a in range(4) for b in range(4)]
    for _ in range(20):
        sz = rng.randint(2, 4)
        d = tuple(sorted(rng.sample(allcells, sz)))
        j, k = rng.choice([(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1)])
        direct = kappa_apply(j, k, vandermonde_det(d), sz)
        form = {}
        for nd, c in kappa_on_vd(j, k, d).items():
            for exps, v in vandermonde_det(nd).items():
                nv = form.get(exps, 0) + c * v
                if nv:
                    form[exps] = nv
                else:
                    del form[exps]
        assert direct == form, (d, j, k)


def test_kappa_kills_partition_diagrams():
    for n in range(2, 5):
        for mu in partitions_of(n):
            v = vandermonde_det(cells(mu))
            for (j, k) in [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)]:
                assert not kappa_apply(j, k, v, n), (mu, j, k)


def test_kappa_moving_box_fixtures():
    # slide the far box left one step
    assert kappa_on_vd(1, 0, [(0, 0), (2, 0)]) == {((0, 0), (1, 0)): 2}
    # both moves die: one collides, one falls off the grid
    assert kappa_on_vd(1, 0, [(0, 0), (1, 0)]) == {}
    # re-sorting the cells flips the sign
    assert kappa_on_vd(1, 0, [(0, 1), (1, 0)]) == {((0, 0), (0, 1)): -1}


def test_filtration_kernels():
    # y_i dx_i^(a-b-1) on the x-closure of the two-row module: the kernel
    # carries W_ab - q^(a-b-1) W_(a-1,b+1), the image the smaller W
    for n in range(2, 6):
        for b in range(n // 2 + 1):
            a = n - b
            if a < b + 2:
                continue
            ker, img = filtration_report(a, b)
            assert ker == k_ab(a, b), (a, b)
            assert img == w_(mk((a - 1, b + 1))), (a, b)
