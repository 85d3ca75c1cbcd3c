from math import factorial

from hypothesis import given, settings, strategies as st

from qwhit.cbasis import (
    c_in_w, c_pieces, corner_removals, gamma_matrix, htilde_two_row_in_w,
    k_ab, k_top, lower_factor, phi, phi0_two_row, reconstruct_htilde,
    upper_factor, w_in_c,
)
from qwhit.eigenops import nabla, positivity
from qwhit.macdonald import htilde
from qwhit.partitions import mk, partitions_of
from qwhit.qtring import QTPoly, QTRat, R_ZERO, qbinom, rat
from qwhit.symfunc import hall, omega, p_, to_s
from qwhit.whittaker import w_

C6_TABLES = {
    0: {(2, 2, 2): "q^6", (3, 2, 1): "q^5+q^4", (3, 3): "q^3",
        (4, 1, 1): "q^3", (4, 2): "q^4+q^3+q^2", (5, 1): "q^2+q",
        (6,): "1"},
    1: {(2, 2, 1, 1): "q^4", (3, 1, 1, 1): "q^3", (3, 2, 1): "q^3+q^2",
        (3, 3): "q^2", (4, 1, 1): "q^2+q", (4, 2): "q", (5, 1): "1"},
    2: {(2, 1, 1, 1, 1): "q^4", (2, 2, 1, 1): "q^3", (2, 2, 2): "q^2",
        (3, 1, 1, 1): "q^3+q^2", (3, 2, 1): "q^2+q", (4, 1, 1): "q",
        (4, 2): "1"},
    3: {(1, 1, 1, 1, 1, 1): "q^6", (2, 1, 1, 1, 1): "q^5+q^4",
        (2, 2, 1, 1): "q^4+q^3+q^2", (2, 2, 2): "q^3", (3, 1, 1, 1): "q^3",
        (3, 2, 1): "q^2+q", (3, 3): "1"},
}


def two_row(a, b):
    return mk((a, b) if b else (a,))


def test_c6_printed_tables():
    pieces = c_pieces(6)
    for j, table in C6_TABLES.items():
        got = to_s(pieces[j])
        assert got == {mk(l): rat(v) for l, v in table.items()}, j


def test_c2_trivial():
    pieces = c_pieces(2)
    assert to_s(pieces[0]) == {(2,): rat("1")}
    assert to_s(pieces[1]) == {(1, 1): rat("1")}


def test_top_piece_is_W():
    for n in range(1, 9):
        k, l = (n + 1) // 2, n // 2
        assert c_pieces(n)[l] == w_(two_row(k, l)), n


def test_dimensions():
    # every piece has dimension n!/2^l
    for n in range(1, 9):
        l = n // 2
        for C in c_pieces(n):
            dim = hall(C, p_((1,) * n)).sub_q1()
            assert dim == QTRat.of(factorial(n) // 2 ** l), n


def test_flip_symmetry():
    # q^d omega C_i(1/q) = C_(l-i), d the q-degree; a plain index flip
    # without omega is off already at n = 2
    for n in range(1, 9):
        l = n // 2
        pieces = c_pieces(n)
        for i, C in enumerate(pieces):
            d = max(c.as_poly().deg_q() for c in to_s(C).values())
            scale = QTRat.of(QTPoly.mono(1, d, 0))
            flip = omega(C.map_coeffs(lambda c: c.sub_q_inv() * scale))
            assert flip == pieces[l - i], (n, i)


def _matmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), R_ZERO)
             for j in range(len(B[0]))] for i in range(len(A))]


def test_gamma_factors_LU():
    for n in range(2, 9):
        G = gamma_matrix(n)
        assert G == _matmul(lower_factor(n), upper_factor(n)), n


def test_lower_factor_is_htilde_in_W():
    for n in range(2, 9):
        assert htilde_two_row_in_w(n) == lower_factor(n), n


def test_gamma_n6_printed():
    G = gamma_matrix(6)
    b31, b21 = str(qbinom(3, 1)), str(qbinom(2, 1))
    want = {
        (0, 0): "1", (0, 1): "q^3*(%s)" % b31, (0, 2): "q^6*(%s)" % b31,
        (0, 3): "q^9",
        (1, 0): "1", (1, 1): "t+q^3*(%s)" % b21,
        (1, 2): "q^6+q^2*t*(%s)" % b21, (1, 3): "q^4*t",
        (2, 0): "1", (2, 1): "q^3+t*(%s)" % b21,
        (2, 2): "t^2+q^2*t*(%s)" % b21, (2, 3): "q*t^2",
        (3, 0): "1", (3, 1): "t*(%s)" % b31, (3, 2): "t^2*(%s)" % b31,
        (3, 3): "t^3",
    }
    for (i, j), v in want.items():
        assert G[i][j] == rat(v), (i, j)


def test_W_in_C_and_back():
    for n in range(1, 9):
        l = n // 2
        pieces = c_pieces(n)
        for i in range(l + 1):
            assert w_in_c(n, i, pieces) == w_(two_row(n - i, i)), (n, i)
            assert c_in_w(n, i) == pieces[i], (n, i)


def test_nabla_c0():
    for n in range(2, 8):
        pieces = c_pieces(n)
        m = n // 2
        if n % 2 == 0:
            c = QTPoly.mono((-1) ** m, m * (3 * m - 1) // 2, m)
        else:
            c = QTPoly.mono((-1) ** m, 3 * m * (m + 1) // 2, m)
        assert nabla(pieces[0]) == pieces[m] * c, n


def test_pieces_schur_positive():
    for n in range(1, 8):
        for C in c_pieces(n):
            assert positivity(C, "s"), n


# ---------------------------------------------------------------------------
# corner-interpolation sums
# ---------------------------------------------------------------------------

def test_corner_removals():
    assert corner_removals((3, 2, 1)) == [(2, 2, 1), (3, 1, 1), (3, 2)]
    assert corner_removals((4,)) == [(3,)]


def test_reconstruction_full_families():
    for np1 in range(2, 7):
        for lam in partitions_of(np1):
            c = corner_removals(lam)
            for nu in c:
                assert reconstruct_htilde(nu, c) == htilde(nu), (lam, nu)


@given(st.sampled_from([lam for n in range(3, 6)
                        for lam in partitions_of(n)
                        if len(corner_removals(lam)) >= 2]),
       st.data())
@settings(max_examples=20, deadline=None)
def test_reconstruction_subfamilies(lam, data):
    full = corner_removals(lam)
    size = data.draw(st.integers(1, len(full)))
    idx = data.draw(st.permutations(range(len(full))))
    sub = [full[i] for i in sorted(idx[:size])]
    nu = data.draw(st.sampled_from(sub))
    assert reconstruct_htilde(nu, sub) == htilde(nu)


def test_phi_schur_positive():
    for np1 in range(2, 6):
        for lam in partitions_of(np1):
            c = corner_removals(lam)
            for j in range(len(c)):
                assert positivity(phi(c, j), "s"), (lam, j)


def test_phi0_two_row():
    for l in (2, 3):
        c = corner_removals((l + 1, l))
        assert phi(c, 0) == phi0_two_row(l), l


# ---------------------------------------------------------------------------
# polarization filtration kernels
# ---------------------------------------------------------------------------

def test_k_top_matches_k_ab():
    for n in range(2, 7):
        assert k_top(n) == k_ab(n, 0), n


def test_kernels_schur_positive():
    for n in range(2, 8):
        for b in range(n // 2):
            a = n - b
            if a >= b + 2:
                assert positivity(k_ab(a, b), "s"), (a, b)


def test_small_kernels_explicit():
    want = {
        (2, 0): {(2,): "1"},
        (3, 0): {(3,): "1", (2, 1): "q"},
        (4, 0): {(4,): "1", (3, 1): "q^2+q", (2, 2): "q^2",
                 (2, 1, 1): "q^3"},
        (3, 1): {(3, 1): "1", (2, 1, 1): "q"},
    }
    for (a, b), table in want.items():
        assert to_s(k_ab(a, b)) == {mk(l): rat(v)
                                    for l, v in table.items()}, (a, b)
