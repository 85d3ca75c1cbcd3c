from qwhit.macdonald import (
    charge, hl_H, htilde, htilde_gs, htilde_tri, kostka_count, kostka_q,
    mac_H, mac_P, qprime, ssyt_words, wmu, htilde_expand,
)
from qwhit.partitions import conj, partitions_of, tmu
from qwhit.qtring import QTRat, parse_rat, poly, rat
from qwhit.symfunc import omega, s_, star_pair, to_s, zero


def sdict(pairs):
    return {lam: parse_rat(c) for lam, c in pairs.items()}


def expand_s(f):
    return to_s(f)


def test_P31_printed():
    got = expand_s(mac_P((3, 1)))
    want = sdict({
        (3, 1): "1",
        (2, 2): "(q-t)/(1-q*t)",
        (2, 1, 1): "(1+q)*(q-t)*(1-q*t^2)/((1-q*t)*(1-q^2*t^2))",
        (1, 1, 1, 1): "(1+t)*(q-t)*(q^2-t)/((1-q*t)*(1-q^2*t^2))",
    })
    assert got == want


def test_H31_printed():
    got = expand_s(mac_H((3, 1)))
    want = sdict({
        (4,): "t",
        (3, 1): "q^2*t+q*t+1",
        (2, 2): "q^2*t+q",
        (2, 1, 1): "q^3*t+q^2+q",
        (1, 1, 1, 1): "q^3",
    })
    assert got == want


HT_TABLES = {
    (2,): {(2,): "1", (1, 1): "q"},
    (1, 1): {(2,): "1", (1, 1): "t"},
    (3,): {(3,): "1", (2, 1): "q^2+q", (1, 1, 1): "q^3"},
    (2, 1): {(3,): "1", (2, 1): "q+t", (1, 1, 1): "q*t"},
    (1, 1, 1): {(3,): "1", (2, 1): "t^2+t", (1, 1, 1): "t^3"},
    (4,): {(4,): "1", (3, 1): "q^3+q^2+q", (2, 2): "q^4+q^2",
           (2, 1, 1): "q^5+q^4+q^3", (1, 1, 1, 1): "q^6"},
    (3, 1): {(4,): "1", (3, 1): "q^2+q+t", (2, 2): "q^2+q*t",
             (2, 1, 1): "q^3+q^2*t+q*t", (1, 1, 1, 1): "q^3*t"},
    (2, 2): {(4,): "1", (3, 1): "q*t+q+t", (2, 2): "q^2+t^2",
             (2, 1, 1): "q^2*t+q*t^2+q*t", (1, 1, 1, 1): "q^2*t^2"},
    (2, 1, 1): {(4,): "1", (3, 1): "t^2+q+t", (2, 2): "q*t+t^2",
                (2, 1, 1): "q*t^2+t^3+q*t", (1, 1, 1, 1): "q*t^3"},
    (1, 1, 1, 1): {(4,): "1", (3, 1): "t^3+t^2+t", (2, 2): "t^4+t^2",
                   (2, 1, 1): "t^5+t^4+t^3", (1, 1, 1, 1): "t^6"},
}


def test_htilde_tables():
    for mu, table in HT_TABLES.items():
        assert expand_s(htilde(mu)) == sdict(table), mu


def test_htilde_triangularity_route_matches():
    for n in range(1, 5):
        for mu in partitions_of(n):
            assert htilde_tri(mu) == htilde_gs(mu), mu


def test_htilde_interp_route_matches():
    from qwhit.macdonald import htilde_interp
    for n in range(1, 6):
        for mu in partitions_of(n):
            assert htilde_interp(mu) == htilde_gs(mu), mu


def test_htilde_degree7_checks():
    # production above degree 6 is the interpolated solve; pin it against
    # the independent charge route at t = 0 and the corner monomial
    for mu in partitions_of(7):
        f = htilde(mu)
        assert f.map_coeffs(lambda c: c.sub_t0()) == hl_H(mu), mu
        d = expand_s(f)
        assert d[(7,)] == 1 and d[(1,) * 7] == QTRat.of(tmu(mu)), mu


def test_one_row_hook_coefficients():
    # hook Schur coefficients of the one-row shape are shifted q-binomials:
    # coefficient of s_(n-b, 1^b) is q^C(b+1,2) * qbinom(n-1, b)
    from qwhit.qtring import QTPoly, qbinom
    for n in range(1, 7):
        row = expand_s(htilde((n,)))
        for b in range(n):
            hook = (n - b,) + (1,) * b
            want = QTRat.of(QTPoly.mono(1, b * (b + 1) // 2, 0)) \
                * qbinom(n - 1, b)
            assert row[hook] == want, (n, b)
        assert len(row) == n


def test_htilde_leading_terms():
    # monic on s_(n); s_(1^n) coefficient is the full corner monomial
    for n in range(1, 6):
        for mu in partitions_of(n):
            d = expand_s(htilde(mu))
            assert d[(n,)] == 1
            assert d[(1,) * n] == QTRat.of(tmu(mu))


def test_qt_kostka_matrix_H_rows():
    # degree-4 coefficient matrix of the unnormalized forms, rows lam
    rows = {
        (4,): ["1", "q^3+q^2+q", "q^4+q^2", "q^5+q^4+q^3", "q^6"],
        (3, 1): ["t", "q^2*t+q*t+1", "q^2*t+q", "q^3*t+q^2+q", "q^3"],
        (2, 2): ["t^2", "q*t^2+q*t+t", "q^2*t^2+1", "q^2*t+q*t+q", "q^2"],
        (2, 1, 1): ["t^3", "q*t^3+t^2+t", "q*t^2+t", "q*t^2+q*t+1", "q"],
        (1, 1, 1, 1): ["t^6", "t^5+t^4+t^3", "t^4+t^2", "t^3+t^2+t", "1"],
    }
    cols = partitions_of(4)
    for lam, vals in rows.items():
        d = expand_s(mac_H(lam))
        for mu, v in zip(cols, vals):
            assert d.get(mu, QTRat.of(0)) == parse_rat(v), (lam, mu)


def test_star_orthogonality():
    for n in range(1, 5):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                got = star_pair(htilde(lam), htilde(mu))
                want = QTRat.of(wmu(mu)) if lam == mu else QTRat.of(0)
                assert got == want, (lam, mu)


def test_htilde_expand_roundtrip():
    f = s_((3, 1)) + s_((2, 2))
    d = htilde_expand(f)
    back = zero()
    for mu, c in d.items():
        back = back + htilde(mu) * c
    assert back == f


def test_flip_symmetries_small():
    for n in range(1, 5):
        for mu in partitions_of(n):
            H = htilde(mu)
            # swapping the two parameters matches the conjugate shape
            assert H.map_coeffs(lambda c: c.flip_qt()) == htilde(conj(mu))
            # inverting both parameters recovers H up to the corner monomial
            Hinv = omega(H.map_coeffs(lambda c: c.sub_q_inv().sub_t_inv()))
            assert H == Hinv.map_coeffs(lambda c: c * QTRat.of(tmu(mu))), mu


def test_charge_basic():
    assert charge((1,)) == 0
    assert charge((2, 1)) == 0  # column word
    assert charge((1, 2)) == 1  # row word
    assert charge((3, 1, 2)) == 2
    assert charge((2, 1, 3)) == 1
    assert charge((1, 2, 3)) == 3
    # repeated letters split into standard subwords
    assert charge((2, 1, 1, 2)) == 1


def test_kostka_q_known_values():
    assert kostka_q((2, 1), (1, 1, 1)) == poly("q+q^2")
    assert kostka_q((2, 2), (2, 1, 1)) == poly("q")
    assert kostka_q((3, 1), (2, 1, 1)) == poly("q+q^2")
    assert kostka_q((4,), (3, 1)) == poly("q")
    assert kostka_q((3,), (3,)) == poly("1")
    assert kostka_q((1, 1, 1), (1, 1, 1)) == poly("1")
    assert kostka_q((3,), (1, 1, 1)) == poly("q^3")
    assert kostka_q((2, 2), (1, 1, 1, 1)) == poly("q^2+q^4")
    assert kostka_q((2, 1), (2, 1)) == poly("1")
    assert kostka_count((3, 1), (2, 1, 1)) == 2
    assert kostka_count((2, 2), (1, 1, 1, 1)) == 2


def test_qprime_printed():
    got = expand_s(qprime((2, 1, 1)))
    want = sdict({(2, 1, 1): "1", (2, 2): "q", (3, 1): "q^2+q", (4,): "q^3"})
    assert got == want


def test_usual_kostka_matrix_printed():
    rows = {
        (4,): ["1", "q^3+q^2+q", "q^4+q^2", "q^5+q^4+q^3", "q^6"],
        (3, 1): ["1", "q^2+q", "q^2", "q^3", "0"],
        (2, 2): ["1", "q", "q^2", "0", "0"],
        (2, 1, 1): ["1", "q", "0", "0", "0"],
        (1, 1, 1, 1): ["1", "0", "0", "0", "0"],
    }
    cols = partitions_of(4)
    for mu, vals in rows.items():
        d = expand_s(hl_H(mu))
        for lam, v in zip(cols, vals):
            assert d.get(lam, QTRat.of(0)) == parse_rat(v), (mu, lam)


def test_hl_H_is_t0_shadow():
    for n in range(1, 6):
        for mu in partitions_of(n):
            direct = htilde(mu).map_coeffs(lambda c: c.sub_t0())
            assert direct == hl_H(mu), mu


def test_ssyt_words_shape_content():
    ws = ssyt_words((2, 1), (1, 1, 1))
    assert sorted(ws) == [(2, 1, 3), (3, 1, 2)]
    assert len(ssyt_words((3, 1), (2, 1, 1))) == 2
    assert ssyt_words((1, 1), (2,)) == []


def test_cache_roundtrip(tmp_path, monkeypatch):
    from qwhit import macdonald as M
    monkeypatch.setenv("QWHIT_CACHE", str(tmp_path))
    data = {"3,1": M._sym_to_strs(htilde((3, 1)))}
    M._cache_store("selftest", data)
    loaded = M._cache_load("selftest")
    assert loaded == data
    back = M._sym_from_strs(loaded["3,1"])
    assert back == htilde((3, 1))
