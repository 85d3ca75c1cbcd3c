"""Batch front end: expansions, verification suites, table reproduction.

Exit codes: 0 clean, 1 a verification check failed, 2 usage error.
Default output is human-readable text; --json switches to the term-list
schema {"basis": ..., "n": ..., "terms": [{"mu": [...], "c": "..."}]}
with exact string coefficients.
"""

import argparse
import json
import sys
from math import factorial

from .cbasis import c_pieces, corner_removals, reconstruct_htilde
from .eigenops import (
    V_n, delta0_W_second, delta0_W_top, delta0_W_two_rows, delta_bar,
    delta_zero, elliptic_Q, forest_count, formula_Qmn_specialized, nabla,
    positivity, qmn_alpha, qt_delta_two_rows, v_n_from_paths,
)
from .ghmodules import (
    bigraded_frobenius, derivative_closure, module_dim, punctured_char,
)
from .macdonald import (
    hl_H, htilde, htilde_gs, htilde_tri, kostka_q, mac_H, mac_P, qprime,
)
from .partitions import cells, conj, mk, partitions_of
from .pieri import (
    c_coeff, d_op, down_up_commutator, h_perp_w, slide_c_coeff,
)
from .qtring import (
    INF, P_ONE, QTPoly, QTRat, R_ONE, R_ZERO, qbinom, qint,
)
from .symfunc import (
    Sym2, e_, h_, hall, kernel_h, perp, s_, sym_str, tensor, to_s,
)
from .whittaker import from_w, w_, w_expand, w_hat, what_expand

# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _mu_arg(s):
    try:
        return mk(int(x) for x in s.split(","))
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError("bad partition %r" % s)


def _term(cs, label):
    if cs == "1":
        return label
    if cs == "-1":
        return "-" + label
    if any(op in cs[1:] for op in "+-") or "/" in cs:
        cs = "(" + cs + ")"
    return cs + "*" + label


def _dict_str(d, letter):
    if not d:
        return "0"
    keys = sorted(d, key=lambda k: (sum(k), k), reverse=True)
    parts = [_term(str(d[k]), "%s[%s]" % (letter, ",".join(map(str, k))))
             for k in keys]
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _expand_dict(f, basis):
    if basis == "W":
        return w_expand(f), "W"
    if basis == "What":
        return what_expand(f), "What"
    if basis == "s":
        return to_s(f), "s"
    if basis == "p":
        return f.p, "p"
    raise ValueError(basis)


def _render(d, letter, as_json):
    if as_json:
        keys = sorted(d, key=lambda k: (sum(k), k), reverse=True)
        n = sum(keys[0]) if keys else 0
        return json.dumps({"basis": letter, "n": n,
                           "terms": [{"mu": list(k), "c": str(d[k])}
                                     for k in keys]})
    return _dict_str(d, letter)


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------

def cmd_expand(args):
    basis = args.basis
    if args.obj in ("W", "What", "Htilde", "H", "P", "Qprime", "HL",
                    "nabla-W", "delta0-W"):
        if args.mu is None:
            print("expand %s needs --mu" % args.obj, file=sys.stderr)
            return 2
        mu = args.mu
        if args.obj == "W":
            f = w_(mu)
        elif args.obj == "What":
            f = w_hat(mu)
        elif args.obj == "Htilde":
            f = htilde(mu)
        elif args.obj == "H":
            f = mac_H(mu)
        elif args.obj == "P":
            f = mac_P(mu)
        elif args.obj == "Qprime":
            f = qprime(mu)
        elif args.obj == "HL":
            f = hl_H(mu)
        elif args.obj == "nabla-W":
            f = nabla(w_(mu))
            basis = basis or "W"
        else:  # delta0-W
            f = delta_zero(e_((args.k,)) if args.k else s_(()), w_(mu))
            basis = basis or "W"
        basis = basis or "s"
    elif args.obj == "Qmn":
        if args.m is None or args.n is None:
            print("expand Qmn needs --m and --n", file=sys.stderr)
            return 2
        if args.generic:
            f = elliptic_Q(args.m, args.n)
        else:
            d = formula_Qmn_specialized(args.m, args.n)
            print(_render(d, "W", args.json))
            return 0
    elif args.obj == "C":
        if args.n is None or args.j is None:
            print("expand C needs --n and --j", file=sys.stderr)
            return 2
        pieces = c_pieces(args.n)
        if not 0 <= args.j < len(pieces):
            print("no piece j=%d at n=%d" % (args.j, args.n),
                  file=sys.stderr)
            return 2
        print(_render(to_s(pieces[args.j]), "s", args.json))
        return 0
    else:
        print("unknown object %r" % args.obj, file=sys.stderr)
        return 2
    d, letter = _expand_dict(f, basis)
    print(_render(d, letter, args.json))
    return 0


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

SUITES = {}


def suite(name, default_n, cap):
    def deco(fn):
        SUITES[name] = (fn, default_n, cap)
        return fn
    return deco


def _diff(want, got):
    return "expected %s, computed %s" % (want, got)


@suite("cauchy", 4, 5)
def suite_cauchy(n):
    for d in range(1, n + 1):
        lhs = kernel_h(d, lambda k: QTRat(P_ONE, QTPoly(
            {(0, 0): 1, (k, 0): -1})))
        rhs = Sym2()
        for mu in partitions_of(d):
            rhs = rhs + tensor(w_(mu), w_hat(mu))
        yield "kernel-degree-%d" % d, lhs == rhs, None


@suite("duality", 5, 6)
def suite_duality(n):
    from .symfunc import q_pair
    for d in range(1, n + 1):
        parts = partitions_of(d)
        bad = [(lam, mu) for lam in parts for mu in parts
               if q_pair(w_(lam), w_hat(mu))
               != QTRat.of(1 if lam == mu else 0)]
        yield ("pairing-degree-%d" % d, not bad,
               bad and "first counterexample %s" % (bad[0],) or None)


@suite("pieri", 5, 7)
def suite_pieri(n):
    bad = []
    for lam in partitions_of(n):
        for m in range(n + 1):
            for mu in partitions_of(m):
                if c_coeff(mu, lam) != QTRat.of(slide_c_coeff(mu, lam)):
                    bad.append((mu, lam))
    yield ("closed-vs-slide-n%d" % n, not bad,
           bad and "first counterexample %s" % (bad[0],) or None)
    bad = []
    for lam in partitions_of(min(n, 6)):
        W = w_(lam)
        for k in range(sum(lam) + 1):
            if from_w(h_perp_w(k, lam)) != perp(h_((k,)), W):
                bad.append((lam, k))
    yield ("h-perp-rule-n%d" % min(n, 6), not bad,
           bad and "first counterexample %s" % (bad[0],) or None)


@suite("downup", 5, 6)
def suite_downup(n):
    half = qint(INF)
    for d in range(n + 1):
        bad = [lam for lam in partitions_of(d)
               if down_up_commutator(lam) != {lam: half}]
        yield ("commutator-degree-%d" % d, not bad,
               bad and "fails at %s" % (bad[0],) or None)


@suite("mac-tables", 4, 5)
def suite_mac_tables(n):
    cap_tri = min(n, 4)
    for mu in partitions_of(cap_tri):
        gs, tri = htilde_gs(mu), htilde_tri(mu)
        yield ("routes-%s" % (mu,), gs == tri,
               None if gs == tri else _diff(sym_str(gs), sym_str(tri)))
    bad = []
    for d in range(1, n + 1):
        for mu in partitions_of(d):
            H = htilde(mu)
            if H.map_coeffs(lambda c: c.flip_qt()) != htilde(conj(mu)):
                bad.append(mu)
    yield ("flip-symmetry-n%d" % n, not bad, bad and str(bad[0]) or None)
    bad = []
    for d in range(1, n + 1):
        row = to_s(htilde(mk((d,))))
        for b in range(d):
            want = QTRat.of(QTPoly.mono(1, b * (b + 1) // 2, 0)) \
                * qbinom(d - 1, b)
            got = row.get(mk((d - b,) + (1,) * b), R_ZERO)
            if got != want:
                bad.append((d, b))
    yield ("hook-binomials-n%d" % n, not bad, bad and str(bad[0]) or None)


@suite("kostka", 4, 5)
def suite_kostka(n):
    for d in range(1, n + 1):
        bad = []
        for mu in partitions_of(d):
            row = to_s(hl_H(mu))
            for lam in partitions_of(d):
                want = QTRat.of(kostka_q(conj(lam), conj(mu)))
                if row.get(lam, R_ZERO) != want:
                    bad.append((lam, mu))
        yield ("charge-vs-t0-degree-%d" % d, not bad,
               bad and str(bad[0]) or None)


@suite("qmn-tables", 5, 6)
def suite_qmn(n):
    from .eigenops import _specialize
    for m in range(1, 8):
        f = elliptic_Q(m, n)
        spec = _specialize(f, lambda c: c.sub_t_qinv(), "t=1/q")
        a = qmn_alpha(m, n)
        direct = {mu: c * QTRat.of(QTPoly.mono(1, a, 0))
                  for mu, c in w_expand(spec).items() if not c.is_zero()}
        form = formula_Qmn_specialized(m, n)
        yield ("formula-vs-direct-m%d" % m, direct == form,
               None if direct == form else _diff(form, direct))


@suite("delta-zero", 5, 6)
def suite_delta_zero(n):
    def d0w(mu, k):
        if k == 0:
            return {mk(mu): R_ONE}
        return w_expand(delta_zero(e_((k,)), w_(mu)))
    bad = []
    for mu in partitions_of(n):
        if n >= 1 and d0w(mu, n - 1) != delta0_W_top(mu):
            bad.append((mu, "top"))
        if n >= 2 and d0w(mu, n - 2) != delta0_W_second(mu):
            bad.append((mu, "second"))
    yield "closed-forms-top-n%d" % n, not bad, bad and str(bad[0]) or None
    bad = []
    for b in range(n // 2 + 1):
        a = n - b
        for k in range(n):
            if d0w(mk((a, b)), k) != delta0_W_two_rows(a, b, k):
                bad.append((a, b, k))
    yield "two-rows-n%d" % n, not bad, bad and str(bad[0]) or None
    if n >= 6:
        got = w_expand(delta_zero(e_((1,)), w_((2, 2, 2))))
        c33 = got.get((3, 3), R_ZERO)
        want = QTRat.of(QTPoly.mono(1, 2, 0) - P_ONE)
        yield ("nonpositive-case-222", c33 == want,
               None if c33 == want else _diff(want, c33))


@suite("delta-bar", 4, 5)
def suite_delta_bar(n):
    from .symfunc import Alphabet, pleth
    from .eigenops import eval_finite
    for k in range(1, 5):
        bad = []
        for mu in partitions_of(k):
            f = s_(mu)
            lhs = delta_bar(f, e_(n)) * QTPoly.mono(1, k * (n - 1), 0)
            fn = eval_finite(f, qint(n).as_poly())
            rhs = pleth(e_(n), Alphabet.times_z(qint(k + 1))) \
                * (fn / qint(k + 1))
            if lhs != rhs:
                bad.append(mu)
        yield ("identity-k%d-n%d" % (k, n), not bad,
               bad and str(bad[0]) or None)


@suite("qt-two-rows", 5, 6)
def suite_qt_two_rows(n):
    from .eigenops import delta_prime
    bad = []
    for b in range(n // 2 + 1):
        a = n - b
        for k in range(1, min(3, n) + 1):
            got = delta_prime(e_((k,)), w_(mk((a, b))))
            if got != qt_delta_two_rows(a, b, k):
                bad.append((a, b, k))
    yield ("delta-prime-two-rows-n%d" % n, not bad,
           bad and str(bad[0]) or None)


@suite("vn", 4, 6)
def suite_vn(n):
    if n <= 5:
        ok = V_n(n) == v_n_from_paths(n)
        yield "path-sum-n%d" % n, ok, None
    dim = hall(V_n(n).map_coeffs(lambda c: c.sub_q1().sub_t1()),
               h_((1,) * n))
    want = QTRat.of(QTPoly.const(forest_count(n)))
    yield ("forest-dimension-n%d" % n, dim == want,
           None if dim == want else _diff(want, dim))


@suite("science-fiction", 5, 6)
def suite_science_fiction(n):
    bad = []
    for lam in partitions_of(n):
        c = corner_removals(lam)
        for nu in c:
            if reconstruct_htilde(nu, c) != htilde(nu):
                bad.append((lam, nu))
    yield ("reconstruction-n%d" % n, not bad,
           bad and str(bad[0]) or None)


@suite("gh-nfact", 3, 4)
def suite_gh_nfact(n):
    for mu in partitions_of(n):
        clo = derivative_closure(cells(mu))
        dim = module_dim(clo)
        yield ("dim-%s" % (mu,), dim == factorial(n),
               None if dim == factorial(n) else _diff(factorial(n), dim))
        f = bigraded_frobenius(clo, n)
        ok = f == htilde(mu)
        yield ("frobenius-%s" % (mu,), ok,
               None if ok else _diff(sym_str(htilde(mu)), sym_str(f)))


@suite("gh-pieri", 4, 5)
def suite_gh_pieri(n):
    for lam in partitions_of(n):
        bad = []
        for c in cells(lam):
            if punctured_char(lam, c) != from_w(d_op(c, lam)):
                bad.append(c)
        yield ("punctured-%s" % (lam,), not bad,
               bad and "cell %s" % (bad[0],) or None)


@suite("w-positivity", 5, 6)
def suite_w_positivity(n):
    from .eigenops import s_over_1mq_expansion
    from .partitions import dominates, is_hook
    bad = []
    for mu in partitions_of(n):
        if len(mu) > 2 and not is_hook(mu):
            continue
        Wmu = from_w({mu: R_ONE})
        for k in range(1, n):
            if not positivity(delta_zero(e_((k,)), Wmu), "W"):
                bad.append((mu, k))
    yield ("delta0-two-part-hooks-n%d" % n, not bad,
           bad and str(bad[0]) or None)
    bad = []
    for mu in partitions_of(n):
        d = s_over_1mq_expansion(mu)
        if d.get(mu) != R_ONE:
            bad.append(mu)
            continue
        for lam, c in d.items():
            p = c.as_poly()
            if not dominates(lam, mu) or p.deg_t() != 0 \
                    or any(v <= 0 for v in p.c.values()):
                bad.append((mu, lam))
    yield ("schur-over-1mq-n%d" % n, not bad, bad and str(bad[0]) or None)


def cmd_verify(args):
    name = args.suite
    fn, default_n, cap = SUITES[name]
    n = args.n if args.n is not None else default_n
    checks = []
    if n > cap:
        checks.append(("n-%d-beyond-cap-%d" % (n, cap), "skipped-slow",
                       None))
    else:
        for label, ok, payload in fn(n):
            checks.append((label, "pass" if ok else "fail",
                           payload if not ok else None))
    failed = sum(1 for _, st, _ in checks if st == "fail")
    if args.json:
        print(json.dumps({"suite": name, "n": n,
                          "checks": [{"name": c, "status": st,
                                      "payload": p}
                                     for c, st, p in checks]}))
    else:
        print("suite %s (n=%d)" % (name, n))
        for label, st, payload in checks:
            line = "  %-6s %s" % (st, label)
            if payload:
                line += "  [%s]" % payload
            print(line)
        print("%d check%s, %d failure%s" % (
            len(checks), "" if len(checks) == 1 else "s",
            failed, "" if failed == 1 else "s"))
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def _grid(rows, cols, entry):
    labels = [",".join(map(str, mu)) for mu in cols]
    table = [[""] + labels]
    for lam in rows:
        table.append([",".join(map(str, lam))]
                     + [entry(lam, mu) for mu in cols])
    widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
        for row in table)


def table_qt_kostka_4():
    parts = partitions_of(4)
    mats = {mu: to_s(htilde(mu)) for mu in parts}
    return _grid(parts, parts,
                 lambda lam, mu: str(mats[mu].get(lam, R_ZERO)))


def table_kostka_4():
    parts = partitions_of(4)
    return _grid(parts, parts, lambda lam, mu: str(kostka_q(lam, mu)))


def table_w_values_5():
    out = []
    for n in range(1, 6):
        out.append("n=%d" % n)
        for mu in partitions_of(n):
            out.append("W[%s] = %s" % (",".join(map(str, mu)),
                                       sym_str(w_(mu))))
    return "\n".join(out)


def table_htilde_4():
    out = []
    for n in range(1, 5):
        out.append("n=%d" % n)
        for mu in partitions_of(n):
            out.append("Ht[%s] = %s" % (",".join(map(str, mu)),
                                        sym_str(htilde(mu))))
    return "\n".join(out)


def _table_qmn(n):
    out = ["n=%d" % n]
    for m in range(1, n + 2):
        out.append("m=%d: %s" % (m, _dict_str(
            formula_Qmn_specialized(m, n), "W")))
    return "\n".join(out)


def table_c6():
    pieces = c_pieces(6)
    return "\n".join("C[%d] = %s" % (j, sym_str(p))
                     for j, p in enumerate(pieces))


TABLES = {
    "qt-kostka-4": table_qt_kostka_4,
    "kostka-4": table_kostka_4,
    "W-values-5": table_w_values_5,
    "Htilde-4": table_htilde_4,
    "qmn-3": lambda: _table_qmn(3),
    "qmn-4": lambda: _table_qmn(4),
    "qmn-5": lambda: _table_qmn(5),
    "qmn-6": lambda: _table_qmn(6),
    "C6": table_c6,
}


def cmd_table(args):
    print(TABLES[args.name]())
    return 0


# ---------------------------------------------------------------------------
# gh
# ---------------------------------------------------------------------------

def cmd_gh(args):
    try:
        d = [tuple(map(int, c)) for c in json.loads(args.diagram)]
    except (ValueError, TypeError):
        print("bad --diagram; want JSON like [[0,0],[1,0]]",
              file=sys.stderr)
        return 2
    if len(d) > 6:
        print("diagram too large (max 6 cells)", file=sys.stderr)
        return 2
    clo = derivative_closure(d)
    if args.report == "hilbert":
        dims = {k: len(v) for k, v in clo.items()}
        if args.json:
            print(json.dumps({"dims": [
                {"qpow": kx, "tpow": ky, "dim": dims[(kx, ky)]}
                for (kx, ky) in sorted(dims)]}))
        else:
            for (kx, ky) in sorted(dims):
                print("(%d,%d): %d" % (kx, ky, dims[(kx, ky)]))
            print("total: %d" % sum(dims.values()))
    else:
        f = bigraded_frobenius(clo, len(d))
        d2, letter = _expand_dict(f, "s")
        print(_render(d2, letter, args.json))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="qwhit",
        description="exact q-Whittaker / Macdonald calculator and checker")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("expand", help="print an object in a basis")
    p.add_argument("obj", choices=["W", "What", "Htilde", "H", "P",
                                   "Qprime", "HL", "Qmn", "C",
                                   "nabla-W", "delta0-W"])
    p.add_argument("--mu", type=_mu_arg)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--basis", default=None,
                   choices=["s", "p", "W", "What"])
    p.add_argument("--generic", action="store_true",
                   help="Qmn: full (q,t) operator image instead of the "
                        "t=1/q table line")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print a fixed reference table")
    p.add_argument("name", choices=sorted(TABLES))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gh", help="derivative module of a cell diagram")
    p.add_argument("--diagram", required=True)
    p.add_argument("--report", choices=["hilbert", "frobenius"],
                   default="hilbert")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gh)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
