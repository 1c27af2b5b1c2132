"""Command-line front end.

Subcommands: kostka, table, straighten, rewrite, swap, shift, check, eval.
Text output is deterministic; --json switches to a stable JSON schema
(sorted keys).  Exit codes: 0 success, 1 suite failure or engine
disagreement, 2 argument or parse error.

Setting HLVERTEX_CACHE_DIR persists computed tables to disk, keyed by the
request; this is purely an acceleration.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys

from .coeffs import QPoly, QRat
from .kostka import (
    blocked_weights,
    check_col_skew,
    compositions,
    kostka,
    kostka_kostant,
    kostka_table,
    kostka_vertex,
)
from .rewrite import (
    OpSum,
    evaluate_word,
    normalize,
    operators_equal,
    parse_word,
    relation_instance,
    rewrite_dominant,
    shift_support,
    swap_factors,
)
from .symfunc import (
    POWERSUM,
    X_OVER_QM1,
    X_TIMES_QM1,
    convert,
    dual_basis_pair_check,
    elementary,
    elementary_perp,
    multiply,
    one as sf_one,
    plethysm_substitute,
    scalar_product,
    schur,
    skew,
    specialize_q,
)
from .vertexop import apply_B, apply_F, apply_H, apply_H_any, apply_H_word
from .weights import (
    alpha_beta,
    dominant_weights,
    format_blocked,
    format_weight,
    is_dominant,
    is_vertical_strip,
    pad_zeros,
    parse_blocked,
    parse_weight,
    partitions_of,
    straighten,
    trim_zeros,
    vertical_strip_grow,
    vertical_strip_shrink,
)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _table_cache_path(eta, max_degree, method):
    root = os.environ.get("HLVERTEX_CACHE_DIR")
    if not root:
        return None
    key = f"table:eta={','.join(map(str, eta))}:d={max_degree}:m={method}:v1"
    name = hashlib.sha256(key.encode()).hexdigest()[:24] + ".json"
    return os.path.join(root, name), key


def cmd_kostka(args) -> int:
    lam = parse_weight(args.lam)
    gamma = parse_blocked(args.gamma)
    eta = parse_weight(args.eta) if args.eta else tuple(len(b) for b in gamma)
    if tuple(len(b) for b in gamma) != eta:
        raise ValueError(f"eta {eta} does not match gamma block sizes")
    value = kostka(lam, gamma, method=args.method)
    _emit(args, str(value), {
        "lambda": list(lam), "gamma": [list(b) for b in gamma],
        "eta": list(eta), "K": value.to_json(),
    })
    return 0


def cmd_table(args) -> int:
    eta = parse_weight(args.eta)
    cached = _table_cache_path(eta, args.max_degree, args.method)
    rows = None
    if cached:
        path, key = cached
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                stored = json.load(fh)
            if stored.get("key") == key:
                rows = [{"lambda": tuple(r["lambda"]),
                         "gamma": tuple(tuple(b) for b in r["gamma"]),
                         "eta": eta,
                         "K": QPoly.from_json(r["K"])} for r in stored["rows"]]
    if rows is None:
        rows = kostka_table(eta, args.max_degree, method=args.method)
        if cached:
            path, key = cached
            os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                json.dump({"key": key,
                           "rows": [{"lambda": list(r["lambda"]),
                                     "gamma": [list(b) for b in r["gamma"]],
                                     "K": r["K"].to_json()} for r in rows]}, fh)
    header = ("lambda", "gamma", "K")
    body = [(format_weight(r["lambda"]), format_blocked(r["gamma"]), str(r["K"]))
            for r in rows]
    widths = [max([len(h)] + [len(row[i]) for row in body]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header))]
    lines += ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row))
              for row in body]
    _emit(args, "\n".join(lines), {
        "eta": list(eta), "max_degree": args.max_degree,
        "rows": [{"lambda": list(r["lambda"]),
                  "gamma": [list(b) for b in r["gamma"]],
                  "eta": list(eta),
                  "K": r["K"].to_json()} for r in rows],
    })
    return 0


def cmd_straighten(args) -> int:
    sign, nu = straighten(parse_weight(args.weight))
    if sign == 0:
        _emit(args, "0", {"sign": 0})
    else:
        text = ("-" if sign < 0 else "+") + "H[" + format_weight(nu) + "]"
        _emit(args, text, {"sign": sign, "weight": list(nu)})
    return 0


def _opsum_payload(s: OpSum) -> dict:
    return s.to_json()


def cmd_rewrite(args) -> int:
    word = parse_word(args.word)
    if len(word) != 2:
        raise ValueError("rewrite operates on two-factor words")
    total = OpSum()
    for w, c in normalize({word: QRat.one()}).terms():
        total = total + rewrite_dominant(w).scale(c)
    _emit(args, str(total), _opsum_payload(total))
    return 0


def cmd_swap(args) -> int:
    word = parse_word(args.word)
    if len(word) != 2:
        raise ValueError("swap operates on two-factor words")
    total = OpSum()
    for w, c in normalize({word: QRat.one()}).terms():
        total = total + swap_factors(w).scale(c)
    _emit(args, str(total), _opsum_payload(total))
    return 0


def cmd_shift(args) -> int:
    word = parse_word(args.word)
    if len(word) != 2:
        raise ValueError("shift operates on two-factor words")
    direction = args.direction
    if direction == "auto":
        direction = "left" if len(word[0]) > len(word[1]) else "right"
    total = OpSum()
    for w, c in normalize({word: QRat.one()}).terms():
        total = total + shift_support(w, direction).scale(c)
    _emit(args, str(total), _opsum_payload(total))
    return 0


def cmd_eval(args) -> int:
    word = parse_word(args.word)
    tau = parse_weight(args.on_schur) if args.on_schur else ()
    f = schur(trim_zeros(tau)) if tau else sf_one()
    out = evaluate_word(word, f)
    _emit(args, str(out), out.to_json())
    return 0


# -- invariant suites -------------------------------------------------------


def _suite_identities(max_degree: int):
    cases = []
    q = QRat.q()
    for a in (0, 1):
        for k in (1, 2):
            for n in (1, 2):
                cases.append(("same-width",
                              OpSum({((a,) * n, (a,) * k): 1}),
                              OpSum({((a,) * k, (a,) * n): 1})))
    for a in (0, 1):
        for k in (1, 2):
            cases.append(("one-more",
                          OpSum({((a,) * k, (a + 1,) * k): 1}),
                          OpSum({((a + 1,) * k, (a,) * k): q**k})))
    for a in (1, 2):
        for k in (1, 2):
            cases.append(("quad",
                          OpSum({((a,) * k, (a,) * k): 1}),
                          OpSum({((a,) * (k + 1), (a,) * (k - 1)): 1})
                          + OpSum({((a + 1,) * k, (a - 1,) * k): q**k})))
    relations = [
        ("com1", dict(mu=(2,), a=2, b=4, nu=(1,))),
        ("com1", dict(mu=(), a=1, b=3, nu=(2,))),
        ("com2", dict(mu=(2,), a=3, nu=(1,))),
        ("com2", dict(mu=(1, 1), a=0, nu=(2,))),
        ("move", dict(mu=(5,), a=3, nu=(2,))),
        ("move", dict(mu=(2, 1), a=1, nu=(1,))),
        ("bigmove", dict(alpha=(2,), beta=(1,), gamma=(1,))),
        ("bigmove", dict(alpha=(2, 1), beta=(1,), gamma=(1, 0))),
    ]
    for kind, params in relations:
        cases.append((kind, relation_instance(kind, **params), OpSum()))
    failures = []
    for name, lhs, rhs in cases:
        if not operators_equal(lhs, rhs, max_degree):
            failures.append(name)
    return len(cases) - len(failures), len(cases), failures


def _suite_colskew(max_degree: int):
    rng = random.Random(17)
    total, failures = 0, []
    etas = [eta for n in range(2, 5) for eta in compositions(n)]
    attempts = 0
    while total < 20 and attempts < 400:
        attempts += 1
        eta = rng.choice(etas)
        n = sum(eta)
        d = rng.randint(1, min(max_degree, 5))
        gammas = list(blocked_weights(eta, d, max_part=3))
        if not gammas:
            continue
        gamma = rng.choice(gammas)
        k = rng.randint(0, d)
        alphas = [pad_zeros(p, n) for p in partitions_of(d - k, max_len=n)]
        if not alphas:
            continue
        alpha = rng.choice(alphas)
        total += 1
        if not check_col_skew(alpha, gamma, k):
            failures.append(f"colskew eta={eta} alpha={alpha} gamma={gamma} k={k}")
    return total - len(failures), total, failures


def _suite_jing(max_degree: int):
    total, failures = 0, []
    for n in (1, 2, 3):
        for eta in compositions(n):
            for d in range(0, min(max_degree, 4) + 1):
                for gamma in blocked_weights(eta, d, max_part=2):
                    total += 1
                    f = sf_one()
                    for block in reversed(gamma):
                        f = apply_B(block, f)
                    if apply_F(f, inverse=True) != apply_H_word(gamma, sf_one()):
                        failures.append(f"jing gamma={gamma}")
    return total - len(failures), total, failures


def _suite_engines(max_degree: int):
    total, failures = 0, []
    for n in (1, 2, 3):
        for eta in compositions(n):
            for d in range(0, min(max_degree, 4) + 1):
                lams = [pad_zeros(p, n) for p in partitions_of(d, max_len=n, max_part=3)]
                for gamma in blocked_weights(eta, d, max_part=3):
                    for lam in lams:
                        total += 1
                        if kostka(lam, gamma, method="kostant") != kostka(
                                lam, gamma, method="vertex"):
                            failures.append(f"engines lam={lam} gamma={gamma}")
    return total - len(failures), total, failures


def _suite_core(max_degree: int):
    """Condensed run of the per-module invariants not covered by the
    other suites."""
    checks = []
    rng = random.Random(31)

    # weight combinatorics
    doms = list(dominant_weights(3, -2, 2))
    checks.append(("straighten idempotent",
                   all(straighten(nu) == (1, nu) for nu in doms)))
    ok = True
    for nu in doms[:30]:
        for beta in vertical_strip_shrink(nu):
            ok = ok and is_dominant(beta) and is_vertical_strip(nu, beta)
        for alpha in vertical_strip_grow(nu):
            ok = ok and is_dominant(alpha) and is_vertical_strip(alpha, nu)
    checks.append(("vertical strips", ok))
    checks.append(("alpha-beta split",
                   all(alpha_beta(g)[0] == g and not any(alpha_beta(g)[1])
                       for g in dominant_weights(3, 0, 2))))

    # coefficient canonicality and the power-substitution homomorphism
    ok = True
    for _ in range(25):
        num = QPoly({rng.randint(-2, 3): rng.randint(-4, 4) for _ in range(3)})
        den = QPoly({rng.randint(0, 2): rng.randint(-4, 4) for _ in range(2)})
        if den.is_zero():
            continue
        a = QRat(num, den)
        b = QRat(QPoly({rng.randint(0, 2): rng.randint(-3, 3), 0: 1}))
        k = rng.randint(1, 3)
        ok = ok and (a - a).is_zero() and ((a * b) / b == a if not b.is_zero() else True)
        ok = ok and (a + b).subs_qpower(k) == a.subs_qpower(k) + b.subs_qpower(k)
        ok = ok and (a * b).subs_qpower(k) == a.subs_qpower(k) * b.subs_qpower(k)
    checks.append(("coefficient canonicality", ok))

    # symmetric function layer
    parts = [p for d in range(min(max_degree, 4) + 1) for p in partitions_of(d)]
    checks.append(("conversion round trip",
                   all(convert(convert(schur(p), POWERSUM), "schur") == schur(p)
                       for p in parts)))
    checks.append(("schur orthonormality",
                   all(scalar_product(schur(a), schur(b)) ==
                       (QRat.one() if a == b else QRat.zero())
                       for a in parts for b in parts)))
    ok = True
    for _ in range(15):
        mu, kappa, lam = rng.choice(parts), rng.choice(parts), rng.choice(parts)
        lhs = scalar_product(skew(schur(mu), schur(lam)), schur(kappa))
        rhs = scalar_product(schur(lam), multiply(schur(mu), schur(kappa)))
        ok = ok and lhs == rhs
    checks.append(("skew adjunction", ok))
    checks.append(("elementary perp matches skew",
                   all(elementary_perp(k, schur(p)) == skew(elementary(k), schur(p))
                       for p in parts for k in range(3))))
    checks.append(("plethystic twist round trip",
                   all(plethysm_substitute(plethysm_substitute(schur(p), X_TIMES_QM1),
                                           X_OVER_QM1) == schur(p) for p in parts)))
    checks.append(("dual bases", dual_basis_pair_check(X_TIMES_QM1, min(max_degree, 3))))

    # vertex operator layer
    checks.append(("partition blocks on 1",
                   all(apply_H(pad_zeros(p, 2), sf_one()) == schur(p)
                       for p in partitions_of(3, max_len=2))))
    checks.append(("negative tail kills 1", apply_H((1, -1), sf_one()).is_zero()))
    ok = True
    for v in [(1, 3), (0, 2, 1)]:
        for i in range(len(v) - 1):
            w = list(v)
            w[i], w[i + 1] = v[i + 1] - 1, v[i] + 1
            ok = ok and apply_H_any(v, schur((1,))) == -apply_H_any(tuple(w), schur((1,)))
    checks.append(("shifted skew symmetry", ok))
    ok = True
    for gamma in dominant_weights(2, -2, 2):
        al, be = alpha_beta(gamma)
        vec = plethysm_substitute(schur(trim_zeros(be)), X_OVER_QM1)
        ok = ok and apply_H(gamma, vec) == schur(trim_zeros(al))
    checks.append(("independence vectors", ok))
    ok = True
    for lam, tau in [((1,), (2,)), ((2, 1), (1, 1))]:
        at0 = specialize_q(apply_H(lam, schur(tau)), 0)
        at1 = specialize_q(apply_H(lam, schur(tau)), 1)
        ok = ok and at1 == specialize_q(multiply(schur(lam), schur(tau)), 1)
        word = tuple((x,) for x in lam)
        ok = ok and at0 == specialize_q(apply_H_any(lam, schur(tau)), 0)
        ok = ok and specialize_q(apply_H_word(word, schur(tau)), 0) == at0
    checks.append(("q specializations", ok))

    # Kostka layer: shift invariance on a few keys
    ok = True
    for lam, gamma in [((2, 0), ((1,), (1,))), ((1, 1), ((1, 1),))]:
        base = kostka_kostant(lam, gamma)
        for a in (-1, 1, 2):
            lam_s = tuple(x + a for x in lam)
            gamma_s = tuple(tuple(x + a for x in b) for b in gamma)
            ok = ok and kostka_kostant(lam_s, gamma_s) == base
            ok = ok and kostka_vertex(lam_s, gamma_s) == base
    checks.append(("kostka shift invariance", ok))

    failures = [name for name, passed in checks if not passed]
    return len(checks) - len(failures), len(checks), failures


_SUITES = {
    "identities": _suite_identities,
    "colskew": _suite_colskew,
    "jing": _suite_jing,
    "engines": _suite_engines,
    "core": _suite_core,
}


def cmd_check(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    report = {}
    ok = True
    lines = []
    for name in names:
        passed, total, failures = _SUITES[name](args.max_degree)
        report[name] = {"passed": passed, "total": total, "failures": failures}
        ok = ok and not failures
        lines.append(f"suite {name}: {passed}/{total} passed")
        lines.extend(f"  FAIL {f}" for f in failures)
    _emit(args, "\n".join(lines), {"suites": report, "ok": ok})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hlvertex",
        description="Exact Hall-Littlewood vertex operators, generalized "
                    "Kostka polynomials, and operator-word rewriting.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kostka", help="one Kostka polynomial")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="dominant weight, e.g. 2,0")
    p.add_argument("--gamma", required=True,
                   help="blocked weight, e.g. \"1;1\" or \"2,2;4,1\"")
    p.add_argument("--eta", default=None, help="shape; defaults to block sizes")
    p.add_argument("--method", choices=("kostant", "vertex", "both"), default="both")
    p.set_defaults(fn=cmd_kostka)

    p = sub.add_parser("table", help="table of Kostka polynomials")
    p.add_argument("--eta", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--method", choices=("kostant", "vertex", "both"), default="both")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("straighten", help="straighten a weight")
    p.add_argument("--weight", required=True)
    p.set_defaults(fn=cmd_straighten)

    p = sub.add_parser("rewrite", help="dominance-normalize a two-factor word")
    p.add_argument("--word", required=True, help="e.g. \"H[2,2]H[4,1]\"")
    p.set_defaults(fn=cmd_rewrite)

    p = sub.add_parser("swap", help="swap the factor lengths of a word")
    p.add_argument("--word", required=True)
    p.set_defaults(fn=cmd_swap)

    p = sub.add_parser("shift", help="move one slot between the factors")
    p.add_argument("--word", required=True)
    p.add_argument("--direction", choices=("left", "right", "auto"), default="auto")
    p.set_defaults(fn=cmd_shift)

    p = sub.add_parser("eval", help="apply a word to a Schur function")
    p.add_argument("--word", required=True)
    p.add_argument("--on-schur", default="", help="partition; empty means 1")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("check", help="run invariant suites")
    p.add_argument("--suite", choices=tuple(_SUITES) + ("all",), default="all")
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(fn=cmd_check)

    for p in sub.choices.values():
        p.add_argument("--json", action="store_true", help="JSON output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
