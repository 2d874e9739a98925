"""Command-line front end: ``suq2 VERB ...``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

from .algebra import AlgebraElement, TensorElement, alg_mul, element_to_json, render_element, render_monomial
from .parser import ParseError, parse_element, parse_expr  # noqa: F401  (parse_expr re-exported)
from .scalars import ScalarError, render_scalar

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ------------------------------------------------------------- formatting
def _scalar_json(s) -> dict:
    return {"num": [[e, str(c)] for e, c in s.num], "den": [[e, str(c)] for e, c in s.den], "text": render_scalar(s)}


def render_tensor(t: TensorElement) -> str:
    if t.is_zero():
        return "0"
    return "\n".join(f"({c}) * {' (x) '.join(render_monomial(i) for i in key)}" for key, c in t.items())


def tensor_to_json(t: TensorElement) -> List[dict]:
    out = []
    for key, c in t.items():
        rec = {"legs": [{"k": k, "n": n, "m": m} for k, n, m in key]}
        rec.update(_scalar_json(c))
        out.append(rec)
    return out


def render_weights(M: Dict[int, int], descending: bool = False) -> str:
    items = sorted(M.items(), reverse=descending)
    return "{" + ",".join(f"{k}:{v}" for k, v in items) + "}"


def parse_weight_map(text: str) -> Dict[int, int]:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise UsageError(f"weight map must look like {{k:m,...}}, got {text!r}")
    out: Dict[int, int] = {}
    inner = body[1:-1].strip()
    if not inner:
        return out
    for part in inner.split(","):
        m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(-?\d+)\s*", part)
        if not m:
            raise UsageError(f"bad weight entry {part!r}")
        k, v = int(m.group(1)), int(m.group(2))
        out[k] = out.get(k, 0) + v
    return out


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def parse_corep_expr(text: str):
    """``U1 x U2 + U0``: ``+`` is the direct sum, ``x`` or ``*`` the tensor product."""
    from .corep import corep_build, corep_dsum, corep_tensor

    summands = []
    for s in text.split("+"):
        factors = [f.strip() for f in re.split(r"[x*]", s)]
        U = None
        for f in factors:
            m = re.fullmatch(r"U_?(\d+)", f)
            if not m:
                raise UsageError(f"expected U<n>, got {f!r}")
            V = corep_build(int(m.group(1)))
            U = V if U is None else corep_tensor(U, V)
        summands.append(U)
    out = summands[0]
    for V in summands[1:]:
        out = corep_dsum(out, V)
    return out


def _functional(text: str):
    from .dual import NAMED, Named

    parts = [p.strip() for p in text.split("*")]
    funcs = []
    for p in parts:
        if p not in NAMED:
            raise UsageError(f"unknown functional {p!r}; choose from {', '.join(NAMED)} (join with * to convolve)")
        funcs.append(Named(p))
    F = funcs[0]
    for g in funcs[1:]:
        F = F * g
    return F


# ---------------------------------------------------------------- verbs
class Ctx:
    def __init__(self, args):
        self.args = args
        self.json = args.json
        self.q0 = parse_rational(args.q)
        if not 0 < self.q0 < 1:
            raise UsageError("--q must lie strictly between 0 and 1")
        self.bound = args.bound
        self.out: List[str] = []

    def emit(self, text_value: str, json_value=None):
        if self.json:
            self.out.append(json.dumps(json_value, sort_keys=True))
        else:
            self.out.append(text_value)


def _elt(ctx: Ctx, x: AlgebraElement):
    ctx.emit(render_element(x), element_to_json(x))
    return EXIT_OK


def cmd_normalize(ctx, a):
    return _elt(ctx, parse_element(a.expr))


def cmd_mul(ctx, a):
    return _elt(ctx, alg_mul(parse_element(a.left), parse_element(a.right)))


def cmd_delta(ctx, a):
    from .hopf import delta

    t = delta(parse_element(a.expr))
    ctx.emit(render_tensor(t), tensor_to_json(t))
    return EXIT_OK


def cmd_counit(ctx, a):
    from .hopf import counit

    s = counit(parse_element(a.expr))
    ctx.emit(render_scalar(s), _scalar_json(s))
    return EXIT_OK


def cmd_antipode(ctx, a):
    from .hopf import antipode

    return _elt(ctx, antipode(parse_element(a.expr)))


def cmd_conv(ctx, a):
    from .dual import conv_left, conv_right

    F = _functional(a.func)
    x = parse_element(a.expr)
    return _elt(ctx, conv_left(F, x) if a.side == "left" else conv_right(x, F))


def _check_report(ctx, title: str, report: Dict[str, bool]) -> int:
    bad = [k for k, v in report.items() if not v]
    lines = [f"{title}"] + [f"  {k}: {'ok' if v else 'FAIL'}" for k, v in report.items()]
    if bad:
        lines.append(f"first violated identity: {bad[0]}")
    ctx.emit("\n".join(lines), {"title": title, "report": report, "pass": not bad})
    return EXIT_FAIL if bad else EXIT_OK


def cmd_corep(ctx, a):
    from .corep import corep_build, corep_check, corep_tensor, corep_weights, weight_decompose

    if a.corep_verb == "build":
        U = corep_build(a.n)
        ctx.emit(U.render(), U.to_json())
        return EXIT_OK
    if a.corep_verb == "check":
        return _check_report(ctx, f"corep_check(U_{a.n})", corep_check(corep_build(a.n)))
    T = corep_tensor(corep_build(a.m), corep_build(a.n))
    W = corep_weights(T)
    D = weight_decompose(W)
    rep = corep_check(T) if a.check else None
    text = [f"U_{a.m} x U_{a.n}: dim {T.dim}", f"weights {render_weights(W)}", f"decomposition {render_weights(D, True)}"]
    if a.entries:
        text.append(T.render())
    payload = {"dim": T.dim, "weights": sorted([k, v] for k, v in W.items()),
               "decomposition": sorted([k, v] for k, v in D.items())}
    if a.entries:
        payload.update(T.to_json())
    if rep is not None:
        text.append("check " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in rep.items()))
        payload["check"] = rep
    ctx.emit("\n".join(text), payload)
    return EXIT_OK if rep is None or all(rep.values()) else EXIT_FAIL


def cmd_weights(ctx, a):
    from .corep import corep_weights

    W = corep_weights(parse_corep_expr(a.spec))
    ctx.emit(render_weights(W), sorted([k, v] for k, v in W.items()))
    return EXIT_OK


def cmd_decompose(ctx, a):
    from .corep import CorepError, weight_decompose

    try:
        D = weight_decompose(parse_weight_map(a.weights))
    except CorepError as exc:
        raise UsageError(str(exc)) from exc
    ctx.emit(render_weights(D, descending=True), sorted([k, v] for k, v in D.items()))
    return EXIT_OK


def _fmt_matrix(M) -> str:
    # suppress rounding noise relative to the largest entry
    cut = 1e-12 * max((abs(x) for row in M for x in row), default=0.0)

    def fmt(x):
        re = x.real if abs(x.real) > cut else 0.0
        im = x.imag if abs(x.imag) > cut else 0.0
        return f"{re:.6g}" if im == 0.0 else f"{complex(re, im):.6g}"

    return "\n".join("  [" + ", ".join(fmt(x) for x in row) + "]" for row in M)


def _qfloat(ctx, a) -> float:
    return float(parse_rational(a.inf_q)) if a.inf_q is not None else float(ctx.q0)


def cmd_inf(ctx, a):
    from .infinitesimal import corep_system, inf_build, inf_equivalent, inf_verify, residual_csv

    if a.inf_verb == "build":
        q = _qfloat(ctx, a)
        S = inf_build(a.n, q)
        rep = inf_verify(S)
        text = [f"n={a.n} q0={q} convention={S.convention}"]
        for name, M in zip(("A0", "A1", "A2"), S.mats):
            text += [f"{name} =", _fmt_matrix(M)]
        text.append("residuals " + ", ".join(f"{k}={v:.3e}" for k, v in rep["residuals"].items()))
        payload = {"n": a.n, "q0": q, "convention": S.convention, "pass": rep["pass"],
                   "residuals": rep["residuals"],
                   "A": [[[x.real for x in row] for row in M] for M in S.mats]}
        ctx.emit("\n".join(text), payload)
        return EXIT_OK if rep["pass"] else EXIT_FAIL
    if a.inf_verb == "verify":
        qs = [float(parse_rational(x)) for x in (a.qs.split(",") if a.qs else [str(ctx.q0)])]
        ns = range(a.max_n + 1)
        table = residual_csv(ns, qs)
        ok = all(inf_verify(inf_build(n, q))["pass"] for q in qs for n in ns)
        ctx.emit(table.rstrip("\n"), {"csv": table, "pass": ok})
        return EXIT_OK if ok else EXIT_FAIL
    q = _qfloat(ctx, a)
    X = inf_equivalent(inf_build(a.n, q), corep_system(a.n, q))
    if X is None:
        ctx.emit(f"no invertible intertwiner found for n={a.n}", {"n": a.n, "equivalent": False})
        return EXIT_FAIL
    ctx.emit(f"canonical system ~ A-matrices of U_{a.n} at q0={q}; T =\n{_fmt_matrix(X)}",
             {"n": a.n, "equivalent": True, "T": [[x.real for x in row] for row in X]})
    return EXIT_OK


def cmd_sl2(ctx, a):
    from .su2 import render_matrix, sl2_build, sl2_verify

    R = sl2_build(a.n)
    rep = sl2_verify(a.n)
    text = [f"e =\n{render_matrix(R.e)}", f"f =\n{render_matrix(R.f)}", f"h =\n{render_matrix(R.h)}"]
    text += [f"{k}: {'ok' if v else 'FAIL'}" for k, v in rep.items()]
    ctx.emit("\n".join(text), {"n": a.n, "e": R.e, "f": R.f, "h": R.h, "report": rep})
    return EXIT_OK if all(rep.values()) else EXIT_FAIL


def cmd_verify(ctx, a):
    from .suites import run_suite

    checks = run_suite(a.suite, ctx.q0, ctx.bound)
    failed = [c for c in checks if not c.ok]
    lines = [f"[{'PASS' if c.ok else 'FAIL'}] {c.name}" + (f"  ({c.detail})" if c.detail else "") for c in checks]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    if failed:
        lines.append(f"first violated identity: {failed[0].name}")
    ctx.emit("\n".join(lines), {
        "suite": a.suite, "q0": str(ctx.q0), "bound": ctx.bound, "pass": not failed,
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
        "first_failure": failed[0].name if failed else None,
    })
    return EXIT_FAIL if failed else EXIT_OK


# --------------------------------------------------------------- parser
class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--q", default=argparse.SUPPRESS, help="fixed rational q0 (default 1/2)")
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS, help="functional-equality grid bound B (default 3)")

    p = _ArgParser(prog="suq2", description="Exact algebra for SU_q(2) polynomials.", parents=[common])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_ArgParser)

    def verb(name, fn: Callable, help_: str):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(fn=fn)
        return sp

    for name, fn, h in (("normalize", cmd_normalize, "normal form of EXPR"),
                        ("delta", cmd_delta, "comultiplication of EXPR"),
                        ("counit", cmd_counit, "counit of EXPR"),
                        ("antipode", cmd_antipode, "antipode of EXPR")):
        verb(name, fn, h).add_argument("expr")
    sp = verb("mul", cmd_mul, "product of two expressions")
    sp.add_argument("left")
    sp.add_argument("right")
    sp = verb("conv", cmd_conv, "convolve a functional with an element")
    sp.add_argument("func", help="eps, f0, f1, f2, chi0, chi1, chi2, or a *-product of these")
    sp.add_argument("expr")
    sp.add_argument("--side", choices=("left", "right"), default="left",
                    help="left: (I x F) Delta(x); right: (F x I) Delta(x)")

    sp = verb("corep", cmd_corep, "corepresentations U_n")
    csub = sp.add_subparsers(dest="corep_verb", required=True, parser_class=_ArgParser)
    csub.add_parser("build", parents=[common]).add_argument("n", type=int)
    csub.add_parser("check", parents=[common]).add_argument("n", type=int)
    tp = csub.add_parser("tensor", parents=[common])
    tp.add_argument("m", type=int)
    tp.add_argument("n", type=int)
    tp.add_argument("--entries", action="store_true", help="also print the matrix entries")
    tp.add_argument("--check", action="store_true", help="also run corep_check on the product")

    verb("weights", cmd_weights, "weight function of e.g. 'U1 x U1 + U0'").add_argument("spec")
    verb("decompose", cmd_decompose, "decompose a weight map like '{-2:1,0:2,2:1}'").add_argument("weights")

    sp = verb("inf", cmd_inf, "infinitesimal systems")
    isub = sp.add_subparsers(dest="inf_verb", required=True, parser_class=_ArgParser)
    for name in ("build", "equiv"):
        ip = isub.add_parser(name, parents=[common])
        ip.add_argument("n", type=int)
    ip = isub.add_parser("verify", parents=[common])
    ip.add_argument("--max-n", type=int, default=8)
    ip.add_argument("--qs", default=None, help="comma-separated q0 grid (default: --q)")

    verb("sl2", cmd_sl2, "classical sl2 representation").add_argument("n", type=int)
    sp = verb("verify", cmd_verify, "run a verification suite")
    sp.add_argument("suite", choices=("relations", "hopf", "conprop", "derivation", "corep", "inf", "sl2", "all"))
    return p


def _normalize_argv(argv: Sequence[str]) -> List[str]:
    # let negative numbers and expressions starting with '-' through as positionals
    out = []
    for tok in argv:
        if tok.startswith("-") and not tok.startswith("--") and tok not in ("-h",):
            out.append(" " + tok)
        else:
            out.append(tok)
    return out


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(_normalize_argv(argv))
        args.json = getattr(args, "json", False)
        args.q = getattr(args, "q", "1/2")
        args.bound = getattr(args, "bound", 3)
        args.inf_q = args.q if "--q" in argv else None
        ctx = Ctx(args)
        code = args.fn(ctx, args)
        return code, "\n".join(ctx.out)
    except ParseError as exc:
        return EXIT_USAGE, "error: " + exc.pretty()
    except (UsageError, ScalarError) as exc:
        return EXIT_USAGE, f"error: {exc}\n{parser.format_usage().rstrip()}"


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)
        return EXIT_OK
    code, text = run_command(argv)
    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    if text:
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
