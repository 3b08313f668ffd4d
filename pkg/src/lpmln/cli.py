"""``lpmln`` command line: models, probabilities, reducts, translations and
strong-equivalence checks for ``.lpmln`` files.

Exit codes: 0 success / equivalent, 1 not equivalent, 2 usage or parse error,
3 signature over the enumeration cap, 4 no soft stable model, 5 the
characterizations disagree (cross-check only).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import equivalence as eq
from .semantics import (
    HTInterpretation, PrimingMap, SignatureTooLarge, choice_program, delta_transform,
    prime_display, reduct, satisfied_rules,
)
from .syntax import ParseError, Program, conjoin, parse_program, render_formula, render_rule
from .weights import NoSoftStableModel, WExpr, model_weights, normalize

EXIT_OK, EXIT_NOT_EQUIVALENT, EXIT_INPUT, EXIT_CAP, EXIT_NO_MODEL, EXIT_DISAGREE = 0, 1, 2, 3, 4, 5

D_HYPOTHESIS = ("condition d uses a candidate definition of soft HT models: "
                "(H,T) HT-satisfies every rule classically satisfied by T")


class InputError(Exception):
    pass


def _load(path: str) -> Program:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    try:
        return parse_program(text)
    except ParseError as e:
        raise InputError(f"{path}:{e}") from e


def _interp(spec: str, sig) -> frozenset:
    x = frozenset(a.strip() for a in spec.split(",") if a.strip())
    unknown = x - sig
    if unknown:
        raise InputError(f"unknown atom(s) {', '.join(sorted(unknown))}")
    return x


def _fmt(x) -> str:
    return "{" + ",".join(prime_display(a) for a in sorted(x)) + "}"


def _render(f) -> str:
    return render_formula(f, prime_display)


def _js(obj):
    """JSON-ready form of interpretations, weights, formulas and witnesses."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, frozenset):
        return sorted(prime_display(a) for a in obj)
    if isinstance(obj, WExpr):
        return obj.to_json()
    if isinstance(obj, HTInterpretation):
        return {"here": _js(obj.here), "there": _js(obj.there)}
    if isinstance(obj, (tuple, list)):
        return [_js(o) for o in obj]
    if isinstance(obj, dict):
        return {str(k): _js(v) for k, v in obj.items()}
    return _render(obj)


def _emit(args, payload: dict, lines) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------- commands


def cmd_models(args) -> int:
    p = _load(args.file)
    weights = model_weights(p)
    dist = normalize(weights)
    rows = [{"atoms": _js(x), "weight": w.to_json(), "probability": dist[x]}
            for x, w in weights.items()]
    _emit(args, {"models": rows},
          [f"{_fmt(x)}\t{w}\t{dist[x]:.6g}" for x, w in weights.items()])
    return EXIT_OK


def cmd_prob(args) -> int:
    p = _load(args.file)
    dist = normalize(model_weights(p))
    if args.interp is not None:
        x = _interp(args.interp, p.signature)
        items = [(x, dist[x])]
    else:
        items = list(dist.items())
    _emit(args, {"distribution": [{"atoms": _js(x), "probability": q} for x, q in items]},
          [f"P({_fmt(x)}) = {q:.12g}" for x, q in items])
    return EXIT_OK


def _verdict_payload(v) -> tuple:
    if isinstance(v, (eq.Equivalent, eq.Vacuous)):
        note = " (both programs empty)" if isinstance(v, eq.Vacuous) else ""
        return ({"verdict": "equivalent", "witness": v.witness.to_json(), "counterexample": None},
                [f"equivalent, c = {v.witness}{note}"])
    if isinstance(v, eq.WeightMismatch):
        ce = {"kind": "weight-mismatch", "x1": _js(v.x1), "ratio1": v.ratio1.to_json(),
              "x2": _js(v.x2), "ratio2": v.ratio2.to_json()}
        return ({"verdict": "not-equivalent", "witness": None, "counterexample": ce},
                [f"not equivalent: weight ratio {v.ratio1} at {_fmt(v.x1)} "
                 f"but {v.ratio2} at {_fmt(v.x2)}"])
    diffs = [{"x": _js(d.x), "distinguishing": _js(d.distinguishing),
              "left": _render(d.left), "right": _render(d.right)} for d in v.mismatches]
    ce = {"kind": "reduct-mismatch", **diffs[0], "all": diffs}
    lines = [f"not equivalent: reduct mismatch at {_fmt(v.x)}",
             f"  left reduct:  {_render(v.left)}",
             f"  right reduct: {_render(v.right)}",
             f"  distinguished by {_fmt(v.distinguishing)}"]
    if len(v.mismatches) > 1:
        lines.append("  reducts also differ at " + ", ".join(_fmt(d.x) for d in v.mismatches[1:]))
    return {"verdict": "not-equivalent", "witness": None, "counterexample": ce}, lines


def cmd_check_se(args) -> int:
    f, g = _load(args.left), _load(args.right)
    method = args.method
    if method == "theorem1":
        v = eq.check_se(f, g)
        payload, lines = _verdict_payload(v)
        payload = {"method": method, **payload}
        _emit(args, payload, lines)
        return EXIT_OK if v.equivalent else EXIT_NOT_EQUIVALENT
    if method == "falsify":
        pool = [_load(path) for path in args.pool or ()]
        r = eq.falsify(f, g, trials=args.trials, seed=args.seed, pool=pool)
        report = {"found": r.found, "trials_used": r.trials_used, "seed": r.seed,
                  "h": None if r.h is None else [render_rule(rule) for rule in r.h],
                  "x": None if r.x is None else _js(r.x),
                  "p_left": r.p_left, "p_right": r.p_right,
                  "w_left": _js(r.w_left), "w_right": _js(r.w_right)}
        if r.found:
            lines = [f"not equivalent: distinguishing extension found after {r.trials_used} trial(s) (seed {r.seed})",
                     "  H: " + ("; ".join(render_rule(rule) for rule in r.h) or "(empty)"),
                     f"  at {_fmt(r.x)}: P_left = {r.p_left:.12g}, P_right = {r.p_right:.12g}",
                     f"  weights: left {r.w_left or 0}, right {r.w_right or 0}"]
        else:
            lines = [f"no violation found in {r.trials_used} trials (seed {r.seed})"]
        _emit(args, {"method": method, "verdict": "not-equivalent" if r.found else "no-violation-found",
                     "falsifier": report}, lines)
        return EXIT_NOT_EQUIVALENT if r.found else EXIT_OK
    res = eq.check_condition(method, f, g)
    payload = {"method": method, "verdict": "equivalent" if res.holds else "not-equivalent",
               "counterexample": _js(res.witness)}
    lines = [f"condition {method}: {'holds' if res.holds else 'fails'}"]
    if not res.holds:
        lines.append(f"  counterexample: {json.dumps(_js(res.witness))}")
    if method == "d":
        payload["note"] = D_HYPOTHESIS
        lines.append(f"  note: {D_HYPOTHESIS}")
    _emit(args, payload, lines)
    return EXIT_OK if res.holds else EXIT_NOT_EQUIVALENT


def cmd_reduct(args) -> int:
    p = _load(args.file)
    x = _interp(args.interp, p.signature)
    px = satisfied_rules(p, x)
    reducts = [reduct(r, x) for r in px.formulas]
    payload = {"x": _js(x), "satisfied": [render_rule(r) for r in px],
               "reducts": [_render(r) for r in reducts], "reduct": _render(conjoin(reducts))}
    lines = [f"X = {_fmt(x)}"]
    lines += [f"F_X: {render_rule(r)}" for r in px] or ["F_X: (empty)"]
    lines += [f"reduct: {_render(r)}" for r in reducts] or ["reduct: top"]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_delta(args) -> int:
    p = _load(args.file)
    pm = PrimingMap(p.signature)
    out = [_render(delta_transform(r, pm)) for r in p.formulas]
    _emit(args, {"delta": out}, out)
    return EXIT_OK


def cmd_choice(args) -> int:
    p = _load(args.file)
    out = [_render(c) for c in choice_program(p)]
    _emit(args, {"choice": out}, out)
    return EXIT_OK


def cmd_cross_check(args) -> int:
    f, g = _load(args.left), _load(args.right)
    cc = eq.check_all_conditions(f, g)
    conditions = {c.value: {"holds": r.holds, "witness": _js(r.witness)}
                  for c, r in cc.results.items()}
    if not cc.agree:
        verdict, code = "disagree", EXIT_DISAGREE
    elif cc.holds:
        verdict, code = "equivalent", EXIT_OK
    else:
        verdict, code = "not-equivalent", EXIT_NOT_EQUIVALENT
    lines = [f"{c.value}\t{'true' if r.holds else 'false'}" for c, r in cc.results.items()]
    lines.append(f"agree: {'yes' if cc.agree else 'NO'} ({verdict})")
    lines.append(f"note: {D_HYPOTHESIS}")
    _emit(args, {"conditions": conditions, "agree": cc.agree, "verdict": verdict,
                 "note": D_HYPOTHESIS}, lines)
    return code


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lpmln", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, files=("file",)):
        sp = sub.add_parser(name, help=help)
        for f in files:
            sp.add_argument(f, help=".lpmln program")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("models", cmd_models, "list soft stable models with weights and probabilities")
    sp = add("prob", cmd_prob, "probability distribution over soft stable models")
    sp.add_argument("--interp", help="comma-separated atoms; report only this interpretation")
    sp = add("check-se", cmd_check_se, "decide strong equivalence", files=("left", "right"))
    sp.add_argument("--method", default="theorem1",
                    choices=["theorem1", "b", "c", "d", "e", "f", "g", "falsify"])
    sp.add_argument("--trials", type=int, default=1000, help="falsifier trials")
    sp.add_argument("--seed", type=int, default=0, help="falsifier seed")
    sp.add_argument("--pool", action="append", metavar="FILE",
                    help="extension program tried before random ones (repeatable)")
    sp = add("reduct", cmd_reduct, "satisfied rules and their reduct at an interpretation")
    sp.add_argument("--interp", required=True, help="comma-separated atoms, '' for the empty set")
    add("delta", cmd_delta, "primed translation of every rule")
    add("choice", cmd_choice, "choice formula of every rule")
    add("cross-check", cmd_cross_check, "evaluate all characterizations b-g",
        files=("left", "right"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SignatureTooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except NoSoftStableModel as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NO_MODEL


if __name__ == "__main__":
    sys.exit(main())
