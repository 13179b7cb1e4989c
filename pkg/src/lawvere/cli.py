"""Command-line entry point.

Exit codes: 0 success, 1 axiom violation or counterexample, 2 malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from . import action as act
from . import approach as app
from . import colimit as col
from . import metric as met
from . import order as ordr
from . import ultra
from .corpus import KINDS, generate
from .documents import CompactStructure, WeightDocument, dumps, load, to_json
from .dsl import ELEM, bindings_from_json, run
from .errors import AxiomViolation, DslError, LawvereError, MalformedDocument, UnsupportedEnumeration
from .quantale import FiniteChain, parse_quantale
from .suites import SUITES, Config, run_suite

OK, VIOLATION, MALFORMED = 0, 1, 2


class Report(dict):
    """A JSON-able result with a text rendering."""

    def text(self) -> str:
        lines = []
        for k, v in self.items():
            if isinstance(v, (dict, list)):
                v = json.dumps(v, sort_keys=True, ensure_ascii=False)
            lines.append(f"{k}: {v}")
        return "\n".join(lines)


def _emit(report: Report, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(report.text() + "\n")


# check -----------------------------------------------------------------


def check_structure(obj, q) -> tuple[bool, dict]:
    """Axiom check for a loaded document; returns ``(valid, details)``."""
    if isinstance(obj, ordr.FinitePoset):
        return True, {
            "antisymmetric": obj.is_antisymmetric(),
            "complete_lattice": ordr.is_complete_lattice(obj),
        }
    if isinstance(obj, met.MetricSpace):
        ok = met.check_metric_axioms(obj)
        info = {"metric_axioms": ok}
        if ok:
            info["separated"] = met.is_separated(obj)
            info["symmetric"] = met.is_symmetric(obj)
        return ok, info
    if isinstance(obj, WeightDocument):
        try:
            [q.parse(v) for v in obj.values.values()]
        except (ValueError, LawvereError) as exc:
            raise MalformedDocument(f"weight value outside {q}: {exc}") from exc
        return True, {"variance": obj.variance}
    if isinstance(obj, act.OrdAction):
        conds = act.check_action_conditions(obj)
        return conds.all(), dict(conds._asdict())
    if isinstance(obj, CompactStructure):
        okm = met.check_metric_axioms(obj.metric)
        ok = okm and ultra.is_metric_compact_hausdorff(obj.metric, obj.alpha)
        return ok, {"metric_axioms": okm, "compact_hausdorff": ok}
    if isinstance(obj, app.ApproachSpace):
        ok = app.check_approach_axioms(obj)
        return ok, {"approach_axioms": ok}
    raise MalformedDocument(f"cannot check {type(obj).__name__}")  # pragma: no cover


def cmd_check(args) -> int:
    obj = load(args.file)
    q = parse_quantale(args.quantale)
    ok, info = check_structure(obj, q)
    _emit(Report(file=args.file, type=to_json(obj)["type"], valid=ok, **info), args.format)
    return OK if ok else VIOLATION


# compute ---------------------------------------------------------------


def _elem(space, label: str) -> int:
    if label not in space.carrier:
        raise MalformedDocument(f"unknown element {label!r}")
    return list(space.carrier).index(label)


def _weight(M: met.MetricSpace, path: str) -> met.WeightTable:
    doc = load(path)
    if not isinstance(doc, WeightDocument):
        raise MalformedDocument(f"{path} is not a weight document")
    try:
        w = doc.bind(M.carrier, M.quantale)
    except ValueError as exc:
        raise MalformedDocument(str(exc)) from exc
    met.require_weight(M, w)
    return w


def _label(space, x: Optional[int]):
    return None if x is None else space.carrier[x]


def _weight_out(M, w):
    from .documents import weight_document

    return to_json(weight_document(M.carrier, M.quantale, w))


def _metric_ops() -> dict[str, tuple[int, Callable]]:
    def sup(M, path):
        return _label(M, col.weighted_sup(M, _weight(M, path)))

    def inf(M, path):
        return _label(M, col.weighted_inf(M, _weight(M, path)))

    def tensor(M, x, u):
        return _label(M, col.tensor(M, _elem(M, x), M.quantale.parse(u)))

    def cotensor(M, x, u):
        return _label(M, col.cotensor(M, _elem(M, x), M.quantale.parse(u)))

    return {
        "sup": (1, sup),
        "inf": (1, inf),
        "tensor": (2, tensor),
        "cotensor": (2, cotensor),
        "isbell-plus": (1, lambda M, p: _weight_out(M, col.isbell_plus(M, _weight(M, p)))),
        "isbell-minus": (1, lambda M, p: _weight_out(M, col.isbell_minus(M, _weight(M, p)))),
        "yoneda": (1, lambda M, x: _weight_out(M, met.yoneda(M, _elem(M, x)))),
        "dual": (0, lambda M: to_json(met.dual(M))),
        "underlying-order": (0, lambda M: to_json(met.underlying_order(M))),
        "is-separated": (0, met.is_separated),
        "is-tensored": (0, col.is_tensored),
        "is-cotensored": (0, col.is_cotensored),
        "is-cocomplete": (0, col.is_cocomplete),
        "lift": (0, lambda M: to_json(ultra.lift_metric(M))),
        "to-action": (0, lambda M: to_json(act.action_from_metric(M))),
        "to-approach": (0, lambda M: to_json(app.approach_from_metric(M))),
    }


def _poset_ops() -> dict[str, tuple[int, Callable]]:
    def elems(P, labels):
        return [_elem(P, s) for s in labels.split(",") if s]

    return {
        "supremum": (1, lambda P, a: _label(P, ordr.supremum(P, elems(P, a)))),
        "infimum": (1, lambda P, a: _label(P, ordr.infimum(P, elems(P, a)))),
        "way-below": (2, lambda P, y, x: ordr.way_below(P, _elem(P, y), _elem(P, x))),
        "is-complete-lattice": (0, ordr.is_complete_lattice),
        "is-continuous": (0, ordr.is_continuous_lattice),
        "is-op-continuous": (0, ordr.is_op_continuous_lattice),
        "scott-opens": (0, lambda P: sorted(sorted(P.carrier[i] for i in U) for U in ordr.scott_opens(P))),
        "lift": (0, lambda P: to_json(ultra.lift_order(P))),
        "to-metric": (0, lambda P: to_json(met.order_to_metric(P))),
    }


def _action_ops() -> dict[str, tuple[int, Callable]]:
    return {
        "conditions": (0, lambda A: dict(act.check_action_conditions(A)._asdict())),
        "to-metric": (0, lambda A: to_json(act.metric_from_action(A))),
        "is-cocomplete": (0, act.cocomplete_algebra_check),
        "is-lattice-action": (0, app.is_lattice_action),
        "to-approach": (0, lambda A: to_json(app.lattice_action_to_app(A))),
    }


def _approach_ops() -> dict[str, tuple[int, Callable]]:
    def to_form(A, form):
        table = A.dist if form == app.DIST else A.conv
        return to_json(app.ApproachSpace(A.quantale, A.carrier, form, table))

    return {
        "to-dist": (0, lambda A: to_form(A, app.DIST)),
        "to-conv": (0, lambda A: to_form(A, app.CONV)),
        "underlying-metric": (0, lambda A: to_json(app.underlying_metric(A))),
        "is-T0": (0, app.is_T0),
        "is-topological": (0, app.is_topological),
        "is-cocomplete": (0, app.is_cocomplete_app),
        "is-absolutely-cocomplete": (0, app.is_absolutely_cocomplete),
        "main-theorem": (0, app.main_theorem_clauses),
        "compactness-degree": (0, lambda A: A.quantale.format(app.compactness_degree(A))),
        "to-action": (0, lambda A: to_json(app.app_to_lattice_action(A))),
    }


def _compact_ops() -> dict[str, tuple[int, Callable]]:
    return {
        "is-compact-hausdorff": (0, lambda C: ultra.is_metric_compact_hausdorff(C.metric, C.alpha)),
        "to-approach": (0, lambda C: to_json(ultra.K_approach(C.metric, C.alpha))),
    }


def operations() -> dict[type, dict[str, tuple[int, Callable]]]:
    return {
        met.MetricSpace: _metric_ops(),
        ordr.FinitePoset: _poset_ops(),
        act.OrdAction: _action_ops(),
        app.ApproachSpace: _approach_ops(),
        CompactStructure: _compact_ops(),
    }


def _precheck(obj) -> None:
    if isinstance(obj, met.MetricSpace):
        met.require_metric(obj)
    elif isinstance(obj, app.ApproachSpace):
        app.require_approach(obj)
    elif isinstance(obj, CompactStructure):
        met.require_metric(obj.metric)


def cmd_compute(args) -> int:
    obj = load(args.file)
    table = operations().get(type(obj), {})
    if args.op not in table:
        known = ", ".join(sorted(table)) or "none"
        raise MalformedDocument(f"no operation {args.op!r} for this document (available: {known})")
    arity, fn = table[args.op]
    if len(args.args) != arity:
        raise MalformedDocument(f"{args.op} takes {arity} argument(s), got {len(args.args)}")
    _precheck(obj)
    result = fn(obj, *args.args)
    _emit(Report(op=args.op, result=result), args.format)
    return OK


# verify ----------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.suite == "list":
        _emit(Report({name: inv for name, (inv, _) in sorted(SUITES.items())}), args.format)
        return OK
    if args.suite not in SUITES:
        raise MalformedDocument(f"unknown suite {args.suite!r}; try 'verify list'")
    q = parse_quantale(args.quantale)
    res = run_suite(args.suite, Config(size=args.size, seed=args.seed, samples=args.samples, quantale=q))
    _emit(Report(res.to_json()), args.format)
    return OK if res.passed else VIOLATION


# gen -------------------------------------------------------------------


def cmd_gen(args) -> int:
    q = parse_quantale(args.quantale)
    if args.kind == "action" and not isinstance(q, FiniteChain):
        raise MalformedDocument("actions need --quantale chain:STEP:LEVELS")
    sys.stdout.write(dumps(generate(args.kind, args.size, args.seed, q)))
    return OK


# eval ------------------------------------------------------------------


def cmd_eval(args) -> int:
    try:
        with open(args.bindings, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedDocument(f"cannot read bindings: {exc}") from exc
    b = bindings_from_json(doc)
    _precheck(b.space)
    for w in b.weights.values():
        met.require_weight(b.metric, w)
    sort, value = run(args.expr, b)
    shown = b.space.carrier[value] if sort == ELEM else b.space.quantale.format(value)
    _emit(Report(expr=args.expr, sort=sort, result=shown), args.format)
    return OK


# wiring ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quantale", default="chain:1:3", help="chain:STEP:LEVELS or rational (default chain:1:3)")
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="lawvere", description="Finite Lawvere metric, action and approach structures.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="validate a structure document")
    c.add_argument("file")
    c.set_defaults(run=cmd_check)

    c = sub.add_parser("compute", parents=[common], help="run one operation on a document")
    c.add_argument("op")
    c.add_argument("file")
    c.add_argument("args", nargs="*")
    c.set_defaults(run=cmd_compute)

    c = sub.add_parser("verify", parents=[common], help="run a property suite ('list' to show them)")
    c.add_argument("suite")
    c.add_argument("--size", type=int, default=3)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=200)
    c.set_defaults(run=cmd_verify)

    c = sub.add_parser("gen", parents=[common], help="print a seeded random document")
    c.add_argument("kind", choices=KINDS)
    c.add_argument("--size", type=int, default=3)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(run=cmd_gen)

    c = sub.add_parser("eval", parents=[common], help="evaluate a DSL expression")
    c.add_argument("expr")
    c.add_argument("--bindings", required=True)
    c.set_defaults(run=cmd_eval)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return MALFORMED if exc.code else OK
    try:
        return args.run(args)
    except AxiomViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return VIOLATION
    except (MalformedDocument, DslError, UnsupportedEnumeration, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    except LawvereError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return VIOLATION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
