"""Command-line front end.

Subcommands: crystal, basicset, schur, kl, verify-decomp.  Exit codes follow
a strict contract: 0 for success, 1 for a mathematical verification failure
(a property check or a basic-set verification that comes back negative),
2 for usage or input errors.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import basicsets, fock, schur
from .basicsets import (CaseNotCovered, CharTwoUnsupported, DecompMatrix,
                        OddOrderUnsupported, SpecParams)
from .coxeter import CoxeterType, GroupTooLarge, build, weight_from_ab
from .fock import ARIKI, FLOTW, FockParams
from .klcells import PROPERTY_NAMES, HeckeAlgebra, KLData, PropertyFailure
from .schur import DomainError, RegimeNotCovered


def _render_mp(mp):
    return [list(c) for c in mp]


def _print_json(data):
    print(json.dumps(data, sort_keys=True))


# -- crystal ------------------------------------------------------------------

def _cmd_crystal(args) -> int:
    params = FockParams(l=args.l, r=args.r, u=tuple(args.u),
                        node_order=args.order)
    graph = fock.crystal(params, args.n)
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    else:
        _print_json(graph.to_json_dict())
    return 0


# -- basicset -----------------------------------------------------------------

def _cmd_basicset(args) -> int:
    params = SpecParams(char=args.char, xi_order=args.xi_order, a=args.a, b=args.b)
    if args.type == "A":
        labels = basicsets.basic_set_sym(params, args.n)
        out = {"type": "A", "labels": [list(nu) for nu in labels],
               "tag": "e-regular"}
    elif args.type == "B":
        labels, tag = basicsets.basic_set_B(params, args.n)
        out = {"type": "B", "labels": [_render_mp(mp) for mp in labels], "tag": tag}
    else:
        labels = basicsets.basic_set_D(params, args.n)
        rendered = []
        for lab in labels:
            if lab[0] == "pair":
                rendered.append(["pair", list(lab[1]), list(lab[2])])
            else:
                rendered.append(["split", list(lab[1]), lab[2]])
        out = {"type": "D", "labels": rendered, "tag": "Jacon-D"}
    if args.format == "text":
        print(f"# {out['tag']}")
        for lab in out["labels"]:
            print(json.dumps(lab))
    else:
        _print_json(out)
    return 0


# -- schur ---------------------------------------------------------------------

def _print_invariant_table(out: dict) -> None:
    rows = out["rows"]
    label_w = max(len(str(r["label"])) for r in rows)
    print(f"{'E':<{label_w}}  {'f':>4}  alpha")
    for r in rows:
        print(f"{str(r['label']):<{label_w}}  {r['f']:>4}  {r['alpha']}")


def _cmd_schur(args) -> int:
    if args.type == "G2":
        rows = [{"label": lab, "f": pair.f, "alpha": pair.alpha}
                for lab, pair in schur.all_invariants("G2", args.a, args.b)]
        out = {"type": "G2", "a": args.a, "b": args.b, "rows": rows}
    elif args.type == "F4":
        rows = [{"label": lab, "f": pair.f, "alpha": pair.alpha}
                for lab, pair in schur.all_invariants("F4", args.a, args.b)]
        out = {"type": "F4", "a": args.a, "b": args.b, "rows": rows}
    elif args.type == "A":
        rows = [{"label": list(nu), "f": pair.f, "alpha": pair.alpha}
                for nu, pair in schur.all_invariants("A", args.a, n=args.n)]
        rows.sort(key=lambda r: (r["alpha"], str(r["label"])))
        out = {"type": "A", "n": args.n, "a": args.a, "rows": rows}
    else:
        if args.bipartition:
            lam = tuple(tuple(c) for c in json.loads(args.bipartition))
            poly = schur.schur_element_B(lam, args.a, args.b)
            pair = schur.invariants_B(lam, args.a, args.b)
            out = {"type": "B", "label": _render_mp(lam), "a": args.a, "b": args.b,
                   "f": pair.f, "alpha": pair.alpha,
                   "element": poly.json_pairs(), "text": poly.text()}
            _print_json(out)
            return 0
        rows = [{"label": _render_mp(lam), "f": pair.f, "alpha": pair.alpha}
                for lam, pair in schur.all_invariants("B", args.a, args.b, args.n)]
        rows.sort(key=lambda r: (r["alpha"], str(r["label"])))
        out = {"type": "B", "n": args.n, "a": args.a, "b": args.b, "rows": rows}
    if args.format == "text":
        _print_invariant_table(out)
    else:
        _print_json(out)
    return 0


# -- kl -------------------------------------------------------------------------

def _element_name(group, idx: int) -> str:
    return group.elements[idx].name()


def _cmd_kl(args) -> int:
    ctype = CoxeterType(args.type, args.rank)
    weights = args.weights
    if ctype.family in ("B", "G2", "F4"):
        if len(weights) != 2:
            raise ValueError(f"type {ctype.family} takes two weights a,b")
        wf = weight_from_ab(ctype, weights[0], weights[1])
    else:
        if len(weights) != 1:
            raise ValueError(f"type {ctype.family} takes one weight")
        wf = weight_from_ab(ctype, weights[0])
    group = build(ctype)
    algebra = HeckeAlgebra(group, wf)
    kl = KLData(algebra, force=args.force)

    report: dict = {"type": str(ctype), "weights": list(wf.values),
                    "elements": {w.name(): list(w.word) for w in group.elements}}
    failures = False

    if args.check:
        results = []
        for name in args.check:
            res = kl.check_property(name)
            entry = {"property": res.name, "passed": res.passed}
            if res.witness is not None:
                entry["witness"] = [
                    _element_name(group, x) if isinstance(x, int) else x
                    for x in res.witness]
            results.append(entry)
            failures = failures or not res.passed
        report["checks"] = results

    emit = args.emit
    if emit == "cbasis":
        report["cbasis"] = {
            _element_name(group, w): {
                _element_name(group, y): c.json_pairs()
                for y, c in sorted(kl.cbasis[w].coeffs.items())}
            for w in range(len(group))}
        report["cbasis_text"] = {
            _element_name(group, w): kl.cbasis[w].text()
            for w in range(len(group))}
    elif emit == "afn":
        report["afn"] = {_element_name(group, z): kl.afn[z]
                         for z in range(len(group))}
    elif emit == "gamma":
        report["gamma"] = [
            [_element_name(group, x), _element_name(group, y),
             _element_name(group, z), g]
            for (x, y, z), g in sorted(kl.gamma.items())]
    elif emit == "dinv":
        report["dinv"] = [_element_name(group, d) for d in sorted(kl.dinv)]
        report["nz"] = {_element_name(group, d): kl.nz[d] for d in sorted(kl.dinv)}
    elif emit == "jring":
        ring = kl.jring
        report["unit"] = {_element_name(group, d): c for d, c in sorted(ring.unit.items())}
        report["idempotents"] = {
            str(a): {_element_name(group, d): c for d, c in sorted(ta.items())}
            for a, ta in sorted(ring.level_idempotents.items())}
    elif emit == "phimatrix":
        B = kl.phi_matrix
        det = kl.phi_matrix_det()
        report["phimatrix"] = [[c.json_pairs() for c in row] for row in B]
        report["det"] = det.json_pairs()
        report["det_text"] = det.text()

    _print_json(report)
    return 1 if failures else 0


# -- verify-decomp ----------------------------------------------------------------

def _cmd_verify(args) -> int:
    try:
        matrix = DecompMatrix.load(args.file)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: cannot ingest {args.file}: {exc}", file=sys.stderr)
        return 2
    result = basicsets.verify_decomp(matrix)
    _print_json(result.to_json_dict(matrix))
    return 0 if result.exists else 1


# -- parser -------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckekit",
        description="Exact Hecke-algebra combinatorics: crystals, basic sets, "
                    "Schur invariants, Kazhdan-Lusztig data")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crystal", help="highest-weight crystal graphs")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--u", type=_int_list, required=True, help="comma separated")
    p.add_argument("--n", type=int, required=True, help="level bound")
    p.add_argument("--order", choices=[FLOTW, ARIKI], default=FLOTW)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(func=_cmd_crystal)

    p = sub.add_parser("basicset", help="canonical basic sets")
    p.add_argument("--type", choices=["A", "B", "D"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--xi-order", dest="xi_order", type=int, required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_basicset)

    p = sub.add_parser("schur", help="Schur-element invariant tables")
    p.add_argument("--type", choices=["A", "B", "G2", "F4"], required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--bipartition", help="JSON pair of part lists, type B only")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig data and checks")
    p.add_argument("--type", choices=["A", "B", "D", "G2", "F4"], required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--weights", type=_int_list, required=True,
                   help="a for A/D; a,b for B/G2/F4")
    p.add_argument("--emit", choices=["cbasis", "afn", "gamma", "dinv",
                                      "jring", "phimatrix"])
    p.add_argument("--check", type=lambda s: s.split(","), default=None,
                   help="comma separated property names, e.g. P2,P7,P15")
    p.add_argument("--force", action="store_true",
                   help="allow structure constants beyond the size cap")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=_cmd_kl)

    p = sub.add_parser("verify-decomp", help="verify a decomposition matrix")
    p.add_argument("file")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (GroupTooLarge, RegimeNotCovered, DomainError, CaseNotCovered,
            CharTwoUnsupported, OddOrderUnsupported, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PropertyFailure as exc:
        print(f"property failure: {exc}", file=sys.stderr)
        return 1


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
