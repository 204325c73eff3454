"""Command-line front end: flagcoh <subcommand> ... emitting JSON (or DOT).

Every output is deterministic for a fixed argv: element order is always
(length, matrix key), polynomial coefficients are emitted as decimal
strings, and sign vectors are '+'/'-' strings.  FLAGCOH_CAP overrides the
enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, blowup, chevalley, cohomology, graph, tau, verify
from .cartan import LieType, compact_dual_data
from .errors import FlagcohError
from .flow import SpectralData, count_zeros, default_window, tau_signal
from .qpoly import QPoly, factor_q_minus_form
from .weyl import enumerate_group, longest_element


def _cap(args) -> int | None:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("FLAGCOH_CAP")
    return int(env) if env else None


def _poly_pairs(p: QPoly) -> list[list]:
    return [[e, str(c)] for e, c in p.items()]


def _word_str(word) -> str:
    return "e" if not word else "".join(str(i) for i in word)


def _factored(p: QPoly) -> str | None:
    degrees = factor_q_minus_form(p)
    if degrees is None:
        return None
    parts = []
    for d in sorted(set(degrees)):
        m = degrees.count(d)
        base = f"(q^{d}-1)" if d > 1 else "(q-1)"
        parts.append(base if m == 1 else f"{base}^{m}")
    return "*".join(parts) if parts else "1"


def _emit(payload, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ordered_elements(group):
    return sorted(
        range(group.order),
        key=lambda i: (group.elements[i].length, group.elements[i].mat),
    )


def cmd_weyl(args) -> int:
    t = LieType.parse(args.type)
    payload = {"command": "weyl", "type": str(t)}
    if args.emit == "word-of-longest":
        payload["word_of_longest"] = list(longest_element(t).word)
    else:
        group = enumerate_group(t, _cap(args))
        if args.emit == "order":
            payload["order"] = group.order
        else:
            payload["lengths"] = group.length_distribution()
    _emit(payload, args.out)
    return 0


def cmd_eta(args) -> int:
    t = LieType.parse(args.type)
    group = enumerate_group(t, _cap(args))
    eps = blowup.sign_vector(args.eps, t.rank)
    table = blowup.blowup_table(group, eps)
    values = [
        {
            "word": _word_str(group.elements[i].word),
            "length": group.elements[i].length,
            "eta": table.counts[i],
        }
        for i in _ordered_elements(group)
    ]
    payload = {
        "command": "eta",
        "type": str(t),
        "eps": blowup.format_signs(eps),
        "values": values,
        "max": table.max_value,
    }
    _emit(payload, args.out)
    return 0


def cmd_pq(args) -> int:
    t = LieType.parse(args.type)
    group = enumerate_group(t, _cap(args))
    eps = blowup.sign_vector(args.eps, t.rank)
    p = blowup.blowup_poly(group, eps)
    payload = {
        "command": "pq",
        "type": str(t),
        "eps": blowup.format_signs(eps),
        "poly": _poly_pairs(p),
    }
    factored = _factored(p)
    if factored is not None:
        payload["factored"] = factored
    _emit(payload, args.out)
    return 0


def cmd_graph(args) -> int:
    t = LieType.parse(args.type)
    group = enumerate_group(t, _cap(args))
    eps = blowup.sign_vector(args.eps, t.rank)
    g = graph.build_graph(group, eps)
    text = graph.export_graph(g, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_cohomology(args) -> int:
    t = LieType.parse(args.type)
    group = enumerate_group(t, _cap(args))
    eps = blowup.sign_vector(args.eps, t.rank)
    payload = {
        "command": "cohomology",
        "type": str(t),
        "eps": blowup.format_signs(eps),
        "ring": args.ring,
    }
    if args.ring == "F2":
        payload["dims"] = list(cohomology.mod2_dims(group))
    else:
        groups = cohomology.integral_cohomology(group, eps)
        if args.ring == "Q":
            payload["betti"] = list(groups.free_ranks())
        else:
            payload["groups"] = [
                {"free_rank": free, "torsion": list(tors)}
                for free, tors in groups.groups
            ]
    _emit(payload, args.out)
    return 0


def cmd_tau(args) -> int:
    t = LieType.parse(args.type)
    family = tau.nilpotent_tau_family(t)
    payload = {"command": "tau", "type": str(t), "emit": args.emit}
    if args.emit == "multiplicity":
        payload["multiplicity"] = family.multiplicity()
    elif args.emit == "min-degrees":
        payload["min_degrees"] = list(family.min_degrees())
    else:
        payload["taus"] = [
            {
                "kind": entry.kind,
                "vars": list(entry.poly.vars),
                "terms": [
                    {
                        "exponents": list(exp),
                        "numerator": str(c.numerator),
                        "denominator": str(c.denominator),
                    }
                    for exp, c in entry.poly.sorted_terms()
                ],
            }
            for entry in family.entries
        ]
    _emit(payload, args.out)
    return 0


def cmd_chevalley(args) -> int:
    t = LieType.parse(args.type)
    data = compact_dual_data(t)
    op = chevalley.order_poly(t)
    payload = {
        "command": "chevalley",
        "type": str(t),
        "dual_compact": data.name,
        "degrees": list(data.degrees),
        "r": op.r,
        "reduced_poly": _poly_pairs(op.reduced),
        "full_poly": _poly_pairs(op.full()),
    }
    if args.verify:
        if args.prime is None:
            raise SystemExit("--verify needs --prime")
        report = chevalley.verify_order(t, chevalley.PrimeField(args.prime))
        payload["verify"] = report
        _emit(payload, args.out)
        return 0 if report["match"] else 1
    if args.prime is not None:
        payload["order_at_prime"] = op.order_at(args.prime)
    _emit(payload, args.out)
    return 0


def cmd_flow(args) -> int:
    values = [float(x) for x in args.spectrum.split(",")]
    if len(values) != args.rank + 1:
        raise SystemExit(f"rank {args.rank} needs {args.rank + 1} eigenvalues")
    spec = SpectralData.make(values)
    window = None if args.window == "auto" else float(args.window)
    if window is None:
        window = default_window(spec)
    per = [
        count_zeros(tau_signal(spec, j), window, args.samples)
        for j in range(1, spec.rank + 1)
    ]
    eta_star = blowup.longest_blowups(LieType("A", spec.rank))
    payload = {
        "command": "flow",
        "type": f"A{spec.rank}",
        "spectrum": list(spec.eigenvalues),
        "window": window,
        "per_tau_zeros": per,
        "total": sum(per),
        "eta_wstar": eta_star,
        "match": sum(per) == eta_star,
    }
    _emit(payload, args.out)
    return 0 if payload["match"] else 1


def cmd_verify(args) -> int:
    t = LieType.parse(args.type)
    results = verify.run_checks(t, _cap(args))
    payload = {
        "command": "verify",
        "type": str(t),
        "checks": [
            {"name": r.name, "status": r.status, "detail": r.detail} for r in results
        ],
        "passed": verify.all_passed(results),
    }
    _emit(payload, args.out)
    for r in results:
        line = f"{r.status.upper():5s} {t} {r.name}"
        if r.detail:
            line += f" ({r.detail})"
        print(line, file=sys.stderr)
    return 0 if payload["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagcoh",
        description="Blow-up combinatorics of Toda flows: counts, graphs, "
        "cohomology, tau degrees, Chevalley orders.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name)
        if flags.get("type", True):
            p.add_argument("--type", required=True, help="Lie type, e.g. A3, D4, E8")
        if flags.get("eps"):
            p.add_argument("--eps", required=True, help="sign vector like '--+', or rank many signs")
        if flags.get("cap", True):
            p.add_argument("--cap", type=int, help="enumeration cap override")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.set_defaults(fn=fn)
        return p

    p = add("weyl", cmd_weyl)
    p.add_argument("--emit", choices=["lengths", "order", "word-of-longest"], default="lengths")
    add("eta", cmd_eta, eps=True)
    add("pq", cmd_pq, eps=True)
    p = add("graph", cmd_graph, eps=True)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p = add("cohomology", cmd_cohomology, eps=True)
    p.add_argument("--ring", choices=["Z", "Q", "F2"], default="Z")
    p = add("tau", cmd_tau, cap=False)
    p.add_argument("--emit", choices=["min-degrees", "multiplicity", "poly"], default="min-degrees")
    p = add("chevalley", cmd_chevalley, cap=False)
    p.add_argument("--prime", type=int)
    p.add_argument("--verify", action="store_true")
    p = add("flow", cmd_flow, type=False, cap=False)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--spectrum", required=True, help="comma-separated eigenvalues")
    p.add_argument("--window", default="auto")
    p.add_argument("--samples", type=int, default=4001)
    add("verify", cmd_verify)
    return parser


def _stash_raw_values(argv: list[str]):
    """Hide '--eps --' and '--spectrum -3,...' values behind placeholders.

    Sign vectors and negative eigenvalue lists are legitimate values that
    argparse would otherwise swallow as option syntax.
    """
    stash: dict[str, str] = {}
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        handled = False
        for name in ("--eps", "--spectrum"):
            raw = None
            if tok == name and i + 1 < len(argv):
                raw = argv[i + 1]
                i += 2
            elif tok.startswith(name + "="):
                raw = tok[len(name) + 1 :]
                i += 1
            if raw is not None:
                key = f"@{len(stash)}"
                stash[key] = raw
                out.append(f"{name}={key}")
                handled = True
                break
        if not handled:
            out.append(tok)
            i += 1
    return out, stash


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv, stash = _stash_raw_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    for attr in ("eps", "spectrum"):
        value = getattr(args, attr, None)
        if value in stash:
            setattr(args, attr, stash[value])
    try:
        return args.fn(args)
    except FlagcohError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
