"""Command-line front end.

    weylgroupoid verify   INPUT            axioms (I) and (A)
    weylgroupoid chambers INPUT            chamber graph
    weylgroupoid scheme   INPUT [--chamber ID] [--ordering P]
    weylgroupoid equiv    INPUT INPUT      arrangement and scheme equivalence
    weylgroupoid catalog  [NAME]           built-in root sets

INPUT is a JSON file ``{"rank": r, "positive_roots": [...]}`` or
``catalog:NAME``.  Exit codes: 0 pass/equivalent, 1 axiom failure or
inequivalent, 2 usage or input error.
"""

import argparse
import json
import sys

from . import axioms, cartan_scheme, catalog
from .arrangement import RootSet, enumerate_chambers
from .errors import IntegralityViolation, WeylGroupoidError


class InputError(Exception):
    pass


def load_input(spec):
    if spec.startswith("catalog:"):
        try:
            return catalog.get(spec[len("catalog:"):]).positive_roots
        except KeyError as exc:
            raise InputError(str(exc.args[0]))
    try:
        with open(spec) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{spec} is not valid JSON: {exc}")
    return RootSet.from_json(data)


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=True))
    out.write("\n")


def cmd_verify(args, out):
    R = load_input(args.input)
    graph = enumerate_chambers(R)
    reports = [axioms.check_crystallographic(R, graph), axioms.check_additive(R, graph)]
    ok = all(r.passed for r in reports)
    if args.json:
        _dump(
            {
                "input": R.to_json(),
                "chambers": len(graph),
                "reports": [r.to_json() for r in reports],
                "crystallographic": reports[0].passed,
                "additive": reports[1].passed,
            },
            out,
        )
    else:
        out.write(f"chambers: {len(graph)}\n")
        for r in reports:
            out.write(f"axiom ({r.axiom}): {'pass' if r.passed else 'FAIL'}\n")
            for w in r.witnesses[: args.max_witnesses]:
                out.write(f"  witness: {json.dumps(w, sort_keys=True)}\n")
    return 0 if ok else 1


def cmd_chambers(args, out):
    R = load_input(args.input)
    graph = enumerate_chambers(R)
    if args.json:
        _dump(graph.to_json(), out)
    else:
        out.write(f"{len(graph)} chambers, {len(graph.edges)} edges\n")
        for c in graph.chambers:
            out.write(f"{c.id:4d} {c.sign} basis {list(c.basis_indices)}\n")
    return 0


def _parse_ordering(text, rank):
    if text is None:
        return None
    try:
        perm = [int(x) - 1 for x in text.split(",")]
    except ValueError:
        raise InputError(f"--ordering expects comma-separated indices, got {text!r}")
    if sorted(perm) != list(range(rank)):
        raise InputError(f"--ordering must be a permutation of 1..{rank}")
    return perm


def cmd_scheme(args, out):
    R = load_input(args.input)
    graph = enumerate_chambers(R)
    if not 0 <= args.chamber < len(graph):
        raise InputError(f"--chamber must lie in 0..{len(graph) - 1}")
    ordering = _parse_ordering(args.ordering, R.rank)
    try:
        S = cartan_scheme.build_scheme(R, args.chamber, ordering, graph)
    except IntegralityViolation as exc:
        sys.stderr.write(f"not crystallographic: {exc}\n")
        return 1
    report = cartan_scheme.verify_all(S)
    flags = report.flags()
    flags["object_chamber_bijection"] = cartan_scheme.object_chamber_bijection(S)
    if args.json:
        _dump(S.to_json(verified=flags), out)
    else:
        out.write(f"objects: {len(S.objects)}\n")
        for name, ok in flags.items():
            out.write(f"{name}: {'pass' if ok else 'FAIL'}\n")
    return 0 if all(flags.values()) else 1


def cmd_equiv(args, out):
    R1, R2 = load_input(args.first), load_input(args.second)
    g1, g2 = enumerate_chambers(R1), enumerate_chambers(R2)
    psi = axioms.arrangement_equivalence(R1, R2, g1, g2)
    schemes = None
    try:
        S1 = cartan_scheme.build_scheme(R1, graph=g1)
        S2 = cartan_scheme.build_scheme(R2, graph=g2)
        schemes = cartan_scheme.scheme_equivalence(S1, S2)
        scheme_verdict = schemes is not None
    except IntegralityViolation:
        scheme_verdict = None
    result = {
        "arrangements_equivalent": psi is not None,
        "psi": None if psi is None else [[_num(x) for x in row] for row in psi],
        "schemes_equivalent": scheme_verdict,
        "phi0": None if schemes is None else [i + 1 for i in schemes[0]],
    }
    if args.json:
        _dump(result, out)
    else:
        out.write("equivalent\n" if psi is not None else "not equivalent\n")
        if scheme_verdict is not None:
            out.write(f"schemes: {'equivalent' if scheme_verdict else 'not equivalent'}\n")
    return 0 if psi is not None else 1


def _num(x):
    from .exact_geometry import rational_to_json

    return rational_to_json(x)


def cmd_catalog(args, out):
    if args.name is None:
        for e in catalog.all_entries():
            out.write(f"{e.name}\n")
        return 0
    try:
        entry = catalog.get(args.name)
    except KeyError as exc:
        raise InputError(str(exc.args[0]))
    _dump(entry.positive_roots.to_json(), out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="weylgroupoid", description=__doc__.splitlines()[0] or None)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check axioms (I) and (A)")
    v.add_argument("input")
    v.add_argument("--json", action="store_true")
    v.add_argument("--max-witnesses", type=int, default=5)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("chambers", help="enumerate chambers")
    c.add_argument("input")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_chambers)

    s = sub.add_parser("scheme", help="build and verify the Cartan scheme")
    s.add_argument("input")
    s.add_argument("--json", action="store_true")
    s.add_argument("--chamber", type=int, default=0, help="base chamber id")
    s.add_argument("--ordering", help="permutation of the base basis, e.g. 2,1,3")
    s.set_defaults(func=cmd_scheme)

    e = sub.add_parser("equiv", help="decide equivalence of two arrangements")
    e.add_argument("first")
    e.add_argument("second")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_equiv)

    k = sub.add_parser("catalog", help="print a built-in root set")
    k.add_argument("name", nargs="?")
    k.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    k.set_defaults(func=cmd_catalog)
    return p


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except (InputError, WeylGroupoidError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
