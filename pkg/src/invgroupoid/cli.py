"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical check failed (a witness is
printed), 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, axioms, bridge, zoo
from .axioms import PreconditionError
from .tables import FiniteMagma, FinitePartialMagma, ParseError, parse_structure, serialize_structure

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Report:
    """Ordered ``key=value`` lines, rendered as text or as one JSON object.

    Extra fields attached to a line (``witness=...``) print on that line in
    text form and become ``<key>_<field>`` entries in JSON.
    """

    def __init__(self):
        self.items = []

    def add(self, key, value, **extra):
        self.items.append((key, value, extra))

    def render(self, as_json: bool) -> str:
        if as_json:
            flat = {}
            for key, value, extra in self.items:
                flat[key] = value
                for field, v in extra.items():
                    flat[f"{key}_{field}"] = v
            return json.dumps(flat, separators=(",", ":"))
        lines = []
        for key, value, extra in self.items:
            parts = [f"{key}={_text(value)}"]
            parts += [f"{field}={_text(v)}" for field, v in extra.items()]
            lines.append(" ".join(parts))
        return "\n".join(lines)


def _text(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, list):
        return ",".join(str(v) for v in value)
    return str(value)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    text = _read(path)
    try:
        return parse_structure(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _names(s, elements):
    return [s.names[e] for e in elements]


def _flag(report, key, result, s):
    if result is None:
        report.add(key, "n/a")
        return
    extra = {}
    witness = getattr(result, "witness", None)
    if not result and witness is not None:
        extra["witness"] = _names(s, witness.elements)
        if witness.clause:
            extra["clause"] = witness.clause
    report.add(key, bool(result), **extra)


def _precondition(report, exc: PreconditionError, s):
    extra = {}
    if exc.witness is not None:
        extra = {"kind": exc.witness.kind.value, "witness": _names(s, exc.witness.elements)}
    report.add("error", json.dumps(str(exc)), **extra)


# --- commands ------------------------------------------------------------------------


def cmd_check(args, report):
    s = _load(args.path)
    if isinstance(s, FinitePartialMagma):
        result = axioms.check_groupoid_axioms(s)
        _flag(report, "groupoid", result, s)
        if result:
            g = bridge.FiniteGroupoid.from_partial(s)
            units = sorted(bridge.unit_space(g))
            report.add("order", g.order)
            report.add("units", _names(s, units))
        return EXIT_OK if result else EXIT_FAIL

    c = axioms.classify(s)
    _flag(report, "associative", c.is_associative, s)
    _flag(report, "regular", c.is_regular, s)
    _flag(report, "unique_inverses", c.has_unique_inverses, s)
    _flag(report, "idempotents_commute", c.idempotents_commute, s)
    if c.is_associative:
        report.add("zero", s.names[c.zero] if c.zero is not None else None)
        report.add("unit", s.names[c.unit] if c.unit is not None else None)
    _flag(report, "orthogonal", c.nonzero_idempotents_orthogonal, s)
    ok = c.is_inverse_semigroup
    for label in ("zero", "unit"):
        claimed = getattr(s.designated, label)
        if claimed is not None and claimed != getattr(c, label):
            report.add(f"designated_{label}", False)
            ok = False
    return EXIT_OK if ok else EXIT_FAIL


def _as_groupoid(s, report):
    if not isinstance(s, FinitePartialMagma):
        raise UsageError("expected a groupoid file (with an 'inverse:' header)")
    try:
        return bridge.FiniteGroupoid.from_partial(s)
    except PreconditionError as exc:
        _precondition(report, exc, s)
        return None


def _as_semigroup(s, report):
    if not isinstance(s, FiniteMagma):
        raise UsageError("expected a semigroup file (total table, no 'inverse:' header)")
    try:
        return bridge.FiniteInverseSemigroup.from_magma(s)
    except PreconditionError as exc:
        _precondition(report, exc, s)
        return None


def cmd_to_semigroup(args, report):
    s = _load(args.path)
    g = _as_groupoid(s, report)
    if g is None:
        return EXIT_FAIL
    args.output.append(serialize_structure(bridge.s_of_g(g)))
    return EXIT_OK


def cmd_to_groupoid(args, report):
    s = _load(args.path)
    sg = _as_semigroup(s, report)
    if sg is None:
        return EXIT_FAIL
    try:
        g = bridge.g_of_s(sg)
    except PreconditionError as exc:
        _precondition(report, exc, s)
        return EXIT_FAIL
    args.output.append(serialize_structure(g))
    return EXIT_OK


def cmd_roundtrip(args, report):
    s = _load(args.path)
    if isinstance(s, FinitePartialMagma):
        g = _as_groupoid(s, report)
        if g is None:
            return EXIT_FAIL
        result = bridge.roundtrip_g(g)
    else:
        sg = _as_semigroup(s, report)
        if sg is None:
            return EXIT_FAIL
        try:
            result = bridge.roundtrip_s(sg)
        except PreconditionError as exc:
            _precondition(report, exc, s)
            return EXIT_FAIL
    extra = {}
    if not result:
        if result.mismatch:
            extra["witness"] = _names(s, result.mismatch)
        extra["detail"] = json.dumps(result.detail)
    report.add("roundtrip", "identity" if result else "mismatch", **extra)
    return EXIT_OK if result else EXIT_FAIL


def cmd_vagner(args, report):
    try:
        survey = zoo.vagner_survey(args.order, args.mode, args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for key, value in survey.items():
        report.add(key, value)
    return EXIT_OK if survey.vagner_consistent else EXIT_FAIL


def cmd_gen(args, report):
    kind, params = args.kind, args.params
    try:
        if kind == "union":
            if not params:
                raise UsageError("gen union needs at least one file")
            parts = []
            for path in params:
                g = _as_groupoid(_load(path), report)
                if g is None:
                    return EXIT_FAIL
                parts.append(g)
            structure = zoo.gen_disjoint_union(parts)
        else:
            if len(params) != 1:
                raise UsageError(f"gen {kind} takes exactly one integer")
            try:
                n = int(params[0])
            except ValueError:
                raise UsageError(f"not an integer: {params[0]!r}") from None
            make = {
                "cyclic": zoo.gen_cyclic_group,
                "pair": zoo.gen_pair_groupoid,
                "sim": zoo.gen_symmetric_inverse_monoid,
            }[kind]
            structure = make(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    args.output.append(serialize_structure(structure))
    return EXIT_OK


def cmd_algebra_check(args, report):
    s = _load(args.path)
    g = _as_groupoid(s, report)
    if g is None:
        return EXIT_FAIL
    sg = bridge.s_of_g(g)
    same, mismatch = algebra.algebras_identical(
        algebra.groupoid_algebra(g),
        algebra.contracted_semigroup_algebra(sg),
        algebra.canonical_bijection(g),
    )
    extra = {} if mismatch is None else {"witness": _names(s, [mismatch.i, mismatch.j])}
    report.add("constants_identical", same, **extra)
    pi = algebra.extend_by_zero(algebra.regular_representation(g), sg)
    rep = algebra.check_star_representation(sg, pi)
    extra = {}
    if rep.witness is not None:
        extra = {"law": rep.witness.law, "witness": _names(sg, rep.witness.elements)}
    report.add("star_representation", "pass" if rep else "fail", **extra)
    return EXIT_OK if same and rep else EXIT_FAIL


# --- wiring ---------------------------------------------------------------------------


def _output_flags(parser, default):
    parser.add_argument("--json", action="store_true", default=default, help="emit one JSON object")
    parser.add_argument("--quiet", action="store_true", default=default, help="exit code only")


def build_parser() -> argparse.ArgumentParser:
    # flags may appear before or after the subcommand; SUPPRESS keeps the
    # subparser from resetting a flag given before it
    common = argparse.ArgumentParser(add_help=False)
    _output_flags(common, argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="invgroupoid",
        description="Finite groupoids and inverse semigroups given by Cayley tables.",
    )
    _output_flags(parser, False)
    sub = parser.add_subparsers(dest="command", required=True)

    def path_cmd(name, func, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.add_argument("path", nargs="?", default="-", help="structure file, or '-' for stdin")
        p.set_defaults(func=func)
        return p

    path_cmd("check", cmd_check, "classify a semigroup table or check groupoid axioms")
    path_cmd("to-semigroup", cmd_to_semigroup, "adjoin a zero to a groupoid")
    path_cmd("to-groupoid", cmd_to_groupoid, "remove the zero of an inverse semigroup")
    path_cmd("roundtrip", cmd_roundtrip, "check that the two constructions invert each other")
    path_cmd("algebra-check", cmd_algebra_check, "compare algebras and verify the *-representation")

    p = sub.add_parser("vagner", help="enumerate semigroups and test Vagner's theorem", parents=[common])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mode", choices=zoo.ENUMERATION_MODES, default="exhaustive")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_vagner)

    p = sub.add_parser("gen", help="write a standard structure", parents=[common])
    p.add_argument("kind", choices=("cyclic", "pair", "sim", "union"))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.output = []
    report = Report()
    try:
        code = args.func(args, report)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if not args.quiet:
        for text in args.output:
            stdout.write(text)
        if report.items:
            # keep stdout pipeable when it carries a structure
            print(report.render(args.json), file=stderr if args.output else stdout)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
