"""Command-line front end.

Exit codes: 0 when every check passed, 1 when some check failed (the report
is still printed), 2 for malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import braiding, catalog, cqt, schemas, transmutation
from .hopf import DimensionError, HopfAlgebra, NotAGroupError, verify_hopf
from .matched_pair import (
    ActionPair,
    MatchedPairError,
    NotAGroupAlgebraError,
    check_antipode_identities,
    derive_right_action,
    verify_matched_pair,
    verify_module_coalgebra_action,
)
from .report import AxiomReport, Check, compare_maps, compare_matrices
from .scalars import A, PoleError, Scalar, ScalarSyntaxError, ScalarZeroDivisionError, parse_scalar

INPUT_ERRORS = (
    schemas.SchemaError,
    catalog.UnknownNameError,
    ScalarSyntaxError,
    ScalarZeroDivisionError,
    PoleError,
    DimensionError,
    NotAGroupError,
    NotAGroupAlgebraError,
    FileNotFoundError,
    IsADirectoryError,
)


class UsageError(ValueError):
    pass


class Context:
    """Resolved command-line inputs."""

    def __init__(self, args):
        self.args = args
        self.alpha: Scalar | None = None
        if getattr(args, "alpha", None) is not None:
            self.alpha = parse_scalar(args.alpha)

    # -- loading ------------------------------------------------------------

    def _specialize(self, H: HopfAlgebra) -> HopfAlgebra:
        if self.alpha is None or H.is_constant():
            return H
        if not self.alpha.is_constant():
            raise UsageError("--alpha must be a rational number for loaded objects")
        return H.specialize(self.alpha.to_fraction())

    def resolve_hopf(self, ref, base: Path | None = None) -> HopfAlgebra:
        if not isinstance(ref, str):
            raise schemas.SchemaError("hopf reference must be a name or a path")
        if ref in catalog.ALGEBRAS:
            return catalog.get_algebra(ref)
        path = Path(ref)
        if base is not None and not path.is_absolute():
            path = base / path
        if not path.exists():
            raise catalog.UnknownNameError(f"no algebra named {ref!r} and no such file")
        return self._specialize(schemas.hopf_from_json(schemas.load_json(path)))

    def hopf(self) -> HopfAlgebra:
        ref = self.args.hopf
        if ref is None:
            pair_ref = getattr(self.args, "pair", None)
            if pair_ref in ("family1", "family2") or getattr(self.args, "form", None) == "r_alpha":
                ref = "a_c2c2"
            else:
                raise UsageError("--hopf is required")
        return self.resolve_hopf(ref)

    def pair(self) -> ActionPair:
        ref = self.args.pair
        if ref is None:
            raise UsageError("--pair is required")
        if ref in catalog.PAIRS:
            H = self.hopf()
            if ref in ("family1", "family2"):
                return catalog.get_pair(ref, H, A if self.alpha is None else self.alpha)
            return catalog.get_pair(ref, H)
        path = Path(ref)
        if not path.exists():
            raise catalog.UnknownNameError(f"no pair named {ref!r} and no such file")
        doc = schemas.load_json(path)
        pair = schemas.pair_from_json(doc, lambda r: self.resolve_hopf(r, path.parent))
        if self.alpha is not None and not pair.is_constant():
            if not self.alpha.is_constant():
                raise UsageError("--alpha must be a rational number for loaded objects")
            pair = pair.specialize(self.alpha.to_fraction())
        return pair

    def form(self) -> cqt.CqtForm:
        ref = self.args.form
        if ref is None:
            raise UsageError("--form is required")
        if ref == "r_alpha":
            return cqt.r_alpha_form(A if self.alpha is None else self.alpha)
        path = Path(ref)
        if not path.exists():
            raise catalog.UnknownNameError(f"no form named {ref!r} and no such file")
        return schemas.cqt_from_json(schemas.load_json(path), lambda r: self.resolve_hopf(r, path.parent))


class Outcome:
    """Reports plus an optional JSON document written with --out."""

    def __init__(self, command: str):
        self.command = command
        self.reports: list[AxiomReport] = []
        self.document: dict | None = None
        self.lines: list[str] = []

    def add(self, report: AxiomReport) -> AxiomReport:
        self.reports.append(report)
        return report

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def _single(subject: str, check: Check, basis=None, notes=()) -> AxiomReport:
    r = AxiomReport(subject, [check], basis=basis)
    r.notes.extend(notes)
    return r


# -- subcommands ------------------------------------------------------------

def cmd_catalog(ctx: Context, out: Outcome):
    name = ctx.args.name
    if name is None:
        out.lines.append("algebras: " + " ".join(catalog.ALGEBRAS))
        out.lines.append("pairs:    " + " ".join(catalog.PAIRS))
        out.lines.append("forms:    " + " ".join(catalog.FORMS))
        out.document = {"algebras": list(catalog.ALGEBRAS), "pairs": list(catalog.PAIRS),
                        "forms": list(catalog.FORMS)}
        return
    if name in catalog.ALGEBRAS:
        ctx.args.hopf = name
        out.document = schemas.hopf_to_json(ctx._specialize(catalog.get_algebra(name)))
    elif name in catalog.PAIRS:
        ctx.args.pair = name
        out.document = schemas.pair_to_json(ctx.pair())
    elif name in catalog.FORMS:
        ctx.args.form = name
        out.document = schemas.cqt_to_json(ctx.form())
    else:
        raise catalog.UnknownNameError(f"unknown catalog name {name!r}")
    out.lines.append(schemas.dump_json(out.document).rstrip())


def cmd_verify_hopf(ctx, out):
    out.add(verify_hopf(ctx.hopf()))


def cmd_verify_pair(ctx, out):
    pair = ctx.pair()
    report = out.add(verify_matched_pair(pair))
    if report:
        out.add(check_antipode_identities(pair))


def cmd_derive_right(ctx, out):
    pair = ctx.pair()
    H = pair.H
    right = derive_right_action(H, pair.left)
    derived = ActionPair(H, pair.left, right, pair.name)
    out.add(verify_module_coalgebra_action(H, right, "right"))
    out.add(verify_matched_pair(derived))
    check = compare_maps("derived <- equals the given <-", pair.right.image, right.image, H.dim, 2)
    out.add(_single(f"derived right action of {pair.name} on {H.name}", check, H.basis))
    out.document = schemas.pair_to_json(derived)


def _r(ctx, out) -> tuple[ActionPair, braiding.BraidingOperator] | None:
    pair = ctx.pair()
    mp = verify_matched_pair(pair)
    if not mp:
        out.add(mp)
        return None
    return pair, braiding.build_r(pair, verify=False)


def cmd_build_r(ctx, out):
    got = _r(ctx, out)
    if got is None:
        return
    pair, r = got
    out.document = schemas.rmatrix_to_json(pair.H, r.matrix)
    out.lines.append(schemas.dump_json(out.document).rstrip())


def cmd_check_braid(ctx, out):
    got = _r(ctx, out)
    if got is None:
        return
    pair, r = got
    out.add(braiding.verify_braiding_axioms(r))
    check = braiding.check_braid_equation(r, fast=ctx.args.fast)
    note = ["sampled at a = " + ", ".join(map(str, braiding.SAMPLE_POINTS))] if ctx.args.fast else []
    out.add(_single(f"braid equation for {pair.name} on {pair.H.name}", check, pair.H.basis, note))


def cmd_involutive(ctx, out):
    got = _r(ctx, out)
    if got is None:
        return
    pair, r = got
    report = out.add(braiding.involutivity_report(pair, r))
    if report:
        out.add(braiding.involutive_antipode_check(pair, r))
    out.document = {"conditions": report.conditions()}


def cmd_invert_r(ctx, out):
    got = _r(ctx, out)
    if got is None:
        return
    pair, r = got
    t1 = braiding.r_inverse_formula(pair, r)
    t2 = braiding.r_inverse_via_antipode(r)
    n = pair.H.dim
    report = AxiomReport(f"inverse of r for {pair.name} on {pair.H.name}", basis=pair.H.basis)
    report.add(Check("formula inverse satisfies t r = r t = id", True))
    report.add(Check("antipode inverse satisfies t r = r t = id", True))
    report.add(compare_matrices("formula inverse = antipode inverse", t1, t2, n))
    out.add(report)
    out.add(braiding.ybo_identities(pair, r))
    out.document = schemas.rmatrix_to_json(pair.H, t1)


def cmd_transmute(ctx, out):
    pair = ctx.pair()
    mp = out.add(verify_matched_pair(pair))
    if not mp:
        return
    T = transmutation.build_transmutation(pair)
    out.add(transmutation.verify_braided_hopf(T))
    out.add(_single(f"Hopf brace compatibility for {pair.name} on {pair.H.name}",
                    transmutation.check_hopf_brace_compat(pair, T), pair.H.basis))
    bc = transmutation.braided_commutativity_check(T)
    info = AxiomReport(f"braided commutativity of H_-> for {pair.name}", basis=pair.H.basis)
    info.notes.append(f"m_bullet c = m_bullet: {'holds' if bc else 'fails at ' + bc.witness.describe(pair.H.basis)}")
    out.add(info)
    out.document = schemas.transmute_to_json(T)


def cmd_adjoints(ctx, out):
    pair = ctx.pair()
    mp = out.add(verify_matched_pair(pair))
    if not mp:
        return
    T = transmutation.build_transmutation(pair)
    ad = transmutation.adjoint_actions(pair, T)
    H = pair.H
    report = AxiomReport(f"adjoint actions of H_-> for {pair.name} on {H.name}", basis=H.basis)
    report.add(Check("closed forms equal the compositional definitions", True))
    lt, rt = ad.left_trivial(H), ad.right_trivial(H)
    bc = transmutation.braided_commutativity_check(T)
    report.notes.append(f"ad_L trivial: {lt.passed}")
    report.notes.append(f"ad_R trivial: {rt.passed}")
    report.notes.append(f"braided commutative: {bc.passed}")
    if lt.passed and rt.passed and not bc.passed:
        report.notes.append("trivial adjoints without braided commutativity")
    out.add(report)
    out.document = {"ad_L": [[str(x) for x in row] for row in ad.ad_L.to_lists()],
                    "ad_R": [[str(x) for x in row] for row in ad.ad_R.to_lists()],
                    "ad_L_trivial": lt.passed, "ad_R_trivial": rt.passed}


def _product(ctx, out, which):
    pair = ctx.pair()
    mp = out.add(verify_matched_pair(pair))
    if not mp:
        return
    if which == "dcp":
        P = transmutation.double_cross_product(pair)
    else:
        P = transmutation.bosonization(transmutation.build_transmutation(pair))
    out.add(verify_hopf(P))
    out.document = schemas.hopf_to_json(P)


def cmd_dcp(ctx, out):
    _product(ctx, out, "dcp")


def cmd_bosonize(ctx, out):
    _product(ctx, out, "bos")


def cmd_check_phi(ctx, out):
    pair = ctx.pair()
    mp = out.add(verify_matched_pair(pair))
    if not mp:
        return
    T = transmutation.build_transmutation(pair)
    dcp = transmutation.double_cross_product(pair)
    bos = transmutation.bosonization(T)
    out.add(verify_hopf(dcp))
    out.add(verify_hopf(bos))
    report = AxiomReport(f"Phi: H bowtie H -> H_-> # H for {pair.name} on {pair.H.name}", basis=dcp.basis)
    try:
        transmutation.phi_isomorphism(pair, T, dcp, bos)
        report.add(Check("Phi is a Hopf algebra isomorphism with the stated inverse", True))
    except transmutation.IntertwinerError as exc:
        report.add(exc.check)
    out.add(report)


def cmd_cqt_verify(ctx, out):
    F = ctx.form()
    report = out.add(cqt.verify_cqt(F))
    report.notes.append(f"cotriangular: {cqt.is_cotriangular(F)}")


def cmd_cqt_induce(ctx, out):
    F = ctx.form()
    report = out.add(cqt.verify_cqt(F))
    if not report:
        return
    induced = cqt.induce_pair_from_cqt(F)
    out.add(_single(f"pair induced by the form on {F.H.name}",
                    Check("matched pair and braiding cross-check", True), F.H.basis))
    if ctx.args.pair is not None:
        given = ctx.pair()
        same = given.left == induced.left and given.right == induced.right
        out.add(_single(f"induced pair equals {given.name}", Check(f"induced = {given.name}", same),
                        F.H.basis))
        if not same and given.H.name == "a_c2c2":
            out.add(cqt.grouplike_obstruction(given))
    out.document = schemas.pair_to_json(induced)


def cmd_extract_actions(ctx, out):
    path = Path(ctx.args.r)
    H, M = schemas.rmatrix_from_json(schemas.load_json(path), lambda r: ctx.resolve_hopf(r, path.parent))
    try:
        pair = braiding.extract_actions_from_r(M, H)
    except braiding.NotABraidingOperatorError as exc:
        out.add(exc.report)
        return
    out.add(_single(f"actions extracted from r on {H.name}",
                    Check("round trip build_r(extract(r)) = r", True), H.basis))
    out.document = schemas.pair_to_json(pair)


COMMANDS = {
    "catalog": (cmd_catalog, "print a bundled algebra, pair or form as JSON"),
    "verify-hopf": (cmd_verify_hopf, "check the Hopf algebra axioms"),
    "verify-pair": (cmd_verify_pair, "check the matched-pair axioms and antipode identities"),
    "derive-right": (cmd_derive_right, "derive <- from -> and verify the resulting pair"),
    "build-r": (cmd_build_r, "emit the braiding operator r as rmatrix.v1"),
    "check-braid": (cmd_check_braid, "check the braiding-operator axioms and the braid equation"),
    "involutive": (cmd_involutive, "evaluate the four involutivity conditions"),
    "invert-r": (cmd_invert_r, "compute r^-1 both ways and check the r identities"),
    "transmute": (cmd_transmute, "build and verify the braided Hopf algebra H_->"),
    "adjoints": (cmd_adjoints, "adjoint actions of H_->"),
    "dcp": (cmd_dcp, "double cross product H bowtie H"),
    "bosonize": (cmd_bosonize, "bosonization H_-> # H"),
    "check-phi": (cmd_check_phi, "check the isomorphism H bowtie H -> H_-> # H"),
    "cqt-verify": (cmd_cqt_verify, "check a coquasitriangular form"),
    "cqt-induce": (cmd_cqt_induce, "matched pair induced by a coquasitriangular form"),
    "extract-actions": (cmd_extract_actions, "recover the actions from an rmatrix.v1 file"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfyb", description=(
        "Exact verification of matched pairs of actions on Hopf algebras and "
        "the Yang-Baxter operators they define."))
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        if name == "catalog":
            p.add_argument("name", nargs="?", help="algebra, pair or form name")
        if name == "extract-actions":
            p.add_argument("r", help="rmatrix.v1 file")
        p.add_argument("--hopf", help="algebra name or hopf.v1 file")
        p.add_argument("--pair", help="pair name or pair.v1 file")
        p.add_argument("--form", help="form name or cqt.v1 file")
        p.add_argument("--alpha", help="value substituted for the parameter a")
        p.add_argument("--fast", action="store_true", help="sampled evaluation in a (check-braid)")
        p.add_argument("--json", action="store_true", help="print a single JSON document")
        p.add_argument("--timings", action="store_true", help="include elapsed_ms in reports")
        p.add_argument("--out", help="write the command's JSON artifact to this path")
    return parser


def run_command(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    func = COMMANDS[args.command][0]
    out = Outcome(args.command)
    try:
        ctx = Context(args)
        func(ctx, out)
    except UsageError as exc:
        print(f"hopfyb: {exc}", file=stderr)
        return 2
    except INPUT_ERRORS as exc:
        print(f"hopfyb: {exc}", file=stderr)
        return 2
    except MatchedPairError as exc:
        out.add(exc.report)
    except braiding.PreconditionError as exc:
        print(f"hopfyb: {exc}", file=stderr)
        return 1
    except (braiding.InternalInconsistencyError, braiding.InverseCheckError) as exc:
        print(f"hopfyb: internal inconsistency: {exc}", file=stderr)
        return 1
    except (cqt.NotConvolutionInvertibleError, braiding.SingularAntipodeError) as exc:
        print(f"hopfyb: {exc}", file=stderr)
        return 1

    if args.out and out.document is not None:
        schemas.dump_json(out.document, args.out)
    if args.json:
        doc = {"command": args.command, "passed": out.passed,
               "reports": [r.to_dict(timing=args.timings) for r in out.reports]}
        if out.document is not None and not args.out and args.command not in ("catalog", "build-r"):
            doc["result"] = out.document
        if args.command in ("catalog", "build-r") and not out.reports:
            doc = out.document
        stdout.write(schemas.dump_json(doc))
    else:
        for line in out.lines:
            print(line, file=stdout)
        for r in out.reports:
            print(r.format(), file=stdout)
            if args.timings:
                print(f"  ({r.elapsed_ms} ms)", file=stdout)
    return 0 if out.passed else 1


def main(argv=None) -> int:
    return run_command(argv)


if __name__ == "__main__":
    sys.exit(main())
