"""
``hopfq``: load structures from files, run law suites and constructions, and
emit deterministic JSON reports.

Exit status is 0 when every requested check passed, 1 when a law failed (the
witness is in the report) and 2 for unreadable input or mismatched shapes.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import catalog, core, deform as deform_mod, laws, loops, pairing as pairing_mod, qtyd, serial
from .exactlin import NotInvertible, ShapeMismatch, compose, field_from_name, tensor

INPUT_ERRORS = (
    serial.FormatError,
    ShapeMismatch,
    loops.NotALoop,
    loops.NotAGroup,
    laws.MissingSlot,
    laws.ParseError,
    json.JSONDecodeError,
    FileNotFoundError,
    KeyError,
    ValueError,
)


class Report:
    """Accumulates one command's outcome; rendered with sorted keys so identical runs are byte-identical."""

    def __init__(self, command: list[str]):
        self.command = command
        self.inputs: list[dict] = []
        self.sections: dict[str, list[dict]] = {}
        self.results: dict = {}
        self.artifacts: list[str] = []
        self.error: str | None = None
        self.failed = False

    def add_input(self, name: str, dim: int | None = None, kind: str = "structure"):
        entry = {"name": name, "kind": kind}
        if dim is not None:
            entry["dim"] = dim
        self.inputs.append(entry)

    def section(self, name: str, reports: list[laws.LawReport], required: bool = True):
        self.sections[name] = laws.reports_json(reports)
        if required and not laws.all_pass(reports):
            self.failed = True

    def fail(self, exc: core.LawFails):
        self.failed = True
        self.results["failure"] = {"context": exc.context, **exc.report.to_json()}

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return 2
        return 1 if self.failed else 0

    def to_json(self) -> dict:
        status = {0: "pass", 1: "fail", 2: "error"}[self.exit_code]
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "reports": self.sections,
            "results": self.results,
            "artifacts": self.artifacts,
            "status": status,
            "exit": self.exit_code,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def render_text(rep: dict) -> str:
    lines = [f"hopfq {' '.join(rep.get('command', []))}", f"status: {rep.get('status')} (exit {rep.get('exit')})"]
    for inp in rep.get("inputs", []):
        dim = f" dim={inp['dim']}" if "dim" in inp else ""
        lines.append(f"input {inp['kind']}: {inp['name']}{dim}")
    for name, reps in rep.get("reports", {}).items():
        ok = sum(1 for r in reps if r["pass"])
        lines.append(f"[{name}] {ok}/{len(reps)} pass")
        for r in reps:
            if not r["pass"]:
                lines.append(f"  FAIL {r['law']}: {json.dumps(r['witness'], ensure_ascii=False, sort_keys=True)}")
    for k, v in sorted(rep.get("results", {}).items()):
        lines.append(f"{k}: {json.dumps(v, ensure_ascii=False, sort_keys=True)}")
    for a in rep.get("artifacts", []):
        lines.append(f"wrote {a}")
    if rep.get("error"):
        lines.append(f"error: {rep['error']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# io helpers


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _read_json(path: str):
    return json.loads(_read_text(path))


def _write(path: str | None, text: str, rep: Report | None = None):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")
    if rep is not None:
        rep.artifacts.append(path)


def _field_opt(value: str | None):
    return None if value is None else field_from_name(value)


def _prepare(H: core.AlgebraicStructure) -> core.AlgebraicStructure:
    """Ensure divisions/antipodes are present (deriving them when the file omits them) and classify."""
    if H.ldiv is None or H.rdiv is None:
        return core.complete(H)
    opts = {}
    if H.lantipode is None:
        opts["lantipode"] = compose(H.ldiv, tensor(H.id(), H.unit))
    if H.rantipode is None:
        opts["rantipode"] = compose(H.rdiv, tensor(H.unit, H.id()))
    if opts:
        H = H.with_(**opts)
    core.classify(H)
    return H


def _load_structure(path: str, fld, rep: Report, prepare: bool = True) -> core.AlgebraicStructure:
    H = serial.structure_from_json(_read_json(path), fld)
    if prepare:
        H = _prepare(H)
    rep.add_input(H.name, H.dim)
    return H


def _parse_alpha(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        raise click.BadParameter(f"{text!r} is not an exact rational") from None


def _emit(rep: Report, report_path: str | None, artifact_to_stdout: bool):
    text = serial.dumps(rep.to_json())
    if report_path is not None and report_path != "-":
        Path(report_path).write_text(text, encoding="utf-8")
    elif artifact_to_stdout:
        sys.stderr.write(text)
    else:
        sys.stdout.write(text)


def _run(body, *, report_path=None, out=None):
    """Run a command body against a fresh report and exit with its status."""
    rep = Report(sys.argv[1:])
    try:
        body(rep)
    except core.LawFails as exc:
        rep.fail(exc)
    except (core.NotConvInvertible, core.OneSidedOnly, core.NoDivision, NotInvertible,
            pairing_mod.InverseMismatch, pairing_mod.AntipodeNotInvertible) as exc:
        rep.failed = True
        rep.results["failure"] = {"context": type(exc).__name__, "message": str(exc)}
    except INPUT_ERRORS as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
    _emit(rep, report_path, artifact_to_stdout=(out == "-"))
    sys.exit(rep.exit_code)


field_option = click.option("--field", "field_name", default=None, help="q (rationals, default) or p/<prime>.")
report_option = click.option("--report", "report_path", default=None, help="Write the report here instead of stdout.")


def out_option(default=None):
    return click.option("-o", "--out", default=default, help="Artifact path; '-' for stdout.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact")
def main():
    """Exact verification of Hopf quasigroup constructions."""


# ---------------------------------------------------------------------------
# verify


@main.command()
@click.argument("structure")
@click.option("--suite", "suites", multiple=True, default=("hqg",), show_default=True)
@click.option("--stop-on-failure", is_flag=True)
@field_option
@report_option
def verify(structure, suites, stop_on_failure, field_name, report_path):
    """Run law suites on a structure file ('-' reads stdin)."""

    def body(rep):
        H = _load_structure(structure, _field_opt(field_name), rep, prepare=False)
        for s in suites:
            rep.section(s, laws.verify_suite(H, s, stop_on_failure=stop_on_failure))
        rep.results["verified"] = sorted(H.verified)

    _run(body, report_path=report_path)


# ---------------------------------------------------------------------------
# loops


@main.group()
def loop():
    """Loop tables: classify, build the loop algebra, or double a group."""


@loop.command("classify")
@click.argument("table")
@report_option
def loop_classify(table, report_path):
    def body(rep):
        L = loops.parse_loop(_read_text(table))
        rep.add_input(table, L.order, kind="loop")
        rep.results["classification"] = loops.classify_loop(L).to_json()

    _run(body, report_path=report_path)


@loop.command("algebra")
@click.argument("table")
@click.option("--require", "require", default=None, help="Fail unless this class is verified (e.g. hqg).")
@field_option
@out_option()
@report_option
def loop_algebra(table, require, field_name, out, report_path):
    def body(rep):
        L = loops.parse_loop(_read_text(table))
        rep.add_input(table, L.order, kind="loop")
        fld = _field_opt(field_name) or field_from_name("q")
        H = loops.loop_algebra(L, fld, name=Path(table).stem if table != "-" else "K[L]")
        rep.results["verified"] = sorted(H.verified)
        rep.results["class"] = H.declared
        if require is not None and require not in H.verified:
            rep.failed = True
            rep.section(require, laws.verify_suite(H, require))
        if out is not None:
            _write(out, serial.dumps(serial.structure_to_json(H)), rep)

    _run(body, report_path=report_path, out=out)


@loop.command("chein")
@click.argument("table")
@out_option()
@report_option
def loop_chein(table, out, report_path):
    def body(rep):
        G = loops.parse_loop(_read_text(table))
        rep.add_input(table, G.order, kind="loop")
        M = loops.chein_double(G)
        rep.results["classification"] = loops.classify_loop(M).to_json()
        if out is not None:
            _write(out, loops.format_loop(M), rep)

    _run(body, report_path=report_path, out=out)


# ---------------------------------------------------------------------------
# deformation


@main.command()
@click.argument("structure")
@click.argument("cocycle")
@click.option("--auto-normalize", is_flag=True)
@field_option
@out_option()
@report_option
def deform(structure, cocycle, auto_normalize, field_name, out, report_path):
    """Deform a structure by a two-cocycle given as a functional file."""

    def body(rep):
        fld = _field_opt(field_name)
        H = _load_structure(structure, fld, rep)
        sigma = serial.functional_from_json(_read_json(cocycle), H.space, H.space, fld or H.field)
        rep.add_input(cocycle, kind="functional")
        cyc = deform_mod.make_cocycle(H, sigma, auto_normalize=auto_normalize)
        rep.section("cocycle", cyc.reports)
        rep.section("cocycle-consequences", deform_mod.cocycle_consequences(cyc))
        S = deform_mod.deform(H, cyc)
        rep.section("deformation", deform_mod.deformation_reports(H, S, cyc))
        rep.results["normalized"] = "original_sigma" in cyc.provenance
        rep.results["verified"] = sorted(S.verified)
        rep.results["product-changed"] = S.mul != H.mul
        if out is not None:
            _write(out, serial.dumps(serial.structure_to_json(S)), rep)

    _run(body, report_path=report_path, out=out)


# ---------------------------------------------------------------------------
# pairings


def _load_pairing(A_path, H_path, tau_path, fld, rep):
    A = _load_structure(A_path, fld, rep)
    H = _load_structure(H_path, fld, rep)
    tau = serial.functional_from_json(_read_json(tau_path), A.space, H.space, fld or A.field)
    rep.add_input(tau_path, kind="functional")
    return pairing_mod.make_skew_pairing(A, H, tau)


@main.command()
@click.argument("action", type=click.Choice(["check", "invert", "cocycle", "bowtie"]))
@click.argument("A")
@click.argument("H")
@click.argument("tau")
@field_option
@out_option()
@report_option
def pairing(action, a, h, tau, field_name, out, report_path):
    """Skew pairings: validate, invert, turn into ω, or build A⋈H."""

    def body(rep):
        p = _load_pairing(a, h, tau, _field_opt(field_name), rep)
        rep.section("skew-pairing", p.reports)
        rep.section("skew-pairing-consequences", pairing_mod.pairing_consequences(p))
        rep.results["tau-self-inverse"] = p.tau == p.tau_inv
        if action == "check":
            return
        if action == "invert":
            art = serial.functional_to_json(p.tau_inv, "A⊗H")
        elif action == "cocycle":
            om = pairing_mod.pairing_to_cocycle(p)
            rep.section("cocycle", om.reports)
            rep.results["omega-self-inverse"] = om.sigma == om.sigma_inv
            art = serial.functional_to_json(om.sigma, "A⊗H")
        else:
            B = pairing_mod.bowtie(p)
            rep.results["verified"] = sorted(B.verified)
            art = serial.structure_to_json(B)
        if out is not None:
            _write(out, serial.dumps(art), rep)

    _run(body, report_path=report_path, out=out)


@main.command()
@click.argument("A")
@click.argument("H")
@click.argument("tau")
@field_option
@out_option()
@report_option
def dcp(a, h, tau, field_name, out, report_path):
    """Double crossproduct from the actions induced by a skew pairing."""

    def body(rep):
        p = _load_pairing(a, h, tau, _field_opt(field_name), rep)
        acts = pairing_mod.actions_from_pairing(p)
        for k, v in pairing_mod.action_reports(p.A, p.H, acts).items():
            rep.section(k, v)
        X, majid = pairing_mod.double_cross_product(p.A, p.H, acts, pairing=p)
        rep.section("majid-left", majid.left)
        rep.section("majid-right", majid.right)
        rep.results["verified"] = sorted(X.verified)
        rep.results["equals-bowtie"] = X.provenance["equals_bowtie"]
        rep.failed |= not X.provenance["equals_bowtie"]
        if out is not None:
            _write(out, serial.dumps(serial.structure_to_json(X)), rep)

    _run(body, report_path=report_path, out=out)


# ---------------------------------------------------------------------------
# quasitriangular structures and projections


@main.group()
def qt():
    """Quasitriangular structures, projections, splitting and biproducts."""


def _resolve_R(H, R_path, alpha, fld, rep):
    if alpha is not None:
        R = catalog.r_alpha_map(H, _parse_alpha(alpha))
        if R_path is not None:
            given = serial.element_from_json(_read_json(R_path), H.space, field=fld or H.field)
            rep.add_input(R_path, kind="element")
            if given.retyped(R.domain, R.codomain) != R:
                raise ValueError(f"{R_path} is not R_α for α = {alpha}")
        rep.results["alpha"] = str(_parse_alpha(alpha))
        return R
    if R_path is None:
        raise click.UsageError("give an R file or --alpha")
    rep.add_input(R_path, kind="element")
    return serial.element_from_json(_read_json(R_path), H.space, field=fld or H.field)


@qt.command("check")
@click.argument("H")
@click.argument("R", required=False)
@click.option("--alpha", default=None, help="Use R_α on the Taft algebra.")
@field_option
@report_option
def qt_check(h, r, alpha, field_name, report_path):
    def body(rep):
        fld = _field_opt(field_name)
        H = _load_structure(h, fld, rep)
        R = _resolve_R(H, r, alpha, fld, rep)
        rep.section("quasitriangular", laws.verify_suite(H, "quasitriangular", {"R": R}))

    _run(body, report_path=report_path)


@qt.command("project")
@click.argument("A")
@click.argument("H")
@click.argument("tau")
@click.argument("R", required=False)
@click.option("--alpha", default=None, help="Use R_α; a given R file must agree with it.")
@field_option
@out_option("projection.json")
@report_option
def qt_project(a, h, tau, r, alpha, field_name, out, report_path):
    """Strong projection A⋈H -> H and its bundle."""

    def body(rep):
        fld = _field_opt(field_name)
        p = _load_pairing(a, h, tau, fld, rep)
        R = _resolve_R(p.H, r, alpha, fld, rep)
        q = qtyd.make_quasitriangular(p.H, R)
        rep.section("quasitriangular", q.reports)
        proj = qtyd.projection_from_pairing(p, q)
        for k, v in proj.reports.items():
            rep.section(k, v)
        source = {
            "A": serial.structure_to_json(p.A),
            "tau": serial.functional_to_json(p.tau, "A⊗H"),
            "R": serial.element_to_json(q.R),
        }
        _write(out, serial.dumps(serial.projection_to_json(proj, source)), rep)

    _run(body, report_path=report_path, out=out)


def _load_projection(bundle, fld, rep):
    d = _read_json(bundle)
    rep.add_input(bundle, kind="projection")
    src = d.get("source")
    if not src:
        return serial.projection_from_json(d, fld)
    fld = fld or field_from_name(d.get("field", "q"))
    A = _prepare(serial.structure_from_json(src["A"], fld))
    H = _prepare(serial.structure_from_json(d["H"], fld))
    B = _prepare(serial.structure_from_json(d["B"], fld))
    tau = serial.functional_from_json(src["tau"], A.space, H.space, fld)
    R = serial.element_from_json(src["R"], H.space, field=fld)
    p = pairing_mod.make_skew_pairing(A, H, tau)
    return qtyd.projection_from_pairing(p, qtyd.make_quasitriangular(H, R), B)


def _split_sections(rep, sp):
    for k, v in sp.reports.items():
        rep.section(k, v, required=(k != "product-comparison"))
    rep.results["product-is-original"] = laws.all_pass(sp.reports.get("product-comparison", []) or [False])


@qt.command("split")
@click.argument("bundle")
@field_option
@out_option()
@report_option
def qt_split(bundle, field_name, out, report_path):
    """Extract the braided Hopf quasigroup carried by a saved projection."""

    def body(rep):
        proj = _load_projection(bundle, _field_opt(field_name), rep)
        sp = qtyd.split_to_yd(proj)
        _split_sections(rep, sp)
        rep.results["verified"] = sorted(sp.D.verified)
        if out is not None:
            art = {
                "kind": "yetter-drinfeld",
                "D": serial.structure_to_json(sp.D),
                "phi": serial.map_entries(sp.module.phi),
                "rho": serial.map_entries(sp.module.rho),
            }
            _write(out, serial.dumps(art), rep)

    _run(body, report_path=report_path, out=out)


@qt.command("biproduct")
@click.argument("bundle")
@field_option
@out_option()
@report_option
def qt_biproduct(bundle, field_name, out, report_path):
    """Rebuild D⋊H from a saved projection and compare it with B through w."""

    def body(rep):
        proj = _load_projection(bundle, _field_opt(field_name), rep)
        sp = qtyd.split_to_yd(proj)
        _split_sections(rep, sp)
        X = qtyd.biproduct(sp.D, proj.H, sp.module)
        rep.results["verified"] = sorted(X.verified)
        iso = qtyd.iso_w(proj, X)
        rep.section("isomorphism", iso.reports)
        if out is not None:
            _write(out, serial.dumps(serial.structure_to_json(X)), rep)

    _run(body, report_path=report_path, out=out)


# ---------------------------------------------------------------------------
# builtins and reports


@main.command()
@click.argument("key", type=click.Choice(catalog.BUILTINS))
@click.option("--alpha", default="0", show_default=True, help="α for r-alpha.")
@click.option("-n", "order", default=2, show_default=True, help="Order for cyclic.")
@field_option
@out_option("-")
def builtin(key, alpha, order, field_name, out):
    """Export a builtin object (structure, functional, element or loop text)."""
    try:
        fld = _field_opt(field_name) or field_from_name("q")
        if key == "taft4":
            text = serial.dumps(serial.structure_to_json(catalog.taft4(fld)))
        elif key == "ms32-algebra":
            text = serial.dumps(serial.structure_to_json(catalog.ms32_algebra(fld)))
        elif key == "tau-sign":
            text = serial.dumps(serial.functional_to_json(catalog.tau_sign(fld).tau, "A⊗H"))
        elif key == "r-alpha":
            text = serial.dumps(serial.element_to_json(catalog.r_alpha(_parse_alpha(alpha), catalog.taft4(fld)).R))
        else:
            text = loops.format_loop(catalog.builtin(key, n=order))
    except core.LawFails as exc:
        click.echo(f"builtin {key} failed its own checks: {exc}", err=True)
        sys.exit(1)
    except INPUT_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _write(out, text)


@main.command()
@click.argument("path")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
def report(path, fmt):
    """Render a saved report; exits with the status recorded in it."""
    try:
        rep = _read_json(path)
        code = int(rep["exit"])
    except (OSError, ValueError, KeyError) as exc:
        click.echo(f"error: unreadable report: {exc}", err=True)
        sys.exit(2)
    sys.stdout.write(serial.dumps(rep) if fmt == "json" else render_text(rep))
    sys.exit(code)


if __name__ == "__main__":
    main()
