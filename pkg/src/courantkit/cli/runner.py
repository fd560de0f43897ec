"""Command dispatch: each command of a document yields a report and printed values."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..atiyah import symplectic, verify_poisson_iso
from ..cocycle import LocalData1, LocalData2, verify_triv_2form, verify_triv_3form
from ..courant import (SplitCourantModel, anchor, curvature, preserves_splitting, twisted_courant,
                       verify_courant_axioms)
from ..errors import CourantKitError, NotHamiltonian
from ..exterior import d, form_eval, iota, vf_bracket
from ..extension import verify_coboundary_relation
from ..lie2 import check_morphism
from ..morphisms import main_pair
from ..plectic import (CertifiedEverywhere, DegenerateAt, GenericOnly, PlecticStructure, hamiltonian_vf,
                       jacobiator_J, semi_bracket, verify_calculus, verify_semibracket)
from ..report import Report
from ..suites import SuiteConfig, run_suite
from .document import Command, Document
from .parser import parse


@dataclass
class CommandResult:
    command: Command
    report: Report
    values: list[str] = field(default_factory=list)


class CommandError(CourantKitError):
    pass


def _cid(cmd: Command, n_key: int) -> str:
    key = ".".join(cmd.words[:n_key])
    args = cmd.words[n_key:]
    return f"{key}[{','.join(args)}]" if args else key


class Runner:
    def __init__(self, doc: Document, suite_config: SuiteConfig = SuiteConfig()):
        self.doc = doc
        self.suite_config = suite_config

    # --- context ------------------------------------------------------
    def obj(self, name):
        return self.doc.objects[name]

    def structure(self) -> PlecticStructure:
        if self.doc.structure is None:
            raise CommandError("the document declares no structure")
        return PlecticStructure(self.doc.chart, self.obj(self.doc.structure))

    def model(self) -> SplitCourantModel:
        if self.doc.structure is None:
            return SplitCourantModel.standard(self.doc.chart)
        omega = self.obj(self.doc.structure)
        if omega.degree != 3:
            raise CommandError("a Courant twist is a 3-form")
        return SplitCourantModel(self.doc.chart, omega)

    # --- dispatch -----------------------------------------------------
    def run(self, cmd: Command, index: int = 0) -> CommandResult:
        w = cmd.words
        head = w[0] if w[0] != "verify" else "verify-" + w[1]
        handler = getattr(self, "do_" + head.replace("-", "_"), None)
        res = CommandResult(cmd, Report(cmd.text))
        n_key = 2 if w[0] == "verify" else 1
        if head == "verify-morphism":
            n_key = 3
        try:
            if handler is None:
                raise CommandError(f"no handler for {cmd.text!r}")
            handler(res, _cid(cmd, n_key), *w[n_key:], index=index)
        except Exception as exc:  # module errors become FAIL entries, not crashes
            res.report.record(_cid(cmd, n_key), "command completed", False, _error_text(exc))
        return res

    def do_check_nplectic(self, res, cid, name, index=0):
        omega = self.obj(name)
        r = res.report
        dw = d(omega)
        r.check(cid + ".closed", "d omega = 0", dw)
        if not dw.is_zero():
            return
        verdict = PlecticStructure(self.doc.chart, omega).verdict
        anchor_text = "i_v omega = 0 implies v = 0"
        if isinstance(verdict, CertifiedEverywhere):
            res.values.append(f"verdict = certified everywhere (constant minor {verdict.minor})")
            r.record(cid + ".nondegenerate", anchor_text, True)
        elif isinstance(verdict, GenericOnly):
            res.values.append(f"verdict = generic only (minor {verdict.minor})")
            r.record(cid + ".nondegenerate", anchor_text + " off the zero set of a minor", True)
        else:
            pt = "(" + ", ".join(map(str, verdict.point)) + ")"
            r.record(cid + ".nondegenerate", anchor_text, False, f"kernel {verdict.kernel} at {pt}")

    def do_hamiltonian(self, res, cid, name, index=0):
        P, alpha = self.structure(), self.obj(name)
        try:
            v = hamiltonian_vf(P, alpha)
        except NotHamiltonian as exc:
            res.report.record(cid, "d alpha = -i_v omega", False, str(exc.residual))
            return
        res.values.append(f"v_{name} = {v}")
        res.report.check(cid, "d alpha = -i_v omega", lambda: d(alpha) + iota(v, P.omega))

    def do_bracket(self, res, cid, a, b, index=0):
        ka, kb = self.doc.kind(a), self.doc.kind(b)
        A, B = self.obj(a), self.obj(b)
        r = res.report
        if ka != kb:
            raise CommandError(f"cannot bracket a {ka} with a {kb}")
        if ka in ("form", "function"):
            P = self.structure()
            value = semi_bracket(P, A, B)
            res.values.append(f"{{{a}, {b}}} = {value}")
            va, vb = hamiltonian_vf(P, A), hamiltonian_vf(P, B)
            r.check(cid + ".hamiltonian", "d{a, b} = -i_[v_a, v_b] omega",
                    lambda: d(value) + iota(vf_bracket(va, vb), P.omega))
        elif ka == "section":
            model = self.model()
            value = twisted_courant(model, A, B)
            res.values.append(f"[{a}, {b}] = {value}")
            r.check(cid + ".anchor", "rho[e1, e2] = [rho e1, rho e2]",
                    lambda: anchor(value), lambda: vf_bracket(anchor(A), anchor(B)))
        else:
            value = vf_bracket(A, B)
            res.values.append(f"[{a}, {b}] = {value}")
            r.check(cid + ".skew", "[v, w] = -[w, v]", lambda: value + vf_bracket(B, A))

    def do_jacobiator(self, res, cid, a, b, c, index=0):
        P = self.structure()
        A, B, C = (self.obj(n) for n in (a, b, c))
        J = jacobiator_J(P, A, B, C)
        res.values.append(f"J({a}, {b}, {c}) = {J}")
        br = lambda s, t: semi_bracket(P, s, t)
        res.report.check(cid, "[a,[b,c]] - [[a,b],c] - [b,[a,c]] = dJ",
                         lambda: br(A, br(B, C)) - br(br(A, B), C) - br(B, br(A, C)), lambda: d(J))

    def do_verify_semibracket(self, res, cid, a, b, c, index=0):
        res.report.extend(verify_semibracket(self.structure(), *(self.obj(n) for n in (a, b, c))))

    def do_verify_calculus(self, res, cid, a, b, c, index=0):
        res.report.extend(verify_calculus(self.structure(), *(self.obj(n) for n in (a, b, c))))

    def do_verify_courant_axioms(self, res, cid, e1, e2, e3, f, g, index=0):
        res.report.extend(verify_courant_axioms(self.model(), *(self.obj(n) for n in (e1, e2, e3, f, g))))

    def do_curvature(self, res, cid, v1, v2, v3, index=0):
        model = self.model()
        vs = [self.obj(n) for n in (v1, v2, v3)]
        value = curvature(model, *vs)
        res.values.append(f"curvature({v1}, {v2}, {v3}) = {value}")
        res.report.check(cid, "<[s v1, s v2], s v3> = -omega(v1, v2, v3)",
                         value, lambda: -form_eval(model.twist, vs))

    def do_preserves(self, res, cid, e, index=0):
        verdict = preserves_splitting(self.model(), self.obj(e))
        res.values.append(f"{e} preserves the splitting: {'yes' if verdict else 'no'}")
        res.report.record(cid, "d alpha + i_v omega = 0", bool(verdict),
                          "0" if verdict else str(verdict.certificate))

    def do_verify_morphism(self, res, cid, a, b, c, index=0):
        P = self.structure()
        mor, src, tgt = main_pair(P, self.model())
        res.report.extend(check_morphism(mor, src, tgt, *(self.obj(n) for n in (a, b, c))))

    def do_verify_extension(self, res, cid, x, y, v1, v2, v3, index=0):
        P = self.structure()
        pts = self.doc.points
        res.report.extend(verify_coboundary_relation(P, pts[x], pts[y], *(self.obj(n) for n in (v1, v2, v3))))

    def _cover(self, name, degree):
        spec = self.doc.covers[name]
        omega = spec.omega
        if omega is None and self.doc.structure is not None:
            omega = self.obj(self.doc.structure)
        if omega is None or omega.degree != degree:
            raise CommandError(f"cover {name!r} needs a closed {degree}-form (omega = ... or a structure)")
        return spec, omega

    def do_verify_cocycle2(self, res, cid, name, index=0):
        spec, omega = self._cover(name, 2)
        if not isinstance(spec.data, LocalData1):
            raise CommandError(f"cover {name!r} carries 2-form data (B, A); use cocycle3")
        res.report.extend(verify_triv_2form(spec.cover, omega, spec.data, spec.mode or "real"))

    def do_verify_cocycle3(self, res, cid, name, index=0):
        spec, omega = self._cover(name, 3)
        if not isinstance(spec.data, LocalData2):
            raise CommandError(f"cover {name!r} carries 1-form data (theta); use cocycle2")
        res.report.extend(verify_triv_3form(spec.cover, omega, spec.data, spec.mode or "circle"))

    def do_verify_atiyah(self, res, cid, f, g, index=0):
        P = symplectic(self.structure())
        res.report.extend(verify_poisson_iso(P, self.obj(f), self.obj(g)))

    def do_suite(self, res, cid, name, count=None, index=0):
        cfg = self.suite_config
        if count is not None:
            cfg = SuiteConfig(cfg.seed, int(count), cfg.max_degree)
        res.values.append(f"seed = {cfg.seed}, count = {cfg.count}, max degree = {cfg.max_degree}")
        res.report.extend(run_suite(name, cfg), prefix=f"suite.{name}.")


def _error_text(exc: Exception) -> str:
    residual = getattr(exc, "residual", None)
    if residual is not None:
        return f"{type(exc).__name__}: {residual}"
    return f"error: {type(exc).__name__}: {exc}"


def _run_one(args):
    text, index, cfg = args
    doc = parse(text)
    res = Runner(doc, cfg).run(doc.commands[index], index)
    res.report.witnesses.clear()
    return res


def run(doc: Document, suite_config: SuiteConfig = SuiteConfig(), jobs: int = 1,
        source: str | None = None) -> list[CommandResult]:
    """Run every command in document order.  With jobs > 1 commands are
    evaluated in worker processes; results keep document order."""
    if jobs > 1 and len(doc.commands) > 1:
        text = source if source is not None else str(doc)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, [(text, i, suite_config) for i in range(len(doc.commands))]))
    runner = Runner(doc, suite_config)
    return [runner.run(cmd, i) for i, cmd in enumerate(doc.commands)]


def all_passed(results: list[CommandResult]) -> bool:
    return all(r.report.ok for r in results)


def render(results: list[CommandResult], machine: bool = False) -> str:
    lines = []
    for res in results:
        if machine:
            lines.extend(c.machine_line() for c in res.report.checks)
            continue
        lines.append(f"== {res.command.text}")
        lines.extend(f"   {v}" for v in res.values)
        lines.extend(c.human_line() for c in res.report.checks)
    return "\n".join(lines) + ("\n" if lines else "")
