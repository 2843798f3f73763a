"""Verification reports: run the check batteries and serialize them deterministically."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .coalgebra import (
    CosplitKind,
    check_anticocommutativity,
    check_cojacobi,
    classify_cosplit,
    cobracket_equivariance_residual,
    composite_matrix,
    delta_sl,
)
from .duality import (
    adjoint_factorization_check,
    double_dual_composite,
    dual_jacobi_holds,
    dualize,
    form_B,
    iso_B_check,
    killing_form,
    proportionality,
    trace_form,
)
from .errors import CosplitError
from .exact import format_rational
from .lie_matrix import derived_algebra_is_full, sl_basis
from .restriction import (
    adjoint_factorization_res_check,
    complement_is_submodule,
    cosplit_scalar_direct,
    cosplit_scalar_formula,
    delta_res,
    embed_classical,
    root_datum,
)

SCHEMA = "cosplit-report/1"

SL_SIZES = (2, 3, 4, 5, 6)
CLASSICAL_TARGETS = (("B", 1), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4))


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "error"
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerificationReport:
    target: dict
    checks: list[CheckResult] = field(default_factory=list)
    scalars: list[tuple[str, Fraction]] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def run(self, name: str, fn: Callable[[], tuple[bool, str] | bool]) -> None:
        t0 = time.perf_counter()
        try:
            out = fn()
            ok, detail = out if isinstance(out, tuple) else (out, "")
            self.checks.append(CheckResult(name, "pass" if ok else "fail", detail))
        except CosplitError as exc:
            self.checks.append(CheckResult(name, "error", f"{type(exc).__name__}: {exc}"))
        self.timing[name] = round((time.perf_counter() - t0) * 1000, 3)

    def scalar(self, name: str, value: Fraction) -> None:
        self.scalars.append((name, value))

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "target": self.target,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "scalars": [{"name": n, "value": format_rational(v)} for n, v in self.scalars],
        }
        if timing:
            out["timing"] = dict(self.timing)
        return out

    def to_text(self, timing: bool = True) -> str:
        t = self.target
        head = f"target: {t['family']}{t['rank']} in sl_{t['ambient']}"
        lines = [head]
        for c in self.checks:
            ms = f"  ({self.timing[c.name]:.1f} ms)" if timing and c.name in self.timing else ""
            detail = f"  {c.detail}" if c.detail else ""
            lines.append(f"  {c.status.upper():5} {c.name}{detail}{ms}")
        for n, v in self.scalars:
            lines.append(f"  {n} = {format_rational(v)}")
        lines.append(f"  => {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def verify_sl(m: int) -> VerificationReport:
    """Run all checks for sl_m with its cobracket."""
    alg = sl_basis(m)
    delta = delta_sl(m)
    rep = VerificationReport({"family": "A", "rank": m - 1, "ambient": m})

    def anti():
        c = check_anticocommutativity(delta)
        return c.ok, "" if c.ok else f"witness {c.witness}"

    def cojac():
        c = check_cojacobi(delta)
        return c.ok, "" if c.ok else f"witness {c.witness}"

    verdict = {}

    def cosplit():
        v = classify_cosplit(alg, delta)
        verdict["v"] = v
        return v.kind is CosplitKind.COSPLIT, v.kind.value

    def killing():
        r = proportionality(form_B(m), killing_form(alg))
        if r is None:
            return False, "not proportional"
        rep.scalar("killing_ratio", r)
        return r == Fraction(1, 2 * m), f"ratio {format_rational(r)}"

    def equivariant():
        e = cobracket_equivariance_residual(alg, delta)
        return e.equivariant, "" if e.equivariant else f"witness {list(e.witness)}"

    def injective():
        return cobracket_equivariance_residual(alg, delta).injective

    def derived():
        v = verdict.get("v")
        full = derived_algebra_is_full(alg)
        if v is not None and v.kind is CosplitKind.COSPLIT:
            return full, "required by co-split"
        return full, ""

    def roundtrip():
        res = dualize(alg, delta)
        ok = res.verdict.kind in (CosplitKind.COSPLIT, CosplitKind.WEAK)
        same = double_dual_composite(alg, delta) == composite_matrix(alg, delta)
        return ok and same, f"dual verdict {res.verdict.kind.value}"

    rep.run("coalgebra_anticocommutative", anti)
    rep.run("coalgebra_cojacobi", cojac)
    rep.run("cosplit_identity", cosplit)
    if "v" in verdict and verdict["v"].kind is CosplitKind.COSPLIT:
        rep.scalar("c_cosplit", Fraction(1))
    rep.run("dual_bracket_jacobi", lambda: dual_jacobi_holds(m))
    rep.run("dual_iso_B", lambda: iso_B_check(m))
    rep.run("form_B_is_trace_form", lambda: form_B(m).gram == trace_form(alg).gram)
    rep.run("killing_proportional", killing)
    rep.run("adjoint_factorization", lambda: adjoint_factorization_check(m))
    rep.run("cobracket_equivariant", equivariant)
    rep.run("cobracket_injective", injective)
    rep.run("derived_algebra_full", derived)
    rep.run("dualize_roundtrip", roundtrip)
    return rep


def verify_classical(family: str, l: int) -> VerificationReport:
    """Run all checks for a classical algebra embedded in sl_m."""
    emb = embed_classical(family, l)
    rep = VerificationReport({"family": family, "rank": l, "ambient": emb.size})
    state: dict = {}

    def embedding():
        return (
            emb.dim + emb.complement_dim == emb.ambient.dim,
            f"dim {emb.dim}, complement dim {emb.complement_dim}",
        )

    def orthogonal():
        return all((x @ y).trace() == 0 for x in emb.sub_basis for y in emb.comp_basis)

    def containment():
        d = delta_res(emb)
        state["d"] = d
        return d.containment, "" if d.containment else f"witness {d.witness}"

    def dres():
        if "d" not in state:
            state["d"] = delta_res(emb)
        return state["d"]

    def anti():
        c = check_anticocommutativity(dres().cobracket)
        return c.ok, "" if c.ok else f"witness {c.witness}"

    def cojac():
        c = check_cojacobi(dres().cobracket)
        return c.ok, "" if c.ok else f"witness {c.witness}"

    def equivariant():
        e = cobracket_equivariance_residual(emb.sub, dres().cobracket)
        return e.equivariant, "" if e.equivariant else f"witness {list(e.witness)}"

    def scalar():
        direct = cosplit_scalar_direct(emb, dres())
        rd = root_datum(emb)
        formula = cosplit_scalar_formula(emb, rd)
        state["c"] = direct
        rep.scalar("c_direct", direct)
        rep.scalar("c_formula", formula)
        return direct == formula and direct > 0, (
            f"{len(rd.roots)} roots, {len(rd.positive)} positive"
        )

    def rescaled():
        c = state.get("c")
        if c is None:
            c = cosplit_scalar_direct(emb, dres())
        v = classify_cosplit(emb.sub, dres().cobracket.scale(1 / c))
        return v.kind is CosplitKind.COSPLIT, v.kind.value

    rep.run("embedding_direct_sum", embedding)
    rep.run("complement_orthogonal", orthogonal)
    rep.run("complement_submodule", lambda: complement_is_submodule(emb))
    rep.run("delta_res_containment", containment)
    rep.run("delta_res_anticocommutative", anti)
    rep.run("delta_res_cojacobi", cojac)
    rep.run("delta_res_equivariant", equivariant)
    rep.run("cosplit_scalar_agree", scalar)
    rep.run("rescaled_cosplit", rescaled)
    rep.run("restricted_adjoint_factorization", lambda: adjoint_factorization_res_check(emb, dres()))
    return rep


@dataclass
class SuiteReport:
    reports: list[VerificationReport]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self, timing: bool = True) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "suite",
            "passed": self.passed,
            "targets": len(self.reports),
            "reports": [r.to_json(timing) for r in self.reports],
        }

    def to_text(self, timing: bool = True) -> str:
        body = "\n".join(r.to_text(timing) for r in self.reports)
        return f"{body}\nsuite: {len(self.reports)} targets, {'PASS' if self.passed else 'FAIL'}"


def run_suite(max_size: int = 8) -> SuiteReport:
    reports = [verify_sl(m) for m in SL_SIZES if m <= max_size]
    reports += [verify_classical(f, l) for f, l in CLASSICAL_TARGETS]
    return SuiteReport(reports)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
