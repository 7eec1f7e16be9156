"""Cross-checked obstruction reports.

A singularity description is dispatched to every realization route that
applies to it: the discriminant group of the exceptional lattice, the
torsion of the link homology, and the torsion cokernel of the integral
variation map.  The routes are computed independently and compared; the
report carries each result with its provenance and a compatibility
verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Union

from .exact import FiniteAbelianGroup, ValidationError, determinant
from .graphs import ResolutionGraph, Vertex, ade_graph, hirzebruch_jung
from .lattice import Lattice
from .links import brieskorn_h1_order, lens_space_h1, link_from_plumbing
from .monodromy import brieskorn_pham_operator, coxeter_operator, variation


class SpecError(ValidationError):
    """A singularity description failed validation."""


# ---------------------------------------------------------------------------
# singularity descriptions


@dataclass(frozen=True)
class AdeSpec:
    """Rational double point of type A_n, D_n or E_n."""

    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("A", "D", "E"):
            raise SpecError(f"type must be 'A', 'D' or 'E', got {self.kind!r}")
        if self.kind == "A" and self.n < 1:
            raise SpecError(f"A requires n >= 1, got n={self.n}")
        if self.kind == "D" and self.n < 4:
            raise SpecError(f"D requires n >= 4, got n={self.n}")
        if self.kind == "E" and self.n not in (6, 7, 8):
            raise SpecError(f"E requires n in (6, 7, 8), got n={self.n}")

    def describe(self) -> str:
        return f"{self.kind}_{self.n}"


@dataclass(frozen=True)
class CyclicQuotientSpec:
    """Cyclic quotient singularity of type (n, q)."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise SpecError(f"n must be >= 2, got n={self.n}")
        if not (1 <= self.q < self.n):
            raise SpecError(f"q must satisfy 1 <= q < n, got q={self.q}")
        if gcd(self.n, self.q) != 1:
            raise SpecError(f"n and q must be coprime, got ({self.n}, {self.q})")

    def describe(self) -> str:
        return f"C^2/(1/{self.n})(1,{self.q})"


@dataclass(frozen=True)
class BrieskornPhamSpec:
    """Hypersurface germ x^a + y^b + z^c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            x = getattr(self, name)
            if x < 2:
                raise SpecError(f"{name} must be >= 2, got {name}={x}")

    @property
    def pairwise_coprime(self) -> bool:
        return (gcd(self.a, self.b) == 1 and gcd(self.a, self.c) == 1
                and gcd(self.b, self.c) == 1)

    def describe(self) -> str:
        return f"x^{self.a}+y^{self.b}+z^{self.c}"


@dataclass(frozen=True)
class PlumbingSpec:
    """User-supplied weighted dual graph."""

    graph: ResolutionGraph

    def describe(self) -> str:
        return f"plumbing({self.graph.vertex_count} vertices)"


SingularitySpec = Union[AdeSpec, CyclicQuotientSpec, BrieskornPhamSpec, PlumbingSpec]

ROUTES = ("resolution_lattice", "link_topology", "monodromy")


# ---------------------------------------------------------------------------
# realizations and the report


@dataclass(frozen=True)
class Realization:
    """One route's answer: a group, a bare order, or a reason it is out."""

    route: str
    status: str
    group: FiniteAbelianGroup | None = None
    order: int | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.route not in ROUTES:
            raise ValidationError(f"unknown route {self.route!r}")
        if self.status == "group":
            if self.group is None:
                raise ValidationError("group realization needs a group")
            if self.order != self.group.order:
                raise ValidationError("order field must match the group order")
        elif self.status == "order_only":
            if self.group is not None or self.order is None or self.order < 1:
                raise ValidationError("order-only realization needs a bare positive order")
        elif self.status == "not_applicable":
            if self.group is not None or self.order is not None or not self.note:
                raise ValidationError("inapplicable route carries only a reason")
        else:
            raise ValidationError(f"unknown status {self.status!r}")

    def value_str(self) -> str:
        if self.status == "group":
            return str(self.group)
        if self.status == "order_only":
            return f"order {self.order}"
        return "---"


VERDICTS = ("COMPATIBLE", "ORDER_ONLY_MATCH", "MISMATCH", "SINGLE_ROUTE")


@dataclass(frozen=True)
class ObstructionReport:
    """Every computed realization of the obstruction group, cross-checked."""

    spec: SingularitySpec
    realizations: tuple[Realization, ...]
    det_m: int | None
    det_t_minus_id: int | None
    verdict: str
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValidationError(f"unknown verdict {self.verdict!r}")
        if tuple(r.route for r in self.realizations) != ROUTES:
            raise ValidationError("realizations must cover every route in fixed order")

    def realization(self, route: str) -> Realization:
        for r in self.realizations:
            if r.route == route:
                return r
        raise KeyError(route)


def _verdict(realizations) -> tuple[str, tuple[str, ...]]:
    groups = [(r.route, r.group) for r in realizations if r.status == "group"]
    orders = [(r.route, r.order) for r in realizations if r.status == "order_only"]
    problems: list[str] = []
    for (ra, ga), (rb, gb) in combinations(groups, 2):
        if ga != gb:
            problems.append(f"{ra} gives {ga} but {rb} gives {gb}")
    for route, order in orders:
        for ra, ga in groups:
            if order != ga.order:
                problems.append(
                    f"{route} gives order {order} but {ra} gives {ga} (order {ga.order})")
    for (ra, oa), (rb, ob) in combinations(orders, 2):
        if oa != ob:
            problems.append(f"{ra} gives order {oa} but {rb} gives order {ob}")
    if problems:
        return "MISMATCH", tuple(problems)
    if len(groups) + len(orders) <= 1:
        return "SINGLE_ROUTE", ()
    if len(groups) >= 2:
        return "COMPATIBLE", ()
    return "ORDER_ONLY_MATCH", ()


def _monodromy_realizations(op) -> tuple[Realization, int | None, tuple[str, ...]]:
    """Variation data as a realization; the determinant is refused when
    the variation map is singular over Q."""
    var = variation(op)
    warnings: tuple[str, ...] = ()
    if var.kernel_rank > 0:
        det: int | None = None
        note = (f"torsion cokernel of (monodromy - id); determinant route refused: "
                f"(monodromy - id) is not rationally invertible "
                f"(kernel rank {var.kernel_rank})")
        warnings = (
            f"monodromy determinant route refused: (monodromy - id) is not "
            f"rationally invertible (kernel rank {var.kernel_rank})",
            f"link is not a rational homology sphere in degree 1 "
            f"(b1 = {var.kernel_rank})",
        )
    else:
        det = var.det_t_minus_id
        note = f"torsion cokernel of (monodromy - id), |det| = {abs(det)}"
    realization = Realization(
        route="monodromy",
        status="group",
        group=var.cokernel_torsion,
        order=var.cokernel_torsion.order,
        note=note,
    )
    return realization, det, warnings


def compute_report(spec: SingularitySpec) -> ObstructionReport:
    """Dispatch every applicable realization route and cross-check them.

    ADE germs run all three routes; cyclic quotients run the resolution
    and link routes; Brieskorn-Pham germs run the order-only Seifert link
    route (pairwise coprime exponents only) and the tensor monodromy
    route; raw plumbing graphs run the resolution and link routes.
    """
    warnings: list[str] = []
    det_m: int | None = None
    det_t: int | None = None

    if isinstance(spec, AdeSpec):
        graph = ade_graph(spec.kind, spec.n)
        m = graph.intersection_matrix()
        det_m = determinant(m)
        disc = Lattice(m).discriminant_group()
        res = Realization(
            route="resolution_lattice", status="group", group=disc, order=disc.order,
            note=f"discriminant group of the exceptional lattice, |det M| = {abs(det_m)}")
        if spec.kind == "A":
            lh = lens_space_h1(spec.n + 1, 1)
            link_note = f"H1 of the lens space L({spec.n + 1},1)"
        else:
            lh = link_from_plumbing(graph)
            link_note = "H1 torsion of the plumbed link boundary"
        link = Realization(
            route="link_topology", status="group", group=lh.h1_torsion,
            order=lh.h1_torsion.order, note=link_note)
        mono, det_t, extra = _monodromy_realizations(coxeter_operator(spec.kind, spec.n))
        warnings.extend(extra)
        realizations = (res, link, mono)

    elif isinstance(spec, CyclicQuotientSpec):
        hj = hirzebruch_jung(spec.n, spec.q)
        m = hj.graph.intersection_matrix()
        det_m = determinant(m)
        disc = Lattice(m).discriminant_group()
        res = Realization(
            route="resolution_lattice", status="group", group=disc, order=disc.order,
            note=(f"discriminant group of the chain {list(hj.fraction.terms)}, "
                  f"|det M| = {abs(det_m)}"))
        lh = lens_space_h1(spec.n, spec.q)
        link = Realization(
            route="link_topology", status="group", group=lh.h1_torsion,
            order=lh.h1_torsion.order,
            note=f"H1 of the lens space L({spec.n},{spec.q})")
        mono = Realization(
            route="monodromy", status="not_applicable",
            note="not applicable: a quotient germ is not a hypersurface, so no "
                 "integral monodromy model is defined")
        realizations = (res, link, mono)

    elif isinstance(spec, BrieskornPhamSpec):
        res = Realization(
            route="resolution_lattice", status="not_applicable",
            note="not applicable: no exceptional-graph generator for "
                 "Brieskorn-Pham exponents")
        if spec.pairwise_coprime:
            order = brieskorn_h1_order(spec.a, spec.b, spec.c)
            link = Realization(
                route="link_topology", status="order_only", order=order,
                note="Seifert order formula |ab+ac+bc-abc| for the Brieskorn link")
        else:
            link = Realization(
                route="link_topology", status="not_applicable",
                note="not applicable: the Seifert order formula needs pairwise "
                     "coprime exponents")
        mono, det_t, extra = _monodromy_realizations(
            brieskorn_pham_operator(spec.a, spec.b, spec.c))
        warnings.extend(extra)
        realizations = (res, link, mono)

    elif isinstance(spec, PlumbingSpec):
        m = spec.graph.intersection_matrix()
        lh = link_from_plumbing(spec.graph)  # raises unless negative definite
        det_m = determinant(m)
        disc = Lattice(m).discriminant_group()
        res = Realization(
            route="resolution_lattice", status="group", group=disc, order=disc.order,
            note=f"discriminant group of the plumbing lattice, |det M| = {abs(det_m)}")
        link = Realization(
            route="link_topology", status="group", group=lh.h1_torsion,
            order=lh.h1_torsion.order,
            note="H1 torsion of the plumbed link boundary")
        if lh.h1_free_rank > 0:
            warnings.append(
                f"link is not a rational homology sphere in degree 1 "
                f"(b1 = {lh.h1_free_rank})")
        mono = Realization(
            route="monodromy", status="not_applicable",
            note="not applicable: no integral monodromy model for a general "
                 "plumbing description")
        realizations = (res, link, mono)

    else:
        raise SpecError(f"unknown singularity description {spec!r}")

    verdict, problems = _verdict(realizations)
    warnings.extend(problems)
    return ObstructionReport(
        spec=spec,
        realizations=realizations,
        det_m=det_m,
        det_t_minus_id=det_t,
        verdict=verdict,
        warnings=tuple(warnings),
    )


# ---------------------------------------------------------------------------
# serialization

_SPEC_FIELDS = {
    "ade": {"kind", "type", "n"},
    "cyclic_quotient": {"kind", "n", "q"},
    "brieskorn_pham": {"kind", "a", "b", "c"},
    "plumbing": {"kind", "graph"},
}


def _require_int(obj, name: str) -> int:
    if name not in obj:
        raise SpecError(f"missing field {name!r}")
    val = obj[name]
    if not isinstance(val, int) or isinstance(val, bool):
        raise SpecError(f"field {name!r} must be an integer, got {val!r}")
    return val


def _graph_from_obj(obj) -> ResolutionGraph:
    if not isinstance(obj, dict):
        raise SpecError("field 'graph' must be an object")
    extra = set(obj) - {"vertices", "edges"}
    if extra:
        raise SpecError(f"unknown graph fields {sorted(extra)}")
    if "vertices" not in obj or "edges" not in obj:
        raise SpecError("graph needs 'vertices' and 'edges'")
    vertices = []
    for i, v in enumerate(obj["vertices"]):
        if not isinstance(v, dict) or "e" not in v:
            raise SpecError(f"vertex {i} must be an object with field 'e'")
        bad = set(v) - {"e", "g"}
        if bad:
            raise SpecError(f"vertex {i} has unknown fields {sorted(bad)}")
        e = v["e"]
        g = v.get("g", 0)
        if not isinstance(e, int) or isinstance(e, bool):
            raise SpecError(f"vertex {i}: field 'e' must be an integer")
        if not isinstance(g, int) or isinstance(g, bool) or g < 0:
            raise SpecError(f"vertex {i}: field 'g' must be a nonnegative integer")
        vertices.append(Vertex(self_intersection=e, genus=g))
    edges = []
    for k, e in enumerate(obj["edges"]):
        if (not isinstance(e, (list, tuple)) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise SpecError(f"edge {k} must be a pair of vertex indices")
        edges.append((e[0], e[1]))
    try:
        return ResolutionGraph(tuple(vertices), tuple(edges))
    except ValidationError as exc:
        raise SpecError(f"invalid graph: {exc}") from exc


def spec_from_obj(obj) -> SingularitySpec:
    if not isinstance(obj, dict):
        raise SpecError("singularity description must be a JSON object")
    kind = obj.get("kind")
    if kind not in _SPEC_FIELDS:
        raise SpecError(
            f"unknown kind {kind!r}; expected one of {sorted(_SPEC_FIELDS)}")
    extra = set(obj) - _SPEC_FIELDS[kind]
    if extra:
        raise SpecError(f"unknown fields {sorted(extra)} for kind {kind!r}")
    if kind == "ade":
        if "type" not in obj:
            raise SpecError("missing field 'type'")
        return AdeSpec(kind=obj["type"], n=_require_int(obj, "n"))
    if kind == "cyclic_quotient":
        return CyclicQuotientSpec(n=_require_int(obj, "n"), q=_require_int(obj, "q"))
    if kind == "brieskorn_pham":
        return BrieskornPhamSpec(
            a=_require_int(obj, "a"), b=_require_int(obj, "b"), c=_require_int(obj, "c"))
    if "graph" not in obj:
        raise SpecError("missing field 'graph'")
    return PlumbingSpec(graph=_graph_from_obj(obj["graph"]))


def parse_spec(text: str) -> SingularitySpec:
    """Parse a JSON singularity description.

    Errors name the offending line (for malformed JSON) or field (for a
    structurally invalid description).
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                        f"{exc.msg}") from exc
    return spec_from_obj(obj)


def spec_to_obj(spec: SingularitySpec) -> dict:
    if isinstance(spec, AdeSpec):
        return {"kind": "ade", "type": spec.kind, "n": spec.n}
    if isinstance(spec, CyclicQuotientSpec):
        return {"kind": "cyclic_quotient", "n": spec.n, "q": spec.q}
    if isinstance(spec, BrieskornPhamSpec):
        return {"kind": "brieskorn_pham", "a": spec.a, "b": spec.b, "c": spec.c}
    return {
        "kind": "plumbing",
        "graph": {
            "vertices": [{"e": v.self_intersection, "g": v.genus}
                         for v in spec.graph.vertices],
            "edges": [[i, j] for i, j in spec.graph.edges],
        },
    }


def report_to_obj(report: ObstructionReport) -> dict:
    return {
        "spec": spec_to_obj(report.spec),
        "realizations": [
            {
                "route": r.route,
                "status": r.status,
                "invariant_factors": (list(r.group.invariant_factors)
                                      if r.group is not None else None),
                "order": r.order,
                "note": r.note,
            }
            for r in report.realizations
        ],
        "det_m": report.det_m,
        "det_t_minus_id": report.det_t_minus_id,
        "verdict": report.verdict,
        "warnings": list(report.warnings),
    }


def report_from_obj(obj) -> ObstructionReport:
    try:
        spec = spec_from_obj(obj["spec"])
        realizations = []
        for r in obj["realizations"]:
            factors = r["invariant_factors"]
            group = (FiniteAbelianGroup(tuple(factors))
                     if factors is not None else None)
            realizations.append(Realization(
                route=r["route"], status=r["status"], group=group,
                order=r["order"], note=r["note"]))
        return ObstructionReport(
            spec=spec,
            realizations=tuple(realizations),
            det_m=obj["det_m"],
            det_t_minus_id=obj["det_t_minus_id"],
            verdict=obj["verdict"],
            warnings=tuple(obj["warnings"]),
        )
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed report object: {exc}") from exc


def report_to_json(report: ObstructionReport) -> str:
    return json.dumps(report_to_obj(report), indent=2)


def report_from_json(text: str) -> ObstructionReport:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                        f"{exc.msg}") from exc
    return report_from_obj(obj)


def render_report(report: ObstructionReport) -> str:
    """Human-readable, byte-deterministic view of one report."""
    lines = [f"singularity: {report.spec.describe()}"]
    rows = [("route", "result", "note")]
    for r in report.realizations:
        rows.append((r.route, r.value_str(), r.note))
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    for route, value, note in rows:
        lines.append(f"  {route.ljust(w0)}  {value.ljust(w1)}  {note}")
    if report.det_m is not None:
        lines.append(f"  det M = {report.det_m}")
    if report.det_t_minus_id is not None:
        lines.append(f"  det(T - id) = {report.det_t_minus_id}")
    for w in report.warnings:
        lines.append(f"  warning: {w}")
    lines.append(f"  verdict: {report.verdict}")
    return "\n".join(lines)
