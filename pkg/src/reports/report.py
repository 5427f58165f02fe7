"""Machine-readable verification reports for square tori.

Every check is one ``CheckResult``; a check that was not run is ``skipped``,
never defaulted to a pass. Timestamps live in their own section so that two
runs differ nowhere else.
"""

import json
import logging
from datetime import datetime, timezone
from enum import StrEnum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from algebra.automorphism import is_automorphism
from algebra.group import is_subgroup, regularity
from algebra.permutation import inverse
from cayley.automorphisms import brute_force_aut
from cayley.connection import connection_set, verify_cayley_isomorphism
from cayley.verdict import BASE_VERTEX
from config import DEFAULT_LIMITS, TOOL_VERSION, SearchLimits
from torus.graph import TorusParams, ValidationReport, build_torus, decode_vertex, validate_torus
from torus.symmetries import (
    is_stabilizer_trivial,
    make_generators,
    transport,
    verify_group_structure,
    verify_relations,
    witness_group,
)
from utils.errors import ReportSchemaError, ReportWriteError, SearchBudgetError, TorusCayleyError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"
TRANSPORT_MAX_N = 4


class CheckStatus(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    status: CheckStatus
    detail: Optional[str] = None

    @classmethod
    def of(cls, name: str, ok: bool, detail: Optional[str] = None) -> "CheckResult":
        return cls(name=name, status=CheckStatus.PASS if ok else CheckStatus.FAIL, detail=detail)

    @classmethod
    def skipped(cls, name: str, detail: str) -> "CheckResult":
        return cls(name=name, status=CheckStatus.SKIPPED, detail=detail)


class StructureSection(BaseModel):
    H_order: int
    K_order: int
    G_order: int
    H_type: str
    K_type: str
    product_kind: str
    checks: List[CheckResult]


class CayleyMapSection(BaseModel):
    connection_set_size: Optional[int] = None
    checks: List[CheckResult]


class TransportSection(BaseModel):
    pairs_checked: int
    checks: List[CheckResult]


class BruteForceSection(BaseModel):
    aut_order: Optional[int] = None
    checks: List[CheckResult]


class Timestamps(BaseModel):
    started_at: str
    finished_at: str


class VerificationReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    tool_version: str = TOOL_VERSION
    params: TorusParams
    graph: ValidationReport
    lemma1: List[CheckResult]
    lemma2: List[CheckResult]
    lemma2_derived: List[CheckResult]
    lemma3: StructureSection
    theorem: CayleyMapSection
    transport: TransportSection
    brute_force: BruteForceSection
    timestamps: Timestamps

    def all_checks(self) -> List[CheckResult]:
        return (
            self.lemma1
            + self.lemma2
            + self.lemma2_derived
            + self.lemma3.checks
            + self.theorem.checks
            + self.transport.checks
            + self.brute_force.checks
        )

    @property
    def passed(self) -> bool:
        return self.graph.ok and all(c.status != CheckStatus.FAIL for c in self.all_checks())


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _structure(n: int, limits: SearchLimits) -> StructureSection:
    s = verify_group_structure(n, limits.closure_cap)
    checks = [
        CheckResult.of("|H| = n^2", s.H_order == n * n, f"|H| = {s.H_order}"),
        CheckResult.of("H abelian", s.H_abelian),
        CheckResult.of("|K| = 4", s.K_order == 4, f"|K| = {s.K_order}"),
        CheckResult.of("K elementary abelian", s.K_elementary_abelian, s.K_type),
        CheckResult.of("H normal in G", s.H_normal),
        CheckResult.of("H & K = 1", s.intersection_order == 1, f"|H & K| = {s.intersection_order}"),
        CheckResult.of("|G| = |H|*|K|", s.order_product_matches),
        CheckResult.of("|G| = 4n^2", s.G_order == s.expected_G_order, f"|G| = {s.G_order}"),
        CheckResult.of("G = HK uniquely", s.unique_factorization),
    ] + [CheckResult.of(c.relation, c.holds) for c in s.conjugations]
    return StructureSection(
        H_order=s.H_order,
        K_order=s.K_order,
        G_order=s.G_order,
        H_type=s.H_type,
        K_type=s.K_type,
        product_kind=s.product_kind,
        checks=checks,
    )


def _cayley_map(n: int, limits: SearchLimits) -> CayleyMapSection:
    graph = build_torus(TorusParams(m=n, n=n), limits.point_cap)
    group = witness_group(n, limits.closure_cap)
    check = regularity(group)
    checks = [
        CheckResult.of("G transitive", check.transitive),
        CheckResult.of("point stabilizer trivial", is_stabilizer_trivial(group, 0)),
        CheckResult.of("|G| = 4n^2 = |V|", check.order_equals_degree, f"|G| = {group.order}"),
    ]
    if not check.regular:
        checks += [
            CheckResult.skipped(name, "G is not regular")
            for name in ("|S| = 3", "1 not in S", "S = S^-1", "Cayley map is an isomorphism")
        ]
        return CayleyMapSection(checks=checks)

    s = connection_set(graph, group, BASE_VERTEX)
    members = set(s.elements)
    checks += [
        CheckResult.of("|S| = 3", len(s) == 3),
        CheckResult.of("1 not in S", not any(x.is_identity() for x in members)),
        CheckResult.of("S = S^-1", {inverse(x) for x in members} == members),
        CheckResult.of(
            "Cayley map is an isomorphism",
            verify_cayley_isomorphism(graph, group, BASE_VERTEX),
            f"base {BASE_VERTEX}",
        ),
    ]
    return CayleyMapSection(connection_set_size=len(s), checks=checks)


def _transport(n: int) -> TransportSection:
    name = "transport words carry every vertex to every vertex"
    if n > TRANSPORT_MAX_N:
        return TransportSection(
            pairs_checked=0,
            checks=[CheckResult.skipped(name, f"exhaustive check runs for n <= {TRANSPORT_MAX_N}")],
        )
    params = TorusParams(m=n, n=n)
    gens = make_generators(params)
    vertices = [decode_vertex(params, x) for x in range(params.order)]
    failures = 0
    for v in vertices:
        for w in vertices:
            try:
                transport(n, v, w, gens)
            except TorusCayleyError as e:
                failures += 1
                logger.error(str(e))
    pairs = len(vertices) ** 2
    return TransportSection(
        pairs_checked=pairs,
        checks=[CheckResult.of(name, failures == 0, f"{failures} failing pairs of {pairs}")],
    )


def _brute_force(n: int, limits: SearchLimits) -> BruteForceSection:
    names = ("Aut computed", "G is a subgroup of Aut")
    params = TorusParams(m=n, n=n)
    if params.order > limits.aut_vertex_cap:
        detail = f"order {params.order} exceeds the brute-force cap {limits.aut_vertex_cap}"
        return BruteForceSection(checks=[CheckResult.skipped(name, detail) for name in names])
    try:
        aut = brute_force_aut(build_torus(params), limits.node_budget, limits.aut_vertex_cap)
    except SearchBudgetError as e:
        return BruteForceSection(
            checks=[CheckResult.of(names[0], False, str(e)), CheckResult.skipped(names[1], str(e))]
        )
    group = witness_group(n, limits.closure_cap)
    return BruteForceSection(
        aut_order=aut.order,
        checks=[
            CheckResult.of(names[0], True, f"|Aut| = {aut.order}"),
            CheckResult.of(names[1], is_subgroup(group, aut)),
        ],
    )


def build_verification_report(n: int, limits: SearchLimits = DEFAULT_LIMITS) -> VerificationReport:
    """Run the generator, relation, structure and Cayley checks on [n, n]."""
    started = _now()
    params = TorusParams(m=n, n=n)
    graph = build_torus(params, limits.point_cap)
    gens = make_generators(params, graph)
    relations = verify_relations(n)

    report = VerificationReport(
        params=params,
        graph=validate_torus(graph),
        lemma1=[CheckResult.of(f"g{k} in Aut", is_automorphism(graph, p)) for k, p in gens.present()],
        lemma2=[CheckResult.of(r.relation, r.holds) for r in relations.relations],
        lemma2_derived=[CheckResult.of(r.relation, r.holds) for r in relations.derived],
        lemma3=_structure(n, limits),
        theorem=_cayley_map(n, limits),
        transport=_transport(n),
        brute_force=_brute_force(n, limits),
        timestamps=Timestamps(started_at=started, finished_at=_now()),
    )
    logger.info(f"Verification of [{n},{n}] {'passed' if report.passed else 'FAILED'}")
    return report


def render_report(report: VerificationReport) -> str:
    return report.model_dump_json(indent=2) + "\n"


def write_report(report: VerificationReport, path: Path):
    try:
        Path(path).write_text(render_report(report), encoding="utf-8")
    except OSError as e:
        raise ReportWriteError(f"Cannot write report to {path}: {e}") from e


def load_report(path: Path) -> VerificationReport:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    version = str(data.get("schema_version", ""))
    major = version.split(".")[0]
    if major != SCHEMA_VERSION.split(".")[0]:
        raise ReportSchemaError(f"Unsupported report schema version {version!r}")
    return VerificationReport.model_validate(data)
