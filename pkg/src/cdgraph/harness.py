"""Instance checks of the regular-implies-complete criterion and its lemmas.

Every check returns a :class:`CheckResult` whose status is ``pass``,
``fail`` or ``skipped``. A check whose hypotheses do not hold is
``skipped``, never ``pass``.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import __version__
from .classgraph import (
    CdGraph,
    GraphReport,
    common_divisor_graph,
    component_correspondence,
    connected_components,
    diameter,
    graph_report,
    is_complete,
    prime_graph,
    regularity,
    twin_classes,
)
from .numeric import is_prime, is_prime_power, pi_set, smallest_prime_not_dividing
from .perm import (
    DEFAULT_CAP,
    ConjClass,
    PermGroup,
    Permutation,
    class_product,
    class_size_set,
    element_order,
    is_simple,
    is_soluble,
    p_regular_class_size_set,
    p_regular_classes,
    quotient_group,
)
from .series import UpperPSeries, upper_p_series

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class AnalysisError(Exception):
    pass


@dataclass
class CheckResult:
    name: str
    status: str
    severity: str = "info"
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "severity": self.severity,
            "witnesses": self.witnesses,
            "details": self.details,
        }


@dataclass
class TheoremVerdict:
    applicable: bool
    holds: bool | None
    k: int | None
    vertex_count: int

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "holds": self.holds,
            "k": self.k,
            "vertex_count": self.vertex_count,
        }


@dataclass
class ConjectureFinding:
    x: Permutation
    y: Permutation
    x_class_size: int
    y_class_size: int
    product_order: int
    p: int

    def to_dict(self) -> dict:
        return {
            "x": self.x.cycle_string(),
            "y": self.y.cycle_string(),
            "x_class_size": self.x_class_size,
            "y_class_size": self.y_class_size,
            "product_order": self.product_order,
            "p": self.p,
        }


@dataclass
class ConjectureSearch:
    p: int
    findings: list[ConjectureFinding]
    class_pairs: int
    coprime_pairs: int
    products_tested: int

    def to_dict(self) -> dict:
        return {
            "class_pairs": self.class_pairs,
            "coprime_pairs": self.coprime_pairs,
            "products_tested": self.products_tested,
            "findings": [f.to_dict() for f in self.findings],
        }


@dataclass
class AnalysisReport:
    label: str
    order: int
    p: int
    p_separable: bool
    series: UpperPSeries
    known_safe_families: list[str]
    cs: tuple[int, ...]
    cs_p: tuple[int, ...]
    gamma_p: GraphReport
    delta_p: GraphReport
    theorem: TheoremVerdict
    conjecture: ConjectureSearch
    property_results: list[CheckResult]

    def to_dict(self) -> dict:
        return {
            "group": self.label,
            "order": self.order,
            "prime": self.p,
            "p_separable": self.p_separable,
            "upper_p_series": {
                "orders": self.series.orders,
                "step_kinds": self.series.step_kinds,
                "reached_whole_group": self.series.reached_whole_group,
            },
            "known_safe_families": self.known_safe_families,
            "cs": list(self.cs),
            "cs_p": list(self.cs_p),
            "gamma_p": self.gamma_p.to_dict(),
            "delta_p": self.delta_p.to_dict(),
            "theorem": self.theorem.to_dict(),
            "conjecture": self.conjecture.to_dict(),
            "property_results": [r.to_dict() for r in self.property_results],
        }

    def result(self, name: str) -> CheckResult:
        return next(r for r in self.property_results if r.name == name)


def _noncentral_p_regular(group: PermGroup, p: int) -> list[ConjClass]:
    return [c for c in p_regular_classes(group, p) if c.size > 1]


def _p_separable(group: PermGroup, p: int, p_separable: bool | None) -> bool:
    return upper_p_series(group, p).reached_whole_group if p_separable is None else p_separable


def gamma_p_graph(group: PermGroup, p: int) -> CdGraph:
    return common_divisor_graph(p_regular_class_size_set(group, p))


# -- the main criterion --------------------------------------------------------


def check_theorem(gamma_p: CdGraph, p_separable: bool) -> TheoremVerdict:
    k = regularity(gamma_p)
    n = len(gamma_p)
    applicable = p_separable and k is not None and k >= 1
    holds = (is_complete(gamma_p) and n == k + 1) if applicable else None
    return TheoremVerdict(applicable, holds, k, n)


def theorem_result(verdict: TheoremVerdict) -> CheckResult:
    details = verdict.to_dict()
    if not verdict.applicable:
        return CheckResult("main_theorem", SKIPPED, details=details)
    if verdict.holds:
        return CheckResult("main_theorem", PASS, details=details)
    # The criterion is a theorem, so a violation means a bug in this code.
    return CheckResult("main_theorem", FAIL, "error", [details], details)


def check_theorem_converse(gamma_p: CdGraph) -> CheckResult:
    """A complete graph on n >= 2 vertices is (n-1)-regular."""
    n = len(gamma_p)
    if n < 2 or not is_complete(gamma_p):
        return CheckResult("main_theorem_converse", SKIPPED)
    k = regularity(gamma_p)
    details = {"vertex_count": n, "regularity": k}
    if k == n - 1:
        return CheckResult("main_theorem_converse", PASS, details=details)
    return CheckResult("main_theorem_converse", FAIL, "error", [details], details)


# -- conjecture and class products ---------------------------------------------


def check_conjecture(group: PermGroup, p: int) -> ConjectureSearch:
    """Search for p-regular x, y with coprime class sizes and p | o(xy).

    Every product ``bc`` over each coprime pair of classes is tested; at most
    one finding is kept per class pair.
    """
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    classes = _noncentral_p_regular(group, p)
    findings = []
    pairs = coprime = tested = 0
    for b, c in combinations(classes, 2):
        pairs += 1
        if math.gcd(b.size, c.size) != 1:
            continue
        coprime += 1
        for x in sorted(b.members):
            bad = None
            for y in sorted(c.members):
                tested += 1
                n = element_order(x * y)
                if n % p == 0 and bad is None:
                    bad = ConjectureFinding(x, y, b.size, c.size, n, p)
            if bad is not None:
                findings.append(bad)
                break
    return ConjectureSearch(p, findings, pairs, coprime, tested)


def conjecture_result(search: ConjectureSearch) -> CheckResult:
    details = {k: v for k, v in search.to_dict().items() if k != "findings"}
    if search.findings:
        return CheckResult(
            "conjecture", FAIL, "discovery", [f.to_dict() for f in search.findings], details
        )
    return CheckResult("conjecture", PASS if search.coprime_pairs else SKIPPED, details=details)


def check_coprime_class_product(
    group: PermGroup, p: int, p_separable: bool | None = None
) -> CheckResult:
    """Coprime-size classes multiply to a single class, p-regular when expected.

    The single-class part is checked for every coprime pair of noncentral
    classes; the p-regularity part only for p-regular pairs in p-separable
    groups.
    """
    sep = _p_separable(group, p, p_separable)
    classes = [c for c in group.classes if c.size > 1]
    witnesses = []
    pairs = regular_pairs = 0
    for b, c in combinations(classes, 2):
        if math.gcd(b.size, c.size) != 1:
            continue
        pairs += 1
        prod = class_product(b, c)
        target = group.class_of(next(iter(prod)))
        if prod != target.members:
            witnesses.append(
                {
                    "kind": "not_a_single_class",
                    "b": b.representative.cycle_string(),
                    "c": c.representative.cycle_string(),
                    "product_size": len(prod),
                }
            )
            continue
        if sep and b.is_p_regular(p) and c.is_p_regular(p):
            regular_pairs += 1
            if not target.is_p_regular(p):
                witnesses.append(
                    {
                        "kind": "product_not_p_regular",
                        "b": b.representative.cycle_string(),
                        "c": c.representative.cycle_string(),
                        "product": target.representative.cycle_string(),
                    }
                )
    details = {"coprime_pairs": pairs, "p_regular_pairs": regular_pairs}
    if witnesses:
        return CheckResult("coprime_class_product", FAIL, "error", witnesses, details)
    return CheckResult("coprime_class_product", PASS if pairs else SKIPPED, details=details)


# -- lemma checks --------------------------------------------------------------


def check_power_divisibility(group: PermGroup, p: int) -> CheckResult:
    """|(x^a)^G| divides |x^G|; equal-or-twins when Gamma_p is regular."""
    graph = gamma_p_graph(group, p)
    regular = regularity(graph) is not None
    twin_of = {v: i for i, t in enumerate(twin_classes(graph)) for v in t}
    witnesses = []
    div_pairs = twin_pairs = 0
    for b in _noncentral_p_regular(group, p):
        x = b.representative
        for a in range(1, b.element_order):
            y = x**a
            sy = group.class_of(y).size
            if sy == 1:
                continue
            div_pairs += 1
            if b.size % sy:
                witnesses.append({"kind": "divisibility", "x": x.cycle_string(), "power": a,
                                  "x_size": b.size, "y_size": sy})
            if regular:
                twin_pairs += 1
                if b.size != sy and twin_of[b.size] != twin_of[sy]:
                    witnesses.append({"kind": "not_equal_or_twins", "x": x.cycle_string(),
                                      "power": a, "x_size": b.size, "y_size": sy})
    details = {"power_pairs": div_pairs, "twin_pairs_checked": twin_pairs}
    if witnesses:
        return CheckResult("power_divisibility", FAIL, "error", witnesses, details)
    return CheckResult("power_divisibility", PASS if div_pairs else SKIPPED, details=details)


def check_connectivity_lemma(
    group: PermGroup, p: int, p_separable: bool | None = None
) -> CheckResult:
    graph = gamma_p_graph(group, p)
    k = regularity(graph)
    if not _p_separable(group, p, p_separable) or k is None or k < 1:
        return CheckResult("connectivity_lemma", SKIPPED)
    comps = connected_components(graph)
    details = {"k": k, "components": len(comps)}
    if len(comps) == 1:
        return CheckResult("connectivity_lemma", PASS, details=details)
    return CheckResult("connectivity_lemma", FAIL, "error", [[list(c) for c in comps]], details)


def check_prime_power_lemma(
    group: PermGroup, p: int, p_separable: bool | None = None
) -> CheckResult:
    graph = gamma_p_graph(group, p)
    k = regularity(graph)
    powers = [v for v in graph.vertices if is_prime_power(v)]
    if not _p_separable(group, p, p_separable) or k is None or k < 1 or not powers:
        return CheckResult("prime_power_lemma", SKIPPED)
    details = {"k": k, "prime_power_vertices": powers}
    if is_complete(graph):
        return CheckResult("prime_power_lemma", PASS, details=details)
    return CheckResult("prime_power_lemma", FAIL, "error", powers, details)


def check_gamma_delta_relation(sizes: Iterable[int], name: str = "gamma_delta") -> CheckResult:
    """Gamma(X) and Delta(X): same component count, diameters within one."""
    sizes = sorted(set(sizes))
    gamma = common_divisor_graph(sizes)
    delta = prime_graph(sizes)
    pairs = component_correspondence(gamma, delta)
    n_gamma = len(pairs)
    n_delta = len(connected_components(delta))
    details: dict = {"sizes": sizes, "gamma_components": n_gamma, "delta_components": n_delta}
    if n_gamma == 0 and n_delta == 0:
        return CheckResult(name, SKIPPED, details=details)
    witnesses = []
    if n_gamma != n_delta:
        witnesses.append({"kind": "component_count"})
    diams = []
    for gc, dc in pairs:
        if dc is None:
            witnesses.append({"kind": "no_matching_component", "gamma": list(gc)})
            continue
        dg, dd = diameter(gamma, gc), diameter(delta, dc)
        diams.append([dg, dd])
        if abs(dg - dd) > 1:
            witnesses.append({"kind": "diameter", "gamma": list(gc), "delta": list(dc),
                              "diameters": [dg, dd]})
    details["diameters"] = diams
    if witnesses:
        return CheckResult(name, FAIL, "error", witnesses, details)
    return CheckResult(name, PASS, details=details)


# -- orchestration -------------------------------------------------------------


def known_safe_families(group: PermGroup) -> list[str]:
    """Families that cannot hold a counterexample to the coprime-product conjecture."""
    out = []
    if is_soluble(group):
        out.append("soluble")
    simple = is_simple(group)
    if simple:
        out.append("simple")
    if len(group.center) == 1:
        central_simple = simple
    else:
        central_simple = is_simple(quotient_group(group, group.center))
    if central_simple:
        out.append("central_quotient_simple")
    if group.degree >= 5 and group.order == math.factorial(group.degree):
        out.append("symmetric_n_ge_5")
    return out


def analyze(
    group: PermGroup, p: int, families: list[str] | None = None
) -> AnalysisReport:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    try:
        series = upper_p_series(group, p)
        sep = series.reached_whole_group
        cs = class_size_set(group)
        cs_p = p_regular_class_size_set(group, p)
        gamma = common_divisor_graph(cs_p)
        verdict = check_theorem(gamma, sep)
        search = check_conjecture(group, p)
        if families is None:
            families = known_safe_families(group)
        results = [
            theorem_result(verdict),
            check_theorem_converse(gamma),
            conjecture_result(search),
            check_coprime_class_product(group, p, sep),
            check_power_divisibility(group, p),
            check_connectivity_lemma(group, p, sep),
            check_prime_power_lemma(group, p, sep),
            check_gamma_delta_relation(cs, "gamma_delta_cs"),
            check_gamma_delta_relation(cs_p, "gamma_delta_cs_p"),
        ]
    except Exception as e:
        raise AnalysisError(f"{group.label}: {e}") from e
    return AnalysisReport(
        label=group.label,
        order=group.order,
        p=p,
        p_separable=sep,
        series=series,
        known_safe_families=list(families),
        cs=cs,
        cs_p=cs_p,
        gamma_p=graph_report(gamma),
        delta_p=graph_report(prime_graph(cs_p)),
        theorem=verdict,
        conjecture=search,
        property_results=results,
    )


def default_primes(order: int) -> list[int]:
    """Primes dividing ``order`` plus the smallest prime that does not."""
    return sorted(pi_set(order)) + [smallest_prime_not_dividing(order)]


@dataclass
class ScanResult:
    entries: list[dict]
    timings: list[float]

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
        findings = errors = 0
        for e in self.entries:
            if "error" in e:
                errors += 1
                continue
            for r in e["property_results"]:
                counts[r["status"]] += 1
            findings += len(e["conjecture"]["findings"])
        return {
            "checks_run": sum(counts.values()),
            "passed": counts[PASS],
            "failed": counts[FAIL],
            "skipped": counts[SKIPPED],
            "findings": findings,
            "errors": errors,
        }

    @property
    def exit_status(self) -> int:
        s = self.summary
        if s["failed"] or s["findings"]:
            return 1
        return 2 if s["errors"] else 0

    def to_json(self) -> str:
        payload = {"tool_version": __version__, "entries": self.entries, "summary": self.summary}
        return json.dumps(payload, indent=2) + "\n"


def _scan_one(spec: str, primes: Sequence[int] | None, line: int | None, cap: int) -> tuple[list[dict], float]:
    from .constructors import build

    start = time.perf_counter()
    try:
        group = build(spec, cap=cap)
        ps = list(primes) if primes else default_primes(group.order)
        families = known_safe_families(group)
        out = [analyze(group, p, families).to_dict() for p in ps]
    except Exception as e:  # recorded per entry; the scan continues
        out = [{"group": spec, "line": line, "error": f"{type(e).__name__}: {e}"}]
    return out, time.perf_counter() - start


def scan_corpus(entries: Sequence, jobs: int = 1, cap: int = DEFAULT_CAP) -> ScanResult:
    """Analyze every corpus entry at its primes; output order follows the corpus.

    ``entries`` holds objects with ``spec``, ``primes`` and ``line`` attributes
    (see :class:`cdgraph.corpus.CorpusEntry`).
    """
    args = [(str(e.spec), e.primes, e.line, cap) for e in entries]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, *zip(*args)))
    else:
        results = [_scan_one(*a) for a in args]
    out: list[dict] = []
    timings = []
    for reports, elapsed in results:
        out.extend(reports)
        timings.append(elapsed)
    return ScanResult(out, timings)
