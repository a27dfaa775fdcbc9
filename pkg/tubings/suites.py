"""Verification suites: exhaustive runs over the graph census plus seeded samples.

Each suite returns a ``VerificationReport``. Failures are collected in a
deterministic order (census order, then case order) whatever the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import islice, product
import logging
import math
import random
import time
from typing import Callable, Iterable, Iterator, Sequence

from tubings.census import graph_census, graphs_with_nodes
from tubings.dtub import (
    DTubing,
    basis_element,
    basis_label,
    canonical_decompose,
    degree,
    differential_square_failures,
    enumerate_dtubings,
    evaluate,
    lalgebra_failures,
    leibniz_failures,
    simplex_faces,
    trias_triple_failures,
)
from tubings.errors import CapExceededError, InputError
from tubings.graph import Graph, NodeSet, all_tubes, complete, cycle, linear
from tubings.opcat import axiom_suite, surjection_check
from tubings.relations import (
    alpha_antisymmetry_failures,
    circ_relation_failures,
    d2_failures,
    full_signature,
    generator_failures,
    leibniz_independence_failures,
    ns_operad_failures,
    permutad_failures,
    prelie_failures,
    restriction_commutes_failures,
    signature_cocycle_failures,
    substitution_associativity_case,
    substitution_associativity_failures,
    substitution_commutation_failures,
)
from tubings.serialization import encode_graph, encode_tubing
from tubings.topology import TOPOLOGY_CAP, refines, tubing_iff_basis_check
from tubings.tubing import (
    ENUMERATION_CAP,
    Tubing,
    compatible,
    complement_by_maximal,
    covers,
    enumerate_tubings,
    f_vector,
    is_tubing,
    make_tubing,
    tubing_count,
)
from tubings.types import CaseFailure, SuiteName

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 10

# Largest graph size each suite runs exhaustively unless --max-n says otherwise
DEFAULT_MAX_N = {
    SuiteName.D2: 5,
    SuiteName.LEIBNIZ: 4,
    SuiteName.PRELIE: 4,
    SuiteName.OPERAD: 7,
    SuiteName.PERMUTAD: 7,
    SuiteName.CIRC: 4,
    SuiteName.TOPOLOGY: 4,
    SuiteName.SUBSTITUTION: 4,
    SuiteName.RESTRICTION: 4,
    SuiteName.GENERATORS: 5,
    SuiteName.TRIAS: 6,
    SuiteName.LALGEBRA: 2,
    SuiteName.OPCAT: 4,
    SuiteName.FVECTOR: 5,
}

# Largest component size for which the trias suite takes every connected graph
TRIAS_FULL_CENSUS = 4

# Random cases drawn by the sampled suites unless --samples says otherwise
DEFAULT_SAMPLES = {
    SuiteName.SUBSTITUTION: 10_000,
    SuiteName.LALGEBRA: 1_000,
}
FALLBACK_SAMPLES = 200

KNOWN_F_VECTORS = {
    "K3": (complete(3), [6, 6, 1]),
    "L3": (linear(3), [5, 5, 1]),
    "K4": (complete(4), [24, 36, 14, 1]),
    "L4": (linear(4), [14, 21, 9, 1]),
    "Cy4": (cycle(4), [20, 30, 12, 1]),
}


@dataclass
class SuiteOptions:
    """Settings shared by all suites."""
    max_n: int | None = None
    seed: int = 0
    samples: int | None = None
    workers: int | None = None


@dataclass
class VerificationReport:
    suite: SuiteName
    census: str
    cases: int = 0
    failures: list[CaseFailure] = field(default_factory=list)
    failure_count: int = 0
    seed: int = 0
    samples: int = 0
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, failures: Iterable[CaseFailure]) -> None:
        for failure in failures:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(failure)


GraphCheck = Callable[[Graph], Iterator[CaseFailure]]


def _census_label(graphs: Sequence[Graph]) -> str:
    counts: dict[int, int] = {}
    for g in graphs:
        counts[g.n] = counts.get(g.n, 0) + 1
    return "connected graphs " + ", ".join(f"n={n}: {c}" for n, c in sorted(counts.items()))


def _run_on_graphs(report: VerificationReport, graphs: Sequence[Graph], check: GraphCheck,
                   options: SuiteOptions) -> None:
    """Run ``check`` on each graph, on a thread pool when workers are set."""
    def one(g: Graph) -> tuple[int, list[CaseFailure]]:
        return tubing_count(g), list(islice(check(g), MAX_REPORTED_FAILURES))

    if options.workers and options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            results = list(pool.map(one, graphs))
    else:
        results = [one(g) for g in graphs]
    for g, (cases, failures) in zip(graphs, results):
        report.cases += cases
        report.record(failures)
        logger.debug(f"{report.suite}: {g!r} {cases} cases, {len(failures)} failures")


def _graphs(max_n: int, cap: int = ENUMERATION_CAP) -> list[Graph]:
    if max_n > cap:
        raise CapExceededError("suite node count", max_n, cap)
    return list(graph_census(max_n))


def _random_connected(rng: random.Random, n: int) -> Graph:
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    while True:
        g = Graph.from_edges(n, [p for p in pairs if rng.random() < 0.5])
        if g.is_connected():
            return g


def _random_tubing(rng: random.Random, g: Graph) -> Tubing:
    """Proper tubes in shuffled order, each kept on a coin flip when compatible with those kept."""
    proper = [t for t in all_tubes(g) if t != g.all_nodes]
    rng.shuffle(proper)
    family: list[NodeSet] = []
    for t in proper:
        if rng.random() < 0.5 and all(compatible(g, t, u) for u in family):
            family.append(t)
    return make_tubing(g, family + [g.all_nodes])


def _suite_graph_check(check: GraphCheck) -> Callable[[VerificationReport, int, SuiteOptions], None]:
    def run(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
        graphs = _graphs(max_n)
        report.census = _census_label(graphs)
        _run_on_graphs(report, graphs, check, options)
    return run


def _circ_checks(g: Graph) -> Iterator[CaseFailure]:
    yield from circ_relation_failures(g)
    yield from alpha_antisymmetry_failures(g)
    yield from signature_cocycle_failures(g, full_signature)


def _topology_checks(g: Graph) -> Iterator[CaseFailure]:
    if not tubing_iff_basis_check(g):
        yield CaseFailure(f"topology {g!r}", {"graph": encode_graph(g)})
    for T in enumerate_tubings(g):
        for U in covers(T):
            if not refines(U, T):
                yield CaseFailure(f"refinement {U!r}", {"finer": encode_tubing(U), "coarser": encode_tubing(T)})


def _run_topology(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    graphs = _graphs(max_n, TOPOLOGY_CAP)
    report.census = _census_label(graphs)
    _run_on_graphs(report, graphs, _topology_checks, options)


def _substitution_checks(g: Graph) -> Iterator[CaseFailure]:
    yield from substitution_commutation_failures(g)
    yield from substitution_associativity_failures(g)


def _run_substitution(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    graphs = _graphs(max_n)
    report.census = _census_label(graphs) + f"; {options.samples} samples at n=5,6"
    _run_on_graphs(report, graphs, _substitution_checks, options)
    rng = random.Random(options.seed)
    for k in range(options.samples):
        g = _random_connected(rng, 5 + k % 2)
        T = _random_tubing(rng, g)
        S = _random_tubing(rng, complement_by_maximal(T).graph)
        R = _random_tubing(rng, complement_by_maximal(S).graph)
        failure = substitution_associativity_case(T, S, R)
        report.cases += 1
        if failure is not None:
            report.record([failure])
        report.cases += 1
        report.record(islice(substitution_commutation_failures(g, [T]), 1))


def _run_restriction(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    if max_n > TOPOLOGY_CAP:
        raise CapExceededError("restriction suite node count", max_n, TOPOLOGY_CAP)
    for n in range(1, max_n + 1):
        omegas = list(graphs_with_nodes(n))
        report.cases += len(omegas) * tubing_count(complete(n))
        report.record(restriction_commutes_failures(n, omegas))
    report.census = f"spanning connected subgraphs of K_n, n ≤ {max_n}"


def _run_operad(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    report.census = f"linear graphs, total nodes ≤ {max_n}"
    for n, m, p in _size_triples(max_n):
        report.cases += 1
        report.record(islice(ns_operad_failures(n, m, p), MAX_REPORTED_FAILURES))


def _run_permutad(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    report.census = f"complete graphs, total nodes ≤ {max_n}"
    for n, m, p in _size_triples(max_n):
        report.cases += 1
        report.record(islice(permutad_failures(n, m, p), MAX_REPORTED_FAILURES))


def _size_triples(total: int) -> Iterator[tuple[int, int, int]]:
    for n in range(1, total + 1):
        for m in range(1, total - n + 1):
            for p in range(1, total - n - m + 1):
                yield n, m, p


def _component_graphs(k: int) -> list[Graph]:
    """Every connected graph on k nodes up to TRIAS_FULL_CENSUS, then path, cycle and complete."""
    if k <= TRIAS_FULL_CENSUS:
        return list(graphs_with_nodes(k))
    return list(dict.fromkeys((linear(k), cycle(k), complete(k))))


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def dtubings_by_size(max_total: int) -> dict[int, list[DTubing]]:
    """Disconnected tubings keyed by node total, components from ``_component_graphs``."""
    by_size: dict[int, list[DTubing]] = {}
    for total in range(1, max_total + 1):
        elements: list[DTubing] = []
        for parts in _compositions(total):
            for shape in product(*(_component_graphs(k) for k in parts)):
                elements.extend(enumerate_dtubings(shape))
        by_size[total] = elements
    return by_size


def bounded_tuples(by_size: dict[int, list[DTubing]], arity: int, total: int) -> Iterator[tuple[DTubing, ...]]:
    """Tuples of ``arity`` elements whose node totals sum to at most ``total``."""
    for sizes in product(sorted(by_size), repeat=arity):
        if sum(sizes) <= total:
            yield from product(*(by_size[s] for s in sizes))


def _run_trias(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    by_size = dtubings_by_size(max_n)
    elements = [T for size in sorted(by_size) for T in by_size[size]]
    report.census = (f"{len(elements)} elements, node total ≤ {max_n}; all connected components "
                     f"up to {TRIAS_FULL_CENSUS} nodes, then paths, cycles and complete graphs")
    triples = list(bounded_tuples(by_size, 3, max_n))
    report.cases += len(triples)
    report.record(trias_triple_failures(triples))
    pairs = list(bounded_tuples(by_size, 2, max_n))
    report.cases += len(elements) + len(pairs)
    report.record(differential_square_failures(elements))
    report.record(leibniz_failures(pairs))
    for T in elements:
        if T.is_connected:
            continue
        report.cases += 1
        if evaluate(canonical_decompose(T)) != T or basis_element(*basis_label(T)) != T:
            report.record([CaseFailure(f"decomposition {T!r}", {"element": repr(T)})])
    for n in range(1, ENUMERATION_CAP + 1):
        report.cases += 1
        faces = simplex_faces(n)
        if len(faces) != 2 ** n - 1 or max(degree(T) for T in faces) != n - 1:
            report.record([CaseFailure(f"simplex C_{n}", {"faces": len(faces)})])


def _run_lalgebra(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    small = [T for g in _graphs(max_n) for T in enumerate_tubings(g)]
    report.census = f"{len(small)} tubings on graphs with ≤ {max_n} nodes; {options.samples} samples"
    report.cases += len(small) ** 3
    report.record(lalgebra_failures(small))
    rng = random.Random(options.seed)
    for _ in range(options.samples):
        triple = [_random_tubing(rng, _random_connected(rng, rng.randint(3, 4))) for _ in range(3)]
        report.cases += 1
        report.record(lalgebra_failures(triple))


def _run_opcat(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    graphs = _graphs(max_n, TOPOLOGY_CAP)
    report.census = _census_label(graphs)
    for g in graphs:
        for result in axiom_suite(g):
            report.cases += result.cases
            if not result.passed:
                report.record([CaseFailure(f"{result.axiom} on {g!r}", result.counterexample)])
    for n in range(1, max_n + 1):
        result = surjection_check(n)
        report.cases += result.cases
        if not result.passed:
            report.record([CaseFailure(f"surjections on K_{n}", result.counterexample)])


def brute_force_tubing_count(g: Graph) -> int:
    """Count tubings by depth-first search over families of proper tubes.

    Tubes are taken in a fixed order and a family is only extended while it
    stays a tubing, so each tubing is reached exactly once.
    """
    proper = [t for t in all_tubes(g) if t != g.all_nodes]

    def count(family: list[NodeSet], start: int) -> int:
        total = 1
        for k in range(start, len(proper)):
            extended = family + [proper[k]]
            if is_tubing(g, extended + [g.all_nodes]):
                total += count(extended, k + 1)
        return total

    return count([], 0)


def fubini(n: int) -> int:
    """Ordered Bell number: ordered set partitions of an n-set."""
    table = [1]
    for m in range(1, n + 1):
        total = 0
        binom = 1
        for k in range(1, m + 1):
            binom = binom * (m - k + 1) // k
            total += binom * table[m - k]
        table.append(total)
    return table[n]


def _run_fvector(report: VerificationReport, max_n: int, options: SuiteOptions) -> None:
    report.census = f"named graphs; K_n and brute force for n ≤ {max_n}"
    for name, (g, expected) in KNOWN_F_VECTORS.items():
        report.cases += 1
        actual = f_vector(g)
        if actual != expected:
            report.record([CaseFailure(f"f-vector {name}", {"expected": expected, "actual": actual})])
    for n in range(1, max_n + 1):
        report.cases += 1
        counts = f_vector(complete(n))
        if sum(counts) != fubini(n) or counts[0] != math.factorial(n):
            report.record([CaseFailure(f"K_{n} totals", {"fVector": counts})])
        for g in (linear(n), cycle(n), complete(n)):
            report.cases += 1
            if tubing_count(g) != brute_force_tubing_count(g):
                report.record([CaseFailure(f"brute force {g!r}", {"graph": encode_graph(g)})])


SUITES: dict[SuiteName, Callable[[VerificationReport, int, SuiteOptions], None]] = {
    SuiteName.D2: _suite_graph_check(d2_failures),
    SuiteName.LEIBNIZ: _suite_graph_check(leibniz_independence_failures),
    SuiteName.PRELIE: _suite_graph_check(prelie_failures),
    SuiteName.OPERAD: _run_operad,
    SuiteName.PERMUTAD: _run_permutad,
    SuiteName.CIRC: _suite_graph_check(_circ_checks),
    SuiteName.TOPOLOGY: _run_topology,
    SuiteName.SUBSTITUTION: _run_substitution,
    SuiteName.RESTRICTION: _run_restriction,
    SuiteName.GENERATORS: _suite_graph_check(generator_failures),
    SuiteName.TRIAS: _run_trias,
    SuiteName.LALGEBRA: _run_lalgebra,
    SuiteName.OPCAT: _run_opcat,
    SuiteName.FVECTOR: _run_fvector,
}


def run_suite(name: SuiteName | str, options: SuiteOptions | None = None) -> VerificationReport:
    """Run one named suite and time it."""
    options = options or SuiteOptions()
    try:
        suite = SuiteName(name)
    except ValueError:
        raise InputError(f"Unknown suite '{name}'") from None
    max_n = options.max_n if options.max_n is not None else DEFAULT_MAX_N[suite]
    if max_n < 1:
        raise InputError("--max-n must be at least 1")
    if options.samples is None:
        options = replace(options, samples=DEFAULT_SAMPLES.get(suite, FALLBACK_SAMPLES))
    report = VerificationReport(suite, "", seed=options.seed, samples=options.samples)
    start = time.perf_counter()
    SUITES[suite](report, max_n, options)
    report.wall_time = time.perf_counter() - start
    logger.info(f"Suite {suite}: {report.cases} cases, {report.failure_count} failures "
                f"in {report.wall_time:.2f}s")
    return report
