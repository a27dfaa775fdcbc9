"""Output formatters for the tubings CLI.

Provides ReportFormatter ABC with two implementations:
- TextReportFormatter: Human-readable text output, PASS/FAIL coloured on a TTY
- JsonReportFormatter: Machine-readable JSON output (accumulator pattern)

Neither writes a timestamp, so repeated runs print identical bytes.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
import logging
from typing import Sequence

from tubings import __version__
from tubings.chains import CoproductChain, TubingChain
from tubings.colors import (
    ColorConfig,
    ColorMode,
    failure_detail,
    heading,
    note,
    signed_coefficient,
    status_label,
)
from tubings.dtub import DChain, DTubing
from tubings.graph import Graph, nodes_of
from tubings.serialization import (
    dumps,
    encode_chain,
    encode_coproduct,
    encode_dchain,
    encode_graph,
    encode_tubing,
)
from tubings.tubing import Tubing, to_surjection
from tubings.types import AxiomResult

logger = logging.getLogger(__name__)


def format_tubes(T: Tubing) -> str:
    """Tubes as brace lists in canonical order: ``{1} {1,2} {1,2,3}``."""
    return " ".join("{" + ",".join(map(str, nodes_of(t))) + "}" for t in T.tubes)


def format_graph(g: Graph) -> str:
    edges = " ".join(f"{a}-{b}" for a, b in g.edges)
    return f"graph n={g.n}" + (f" edges {edges}" if edges else "")


def format_dtubing(T: DTubing) -> str:
    parts = []
    for c in T.components:
        parts.append(f"[{format_tubes(c.tubing)}]{'^' if c.reduced else ''}")
    return " | ".join(parts)


class ReportFormatter(ABC):
    """Abstract base class for everything a sub-command prints.

    One formatter is created per invocation; ``finalize`` is called once at the
    end and is where accumulating formatters emit their output.
    """

    def __init__(self, command: str, seed: int = 0):
        self.command = command
        self.seed = seed

    @abstractmethod
    def format_tubings(self, g: Graph, tubings: Sequence[Tubing]) -> None:
        ...

    @abstractmethod
    def format_f_vector(self, g: Graph, f_vector: Sequence[int]) -> None:
        ...

    @abstractmethod
    def format_tubing(self, T: Tubing) -> None:
        ...

    @abstractmethod
    def format_chain(self, chain: TubingChain) -> None:
        ...

    @abstractmethod
    def format_coproduct(self, chain: CoproductChain) -> None:
        ...

    @abstractmethod
    def format_dchain(self, op: str, chain: DChain) -> None:
        ...

    @abstractmethod
    def format_fiber(self, index: int, graph: Graph, T: Tubing, cardinality: Sequence[int]) -> None:
        ...

    @abstractmethod
    def format_axioms(self, g: Graph, results: Sequence[AxiomResult]) -> None:
        ...

    @abstractmethod
    def format_report(self, report) -> None:
        """Print a VerificationReport."""
        ...

    @abstractmethod
    def finalize(self) -> None:
        ...


class JsonReportFormatter(ReportFormatter):
    """JSON output: collects results and prints one document in ``finalize``."""

    def __init__(self, command: str, seed: int = 0, pretty: bool = False):
        super().__init__(command, seed)
        self.pretty = pretty
        self._data: dict = {}

    def _build_header(self) -> dict:
        return {
            "name": "tubings",
            "version": __version__,
            "command": self.command,
            "seed": self.seed,
        }

    def format_tubings(self, g: Graph, tubings: Sequence[Tubing]) -> None:
        self._data["graph"] = encode_graph(g)
        self._data["count"] = len(tubings)
        self._data["tubings"] = [encode_tubing(T) for T in tubings]

    def format_f_vector(self, g: Graph, f_vector: Sequence[int]) -> None:
        self._data["graph"] = encode_graph(g)
        self._data["fVector"] = list(f_vector)
        self._data["total"] = sum(f_vector)

    def format_tubing(self, T: Tubing) -> None:
        self._data["tubing"] = encode_tubing(T)

    def format_chain(self, chain: TubingChain) -> None:
        self._data["chain"] = encode_chain(chain)

    def format_coproduct(self, chain: CoproductChain) -> None:
        self._data["coproduct"] = encode_coproduct(chain)

    def format_dchain(self, op: str, chain: DChain) -> None:
        self._data["operation"] = op
        self._data["chain"] = encode_dchain(chain)

    def format_fiber(self, index: int, graph: Graph, T: Tubing, cardinality: Sequence[int]) -> None:
        self._data["index"] = index
        self._data["cardinality"] = list(cardinality)
        self._data["fiber"] = encode_tubing(T)

    def format_axioms(self, g: Graph, results: Sequence[AxiomResult]) -> None:
        self._data["graph"] = encode_graph(g)
        self._data["passed"] = all(r.passed for r in results)
        self._data["axioms"] = [
            {"axiom": r.axiom, "cases": r.cases, "passed": r.passed, "counterexample": r.counterexample}
            for r in results
        ]

    def format_report(self, report) -> None:
        self._data["suite"] = str(report.suite)
        self._data["census"] = report.census
        self._data["cases"] = report.cases
        self._data["passed"] = report.passed
        self._data["failureCount"] = report.failure_count
        self._data["samples"] = report.samples
        self._data["failures"] = [{"case": f.case, "detail": f.detail} for f in report.failures]

    def finalize(self) -> None:
        output = {"header": self._build_header(), **self._data}
        print(dumps(output, pretty=self.pretty))


class TextReportFormatter(ReportFormatter):
    """Plain text output, one item per line."""

    def __init__(self, command: str, seed: int = 0, color_config: ColorConfig | None = None):
        super().__init__(command, seed)
        self.cc = color_config or ColorConfig(mode=ColorMode.AUTO)

    def format_tubings(self, g: Graph, tubings: Sequence[Tubing]) -> None:
        print(heading(format_graph(g), self.cc))
        for T in tubings:
            print(f"  {format_tubes(T)}")
        print(note(f"{len(tubings)} tubings", self.cc))

    def format_f_vector(self, g: Graph, f_vector: Sequence[int]) -> None:
        print(heading(format_graph(g), self.cc))
        print(f"f-vector: [{', '.join(map(str, f_vector))}]")
        print(f"total faces: {sum(f_vector)}")

    def format_tubing(self, T: Tubing) -> None:
        print(format_tubes(T))
        if len(T.graph.edges) == T.graph.n * (T.graph.n - 1) // 2:
            print(note(f"surjection: ({','.join(map(str, to_surjection(T)))})", self.cc))

    def format_chain(self, chain: TubingChain) -> None:
        if chain.is_zero():
            print("0")
            return
        for T, coeff in chain:
            print(f"{signed_coefficient(coeff, self.cc)}  {format_tubes(T)}")

    def format_coproduct(self, chain: CoproductChain) -> None:
        if chain.is_zero():
            print("0")
            return
        for key, coeff in chain:
            factors = ["1" if f is None else format_tubes(f) for f in key]
            print(f"{signed_coefficient(coeff, self.cc)}  " + "  ⊗  ".join(factors))

    def format_dchain(self, op: str, chain: DChain) -> None:
        print(note(op, self.cc))
        if chain.is_zero():
            print("0")
            return
        for T, coeff in chain:
            print(f"{signed_coefficient(coeff, self.cc)}  {format_dtubing(T)}")

    def format_fiber(self, index: int, graph: Graph, T: Tubing, cardinality: Sequence[int]) -> None:
        print(f"|f| = ({','.join(map(str, cardinality))})")
        print(f"fiber over {index}: {format_graph(graph)}")
        print(f"  {format_tubes(T)}")

    def format_axioms(self, g: Graph, results: Sequence[AxiomResult]) -> None:
        print(heading(format_graph(g), self.cc))
        for r in results:
            print(f"  {status_label(r.passed, self.cc)}  {r.axiom} ({r.cases} cases)")
            if not r.passed:
                print(failure_detail(f"    counterexample: {dumps(r.counterexample)}", self.cc))

    def format_report(self, report) -> None:
        print(f"{status_label(report.passed, self.cc)}  {heading(str(report.suite), self.cc)}")
        print(f"  census: {report.census}")
        print(f"  cases: {report.cases}")
        print(f"  failures: {report.failure_count}")
        if report.samples:
            print(f"  seed: {report.seed}, samples: {report.samples}")
        for failure in report.failures:
            print(failure_detail(f"  {failure.case}: {dumps(failure.detail)}", self.cc))
        if report.failure_count > len(report.failures):
            print(note(f"  ... {report.failure_count - len(report.failures)} more", self.cc))

    def finalize(self) -> None:
        pass
