"""JSON encodings of graphs, tubings, chains and disconnected tubings.

Nodes are 1-based everywhere. A tubing on a complete graph also carries its
surjection; decoding ignores that field. A reduced component lists its tubes
without the universal tube.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Union

from tubings.chains import CoproductChain, TubingChain
from tubings.dtub import Component, DChain, DTubing, generator
from tubings.errors import InputError
from tubings.graph import Graph, nodeset, nodes_of
from tubings.tubing import Tubing, make_tubing, to_surjection

logger = logging.getLogger(__name__)


def _is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def encode_graph(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def encode_tubes(tubes) -> list[list[int]]:
    return [list(nodes_of(t)) for t in tubes]


def encode_tubing(T: Tubing) -> dict:
    data: dict = {"graph": encode_graph(T.graph), "tubes": T.node_lists()}
    if _is_complete(T.graph):
        data["surjection"] = list(to_surjection(T))
    return data


def encode_chain(c: TubingChain) -> list[dict]:
    return [{"coeff": coeff, "tubing": encode_tubing(T)} for T, coeff in c]


def _encode_factor(f):
    return None if f is None else encode_tubing(f)


def encode_coproduct(c: CoproductChain) -> list[dict]:
    """Pairs as ``left``/``right``; longer tensors as a ``factors`` list."""
    out = []
    for key, coeff in c:
        if len(key) == 2:
            out.append({"coeff": coeff, "left": _encode_factor(key[0]),
                        "right": _encode_factor(key[1])})
        else:
            out.append({"coeff": coeff, "factors": [_encode_factor(f) for f in key]})
    return out


def _require(data: Any, key: str, kind: type) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"Missing field '{key}'")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise InputError(f"Field '{key}' must be of type {kind.__name__}")
    return value


def decode_graph(data: Any) -> Graph:
    n = _require(data, "n", int)
    edges = _require(data, "edges", list)
    for e in edges:
        if not isinstance(e, list) or not all(isinstance(v, int) for v in e):
            raise InputError(f"Edge {e!r} must be a list of node numbers")
    return Graph.from_edges(n, edges)


def decode_tubes(g: Graph, data: Any) -> list[int]:
    if not isinstance(data, list):
        raise InputError("Field 'tubes' must be a list of node lists")
    tubes = []
    for t in data:
        if not isinstance(t, list) or not t or not all(isinstance(v, int) for v in t):
            raise InputError(f"Tube {t!r} must be a non-empty list of node numbers")
        mask = nodeset(t)
        g.check_nodes(mask)
        tubes.append(mask)
    return tubes


def decode_tubing(data: Any) -> Tubing:
    """Validate and build a tubing; the universal tube may be omitted."""
    g = decode_graph(_require(data, "graph", dict))
    tubes = decode_tubes(g, data.get("tubes"))
    return make_tubing(g, tubes + [g.all_nodes])


def decode_chain(data: Any) -> TubingChain:
    if not isinstance(data, list):
        raise InputError("A chain must be a list of {coeff, tubing} terms")
    return TubingChain([(decode_tubing(_require(term, "tubing", dict)), _require(term, "coeff", int))
                        for term in data])


def parse_json(text: str, source: str = "<input>") -> Any:
    """Parse JSON text, reporting the position of syntax errors."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e


def load_json(path: Union[str, Path]) -> Any:
    p = Path(path)
    logger.debug(f"Reading {p}")
    return parse_json(p.read_text(encoding="utf-8"), str(p))


def dumps(data: Any, pretty: bool = False) -> str:
    """Deterministic JSON text: compact by default, indented with ``pretty``."""
    if pretty:
        return json.dumps(data, indent=2, ensure_ascii=False)
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def encode_dtubing(T: DTubing) -> dict:
    return {"components": [
        {"graph": encode_graph(c.tubing.graph), "tubes": encode_tubes(c.tubes), "reduced": c.reduced}
        for c in T.components
    ]}


def encode_dchain(c: DChain) -> list[dict]:
    return [{"coeff": coeff, "dtubing": encode_dtubing(T)} for T, coeff in c]


def decode_dtubing(data: Any) -> DTubing:
    """Accept a DTubing object, or a plain tubing as a one-component element."""
    if isinstance(data, dict) and "components" not in data:
        return generator(decode_tubing(data))
    components = _require(data, "components", list)
    out = []
    for item in components:
        reduced = _require(item, "reduced", bool)
        out.append(Component(decode_tubing(item), reduced))
    return DTubing(tuple(out))
