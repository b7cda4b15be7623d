"""JSON encodings of automata, deterministic automata, morphisms and certificates."""
from __future__ import annotations

import json
from pathlib import Path

from .automaton import KLinearAutomaton
from .determinize import DFA
from .errors import KLinearError, SchemaError
from .linalg import Basis, Matrix
from .morphism import BACKWARD, FORWARD
from .proofsys import Certificate, Edge
from .semiring import Semiring, get_semiring


def _require(data, key, kind=None):
    if not isinstance(data, dict):
        raise SchemaError(f"expected a JSON object, got {type(data).__name__}")
    if key not in data:
        raise SchemaError(f"missing key {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(f"{key!r} must be a {kind.__name__}")
    return value


def _values(h: Semiring, raw, what):
    if not isinstance(raw, list):
        raise SchemaError(f"{what} must be a list")
    return [h.from_json(v) for v in raw]


def _matrix_rows(h: Semiring, raw, what):
    if not isinstance(raw, list):
        raise SchemaError(f"{what} must be a list of rows")
    return [_values(h, r, what) for r in raw]


def automaton_to_json(a: KLinearAutomaton) -> dict:
    enc = a.semiring.to_json
    return {
        "semiring": a.semiring.name,
        "alphabet": list(a.alphabet),
        "states": list(a.states),
        "start": [enc(v) for v in a.start.row(0)],
        "transitions": {
            sym: [[enc(v) for v in row] for row in m.entries]
            for sym, m in zip(a.alphabet, a.transitions)
        },
        "output": [enc(v) for v in a.output.column(0)],
    }


def automaton_from_json(data, search_dirs=()) -> KLinearAutomaton:
    h = get_semiring(_require(data, "semiring", str), search_dirs)
    alphabet = _require(data, "alphabet", list)
    states = _require(data, "states", list)
    transitions = _require(data, "transitions", dict)
    start = _values(h, _require(data, "start"), "start")
    output = _values(h, _require(data, "output"), "output")
    n = len(states)
    if len(start) != n or len(output) != n:
        raise SchemaError(f"start and output must have {n} entries")
    mats = {sym: _matrix_rows(h, m, f"transitions[{sym!r}]") for sym, m in transitions.items()}
    try:
        return KLinearAutomaton.build(h, alphabet, start, mats, output, states=states)
    except KLinearError as exc:
        raise SchemaError(str(exc)) from exc


def dfa_to_json(d: DFA) -> dict:
    enc = d.semiring.to_json
    out = {
        "semiring": d.semiring.name,
        "alphabet": list(d.alphabet),
        "states": list(d.states),
        "start": d.start,
        "delta": d.delta_dict(),
        "output": [enc(v) for v in d.output],
    }
    if d.vectors is not None:
        out["vectors"] = [[enc(v) for v in vec] for vec in d.vectors]
    return out


def dfa_from_json(data, search_dirs=()) -> DFA:
    h = get_semiring(_require(data, "semiring", str), search_dirs)
    alphabet = _require(data, "alphabet", list)
    delta = _require(data, "delta", dict)
    if sorted(delta) != sorted(alphabet):
        raise SchemaError("delta must have exactly one row per alphabet symbol")
    vectors = data.get("vectors")
    if vectors is not None:
        vectors = _matrix_rows(h, vectors, "vectors")
    try:
        return DFA(
            h,
            alphabet,
            _require(data, "states", list),
            _require(data, "start"),
            [delta[a] for a in alphabet],
            _values(h, _require(data, "output"), "output"),
            vectors,
        )
    except (KLinearError, TypeError) as exc:
        raise SchemaError(str(exc)) from exc


def matrix_to_json(m: Matrix) -> list:
    enc = m.semiring.to_json
    return [[enc(v) for v in row] for row in m.entries]


def morphism_to_json(matrix: Matrix, direction: str = FORWARD) -> dict:
    return {"matrix": matrix_to_json(matrix), "direction": direction}


def matrix_between(h: Semiring, raw, source: KLinearAutomaton, target: KLinearAutomaton) -> Matrix:
    """Decode a bare morphism matrix, labeling it with the endpoint bases when
    the shape fits (otherwise with index labels, so verification can report it)."""
    rows = _matrix_rows(h, raw, "matrix")
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise SchemaError("matrix rows have different lengths")
    ncols = widths.pop() if widths else 0
    if len(rows) == source.dim and ncols == target.dim:
        return Matrix(h, source.states, target.states, rows)
    return Matrix(h, Basis.range(len(rows)), Basis.range(ncols), rows)


def certificate_to_json(c: Certificate) -> dict:
    return {
        "nodes": [automaton_to_json(n) for n in c.nodes],
        "edges": [morphism_to_json(e.matrix, e.direction) for e in c.edges],
    }


def certificate_from_json(data, search_dirs=()) -> Certificate:
    nodes = [automaton_from_json(n, search_dirs) for n in _require(data, "nodes", list)]
    raw_edges = _require(data, "edges", list)
    edges = []
    for i, e in enumerate(raw_edges):
        direction = _require(e, "direction", str)
        if direction not in (FORWARD, BACKWARD):
            raise SchemaError(f"edge {i}: direction must be 'forward' or 'backward'")
        if i + 1 < len(nodes):
            src, tgt = nodes[i], nodes[i + 1]
            if direction == BACKWARD:
                src, tgt = tgt, src
            h = src.semiring
            matrix = matrix_between(h, _require(e, "matrix"), src, tgt)
        else:
            h = nodes[0].semiring if nodes else get_semiring("bool")
            rows = _matrix_rows(h, _require(e, "matrix"), "matrix")
            matrix = Matrix.from_rows(h, rows)
        edges.append(Edge(matrix, direction))
    return Certificate(nodes, edges)


def read_json(path):
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc


def load_automaton(path) -> KLinearAutomaton:
    return automaton_from_json(read_json(path), [Path(path).parent])


def load_dfa(path) -> DFA:
    return dfa_from_json(read_json(path), [Path(path).parent])


def load_certificate(path) -> Certificate:
    return certificate_from_json(read_json(path), [Path(path).parent])


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)
