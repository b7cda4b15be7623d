"""Deterministic automata with semiring-valued outputs.

``determinize`` is the weighted subset construction (states are the reachable
row vectors), ``minimize`` is Moore partition refinement on outputs, and
``linearize`` turns a deterministic automaton back into a K-linear one with
0/1 transfer matrices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import KLinearAutomaton
from .errors import (
    AlphabetMismatchError,
    BudgetExceededError,
    SchemaError,
    SemiringMismatchError,
    UnknownSymbolError,
)
from .linalg import ONE, Basis, Matrix
from .semiring import Semiring

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class DFA:
    """``delta[i][q]`` is the successor of state ``q`` under ``alphabet[i]``.

    ``vectors`` records, for a determinization, the row vector each state
    stands for; it is ``None`` once states are only labels.
    """

    semiring: Semiring
    alphabet: tuple
    states: tuple
    start: int
    delta: tuple
    output: tuple
    vectors: tuple | None = None

    def __post_init__(self):
        n = len(self.states)
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "states", tuple(str(s) for s in self.states))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "output", tuple(self.output))
        if self.vectors is not None:
            object.__setattr__(self, "vectors", tuple(tuple(v) for v in self.vectors))
            if len(self.vectors) != n:
                raise SchemaError("one vector per state is required")
        if n == 0:
            raise SchemaError("a deterministic automaton needs at least one state")
        if len(set(self.states)) != n:
            raise SchemaError("state labels must be distinct")
        if not (type(self.start) is int and 0 <= self.start < n):
            raise SchemaError(f"start state {self.start!r} out of range")
        if len(self.delta) != len(self.alphabet):
            raise SchemaError("one transition row per alphabet symbol is required")
        for row in self.delta:
            if len(row) != n or any(not (type(q) is int and 0 <= q < n) for q in row):
                raise SchemaError("transition table must be total with in-range targets")
        if len(self.output) != n:
            raise SchemaError("one output per state is required")
        for v in self.output:
            if not self.semiring.contains(v):
                raise SemiringMismatchError(f"output {v!r} is not in {self.semiring.name}")
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(self.alphabet)})

    def __len__(self):
        return len(self.states)

    def successor(self, q: int, symbol: str) -> int:
        try:
            return self.delta[self._index[symbol]][q]
        except KeyError:
            raise UnknownSymbolError(f"symbol {symbol!r} not in alphabet {self.alphabet}") from None

    def run(self, w: str, q: int | None = None) -> int:
        q = self.start if q is None else q
        for a in w:
            q = self.successor(q, a)
        return q

    def delta_dict(self) -> dict:
        return {a: list(row) for a, row in zip(self.alphabet, self.delta)}


def dfa_eval(d: DFA, w: str):
    return d.output[d.run(w)]


def determinize(a: KLinearAutomaton, budget: int = DEFAULT_BUDGET) -> DFA:
    """Breadth-first closure of the start vector under every letter.

    Only accessible states are produced; numbering follows discovery order
    with letters tried in alphabet order.
    """
    if budget < 1:
        raise ValueError("state budget must be positive")
    start = a.start.row(0)
    index = {start: 0}
    vectors = [start]
    delta = [[] for _ in a.alphabet]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i, sym in enumerate(a.alphabet):
            u = a.step(v, sym)
            q = index.get(u)
            if q is None:
                if len(vectors) >= budget:
                    raise BudgetExceededError(budget, len(queue) + 1)
                q = index[u] = len(vectors)
                vectors.append(u)
                queue.append(u)
            delta[i].append(q)
    return DFA(
        a.semiring,
        a.alphabet,
        tuple(f"q{i}" for i in range(len(vectors))),
        0,
        delta,
        tuple(a.observe(v) for v in vectors),
        tuple(vectors),
    )


def accessible(d: DFA) -> DFA:
    """The accessible subautomaton, states renumbered in BFS order."""
    order = _bfs_order(d)
    if order == list(range(len(d))):
        return d
    return _restrict(d, order)


def _bfs_order(d: DFA) -> list[int]:
    seen = {d.start}
    order = [d.start]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for row in d.delta:
            r = row[q]
            if r not in seen:
                seen.add(r)
                order.append(r)
                queue.append(r)
    return order


def _restrict(d: DFA, order: list[int]) -> DFA:
    new = {q: i for i, q in enumerate(order)}
    return DFA(
        d.semiring,
        d.alphabet,
        tuple(d.states[q] for q in order),
        new[d.start],
        [[new[row[q]] for q in order] for row in d.delta],
        [d.output[q] for q in order],
        None if d.vectors is None else [d.vectors[q] for q in order],
    )


def minimize_with_map(d: DFA) -> tuple[DFA, list[int]]:
    """Minimize an accessible DFA; also return the state -> class map.

    Classes are numbered in BFS order from the start class, so equivalent
    inputs yield identical results.
    """
    if len(_bfs_order(d)) != len(d):
        raise ValueError("minimization requires every state to be accessible")
    n = len(d)
    block = _first_occurrence_ids(d.output[q] for q in range(n))
    count = len(set(block))
    while True:
        block_new = _first_occurrence_ids(
            (block[q], tuple(block[row[q]] for row in d.delta)) for q in range(n)
        )
        new_count = len(set(block_new))
        block = block_new
        if new_count == count:
            break
        count = new_count
    # canonical numbering by BFS over the quotient
    reps: dict[int, int] = {}
    for q in range(n):
        reps.setdefault(block[q], q)
    order = [block[d.start]]
    seen = set(order)
    queue = deque(order)
    while queue:
        b = queue.popleft()
        for row in d.delta:
            c = block[row[reps[b]]]
            if c not in seen:
                seen.add(c)
                order.append(c)
                queue.append(c)
    rank = {b: i for i, b in enumerate(order)}
    classes = [rank[block[q]] for q in range(n)]
    k = len(order)
    minimal = DFA(
        d.semiring,
        d.alphabet,
        tuple(f"m{i}" for i in range(k)),
        0,
        [[rank[block[row[reps[b]]]] for b in order] for row in d.delta],
        [d.output[reps[b]] for b in order],
    )
    return minimal, classes


def _first_occurrence_ids(keys) -> list[int]:
    ids: dict = {}
    return [ids.setdefault(k, len(ids)) for k in keys]


def minimize(d: DFA) -> DFA:
    return minimize_with_map(accessible(d))[0]


def _check_alphabets(d: DFA, e: DFA):
    if d.alphabet != e.alphabet:
        raise AlphabetMismatchError(f"{d.alphabet} vs {e.alphabet}")


def dfa_isomorphic(d: DFA, e: DFA) -> dict[int, int] | None:
    """The output-preserving bijection ``d -> e`` sending start to start, if any.

    Both automata must be accessible, which makes the bijection unique.
    """
    _check_alphabets(d, e)
    if len(d) != len(e):
        return None
    mapping = {d.start: e.start}
    used = {e.start}
    queue = deque([d.start])
    while queue:
        p = queue.popleft()
        q = mapping[p]
        if d.output[p] != e.output[q]:
            return None
        for rd, re in zip(d.delta, e.delta):
            p2, q2 = rd[p], re[q]
            if p2 in mapping:
                if mapping[p2] != q2:
                    return None
            else:
                if q2 in used:
                    return None
                mapping[p2] = q2
                used.add(q2)
                queue.append(p2)
    return mapping if len(mapping) == len(d) else None


def separating_word(d: DFA, e: DFA) -> str | None:
    """A shortest word on which the two automata disagree, or ``None``."""
    _check_alphabets(d, e)
    start = (d.start, e.start)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if d.output[p] != e.output[q]:
            letters = []
            while parent[pair] is not None:
                pair, a = parent[pair]
                letters.append(a)
            return "".join(reversed(letters))
        for a, rd, re in zip(d.alphabet, d.delta, e.delta):
            nxt = (rd[p], re[q])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return None


def linearize(d: DFA) -> KLinearAutomaton:
    """The free K-linear automaton on the state set of ``d``."""
    h = d.semiring
    n = len(d)
    basis = Basis(d.states)

    def characteristic(j):
        return [h.one if i == j else h.zero for i in range(n)]

    mats = [Matrix(h, basis, basis, [characteristic(row[q]) for q in range(n)]) for row in d.delta]
    return KLinearAutomaton(
        h,
        d.alphabet,
        basis,
        Matrix(h, ONE, basis, [characteristic(d.start)]),
        mats,
        Matrix(h, basis, ONE, [[v] for v in d.output]),
    )
