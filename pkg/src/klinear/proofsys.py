"""Equivalence certificates: chains of automata joined by verified morphisms.

For equivalent ``a`` and ``b`` the generated chain is::

    a  <--  F(U(a))  -->  F(M)  <--  F(U(b))  -->  b

where ``U`` is determinization, ``F`` linearization and ``M`` the common
minimal deterministic automaton.  The outer edges send each deterministic
state to the vector it stands for; the inner edges send it to its
minimization class.
"""
from __future__ import annotations

from dataclasses import dataclass

from .automaton import KLinearAutomaton, _check_compatible
from .determinize import (
    DEFAULT_BUDGET,
    DFA,
    dfa_isomorphic,
    determinize,
    linearize,
    minimize_with_map,
    separating_word,
)
from .errors import KLinearError
from .linalg import Basis, Matrix
from .morphism import BACKWARD, FORWARD, Morphism, verify_morphism


@dataclass(frozen=True)
class Edge:
    """A morphism matrix between consecutive nodes ``i`` and ``i+1``.

    ``forward`` maps node ``i`` to node ``i+1``; ``backward`` the reverse.
    """

    matrix: Matrix
    direction: str


@dataclass(frozen=True)
class Certificate:
    nodes: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))


@dataclass(frozen=True)
class NotEquivalent:
    """Refutation: the two automata disagree on ``word``."""

    word: str
    value_a: object
    value_b: object


@dataclass(frozen=True)
class CertificateIssue:
    index: int | None
    kind: str  # "endpoint", "structure" or "morphism"
    detail: str

    def __str__(self):
        where = "" if self.index is None else f" {self.index}"
        what = "edge" if self.kind in ("structure", "morphism") else "node"
        return f"{what}{where}: {self.kind}: {self.detail}"


def _vector_matrix(d: DFA, target: KLinearAutomaton) -> Matrix:
    # row for each deterministic state is the vector it represents
    return Matrix(target.semiring, Basis(d.states), target.states, d.vectors)


def _class_matrix(d: DFA, classes, target: KLinearAutomaton) -> Matrix:
    h = target.semiring
    k = target.dim
    rows = [[h.one if j == c else h.zero for j in range(k)] for c in classes]
    return Matrix(h, Basis(d.states), target.states, rows)


def prove_equivalent(a: KLinearAutomaton, b: KLinearAutomaton, budget: int = DEFAULT_BUDGET):
    """Return a :class:`Certificate` or a :class:`NotEquivalent` refutation.

    Raises :class:`~klinear.errors.BudgetExceededError` if either
    determinization is larger than ``budget``.
    """
    _check_compatible(a, b)
    da, db = determinize(a, budget), determinize(b, budget)
    ma, classes_a = minimize_with_map(da)
    mb, classes_b = minimize_with_map(db)
    iso = dfa_isomorphic(mb, ma)
    if iso is None:
        w = separating_word(da, db)
        if w is None:  # pragma: no cover - minimal DFAs are canonical
            raise KLinearError("minimal automata differ but no separating word exists")
        return NotEquivalent(w, a.eval(w), b.eval(w))
    fa, fb, fm = linearize(da), linearize(db), linearize(ma)
    edges = (
        Edge(_vector_matrix(da, a), BACKWARD),
        Edge(_class_matrix(da, classes_a, fm), FORWARD),
        Edge(_class_matrix(db, [iso[c] for c in classes_b], fm), BACKWARD),
        Edge(_vector_matrix(db, b), FORWARD),
    )
    return Certificate((a, fa, fm, fb, b), edges)


def edge_morphism(c: Certificate, i: int) -> Morphism:
    e = c.edges[i]
    left, right = c.nodes[i], c.nodes[i + 1]
    if e.direction == FORWARD:
        return Morphism(left, right, e.matrix, FORWARD)
    return Morphism(right, left, e.matrix, BACKWARD)


def verify_certificate(c: Certificate, a: KLinearAutomaton, b: KLinearAutomaton) -> list[CertificateIssue]:
    """Every problem found; an empty list means the certificate is accepted."""
    issues: list[CertificateIssue] = []
    if not c.nodes:
        return [CertificateIssue(None, "structure", "certificate has no nodes")]
    if c.nodes[0] != a:
        issues.append(CertificateIssue(0, "endpoint", "first node is not the claimed automaton A"))
    if c.nodes[-1] != b:
        issues.append(
            CertificateIssue(len(c.nodes) - 1, "endpoint", "last node is not the claimed automaton B")
        )
    if len(c.edges) != len(c.nodes) - 1:
        issues.append(
            CertificateIssue(
                None, "structure", f"{len(c.nodes)} nodes need {len(c.nodes) - 1} edges, got {len(c.edges)}"
            )
        )
        return issues
    for i, e in enumerate(c.edges):
        if e.direction not in (FORWARD, BACKWARD):
            issues.append(CertificateIssue(i, "structure", f"unknown direction {e.direction!r}"))
            continue
        try:
            failures = verify_morphism(edge_morphism(c, i))
        except KLinearError as exc:
            issues.append(CertificateIssue(i, "structure", str(exc)))
            continue
        for f in failures:
            issues.append(CertificateIssue(i, "morphism", str(f)))
    return issues
