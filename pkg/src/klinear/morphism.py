"""Automaton morphisms: linear maps intertwining the actions, preserving start
and output.  A verified morphism between two automata proves they accept the
same language."""
from __future__ import annotations

from dataclasses import dataclass

from .automaton import KLinearAutomaton
from .errors import AlphabetMismatchError, MorphismShapeError, SemiringMismatchError
from .linalg import Matrix, identity, mat_mul

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class Morphism:
    """``matrix`` has one row per source state and one column per target state."""

    source: KLinearAutomaton
    target: KLinearAutomaton
    matrix: Matrix
    direction: str = FORWARD


@dataclass(frozen=True)
class MorphismFailure:
    condition: str  # "start", "transition" or "output"
    letter: str | None
    row: int
    col: int
    lhs: object
    rhs: object

    def __str__(self):
        where = f" for letter {self.letter!r}" if self.letter is not None else ""
        return (
            f"{self.condition} condition fails{where} at ({self.row}, {self.col}): "
            f"{self.lhs!r} != {self.rhs!r}"
        )


def check_shape(m: Morphism):
    src, tgt, p = m.source, m.target, m.matrix
    if src.semiring != tgt.semiring or p.semiring != src.semiring:
        raise SemiringMismatchError("morphism endpoints and matrix must share a semiring")
    if src.alphabet != tgt.alphabet:
        raise AlphabetMismatchError(f"{src.alphabet} vs {tgt.alphabet}")
    if p.rows != src.states or p.cols != tgt.states:
        raise MorphismShapeError(
            f"matrix is {p.shape} over {p.rows.labels} x {p.cols.labels}; "
            f"expected {src.dim}x{tgt.dim} over the source and target state bases"
        )


def _compare(condition, letter, lhs: Matrix, rhs: Matrix, out: list):
    for i, (ra, rb) in enumerate(zip(lhs.entries, rhs.entries)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                out.append(MorphismFailure(condition, letter, i, j, x, y))


def verify_morphism(m: Morphism) -> list[MorphismFailure]:
    """Check ``start_A P = start_B``, ``M^A_x P = P M^B_x`` for each letter, and
    ``output_A = P output_B``.  An empty list means ``m`` is a morphism.

    Intertwining on generators suffices: it extends to every word by induction.
    Raises :class:`MorphismShapeError` when ``m`` is ill-typed.
    """
    check_shape(m)
    src, tgt, p = m.source, m.target, m.matrix
    failures: list[MorphismFailure] = []
    _compare("start", None, mat_mul(src.start, p), tgt.start, failures)
    for a, ma, mb in zip(src.alphabet, src.transitions, tgt.transitions):
        _compare("transition", a, mat_mul(ma, p), mat_mul(p, mb), failures)
    _compare("output", None, src.output, mat_mul(p, tgt.output), failures)
    return failures


def identity_morphism(a: KLinearAutomaton) -> Morphism:
    return Morphism(a, a, identity(a.semiring, a.states))


def compose(m1: Morphism, m2: Morphism) -> Morphism:
    """``m1`` followed by ``m2``."""
    if m1.target != m2.source:
        raise MorphismShapeError("cannot compose: first target is not second source")
    return Morphism(m1.source, m2.target, mat_mul(m1.matrix, m2.matrix))
