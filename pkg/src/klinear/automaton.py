"""Right K-linear automata and the language-preserving constructions on them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    AlphabetMismatchError,
    BasisMismatchError,
    SchemaError,
    SemiringMismatchError,
    UnknownSymbolError,
)
from .linalg import (
    ONE,
    Basis,
    Matrix,
    block_diag,
    identity,
    kronecker,
    mat_add,
    mat_mul,
    relabel,
    scalar_mul,
    transpose,
    vec_mat,
)
from .semiring import Semiring
from .words import Comul, _as_comul


@dataclass(frozen=True)
class KLinearAutomaton:
    """Start row vector, one transition matrix per letter, output column.

    The weight of a word ``w = a1...an`` is ``start · M_a1 ··· M_an · output``.
    ``transitions`` is aligned with ``alphabet``.
    """

    semiring: Semiring
    alphabet: tuple
    states: Basis
    start: Matrix
    transitions: tuple
    output: Matrix

    def __post_init__(self):
        h = self.semiring
        alphabet = tuple(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", tuple(self.transitions))
        if len(set(alphabet)) != len(alphabet):
            raise SchemaError(f"alphabet symbols must be distinct: {alphabet}")
        for a in alphabet:
            if not isinstance(a, str) or len(a) != 1:
                raise SchemaError(f"alphabet symbols must be single characters, got {a!r}")
        if len(self.transitions) != len(alphabet):
            raise SchemaError("exactly one transition matrix per alphabet symbol is required")
        pieces = [("start", self.start, ONE, self.states), ("output", self.output, self.states, ONE)]
        pieces += [(f"M_{a}", m, self.states, self.states) for a, m in zip(alphabet, self.transitions)]
        for name, m, rows, cols in pieces:
            if m.semiring != h:
                raise SemiringMismatchError(f"{name} is over {m.semiring.name}, expected {h.name}")
            if m.rows != rows or m.cols != cols:
                raise BasisMismatchError(f"{name} has bases {m.rows.labels}x{m.cols.labels}")
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(alphabet)})

    @classmethod
    def build(cls, semiring, alphabet, start, transitions: Mapping, output, states=None):
        """Assemble an automaton from nested lists of semiring values."""
        alphabet = tuple(alphabet)
        n = len(start)
        basis = Basis(tuple(states)) if states is not None else Basis.range(n, "s")
        missing = [a for a in alphabet if a not in transitions]
        if missing:
            raise SchemaError(f"no transition matrix for {missing}")
        extra = [a for a in transitions if a not in alphabet]
        if extra:
            raise SchemaError(f"transition matrices for symbols outside the alphabet: {extra}")
        return cls(
            semiring,
            alphabet,
            basis,
            Matrix(semiring, ONE, basis, [list(start)]),
            tuple(Matrix(semiring, basis, basis, transitions[a]) for a in alphabet),
            Matrix(semiring, basis, ONE, [[v] for v in output]),
        )

    @property
    def dim(self) -> int:
        return len(self.states)

    def matrix(self, symbol: str) -> Matrix:
        try:
            return self.transitions[self._index[symbol]]
        except KeyError:
            raise UnknownSymbolError(f"symbol {symbol!r} not in alphabet {self.alphabet}") from None

    def step(self, vector: Sequence, symbol: str) -> tuple:
        """The row vector ``vector · M_symbol``."""
        return vec_mat(self.semiring, vector, self.matrix(symbol).entries)

    def observe(self, vector: Sequence):
        h = self.semiring
        return h.sum(h.mul(v, o[0]) for v, o in zip(vector, self.output.entries))

    def eval(self, w: str):
        v = self.start.row(0)
        for a in w:
            v = self.step(v, a)
        return self.observe(v)

    __call__ = eval

    def eval_poly(self, terms: Iterable):
        """Linear extension of :meth:`eval` to a finite sum of ``(coeff, word)`` terms."""
        h = self.semiring
        return h.sum(h.mul(c, self.eval(w)) for c, w in terms)

    def word_matrix(self, w: str) -> Matrix:
        m = identity(self.semiring, self.states)
        for a in w:
            m = mat_mul(m, self.matrix(a))
        return m

    def transition_dict(self) -> dict:
        return dict(zip(self.alphabet, self.transitions))


def _check_compatible(a: KLinearAutomaton, b: KLinearAutomaton):
    if a.semiring != b.semiring:
        raise SemiringMismatchError(f"semiring mismatch: {a.semiring.name} vs {b.semiring.name}")
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"{a.alphabet} vs {b.alphabet}")


def direct_sum(a: KLinearAutomaton, b: KLinearAutomaton) -> KLinearAutomaton:
    """Block-diagonal union; its language is the pointwise sum."""
    _check_compatible(a, b)
    h = a.semiring
    basis = Basis(tuple(f"A.{s}" for s in a.states) + tuple(f"B.{s}" for s in b.states))
    start = Matrix(h, ONE, basis, [a.start.row(0) + b.start.row(0)])
    output = Matrix(h, basis, ONE, a.output.entries + b.output.entries)
    mats = [block_diag(ma, mb, basis, basis) for ma, mb in zip(a.transitions, b.transitions)]
    return KLinearAutomaton(h, a.alphabet, basis, start, mats, output)


def scale(a: KLinearAutomaton, k) -> KLinearAutomaton:
    return KLinearAutomaton(
        a.semiring, a.alphabet, a.states, scalar_mul(k, a.start), a.transitions, a.output
    )


def tensor(a: KLinearAutomaton, b: KLinearAutomaton, comul=Comul.DELTA3) -> KLinearAutomaton:
    """Run ``a`` and ``b`` in parallel on the tensor product of their state spaces.

    With ``DELTA1`` each letter acts on both factors (Hadamard product of the
    languages); with ``DELTA3`` each letter acts on exactly one factor
    (shuffle product).
    """
    _check_compatible(a, b)
    variant = _as_comul(comul)
    if variant is Comul.DELTA2:
        raise ValueError(
            "delta2 (deconcatenation) is not an algebra map, so it does not make the word "
            "algebra a bialgebra and induces no action on the tensor product of state spaces"
        )
    h = a.semiring
    start = relabel(kronecker(a.start, b.start), rows=ONE)
    output = relabel(kronecker(a.output, b.output), cols=ONE)
    if variant is Comul.DELTA1:
        mats = [kronecker(ma, mb) for ma, mb in zip(a.transitions, b.transitions)]
    else:
        ia, ib = identity(h, a.states), identity(h, b.states)
        mats = [
            mat_add(kronecker(ma, ib), kronecker(ia, mb))
            for ma, mb in zip(a.transitions, b.transitions)
        ]
    return KLinearAutomaton(h, a.alphabet, start.cols, start, mats, output)


def reverse(a: KLinearAutomaton) -> KLinearAutomaton:
    """Transpose everything; the result reads words backwards."""
    return KLinearAutomaton(
        a.semiring,
        a.alphabet,
        a.states,
        transpose(a.output),
        [transpose(m) for m in a.transitions],
        transpose(a.start),
    )


def pullback(a: KLinearAutomaton, mapping: Mapping[str, str]) -> KLinearAutomaton:
    """Precompose with the word homomorphism sending each new symbol ``y`` to
    ``mapping[y]``; the new alphabet is the key order of ``mapping``."""
    for y, image in mapping.items():
        for s in image:
            if s not in a.alphabet:
                raise UnknownSymbolError(
                    f"image {image!r} of {y!r} uses {s!r}, not in alphabet {a.alphabet}"
                )
    return KLinearAutomaton(
        a.semiring,
        tuple(mapping),
        a.states,
        a.start,
        [a.word_matrix(image) for image in mapping.values()],
        a.output,
    )


def apply_homomorphism(mapping: Mapping[str, str], w: str) -> str:
    return "".join(mapping[c] for c in w)
