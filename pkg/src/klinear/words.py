"""The free word algebra as a bialgebra: comultiplications, counits, convolution.

Words are plain ``str`` values whose characters are alphabet symbols; the
empty string is the empty word.
"""
from __future__ import annotations

import enum
import itertools
from typing import Callable, Iterable, NamedTuple

from .errors import AlphabetMismatchError, SemiringMismatchError, WordTooLongError
from .semiring import Semiring

DEFAULT_MAX_LENGTH = 16
EPSILON = ""


class Comul(enum.Enum):
    """Comultiplication on words.

    ``DELTA1`` duplicates (Hadamard product), ``DELTA2`` deconcatenates
    (concatenation), ``DELTA3`` unshuffles (shuffle product).
    """

    DELTA1 = "delta1"
    DELTA2 = "delta2"
    DELTA3 = "delta3"


class Counit(enum.Enum):
    EPS1 = "eps1"
    EPS2 = "eps2"


MATCHING_COUNIT = {
    Comul.DELTA1: Counit.EPS1,
    Comul.DELTA2: Counit.EPS2,
    Comul.DELTA3: Counit.EPS2,
}


class WordTerm(NamedTuple):
    coeff: object
    word: str


class SplitTerm(NamedTuple):
    coeff: object
    left: str
    right: str


def render_word(w: str) -> str:
    return w if w else "eps"


def reverse_word(w: str) -> str:
    return w[::-1]


def all_words(alphabet, max_length: int) -> Iterable[str]:
    """Every word of length at most ``max_length``, shortest first."""
    for n in range(max_length + 1):
        for letters in itertools.product(alphabet, repeat=n):
            yield "".join(letters)


def _as_comul(variant) -> Comul:
    try:
        return variant if isinstance(variant, Comul) else Comul(variant)
    except ValueError:
        raise ValueError(f"unknown comultiplication {variant!r}") from None


def _as_counit(variant) -> Counit:
    try:
        return variant if isinstance(variant, Counit) else Counit(variant)
    except ValueError:
        raise ValueError(f"unknown counit {variant!r}") from None


def _collect(h: Semiring, keyed: Iterable[tuple]) -> dict:
    # first-occurrence order; coefficients of repeated keys are summed
    acc: dict = {}
    for key, c in keyed:
        acc[key] = h.add(acc[key], c) if key in acc else c
    return {k: c for k, c in acc.items() if not h.is_zero(c)}


def _unshuffles(w: str):
    # masks are read with the first letter as the most significant bit, set = left;
    # this is the order in which the product of the per-letter sums multiplies out
    n = len(w)
    for mask in range(1 << n):
        left = "".join(w[i] for i in range(n) if mask >> (n - 1 - i) & 1)
        right = "".join(w[i] for i in range(n) if not mask >> (n - 1 - i) & 1)
        yield left, right


def comul(variant, w: str, h: Semiring, max_length: int = DEFAULT_MAX_LENGTH) -> list[SplitTerm]:
    """Expand one word under a comultiplication, collecting like terms."""
    variant = _as_comul(variant)
    if variant is Comul.DELTA1:
        return [SplitTerm(h.one, w, w)]
    if variant is Comul.DELTA2:
        return [SplitTerm(h.one, w[:i], w[i:]) for i in range(len(w) + 1)]
    if len(w) > max_length:
        raise WordTooLongError(
            f"unshuffle of a word of length {len(w)} exceeds the limit {max_length}"
        )
    collected = _collect(h, (((l, r), h.one) for l, r in _unshuffles(w)))
    return [SplitTerm(c, l, r) for (l, r), c in collected.items()]


def counit(variant, w: str, h: Semiring):
    variant = _as_counit(variant)
    if variant is Counit.EPS1:
        return h.one
    return h.one if w == EPSILON else h.zero


def coassoc_expansion(variant, w: str, h: Semiring, side: str, max_length: int = DEFAULT_MAX_LENGTH):
    """Apply the comultiplication twice, splitting the left (``side="left"``)
    or right factor the second time. Returns ``{(u, v, t): coeff}``."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    pairs = []
    for c, left, right in comul(variant, w, h, max_length):
        if side == "left":
            for c2, a, b in comul(variant, left, h, max_length):
                pairs.append(((a, b, right), h.mul(c, c2)))
        else:
            for c2, a, b in comul(variant, right, h, max_length):
                pairs.append(((left, a, b), h.mul(c, c2)))
    return _collect(h, pairs)


def multiply_splits(h: Semiring, xs: list[SplitTerm], ys: list[SplitTerm]) -> list[SplitTerm]:
    """Product in the tensor square of the word algebra, like terms collected."""
    collected = _collect(
        h,
        (((a.left + b.left, a.right + b.right), h.mul(a.coeff, b.coeff)) for a in xs for b in ys),
    )
    return [SplitTerm(c, l, r) for (l, r), c in collected.items()]


class LanguageFunctional:
    """A map from words to semiring values, total on the alphabet's words."""

    def __init__(self, semiring: Semiring, alphabet, fn: Callable[[str], object]):
        self.semiring = semiring
        self.alphabet = tuple(alphabet)
        self._fn = fn

    def __call__(self, w: str):
        return self._fn(w)

    @classmethod
    def from_table(cls, semiring, alphabet, table: dict):
        table = dict(table)
        return cls(semiring, alphabet, lambda w: table.get(w, semiring.zero))

    @classmethod
    def from_automaton(cls, automaton):
        return cls(automaton.semiring, automaton.alphabet, automaton.eval)

    @classmethod
    def from_predicate(cls, semiring, alphabet, pred: Callable[[str], bool]):
        return cls(semiring, alphabet, lambda w: semiring.one if pred(w) else semiring.zero)

    @classmethod
    def counit(cls, variant, semiring, alphabet):
        return cls(semiring, alphabet, lambda w: counit(variant, w, semiring))

    def __repr__(self):
        return f"LanguageFunctional({self.semiring.name}, {''.join(self.alphabet)!r})"


def _check_compatible(f, g):
    if f.semiring != g.semiring:
        raise SemiringMismatchError(f"semiring mismatch: {f.semiring.name} vs {g.semiring.name}")
    if tuple(f.alphabet) != tuple(g.alphabet):
        raise AlphabetMismatchError(f"{f.alphabet} vs {g.alphabet}")


def convolve_eval(f, g, variant, w: str, max_length: int = DEFAULT_MAX_LENGTH):
    """``(f*g)(w)``: sum over the split terms of coeff * f(left) * g(right).

    ``f`` and ``g`` need ``semiring``/``alphabet`` attributes and to be
    callable on words (automata and :class:`LanguageFunctional` both are).
    """
    _check_compatible(f, g)
    h = f.semiring
    return h.sum(h.mul(c, h.mul(f(l), g(r))) for c, l, r in comul(variant, w, h, max_length))


def convolve(f, g, variant, max_length: int = DEFAULT_MAX_LENGTH) -> LanguageFunctional:
    _check_compatible(f, g)
    variant = _as_comul(variant)
    return LanguageFunctional(
        f.semiring, f.alphabet, lambda w: convolve_eval(f, g, variant, w, max_length)
    )
