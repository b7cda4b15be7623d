"""Random automata for test corpora. Pass a seeded ``random.Random``."""
from __future__ import annotations

import random

from .automaton import KLinearAutomaton
from .semiring import BOOLEAN, INF, INTEGER, NATURAL, TROPICAL, Semiring

_PALETTES = {
    BOOLEAN: (0, 1),
    NATURAL: (0, 0, 1, 1, 2, 3),
    INTEGER: (0, 0, 1, -1, 2, -2),
    TROPICAL: (INF, INF, 0, 1, 2, 3),
}


def random_value(h: Semiring, rng: random.Random, density: float = 0.5):
    if rng.random() >= density:
        return h.zero
    palette = _PALETTES.get(h) or h.elements()
    if palette is None:
        raise ValueError(f"no sampling palette for {h.name}")
    nonzero = [v for v in palette if v != h.zero]
    return rng.choice(nonzero) if nonzero else h.zero


def random_automaton(
    h: Semiring,
    dim: int,
    alphabet="xy",
    rng: random.Random | None = None,
    density: float = 0.5,
) -> KLinearAutomaton:
    rng = rng or random.Random()
    draw = lambda: random_value(h, rng, density)  # noqa: E731
    return KLinearAutomaton.build(
        h,
        tuple(alphabet),
        [draw() for _ in range(dim)],
        {a: [[draw() for _ in range(dim)] for _ in range(dim)] for a in alphabet},
        [draw() for _ in range(dim)],
    )


def permute_states(a: KLinearAutomaton, perm) -> KLinearAutomaton:
    """The same automaton with state ``i`` moved to position ``perm[i]``."""
    n = a.dim
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    start = a.start.row(0)
    output = a.output.column(0)
    return KLinearAutomaton.build(
        a.semiring,
        a.alphabet,
        [start[inv[j]] for j in range(n)],
        {
            s: [[m[inv[i], inv[j]] for j in range(n)] for i in range(n)]
            for s, m in zip(a.alphabet, a.transitions)
        },
        [output[inv[j]] for j in range(n)],
    )


def pad_unreachable(a: KLinearAutomaton, extra: int, rng: random.Random, density: float = 0.5):
    """Append ``extra`` states that the start vector can never reach."""
    h = a.semiring
    n = a.dim
    total = n + extra
    mats = {}
    for s, m in zip(a.alphabet, a.transitions):
        rows = [list(r) + [h.zero] * extra for r in m.entries]
        rows += [[random_value(h, rng, density) for _ in range(total)] for _ in range(extra)]
        mats[s] = rows
    return KLinearAutomaton.build(
        h,
        a.alphabet,
        list(a.start.row(0)) + [h.zero] * extra,
        mats,
        list(a.output.column(0)) + [random_value(h, rng, density) for _ in range(extra)],
    )
