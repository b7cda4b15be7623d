"""Commutative semirings with exact equality.

Elements are plain Python values: ``0``/``1`` for the boolean semiring,
unbounded ``int`` for the naturals and integers, ``int`` or :data:`INF` for
min-plus, and the declared element labels for table semirings.  Containers
(matrices, automata) carry their :class:`Semiring` and refuse to mix
instances; the module-level :func:`add` and :func:`mul` additionally check
carrier membership of each operand.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import SchemaError, SemiringAxiomError, SemiringMismatchError


class _Infinity:
    """The additive identity of the tropical semiring."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class Semiring:
    """Base class. Subclasses supply ``zero``, ``one``, ``add``, ``mul``.

    ``add`` and ``mul`` are the unchecked fast path used inside matrix loops.
    """

    name: str
    zero: object
    one: object

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def elements(self):
        """The whole carrier as a tuple, or ``None`` when it is infinite."""
        return None

    def sum(self, values):
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def product(self, values):
        total = self.one
        for v in values:
            total = self.mul(total, v)
        return total

    def is_zero(self, a) -> bool:
        return a == self.zero

    # serialization
    def from_json(self, raw):
        if not self.contains(raw) or isinstance(raw, bool):
            raise SchemaError(f"{raw!r} is not an element of {self.name}")
        return raw

    def to_json(self, a):
        return a

    def render(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        """Parse the CLI rendering of an element."""
        try:
            raw = json.loads(text)
        except json.JSONDecodeError:
            raw = text
        return self.from_json(raw)

    def __repr__(self):
        return f"<Semiring {self.name}>"

    def __eq__(self, other):
        return isinstance(other, Semiring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (type(self).__name__, self.name)


class BooleanSemiring(Semiring):
    name = "bool"
    zero = 0
    one = 1

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def contains(self, a):
        return type(a) is int and a in (0, 1)

    def elements(self):
        return (0, 1)


class NaturalSemiring(Semiring):
    name = "nat"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def contains(self, a):
        return type(a) is int and a >= 0


class IntegerSemiring(Semiring):
    name = "int"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def contains(self, a):
        return type(a) is int


class TropicalSemiring(Semiring):
    """Min-plus over the integers extended with :data:`INF`."""

    name = "tropical"
    zero = INF
    one = 0

    def add(self, a, b):
        if a is INF:
            return b
        if b is INF:
            return a
        return a if a <= b else b

    def mul(self, a, b):
        if a is INF or b is INF:
            return INF
        return a + b

    def contains(self, a):
        return a is INF or type(a) is int

    def from_json(self, raw):
        if raw == "inf":
            return INF
        return super().from_json(raw)

    def to_json(self, a):
        return "inf" if a is INF else a


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    operands: tuple

    def __str__(self):
        args = ", ".join(repr(x) for x in self.operands)
        return f"{self.axiom} fails for ({args})"


class TableSemiring(Semiring):
    """A finite semiring given by explicit operation tables.

    ``add`` and ``mul`` are square tables of indices into ``elements``.
    Construction validates every axiom exhaustively unless ``validate=False``.
    """

    def __init__(self, name, elements, add, mul, zero, one, validate=True):
        self.name = name if name.startswith("table:") else f"table:{name}"
        self._elements = tuple(elements)
        n = len(self._elements)
        if n == 0:
            raise SchemaError("table semiring needs at least one element")
        if len(set(self._elements)) != n:
            raise SchemaError("table semiring elements must be distinct")
        for label, table in (("add", add), ("mul", mul)):
            if len(table) != n or any(len(row) != n for row in table):
                raise SchemaError(f"{label} table must be {n}x{n}")
            for row in table:
                for idx in row:
                    if type(idx) is not int or not 0 <= idx < n:
                        raise SchemaError(f"{label} table entry {idx!r} out of range")
        for label, idx in (("zero", zero), ("one", one)):
            if type(idx) is not int or not 0 <= idx < n:
                raise SchemaError(f"{label} index {idx!r} out of range")
        self._index = {e: i for i, e in enumerate(self._elements)}
        self._add = tuple(tuple(row) for row in add)
        self._mul = tuple(tuple(row) for row in mul)
        self.zero = self._elements[zero]
        self.one = self._elements[one]
        if validate:
            violations = check_axioms(self, self._elements)
            if violations:
                raise SemiringAxiomError(
                    f"{self.name}: {len(violations)} axiom violations, first: {violations[0]}"
                )

    def add(self, a, b):
        ix = self._index
        return self._elements[self._add[ix[a]][ix[b]]]

    def mul(self, a, b):
        ix = self._index
        return self._elements[self._mul[ix[a]][ix[b]]]

    def contains(self, a):
        try:
            return a in self._index
        except TypeError:
            return False

    def elements(self):
        return self._elements

    def _key(self):
        return (self.name, self._elements, self._add, self._mul, self.zero, self.one)

    def from_json(self, raw):
        if not self.contains(raw):
            raise SchemaError(f"{raw!r} is not an element of {self.name}")
        return raw

    def parse(self, text):
        if text in self._index:
            return text
        return super().parse(text)

    def to_table_json(self):
        return {
            "elements": list(self._elements),
            "add": [list(r) for r in self._add],
            "mul": [list(r) for r in self._mul],
            "zero": self._index[self.zero],
            "one": self._index[self.one],
        }

    @classmethod
    def from_table_json(cls, name, data, validate=True):
        try:
            return cls(
                name,
                data["elements"],
                data["add"],
                data["mul"],
                data["zero"],
                data["one"],
                validate=validate,
            )
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"malformed semiring table {name}: {exc}") from exc


BOOLEAN = BooleanSemiring()
NATURAL = NaturalSemiring()
INTEGER = IntegerSemiring()
TROPICAL = TropicalSemiring()

_BUILTINS = {s.name: s for s in (BOOLEAN, NATURAL, INTEGER, TROPICAL)}
_TABLES: dict[str, TableSemiring] = {}


def register_table(semiring: TableSemiring) -> TableSemiring:
    _TABLES[semiring.name] = semiring
    return semiring


def load_table(path, name=None) -> TableSemiring:
    """Load and register a table semiring from a JSON table file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    return register_table(TableSemiring.from_table_json(name or path.stem, data))


def get_semiring(ident: str, search_dirs=()) -> Semiring:
    """Resolve ``bool``, ``nat``, ``int``, ``tropical`` or ``table:<name>``.

    Unregistered tables are looked up as ``<name>.json`` (or ``<name>``) in
    ``search_dirs`` and then the working directory.
    """
    if isinstance(ident, Semiring):
        return ident
    if ident in _BUILTINS:
        return _BUILTINS[ident]
    if not isinstance(ident, str) or not ident.startswith("table:"):
        raise SchemaError(f"unknown semiring {ident!r}")
    if ident in _TABLES:
        return _TABLES[ident]
    name = ident[len("table:"):]
    for d in (*search_dirs, "."):
        for candidate in (Path(d) / f"{name}.json", Path(d) / name):
            if candidate.is_file():
                return load_table(candidate, name)
    raise SchemaError(f"no table file found for semiring {ident!r}")


def _check_member(h: Semiring, *values):
    for v in values:
        if not h.contains(v):
            raise SemiringMismatchError(f"{v!r} is not an element of {h.name}")


def add(h: Semiring, a, b):
    _check_member(h, a, b)
    return h.add(a, b)


def mul(h: Semiring, a, b):
    _check_member(h, a, b)
    return h.mul(a, b)


def check_axioms(h: Semiring, samples) -> list[AxiomViolation]:
    """Every violated commutative-semiring law among triples of ``samples``."""
    samples = list(samples)
    z, o = h.zero, h.one
    out = []

    def fail(axiom, *operands):
        out.append(AxiomViolation(axiom, operands))

    for a in samples:
        if h.add(a, z) != a:
            fail("additive identity", a)
        if h.mul(a, o) != a:
            fail("multiplicative identity", a)
        if h.mul(a, z) != z:
            fail("zero annihilates", a)
    for a, b in itertools.product(samples, repeat=2):
        if h.add(a, b) != h.add(b, a):
            fail("additive commutativity", a, b)
        if h.mul(a, b) != h.mul(b, a):
            fail("multiplicative commutativity", a, b)
    for a, b, c in itertools.product(samples, repeat=3):
        if h.add(h.add(a, b), c) != h.add(a, h.add(b, c)):
            fail("additive associativity", a, b, c)
        if h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c)):
            fail("multiplicative associativity", a, b, c)
        if h.mul(a, h.add(b, c)) != h.add(h.mul(a, b), h.mul(a, c)):
            fail("distributivity", a, b, c)
        if h.mul(h.add(b, c), a) != h.add(h.mul(b, a), h.mul(c, a)):
            fail("right distributivity", a, b, c)
    return out
