"""Exception hierarchy shared by every module.

Domain errors (mismatches, exhausted budgets) derive from ``KLinearError``;
malformed input derives from ``SchemaError`` so the CLI can tell them apart.
"""


class KLinearError(Exception):
    pass


class SemiringMismatchError(KLinearError, ValueError):
    pass


class SemiringAxiomError(KLinearError, ValueError):
    pass


class BasisMismatchError(KLinearError, ValueError):
    pass


class AlphabetMismatchError(KLinearError, ValueError):
    pass


class UnknownSymbolError(KLinearError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown symbol"


class WordTooLongError(KLinearError, ValueError):
    pass


class BudgetExceededError(KLinearError):
    """Raised when a subset construction produces more states than allowed."""

    def __init__(self, budget, frontier):
        self.budget = budget
        self.frontier = frontier
        super().__init__(
            f"state budget of {budget} exhausted with {frontier} vectors still "
            "unexplored; the determinization may be infinite"
        )


class MorphismShapeError(KLinearError, ValueError):
    """The proposed morphism is ill-typed (as opposed to failing its checks)."""


class SchemaError(ValueError):
    """Input data does not follow the documented JSON layout."""
