"""Weighted (K-linear) automata over commutative semirings."""
from .automaton import KLinearAutomaton, direct_sum, pullback, reverse, scale, tensor
from .determinize import (
    DFA,
    accessible,
    determinize,
    dfa_eval,
    dfa_isomorphic,
    linearize,
    minimize,
    minimize_with_map,
    separating_word,
)
from .errors import (
    AlphabetMismatchError,
    BasisMismatchError,
    BudgetExceededError,
    KLinearError,
    MorphismShapeError,
    SchemaError,
    SemiringAxiomError,
    SemiringMismatchError,
    UnknownSymbolError,
    WordTooLongError,
)
from .linalg import Basis, Matrix, identity, kronecker, mat_mul, tensor_basis, transpose
from .morphism import Morphism, compose, identity_morphism, verify_morphism
from .proofsys import Certificate, Edge, NotEquivalent, prove_equivalent, verify_certificate
from .semiring import (
    BOOLEAN,
    INF,
    INTEGER,
    NATURAL,
    TROPICAL,
    Semiring,
    TableSemiring,
    add,
    check_axioms,
    get_semiring,
    mul,
)
from .words import Comul, Counit, LanguageFunctional, SplitTerm, comul, convolve, convolve_eval, counit

__version__ = "0.1.0"
