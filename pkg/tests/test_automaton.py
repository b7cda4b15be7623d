import random

import pytest

from klinear import automaton as aut
from klinear.automaton import KLinearAutomaton
from klinear.errors import (
    AlphabetMismatchError,
    BasisMismatchError,
    SchemaError,
    SemiringMismatchError,
    UnknownSymbolError,
)
from klinear.generate import random_automaton
from klinear.linalg import mat_mul
from klinear.semiring import BOOLEAN, INTEGER, NATURAL, TROPICAL
from klinear.words import Comul
from oracles import unshuffle_oracle, words_upto

SEMIRINGS = [BOOLEAN, NATURAL, TROPICAL]


def one_state(h, start, output, letter_weight):
    return KLinearAutomaton.build(h, "xy", [start], {"x": [[letter_weight]], "y": [[letter_weight]]}, [output])


def pairs(h, n, seed):
    r = random.Random(seed)
    for _ in range(n):
        yield (
            random_automaton(h, r.randint(1, 3), "xy", r),
            random_automaton(h, r.randint(1, 3), "xy", r),
        )


def test_eval_examples(a1):
    assert a1.eval("x") == 1
    assert a1.eval("") == 0
    assert a1.eval("xyx") == 1
    assert a1("xy") == 0


def test_eval_unknown_symbol(a1):
    with pytest.raises(UnknownSymbolError):
        a1.eval("xz")


def test_eval_poly(a1):
    h = NATURAL
    a = KLinearAutomaton.build(h, "xy", [1], {"x": [[2]], "y": [[3]]}, [1])
    assert a.eval_poly([(1, "x"), (4, "yy"), (2, "")]) == 2 + 4 * 9 + 2


def test_build_validation():
    with pytest.raises(SchemaError):
        KLinearAutomaton.build(BOOLEAN, "xy", [1], {"x": [[1]]}, [1])
    with pytest.raises(SchemaError):
        KLinearAutomaton.build(BOOLEAN, ["xy"], [1], {"xy": [[1]]}, [1])
    with pytest.raises(SchemaError):
        KLinearAutomaton.build(BOOLEAN, "x", [1, 0], {"x": [[1]]}, [1, 0])


def test_fused_chain_equals_stepwise():
    r = random.Random(3)
    for h in SEMIRINGS:
        a = random_automaton(h, 3, "xy", r)
        for w in words_upto("xy", 4):
            fused = mat_mul(mat_mul(a.start, a.word_matrix(w)), a.output).entries[0][0]
            assert fused == a.eval(w)


def test_direct_sum_examples(a1):
    s = aut.direct_sum(a1, a1)
    assert s.dim == 4
    assert s.eval("x") == 1
    two, three = one_state(NATURAL, 1, 2, 1), one_state(NATURAL, 1, 3, 1)
    assert aut.direct_sum(two, three).eval("") == 5


def test_direct_sum_mismatch(a1):
    with pytest.raises(SemiringMismatchError):
        aut.direct_sum(a1, one_state(NATURAL, 1, 1, 1))
    other = KLinearAutomaton.build(BOOLEAN, "ab", [1], {"a": [[1]], "b": [[1]]}, [1])
    with pytest.raises(AlphabetMismatchError):
        aut.direct_sum(a1, other)


def test_scale_examples(a1):
    for w in words_upto("xy", 4):
        assert aut.scale(a1, 1).eval(w) == a1.eval(w)
        assert aut.scale(a1, 0).eval(w) == 0
    t = KLinearAutomaton.build(TROPICAL, "xy", [0], {"x": [[1]], "y": [[1]]}, [0])
    assert t.eval("x") == 1
    assert aut.scale(t, 4).eval("x") == 5
    with pytest.raises(SemiringMismatchError):
        aut.scale(a1, 2)


@pytest.mark.parametrize("h", SEMIRINGS, ids=lambda h: h.name)
def test_sum_and_scale_pointwise(h):
    r = random.Random(11)
    for a, b in pairs(h, 15, 7):
        k = random_automaton(h, 1, "xy", r, 1.0).start.row(0)[0]
        s, sc = aut.direct_sum(a, b), aut.scale(a, k)
        for w in words_upto("xy", 5):
            assert s.eval(w) == h.add(a.eval(w), b.eval(w))
            assert sc.eval(w) == h.mul(k, a.eval(w))


def test_tensor_worked_example(sq_x, sq_y):
    t = aut.tensor(sq_x, sq_y, Comul.DELTA3)
    assert t.states.labels == ("s1⊗t1", "s1⊗t2", "s2⊗t1", "s2⊗t2")
    assert t.start.to_lists() == [[1, 0, 0, 0]]
    assert t.matrix("x").to_lists() == [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
    assert t.matrix("y").to_lists() == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    assert t.output.to_lists() == [[1], [0], [0], [0]]


def test_tensor_shuffle_membership(sq_x, sq_y):
    t = aut.tensor(sq_x, sq_y, Comul.DELTA3)
    assert unshuffle_oracle(sq_x, sq_y, "xyyx", BOOLEAN) == 1
    assert t.eval("xyyx") == 1
    assert t.eval("xxyy") == 1
    assert t.eval("xyx") == 0


def test_tensor_with_all_accepting_is_identity(a1):
    everything = KLinearAutomaton.build(BOOLEAN, "xy", [1], {"x": [[1]], "y": [[1]]}, [1])
    t = aut.tensor(a1, everything, Comul.DELTA1)
    for w in words_upto("xy", 6):
        assert t.eval(w) == a1.eval(w)


def test_tensor_rejects_delta2(a1):
    with pytest.raises(ValueError, match="bialgebra"):
        aut.tensor(a1, a1, Comul.DELTA2)


@pytest.mark.parametrize("h", [BOOLEAN, NATURAL, TROPICAL, INTEGER], ids=lambda h: h.name)
def test_tensor_matches_convolution(h):
    for a, b in pairs(h, 10, 99):
        shuffle = aut.tensor(a, b, Comul.DELTA3)
        hadamard = aut.tensor(a, b, "delta1")
        for w in words_upto("xy", 4):
            assert shuffle.eval(w) == unshuffle_oracle(a, b, w, h)
            assert hadamard.eval(w) == h.mul(a.eval(w), b.eval(w))


def test_reverse_examples(a1):
    r = aut.reverse(a1)
    assert a1.eval("xx") == 1
    assert r.eval("xx") == 1
    assert r.eval("yx") == a1.eval("xy")
    rr = aut.reverse(r)
    assert rr == a1
    single = KLinearAutomaton.build(NATURAL, "xy", [2], {"x": [[3]], "y": [[5]]}, [7])
    assert aut.reverse(single).start.entries == ((7,),)
    assert aut.reverse(single).output.entries == ((2,),)


@pytest.mark.parametrize("h", SEMIRINGS, ids=lambda h: h.name)
def test_reverse_reads_backwards(h):
    r = random.Random(5)
    for _ in range(10):
        a = random_automaton(h, r.randint(1, 3), "xy", r)
        ra = aut.reverse(a)
        for w in words_upto("xy", 5):
            assert ra.eval(w) == a.eval(w[::-1])


def test_pullback_examples(a1):
    ident = aut.pullback(a1, {"x": "x", "y": "y"})
    assert all(ident.eval(w) == a1.eval(w) for w in words_upto("xy", 5))
    p = aut.pullback(a1, {"z": "xx"})
    assert p.alphabet == ("z",)
    assert p.eval("z") == a1.eval("xx") == 1
    e = aut.pullback(a1, {"z": ""})
    assert e.matrix("z").to_lists() == [[1, 0], [0, 1]]
    assert e.eval("zz") == a1.eval("")


def test_pullback_bad_image(a1):
    with pytest.raises(UnknownSymbolError):
        aut.pullback(a1, {"z": "xq"})


@pytest.mark.parametrize("h", SEMIRINGS, ids=lambda h: h.name)
def test_pullback_property(h):
    r = random.Random(8)
    mapping = {"a": "xy", "b": "", "c": "yyx"}
    for _ in range(10):
        a = random_automaton(h, r.randint(1, 3), "xy", r)
        p = aut.pullback(a, mapping)
        for w in words_upto("abc", 3):
            assert p.eval(w) == a.eval(aut.apply_homomorphism(mapping, w))


def test_automaton_requires_matching_bases(a1):
    with pytest.raises(BasisMismatchError):
        KLinearAutomaton(BOOLEAN, a1.alphabet, a1.states, a1.output, a1.transitions, a1.start)
