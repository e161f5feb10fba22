import pytest

from posetshuffle.characterize import (
    ShuffleInstance,
    block_structure,
    check_lemma2,
    occurrence_order,
    shuffle_language,
    shuffle_semantic,
    shuffle_structural,
    verdicts_agree,
)
from posetshuffle.errors import ArityError, DisjointnessError, UnknownEventError
from posetshuffle.extraction import reconstruct
from posetshuffle.generate import lposets_up_to_isomorphism, posets_on
from posetshuffle.poset import LPoset, validate
from posetshuffle.traces import lang

from conftest import words


def lposet(events, covers, labels):
    return LPoset.build(validate(events, covers), dict(zip(events, labels)))


def chain_trajectory(k, label="1"):
    names = [f"t{i}" for i in range(k)]
    return lposet(names, list(zip(names, names[1:])), [label] * k)


def test_semantic_positive(inst1, known):
    v = shuffle_semantic(inst1)
    assert v.single and v.result == known["p_r1"]
    assert v.language_size == 6


def test_semantic_negative(inst2):
    v = shuffle_semantic(inst2)
    assert not v.single
    assert "".join(v.witness) == "aebcd"
    assert v.language_size == 9


def test_semantic_unary_chain():
    p = validate("xyz", [("x", "y"), ("y", "z")])
    v = shuffle_semantic(ShuffleInstance(chain_trajectory(3), (p,)))
    assert v.single and v.result == p


def test_structural_positive(inst1, known):
    v = shuffle_structural(inst1)
    assert v.single and v.result == known["p_r1"]
    assert v.witness is None


def test_structural_negative(inst2):
    assert not shuffle_structural(inst2).single


def test_structural_unary_chain():
    p = validate("xyz", [("x", "y"), ("y", "z")])
    v = shuffle_structural(ShuffleInstance(chain_trajectory(3), (p,)))
    assert v.single and v.result == p


def test_block_structure_lp_t1(inst1):
    bs = block_structure(inst1)
    assert bs
    first, second = bs.blocks[0]
    assert len(first.events) == 3 and len(second.events) == 1
    assert first.events == {"ta", "tc", "td"} and second.events == {"tb"}
    assert bs.blocks[1][0].events == {"te"}
    assert bs.cross_order() == [((1, 1), (2, 1))]
    assert ((1, 1), (1, 2)) in bs.block_order


def test_block_structure_lp_t2(inst2):
    bs = block_structure(inst2)
    assert not bs
    assert "non-uniformly" in bs.reason


def test_block_structure_antichains():
    op = validate(["a", "b", "c"], [])
    traj = lposet(["x", "y", "z"], [], ["1", "1", "1"])
    bs = block_structure(ShuffleInstance(traj, (op,)))
    assert len(bs.blocks) == 1 and len(bs.blocks[0]) == 1
    assert bs.cross_order() == []


def test_autoconcurrent_trajectory_over_chain():
    # two concurrent 1-events spell only "11", exactly like a chain
    op = validate("ab", [("a", "b")])
    inst = ShuffleInstance(lposet(["x", "y"], [], ["1", "1"]), (op,))
    assert shuffle_semantic(inst).single
    v = shuffle_structural(inst)
    assert v.single and v.result == op


def test_trajectory_missing_an_occurrence_interleaving():
    # words 2121, 1221, 1212 but not 2112: the occurrence order alone would admit 2112
    traj = lposet(["x", "y", "z", "w"], [("x", "y"), ("y", "z")], ["1", "2", "1", "2"])
    inst = ShuffleInstance(traj, (validate("ab", [("a", "b")]), validate("cd", [("c", "d")])))
    assert not shuffle_semantic(inst).single
    bs = block_structure(inst)
    assert not bs and "occurrence order" in bs.reason
    assert not shuffle_structural(inst).single


def test_occurrence_order_lp_t1(known):
    occ = occurrence_order(known["lp_t1"], 2)
    assert occ.precedes((1, 3), (2, 1))
    assert not occ.precedes((1, 4), (2, 1)) and not occ.precedes((2, 1), (1, 4))


def test_empty_shuffle_is_not_single(known):
    inst = ShuffleInstance(known["lp_t1"], (known["p_ex"], validate(["e", "f"], [])))
    for v in (shuffle_semantic(inst), shuffle_structural(inst)):
        assert not v.single
        assert v.diagnostics[0].startswith("EmptyShuffle")


def test_instance_validation(known):
    with pytest.raises(DisjointnessError):
        ShuffleInstance(known["lp_t1"], (known["p_1"], known["p_ex"]))
    with pytest.raises(ArityError):
        ShuffleInstance(known["lp_t1"], (known["p_1"],))


def test_lemma2_on_realized_result(inst1, known):
    assert check_lemma2(inst1, known["p_r1"]) == []


def test_lemma2_on_r2a(inst2, known):
    found = {(v.a, v.b, v.c) for v in check_lemma2(inst2, known["p_r2a"])}
    # in P_r2a: a < e and b < e, while c is concurrent with e
    assert ("b", "c", "e") in found
    assert found == {("a", "c", "e"), ("b", "c", "e")}


def test_lemma2_uniformly_concurrent(inst2):
    p = validate("abcde", [("a", "b"), ("b", "d"), ("c", "d")])
    assert check_lemma2(inst2, p) == []


def test_lemma2_unknown_event(inst1):
    with pytest.raises(UnknownEventError):
        check_lemma2(inst1, validate("abcd", []))


def small_grid(max_size=2):
    for n1 in range(1, max_size + 1):
        for n2 in range(1, max_size + 1):
            for traj in lposets_up_to_isomorphism((n1, n2)):
                for p1 in posets_on(n1, "a"):
                    for p2 in posets_on(n2, "b"):
                        yield ShuffleInstance(traj, (p1, p2))


def test_agreement_on_small_grid():
    for inst in small_grid():
        sem, st = shuffle_semantic(inst), shuffle_structural(inst)
        assert verdicts_agree(sem, st), inst


def test_single_results_keep_operand_orders_and_language():
    for inst in small_grid():
        v = shuffle_structural(inst)
        if not v.single:
            continue
        for op in inst.operands:
            assert v.result.restrict(op.events) == op
        assert lang(v.result) == shuffle_language(inst)


def test_reconstruction_of_poset_language_satisfies_lemma2():
    for inst in small_grid():
        v = shuffle_semantic(inst)
        if v.single:
            assert check_lemma2(inst, reconstruct(shuffle_language(inst))) == []
