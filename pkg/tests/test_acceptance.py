"""Exit criteria.  Each test records one PASS/FAIL line shown in the summary."""

import random
import time
from pathlib import Path

import pytest

from posetshuffle.characterize import (
    check_lemma2,
    shuffle_language,
    shuffle_semantic,
    shuffle_structural,
    verdicts_agree,
)
from posetshuffle.cli import main
from posetshuffle.decompose import decompose
from posetshuffle.extraction import extract_order
from posetshuffle.generate import generate_posets, random_instance, shuffle_grid
from posetshuffle.io import fixture_path, save_poset
from posetshuffle.shuffle import shuffle_words
from posetshuffle.traces import lang, swap_connected, swap_neighbours

from brute import count_partial_orders
from conftest import words

DUMP_DIR = Path(__file__).parent / "disagreements"


def fx(name):
    return str(fixture_path(name))


def record(report, key, ok, detail):
    report[key] = (bool(ok), detail)
    assert ok, f"{key}: {detail}"


def test_01_banana_pear(capsys, acceptance_report):
    code = main(["shuffle-word", "-t", "1221112112", "banana", "pear"])
    out = capsys.readouterr().out.strip()
    t = tuple(int(c) for c in "1221112112")
    samples = []
    for _ in range(200):
        start = time.perf_counter()
        shuffle_words(t, ["banana", "pear"])
        samples.append(time.perf_counter() - start)
    best = min(samples)
    ok = code == 0 and out == "bpeanaanar" and best < 1e-3
    record(acceptance_report, "1 banana/pear shuffle", ok, f"{out}, {best * 1e6:.1f} us per shuffle")


def test_02_example_1(capsys, acceptance_report):
    code1 = main(["shuffle-word", "-t", "121332", "ab", "cd", "ef"])
    out1 = capsys.readouterr().out.strip()
    code2 = main(["shuffle-word", "-t", "121", "ab", "cd"])
    err2 = capsys.readouterr().err
    ok = code1 == 0 and out1 == "acbefd" and code2 == 2 and "DoesNotFitError" in err2
    record(acceptance_report, "2 trajectory examples", ok, f"{out1}; 121 on ab,cd exits {code2}")


def test_03_example_2(known, acceptance_report):
    got = ["".join(t) for t in lang(known["p_ex"])]
    ok = got == ["abcd", "abdc", "acbd", "bacd", "badc"]
    record(acceptance_report, "3 language of P_ex", ok, " ".join(got))


def test_04_positive_shuffle(capsys, inst1, known, acceptance_report):
    code = main(["shuffle-poset", "-t", fx("lp_t1"), fx("p_1"), fx("p_2"), "--method", "both"])
    out = capsys.readouterr().out
    sem, st = shuffle_semantic(inst1), shuffle_structural(inst1)
    L = shuffle_language(inst1)
    ok = (code == 0 and out.count("single: true") == 2 and "DISAGREEMENT" not in out
          and sem.result == known["p_r1"] and st.result == known["p_r1"]
          and L == known["l_1"] and len(L) == 6)
    record(acceptance_report, "4 LP_t1 shuffle is P_r1", ok, f"exit {code}, |L| = {len(L)}")


def test_05_negative_shuffle(capsys, inst2, known, acceptance_report):
    code = main(["shuffle-poset", "-t", fx("lp_t2"), fx("p_1"), fx("p_2"), "--method", "both"])
    out = capsys.readouterr().out
    sem = shuffle_semantic(inst2)
    L = shuffle_language(inst2)
    ok = (code == 1 and out.count("single: false") == 2 and "witness: aebcd" in out
          and not sem.single and "".join(sem.witness) == "aebcd"
          and L == known["l_2"] and len(L) == 9)
    record(acceptance_report, "5 LP_t2 shuffle is not one poset", ok,
           f"exit {code}, witness {''.join(sem.witness)}, |L| = {len(L)}")


def test_06_decompose(known, acceptance_report):
    cover = decompose(known["l_2"])
    union = cover.language()
    ok = set(cover) == {known["p_r2a"], known["p_r2b"]} and len(cover) == 2 and union == known["l_2"]
    record(acceptance_report, "6 decompose(L_2) = {P_r2a, P_r2b}", ok, f"{len(cover)} posets, union of {len(union)} traces")


@pytest.mark.slow
def test_07_extraction_round_trip(acceptance_report):
    start = time.perf_counter()
    counts = [0] * 6
    failures = 0
    for p in generate_posets(5):
        counts[len(p)] += 1
        if extract_order(lang(p)).order != p.order:
            failures += 1
    elapsed = time.perf_counter() - start
    brute = [count_partial_orders(k) for k in range(1, 6)]
    ok = counts[1:] == [1, 3, 19, 219, 4231] == brute and failures == 0 and elapsed < 60
    record(acceptance_report, "7 order extraction round trip", ok,
           f"{sum(counts)} posets {counts[1:]}, brute force {brute}, {failures} failures, {elapsed:.1f} s")


@pytest.fixture(scope="module")
def grid_verdicts():
    start = time.perf_counter()
    rows = []
    for inst in shuffle_grid(3):
        rows.append((inst, shuffle_semantic(inst), shuffle_structural(inst)))
    return rows, time.perf_counter() - start


def dump(inst, tag):
    folder = DUMP_DIR / tag
    folder.mkdir(parents=True, exist_ok=True)
    save_poset(inst.trajectory, folder / "trajectory.json")
    for i, op in enumerate(inst.operands, 1):
        save_poset(op, folder / f"operand{i}.json")


@pytest.mark.slow
def test_08_lemma2_on_grid(grid_verdicts, acceptance_report):
    rows, _ = grid_verdicts
    singles = failures = 0
    for inst, sem, _ in rows:
        if sem.single:
            singles += 1
            if check_lemma2(inst, sem.result):
                failures += 1
    ok = failures == 0 and singles > 0
    record(acceptance_report, "8 uniform-relation check on the exhaustive grid", ok,
           f"{len(rows)} instances, {singles} single, {failures} failures")


@pytest.mark.slow
def test_09_characterization_agreement(grid_verdicts, seed, acceptance_report):
    rows, grid_time = grid_verdicts
    start = time.perf_counter()
    disagreements = 0
    for n, (inst, sem, st) in enumerate(rows):
        if not verdicts_agree(sem, st):
            disagreements += 1
            dump(inst, f"grid-{n}")
    rng = random.Random(seed)
    for n in range(10_000):
        inst = random_instance(rng)
        if not verdicts_agree(shuffle_semantic(inst), shuffle_structural(inst)):
            disagreements += 1
            dump(inst, f"random-{seed}-{n}")
    elapsed = grid_time + time.perf_counter() - start
    ok = disagreements == 0 and elapsed < 600
    record(acceptance_report, "9 structural/semantic agreement", ok,
           f"{len(rows)} grid + 10000 random (seed {seed}), {disagreements} disagreements, {elapsed:.0f} s")


@pytest.mark.slow
def test_10_swap_property(acceptance_report):
    failures = checked = 0
    for p in generate_posets(5):
        L = lang(p)
        for t in L:
            checked += 1
            if not swap_neighbours(p, t) <= L.words:
                failures += 1
        if not swap_connected(p):
            failures += 1
    record(acceptance_report, "10 swap property", failures == 0,
           f"{checked} traces over 4473 posets, {failures} failures")
