"""Cycle view of gap products: round trips, rewiring, guided improvement."""

import random
from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest

from permstats.core import Permutation
from permstats.cycles import (
    CycleWithStart,
    best_unrolling,
    classify_jumps,
    cycle_stat,
    cycle_to_perm,
    find_improvement,
    perm_to_cycle,
    two_opt,
)
from permstats.stretch import (
    ProductValue,
    consecutive_pairs,
    max_multiplicative_stretch,
    multiplicative_maximizers,
    stretch_multiplicative,
)


def perms(n):
    return (Permutation(w) for w in permutations(range(1, n + 1)))


def all_cycles(n):
    """Every single n-cycle, via circular orders anchored at 1."""
    for rest in permutations(range(2, n + 1)):
        order = (1,) + rest
        mapping = {order[k]: order[(k + 1) % n] for k in range(n)}
        yield CycleWithStart.from_mapping(mapping, 1)


def random_cycle(rng, n):
    word = list(range(1, n + 1))
    rng.shuffle(word)
    return perm_to_cycle(Permutation(tuple(word)))


def gap_product(p):
    out = 1
    for k in range(p.n - 1):
        out *= abs(p.image[k + 1] - p.image[k])
    return out


class TestCycleWithStart:
    def test_validation(self):
        with pytest.raises(ValueError):
            CycleWithStart(3, (2, 3), 1)  # wrong length
        with pytest.raises(ValueError):
            CycleWithStart(3, (2, 2, 1), 1)  # not a bijection
        with pytest.raises(ValueError):
            CycleWithStart(4, (2, 1, 4, 3), 1)  # two 2-cycles
        with pytest.raises(ValueError):
            CycleWithStart(3, (2, 3, 1), 4)  # start out of range
        with pytest.raises(ValueError):
            CycleWithStart(3, (1, 2, 3), 1)  # three fixed points

    def test_from_mapping_and_successor(self):
        c = CycleWithStart.from_mapping({1: 3, 2: 1, 3: 2}, 3)
        assert c.successor == (3, 1, 2)
        assert c.successor_of(1) == 3
        with pytest.raises(ValueError):
            c.successor_of(0)

    def test_jump_lengths(self):
        c = CycleWithStart.from_mapping({1: 2, 2: 4, 3: 1, 4: 3}, 1)
        assert c.jump_lengths() == (1, 2, 2, 1)

    def test_singleton(self):
        c = CycleWithStart(1, (1,), 1)
        assert cycle_stat(c) == ProductValue(1, 1)
        assert cycle_to_perm(c) == Permutation((1,))


class TestRoundTrip:
    def test_example(self):
        c = perm_to_cycle(Permutation((2, 4, 1, 3)))
        assert c.successor == (3, 4, 2, 1)
        assert c.start == 2

    @pytest.mark.parametrize("n", range(1, 7))
    def test_word_cycle_word(self, n):
        for p in perms(n):
            assert cycle_to_perm(perm_to_cycle(p)) == p

    @pytest.mark.parametrize("n", range(1, 7))
    def test_cycle_word_cycle(self, n):
        for c in all_cycles(n):
            for start in range(1, n + 1):
                shifted = CycleWithStart(n, c.successor, start)
                back = perm_to_cycle(cycle_to_perm(shifted))
                assert back == shifted


class TestCycleStat:
    def test_known_value(self):
        c = CycleWithStart.from_mapping({1: 2, 2: 3, 3: 1}, 1)
        assert cycle_stat(c) == ProductValue(2, 2)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_equals_best_unrolling_exhaustive(self, n):
        for c in all_cycles(n):
            best = max(
                gap_product(cycle_to_perm(CycleWithStart(n, c.successor, s)))
                for s in range(1, n + 1)
            )
            assert cycle_stat(c) == ProductValue(Fraction(best), n - 1)
            chosen = best_unrolling(c)
            assert gap_product(chosen) == best

    def test_best_unrolling_visible_example(self):
        c = perm_to_cycle(Permutation((2, 4, 1, 3)))
        w = best_unrolling(c)
        assert gap_product(w) == 12
        assert cycle_stat(c) == ProductValue(12, 3)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_max_over_cycles_is_max_over_words(self, n):
        best_cycle = max(cycle_stat(c) for c in all_cycles(n))
        fam = consecutive_pairs(n)
        best_word = max(stretch_multiplicative(fam, p) for p in perms(n))
        assert best_cycle == best_word == max_multiplicative_stretch(n)


class TestTwoOpt:
    def test_example(self):
        c = CycleWithStart.from_mapping({1: 2, 2: 3, 3: 4, 4: 1}, 1)
        assert two_opt(c, 1, 3).successor == (3, 4, 2, 1)

    def test_rejects_shared_endpoints(self):
        c = CycleWithStart.from_mapping({1: 2, 2: 3, 3: 4, 4: 1}, 1)
        with pytest.raises(ValueError):
            two_opt(c, 1, 2)  # rho(1) = 2 collides with b

    def test_preserves_start(self):
        c = CycleWithStart.from_mapping({1: 2, 2: 3, 3: 4, 4: 1}, 3)
        assert two_opt(c, 1, 3).start == 3

    def test_length_multiset_exchange_random(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randrange(4, 12)
            c = random_cycle(rng, n)
            a, b = rng.sample(range(1, n + 1), 2)
            ra, rb = c.successor_of(a), c.successor_of(b)
            if len({a, ra, b, rb}) != 4:
                continue
            d = two_opt(c, a, b)  # constructor re-validates single-cycle
            before = Counter(c.jump_lengths())
            after = Counter(d.jump_lengths())
            before[abs(a - ra)] -= 1
            before[abs(b - rb)] -= 1
            before[abs(a - b)] += 1
            before[abs(ra - rb)] += 1
            assert before == after

    @pytest.mark.parametrize("n", [4, 5])
    def test_length_multiset_exchange_exhaustive(self, n):
        for c in all_cycles(n):
            for a in range(1, n + 1):
                for b in range(a + 1, n + 1):
                    ra, rb = c.successor_of(a), c.successor_of(b)
                    if len({a, ra, b, rb}) != 4:
                        continue
                    d = two_opt(c, a, b)
                    lost = sorted((abs(a - ra), abs(b - rb)))
                    gained = sorted((abs(a - b), abs(ra - rb)))
                    diff = Counter(d.jump_lengths())
                    diff.subtract(Counter(c.jump_lengths()))
                    expect = Counter(gained)
                    expect.subtract(Counter(lost))
                    assert {k: v for k, v in diff.items() if v} == {
                        k: v for k, v in expect.items() if v
                    }


class TestClassifyJumps:
    def test_disjoint_same(self):
        c = CycleWithStart.from_mapping(
            {1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: 1}, 1
        )
        k = classify_jumps(c, 1, 3)
        assert k.relation == "disjoint"
        assert k.direction == "same"
        assert k.first_short and k.second_short

    def test_skips(self):
        c = CycleWithStart.from_mapping(
            {1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: 1}, 1
        )
        # jump 6 -> 1 spans [1, 6] and contains [1, 2], sharing endpoint 1
        k = classify_jumps(c, 1, 6)
        assert k.relation == "skips"
        assert k.direction == "opposite"

    def test_shared_endpoint(self):
        c = CycleWithStart.from_mapping({1: 3, 2: 1, 3: 5, 4: 2, 5: 4}, 1)
        # spans [1,3] and [3,5] meet only at 3; neither contains the other
        k = classify_jumps(c, 1, 3)
        assert k.relation == "shared-endpoint"

    def test_bridges(self):
        c = CycleWithStart.from_mapping(
            {1: 2, 2: 5, 3: 1, 4: 3, 5: 6, 6: 4}, 1
        )
        k = classify_jumps(c, 2, 4)
        assert k.relation == "bridges"
        assert k.direction == "opposite"
        assert not k.first_short and k.second_short

    def test_nontrivial_intersection(self):
        c = CycleWithStart.from_mapping(
            {1: 3, 2: 4, 3: 2, 4: 5, 5: 6, 6: 1}, 1
        )
        k = classify_jumps(c, 1, 2)
        assert k.relation == "nontrivial-intersection"
        assert k.direction == "same"

    def test_rejects_equal_jumps(self):
        c = CycleWithStart.from_mapping({1: 2, 2: 3, 3: 1}, 1)
        with pytest.raises(ValueError):
            classify_jumps(c, 2, 2)


class TestFindImprovement:
    def test_small_cycles_have_no_move(self):
        c = CycleWithStart.from_mapping({1: 2, 2: 3, 3: 1}, 1)
        assert find_improvement(c) is None

    def test_strict_increase_random(self):
        rng = random.Random(11)
        for _ in range(600):
            n = rng.randrange(4, 11)
            c = random_cycle(rng, n)
            improved = find_improvement(c)
            if improved is not None:
                assert cycle_stat(improved) > cycle_stat(c)

    def test_iteration_terminates(self):
        rng = random.Random(13)
        for _ in range(60):
            n = rng.randrange(4, 11)
            c = random_cycle(rng, n)
            steps = 0
            while True:
                nxt = find_improvement(c)
                if nxt is None:
                    break
                assert cycle_stat(nxt) > cycle_stat(c)
                c = nxt
                steps += 1
                assert steps <= 500

    @pytest.mark.parametrize("n", range(4, 9))
    def test_global_maximizers_admit_no_move(self, n):
        for p in multiplicative_maximizers(n):
            assert find_improvement(perm_to_cycle(p)) is None
