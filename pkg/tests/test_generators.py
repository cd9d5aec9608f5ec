from itertools import combinations

import pytest

from strongsparse.generators import (
    gen_planted,
    gen_random,
    gen_random_nonmonotone,
    gen_subset_family,
    gen_xor,
    planted_assignment,
)
from strongsparse.instance import Semantics, parse, parse_literal, serialize, serialize_literal
from strongsparse.oracle import enumerate_solutions, pair_uniqueness

from corpus import planted


def brute_xor_triples(k):
    return [t for t in combinations(range(1 << k), 3) if t[0] ^ t[1] ^ t[2] == 0]


class TestXor:
    def test_k2(self):
        inst = gen_xor(2)
        assert inst.n == 4
        assert inst.clauses == ((2, 3, 4),)

    def test_k3(self):
        assert gen_xor(3).m == 7

    @pytest.mark.parametrize("k", range(1, 7))
    def test_count_against_enumeration(self, k):
        inst = gen_xor(k)
        expected = [tuple(v + 1 for v in t) for t in brute_xor_triples(k)]
        assert list(inst.clauses) == sorted(expected)
        assert inst.m == (2 ** k - 1) * (2 ** k - 2) // 6

    def test_pairs_unique(self):
        assert pair_uniqueness(gen_xor(5)) is None

    @pytest.mark.parametrize("k", [0, 17])
    def test_range(self, k):
        with pytest.raises(ValueError):
            gen_xor(k)


class TestSubsetFamily:
    def test_d1(self):
        f = gen_subset_family(1)
        assert f.V == (1, 0)
        assert [len(s) for s in f.N] == [2, 1]

    def test_order(self):
        assert gen_subset_family(2).V == (0b11, 0b01, 0b10, 0b00)

    def test_range(self):
        with pytest.raises(ValueError):
            gen_subset_family(13)


class TestPlanted:
    def test_n3(self):
        inst = gen_planted(3, 1, 0)
        assert inst.clauses == ((1, 2, 3),)

    def test_deterministic(self):
        assert gen_planted(12, 20, 5) == gen_planted(12, 20, 5)

    @pytest.mark.parametrize("seed", range(20))
    def test_hidden_solution(self, seed):
        n = 8 + seed % 10
        inst = planted(n, 30, seed)
        assert planted_assignment(n, seed) in enumerate_solutions(inst)

    def test_two_in_three(self):
        inst = gen_planted(10, 10, 2, Semantics.TWO_IN_THREE)
        flipped = tuple(1 - b for b in planted_assignment(10, 2))
        assert flipped in enumerate_solutions(inst)

    def test_too_many(self):
        with pytest.raises(ValueError):
            gen_planted(4, 50, 0)


class TestRandom:
    def test_cardinality(self):
        inst = gen_random(5, 10, 3)
        assert inst.m == 10 and len(set(inst.clauses)) == 10

    def test_seeds(self):
        assert gen_random(10, 20, 1) == gen_random(10, 20, 1)
        assert gen_random(10, 20, 1) != gen_random(10, 20, 2)

    def test_roundtrip(self):
        inst = gen_random(9, 15, 4)
        assert parse(serialize(inst)) == inst
        li = gen_random_nonmonotone(9, 15, 4)
        assert parse_literal(serialize_literal(li)) == li

    def test_infeasible(self):
        with pytest.raises(ValueError):
            gen_random(4, 5, 0)

    def test_nonmonotone_signs(self):
        li = gen_random_nonmonotone(10, 40, 0)
        lits = [l for c in li.clauses for l in c]
        assert any(l < 0 for l in lits) and any(l > 0 for l in lits)
