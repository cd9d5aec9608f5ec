import warnings

import pytest
from hypothesis import given, settings, strategies as st

from strongsparse.instance import (
    EquivRel,
    FormatError,
    Instance,
    LiteralInstance,
    Semantics,
    clause_matrix,
    complement,
    neighbours,
    parse,
    parse_any,
    parse_literal,
    parse_merges,
    quotient,
    serialize,
    serialize_literal,
    serialize_merges,
)
from strongsparse.oracle import count_solutions, enumerate_solutions, verify_merges

O2T3 = Semantics.TWO_IN_THREE


class TestParse:
    def test_minimal(self):
        inst = parse("p oit 3 1\n1 2 3\n")
        assert inst == Instance(3, [(1, 2, 3)])

    def test_canonicalization_dedupes(self):
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter("always")
            inst = parse("p oit 3 2\n3 2 1\n1 2 3\n")
        assert inst.clauses == ((1, 2, 3),)
        assert w

    def test_out_of_range(self):
        with pytest.raises(FormatError):
            parse("p oit 2 1\n1 2 3\n")

    def test_repeated_index(self):
        with pytest.raises(FormatError):
            parse("p oit 3 1\n1 1 2\n")
        assert parse("p oit 3 1\n1 1 2\n", allow_repeats=True).clauses == ((1, 1, 2),)

    def test_bad_header(self):
        for text in ("1 2 3\n", "p cnf 3 1\n1 2 3\n", "p oit 3\n", "p oit 3 2\n1 2 3\n"):
            with pytest.raises(FormatError):
                parse(text)

    def test_comments_and_semantics(self):
        inst = parse("c hello\np o2t3 4 1\n1 2 4\n")
        assert inst.semantics is O2T3

    def test_roundtrip(self):
        inst = Instance(5, [(1, 2, 3), (2, 4, 5)], O2T3)
        assert parse(serialize(inst)) == inst

    def test_literal_roundtrip(self):
        li = LiteralInstance(4, [(1, -2, 3), (-4, 2, 1)])
        assert parse_literal(serialize_literal(li)) == li
        assert isinstance(parse_any(serialize_literal(li)), LiteralInstance)

    def test_merges_roundtrip(self):
        eq = EquivRel.from_groups(5, [(2, 4), (3, 5)])
        assert parse_merges(serialize_merges(eq)) == eq


class TestComplement:
    def test_solution_bijection(self):
        inst = Instance(3, [(1, 2, 3)])
        assert set(enumerate_solutions(inst)) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
        assert set(enumerate_solutions(complement(inst))) == {(0, 1, 1), (1, 0, 1), (1, 1, 0)}

    def test_involution(self):
        inst = Instance(4, [(1, 2, 3), (2, 3, 4)])
        assert complement(complement(inst)) == inst

    def test_empty(self):
        assert complement(Instance(2)).clauses == ()


class TestClauseMatrix:
    def test_row(self):
        m = clause_matrix(Instance(4, [(1, 2, 3)], O2T3))
        assert [r.to_str() for r in m.rows] == ["1110"]

    def test_repeats_cancel(self):
        inst = Instance(3, [(1, 1, 2)], O2T3)
        assert [r.to_str() for r in clause_matrix(inst).rows] == ["010"]

    def test_no_clauses(self):
        m = clause_matrix(Instance(3, [], O2T3))
        assert m.nrows == 0 and m.ncols == 3

    def test_requires_two_in_three(self):
        with pytest.raises(ValueError):
            clause_matrix(Instance(3, [(1, 2, 3)]))


class TestQuotient:
    def test_collapse(self):
        inst = Instance(4, [(1, 2, 3), (1, 2, 4)])
        q, mapping = quotient(inst, EquivRel.from_groups(4, [(3, 4)]))
        assert q.n == 3 and q.clauses == ((1, 2, 3),)
        assert mapping == {1: 1, 2: 2, 3: 3, 4: 3}

    def test_identity(self):
        inst = Instance(4, [(1, 2, 3), (2, 3, 4)])
        assert quotient(inst, EquivRel(4))[0] == inst

    def test_positional_repeat(self):
        inst = Instance(3, [(1, 2, 3)])
        q, _ = quotient(inst, EquivRel.from_groups(3, [(1, 3)]))
        assert q.clauses == ((1, 1, 2),)

    def test_sound_merge_keeps_count(self):
        inst = Instance(4, [(1, 2, 3), (1, 2, 4)])
        eq = EquivRel.from_groups(4, [(3, 4)])
        assert verify_merges(inst, eq) is None
        assert count_solutions(inst) == count_solutions(quotient(inst, eq)[0]) == 3


class TestNeighbours:
    def test_single(self):
        assert neighbours(Instance(3, [(1, 2, 3)]), 1) == {2, 3}

    def test_two_clauses(self):
        assert neighbours(Instance(5, [(1, 2, 3), (1, 4, 5)]), 1) == {2, 3, 4, 5}

    def test_isolated_and_self(self):
        inst = Instance(4, [(1, 1, 2)])
        assert neighbours(inst, 4) == set()
        assert neighbours(inst, 1) == {2}


class TestEquivRel:
    def test_min_representative(self):
        eq = EquivRel(6)
        eq.union(5, 3)
        eq.union(3, 6)
        assert eq.find(6) == 3
        assert eq.classes() == [[1], [2], [3, 5, 6], [4]]
        assert eq.renumbering() == {1: 1, 2: 2, 3: 3, 4: 4, 5: 3, 6: 3}

    def test_merge_counts_unions(self):
        eq = EquivRel(5)
        assert eq.merge([1, 2, 3]) == 2
        assert eq.merge([2, 3]) == 0
        assert eq.num_classes() == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(*[st.integers(1, n)] * 3).filter(lambda t: len(set(t)) == 3), max_size=6),
)))
def test_complement_enumeration(data):
    n, clauses = data
    inst = Instance(n, clauses)
    sols = set(enumerate_solutions(inst))
    flipped = {tuple(1 - b for b in s) for s in enumerate_solutions(complement(inst))}
    assert sols == flipped
