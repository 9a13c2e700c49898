"""The LD-expansion monoid: table, distinguished words, simples, coordinates."""

from __future__ import annotations

import itertools

import pytest

from ldgarside import mld, reversing, terms
from ldgarside.mld import LD
from ldgarside.terms import parse_term


def comb3():
    return parse_term("x*(x*(x*x))")


class TestComplementTable:
    def test_critical_case(self):
        assert mld.ld_complement("", "1") == ("1", "")
        assert mld.ld_complement("1", "") == ("", "1", "0")

    def test_nested_zero(self):
        assert mld.ld_complement("", "0") == ("00", "10")
        assert mld.ld_complement("0", "") == ("",)

    def test_nested_ten_eleven(self):
        assert mld.ld_complement("", "10") == ("01",)
        assert mld.ld_complement("", "11") == ("11",)
        assert mld.ld_complement("10", "") == ("",)
        assert mld.ld_complement("11", "") == ("",)

    def test_parallel(self):
        assert mld.ld_complement("0", "1") == ("1",)
        assert mld.ld_complement("01", "001") == ("001",)

    def test_diagonal_empty(self):
        assert mld.ld_complement("010", "010") == ()

    def test_total_on_pairs(self):
        addrs = ["", "0", "1", "00", "01", "10", "11", "010", "101"]
        for x, y in itertools.product(addrs, repeat=2):
            mld.ld_complement(x, y)  # must not raise

    def test_relations_act_identically(self):
        # Every schema instance with short patterns, on every small term.
        pats = ["", "0", "1"]
        instances = [
            rel
            for a in pats
            for b in pats
            for g in pats
            for rel in mld.ld_relation_instances(a, b, g)
        ]
        for t in terms.all_terms(5):
            for _name, lhs, rhs in instances:
                left = terms.act_word(t, lhs)
                right = terms.act_word(t, rhs)
                assert left == right  # None == None when neither acts

    def test_table_matches_relations(self):
        # a . C(a,b) and b . C(b,a) act identically (the defining property).
        addrs = ["", "0", "1", "00", "01", "10", "11"]
        for x, y in itertools.product(addrs, repeat=2):
            lhs = (x,) + mld.ld_complement(x, y)
            rhs = (y,) + mld.ld_complement(y, x)
            for t in terms.all_terms(5):
                assert terms.act_word(t, lhs) == terms.act_word(t, rhs)


class TestShift:
    def test_prepend_bit(self):
        assert mld.shift("0", ("", "1")) == ("0", "01")

    def test_empty_prefix(self):
        assert mld.shift("", ("0", "1")) == ("0", "1")

    def test_relations_shift_invariant(self):
        pats = ["", "0", "1", "01"]
        for gamma in ("0", "1", "10"):
            for a in pats:
                for _name, lhs, rhs in mld.ld_relation_instances(a, "0", "1"):
                    assert reversing.equal(
                        LD, mld.shift(gamma, lhs), mld.shift(gamma, rhs)
                    )


class TestDeltaWords:
    def test_delta_small_single_node(self):
        assert mld.delta_small(parse_term("x*x")) == ("",)

    def test_delta_small_balanced(self):
        assert mld.delta_small(parse_term("(x*x)*(x*x)")) == ("", "0", "1")

    def test_delta_small_distributes(self):
        # (t0*t) acted by delta_small(t) is the one-step distribution of t0.
        for t0 in terms.all_terms(3):
            for t in terms.all_terms(3):
                combined = terms.Node(t0, t)
                acted = terms.act_word(combined, mld.delta_small(t))
                assert acted == terms.dist(t0, t)

    def test_delta_big_worked_example(self):
        t = comb3()
        assert mld.delta_big(t) == ("1", "", "0", "1")
        assert reversing.equal(LD, mld.delta_big(t), ("", "1", ""))

    def test_delta_big_leaf(self):
        assert mld.delta_big(terms.Leaf(1)) == ()

    def test_delta_big_reaches_phi(self):
        for t in terms.all_terms(5):
            assert terms.act_word(t, mld.delta_big(t)) == terms.phi(t)


class TestEnabledAtoms:
    def test_no_redex(self):
        assert mld.enabled_atoms(parse_term("x*x")) == ()

    def test_comb(self):
        assert set(mld.enabled_atoms(comb3())) == {"", "1"}

    def test_enabled_atoms_divide_delta(self):
        for t in terms.all_terms(5):
            delta = mld.delta_big(t)
            for a in mld.enabled_atoms(t):
                assert reversing.divides(LD, (a,), delta)


class TestPhiT:
    def test_figure_values_first_term(self):
        t = comb3()
        assert reversing.equal(LD, mld.phi_t(t, ("1",)), ("",))
        assert reversing.equal(LD, mld.phi_t(t, ("",)), ("0", "1"))

    def test_figure_values_second_term(self):
        t = parse_term("(x*(x*x))*(x*(x*x))")
        assert reversing.equal(LD, mld.phi_t(t, ("0",)), ("000", "010", "100", "110"))
        assert reversing.equal(LD, mld.phi_t(t, ("1",)), ("",))

    def test_empty_word(self):
        assert mld.phi_t(comb3(), ()) == ()

    def test_defining_equation(self):
        for t in terms.all_terms(4):
            for a in mld.enabled_atoms(t):
                img = mld.phi_t(t, (a,))
                lhs = mld.delta_big(t) + img
                rhs = (a,) + mld.delta_big(terms.apply_ld(t, a))
                assert reversing.equal(LD, lhs, rhs)

    def test_functoriality(self):
        for t in terms.all_terms(3):
            for a in mld.enabled_atoms(t):
                t1 = terms.apply_ld(t, a)
                for b in mld.enabled_atoms(t1):
                    combined = mld.phi_t(t, (a, b))
                    split = mld.phi_t(t, (a,)) + mld.phi_t(t1, (b,))
                    assert reversing.equal(LD, combined, split)

    def test_requires_acting_word(self):
        with pytest.raises(ValueError):
            mld.phi_t(parse_term("x*x"), ("",))


class TestSimpleDivisors:
    def test_single_node_has_trivial_garside_word(self):
        # phi(x*x) = x*x, so the Garside word at x*x is empty and the empty
        # element is its only divisor.
        assert mld.delta_big(parse_term("x*x")) == ()
        words = [d.word for d in mld.simple_divisors(parse_term("x*x"))]
        assert words == [()]

    def test_smallest_nontrivial_garside_word(self):
        words = [d.word for d in mld.simple_divisors(parse_term("x*(x*x)"))]
        assert words == [(), ("",)]

    def test_comb3_contains_expected(self):
        t = comb3()
        found = [d.word for d in mld.simple_divisors(t)]
        for expected in [("",), ("1",), ("", "1"), ("1", ""), ("", "1", "")]:
            assert any(reversing.equal(LD, expected, w) for w in found)

    def test_comb3_regression_count(self):
        # Recorded regression value: the breadth-first walk finds 8 divisors.
        assert len(mld.simple_divisors(comb3())) == 8

    def test_star_complements(self):
        t = comb3()
        delta = mld.delta_big(t)
        for d in mld.simple_divisors(t):
            assert reversing.equal(LD, d.word + d.star, delta)

    def test_divisors_are_pairwise_distinct(self):
        for t in terms.all_terms(3):
            divs = mld.simple_divisors(t)
            for i in range(len(divs)):
                for j in range(i + 1, len(divs)):
                    assert not reversing.equal(LD, divs[i].word, divs[j].word)


class TestCoordinates:
    def test_atom(self):
        el = mld.SimpleElement(word=("",), witness=parse_term("x*(x*x)"))
        assert mld.coordinates(el) == {"": 1}

    def test_from_coordinates_chain(self):
        assert mld.from_coordinates({"": 2}) == ("", "1")

    def test_delta_comb3(self):
        el = mld.SimpleElement(word=mld.delta_big(comb3()), witness=comb3())
        assert mld.coordinates(el) == {"1": 1, "": 2, "0": 1}

    def test_round_trip_all_divisors(self):
        for t in terms.all_terms(4):
            for d in mld.simple_divisors(t):
                el = mld.SimpleElement(word=d.word, witness=t)
                coords = mld.coordinates(el)
                assert reversing.equal(LD, mld.from_coordinates(coords), d.word)

    def test_coordinates_unique(self):
        # Distinct divisors get distinct exponent vectors; the count of
        # vectors equals the breadth-first divisor count.
        for t in terms.all_terms(4):
            divs = mld.simple_divisors(t)
            vectors = {
                tuple(
                    sorted(
                        mld.coordinates(mld.SimpleElement(word=d.word, witness=t)).items()
                    )
                )
                for d in divs
            }
            assert len(vectors) == len(divs)

    def test_rejects_non_simple(self):
        t = parse_term("x*x")
        with pytest.raises(ValueError):
            mld.coordinates(mld.SimpleElement(word=("", ""), witness=t))

    def test_order_pins(self):
        # Right-spine extensions rank above the base address...
        assert mld.address_cmp("1", "") > 0
        assert mld.address_cmp("11", "1") > 0
        assert mld.address_cmp("01", "0") > 0
        # ...0-containing extensions rank below it...
        assert mld.address_cmp("", "0") > 0
        assert mld.address_cmp("1", "10") > 0
        assert mld.address_cmp("0", "00") > 0
        assert mld.address_cmp("", "10") > 0  # turns left eventually: below
        # ...and at a divergence the right side wins.
        assert mld.address_cmp("00", "01") < 0
        assert mld.address_cmp("10", "01") > 0

    def test_deep_divisor_decomposes(self):
        # The regression that pinned the order: this divisor's block sequence
        # is rooted at 11, then the empty address, then 10.
        t = terms.right_comb(4)
        el = mld.SimpleElement(word=("", "1", "11", "1"), witness=t)
        assert mld.coordinates(el) == {"11": 1, "": 3, "10": 1}


class TestCoherence:
    def test_holds_on_divisor_samples(self):
        witnesses = list(terms.all_terms(3))
        for t_src in terms.all_terms(3):
            for t_wit in witnesses:
                for d in mld.simple_divisors(t_wit):
                    assert mld.coherence_check(t_src, t_wit, d.word)


class TestSerialization:
    def test_atom_names(self):
        assert mld.atom_name("") == "D:"
        assert mld.atom_name("01") == "D:01"
        assert mld.parse_atom("D:01") == "01"

    def test_word_round_trip(self):
        w = ("", "1", "01")
        assert mld.parse_word(mld.format_word(w)) == w

    def test_bad_atom(self):
        with pytest.raises(ValueError):
            mld.parse_atom("s1")
