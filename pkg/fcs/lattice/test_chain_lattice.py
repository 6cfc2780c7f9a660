#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import os
from fractions import Fraction
from unittest import TestCase, main

from fcs.lattice.chain_lattice import Chain, Universe, FuzzySet, FuzzyPoint, join, meet, complement, leq, \
    membership, maximal_points, support, enumerate_sets, join_all, set_index, sets_below, embed_grades
from fcs.utils.errors import StructuralError, BudgetExceededError


class TestChainLattice(TestCase):
    def setUp(self):
        self.u = Universe(['p', 'q', 'r'])
        self.ch = Chain(2)

    def test_chain_levels(self):
        self.assertEqual(self.ch.levels(), [Fraction(0), Fraction(1, 2), Fraction(1)])
        self.assertEqual(self.ch.grade("1/2"), 1)
        with self.assertRaises(StructuralError):
            self.ch.grade("1/3")
        with self.assertRaises(StructuralError):
            self.ch.grade("5/4")
        with self.assertRaises(StructuralError):
            Chain(0)

    def test_universe(self):
        with self.assertRaises(StructuralError):
            Universe([])
        with self.assertRaises(StructuralError):
            Universe(['a', 'a'])

    def test_join_meet(self):
        p = FuzzySet.crisp(self.u, self.ch, ['p'])
        q = FuzzySet.crisp(self.u, self.ch, ['q'])
        self.assertEqual(join(p, q), FuzzySet.crisp(self.u, self.ch, ['p', 'q']))
        self.assertEqual(join(p, FuzzySet.zero(self.u, self.ch)), p)
        half = FuzzyPoint('p', '1/2').as_set(self.u, self.ch)
        self.assertEqual(meet(half, p), half)

    def test_mismatch(self):
        other = FuzzySet.zero(Universe(['a']), self.ch)
        with self.assertRaises(StructuralError):
            join(FuzzySet.zero(self.u, self.ch), other)
        with self.assertRaises(StructuralError):
            leq(FuzzySet.zero(self.u, Chain(4)), FuzzySet.zero(self.u, self.ch))

    def test_complement(self):
        self.assertEqual(complement(FuzzySet.zero(self.u, self.ch)), FuzzySet.one(self.u, self.ch))
        point = FuzzyPoint('p', '1/2').as_set(self.u, self.ch)
        self.assertEqual(complement(point).to_mapping(), {'p': Fraction(1, 2), 'q': 1, 'r': 1})
        u2 = Universe(['x', 'y'])
        for f in enumerate_sets(u2, self.ch):
            self.assertEqual(complement(complement(f)), f)

    def test_de_morgan(self):
        u2 = Universe(['x', 'y'])
        sets = enumerate_sets(u2, self.ch)
        for f in sets:
            for g in sets:
                self.assertEqual(complement(join(f, g)), meet(complement(f), complement(g)))
                self.assertEqual(complement(meet(f, g)), join(complement(f), complement(g)))
                if leq(f, g) and leq(g, f):
                    self.assertEqual(f, g)

    def test_leq(self):
        for f in enumerate_sets(self.u, self.ch):
            self.assertTrue(leq(FuzzySet.zero(self.u, self.ch), f))
        self.assertTrue(leq(FuzzySet.crisp(self.u, self.ch, ['p']), FuzzySet.crisp(self.u, self.ch, ['p', 'q'])))
        ch4 = Chain(4)
        self.assertFalse(leq(FuzzyPoint('p', '3/4').as_set(self.u, ch4), FuzzyPoint('p', '1/2').as_set(self.u, ch4)))

    def test_membership(self):
        one_x = FuzzySet.crisp(self.u, self.ch, ['p'])
        self.assertTrue(membership(FuzzyPoint('p', '1/2'), one_x))
        half = FuzzyPoint('p', '1/2').as_set(self.u, Chain(4))
        self.assertFalse(membership(FuzzyPoint('p', '3/4'), half))
        with self.assertRaises(StructuralError):
            membership(FuzzyPoint('z', 1), one_x)

    def test_maximal_points_and_support(self):
        self.assertEqual(maximal_points(FuzzySet.zero(self.u, self.ch)), [])
        self.assertEqual(maximal_points(FuzzySet.crisp(self.u, self.ch, ['p', 'q'])),
                         [FuzzyPoint('p', 1), FuzzyPoint('q', 1)])
        u2 = Universe(['x', 'y'])
        for f in enumerate_sets(u2, self.ch):
            rebuilt = join_all(u2, self.ch, (p.as_set(u2, self.ch) for p in maximal_points(f)))
            self.assertEqual(rebuilt, f)
        ch4 = Chain(4)
        f = join(FuzzySet.crisp(self.u, ch4, ['p', 'q']), FuzzyPoint('r', '1/4').as_set(self.u, ch4))
        self.assertEqual(support(f), ['p', 'q', 'r'])
        self.assertEqual(support(FuzzyPoint('p', '1/2').as_set(self.u, self.ch)), ['p'])

    def test_enumerate_sets(self):
        self.assertEqual(len(enumerate_sets(Universe(['a']), Chain(1))), 2)
        self.assertEqual(len(enumerate_sets(Universe(['a', 'b']), Chain(2))), 9)
        sets = enumerate_sets(self.u, Chain(4))
        self.assertEqual(len(sets), 125)
        self.assertEqual(len(set(sets)), 125)
        self.assertEqual([set_index(f) for f in sets], list(range(125)))

    def test_budget(self):
        os.environ['FCS_MAX_CARRIER'] = '10'
        try:
            with self.assertRaises(BudgetExceededError):
                enumerate_sets(self.u, Chain(4))
        finally:
            del os.environ['FCS_MAX_CARRIER']

    def test_sets_below_and_embedding(self):
        f = FuzzySet.from_mapping(self.u, self.ch, {'p': '1/2', 'q': 1})
        below = sets_below(f)
        self.assertEqual(len(below), 6)
        self.assertTrue(all(leq(g, f) for g in below))
        self.assertEqual(embed_grades(f, Chain(4)).to_mapping(), f.to_mapping())


if __name__ == '__main__':
    main()
