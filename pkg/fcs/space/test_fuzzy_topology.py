#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from unittest import TestCase, main

from fcs.corpus.examples import cycle3_xyz
from fcs.lattice.chain_lattice import Chain, Universe, FuzzySet
from fcs.space.closure_space import validate, is_idempotent, associated_topology
from fcs.space.fuzzy_topology import FuzzyTopology, validate_chang, generated_topology, fts_closure, \
    topology_interior, smallest_open, topology_closure_space, ft_axiom, singletons_closed
from fcs.utils.errors import StructuralError


class TestFuzzyTopology(TestCase):
    def setUp(self):
        self.u = Universe(['x', 'y', 'z'])
        self.ch = Chain(1)
        self.crisp = lambda *es: FuzzySet.crisp(self.u, self.ch, es)
        self.t = generated_topology(self.u, self.ch, [self.crisp('x'), self.crisp('y')])

    def test_generated_topology(self):
        self.assertEqual(len(self.t), 5)
        self.assertTrue(validate_chang(self.t).passed)
        self.assertTrue(self.t.is_open(self.crisp('x', 'y')))
        self.assertTrue(self.t.is_closed(self.crisp('z')))

    def test_chang_violation(self):
        zero, one = FuzzySet.zero(self.u, self.ch), FuzzySet.one(self.u, self.ch)
        broken = FuzzyTopology(self.u, self.ch, [zero, one, self.crisp('x'), self.crisp('y')])
        self.assertEqual(validate_chang(broken).axioms(), ['join'])

    def test_closure_and_interior(self):
        self.assertEqual(fts_closure(self.t, self.crisp('z')), self.crisp('z'))
        self.assertEqual(fts_closure(self.t, self.crisp('x')), self.crisp('x', 'z'))
        self.assertEqual(topology_interior(self.t, self.crisp('x', 'z')), self.crisp('x'))
        self.assertEqual(smallest_open(self.t, self.crisp('z')), FuzzySet.one(self.u, self.ch))

    def test_topology_closure_space(self):
        s = topology_closure_space(self.t)
        self.assertTrue(validate(s).passed)
        self.assertTrue(is_idempotent(s))
        self.assertEqual(associated_topology(s), self.t)

    def test_ft_axioms(self):
        self.assertTrue(ft_axiom(self.t, 'FT0').holds)
        verdict = ft_axiom(self.t, 'FT1')
        self.assertFalse(verdict.holds)
        discrete = FuzzyTopology.discrete(self.u, Chain(2))
        for which in ('FT0', 'FT1', 'FTs', 'FT2', 'FT2.5', 'regular', 'FT3', 'normal', 'FT4'):
            self.assertTrue(ft_axiom(discrete, which).holds, which)
        self.assertFalse(ft_axiom(FuzzyTopology.indiscrete(self.u, self.ch), 'FT0').holds)
        with self.assertRaises(StructuralError):
            ft_axiom(discrete, 'FT5')

    def test_singletons_closed(self):
        self.assertTrue(singletons_closed(FuzzyTopology.discrete(self.u, self.ch)))
        self.assertFalse(singletons_closed(FuzzyTopology.indiscrete(self.u, self.ch)))
        self.assertFalse(singletons_closed(self.t))

    def test_cycle3_topology_is_indiscrete(self):
        s = cycle3_xyz()
        t = associated_topology(s)
        self.assertEqual(t, FuzzyTopology.indiscrete(s.universe, s.chain))
        self.assertTrue(validate_chang(t).passed)


if __name__ == '__main__':
    main()
