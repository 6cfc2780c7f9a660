#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import os
from unittest import TestCase, main
from unittest.mock import patch

from fcs.corpus.examples import cycle3_xyz, pqr_interior
from fcs.lattice.chain_lattice import Chain, Universe, FuzzySet, FuzzyPoint, enumerate_sets
from fcs.space.closure_space import FuzzyClosureSpace, NamedOperator, TableOperator, FinitelyGeneratedOperator, \
    validate, replay_violation, is_idempotent, coarser_leq, is_finitely_generated, compile_points, as_table, \
    associated_topology, AXIOM_EXPANSIVE, AXIOM_LEVEL_MONOTONE
from fcs.utils.errors import StructuralError, BudgetExceededError


class TestClosureSpace(TestCase):
    def setUp(self):
        self.u = Universe(['x', 'y'])
        self.ch = Chain(2)
        self.discrete = FuzzyClosureSpace.discrete(self.u, self.ch)
        self.indiscrete = FuzzyClosureSpace.indiscrete(self.u, self.ch)

    def test_named_operators(self):
        self.assertTrue(validate(self.discrete).passed)
        self.assertTrue(validate(self.indiscrete).passed)
        half = self.indiscrete.point('x', '1/2')
        self.assertEqual(self.indiscrete.closure(half), self.indiscrete.one())
        self.assertEqual(self.indiscrete.closure(self.indiscrete.zero()), self.indiscrete.zero())
        self.assertEqual(self.discrete.closure(half), half)
        with self.assertRaises(StructuralError):
            NamedOperator(self.u, self.ch, 'sierpinski')

    def test_table_not_expansive(self):
        table = {f: f for f in enumerate_sets(self.u, self.ch)}
        x1 = FuzzySet.crisp(self.u, self.ch, ['x'])
        table[x1] = FuzzySet.zero(self.u, self.ch)
        s = FuzzyClosureSpace(self.u, self.ch, TableOperator(self.u, self.ch, table))
        report = validate(s)
        self.assertFalse(report.passed)
        self.assertIn(AXIOM_EXPANSIVE, report.axioms())
        for violation in report.violations:
            self.assertTrue(replay_violation(s, violation))
        with self.assertRaises(StructuralError):
            s.ensure_valid()

    def test_table_incomplete(self):
        zero = FuzzySet.zero(self.u, self.ch)
        with self.assertRaises(StructuralError):
            TableOperator(self.u, self.ch, {zero: zero})

    def test_table_budget(self):
        with patch.dict(os.environ, {'FCS_TABLE_MAX_ENTRIES': '4'}):
            with self.assertRaises(BudgetExceededError):
                as_table(self.discrete)

    def test_level_monotone_violation(self):
        crisp = lambda *es: FuzzySet.crisp(self.u, self.ch, es)
        entries = {
            ('x', 1): crisp('x', 'y'),
            ('x', 2): crisp('x'),
            ('y', 1): FuzzyPoint('y', '1/2').as_set(self.u, self.ch),
            ('y', 2): crisp('y'),
        }
        s = FuzzyClosureSpace(self.u, self.ch, FinitelyGeneratedOperator(self.u, self.ch, entries))
        report = validate(s)
        self.assertEqual(report.axioms(), [AXIOM_LEVEL_MONOTONE])
        self.assertTrue(replay_violation(s, report.violations[0]))

    def test_generated_missing_entry(self):
        with self.assertRaises(StructuralError):
            FinitelyGeneratedOperator(self.u, self.ch, {('x', 1): FuzzySet.one(self.u, self.ch)})

    def test_interior_and_neighborhoods(self):
        s = cycle3_xyz()
        self.assertEqual(s.closure(s.crisp(['x'])), s.crisp(['x', 'y']))
        self.assertEqual(s.interior(s.crisp(['x', 'y'])), s.crisp(['y']))
        self.assertEqual(s.interior(s.one()), s.one())
        self.assertTrue(s.is_neighborhood(s.crisp(['x', 'y']), s.crisp(['y'])))
        self.assertFalse(s.is_neighborhood(s.crisp(['x', 'y']), s.crisp(['x'])))
        for f in s.sets():
            self.assertEqual(s.closure_from_interior(f), s.closure(f))
        self.assertEqual(s.open_sets(), [s.zero(), s.one()])
        self.assertEqual(s.closed_sets(), [s.zero(), s.one()])

    def test_idempotent_and_coarseness(self):
        self.assertTrue(is_idempotent(self.discrete))
        self.assertTrue(is_idempotent(self.indiscrete))
        self.assertFalse(is_idempotent(cycle3_xyz()))
        self.assertTrue(coarser_leq(self.indiscrete, self.discrete))
        self.assertFalse(coarser_leq(self.discrete, self.indiscrete))
        with self.assertRaises(StructuralError):
            coarser_leq(self.discrete, cycle3_xyz())

    def test_well_closed(self):
        self.assertTrue(self.discrete.is_well_closed(FuzzyPoint('x', '1/2')))
        self.assertFalse(cycle3_xyz().is_well_closed(FuzzyPoint('x', 1)))

    def test_compile_points(self):
        s = pqr_interior(2)
        compiled = compile_points(s)
        self.assertIsInstance(compiled.operator, FinitelyGeneratedOperator)
        for f in s.sets():
            self.assertEqual(compiled.closure(f), s.closure(f))
        generated = cycle3_xyz()
        self.assertIs(compile_points(generated), generated)
        self.assertTrue(is_finitely_generated(self.indiscrete))
        self.assertTrue(is_finitely_generated(s))

    def test_as_table(self):
        table = as_table(cycle3_xyz(1))
        self.assertIsInstance(table.operator, TableOperator)
        self.assertTrue(validate(table).passed)
        for f in table.sets():
            self.assertEqual(table.closure(f), cycle3_xyz(1).closure(f))

    def test_associated_topology(self):
        self.assertEqual(associated_topology(self.indiscrete).opens, [self.indiscrete.zero(), self.indiscrete.one()])
        self.assertEqual(len(associated_topology(self.discrete)), 9)


if __name__ == '__main__':
    main()
