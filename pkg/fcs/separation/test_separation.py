#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import os
from unittest import TestCase, main
from unittest.mock import patch

from fcs.corpus.examples import discrete, indiscrete, cycle3_xyz, singleton_closure, shift_cycle, shift_path, \
    apex_normal
from fcs.harness.enumeration import enumerate_fg_spaces
from fcs.lattice.chain_lattice import FuzzyPoint, leq
from fcs.separation import naive
from fcs.separation.deciders import DECIDERS, decide, cft2, cft0_interior_characterization, \
    cft1_interior_characterization
from fcs.separation.report import REPORT_AXIOMS, classify
from fcs.separation.verdict import Verdict
from fcs.space.constructions import subspace
from fcs.utils.errors import DeciderInconsistencyError

NAIVE_TWINS = (
    ('cft2', naive.cft2_naive),
    ('cf_urysohn', naive.cf_urysohn_naive),
    ('cf_regular', naive.cf_regular_naive),
    ('cf_regular_mashhour', naive.cf_regular_mashhour_naive),
    ('cf_normal', naive.cf_normal_naive),
)


def small_spaces():
    return list(enumerate_fg_spaces(2, 1)) + [cycle3_xyz(1), singleton_closure(2, 1), shift_cycle(3, 1),
                                              shift_path(3, 1), indiscrete(2, 2)]


class TestDeciders(TestCase):
    def test_discrete_satisfies_everything(self):
        report = classify(discrete(2, 2))
        for axiom in REPORT_AXIOMS:
            self.assertTrue(report.holds(axiom), axiom)

    def test_indiscrete(self):
        s = indiscrete(2, 2)
        for axiom in ('cft0', 'cft1', 'cfts', 'cft2', 'cft3', 'cft4'):
            self.assertFalse(decide(s, axiom).holds, axiom)
        self.assertEqual(classify(s).violated_implications(), [])

    def test_indiscrete_every_decider(self):
        s = indiscrete(2, 2)
        for axiom in ('cft0', 'cft1', 'cfts', 'cft2', 'cf_urysohn', 'cft3', 'cft4'):
            self.assertIs(decide(s, axiom).holds, False, axiom)
        # 非零集合的闭包都是 1̲，三条公理的前提无法满足
        for axiom in ('cf_regular', 'cf_regular_mashhour', 'cf_normal'):
            self.assertIs(decide(s, axiom).holds, True, axiom)
        for axiom, slow in NAIVE_TWINS:
            self.assertEqual(decide(s, axiom).holds, slow(s).holds, axiom)

    def test_reduced_deciders_report_failures(self):
        failing = {
            'cft2': indiscrete(2, 2),
            'cf_urysohn': indiscrete(2, 2),
            'cf_regular': shift_cycle(3, 1),
            'cf_regular_mashhour': shift_cycle(3, 1),
            'cf_normal': subspace(apex_normal(1), ['a', 'b', 'c']),
        }
        for axiom, s in failing.items():
            verdict = decide(s, axiom)
            self.assertIs(verdict.holds, False, axiom)
            self.assertTrue(naive.replay(s, verdict), axiom)

    def test_reduced_matches_naive(self):
        for s in small_spaces():
            for axiom, slow in NAIVE_TWINS:
                fast = decide(s, axiom)
                self.assertEqual(fast.holds, slow(s).holds, f"{axiom} on {s}")
                if not fast.holds:
                    self.assertTrue(naive.replay(s, fast), f"{axiom} replay on {s}")

    def test_cft1_definitions_agree(self):
        for s in small_spaces():
            self.assertEqual(decide(s, 'cft1').holds, naive.cft1_pairwise(s).holds)
            self.assertEqual(decide(s, 'cft1').holds, cft1_interior_characterization(s).holds)
            self.assertEqual(decide(s, 'cft0').holds, cft0_interior_characterization(s).holds)

    def test_replay(self):
        s = cycle3_xyz()
        verdict = decide(s, 'cft1')
        self.assertFalse(verdict.holds)
        self.assertTrue(naive.replay(s, verdict))
        self.assertFalse(naive.replay(s, decide(s, 'cft0')))

    def test_certificates(self):
        s = discrete(2, 1)
        verdict = cft2(s, certify=True)
        self.assertTrue(verdict.holds)
        self.assertEqual(len(verdict.certificates), 1)
        certificate = verdict.certificates[0]
        x = certificate['x'].as_set(s.universe, s.chain)
        self.assertTrue(leq(x, s.interior(certificate['f'])))
        interior = cft0_interior_characterization(s, certify=True)
        self.assertEqual(len(interior.certificates), 1)

    def test_unknown_axiom(self):
        with self.assertRaises(ValueError):
            decide(discrete(2, 1), 'cft5')

    def test_cross_check(self):
        s = discrete(2, 1)
        with patch.dict(os.environ, {'FCS_CROSS_CHECK': '1'}):
            self.assertTrue(decide(s, 'cft2').holds)
            with patch('fcs.separation.naive.cft2_naive', return_value=Verdict.fail('cft2')):
                with self.assertRaises(DeciderInconsistencyError):
                    decide(s, 'cft2')

    def test_classify_rejects_broken_implications(self):
        with patch.dict(DECIDERS, {'cft0': lambda s: Verdict.fail('cft0')}):
            with self.assertRaises(DeciderInconsistencyError):
                classify(discrete(2, 1))

    def test_verdict_to_dict(self):
        verdict = Verdict.fail('cft0', x=FuzzyPoint('x', '1/2'))
        self.assertEqual(verdict.to_dict(), {'axiom': 'cft0', 'holds': False, 'witness': {'x': {'x': '1/2'}}})
        self.assertFalse(verdict)
        self.assertTrue(Verdict.ok('cft0'))


if __name__ == '__main__':
    main()
