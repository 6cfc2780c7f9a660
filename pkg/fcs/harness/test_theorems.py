#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import itertools
import random
from unittest import TestCase, main
from unittest.mock import patch

from fcs.corpus.examples import discrete, indiscrete, pqr_interior, cycle3_xyz, shift_cycle, two_block_normal, \
    apex_normal
from fcs.harness.enumeration import enumerate_fg_spaces
from fcs.harness.theorems import THEOREMS, KIND_SPACE, KIND_PAIR, KIND_FAMILY, get_theorem, select_theorems, \
    finite_t1_is_t2, product_closure_oracles, coarsest_product, hereditary, _factor_pairs
from fcs.separation.deciders import DECIDERS
from fcs.separation.verdict import Verdict


def small_spaces():
    return list(enumerate_fg_spaces(2, 1)) + [
        indiscrete(2, 2), pqr_interior(1), cycle3_xyz(1), shift_cycle(3, 1), two_block_normal(3, 1),
        apex_normal(1)]


class TestTheorems(TestCase):
    def test_space_theorems(self):
        spaces = small_spaces()
        for theorem in THEOREMS.values():
            if theorem.kind != KIND_SPACE:
                continue
            for s in spaces:
                self.assertIsNone(theorem.check(s), f"{theorem.theorem_id} on {s}")

    def test_pair_theorems(self):
        spaces = list(enumerate_fg_spaces(2, 1))
        for theorem in THEOREMS.values():
            if theorem.kind != KIND_PAIR:
                continue
            for k, (s1, s2) in enumerate(itertools.product(spaces, repeat=2)):
                self.assertIsNone(theorem.check(s1, s2, random.Random(k)), f"{theorem.theorem_id} #{k}")

    def test_family_theorems(self):
        spaces = list(enumerate_fg_spaces(2, 1))
        for theorem in THEOREMS.values():
            if theorem.kind == KIND_FAMILY:
                self.assertIsNone(theorem.check(spaces), theorem.theorem_id)

    def test_product_closure_oracles(self):
        self.assertIsNone(product_closure_oracles(random.Random(0), 16))

    def test_coarsest_product(self):
        self.assertIsNone(coarsest_product(random.Random(0), 3))

    def test_factor_pair_samples(self):
        self.assertEqual(len(_factor_pairs(random.Random(0), 5)), 5)
        self.assertEqual(len(_factor_pairs(random.Random(0), 50)), 16)

    def test_normal_only_inherited_by_closed_subspaces(self):
        s = apex_normal(1)
        self.assertIsNone(hereditary(s))
        with patch('fcs.harness.theorems.CLOSED_HEREDITARY_AXIOMS', ()), \
                patch('fcs.harness.theorems.HEREDITARY_AXIOMS', ('cf_normal',)):
            witness = hereditary(s)
        self.assertEqual(witness['axiom'], 'cf_normal')

    def test_registry(self):
        self.assertEqual(get_theorem('finite_t1_t2').check, finite_t1_is_t2)
        self.assertEqual([t.theorem_id for t in select_theorems(['hereditary', 'sum_theorems'])],
                         ['hereditary', 'sum_theorems'])
        self.assertEqual(len(select_theorems(None)), len(THEOREMS))
        with self.assertRaises(ValueError):
            get_theorem('no_such_theorem')

    def test_broken_decider_is_reported(self):
        s = discrete(2, 1)
        with patch.dict(DECIDERS, {'cft2': lambda space: Verdict.fail('cft2')}):
            witness = finite_t1_is_t2(s)
        self.assertIsNotNone(witness)
        self.assertEqual(witness['axiom'], 'cft2')
        self.assertEqual(witness['spaces'], [s])
        self.assertIsNone(finite_t1_is_t2(s))


if __name__ == '__main__':
    main()
