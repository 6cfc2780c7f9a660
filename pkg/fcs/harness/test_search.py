#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import os
import tempfile
from unittest import TestCase, main
from unittest.mock import patch

from fcs.harness.document import parse_space, parse_map
from fcs.harness.search import search_counterexample, get_property, PROPERTIES, KIND_MAP
from fcs.separation.deciders import decide
from fcs.space.fuzzy_maps import is_cf_continuous, preimage_preserves_open
from fcs.utils.errors import BudgetExceededError


class TestSearch(TestCase):
    def test_regular_not_ts(self):
        result = search_counterexample('regular_not_ts', max_n=2, max_d=2, workers=1)
        self.assertTrue(result.found)
        self.assertEqual((result.n, result.d, result.index, result.examined), (1, 2, 1, 3))
        s = parse_space(result.document)
        self.assertTrue(decide(s, 'cf_regular').holds)
        self.assertFalse(decide(s, 'cfts').holds)

    def test_cft0_not_cft1(self):
        result = search_counterexample('cft0_not_cft1', max_n=3, max_d=1, workers=1)
        self.assertEqual((result.n, result.d, result.index, result.examined), (2, 1, 1, 3))
        s = parse_space(result.document)
        self.assertEqual(s.closure(s.crisp(['b'])), s.one())

    def test_cft1_not_cft2_exhausts(self):
        result = search_counterexample('cft1_not_cft2', max_n=2, max_d=2, workers=1)
        self.assertFalse(result.found)
        self.assertEqual(result.examined, 151)
        self.assertEqual(result.to_dict(), {'property': 'cft1_not_cft2', 'found': False, 'examined': 151})

    def test_cft0_not_tau_ft0(self):
        result = search_counterexample('cft0_not_tau_ft0', max_n=3, max_d=1, workers=1)
        self.assertTrue(result.found)
        self.assertEqual(result.n, 3)
        s = parse_space(result.document)
        self.assertTrue(decide(s, 'cft0').holds)

    def test_map_property(self):
        self.assertEqual(get_property('preimage_open_not_continuous').kind, KIND_MAP)
        with tempfile.TemporaryDirectory() as tmp:
            result = search_counterexample('preimage_open_not_continuous', max_n=1, max_d=1, workers=1,
                                           output_dir=tmp)
            self.assertTrue(result.found)
            self.assertEqual(result.n, 4)
            m = parse_map(result.document)
            self.assertTrue(preimage_preserves_open(m))
            self.assertFalse(is_cf_continuous(m).holds)
            self.assertEqual(os.listdir(tmp), ['search_preimage_open_not_continuous_0.json'])

    def test_parallel_matches_serial(self):
        serial = search_counterexample('normal_not_regular', max_n=2, max_d=2, workers=1)
        parallel = search_counterexample('normal_not_regular', max_n=2, max_d=2, workers=2)
        self.assertEqual(serial.to_dict(), parallel.to_dict())
        self.assertEqual(serial.document, parallel.document)

    def test_budget(self):
        with patch.dict('os.environ', {'FCS_MAX_CARRIER': '100'}):
            with self.assertRaises(BudgetExceededError):
                search_counterexample('cft1_not_cft2', max_n=2, max_d=2, workers=1)

    def test_unknown_property(self):
        self.assertIn('tau_normal_not_normal', PROPERTIES)
        with self.assertRaises(ValueError):
            get_property('no_such_property')


if __name__ == '__main__':
    main()
