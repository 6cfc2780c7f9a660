#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import json
import os
import tempfile
from unittest import TestCase, main
from unittest.mock import patch

from fcs.harness.document import parse_space
from fcs.harness.suite import SUITE_CONFIG_FILE, SuiteConfig, run_theorem_suite
from fcs.separation.deciders import DECIDERS
from fcs.separation.verdict import Verdict

THEOREM_IDS = ['interior_properties', 'implication_lattice', 'finite_t1_t2', 'map_characterizations',
               'coarseness_monotonicity']


def tiny_config(**overrides) -> SuiteConfig:
    values = dict(exhaustive_n=2, exhaustive_d=1, random_n=2, random_d=2, samples=6, seed=11, pair_samples=4,
                  theorem_samples={}, theorems=THEOREM_IDS, workers=1)
    values.update(overrides)
    return SuiteConfig(**values)


class TestSuite(TestCase):
    def test_passes_and_is_deterministic(self):
        first = run_theorem_suite(tiny_config())
        second = run_theorem_suite(tiny_config())
        self.assertTrue(first.passed)
        self.assertEqual(first.to_json(), second.to_json())
        data = json.loads(first.to_json())
        self.assertEqual(data['config']['seed'], 11)
        self.assertNotIn('workers', data['config'])
        # coarseness_monotonicity 只有穷举层
        self.assertEqual(len(data['results']), 2 * len(THEOREM_IDS) - 1)
        exhaustive = [r for r in data['results'] if r['theorem'] == 'interior_properties'
                      and r['tier'] == 'exhaustive']
        self.assertEqual(exhaustive[0]['checked'], 4)

    def test_parallel_matches_serial(self):
        serial = run_theorem_suite(tiny_config())
        parallel = run_theorem_suite(tiny_config(workers=2))
        self.assertEqual(serial.to_json(), parallel.to_json())

    def test_broken_decider_produces_counterexamples(self):
        with tempfile.TemporaryDirectory() as tmp:
            with patch.dict(DECIDERS, {'cft2': lambda space: Verdict.fail('cft2')}):
                report = run_theorem_suite(tiny_config(theorems=['finite_t1_t2'], counterexample_dir=tmp))
            self.assertFalse(report.passed)
            failure = report.failures[0]
            self.assertEqual(failure.theorem_id, 'finite_t1_t2')
            self.assertEqual(failure.checked, failure.witness['index'] + 1)
            self.assertEqual(failure.witness['axiom'], 'cft2')
            for document in failure.documents:
                self.assertTrue(parse_space(document).universe)
            written = sorted(os.listdir(tmp))
            self.assertIn(f"finite_t1_t2_{failure.tier}_0.json", written)
            data = json.loads(report.to_json())
            self.assertFalse(data['passed'])
            self.assertIn('documents', data['results'][0])

    def test_theorem_sample_sizes(self):
        cfg = tiny_config(theorems=['map_characterizations', 'sum_theorems', 'product_theorems'],
                          theorem_samples={'map_characterizations': 7, 'sum_theorems': 3})
        report = run_theorem_suite(cfg)
        self.assertTrue(report.passed)
        checked = {(r.theorem_id, r.tier): r.checked for r in report.results}
        self.assertEqual(checked[('map_characterizations', 'exhaustive')], 7)
        self.assertEqual(checked[('map_characterizations', 'random')], 7)
        # 3 个空间两两组合（含自身）
        self.assertEqual(checked[('sum_theorems', 'exhaustive')], 6)
        self.assertEqual(checked[('product_theorems', 'exhaustive')], 4)
        self.assertEqual(json.loads(report.to_json())['config']['theorem_samples'],
                         {'map_characterizations': 7, 'sum_theorems': 3})

    def test_default_sample_sizes(self):
        cfg = SuiteConfig()
        self.assertEqual(cfg.samples_for('map_characterizations'), 100)
        self.assertEqual(cfg.samples_for('homeomorphism_characterization'), 50)
        self.assertEqual(cfg.samples_for('sum_theorems'), 30)
        self.assertEqual(cfg.samples_for('product_theorems'), 50)
        self.assertEqual(cfg.samples_for('coarsest_product'), 16)
        self.assertEqual(cfg.samples_for('hereditary'), 30)
        loaded = SuiteConfig.load(SUITE_CONFIG_FILE, theorem_samples={'product_theorems': 5})
        self.assertEqual(loaded.samples_for('product_theorems'), 5)
        self.assertEqual(loaded.samples_for('map_characterizations'), 100)

    def test_summary_and_markdown(self):
        report = run_theorem_suite(tiny_config(theorems=['interior_properties']))
        frame = report.summary_frame()
        self.assertEqual(list(frame.columns), ['theorem', 'tier', 'checked', 'passed'])
        self.assertEqual(len(frame), 2)
        self.assertTrue(frame['passed'].all())
        markdown = report.to_markdown()
        self.assertIn('interior_properties', markdown)
        self.assertIn('elapsed_seconds', report.timing())

    def test_load_config(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'suite.yml')
            with open(path, 'w', encoding='utf-8') as f:
                f.write("suite:\n  exhaustive_n: 1\n  samples: 3\n  seed: 5\n")
            cfg = SuiteConfig.load(path, seed=9, samples=None)
            self.assertEqual(cfg.exhaustive_n, 1)
            self.assertEqual(cfg.samples, 3)
            self.assertEqual(cfg.seed, 9)
            self.assertEqual(cfg.exhaustive_d, 2)
            missing = SuiteConfig.load(os.path.join(tmp, 'missing.yml'))
            self.assertEqual(missing.to_dict(), SuiteConfig().to_dict())


if __name__ == '__main__':
    main()
