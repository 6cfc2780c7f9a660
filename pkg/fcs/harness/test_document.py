#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import json
import os
import tempfile
from unittest import TestCase, main

from fcs.corpus.examples import cycle3_xyz, cycle4_rotation, cycle4_reflection, indiscrete, shift_cycle, \
    pqr_interior, discrete
from fcs.harness.document import parse_space, serialize_space, parse_map, serialize_map, load_space, load_map, \
    save, load, parse_set_expression, space_to_document
from fcs.lattice.chain_lattice import Chain, Universe, FuzzyPoint
from fcs.space.closure_space import FuzzyClosureSpace
from fcs.space.constructions import product
from fcs.space.fuzzy_maps import SpaceMap
from fcs.utils.errors import DocumentError, SpaceValidationError

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), '..', '..', 'fixtures')


def fixture(name: str) -> str:
    with open(os.path.join(FIXTURES_DIR, name), 'r', encoding='utf-8') as f:
        return f.read()


class TestSpaceDocument(TestCase):
    def test_fixture_round_trip(self):
        for name in ('cycle3_xyz.json', 'shift_cycle_3.json', 'indiscrete.json'):
            text = fixture(name)
            self.assertEqual(serialize_space(parse_space(text)), text, name)
        for name in ('cycle4_rotation.json', 'cycle4_reflection.json'):
            text = fixture(name)
            self.assertEqual(serialize_map(parse_map(text)), text, name)

    def test_corpus_serializes_to_fixtures(self):
        self.assertEqual(serialize_space(cycle3_xyz()), fixture('cycle3_xyz.json'))
        self.assertEqual(serialize_space(shift_cycle(3, 2)), fixture('shift_cycle_3.json'))
        self.assertEqual(serialize_space(indiscrete()), fixture('indiscrete.json'))
        self.assertEqual(serialize_map(cycle4_rotation()), fixture('cycle4_rotation.json'))
        self.assertEqual(serialize_map(cycle4_reflection()), fixture('cycle4_reflection.json'))

    def test_parse_cycle3(self):
        s = parse_space(fixture('cycle3_xyz.json'))
        for value in ('1/2', '1'):
            self.assertEqual(s.point_closure(FuzzyPoint('x', value)), s.crisp(['x', 'y']))

    def test_table_canonicalization(self):
        s = pqr_interior(1)
        text = serialize_space(s)
        self.assertEqual(json.loads(text)['operator']['kind'], 'table')
        parsed = parse_space(text)
        for f in s.sets():
            self.assertEqual(parsed.closure(f), s.closure(f))
        self.assertEqual(serialize_space(parsed), text)

    def test_derived_spaces_compile(self):
        factor = discrete(2, 1)
        p = product([factor, factor])
        self.assertEqual(space_to_document(p)['operator']['kind'], 'finitely_generated')
        parsed = parse_space(serialize_space(p))
        self.assertEqual(list(parsed.universe), list(p.universe))
        for f in p.sets():
            g = parsed.fuzzy_set(f.to_mapping())
            self.assertEqual(parsed.closure(g).to_mapping(), p.closure(f).to_mapping())

    def test_membership_out_of_range(self):
        data = json.loads(fixture('cycle3_xyz.json'))
        data['operator']['entries']['x']['1']['x'] = '5/4'
        with self.assertRaises(DocumentError):
            parse_space(json.dumps(data))

    def test_duplicate_level_rejected(self):
        levels = {'1/4': {'a': '1/4'}, '1/2': {'a': '1/2'}, '2/4': {'a': '1'}, '3/4': {'a': '3/4'}, '1': {'a': '1'}}
        text = json.dumps({'format': 1, 'universe': ['a'], 'denominator': 4,
                           'operator': {'kind': 'finitely_generated', 'entries': {'a': levels}}})
        with self.assertRaises(DocumentError) as ctx:
            parse_space(text)
        self.assertIn('2/4', str(ctx.exception))

    def test_syntax_error_position(self):
        with self.assertRaises(DocumentError) as ctx:
            parse_space('{\n  "format": 1,\n')
        self.assertIsNotNone(ctx.exception.line)

    def test_schema_error(self):
        with self.assertRaises(DocumentError):
            parse_space(json.dumps({'format': 1, 'universe': ['a'], 'denominator': 1}))
        with self.assertRaises(DocumentError):
            parse_space(json.dumps({'format': 2, 'universe': ['a'], 'denominator': 1,
                                    'operator': {'kind': 'named', 'name': 'discrete'}}))

    def test_validation_failure(self):
        text = json.dumps({'format': 1, 'universe': ['a'], 'denominator': 1,
                           'operator': {'kind': 'finitely_generated', 'entries': {'a': {'1': {}}}}})
        with self.assertRaises(SpaceValidationError) as ctx:
            parse_space(text)
        self.assertIn('ii', ctx.exception.report.axioms())

    def test_map_with_target(self):
        source = discrete(2, 1)
        target = FuzzyClosureSpace.indiscrete(Universe(['c']), Chain(1))
        m = SpaceMap(source, target, {'a': 'c', 'b': 'c'})
        text = serialize_map(m)
        self.assertIn('target', json.loads(text))
        parsed = parse_map(text)
        self.assertEqual(parsed.ground, {'a': 'c', 'b': 'c'})
        self.assertEqual(parsed.target.universe.elements, ('c',))
        self.assertEqual(serialize_map(parsed), text)

    def test_map_errors(self):
        with self.assertRaises(DocumentError):
            parse_map(fixture('cycle3_xyz.json'))
        data = json.loads(fixture('cycle4_rotation.json'))
        data['map']['p'] = 'w'
        with self.assertRaises(DocumentError):
            parse_map(json.dumps(data))

    def test_set_expression(self):
        s = cycle3_xyz()
        self.assertEqual(parse_set_expression(s, 'x:1/2, y:1'), s.fuzzy_set({'x': '1/2', 'y': '1'}))
        self.assertEqual(parse_set_expression(s, '0'), s.zero())
        self.assertEqual(parse_set_expression(s, '1'), s.one())
        with self.assertRaises(DocumentError):
            parse_set_expression(s, 'x')
        with self.assertRaises(DocumentError):
            parse_set_expression(s, 'w:1')
        with self.assertRaises(DocumentError):
            parse_set_expression(s, 'x:1/3')

    def test_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'nested', 'cycle3.json')
            save(cycle3_xyz(), path)
            self.assertEqual(load(path), fixture('cycle3_xyz.json'))
            self.assertEqual(load_space(path).universe.elements, ('x', 'y', 'z'))
            map_path = os.path.join(tmp, 'rotation.json')
            save(cycle4_rotation(), map_path)
            self.assertEqual(load_map(map_path).ground['p'], 'q')
            with self.assertRaises(DocumentError):
                load(os.path.join(tmp, 'missing.json'))


if __name__ == '__main__':
    main()
