"""
单个空间上的子命令：validate、closure、interior、classify、topology、subspace。
"""
import argparse

from fcs.cmd.func.base import BaseFunc, EXIT_OK, EXIT_PROPERTY_FAILS
from fcs.harness.document import load_space, parse_set_expression, set_to_document
from fcs.separation.report import REPORT_AXIOMS, LABELS, classify
from fcs.separation.verdict import describe
from fcs.space.closure_space import associated_topology, is_idempotent
from fcs.space.constructions import subspace
from fcs.space.fuzzy_topology import FT_AXIOMS, ft_axiom, validate_chang
from fcs.utils.errors import SpaceValidationError
from fcs.utils.reporter import render_report


class ValidateFunc(BaseFunc):
    name = 'validate'
    help = '校验空间文档是否满足 ČF 闭包公理'

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('file')

    def process(self) -> int:
        try:
            s = load_space(self.args.file)
        except SpaceValidationError as e:
            self.emit({'valid': False, 'violations': [
                {'axiom': v.axiom, 'witnesses': describe(list(v.witnesses))} for v in e.report.violations]})
            return EXIT_PROPERTY_FAILS
        self.emit({'valid': True, 'kind': s.operator.kind, 'universe': list(s.universe.elements),
                   'denominator': s.chain.denominator, 'idempotent': is_idempotent(s)})
        return EXIT_OK


class _SetFunc(BaseFunc):
    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('file')
        parser.add_argument('--set', required=True, dest='expr', help='如 "x:1/2,y:1"，或 0、1')


class ClosureFunc(_SetFunc):
    name = 'closure'
    help = '计算 c(f)'

    def process(self) -> int:
        s = load_space(self.args.file)
        f = parse_set_expression(s, self.args.expr)
        self.emit({'set': set_to_document(f), 'closure': set_to_document(s.closure(f)), 'closed': s.is_closed(f)})
        return EXIT_OK


class InteriorFunc(_SetFunc):
    name = 'interior'
    help = '计算 int(f) = Co(c(Co f))'

    def process(self) -> int:
        s = load_space(self.args.file)
        f = parse_set_expression(s, self.args.expr)
        self.emit({'set': set_to_document(f), 'interior': set_to_document(s.interior(f)), 'open': s.is_open(f)})
        return EXIT_OK


class ClassifyFunc(BaseFunc):
    name = 'classify'
    help = '判定全部 ČF 分离公理'

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('file')
        parser.add_argument('--format', choices=['json', 'markdown'], default='json')

    def process(self) -> int:
        s = load_space(self.args.file)
        report = classify(s)
        if self.args.format == 'markdown':
            rows = []
            for axiom in REPORT_AXIOMS:
                verdict = report[axiom]
                rows.append({'label': LABELS[axiom], 'holds': verdict.holds,
                             'witness': verdict.to_dict().get('witness')})
            self.emit(render_report('classify_report', title=self.args.file, universe=list(s.universe.elements),
                                    denominator=s.chain.denominator, kind=s.operator.kind, rows=rows))
        else:
            self.emit(report.to_dict())
        return EXIT_OK


class TopologyFunc(BaseFunc):
    name = 'topology'
    help = '输出关联模糊拓扑 τ(c) 及其 FT 分离公理'

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('file')

    def process(self) -> int:
        s = load_space(self.args.file)
        t = associated_topology(s)
        self.emit({
            'chang': validate_chang(t).passed,
            'opens': [set_to_document(f) for f in t.opens],
            'axioms': {which: ft_axiom(t, which).holds for which in FT_AXIOMS},
        })
        return EXIT_OK


class SubspaceFunc(BaseFunc):
    name = 'subspace'
    help = '取子空间 (A, c_A)'

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('file')
        parser.add_argument('--elements', required=True, help='逗号分隔的元素名')
        parser.add_argument('--output')

    def process(self) -> int:
        s = load_space(self.args.file)
        elements = [e.strip() for e in self.args.elements.split(',') if e.strip()]
        self.emit_object(subspace(s, elements), self.args.output)
        return EXIT_OK
