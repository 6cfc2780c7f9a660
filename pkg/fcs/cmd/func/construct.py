import argparse

from fcs.cmd.func.base import BaseFunc, EXIT_OK
from fcs.harness.document import load_space
from fcs.space.constructions import disjoint_sum, product


class _ConstructFunc(BaseFunc):
    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('files', nargs='+')
        parser.add_argument('--output')

    def build(self, spaces):
        raise NotImplementedError

    def process(self) -> int:
        spaces = [load_space(path) for path in self.args.files]
        self.emit_object(self.build(spaces), self.args.output)
        return EXIT_OK


class SumFunc(_ConstructFunc):
    name = 'sum'
    help = '不交和 ⊕(X_t, c_t)，各分量论域不能重叠'

    def build(self, spaces):
        return disjoint_sum(spaces)


class ProductFunc(_ConstructFunc):
    name = 'product'
    help = '有限积 ⊗(X_t, c_t)'

    def build(self, spaces):
        return product(spaces)
