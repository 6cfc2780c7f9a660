import argparse

from fcs.cmd.func.base import BaseFunc
from fcs.harness.document import load_map
from fcs.space.fuzzy_maps import is_cf_continuous, is_cf_homeomorphism, preimage_preserves_open, \
    continuity_via_preimage


class _MapFunc(BaseFunc):
    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('file', help='映射文档：源空间加 map 块，可选 target')


class ContinuityFunc(_MapFunc):
    name = 'continuity'
    help = '判定映射是否 ČF 连续'

    def process(self) -> int:
        m = load_map(self.args.file)
        verdict = is_cf_continuous(m)
        self.emit({
            'continuous': verdict.to_dict(),
            'preimage_characterization': continuity_via_preimage(m).holds,
            'preimage_preserves_open': preimage_preserves_open(m),
        })
        return self.exit_code(verdict.holds)


class HomeoFunc(_MapFunc):
    name = 'homeo'
    help = '判定映射是否 ČF 同胚'

    def process(self) -> int:
        m = load_map(self.args.file)
        verdict = is_cf_homeomorphism(m)
        self.emit({'homeomorphism': verdict.to_dict(), 'bijective': m.is_bijective()})
        return self.exit_code(verdict.holds)
