"""
套件、反例搜索、例子与配置检查子命令。
"""
import argparse
import json
import os

from fcs.cmd.func.base import BaseFunc, EXIT_OK, EXIT_PROPERTY_FAILS
from fcs.corpus.examples import EXAMPLES, build_example
from fcs.harness.search import PROPERTIES, search_counterexample
from fcs.harness.suite import SUITE_CONFIG_FILE, DEFAULT_COUNTEREXAMPLE_DIR, SuiteConfig, run_theorem_suite
from fcs.harness.theorems import THEOREMS
from fcs.utils.config_checker import check_config
from fcs.utils.log import logger


def _write(path: str, text: str):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)


def _theorem_samples(text: str):
    """解析 THEOREM=N"""
    name, _, value = text.partition('=')
    if name not in THEOREMS or not value.isdigit() or int(value) < 1:
        raise argparse.ArgumentTypeError(f"无效的定理样本量: {text}")
    return name, int(value)


class SuiteFunc(BaseFunc):
    name = 'suite'
    help = '在穷举层与随机层上检查全部定理'

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('--config', default=SUITE_CONFIG_FILE)
        parser.add_argument('--exhaustive-n', type=int)
        parser.add_argument('--exhaustive-d', type=int)
        parser.add_argument('--random-n', type=int)
        parser.add_argument('--random-d', type=int)
        parser.add_argument('--samples', type=int)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--pair-samples', type=int)
        parser.add_argument('--theorem-samples', action='append', type=_theorem_samples, metavar='THEOREM=N',
                            help='按定理覆盖样本量，可重复')
        parser.add_argument('--theorem', action='append', choices=sorted(THEOREMS), dest='theorems')
        parser.add_argument('--workers', type=int)
        parser.add_argument('--report', help='JSON 报告输出路径，缺省写到 stdout')
        parser.add_argument('--markdown', help='markdown 报告输出路径')
        parser.add_argument('--timing', help='耗时旁路文件（JSON），不写进报告')
        parser.add_argument('--progress', action='store_true')

    def process(self) -> int:
        args = self.args
        cfg = SuiteConfig.load(args.config, exhaustive_n=args.exhaustive_n, exhaustive_d=args.exhaustive_d,
                               random_n=args.random_n, random_d=args.random_d, samples=args.samples,
                               seed=args.seed, pair_samples=args.pair_samples,
                               theorem_samples=dict(args.theorem_samples or []), theorems=args.theorems,
                               workers=args.workers, progress=args.progress)
        report = run_theorem_suite(cfg)
        logger.info("\n" + report.summary_frame().to_string(index=False))
        if args.report:
            _write(args.report, report.to_json())
        else:
            self.emit(report.to_json())
        if args.markdown:
            _write(args.markdown, report.to_markdown())
        if args.timing:
            _write(args.timing, json.dumps(report.timing(), indent=2) + "\n")
        return self.exit_code(report.passed)


class SearchFunc(BaseFunc):
    name = 'search'
    help = '在有限生成空间中搜索非蕴含的反例'

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('--property', required=True, choices=sorted(PROPERTIES), dest='property_id')
        parser.add_argument('--max-n', type=int, default=3)
        parser.add_argument('--max-d', type=int, default=2)
        parser.add_argument('--workers', type=int)
        parser.add_argument('--output', help='反例文档输出路径')

    def process(self) -> int:
        args = self.args
        result = search_counterexample(args.property_id, args.max_n, args.max_d, args.workers,
                                       output_dir=os.getenv('FCS_COUNTEREXAMPLE_DIR', DEFAULT_COUNTEREXAMPLE_DIR))
        data = result.to_dict()
        if result.found:
            if args.output:
                _write(args.output, result.document)
                data['written'] = args.output
            else:
                data['document'] = json.loads(result.document)
        self.emit(data)
        # 找到反例为成功，范围内穷尽为 1
        return EXIT_OK if result.found else EXIT_PROPERTY_FAILS


class ExampleFunc(BaseFunc):
    name = 'example'
    help = '输出内置例子的文档'

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument('--name', choices=sorted(EXAMPLES))
        parser.add_argument('--n', type=int)
        parser.add_argument('--d', type=int)
        parser.add_argument('--output')
        parser.add_argument('--list', action='store_true', help='列出全部例子')

    def process(self) -> int:
        if self.args.list or not self.args.name:
            self.emit(sorted(EXAMPLES))
            return EXIT_OK
        self.emit_object(build_example(self.args.name, self.args.n, self.args.d), self.args.output)
        return EXIT_OK


class CheckConfigFunc(BaseFunc):
    name = 'check-config'
    help = '检查环境变量配置'

    def process(self) -> int:
        return self.exit_code(check_config())
