import argparse
import traceback
from typing import List, Optional

from fcs.cmd.func.base import EXIT_INPUT_ERROR, EXIT_BUDGET_EXCEEDED
from fcs.cmd.func.construct import SumFunc, ProductFunc
from fcs.cmd.func.harness import SuiteFunc, SearchFunc, ExampleFunc, CheckConfigFunc
from fcs.cmd.func.maps import ContinuityFunc, HomeoFunc
from fcs.cmd.func.space import ValidateFunc, ClosureFunc, InteriorFunc, ClassifyFunc, TopologyFunc, SubspaceFunc
from fcs.utils.errors import BudgetExceededError, DocumentError, StructuralError
from fcs.utils.log import logger

COMMANDS = {func.name: func for func in (
    ValidateFunc, ClosureFunc, InteriorFunc, ClassifyFunc, TopologyFunc, ContinuityFunc, HomeoFunc,
    SumFunc, ProductFunc, SubspaceFunc, SuiteFunc, SearchFunc, ExampleFunc, CheckConfigFunc,
)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='fcs', description='Čech 模糊闭包空间计算工具')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, func in COMMANDS.items():
        func.add_arguments(subparsers.add_parser(name, help=func.help))
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command](args)
    try:
        return func.process()
    except (DocumentError, StructuralError) as e:
        logger.error(f"输入错误: {e}")
        return EXIT_INPUT_ERROR
    except BudgetExceededError as e:
        logger.error(f"超出预算: {e}")
        return EXIT_BUDGET_EXCEEDED
    except Exception as e:
        logger.error(f"执行 {args.command} 时出现未知错误: {e}\n{traceback.format_exc()}")
        return EXIT_INPUT_ERROR
