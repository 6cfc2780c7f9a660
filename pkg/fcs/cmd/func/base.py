import abc
import argparse
import json
import sys
from abc import abstractmethod
from typing import Any

from fcs.harness.document import save, serialize_map, serialize_space
from fcs.space.fuzzy_maps import SpaceMap

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3


class BaseFunc(abc.ABC):
    """
    命令行子命令的基础类：add_arguments 声明参数，process 执行并返回退出码。
    结果以 JSON（或 markdown）写到 stdout，日志走 stderr。
    """
    name: str = ''
    help: str = ''

    def __init__(self, args: argparse.Namespace):
        self.args = args

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        pass

    def emit(self, data: Any):
        if isinstance(data, str):
            sys.stdout.write(data if data.endswith("\n") else data + "\n")
        else:
            sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")

    def emit_object(self, obj, output: str = None):
        """空间或映射：给了 --output 就写文件，否则把文档写到 stdout"""
        if output:
            save(obj, output)
            self.emit({'written': output})
        else:
            self.emit(serialize_map(obj) if isinstance(obj, SpaceMap) else serialize_space(obj))

    @staticmethod
    def exit_code(holds: bool) -> int:
        return EXIT_OK if holds else EXIT_PROPERTY_FAILS

    @abstractmethod
    def process(self) -> int:
        """
        处理逻辑的入口方法，子类需要实现具体的处理逻辑。
        """
        raise NotImplementedError
