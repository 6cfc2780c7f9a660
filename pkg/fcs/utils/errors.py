"""
项目统一的异常层次。

CLI 依据异常类型决定退出码：
  - DocumentError / StructuralError -> 2
  - BudgetExceededError -> 3
"""


class FcsError(Exception):
    """所有模糊闭包空间相关错误的基类"""


class StructuralError(FcsError, ValueError):
    """论域/链不一致、未知元素、空子空间、和空间论域重叠、链上不可表示的隶属度等"""


class BudgetExceededError(FcsError, RuntimeError):
    """枚举规模超过配置的预算"""

    def __init__(self, what: str, size: int, budget: int):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: 规模 {size} 超过预算 {budget}")


class DocumentError(FcsError, ValueError):
    """空间文档的语法或结构错误，尽量带上行列号"""

    def __init__(self, message: str, line: int = None, column: int = None):
        self.line = line
        self.column = column
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")


class SpaceValidationError(DocumentError):
    """文档解析成功，但算子不满足 ČF 闭包公理"""

    def __init__(self, report):
        self.report = report
        super().__init__(f"闭包算子校验失败: {report.summary()}")


class DeciderInconsistencyError(FcsError, AssertionError):
    """两个判定器对同一空间给出不同结论"""
