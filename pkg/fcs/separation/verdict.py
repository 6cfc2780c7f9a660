from typing import Any, Dict, List, Optional

from fcs.lattice.chain_lattice import FuzzyPoint, FuzzySet, format_level


class Verdict:
    """
    公理判定结果。
    holds 为 False 时 witness 给出枚举序下最小的反例，可用 replay 复核；
    certificates 只在调用方要求时收集，每个被量化的对象一条。
    """

    def __init__(self, axiom: str, holds: bool, witness: Optional[Dict[str, Any]] = None,
                 certificates: Optional[List[Dict[str, Any]]] = None):
        self.axiom = axiom
        self.holds = holds
        self.witness = witness
        self.certificates = certificates

    @classmethod
    def ok(cls, axiom: str, certificates: List[Dict[str, Any]] = None) -> 'Verdict':
        return cls(axiom, True, None, certificates)

    @classmethod
    def fail(cls, axiom: str, **witness) -> 'Verdict':
        return cls(axiom, False, witness)

    def __bool__(self):
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        result = {'axiom': self.axiom, 'holds': self.holds}
        if self.witness is not None:
            result['witness'] = {key: describe(value) for key, value in self.witness.items()}
        return result

    def __repr__(self):
        if self.holds:
            return f"Verdict({self.axiom}: holds)"
        return f"Verdict({self.axiom}: fails, witness={self.to_dict().get('witness')})"


def describe(value) -> Any:
    """把见证对象转成可序列化的形式"""
    if isinstance(value, FuzzySet):
        return {e: format_level(v) for e, v in value.to_mapping().items()}
    if isinstance(value, FuzzyPoint):
        return {value.support: format_level(value.value)}
    if isinstance(value, (list, tuple)):
        return [describe(v) for v in value]
    if isinstance(value, dict):
        return {key: describe(v) for key, v in value.items()}
    return value
