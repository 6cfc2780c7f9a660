"""
有理数链上的模糊集格。

隶属度取值于链 {0, 1/D, ..., 1}，内部用整数刻度 k 表示 k/D，
对外一律以 fractions.Fraction 暴露，不使用浮点数。
"""
import itertools
import os
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Union

from fcs.utils.errors import BudgetExceededError, StructuralError

LevelLike = Union[Fraction, int, str]

DEFAULT_MAX_CARRIER = 200000


def max_carrier() -> int:
    return int(os.getenv('FCS_MAX_CARRIER', DEFAULT_MAX_CARRIER))


def parse_level(value: LevelLike) -> Fraction:
    """把 "3/4"、"1"、Fraction 或 int 转成 Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise StructuralError(f"非法的隶属度: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise StructuralError(f"非法的隶属度: {value!r}")
    raise StructuralError(f"非法的隶属度类型: {type(value).__name__}")


def format_level(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Chain:
    """分母为 D 的有限链 {k/D : 0 <= k <= D}"""

    __slots__ = ('denominator',)

    def __init__(self, denominator: int):
        if not isinstance(denominator, int) or isinstance(denominator, bool) or denominator < 1:
            raise StructuralError(f"链的分母必须是正整数: {denominator!r}")
        self.denominator = denominator

    def level(self, grade: int) -> Fraction:
        return Fraction(grade, self.denominator)

    def grade(self, value: LevelLike) -> int:
        """把隶属度换算成整数刻度，值不在链上时抛 StructuralError"""
        value = parse_level(value)
        if value < 0 or value > 1:
            raise StructuralError(f"隶属度 {format_level(value)} 超出 [0,1]")
        scaled = value * self.denominator
        if scaled.denominator != 1:
            raise StructuralError(f"隶属度 {format_level(value)} 不在链 D={self.denominator} 上")
        return scaled.numerator

    def levels(self) -> List[Fraction]:
        return [self.level(k) for k in range(self.denominator + 1)]

    def positive_grades(self) -> range:
        return range(1, self.denominator + 1)

    def __eq__(self, other):
        return isinstance(other, Chain) and other.denominator == self.denominator

    def __hash__(self):
        return hash(('Chain', self.denominator))

    def __repr__(self):
        return f"Chain(D={self.denominator})"


class Universe:
    """有序、无重复的有限论域"""

    __slots__ = ('elements', '_positions')

    def __init__(self, elements: Iterable[str]):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise StructuralError("论域不能为空")
        positions = {}
        for i, e in enumerate(elements):
            if e in positions:
                raise StructuralError(f"论域中存在重复元素: {e}")
            positions[e] = i
        self.elements = elements
        self._positions = positions

    def position(self, element: str) -> int:
        try:
            return self._positions[element]
        except KeyError:
            raise StructuralError(f"未知元素: {element}")

    def __contains__(self, element) -> bool:
        return element in self._positions

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Universe) and other.elements == self.elements

    def __hash__(self):
        return hash(('Universe', self.elements))

    def __repr__(self):
        return f"Universe({', '.join(self.elements)})"


class FuzzyPoint:
    """
    模糊点 x_λ：支撑 x，取值 λ ∈ (0,1]。λ = 1 时即单点集 x_1。
    """

    __slots__ = ('support', 'value')

    def __init__(self, support: str, value: LevelLike):
        value = parse_level(value)
        if value <= 0 or value > 1:
            raise StructuralError(f"模糊点取值必须在 (0,1] 内: {support}_{format_level(value)}")
        self.support = support
        self.value = value

    def as_set(self, universe: Universe, chain: Chain) -> 'FuzzySet':
        grades = [0] * len(universe)
        grades[universe.position(self.support)] = chain.grade(self.value)
        return FuzzySet(universe, chain, grades)

    def __eq__(self, other):
        return isinstance(other, FuzzyPoint) and (self.support, self.value) == (other.support, other.value)

    def __hash__(self):
        return hash((self.support, self.value))

    def __repr__(self):
        return f"{self.support}_{format_level(self.value)}"


class FuzzySet:
    """
    论域上的模糊集，隶属度以整数刻度元组保存，不可变、可哈希。
    """

    __slots__ = ('universe', 'chain', 'grades')

    def __init__(self, universe: Universe, chain: Chain, grades: Sequence[int]):
        grades = tuple(grades)
        if len(grades) != len(universe):
            raise StructuralError(f"隶属度个数 {len(grades)} 与论域大小 {len(universe)} 不一致")
        for k in grades:
            if k < 0 or k > chain.denominator:
                raise StructuralError(f"刻度 {k} 不在链 D={chain.denominator} 上")
        self.universe = universe
        self.chain = chain
        self.grades = grades

    @classmethod
    def zero(cls, universe: Universe, chain: Chain) -> 'FuzzySet':
        return cls(universe, chain, [0] * len(universe))

    @classmethod
    def one(cls, universe: Universe, chain: Chain) -> 'FuzzySet':
        return cls(universe, chain, [chain.denominator] * len(universe))

    @classmethod
    def crisp(cls, universe: Universe, chain: Chain, elements: Iterable[str]) -> 'FuzzySet':
        """特征函数 1_A"""
        grades = [0] * len(universe)
        for e in elements:
            grades[universe.position(e)] = chain.denominator
        return cls(universe, chain, grades)

    @classmethod
    def from_mapping(cls, universe: Universe, chain: Chain, memberships: Mapping[str, LevelLike]) -> 'FuzzySet':
        """未出现的元素隶属度为 0"""
        grades = [0] * len(universe)
        for e, value in memberships.items():
            grades[universe.position(e)] = chain.grade(value)
        return cls(universe, chain, grades)

    def value(self, element: str) -> Fraction:
        return self.chain.level(self.grades[self.universe.position(element)])

    def grade(self, element: str) -> int:
        return self.grades[self.universe.position(element)]

    def to_mapping(self, include_zero: bool = False) -> Dict[str, Fraction]:
        return {e: self.chain.level(k) for e, k in zip(self.universe.elements, self.grades) if include_zero or k}

    def is_zero(self) -> bool:
        return not any(self.grades)

    def is_one(self) -> bool:
        return all(k == self.chain.denominator for k in self.grades)

    def __or__(self, other: 'FuzzySet') -> 'FuzzySet':
        return join(self, other)

    def __and__(self, other: 'FuzzySet') -> 'FuzzySet':
        return meet(self, other)

    def __invert__(self) -> 'FuzzySet':
        return complement(self)

    def __le__(self, other: 'FuzzySet') -> bool:
        return leq(self, other)

    def __ge__(self, other: 'FuzzySet') -> bool:
        return leq(other, self)

    def __eq__(self, other):
        return (isinstance(other, FuzzySet) and other.grades == self.grades
                and other.universe == self.universe and other.chain == self.chain)

    def __hash__(self):
        return hash(self.grades)

    def __repr__(self):
        if self.is_zero():
            return "0̲"
        if self.is_one():
            return "1̲"
        parts = [f"{e}:{format_level(v)}" for e, v in self.to_mapping().items()]
        return "{" + ", ".join(parts) + "}"


def check_compatible(f: FuzzySet, g: FuzzySet):
    if f.universe != g.universe:
        raise StructuralError(f"论域不一致: {f.universe} vs {g.universe}")
    if f.chain != g.chain:
        raise StructuralError(f"链不一致: {f.chain} vs {g.chain}")


def join(f: FuzzySet, g: FuzzySet) -> FuzzySet:
    check_compatible(f, g)
    return FuzzySet(f.universe, f.chain, [a if a >= b else b for a, b in zip(f.grades, g.grades)])


def meet(f: FuzzySet, g: FuzzySet) -> FuzzySet:
    check_compatible(f, g)
    return FuzzySet(f.universe, f.chain, [a if a <= b else b for a, b in zip(f.grades, g.grades)])


def join_all(universe: Universe, chain: Chain, sets: Iterable[FuzzySet]) -> FuzzySet:
    """任意有限族的并，空族的并为 0̲"""
    grades = [0] * len(universe)
    for f in sets:
        for i, k in enumerate(f.grades):
            if k > grades[i]:
                grades[i] = k
    return FuzzySet(universe, chain, grades)


def meet_all(universe: Universe, chain: Chain, sets: Iterable[FuzzySet]) -> FuzzySet:
    """空族的交为 1̲"""
    grades = [chain.denominator] * len(universe)
    for f in sets:
        for i, k in enumerate(f.grades):
            if k < grades[i]:
                grades[i] = k
    return FuzzySet(universe, chain, grades)


def complement(f: FuzzySet) -> FuzzySet:
    d = f.chain.denominator
    return FuzzySet(f.universe, f.chain, [d - k for k in f.grades])


def leq(f: FuzzySet, g: FuzzySet) -> bool:
    check_compatible(f, g)
    return all(a <= b for a, b in zip(f.grades, g.grades))


def membership(p: FuzzyPoint, f: FuzzySet) -> bool:
    """x_λ ∈ f 当且仅当 λ <= f(x)"""
    return p.value <= f.value(p.support)


def point_leq(p: FuzzyPoint, f: FuzzySet) -> bool:
    # 对模糊点而言 x_λ <= f 与 x_λ ∈ f 同义
    return membership(p, f)


def maximal_points(f: FuzzySet) -> List[FuzzyPoint]:
    """{x_{f(x)} : x ∈ supp f}，按论域顺序返回"""
    return [FuzzyPoint(e, f.chain.level(k)) for e, k in zip(f.universe.elements, f.grades) if k]


def support(f: FuzzySet) -> List[str]:
    return [e for e, k in zip(f.universe.elements, f.grades) if k]


def points(universe: Universe, chain: Chain) -> List[FuzzyPoint]:
    """链上所有模糊点，按论域顺序、再按取值升序"""
    return [FuzzyPoint(e, chain.level(k)) for e in universe for k in chain.positive_grades()]


def carrier_size(universe: Universe, chain: Chain) -> int:
    return (chain.denominator + 1) ** len(universe)


def check_budget(what: str, size: int, budget: int = None):
    budget = max_carrier() if budget is None else budget
    if size > budget:
        raise BudgetExceededError(what, size, budget)


def enumerate_sets(universe: Universe, chain: Chain) -> List[FuzzySet]:
    """
    按字典序枚举全部 (D+1)^|X| 个模糊集：论域第一个元素为最高位，刻度从 0 递增。
    结果是确定的，所有判定器的"最小见证"都以这个顺序为准。
    """
    size = carrier_size(universe, chain)
    check_budget(f"enumerate_sets |X|={len(universe)} D={chain.denominator}", size)
    return [FuzzySet(universe, chain, grades)
            for grades in itertools.product(range(chain.denominator + 1), repeat=len(universe))]


def sets_below(f: FuzzySet) -> List[FuzzySet]:
    """f 之下的全部模糊集，顺序与 enumerate_sets 一致"""
    ranges = [range(k + 1) for k in f.grades]
    return [FuzzySet(f.universe, f.chain, grades) for grades in itertools.product(*ranges)]


def set_index(f: FuzzySet) -> int:
    """f 在 enumerate_sets 中的序号"""
    base = f.chain.denominator + 1
    index = 0
    for k in f.grades:
        index = index * base + k
    return index


def embed_grades(f: FuzzySet, chain: Chain) -> FuzzySet:
    """把 f 嵌入到分母为其倍数的更细链上"""
    if chain.denominator % f.chain.denominator:
        raise StructuralError(f"{chain} 不是 {f.chain} 的细化")
    factor = chain.denominator // f.chain.denominator
    return FuzzySet(f.universe, chain, [k * factor for k in f.grades])


