"""
Čech 模糊闭包空间：算子的三种表示、公理校验、内部/邻域演算。
"""
import abc
import os
from abc import abstractmethod
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from fcs.lattice.chain_lattice import Chain, Universe, FuzzySet, FuzzyPoint, complement, join, leq, \
    support, enumerate_sets, points, carrier_size, check_budget, join_all, format_level
from fcs.utils.errors import StructuralError, BudgetExceededError
from fcs.utils.log import logger

DEFAULT_TABLE_MAX_ENTRIES = 1000000

AXIOM_ZERO = 'i'
AXIOM_EXPANSIVE = 'ii'
AXIOM_ADDITIVE = 'iii'
AXIOM_LEVEL_MONOTONE = 'level-monotone'
AXIOM_GENERATION = 'generation'


class ClosureOperator(abc.ABC):
    """闭包算子的基类，子类只需实现 apply"""
    kind = None

    def __init__(self, universe: Universe, chain: Chain):
        self.universe = universe
        self.chain = chain

    @abstractmethod
    def apply(self, f: FuzzySet) -> FuzzySet:
        raise NotImplementedError

    def _check_argument(self, f: FuzzySet):
        if f.universe != self.universe or f.chain != self.chain:
            raise StructuralError(f"模糊集 {f} 不属于该空间")


class NamedOperator(ClosureOperator):
    """离散算子 d(f)=f 与不离散算子 i(f)=1̲ (f≠0̲)"""
    kind = 'named'
    NAMES = ('discrete', 'indiscrete')

    def __init__(self, universe: Universe, chain: Chain, name: str):
        super().__init__(universe, chain)
        if name not in self.NAMES:
            raise StructuralError(f"未知的命名算子: {name}")
        self.name = name

    def apply(self, f: FuzzySet) -> FuzzySet:
        self._check_argument(f)
        if self.name == 'discrete' or f.is_zero():
            return f
        return FuzzySet.one(self.universe, self.chain)


class TableOperator(ClosureOperator):
    """显式列出全部 (D+1)^|X| 个取值的算子"""
    kind = 'table'

    def __init__(self, universe: Universe, chain: Chain, table: Mapping[FuzzySet, FuzzySet]):
        super().__init__(universe, chain)
        size = carrier_size(universe, chain)
        budget = int(os.getenv('FCS_TABLE_MAX_ENTRIES', DEFAULT_TABLE_MAX_ENTRIES))
        if size > budget:
            raise BudgetExceededError(f"table operator |X|={len(universe)} D={chain.denominator}", size, budget)
        if len(table) != size:
            raise StructuralError(f"表算子不完整: {len(table)} 个条目，应为 {size}")
        for f, value in table.items():
            self._check_argument(f)
            self._check_argument(value)
        self.table = dict(table)

    def apply(self, f: FuzzySet) -> FuzzySet:
        self._check_argument(f)
        return self.table[f]


class FinitelyGeneratedOperator(ClosureOperator):
    """
    由模糊点闭包生成的算子：c(f) = ⋁ c(x_{f(x)})，x 取遍 supp f。
    entries 的键为 (元素, 整数刻度)，每个元素的每个正刻度都必须给出。
    """
    kind = 'finitely_generated'

    def __init__(self, universe: Universe, chain: Chain, entries: Mapping[Tuple[str, int], FuzzySet]):
        super().__init__(universe, chain)
        normalized = {}
        for element in universe:
            for k in chain.positive_grades():
                value = entries.get((element, k))
                if value is None:
                    raise StructuralError(f"缺少模糊点 {element}_{format_level(chain.level(k))} 的闭包")
                self._check_argument(value)
                normalized[(element, k)] = value
        if len(entries) != len(normalized):
            raise StructuralError("有限生成算子包含论域之外的条目")
        self.entries = normalized

    @classmethod
    def from_points(cls, universe: Universe, chain: Chain, closures: Mapping[FuzzyPoint, FuzzySet]):
        return cls(universe, chain, {(p.support, chain.grade(p.value)): v for p, v in closures.items()})

    def entry(self, element: str, grade: int) -> FuzzySet:
        return self.entries[(element, grade)]

    def apply(self, f: FuzzySet) -> FuzzySet:
        self._check_argument(f)
        return join_all(self.universe, self.chain,
                        (self.entries[(e, k)] for e, k in zip(self.universe.elements, f.grades) if k))


class Violation:
    def __init__(self, axiom: str, witnesses: Tuple[FuzzySet, ...]):
        self.axiom = axiom
        self.witnesses = witnesses

    def __repr__(self):
        return f"Violation({self.axiom}: {', '.join(map(repr, self.witnesses))})"


class ValidationReport:
    def __init__(self, violations: List[Violation] = None):
        self.violations = violations or []

    @property
    def passed(self) -> bool:
        return not self.violations

    def axioms(self) -> List[str]:
        return [v.axiom for v in self.violations]

    def summary(self) -> str:
        if self.passed:
            return "passed"
        return "; ".join(repr(v) for v in self.violations)


class FuzzyClosureSpace:
    """
    (X, c)：论域、链与闭包算子。闭包值按模糊集缓存，空间本身视为不可变。
    """

    def __init__(self, universe: Universe, chain: Chain, operator: ClosureOperator):
        if operator.universe != universe or operator.chain != chain:
            raise StructuralError("算子与空间的论域或链不一致")
        self.universe = universe
        self.chain = chain
        self.operator = operator
        self.validated = False
        self._closures: Dict[FuzzySet, FuzzySet] = {}
        self._sets: Optional[List[FuzzySet]] = None

    @classmethod
    def discrete(cls, universe: Universe, chain: Chain) -> 'FuzzyClosureSpace':
        return cls(universe, chain, NamedOperator(universe, chain, 'discrete')).ensure_valid()

    @classmethod
    def indiscrete(cls, universe: Universe, chain: Chain) -> 'FuzzyClosureSpace':
        return cls(universe, chain, NamedOperator(universe, chain, 'indiscrete')).ensure_valid()

    @classmethod
    def from_point_closures(cls, universe: Universe, chain: Chain,
                            closures: Mapping[FuzzyPoint, FuzzySet]) -> 'FuzzyClosureSpace':
        operator = FinitelyGeneratedOperator.from_points(universe, chain, closures)
        return cls(universe, chain, operator).ensure_valid()

    def ensure_valid(self) -> 'FuzzyClosureSpace':
        """校验三条公理，失败时抛 StructuralError"""
        if not self.validated:
            report = validate(self)
            if not report.passed:
                raise StructuralError(f"不是 ČF 闭包算子: {report.summary()}")
        return self

    # 基本对象

    def zero(self) -> FuzzySet:
        return FuzzySet.zero(self.universe, self.chain)

    def one(self) -> FuzzySet:
        return FuzzySet.one(self.universe, self.chain)

    def crisp(self, elements: Iterable[str]) -> FuzzySet:
        return FuzzySet.crisp(self.universe, self.chain, elements)

    def fuzzy_set(self, memberships: Mapping) -> FuzzySet:
        return FuzzySet.from_mapping(self.universe, self.chain, memberships)

    def point(self, element: str, value) -> FuzzySet:
        return FuzzyPoint(element, value).as_set(self.universe, self.chain)

    def sets(self) -> List[FuzzySet]:
        if self._sets is None:
            self._sets = enumerate_sets(self.universe, self.chain)
        return self._sets

    def points(self) -> List[FuzzyPoint]:
        return points(self.universe, self.chain)

    # 算子

    def closure(self, f: FuzzySet) -> FuzzySet:
        cached = self._closures.get(f)
        if cached is None:
            cached = self.operator.apply(f)
            self._closures[f] = cached
        return cached

    def point_closure(self, p: FuzzyPoint) -> FuzzySet:
        return self.closure(p.as_set(self.universe, self.chain))

    def interior(self, f: FuzzySet) -> FuzzySet:
        return complement(self.closure(complement(f)))

    def closure_from_interior(self, f: FuzzySet) -> FuzzySet:
        return complement(self.interior(complement(f)))

    def is_neighborhood(self, f: FuzzySet, k: FuzzySet) -> bool:
        """f 是 k 的邻域当且仅当 k <= int(f)"""
        return leq(k, self.interior(f))

    def is_closed(self, f: FuzzySet) -> bool:
        return self.closure(f) == f

    def is_open(self, f: FuzzySet) -> bool:
        return self.interior(f) == f

    def is_well_closed(self, p: FuzzyPoint) -> bool:
        return len(support(self.point_closure(p))) == 1

    def open_sets(self) -> List[FuzzySet]:
        return [f for f in self.sets() if self.is_open(f)]

    def closed_sets(self) -> List[FuzzySet]:
        return [f for f in self.sets() if self.is_closed(f)]

    def __repr__(self):
        return f"FuzzyClosureSpace({self.operator.kind}, {self.universe}, D={self.chain.denominator})"


def _validate_generated(s: FuzzyClosureSpace, operator: FinitelyGeneratedOperator) -> List[Violation]:
    violations = []
    expansive = monotone = None
    for element in s.universe:
        previous = None
        for k in s.chain.positive_grades():
            p = FuzzyPoint(element, s.chain.level(k)).as_set(s.universe, s.chain)
            entry = operator.entry(element, k)
            if expansive is None and not leq(p, entry):
                expansive = Violation(AXIOM_EXPANSIVE, (p, entry))
            if monotone is None and previous is not None and not leq(previous[1], entry):
                monotone = Violation(AXIOM_LEVEL_MONOTONE, (previous[0], p))
            previous = (p, entry)
    violations.extend(v for v in (expansive, monotone) if v is not None)
    if monotone is None:
        # 最大点生成式与全部模糊点之并一致
        for f in s.sets():
            full = join_all(s.universe, s.chain,
                            (operator.entry(e, j) for e, k in zip(s.universe.elements, f.grades)
                             for j in range(1, k + 1)))
            if full != operator.apply(f):
                violations.append(Violation(AXIOM_GENERATION, (f,)))
                break
    return violations


def validate(s: FuzzyClosureSpace) -> ValidationReport:
    """
    校验 ČF 闭包公理：c(0̲)=0̲、f <= c(f)、c(f∨g)=c(f)∨c(g)。
    每条公理只报告枚举序下最小的违反者。
    """
    sets = s.sets()
    operator = s.operator
    if isinstance(operator, FinitelyGeneratedOperator):
        violations = _validate_generated(s, operator)
    else:
        violations = []
        zero = s.zero()
        if not operator.apply(zero).is_zero():
            violations.append(Violation(AXIOM_ZERO, (zero,)))
        for f in sets:
            if not leq(f, operator.apply(f)):
                violations.append(Violation(AXIOM_EXPANSIVE, (f,)))
                break
        check_budget(f"validate pairs |X|={len(s.universe)} D={s.chain.denominator}",
                     len(sets) * (len(sets) + 1) // 2)
        closures = [operator.apply(f) for f in sets]
        found = False
        for i, f in enumerate(sets):
            for j in range(i, len(sets)):
                if operator.apply(join(f, sets[j])) != join(closures[i], closures[j]):
                    violations.append(Violation(AXIOM_ADDITIVE, (f, sets[j])))
                    found = True
                    break
            if found:
                break
    report = ValidationReport(violations)
    s.validated = report.passed
    if not report.passed:
        logger.info(f"validate: {s} 未通过: {report.summary()}")
    return report


def replay_violation(s: FuzzyClosureSpace, violation: Violation) -> bool:
    """重新计算违反项，确认它确实违反对应公理"""
    op = s.operator
    if violation.axiom == AXIOM_ZERO:
        return not op.apply(violation.witnesses[0]).is_zero()
    if violation.axiom == AXIOM_EXPANSIVE:
        f = violation.witnesses[0]
        return not leq(f, op.apply(f))
    if violation.axiom == AXIOM_ADDITIVE:
        f, g = violation.witnesses
        return op.apply(join(f, g)) != join(op.apply(f), op.apply(g))
    if violation.axiom == AXIOM_LEVEL_MONOTONE:
        lower, upper = violation.witnesses
        return leq(lower, upper) and not leq(op.apply(lower), op.apply(upper))
    if violation.axiom == AXIOM_GENERATION:
        f = violation.witnesses[0]
        full = join_all(s.universe, s.chain,
                        (op.apply(q.as_set(s.universe, s.chain)) for q in s.points() if leq(q.as_set(s.universe, s.chain), f)))
        return full != op.apply(f)
    raise StructuralError(f"未知公理: {violation.axiom}")


def is_idempotent(s: FuzzyClosureSpace) -> bool:
    return all(s.closure(s.closure(f)) == s.closure(f) for f in s.sets())


def coarser_leq(s1: FuzzyClosureSpace, s2: FuzzyClosureSpace) -> bool:
    """c1 <= c2（s1 比 s2 粗）当且仅当对所有 f 有 c2(f) <= c1(f)"""
    if s1.universe != s2.universe or s1.chain != s2.chain:
        raise StructuralError("比较粗细的两个空间论域或链不一致")
    return all(leq(s2.closure(f), s1.closure(f)) for f in s1.sets())


def is_finitely_generated(s: FuzzyClosureSpace) -> bool:
    """检查 c(f) = ⋁_{x_λ <= f} c(x_λ) 对全部模糊集成立"""
    point_sets = [p.as_set(s.universe, s.chain) for p in s.points()]
    for f in s.sets():
        generated = join_all(s.universe, s.chain, (s.closure(p) for p in point_sets if leq(p, f)))
        if generated != s.closure(f):
            return False
    return True


def compile_points(s: FuzzyClosureSpace) -> FuzzyClosureSpace:
    """把任意表示的空间转成由模糊点闭包生成的等价空间"""
    if isinstance(s.operator, FinitelyGeneratedOperator):
        return s
    entries = {(e, k): s.closure(FuzzyPoint(e, s.chain.level(k)).as_set(s.universe, s.chain))
               for e in s.universe for k in s.chain.positive_grades()}
    compiled = FuzzyClosureSpace(s.universe, s.chain, FinitelyGeneratedOperator(s.universe, s.chain, entries))
    compiled.validated = s.validated
    return compiled


def as_table(s: FuzzyClosureSpace) -> FuzzyClosureSpace:
    table = {f: s.closure(f) for f in s.sets()}
    materialized = FuzzyClosureSpace(s.universe, s.chain, TableOperator(s.universe, s.chain, table))
    materialized.validated = s.validated
    return materialized


def associated_topology(s: FuzzyClosureSpace):
    """τ(c) = {f : c(Co f) = Co f}"""
    from fcs.space.fuzzy_topology import FuzzyTopology
    return FuzzyTopology(s.universe, s.chain, s.open_sets())


