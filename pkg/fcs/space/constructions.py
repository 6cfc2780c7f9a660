"""
子空间、不交和与有限积。
"""
import itertools
import math
from typing import Iterable, List, Sequence, Tuple

from fcs.lattice.chain_lattice import Universe, FuzzySet, FuzzyPoint, join_all, sets_below, support, check_budget
from fcs.space.closure_space import ClosureOperator, FuzzyClosureSpace
from fcs.space.fuzzy_maps import SpaceMap
from fcs.utils.errors import StructuralError
from fcs.utils.log import logger


def extend(f: FuzzySet, universe: Universe) -> FuzzySet:
    """把 A 上的模糊集零延拓到包含 A 的论域上"""
    grades = [0] * len(universe)
    for e, k in zip(f.universe.elements, f.grades):
        grades[universe.position(e)] = k
    return FuzzySet(universe, f.chain, grades)


def restrict(f: FuzzySet, universe: Universe) -> FuzzySet:
    return FuzzySet(universe, f.chain, [f.grade(e) for e in universe])


class SubspaceOperator(ClosureOperator):
    """c_A(f) = 1_A ∧ c(f)，载体取 I^A，经零延拓与原空间相连"""
    kind = 'subspace'

    def __init__(self, parent: FuzzyClosureSpace, universe: Universe):
        super().__init__(universe, parent.chain)
        self.parent = parent

    def apply(self, f: FuzzySet) -> FuzzySet:
        self._check_argument(f)
        return restrict(self.parent.closure(extend(f, self.parent.universe)), self.universe)


def subspace(s: FuzzyClosureSpace, elements: Iterable[str]) -> FuzzyClosureSpace:
    chosen = set(elements)
    if not chosen:
        raise StructuralError("子空间不能为空")
    for e in chosen:
        s.universe.position(e)
    universe = Universe(e for e in s.universe if e in chosen)
    result = FuzzyClosureSpace(universe, s.chain, SubspaceOperator(s, universe))
    result.validated = s.validated
    return result


def subspaces(s: FuzzyClosureSpace) -> List[FuzzyClosureSpace]:
    """全部非空子空间，按元素个数再按论域顺序"""
    elements = s.universe.elements
    return [subspace(s, chosen) for size in range(1, len(elements) + 1)
            for chosen in itertools.combinations(elements, size)]


class SumOperator(ClosureOperator):
    """⊕c_t(f) = ⋁_t c_t(1_{X_t} ∧ f)"""
    kind = 'sum'

    def __init__(self, universe: Universe, spaces: Sequence[FuzzyClosureSpace]):
        super().__init__(universe, spaces[0].chain)
        self.spaces = list(spaces)

    def apply(self, f: FuzzySet) -> FuzzySet:
        self._check_argument(f)
        return join_all(self.universe, self.chain,
                        (extend(t.closure(restrict(f, t.universe)), self.universe) for t in self.spaces))


def disjoint_sum(spaces: Sequence[FuzzyClosureSpace]) -> FuzzyClosureSpace:
    if not spaces:
        raise StructuralError("和空间至少需要一个分量")
    chain = spaces[0].chain
    seen = set()
    for t in spaces:
        if t.chain != chain:
            raise StructuralError(f"分量的链不一致: {t.chain} vs {chain}")
        overlap = seen.intersection(t.universe)
        if overlap:
            raise StructuralError(f"分量论域有重叠: {', '.join(sorted(overlap))}")
        seen.update(t.universe)
    universe = Universe(e for t in spaces for e in t.universe)
    result = FuzzyClosureSpace(universe, chain, SumOperator(universe, spaces))
    result.validated = all(t.validated for t in spaces)
    return result


def block(sum_space: FuzzyClosureSpace, index: int) -> FuzzySet:
    """1_{X_t}"""
    return sum_space.crisp(sum_space.operator.spaces[index].universe)


class ProductUniverse(Universe):
    """
    有限积论域，元素名形如 "(a,b)"，坐标另存，P_t 取第 t 个坐标。
    """

    __slots__ = ('factors', '_coordinates')

    def __init__(self, factors: Sequence[Universe]):
        factors = list(factors)
        if not factors:
            raise StructuralError("积空间至少需要一个因子")
        tuples = list(itertools.product(*(f.elements for f in factors)))
        names = ["(" + ",".join(t) + ")" for t in tuples]
        super().__init__(names)
        self.factors = factors
        self._coordinates = dict(zip(names, tuples))

    def coordinates(self, element: str) -> Tuple[str, ...]:
        self.position(element)
        return self._coordinates[element]

    def projection(self, element: str, t: int) -> str:
        return self.coordinates(element)[t]


class ProductOperator(ClosureOperator):
    """
    ⊗c_t(f) = ⋁_{y ∈ supp f} ∏_t c_t((y^t)_{f(y)})，∏ 为逐坐标取最小的积集合。
    """
    kind = 'product'

    def __init__(self, universe: ProductUniverse, spaces: Sequence[FuzzyClosureSpace]):
        super().__init__(universe, spaces[0].chain)
        self.spaces = list(spaces)

    def point_closure_grades(self, element: str, grade: int) -> Tuple[int, ...]:
        coordinates = self.universe.coordinates(element)
        level = self.chain.level(grade)
        factor_closures = [t.point_closure(FuzzyPoint(c, level)) for t, c in zip(self.spaces, coordinates)]
        return tuple(min(closure.grade(c) for closure, c in zip(factor_closures, self.universe.coordinates(z)))
                     for z in self.universe)

    def apply(self, f: FuzzySet) -> FuzzySet:
        self._check_argument(f)
        grades = [0] * len(self.universe)
        for y, k in zip(self.universe.elements, f.grades):
            if not k:
                continue
            for i, value in enumerate(self.point_closure_grades(y, k)):
                if value > grades[i]:
                    grades[i] = value
        return FuzzySet(self.universe, self.chain, grades)


def product(spaces: Sequence[FuzzyClosureSpace]) -> FuzzyClosureSpace:
    if not spaces:
        raise StructuralError("积空间至少需要一个因子")
    chain = spaces[0].chain
    for t in spaces:
        if t.chain != chain:
            raise StructuralError(f"因子的链不一致: {t.chain} vs {chain}")
    size = 1
    for t in spaces:
        size *= len(t.universe)
    check_budget(f"product of {len(spaces)} factors", (chain.denominator + 1) ** size)
    universe = ProductUniverse([t.universe for t in spaces])
    logger.debug(f"product: {len(spaces)} 个因子，论域大小 {size}")
    result = FuzzyClosureSpace(universe, chain, ProductOperator(universe, spaces))
    result.validated = all(t.validated for t in spaces)
    return result


def product_closure_oracle(spaces: Sequence[FuzzyClosureSpace], f: FuzzySet, p: FuzzyPoint) -> bool:
    """
    按定义判定 p <= ⊗c_t(f)：坏分解对向下闭，只需看最细的分解，
    即存在 f 的某个最大点 y_{f(y)}，使得对每个 t 都有 P_t(p) <= c_t((y^t)_{f(y)})。
    """
    universe = f.universe
    target = universe.coordinates(p.support)
    for y, k in zip(universe.elements, f.grades):
        if not k:
            continue
        level = f.chain.level(k)
        if all(p.value <= t.point_closure(FuzzyPoint(c, level)).value(z)
               for t, c, z in zip(spaces, universe.coordinates(y), target)):
            return True
    return False


def _projected(spaces: Sequence[FuzzyClosureSpace], part: FuzzySet, t: int) -> FuzzySet:
    """P_t(f_i)：f_i 在第 t 个投影下的像"""
    factor = spaces[t]
    grades = [0] * len(factor.universe)
    for e, k in zip(part.universe.elements, part.grades):
        i = factor.universe.position(part.universe.projection(e, t))
        if k > grades[i]:
            grades[i] = k
    return FuzzySet(factor.universe, factor.chain, grades)


def decomposition_oracle(spaces: Sequence[FuzzyClosureSpace], f: FuzzySet, p: FuzzyPoint,
                         max_parts: int = None) -> bool:
    """
    逐一枚举分解 f = f_1 ∨ ... ∨ f_n（各部分非零、互不相同、均 <= f，并恰为 f，n 不超过 |supp f|），
    要求每个分解都有某个 f_i 使 P_t(p) <= c_t(P_t(f_i)) 对全部 t 成立。只适用于极小实例。

    允许 0̲ 与重复部分的分解不改变结论：0̲ 部分总是坏的，去掉 0̲ 与重复部分后仍是 f 的分解；
    全坏的分解中为 supp f 的每个点各取一个取到 f 值的部分，得到不超过 |supp f| 个部分的全坏分解。
    """
    universe = f.universe
    if f.is_zero():
        return False
    max_parts = max_parts or len(support(f))
    parts = [g for g in sets_below(f) if not g.is_zero()]
    check_budget("decomposition oracle", sum(math.comb(len(parts), n) for n in range(1, max_parts + 1)))
    target = universe.coordinates(p.support)

    def good(part: FuzzySet) -> bool:
        return all(p.value <= spaces[t].closure(_projected(spaces, part, t)).value(target[t])
                   for t in range(len(spaces)))

    verdicts = {g: good(g) for g in parts}
    for n in range(1, max_parts + 1):
        for combo in itertools.combinations(parts, n):
            if join_all(universe, f.chain, combo) != f:
                continue
            if not any(verdicts[g] for g in combo):
                return False
    return True


def projection_map(product_space: FuzzyClosureSpace, t: int) -> SpaceMap:
    operator = product_space.operator
    if not isinstance(operator, ProductOperator):
        raise StructuralError("projection_map 只适用于积空间")
    if not 0 <= t < len(operator.spaces):
        raise StructuralError(f"因子下标越界: {t}")
    universe = product_space.universe
    return SpaceMap(product_space, operator.spaces[t], {e: universe.projection(e, t) for e in universe})
