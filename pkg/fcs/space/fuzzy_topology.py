"""
Chang 模糊拓扑及 FT 分离公理。

开集族按外延存储；有限论域上任意并退化为两两并。
"""
import itertools
from typing import Iterable, List

from fcs.lattice.chain_lattice import Chain, Universe, FuzzySet, FuzzyPoint, complement, join, meet, leq, \
    enumerate_sets, set_index, points, join_all, meet_all
from fcs.separation.verdict import Verdict
from fcs.space.closure_space import ClosureOperator, FuzzyClosureSpace, ValidationReport, Violation
from fcs.utils.errors import StructuralError

FT_AXIOMS = ('FT0', 'FT1', 'FTs', 'FT2', 'FT2.5', 'regular', 'FT3', 'normal', 'FT4')


class FuzzyTopology:
    def __init__(self, universe: Universe, chain: Chain, opens: Iterable[FuzzySet]):
        opens = set(opens)
        for f in opens:
            if f.universe != universe or f.chain != chain:
                raise StructuralError(f"开集 {f} 不属于论域 {universe}")
        self.universe = universe
        self.chain = chain
        self.opens: List[FuzzySet] = sorted(opens, key=set_index)
        self._open_set = frozenset(self.opens)
        self._closed: List[FuzzySet] = [complement(f) for f in self.opens]

    @classmethod
    def discrete(cls, universe: Universe, chain: Chain) -> 'FuzzyTopology':
        return cls(universe, chain, enumerate_sets(universe, chain))

    @classmethod
    def indiscrete(cls, universe: Universe, chain: Chain) -> 'FuzzyTopology':
        return cls(universe, chain, [FuzzySet.zero(universe, chain), FuzzySet.one(universe, chain)])

    def is_open(self, f: FuzzySet) -> bool:
        return f in self._open_set

    def is_closed(self, f: FuzzySet) -> bool:
        return complement(f) in self._open_set

    def closed_sets(self) -> List[FuzzySet]:
        return sorted(self._closed, key=set_index)

    def __len__(self):
        return len(self.opens)

    def __eq__(self, other):
        return isinstance(other, FuzzyTopology) and other._open_set == self._open_set

    def __hash__(self):
        return hash(self._open_set)

    def __repr__(self):
        return f"FuzzyTopology({len(self.opens)} opens on {self.universe}, D={self.chain.denominator})"


def validate_chang(t: FuzzyTopology) -> ValidationReport:
    violations = []
    zero = FuzzySet.zero(t.universe, t.chain)
    one = FuzzySet.one(t.universe, t.chain)
    if not t.is_open(zero):
        violations.append(Violation('contains-zero', (zero,)))
    if not t.is_open(one):
        violations.append(Violation('contains-one', (one,)))
    for axiom, operation in (('meet', meet), ('join', join)):
        for f, g in itertools.combinations(t.opens, 2):
            if not t.is_open(operation(f, g)):
                violations.append(Violation(axiom, (f, g)))
                break
    return ValidationReport(violations)


def generated_topology(universe: Universe, chain: Chain, family: Iterable[FuzzySet]) -> FuzzyTopology:
    """包含给定族的最小 Chang 拓扑：加入 0̲、1̲ 后反复取两两交并直到封闭"""
    opens = {FuzzySet.zero(universe, chain), FuzzySet.one(universe, chain)}
    opens.update(family)
    frontier = list(opens)
    while frontier:
        added = []
        for f in frontier:
            for g in list(opens):
                for h in (meet(f, g), join(f, g)):
                    if h not in opens:
                        opens.add(h)
                        added.append(h)
        frontier = added
    return FuzzyTopology(universe, chain, opens)


def fts_closure(t: FuzzyTopology, f: FuzzySet) -> FuzzySet:
    """f̄：包含 f 的全部闭集之交"""
    return meet_all(t.universe, t.chain, (g for g in t._closed if leq(f, g)))


def topology_interior(t: FuzzyTopology, f: FuzzySet) -> FuzzySet:
    return join_all(t.universe, t.chain, (g for g in t.opens if leq(g, f)))


def smallest_open(t: FuzzyTopology, f: FuzzySet) -> FuzzySet:
    # 开集族对交封闭，包含 f 的最小开集存在
    return meet_all(t.universe, t.chain, (g for g in t.opens if leq(f, g)))


class TopologyOperator(ClosureOperator):
    kind = 'topology'

    def __init__(self, topology: FuzzyTopology):
        super().__init__(topology.universe, topology.chain)
        self.topology = topology

    def apply(self, f: FuzzySet) -> FuzzySet:
        self._check_argument(f)
        return fts_closure(self.topology, f)


def topology_closure_space(t: FuzzyTopology) -> FuzzyClosureSpace:
    return FuzzyClosureSpace(t.universe, t.chain, TopologyOperator(t))


def _distinct_pairs(t: FuzzyTopology):
    """不同支撑的模糊点对，按论域顺序和刻度升序"""
    for x, y in itertools.combinations(t.universe.elements, 2):
        for a in t.chain.positive_grades():
            for b in t.chain.positive_grades():
                yield FuzzyPoint(x, t.chain.level(a)), FuzzyPoint(y, t.chain.level(b))


def _as_set(t: FuzzyTopology, p: FuzzyPoint) -> FuzzySet:
    return p.as_set(t.universe, t.chain)


def _pairwise(t: FuzzyTopology, which: str) -> Verdict:
    for x, y in _distinct_pairs(t):
        xs, ys = _as_set(t, x), _as_set(t, y)
        ux, uy = smallest_open(t, xs), smallest_open(t, ys)
        x_away = leq(ux, complement(ys))
        y_away = leq(uy, complement(xs))
        if which == 'FT0':
            holds = x_away or y_away
        elif which == 'FT1':
            holds = x_away and y_away
        elif which == 'FT2':
            holds = x_away and y_away and leq(ux, complement(uy))
        else:
            holds = x_away and y_away and leq(fts_closure(t, ux), complement(fts_closure(t, uy)))
        if not holds:
            return Verdict.fail(which, x=x, y=y)
    return Verdict.ok(which)


def _fts(t: FuzzyTopology) -> Verdict:
    for p in points(t.universe, t.chain):
        if not t.is_closed(_as_set(t, p)):
            return Verdict.fail('FTs', point=p)
    return Verdict.ok('FTs')


def _regular(t: FuzzyTopology) -> Verdict:
    closed = t.closed_sets()
    for p in points(t.universe, t.chain):
        ps = _as_set(t, p)
        up = smallest_open(t, ps)
        for k in closed:
            if leq(ps, complement(k)) and not leq(up, complement(smallest_open(t, k))):
                return Verdict.fail('regular', point=p, k=k)
    return Verdict.ok('regular')


def _normal(t: FuzzyTopology) -> Verdict:
    closed = t.closed_sets()
    for k1 in closed:
        u1 = smallest_open(t, k1)
        for k2 in closed:
            if leq(k1, complement(k2)) and not leq(u1, complement(smallest_open(t, k2))):
                return Verdict.fail('normal', k1=k1, k2=k2)
    return Verdict.ok('normal')


def ft_axiom(t: FuzzyTopology, which: str) -> Verdict:
    """
    判定 FT 分离公理。点量词取遍链上刻度；"不同"指支撑不同。
    开集族对交封闭，所以每个存在量词都可以用"包含目标的最小开集"代替。
    """
    if which in ('FT0', 'FT1', 'FT2', 'FT2.5'):
        return _pairwise(t, which)
    if which == 'FTs':
        return _fts(t)
    if which == 'regular':
        return _regular(t)
    if which == 'normal':
        return _normal(t)
    if which in ('FT3', 'FT4'):
        base = _regular(t) if which == 'FT3' else _normal(t)
        if not base:
            return Verdict(which, False, base.witness)
        strong = _fts(t)
        return Verdict.ok(which) if strong else Verdict(which, False, strong.witness)
    raise StructuralError(f"未知的 FT 公理: {which}")


def singletons_closed(t: FuzzyTopology) -> bool:
    """每个模糊单点 x_1 都是闭集"""
    return all(t.is_closed(FuzzyPoint(e, 1).as_set(t.universe, t.chain)) for e in t.universe)
