"""
分离公理的字面判定：直接按定义对 (f, g) 穷举。

只用于极小实例，作为化简后判定器的对照，以及复核反例（replay）。
"""
import itertools
from typing import Optional

from fcs.lattice.chain_lattice import FuzzySet, FuzzyPoint, complement, leq, check_budget
from fcs.separation.verdict import Verdict
from fcs.space.closure_space import FuzzyClosureSpace
from fcs.utils.errors import StructuralError

NAIVE_PAIR_BUDGET = 2000000


def _as_set(s: FuzzyClosureSpace, p: FuzzyPoint) -> FuzzySet:
    return p.as_set(s.universe, s.chain)


def _check_naive_budget(s: FuzzyClosureSpace):
    check_budget(f"naive pair enumeration |X|={len(s.universe)} D={s.chain.denominator}",
                 len(s.sets()) ** 2, NAIVE_PAIR_BUDGET)


def cft0_holds_for(s: FuzzyClosureSpace, x: FuzzyPoint, y: FuzzyPoint) -> bool:
    xs, ys = _as_set(s, x), _as_set(s, y)
    return leq(xs, complement(s.closure(ys))) or leq(ys, complement(s.closure(xs)))


def cft1_holds_for(s: FuzzyClosureSpace, x: FuzzyPoint, y: FuzzyPoint) -> bool:
    xs, ys = _as_set(s, x), _as_set(s, y)
    return leq(xs, complement(s.closure(ys))) and leq(ys, complement(s.closure(xs)))


def separating_pair(s: FuzzyClosureSpace, x: FuzzyPoint, y: FuzzyPoint, urysohn: bool = False):
    """
    按定义寻找邻域 f, g：x <= int(f)，y <= int(g)，f <= Co(g)，x ∈ f <= Co(y)，y ∈ g <= Co(x)；
    urysohn 为 True 时把 f <= Co(g) 换成 c(f) <= Co(c(g))。
    """
    xs, ys = _as_set(s, x), _as_set(s, y)
    not_x, not_y = complement(xs), complement(ys)
    fs = [f for f in s.sets() if leq(xs, s.interior(f)) and leq(f, not_y)]
    gs = [g for g in s.sets() if leq(ys, s.interior(g)) and leq(g, not_x)]
    for f in fs:
        for g in gs:
            if urysohn:
                if leq(s.closure(f), complement(s.closure(g))):
                    return f, g
            elif leq(f, complement(g)):
                return f, g
    return None


def regular_separation(s: FuzzyClosureSpace, p: FuzzyPoint, k: FuzzySet):
    """x_λ 与 k 的邻域 f, g 满足 f <= Co(g)"""
    ps = _as_set(s, p)
    fs = [f for f in s.sets() if leq(ps, s.interior(f))]
    gs = [g for g in s.sets() if leq(k, s.interior(g))]
    for f in fs:
        for g in gs:
            if leq(f, complement(g)):
                return f, g
    return None


def regular_qualifies(s: FuzzyClosureSpace, p: FuzzyPoint, k: FuzzySet) -> bool:
    return not k.is_zero() and leq(_as_set(s, p), complement(s.closure(k)))


def mashhour_separation(s: FuzzyClosureSpace, p: FuzzyPoint, k: FuzzySet) -> Optional[FuzzySet]:
    """x_λ ∈ int(f) <= c(f) <= int(k)"""
    ps = _as_set(s, p)
    bound = s.interior(k)
    for f in s.sets():
        if leq(ps, s.interior(f)) and leq(s.closure(f), bound):
            return f
    return None


def mashhour_qualifies(s: FuzzyClosureSpace, p: FuzzyPoint, k: FuzzySet) -> bool:
    return leq(_as_set(s, p), s.interior(k))


def normal_qualifies(s: FuzzyClosureSpace, k1: FuzzySet, k2: FuzzySet) -> bool:
    return not k1.is_zero() and not k2.is_zero() and leq(s.closure(k1), complement(s.closure(k2)))


def normal_separation(s: FuzzyClosureSpace, k1: FuzzySet, k2: FuzzySet):
    f1s = [f for f in s.sets() if leq(k1, s.interior(f))]
    f2s = [f for f in s.sets() if leq(k2, s.interior(f))]
    for f1 in f1s:
        for f2 in f2s:
            if leq(f1, complement(f2)):
                return f1, f2
    return None


def distinct_point_pairs(s: FuzzyClosureSpace):
    for a, b in itertools.combinations(s.universe.elements, 2):
        for i in s.chain.positive_grades():
            for j in s.chain.positive_grades():
                yield FuzzyPoint(a, s.chain.level(i)), FuzzyPoint(b, s.chain.level(j))


def cft1_pairwise(s: FuzzyClosureSpace) -> Verdict:
    """ČFT1 的原始定义：任意不同模糊点互不落在对方闭包里"""
    for x, y in distinct_point_pairs(s):
        if not cft1_holds_for(s, x, y):
            return Verdict.fail('cft1', x=x, y=y)
    return Verdict.ok('cft1')


def cft2_naive(s: FuzzyClosureSpace) -> Verdict:
    _check_naive_budget(s)
    for x, y in distinct_point_pairs(s):
        if separating_pair(s, x, y) is None:
            return Verdict.fail('cft2', x=x, y=y)
    return Verdict.ok('cft2')


def cf_urysohn_naive(s: FuzzyClosureSpace) -> Verdict:
    _check_naive_budget(s)
    for x, y in distinct_point_pairs(s):
        if separating_pair(s, x, y, urysohn=True) is None:
            return Verdict.fail('cf_urysohn', x=x, y=y)
    return Verdict.ok('cf_urysohn')


def cf_regular_naive(s: FuzzyClosureSpace) -> Verdict:
    _check_naive_budget(s)
    for p in s.points():
        for k in s.sets():
            if regular_qualifies(s, p, k) and regular_separation(s, p, k) is None:
                return Verdict.fail('cf_regular', point=p, k=k)
    return Verdict.ok('cf_regular')


def cf_regular_mashhour_naive(s: FuzzyClosureSpace) -> Verdict:
    for p in s.points():
        for k in s.sets():
            if mashhour_qualifies(s, p, k) and mashhour_separation(s, p, k) is None:
                return Verdict.fail('cf_regular_mashhour', point=p, k=k)
    return Verdict.ok('cf_regular_mashhour')


def cf_normal_naive(s: FuzzyClosureSpace) -> Verdict:
    _check_naive_budget(s)
    for k1 in s.sets():
        for k2 in s.sets():
            if normal_qualifies(s, k1, k2) and normal_separation(s, k1, k2) is None:
                return Verdict.fail('cf_normal', k1=k1, k2=k2)
    return Verdict.ok('cf_normal')


def replay(s: FuzzyClosureSpace, verdict: Verdict) -> bool:
    """
    按字面定义复核一个失败判定的见证，见证确实违反公理时返回 True。
    成立的判定没有见证，返回 False。
    """
    if verdict.holds:
        return False
    w = verdict.witness
    axiom = verdict.axiom
    if axiom in ('cft3', 'cft4'):
        base = 'cf_regular' if axiom == 'cft3' else 'cf_normal'
        inner = 'cfts' if 'k' not in w and 'k1' not in w else base
        return replay(s, Verdict(inner, False, w))
    if axiom in ('cft0', 'cft0_interior'):
        return not cft0_holds_for(s, w['x'], w['y'])
    if axiom in ('cft1', 'cft1_interior'):
        if 'point' in w:
            p = w['point']
            return not s.is_closed(_as_set(s, p))
        return not cft1_holds_for(s, w['x'], w['y'])
    if axiom == 'cfts':
        return not s.is_closed(_as_set(s, w['point']))
    if axiom == 'cft2':
        return separating_pair(s, w['x'], w['y']) is None
    if axiom == 'cf_urysohn':
        return separating_pair(s, w['x'], w['y'], urysohn=True) is None
    if axiom == 'cf_regular':
        return regular_qualifies(s, w['point'], w['k']) and regular_separation(s, w['point'], w['k']) is None
    if axiom == 'cf_regular_mashhour':
        return mashhour_qualifies(s, w['point'], w['k']) and mashhour_separation(s, w['point'], w['k']) is None
    if axiom == 'cf_normal':
        return normal_qualifies(s, w['k1'], w['k2']) and normal_separation(s, w['k1'], w['k2']) is None
    raise StructuralError(f"无法复核的公理: {axiom}")
