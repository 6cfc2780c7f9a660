"""
ČF 分离公理的判定器。

存在量词的化简：凡是"对 join 封闭且向下封闭"的候选族，其最大元就是
全部被接纳模糊点之并（greatest_below），于是 (f, g) 的二重穷举变成
对模糊点的一次扫描。字面判定在 naive.py，FCS_CROSS_CHECK=1 时两者互相校验。
"""
import os
from typing import Callable, Dict, List, Tuple

from fcs.lattice.chain_lattice import FuzzySet, FuzzyPoint, complement, leq, meet, join, join_all, sets_below
from fcs.separation import naive
from fcs.separation.verdict import Verdict
from fcs.space.closure_space import FuzzyClosureSpace
from fcs.utils.errors import DeciderInconsistencyError, BudgetExceededError
from fcs.utils.log import logger

CROSS_CHECK_MAX_CARRIER = 125


def cross_check_enabled() -> bool:
    return os.getenv('FCS_CROSS_CHECK', '0') == '1'


def _point_items(s: FuzzyClosureSpace) -> List[Tuple[FuzzyPoint, FuzzySet]]:
    return [(p, p.as_set(s.universe, s.chain)) for p in s.points()]


def greatest_below(s: FuzzyClosureSpace, admits: Callable[[FuzzyPoint, FuzzySet], bool]) -> FuzzySet:
    """
    对 join 封闭、向下封闭、且成员资格由最大点决定的族，其最大元等于全部被接纳模糊点之并。
    """
    return join_all(s.universe, s.chain, (ps for p, ps in _point_items(s) if admits(p, ps)))


def _cross_check(s: FuzzyClosureSpace, fast: Verdict, slow: Callable[[FuzzyClosureSpace], Verdict]) -> Verdict:
    if not cross_check_enabled() or len(s.sets()) > CROSS_CHECK_MAX_CARRIER:
        return fast
    try:
        other = slow(s)
    except BudgetExceededError:
        return fast
    if other.holds != fast.holds:
        raise DeciderInconsistencyError(f"{fast.axiom}: 化简判定 {fast.holds} 与字面判定 {other.holds} 不一致 ({s})")
    return fast


def _below_point(s: FuzzyClosureSpace, z: FuzzySet, x: FuzzyPoint) -> int:
    """c(z) 在 x 的支撑处的刻度"""
    return s.closure(z).grade(x.support)


def _grade(s: FuzzyClosureSpace, p: FuzzyPoint) -> int:
    return s.chain.grade(p.value)


def cft0(s: FuzzyClosureSpace) -> Verdict:
    """任意两个不同模糊点，x_λ ∈ Co(c(y_γ)) 或 y_γ ∈ Co(c(x_λ))"""
    for x, y in naive.distinct_point_pairs(s):
        if not naive.cft0_holds_for(s, x, y):
            return Verdict.fail('cft0', x=x, y=y)
    return Verdict.ok('cft0')


def cft0_interior_characterization(s: FuzzyClosureSpace, certify: bool = False) -> Verdict:
    """存在 f 使 x_λ ∈ int(f) 且 y_γ ∈ Co(f)（或 x、y 互换）"""
    certificates = [] if certify else None
    sets = s.sets()
    for x, y in naive.distinct_point_pairs(s):
        xs, ys = x.as_set(s.universe, s.chain), y.as_set(s.universe, s.chain)
        found = None
        for f in sets:
            if (leq(xs, s.interior(f)) and leq(ys, complement(f))) or \
                    (leq(ys, s.interior(f)) and leq(xs, complement(f))):
                found = f
                break
        if found is None:
            return Verdict.fail('cft0_interior', x=x, y=y)
        if certify:
            certificates.append({'x': x, 'y': y, 'f': found})
    return Verdict.ok('cft0_interior', certificates)


def cft1(s: FuzzyClosureSpace) -> Verdict:
    """每个模糊单点 x_1 都是闭集"""
    verdict = Verdict.ok('cft1')
    for e in s.universe:
        p = FuzzyPoint(e, 1)
        if not s.is_closed(p.as_set(s.universe, s.chain)):
            verdict = Verdict.fail('cft1', point=p)
            break
    if cross_check_enabled() and naive.cft1_pairwise(s).holds != verdict.holds:
        raise DeciderInconsistencyError(f"cft1: 单点闭判定与两两定义不一致 ({s})")
    return verdict


def cft1_interior_characterization(s: FuzzyClosureSpace) -> Verdict:
    """存在 f、g 使 x_λ ∈ int(f)、y_γ ∈ Co(f) 且 y_γ ∈ int(g)、x_λ ∈ Co(g)"""
    sets = s.sets()
    for x, y in naive.distinct_point_pairs(s):
        xs, ys = x.as_set(s.universe, s.chain), y.as_set(s.universe, s.chain)
        has_f = any(leq(xs, s.interior(f)) and leq(ys, complement(f)) for f in sets)
        has_g = any(leq(ys, s.interior(g)) and leq(xs, complement(g)) for g in sets)
        if not (has_f and has_g):
            return Verdict.fail('cft1_interior', x=x, y=y)
    return Verdict.ok('cft1_interior')


def cfts(s: FuzzyClosureSpace) -> Verdict:
    for p, ps in _point_items(s):
        if not s.is_closed(ps):
            return Verdict.fail('cfts', point=p)
    return Verdict.ok('cfts')


def _cft2_witness(s: FuzzyClosureSpace, x: FuzzyPoint, y: FuzzyPoint):
    xs, ys = x.as_set(s.universe, s.chain), y.as_set(s.universe, s.chain)
    budget = s.chain.denominator - _grade(s, x)
    not_x = complement(xs)
    # g 的候选族：g <= Co(x_λ) 且 c(g ∨ y_γ)(x) <= 1-λ
    g = greatest_below(s, lambda z, zs: leq(zs, not_x) and _below_point(s, join(zs, ys), x) <= budget)
    if not leq(ys, s.interior(g)):
        return None
    f = meet(complement(g), complement(ys))
    return f, g


def cft2(s: FuzzyClosureSpace, certify: bool = False) -> Verdict:
    """
    给定 g，最优的 f 是 Co(g) ∧ Co(y_γ)，x_λ <= int(f) 等价于 c(g ∨ y_γ)(x) <= 1-λ，
    这一条件对 g 向下封闭、对 join 封闭，因此只需检查其最大元 g*。
    """
    certificates = [] if certify else None
    verdict = None
    for x, y in naive.distinct_point_pairs(s):
        witness = _cft2_witness(s, x, y)
        if witness is None:
            verdict = Verdict.fail('cft2', x=x, y=y)
            break
        if certify:
            certificates.append({'x': x, 'y': y, 'f': witness[0], 'g': witness[1]})
    if verdict is None:
        verdict = Verdict.ok('cft2', certificates)
    return _cross_check(s, verdict, naive.cft2_naive)


def _urysohn_f_star(s: FuzzyClosureSpace, ys: FuzzySet, g: FuzzySet) -> FuzzySet:
    """满足 f <= Co(y_γ)、c(f) <= Co(c(g)) 的最大 f"""
    not_y = complement(ys)
    bound = complement(s.closure(g))
    return greatest_below(s, lambda z, zs: leq(zs, not_y) and leq(s.closure(zs), bound))


def cf_urysohn(s: FuzzyClosureSpace, certify: bool = False) -> Verdict:
    """
    对固定的 g，f 的候选族有最大元 F*(g)；F*(g1 ∨ g2) = F*(g1) ∧ F*(g2) 且 int 保交，
    所以 g 的候选族同样有最大元 G*，判定 y_γ <= int(G*) 即可。
    """
    certificates = [] if certify else None
    verdict = None
    for x, y in naive.distinct_point_pairs(s):
        xs, ys = x.as_set(s.universe, s.chain), y.as_set(s.universe, s.chain)
        not_x = complement(xs)
        cache: Dict[FuzzySet, FuzzySet] = {}

        def f_star(g: FuzzySet) -> FuzzySet:
            if g not in cache:
                cache[g] = _urysohn_f_star(s, ys, g)
            return cache[g]

        g = greatest_below(s, lambda z, zs: leq(zs, not_x) and leq(xs, s.interior(f_star(zs))))
        if not leq(ys, s.interior(g)) or not leq(xs, s.interior(f_star(g))):
            verdict = Verdict.fail('cf_urysohn', x=x, y=y)
            break
        if certify:
            certificates.append({'x': x, 'y': y, 'f': f_star(g), 'g': g})
    if verdict is None:
        verdict = Verdict.ok('cf_urysohn', certificates)
    return _cross_check(s, verdict, naive.cf_urysohn_naive)


def _first_outside(candidates: FuzzySet, bound: FuzzySet):
    """candidates 之下第一个（枚举序）不在 bound 之下的非零集"""
    for k in sets_below(candidates):
        if not k.is_zero() and not leq(k, bound):
            return k
    return None


def cf_regular(s: FuzzyClosureSpace) -> Verdict:
    """
    取 f = Co(g)；x_λ <= int(Co g) 等价于 c(g)(x) <= 1-λ。该族的最大元 G* 恰是
    满足 x_λ ∈ Co(c(k)) 的 k 的上界，所以每个这样的 k 都要落在 int(G*) 之下。
    """
    verdict = None
    for p, ps in _point_items(s):
        budget = s.chain.denominator - _grade(s, p)
        g = greatest_below(s, lambda z, zs: _below_point(s, zs, p) <= budget)
        k = _first_outside(g, s.interior(g))
        if k is not None:
            verdict = Verdict.fail('cf_regular', point=p, k=k)
            break
    if verdict is None:
        verdict = Verdict.ok('cf_regular')
    return _cross_check(s, verdict, naive.cf_regular_naive)


def cf_regular_mashhour(s: FuzzyClosureSpace) -> Verdict:
    """对 x_λ <= int(k)，c(f) <= int(k) 的最大 f 记为 F*，要求 x_λ <= int(F*)"""
    f_stars: Dict[FuzzySet, FuzzySet] = {}
    verdict = None
    for p, ps in _point_items(s):
        for k in s.sets():
            bound = s.interior(k)
            if not leq(ps, bound):
                continue
            if k not in f_stars:
                f_stars[k] = greatest_below(s, lambda z, zs: leq(s.closure(zs), bound))
            if not leq(ps, s.interior(f_stars[k])):
                verdict = Verdict.fail('cf_regular_mashhour', point=p, k=k)
                break
        if verdict is not None:
            break
    if verdict is None:
        verdict = Verdict.ok('cf_regular_mashhour')
    return _cross_check(s, verdict, naive.cf_regular_mashhour_naive)


def cf_normal(s: FuzzyClosureSpace) -> Verdict:
    """
    取 f1 = Co(f2)；k1 <= int(Co f2) 等价于 c(f2) <= Co(k1)，最大元记为 F2*。
    满足 c(k1) <= Co(c(k2)) 的 k2 恰是某个集合 H 之下的集合，要求它们都落在 int(F2*) 之下。
    k1 或 k2 为 0̲ 的情形跳过。
    """
    verdict = None
    for k1 in s.sets():
        if k1.is_zero():
            continue
        not_k1 = complement(k1)
        not_ck1 = complement(s.closure(k1))
        f2 = greatest_below(s, lambda z, zs: leq(s.closure(zs), not_k1))
        h = greatest_below(s, lambda z, zs: leq(s.closure(zs), not_ck1))
        k2 = _first_outside(h, s.interior(f2))
        if k2 is not None:
            verdict = Verdict.fail('cf_normal', k1=k1, k2=k2)
            break
    if verdict is None:
        verdict = Verdict.ok('cf_normal')
    return _cross_check(s, verdict, naive.cf_normal_naive)


def _with_ts(s: FuzzyClosureSpace, axiom: str, base: Verdict) -> Verdict:
    if not base:
        return Verdict(axiom, False, base.witness)
    strong = cfts(s)
    if not strong:
        return Verdict(axiom, False, strong.witness)
    return Verdict.ok(axiom)


def cft3(s: FuzzyClosureSpace) -> Verdict:
    return _with_ts(s, 'cft3', cf_regular(s))


def cft4(s: FuzzyClosureSpace) -> Verdict:
    return _with_ts(s, 'cft4', cf_normal(s))


DECIDERS = {
    'cft0': cft0,
    'cft1': cft1,
    'cfts': cfts,
    'cft2': cft2,
    'cf_urysohn': cf_urysohn,
    'cf_regular': cf_regular,
    'cf_regular_mashhour': cf_regular_mashhour,
    'cf_normal': cf_normal,
    'cft3': cft3,
    'cft4': cft4,
}


def decide(s: FuzzyClosureSpace, axiom: str) -> Verdict:
    try:
        decider = DECIDERS[axiom]
    except KeyError:
        raise ValueError(f"Unknown axiom: {axiom}")
    logger.debug(f"decide {axiom} on {s}")
    return decider(s)
