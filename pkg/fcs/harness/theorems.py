"""
定理注册表：每条定理是对空间（或空间对、或整个空间族）的全称性质。

检查函数返回 None 表示通过，否则返回见证字典；字典里的 'spaces' 键
列出需要随反例一起保存的空间。判定器一律经由 decide 调用。
"""
import itertools
import random
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from fcs.lattice.chain_lattice import FuzzySet, FuzzyPoint, leq, meet, membership, complement, join_all
from fcs.separation import naive
from fcs.separation.deciders import decide, cft0_interior_characterization, cft1_interior_characterization
from fcs.separation.report import REPORT_AXIOMS, SeparationReport
from fcs.space.closure_space import FuzzyClosureSpace, validate, is_idempotent, is_finitely_generated, \
    coarser_leq, associated_topology
from fcs.space.constructions import subspace, subspaces, disjoint_sum, product, extend, restrict, \
    product_closure_oracle, decomposition_oracle, projection_map
from fcs.space.fuzzy_maps import SpaceMap, is_cf_continuous, is_cf_continuous_at, continuity_via_preimage, \
    preimage_preserves_open, is_cf_homeomorphism, interior_commutes, inverse, compose, relabel
from fcs.space.fuzzy_topology import validate_chang, ft_axiom, fts_closure, singletons_closed, \
    topology_closure_space
from fcs.harness.enumeration import enumerate_fg_spaces, random_map, random_bijection

Witness = Optional[Dict]

KIND_SPACE = 'space'
KIND_PAIR = 'pair'
KIND_FAMILY = 'family'
KIND_STANDALONE = 'standalone'

TIER_EXHAUSTIVE = 'exhaustive'
TIER_RANDOM = 'random'

# 空间对的取法：有放回随机抽取，或在抽出的空间中两两组合
PAIRING_RANDOM = 'random'
PAIRING_ALL = 'all'

HEREDITARY_AXIOMS = ('cft0', 'cft1', 'cft2', 'cf_urysohn', 'cf_regular')
# 只对闭子空间遗传
CLOSED_HEREDITARY_AXIOMS = ('cf_normal',)
SUM_AXIOMS = HEREDITARY_AXIOMS + CLOSED_HEREDITARY_AXIOMS
COARSENESS_AXIOMS = ('cft0', 'cft1', 'cft2')


class Theorem:
    def __init__(self, theorem_id: str, description: str, kind: str, tiers: Tuple[str, ...], check: Callable,
                 pairing: str = PAIRING_RANDOM):
        self.theorem_id = theorem_id
        self.description = description
        self.kind = kind
        self.tiers = tiers
        self.check = check
        self.pairing = pairing

    def __repr__(self):
        return f"Theorem({self.theorem_id})"


def _holds(s: FuzzyClosureSpace, axiom: str) -> bool:
    return decide(s, axiom).holds


def _point_set(s: FuzzyClosureSpace, p: FuzzyPoint) -> FuzzySet:
    return p.as_set(s.universe, s.chain)


# 单个空间上的定理

def interior_properties(s: FuzzyClosureSpace) -> Witness:
    """int(1̲)=1̲；int(f) <= f；int(f∧g)=int(f)∧int(g)；单调；开 ⟺ int(f)=f；开 ⟺ 是其中每个点的邻域"""
    one = s.one()
    if s.interior(one) != one:
        return {'property': 'int(1)=1', 'spaces': [s]}
    sets = s.sets()
    for f in sets:
        inner = s.interior(f)
        if not leq(inner, f):
            return {'property': 'int(f)<=f', 'f': f, 'spaces': [s]}
        is_open = s.closure(complement(f)) == complement(f)
        if is_open != (inner == f):
            return {'property': 'open iff int(f)=f', 'f': f, 'spaces': [s]}
        every_point = all(s.is_neighborhood(f, _point_set(s, p)) for p in s.points() if membership(p, f))
        if is_open != every_point:
            return {'property': 'open iff neighborhood of its points', 'f': f, 'spaces': [s]}
    for f, g in itertools.combinations(sets, 2):
        if s.interior(meet(f, g)) != meet(s.interior(f), s.interior(g)):
            return {'property': 'int(f∧g)=int(f)∧int(g)', 'f': f, 'g': g, 'spaces': [s]}
        if leq(f, g) and not leq(s.interior(f), s.interior(g)):
            return {'property': 'int monotone', 'f': f, 'g': g, 'spaces': [s]}
    return None


def closure_identities(s: FuzzyClosureSpace) -> Witness:
    """c(f) = Co(int(Co f))，闭包单调，且空间确为有限生成"""
    sets = s.sets()
    for f in sets:
        if s.closure_from_interior(f) != s.closure(f):
            return {'property': 'closure from interior', 'f': f, 'spaces': [s]}
    for f, g in itertools.combinations(sets, 2):
        if leq(f, g) and not leq(s.closure(f), s.closure(g)):
            return {'property': 'closure monotone', 'f': f, 'g': g, 'spaces': [s]}
    if not is_finitely_generated(s):
        return {'property': 'finitely generated', 'spaces': [s]}
    return None


def topology_is_chang(s: FuzzyClosureSpace) -> Witness:
    """τ(c) 是 Chang 拓扑，其闭集恰为 c 的不动点；拓扑闭包是幂等的 ČF 算子"""
    t = associated_topology(s)
    report = validate_chang(t)
    if not report.passed:
        return {'property': 'Chang axioms', 'violations': report.summary(), 'spaces': [s]}
    if t.closed_sets() != s.closed_sets():
        return {'property': 'closed sets are fixed points', 'spaces': [s]}
    wrapped = topology_closure_space(t)
    if not validate(wrapped).passed or not is_idempotent(wrapped):
        return {'property': 'topology closure is idempotent ČF operator', 'spaces': [s]}
    if is_idempotent(s):
        for f in s.sets():
            if fts_closure(t, f) != s.closure(f):
                return {'property': 'idempotent closure equals topology closure', 'f': f, 'spaces': [s]}
    return None


def cft0_characterization(s: FuzzyClosureSpace) -> Witness:
    direct, via_interior = _holds(s, 'cft0'), cft0_interior_characterization(s).holds
    if direct != via_interior:
        return {'cft0': direct, 'cft0_interior': via_interior, 'spaces': [s]}
    return None


def cft1_characterizations(s: FuzzyClosureSpace) -> Witness:
    """ČFT1 ⟺ 两两定义 ⟺ 内部刻画 ⟺ 点都良闭 ⟺ τ(c) 是 FT1 ⟺ τ(c) 中单点都闭"""
    t = associated_topology(s)
    values = {
        'cft1': _holds(s, 'cft1'),
        'pairwise': naive.cft1_pairwise(s).holds,
        'interior': cft1_interior_characterization(s).holds,
        'well_closed': all(s.is_well_closed(p) for p in s.points()),
        'tau_ft1': ft_axiom(t, 'FT1').holds,
        'tau_singletons_closed': singletons_closed(t),
    }
    if len(set(values.values())) > 1:
        return dict(values, spaces=[s])
    return None


def implication_lattice(s: FuzzyClosureSpace) -> Witness:
    report = SeparationReport({axiom: decide(s, axiom) for axiom in REPORT_AXIOMS})
    broken = report.violated_implications()
    if broken:
        return {'violated': [f"{a} => {b}" for a, b in broken], 'spaces': [s]}
    return None


def finite_ts_is_discrete(s: FuzzyClosureSpace) -> Witness:
    if _holds(s, 'cfts'):
        for f in s.sets():
            if s.closure(f) != f:
                return {'f': f, 'spaces': [s]}
    return None


def finite_t1_is_t2(s: FuzzyClosureSpace) -> Witness:
    if _holds(s, 'cft1'):
        for axiom in ('cft2', 'cf_urysohn'):
            verdict = decide(s, axiom)
            if not verdict:
                return {'axiom': axiom, 'witness': verdict.witness, 'spaces': [s]}
    return None


def fg_regular_is_normal(s: FuzzyClosureSpace) -> Witness:
    if is_finitely_generated(s) and _holds(s, 'cf_regular'):
        verdict = decide(s, 'cf_normal')
        if not verdict:
            return {'witness': verdict.witness, 'spaces': [s]}
    return None


def hereditary(s: FuzzyClosureSpace) -> Witness:
    """T0、T1、T2、Urysohn、regular 对任意子空间遗传，normal 只对闭子空间遗传"""
    held = [axiom for axiom in HEREDITARY_AXIOMS if _holds(s, axiom)]
    held_closed = [axiom for axiom in CLOSED_HEREDITARY_AXIOMS if _holds(s, axiom)]
    for sub in subspaces(s):
        closed = s.is_closed(s.crisp(sub.universe.elements))
        for axiom in held + (held_closed if closed else []):
            if not _holds(sub, axiom):
                return {'axiom': axiom, 'subspace': list(sub.universe.elements), 'spaces': [s]}
    return None


def topology_bridges(s: FuzzyClosureSpace) -> Witness:
    """τ(c) 的 FT0/FT2/FT2½ 蕴含对应的 ČF 公理；幂等时 T0、正则、正规两边等价"""
    t = associated_topology(s)
    for ft, axiom in (('FT0', 'cft0'), ('FT2', 'cft2'), ('FT2.5', 'cf_urysohn')):
        if ft_axiom(t, ft).holds and not _holds(s, axiom):
            return {'bridge': f"{ft} => {axiom}", 'spaces': [s]}
    if is_idempotent(s):
        for ft, axiom in (('FT0', 'cft0'), ('regular', 'cf_regular'), ('normal', 'cf_normal')):
            if ft_axiom(t, ft).holds != _holds(s, axiom):
                return {'bridge': f"{ft} <=> {axiom}", 'spaces': [s]}
    return None


NAIVE_TWINS = (
    ('cft2', naive.cft2_naive),
    ('cf_urysohn', naive.cf_urysohn_naive),
    ('cf_regular', naive.cf_regular_naive),
    ('cf_regular_mashhour', naive.cf_regular_mashhour_naive),
    ('cf_normal', naive.cf_normal_naive),
)


def reduced_equals_naive(s: FuzzyClosureSpace) -> Witness:
    for axiom, slow in NAIVE_TWINS:
        fast = decide(s, axiom)
        literal = slow(s)
        if fast.holds != literal.holds:
            return {'axiom': axiom, 'reduced': fast.holds, 'naive': literal.holds, 'spaces': [s]}
        if not fast.holds and not naive.replay(s, fast):
            return {'axiom': axiom, 'replay': False, 'witness': fast.witness, 'spaces': [s]}
    return None


def _primed(s: FuzzyClosureSpace):
    return relabel(s, {e: e + "'" for e in s.universe})


def homeomorphism_invariance(s: FuzzyClosureSpace) -> Witness:
    copy, m = _primed(s)
    if not is_cf_homeomorphism(m) or not interior_commutes(m):
        return {'property': 'relabeling is a homeomorphism', 'spaces': [s]}
    for axiom in REPORT_AXIOMS:
        if _holds(s, axiom) != _holds(copy, axiom):
            return {'axiom': axiom, 'spaces': [s]}
    return None


# 空间对上的定理

def map_characterizations(s1: FuzzyClosureSpace, s2: FuzzyClosureSpace, rng: random.Random) -> Witness:
    """连续 ⟺ 原像刻画 ⟺ 逐点连续；连续则开集原像为开；连续映射的复合连续"""
    m = random_map(s1, s2, rng)
    continuous = is_cf_continuous(m).holds
    via_preimage = continuity_via_preimage(m).holds
    pointwise = all(is_cf_continuous_at(m, p).holds for p in s1.points())
    if not continuous == via_preimage == pointwise:
        return {'map': dict(m.ground), 'continuous': continuous, 'preimage': via_preimage,
                'pointwise': pointwise, 'spaces': [s1, s2]}
    if continuous and not preimage_preserves_open(m):
        return {'map': dict(m.ground), 'property': 'preimage of open', 'spaces': [s1, s2]}
    back = random_map(s2, s1, rng)
    if continuous and is_cf_continuous(back) and not is_cf_continuous(compose(m, back)):
        return {'map': dict(m.ground), 'back': dict(back.ground), 'property': 'composition', 'spaces': [s1, s2]}
    return None


def homeomorphism_characterization(s1: FuzzyClosureSpace, s2: FuzzyClosureSpace, rng: random.Random) -> Witness:
    """同胚 ⟺ 双向连续；同胚与内部交换。目标取 s2 以及 s1 的改名副本"""
    copy, _ = _primed(s1)
    targets = [copy] + ([s2] if len(s2.universe) == len(s1.universe) else [])
    for target in targets:
        m = random_bijection(s1, target, rng)
        homeo = is_cf_homeomorphism(m).holds
        both_ways = is_cf_continuous(m).holds and is_cf_continuous(inverse(m)).holds
        if homeo != both_ways:
            return {'map': dict(m.ground), 'homeomorphism': homeo, 'both_ways': both_ways, 'spaces': [s1, s2]}
        if homeo and not interior_commutes(m):
            return {'map': dict(m.ground), 'property': 'interior commutes', 'spaces': [s1, s2]}
    return None


def sum_theorems(s1: FuzzyClosureSpace, s2: FuzzyClosureSpace, rng: random.Random) -> Witness:
    """和空间满足公理 ⟺ 每个分量满足；和空间的内部逐块计算；每块作为子空间即原分量"""
    t2, _ = _primed(s2)
    total = disjoint_sum([s1, t2])
    if not validate(total).passed:
        return {'property': 'sum validates', 'spaces': [s1, s2]}
    for axiom in SUM_AXIOMS:
        if _holds(total, axiom) != (_holds(s1, axiom) and _holds(t2, axiom)):
            return {'axiom': axiom, 'spaces': [s1, s2]}
    for f in total.sets():
        blocks = (extend(t.interior(restrict(f, t.universe)), total.universe) for t in (s1, t2))
        if total.interior(f) != join_all(total.universe, total.chain, blocks):
            return {'property': 'sum interior', 'f': f, 'spaces': [s1, s2]}
    for t in (s1, t2):
        block = subspace(total, t.universe)
        if any(block.closure(f) != t.closure(f) for f in t.sets()):
            return {'property': 'block is summand', 'spaces': [s1, s2]}
    return None


def product_theorems(s1: FuzzyClosureSpace, s2: FuzzyClosureSpace, rng: random.Random) -> Witness:
    """积空间点闭包公式；因子都 T0 则积 T0；积 T1 ⟺ 因子都 T1"""
    factors = [s1, s2]
    p = product(factors)
    if not validate(p).passed:
        return {'property': 'product validates', 'spaces': factors}
    universe = p.universe
    for q in p.points():
        expected = FuzzySet(universe, p.chain, [
            min(t.point_closure(FuzzyPoint(c, q.value)).grade(z)
                for t, c, z in zip(factors, universe.coordinates(q.support), universe.coordinates(y)))
            for y in universe])
        if p.point_closure(q) != expected:
            return {'property': 'product point closure', 'point': q, 'spaces': factors}
    if all(_holds(t, 'cft0') for t in factors) and not _holds(p, 'cft0'):
        return {'property': 'product T0', 'spaces': factors}
    if _holds(p, 'cft1') != all(_holds(t, 'cft1') for t in factors):
        return {'property': 'product T1', 'spaces': factors}
    return None


# 整个空间族上的定理

def coarseness_monotonicity(spaces: Sequence[FuzzyClosureSpace]) -> Witness:
    """c1 <= c2 且 c1 满足 T0/T1/T2，则 c2 也满足"""
    verdicts = [{axiom: _holds(s, axiom) for axiom in COARSENESS_AXIOMS} for s in spaces]
    for i, j in itertools.permutations(range(len(spaces)), 2):
        broken = [a for a in COARSENESS_AXIOMS if verdicts[i][a] and not verdicts[j][a]]
        if broken and coarser_leq(spaces[i], spaces[j]):
            return {'axiom': broken[0], 'coarser': i, 'finer': j, 'spaces': [spaces[i], spaces[j]]}
    return None


# 自带输入的构造性定理（2×2 论域、D=1）；samples 为抽取的因子对数

def _factor_pairs(rng: random.Random, samples: int) -> List[Tuple[FuzzyClosureSpace, FuzzyClosureSpace]]:
    factors = list(enumerate_fg_spaces(2, 1))
    pairs = list(itertools.product(factors, repeat=2))
    if samples >= len(pairs):
        return pairs
    return [pairs[i] for i in sorted(rng.sample(range(len(pairs)), samples))]


def product_closure_oracles(rng: random.Random, samples: int) -> Witness:
    """积闭包的闭式 ≡ 最大点化简 ≡ 逐一枚举分解"""
    for s1, s2 in _factor_pairs(rng, samples):
        p = product([s1, s2])
        for f in p.sets():
            closure = p.closure(f)
            for q in p.points():
                closed_form = membership(q, closure)
                if closed_form != product_closure_oracle([s1, s2], f, q) \
                        or closed_form != decomposition_oracle([s1, s2], f, q):
                    return {'f': f, 'point': q, 'spaces': [s1, s2]}
    return None


def coarsest_product(rng: random.Random, samples: int) -> Witness:
    """投影都连续的算子都比积算子细：op(f) <= ⊗c(f)"""
    operators = None
    for s1, s2 in _factor_pairs(rng, samples):
        p = product([s1, s2])
        if operators is None:
            operators = list(enumerate_fg_spaces(len(p.universe), 1, universe=p.universe))
        projections = [projection_map(p, t) for t in range(2)]
        for op in operators:
            if coarser_leq(p, op):
                continue
            if all(is_cf_continuous(SpaceMap(op, m.target, m.ground)) for m in projections):
                return {'operator': [op.closure(q.as_set(op.universe, op.chain)) for q in op.points()],
                        'spaces': [s1, s2]}
    return None


THEOREMS: Dict[str, Theorem] = {t.theorem_id: t for t in (
    Theorem('interior_properties', '内部算子六条性质', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            interior_properties),
    Theorem('closure_identities', 'c = Co∘int∘Co、闭包单调、有限生成', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            closure_identities),
    Theorem('topology_is_chang', 'τ(c) 是 Chang 拓扑', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            topology_is_chang),
    Theorem('cft0_characterization', 'ČFT0 的内部刻画', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            cft0_characterization),
    Theorem('cft1_characterizations', 'ČFT1 的各种刻画', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            cft1_characterizations),
    Theorem('implication_lattice', '分离公理蕴含关系', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            implication_lattice),
    Theorem('finite_ts_discrete', '有限 ČFTs 空间是离散的', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            finite_ts_is_discrete),
    Theorem('finite_t1_t2', '有限 ČFT1 空间是 ČFT2 与 ČF-Urysohn', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            finite_t1_is_t2),
    Theorem('fg_regular_normal', '有限生成的 ČF-regular 空间是 ČF-normal', KIND_SPACE,
            (TIER_EXHAUSTIVE, TIER_RANDOM), fg_regular_is_normal),
    Theorem('hereditary', '分离公理对子空间遗传（normal 只对闭子空间）', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM), hereditary),
    Theorem('topology_bridges', 'τ(c) 与 ČF 公理之间的桥', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            topology_bridges),
    Theorem('reduced_equals_naive', '化简判定器与字面判定器一致', KIND_SPACE, (TIER_EXHAUSTIVE,),
            reduced_equals_naive),
    Theorem('homeomorphism_invariance', '分离公理是同胚不变量', KIND_SPACE, (TIER_EXHAUSTIVE, TIER_RANDOM),
            homeomorphism_invariance),
    Theorem('map_characterizations', '连续性的三种刻画', KIND_PAIR, (TIER_EXHAUSTIVE, TIER_RANDOM),
            map_characterizations),
    Theorem('homeomorphism_characterization', '同胚 ⟺ 双向连续', KIND_PAIR, (TIER_EXHAUSTIVE, TIER_RANDOM),
            homeomorphism_characterization),
    Theorem('sum_theorems', '不交和定理', KIND_PAIR, (TIER_EXHAUSTIVE,), sum_theorems, pairing=PAIRING_ALL),
    Theorem('product_theorems', '有限积定理', KIND_PAIR, (TIER_EXHAUSTIVE,), product_theorems),
    Theorem('coarseness_monotonicity', '粗细单调性', KIND_FAMILY, (TIER_EXHAUSTIVE,), coarseness_monotonicity),
    Theorem('product_closure_oracles', '积闭包闭式与分解枚举一致', KIND_STANDALONE, (TIER_EXHAUSTIVE,),
            product_closure_oracles),
    Theorem('coarsest_product', '积算子是使投影连续的最粗算子', KIND_STANDALONE, (TIER_EXHAUSTIVE,),
            coarsest_product),
)}


def get_theorem(theorem_id: str) -> Theorem:
    theorem = THEOREMS.get(theorem_id)
    if theorem is None:
        raise ValueError(f"Unknown theorem: {theorem_id}")
    return theorem


def select_theorems(ids: Optional[Sequence[str]]) -> List[Theorem]:
    if not ids:
        return list(THEOREMS.values())
    return [get_theorem(i) for i in ids]
