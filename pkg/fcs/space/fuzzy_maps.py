"""
映射 θ:(X,c) → (Y,d) 的模糊像、原像、ČF 连续性与同胚判定。
"""
from typing import Dict, Mapping, Tuple

from fcs.lattice.chain_lattice import Universe, FuzzySet, FuzzyPoint, leq, membership
from fcs.separation.verdict import Verdict
from fcs.space.closure_space import FuzzyClosureSpace, FinitelyGeneratedOperator, compile_points
from fcs.utils.errors import StructuralError


class SpaceMap:
    def __init__(self, source: FuzzyClosureSpace, target: FuzzyClosureSpace, ground: Mapping[str, str]):
        if source.chain != target.chain:
            raise StructuralError(f"映射两端的链不一致: {source.chain} vs {target.chain}")
        ground = dict(ground)
        for x in source.universe:
            if x not in ground:
                raise StructuralError(f"映射在元素 {x} 上没有定义")
            if ground[x] not in target.universe:
                raise StructuralError(f"映射值 {ground[x]} 不在目标论域中")
        if len(ground) != len(source.universe):
            raise StructuralError("映射包含源论域之外的元素")
        self.source = source
        self.target = target
        self.ground: Dict[str, str] = ground

    def __call__(self, x: str) -> str:
        return self.ground[x]

    def is_bijective(self) -> bool:
        return len(self.source.universe) == len(self.target.universe) \
            and set(self.ground.values()) == set(self.target.universe)

    def __repr__(self):
        pairs = ", ".join(f"{x}->{y}" for x, y in self.ground.items())
        return f"SpaceMap({pairs})"


def identity_map(s: FuzzyClosureSpace) -> SpaceMap:
    return SpaceMap(s, s, {x: x for x in s.universe})


def image(m: SpaceMap, g: FuzzySet) -> FuzzySet:
    """θ(g)(y) = max{g(x) : θ(x) = y}，原像为空时取 0"""
    target = m.target
    grades = [0] * len(target.universe)
    for x, k in zip(g.universe.elements, g.grades):
        i = target.universe.position(m.ground[x])
        if k > grades[i]:
            grades[i] = k
    return FuzzySet(target.universe, target.chain, grades)


def image_point(m: SpaceMap, p: FuzzyPoint) -> FuzzyPoint:
    return FuzzyPoint(m.ground[p.support], p.value)


def preimage(m: SpaceMap, h: FuzzySet) -> FuzzySet:
    """θ⁻¹(h)(x) = h(θ(x))"""
    source = m.source
    return FuzzySet(source.universe, source.chain, [h.grade(m.ground[x]) for x in source.universe])


def is_cf_continuous(m: SpaceMap) -> Verdict:
    """θ(c(f)) <= d(θ(f)) 对全部 f 成立"""
    for f in m.source.sets():
        if not leq(image(m, m.source.closure(f)), m.target.closure(image(m, f))):
            return Verdict.fail('continuous', f=f)
    return Verdict.ok('continuous')


def is_cf_continuous_at(m: SpaceMap, p: FuzzyPoint) -> Verdict:
    """
    在模糊点 p 处连续：p ∈ c(f) 蕴含 θ(p) <= d(θ(f))。
    定义里 ∈ 与 <= 混用，这里都按 λ <= 支撑处取值理解。
    """
    q = image_point(m, p)
    for f in m.source.sets():
        if membership(p, m.source.closure(f)) and not membership(q, m.target.closure(image(m, f))):
            return Verdict.fail('continuous_at', point=p, f=f)
    return Verdict.ok('continuous_at')


def continuity_via_preimage(m: SpaceMap) -> Verdict:
    """c(θ⁻¹(g)) <= θ⁻¹(d(g)) 对目标上全部 g 成立"""
    for g in m.target.sets():
        if not leq(m.source.closure(preimage(m, g)), preimage(m, m.target.closure(g))):
            return Verdict.fail('continuous_preimage', g=g)
    return Verdict.ok('continuous_preimage')


def preimage_preserves_open(m: SpaceMap) -> bool:
    """开集的原像是开集（闭集的原像是闭集，两者都检查）"""
    for g in m.target.open_sets():
        if not m.source.is_open(preimage(m, g)):
            return False
    for g in m.target.closed_sets():
        if not m.source.is_closed(preimage(m, g)):
            return False
    return True


def inverse(m: SpaceMap) -> SpaceMap:
    if not m.is_bijective():
        raise StructuralError(f"{m} 不是双射，没有逆映射")
    return SpaceMap(m.target, m.source, {y: x for x, y in m.ground.items()})


def compose(first: SpaceMap, second: SpaceMap) -> SpaceMap:
    """先 first 后 second"""
    if first.target.universe != second.source.universe:
        raise StructuralError("复合映射的中间论域不一致")
    return SpaceMap(first.source, second.target, {x: second.ground[y] for x, y in first.ground.items()})


def is_cf_homeomorphism(m: SpaceMap) -> Verdict:
    """双射且 θ(c(f)) = d(θ(f)) 对全部 f 成立"""
    if not m.is_bijective():
        return Verdict.fail('homeomorphism', reason='not bijective')
    for f in m.source.sets():
        if image(m, m.source.closure(f)) != m.target.closure(image(m, f)):
            return Verdict.fail('homeomorphism', f=f)
    return Verdict.ok('homeomorphism')


def interior_commutes(m: SpaceMap) -> Verdict:
    """θ(int_X(f)) = int_Y(θ(f))"""
    for f in m.source.sets():
        if image(m, m.source.interior(f)) != m.target.interior(image(m, f)):
            return Verdict.fail('interior_commutes', f=f)
    return Verdict.ok('interior_commutes')


def relabel(s: FuzzyClosureSpace, renaming: Mapping[str, str]) -> Tuple[FuzzyClosureSpace, SpaceMap]:
    """按 renaming 改名得到同构副本，并返回从 s 到副本的双射"""
    universe = Universe(renaming[x] for x in s.universe)
    compiled = compile_points(s)
    entries = {}
    for (x, k), value in compiled.operator.entries.items():
        renamed = FuzzySet.from_mapping(universe, s.chain, {renaming[e]: v for e, v in value.to_mapping().items()})
        entries[(renaming[x], k)] = renamed
    copy = FuzzyClosureSpace(universe, s.chain, FinitelyGeneratedOperator(universe, s.chain, entries))
    copy.validated = s.validated
    return copy, SpaceMap(s, copy, renaming)
