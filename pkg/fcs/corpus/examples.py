"""
例子与反例语料。无限论域 (ℕ, ℤ) 的例子用有限的路径/环代替，
它们声称的性质一律由判定器重新验证，不在这里假设。
"""
import string
from typing import Callable, Dict, List, Union

from fcs.lattice.chain_lattice import Chain, Universe, FuzzySet, FuzzyPoint, complement, enumerate_sets, leq
from fcs.space.closure_space import FuzzyClosureSpace, TableOperator, FinitelyGeneratedOperator
from fcs.space.fuzzy_maps import SpaceMap
from fcs.utils.errors import StructuralError
from fcs.utils.log import logger

XYZ = ['x', 'y', 'z', 'u', 'v', 'w']


def generic_names(n: int) -> List[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"e{i}" for i in range(n)]


def special_names(n: int) -> List[str]:
    """第一个元素是特殊点 x，其余依次为 y, z, ..."""
    if n <= len(XYZ):
        return XYZ[:n]
    return ['x'] + [f"y{i}" for i in range(1, n)]


def _require(condition: bool, message: str):
    if not condition:
        raise StructuralError(message)


def _generated(universe: Universe, chain: Chain, closure_of: Callable[[str, int], FuzzySet]) -> FuzzyClosureSpace:
    entries = {(e, k): closure_of(e, k) for e in universe for k in chain.positive_grades()}
    space = FuzzyClosureSpace(universe, chain, FinitelyGeneratedOperator(universe, chain, entries))
    return space.ensure_valid()


def discrete(n: int = 3, d: int = 2) -> FuzzyClosureSpace:
    _require(n >= 1, "n 至少为 1")
    return FuzzyClosureSpace.discrete(Universe(generic_names(n)), Chain(d))


def indiscrete(n: int = 3, d: int = 2) -> FuzzyClosureSpace:
    _require(n >= 1, "n 至少为 1")
    return FuzzyClosureSpace.indiscrete(Universe(generic_names(n)), Chain(d))


def pqr_interior(d: int = 1) -> FuzzyClosureSpace:
    """
    X = {p,q,r}：c(0̲)=0̲；0̲ < f <= 1_{p} 时 c(f)=1_{p,q}；其余为 1̲。
    内部为：int(1̲)=1̲；1̲ > f >= 1_{q,r} 时 int(f)=1_{r}；其余为 0̲。
    """
    universe, chain = Universe(['p', 'q', 'r']), Chain(d)
    only_p = FuzzySet.crisp(universe, chain, ['p'])
    table = {}
    for f in enumerate_sets(universe, chain):
        if f.is_zero():
            table[f] = f
        elif leq(f, only_p):
            table[f] = FuzzySet.crisp(universe, chain, ['p', 'q'])
        else:
            table[f] = FuzzySet.one(universe, chain)
    return FuzzyClosureSpace(universe, chain, TableOperator(universe, chain, table)).ensure_valid()


def cycle3_xyz(d: int = 2) -> FuzzyClosureSpace:
    """c(x_λ)=1_{x,y}，c(y_γ)=1_{y,z}，c(z_ρ)=1_{z,x}：ČFT0，但 τ(c) 不离散"""
    universe, chain = Universe(['x', 'y', 'z']), Chain(d)
    successor = {'x': 'y', 'y': 'z', 'z': 'x'}
    return _generated(universe, chain, lambda e, k: FuzzySet.crisp(universe, chain, [e, successor[e]]))


def cycle4_pqrs(d: int = 1) -> FuzzyClosureSpace:
    """c(x_λ)=1_{x,x+1}，p→q→r→s→p"""
    universe, chain = Universe(['p', 'q', 'r', 's']), Chain(d)
    successor = {'p': 'q', 'q': 'r', 'r': 's', 's': 'p'}
    return _generated(universe, chain, lambda e, k: FuzzySet.crisp(universe, chain, [e, successor[e]]))


def cycle4_rotation(d: int = 1) -> SpaceMap:
    """θ(p)=q, θ(q)=r, θ(r)=s, θ(s)=p；它与 c 交换，是同胚"""
    space = cycle4_pqrs(d)
    return SpaceMap(space, space, {'p': 'q', 'q': 'r', 'r': 's', 's': 'p'})


def cycle4_reflection(d: int = 1) -> SpaceMap:
    """θ(p)=q, θ(q)=p, θ(r)=s, θ(s)=r：不连续，但开集的原像仍是开集"""
    space = cycle4_pqrs(d)
    return SpaceMap(space, space, {'p': 'q', 'q': 'p', 'r': 's', 's': 'r'})


def _numbered(n: int) -> Universe:
    return Universe(str(i) for i in range(n))


def shift_path(n: int = 3, d: int = 2) -> FuzzyClosureSpace:
    """c(x_λ) = x_λ ∨ (x+1)_λ，末端没有后继：c(last_λ) = last_λ"""
    _require(n >= 1, "n 至少为 1")
    universe, chain = _numbered(n), Chain(d)

    def closure_of(e: str, k: int) -> FuzzySet:
        i = int(e)
        support = [e] if i == n - 1 else [e, str(i + 1)]
        return FuzzySet(universe, chain, [k if x in support else 0 for x in universe])

    return _generated(universe, chain, closure_of)


def shift_cycle(n: int = 3, d: int = 2) -> FuzzyClosureSpace:
    """c(x_λ) = x_λ ∨ (x+1)_λ，后继取模 n"""
    _require(n >= 2, "环的长度至少为 2")
    universe, chain = _numbered(n), Chain(d)

    def closure_of(e: str, k: int) -> FuzzySet:
        support = {e, str((int(e) + 1) % n)}
        return FuzzySet(universe, chain, [k if x in support else 0 for x in universe])

    return _generated(universe, chain, closure_of)


def crisp_shift_cycle(n: int = 4, d: int = 1) -> FuzzyClosureSpace:
    """
    c(x_λ) = 1_{x-1,x}，前驱取模 n。此方向下 int(1_{x,x+1}) = 1_{x}，
    且 x_λ 的每个邻域都包含 1_{x,x+1}。
    """
    _require(n >= 3, "环的长度至少为 3")
    universe, chain = _numbered(n), Chain(d)
    return _generated(universe, chain,
                      lambda e, k: FuzzySet.crisp(universe, chain, [str((int(e) - 1) % n), e]))


def urysohn_not_regular(n: int = 2, d: int = 20) -> FuzzyClosureSpace:
    """
    特殊点 x：λ < 1/2 时 c(x_λ) = x_{λ+1/2}，否则 c(x_λ) = x_1；其余点 c(y_λ) = y_λ。
    ČFT1、ČFT2、ČF-Urysohn，但不是 ČF-regular。
    """
    _require(n >= 1, "n 至少为 1")
    _require(d % 20 == 0, f"urysohn_not_regular 要求 D 是 20 的倍数: D={d}")
    universe, chain = Universe(special_names(n)), Chain(d)
    half = d // 2

    def closure_of(e: str, k: int) -> FuzzySet:
        if e != 'x':
            return FuzzyPoint(e, chain.level(k)).as_set(universe, chain)
        target = k + half if k < half else d
        return FuzzyPoint('x', chain.level(target)).as_set(universe, chain)

    return _generated(universe, chain, closure_of)


def singleton_closure(n: int = 2, d: int = 2) -> FuzzyClosureSpace:
    """c(f) = ⋁_{x_λ <= f} x_1：ČF-regular 但不是 ČFTs"""
    _require(n >= 1, "n 至少为 1")
    universe, chain = Universe(generic_names(n)), Chain(d)
    return _generated(universe, chain, lambda e, k: FuzzySet.crisp(universe, chain, [e]))


def two_block_normal(n: int = 3, d: int = 2) -> FuzzyClosureSpace:
    """特殊点 x：c(x_λ) = x_1；其余点 c(y_λ) = Co(x_1)"""
    _require(n >= 1, "n 至少为 1")
    universe, chain = Universe(special_names(n)), Chain(d)
    x1 = FuzzySet.crisp(universe, chain, ['x'])
    return _generated(universe, chain, lambda e, k: x1 if e == 'x' else complement(x1))


def apex_normal(d: int = 1) -> FuzzyClosureSpace:
    """
    X = {a,b,c,w}：c(a_λ)=1_{a,w}，c(b_λ)=1_{b,w}，c(c_λ)=1̲，c(w_λ)=1_{w}。
    非零集合的闭包都含 w，ČF-normal 空成立；开子空间 {a,b,c} 不是 ČF-normal。
    """
    universe, chain = Universe(['a', 'b', 'c', 'w']), Chain(d)
    closures = {'a': ['a', 'w'], 'b': ['b', 'w'], 'c': list(universe.elements), 'w': ['w']}
    return _generated(universe, chain, lambda e, k: FuzzySet.crisp(universe, chain, closures[e]))


EXAMPLES: Dict[str, Callable] = {
    'discrete': lambda n, d: discrete(n or 3, d or 2),
    'indiscrete': lambda n, d: indiscrete(n or 3, d or 2),
    'pqr_interior': lambda n, d: pqr_interior(d or 1),
    'cycle3_xyz': lambda n, d: cycle3_xyz(d or 2),
    'cycle4_pqrs': lambda n, d: cycle4_pqrs(d or 1),
    'cycle4_rotation': lambda n, d: cycle4_rotation(d or 1),
    'cycle4_reflection': lambda n, d: cycle4_reflection(d or 1),
    'shift_path': lambda n, d: shift_path(n or 3, d or 2),
    'shift_cycle': lambda n, d: shift_cycle(n or 3, d or 2),
    'crisp_shift_cycle': lambda n, d: crisp_shift_cycle(n or 4, d or 1),
    'urysohn_not_regular': lambda n, d: urysohn_not_regular(n or 2, d or 20),
    'singleton_closure': lambda n, d: singleton_closure(n or 2, d or 2),
    'two_block_normal': lambda n, d: two_block_normal(n or 3, d or 2),
    'apex_normal': lambda n, d: apex_normal(d or 1),
}

MAP_EXAMPLES = ('cycle4_rotation', 'cycle4_reflection')


def build_example(name: str, n: int = None, d: int = None) -> Union[FuzzyClosureSpace, SpaceMap]:
    """按名字构造例子；n、d 为空时取各例子的默认值"""
    builder = EXAMPLES.get(name)
    if builder is None:
        raise StructuralError(f"Unknown example: {name}")
    result = builder(n, d)
    logger.info(f"build_example: {name} n={n} d={d} -> {result}")
    return result
