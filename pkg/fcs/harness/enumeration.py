"""
有限生成空间的枚举与随机生成。

有限生成算子由每个模糊点的闭包决定。逐元素看，一个元素 e 的全部点闭包
c(e_{1/D}) <= ... <= c(e_1) 构成一条单调链，且 c(e_{k/D})(e) >= k/D；
链在每个坐标上独立，都是 {0..D} 中长度为 D 的不减序列。
"""
import functools
import itertools
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from fcs.corpus.examples import generic_names
from fcs.lattice.chain_lattice import Chain, Universe, FuzzySet, check_budget
from fcs.space.closure_space import FuzzyClosureSpace, FinitelyGeneratedOperator, as_table, validate
from fcs.space.fuzzy_maps import SpaceMap
from fcs.space.fuzzy_topology import FuzzyTopology, generated_topology

Grades = Tuple[int, ...]


@functools.lru_cache(maxsize=None)
def monotone_sequences(d: int, diagonal: bool) -> Tuple[Grades, ...]:
    """{0..d} 上长度为 d 的不减序列；diagonal 为 True 时还要求第 k 项 >= k"""
    sequences = itertools.combinations_with_replacement(range(d + 1), d)
    if diagonal:
        return tuple(seq for seq in sequences if all(a >= k for k, a in enumerate(seq, start=1)))
    return tuple(sequences)


def _element_chains(position: int, n: int, d: int) -> List[Tuple[Grades, ...]]:
    """元素 position 的全部点闭包链，每条链是 D 个刻度元组（第 k 个即 c(e_{k/D})）"""
    coordinates = [monotone_sequences(d, j == position) for j in range(n)]
    return [tuple(zip(*columns)) for columns in itertools.product(*coordinates)]


def fg_count(n: int, d: int) -> int:
    """有限生成空间的个数：各坐标不减序列个数之积"""
    free, diagonal = len(monotone_sequences(d, False)), len(monotone_sequences(d, True))
    return (diagonal * free ** (n - 1)) ** n


def space_from_chains(universe: Universe, chain: Chain, chains: Sequence[Tuple[Grades, ...]]) -> FuzzyClosureSpace:
    entries = {}
    for e, point_chain in zip(universe, chains):
        for k, grades in enumerate(point_chain, start=1):
            entries[(e, k)] = FuzzySet(universe, chain, grades)
    return FuzzyClosureSpace(universe, chain, FinitelyGeneratedOperator(universe, chain, entries)).ensure_valid()


def enumerate_fg_spaces(n: int, d: int, universe: Optional[Universe] = None) -> Iterator[FuzzyClosureSpace]:
    """
    确定地逐个产生 |X|=n、分母为 d 的全部有限生成空间，每个恰好一次。
    顺序：第一个元素的链为最高位，链内按字典序。
    """
    universe = universe or Universe(generic_names(n))
    if len(universe) != n:
        raise ValueError(f"论域大小 {len(universe)} 与 n={n} 不一致")
    check_budget(f"enumerate_fg_spaces n={n} D={d}", fg_count(n, d))
    chain = Chain(d)
    per_element = [_element_chains(i, n, d) for i in range(n)]
    for chains in itertools.product(*per_element):
        yield space_from_chains(universe, chain, chains)


def brute_force_fg_count(n: int, d: int) -> int:
    """
    对照：把每个模糊点的闭包取遍全部模糊集，逐个物化成表算子并按三条公理筛选。
    规模为 (D+1)^(n·n·D)，只用于极小的 n、D。
    """
    universe, chain = Universe(generic_names(n)), Chain(d)
    all_grades = list(itertools.product(range(d + 1), repeat=n))
    point_keys = [(e, k) for e in universe for k in chain.positive_grades()]
    check_budget(f"brute_force_fg_count n={n} D={d}", len(all_grades) ** len(point_keys))
    count = 0
    for assignment in itertools.product(all_grades, repeat=len(point_keys)):
        entries = {key: FuzzySet(universe, chain, grades) for key, grades in zip(point_keys, assignment)}
        space = FuzzyClosureSpace(universe, chain, FinitelyGeneratedOperator(universe, chain, entries))
        if validate(as_table(space)).passed:
            count += 1
    return count


def random_fg_space(n: int, d: int, seed: int, rng: Optional[random.Random] = None) -> FuzzyClosureSpace:
    """
    在全部有限生成空间上均匀抽样：每个 (元素, 坐标) 独立地均匀选一条不减序列，
    积上的均匀分布即算子上的均匀分布。同一个 seed 得到同一个空间。
    """
    rng = rng or random.Random(seed)
    universe, chain = Universe(generic_names(n)), Chain(d)
    chains = []
    for i in range(n):
        columns = [rng.choice(monotone_sequences(d, i == j)) for j in range(n)]
        chains.append(tuple(zip(*columns)))
    return space_from_chains(universe, chain, chains)


def random_fg_spaces(n: int, d: int, count: int, seed: int) -> List[FuzzyClosureSpace]:
    rng = random.Random(seed)
    return [random_fg_space(n, d, seed, rng) for _ in range(count)]


def random_map(source: FuzzyClosureSpace, target: FuzzyClosureSpace, rng: random.Random) -> SpaceMap:
    elements = list(target.universe)
    return SpaceMap(source, target, {x: rng.choice(elements) for x in source.universe})


def random_bijection(source: FuzzyClosureSpace, target: FuzzyClosureSpace, rng: random.Random) -> SpaceMap:
    elements = list(target.universe)
    if len(elements) != len(source.universe):
        raise ValueError("双射两端的论域大小不一致")
    rng.shuffle(elements)
    return SpaceMap(source, target, dict(zip(source.universe, elements)))


def random_topology(n: int, d: int, rng: random.Random, generators: int = 3) -> FuzzyTopology:
    """由若干随机模糊集生成的 Chang 拓扑"""
    universe, chain = Universe(generic_names(n)), Chain(d)
    family = [FuzzySet(universe, chain, [rng.randint(0, d) for _ in range(n)]) for _ in range(generators)]
    return generated_topology(universe, chain, family)
