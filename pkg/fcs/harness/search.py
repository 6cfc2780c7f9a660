"""
非蕴含的反例搜索：按 n 外层、D 内层的顺序枚举有限生成空间，返回第一个满足性质的空间。
"""
import functools
import itertools
from typing import Callable, Dict, Iterator, List, Optional

from fcs.corpus.examples import cycle4_pqrs
from fcs.entity.suite_entity import CounterexampleEntity
from fcs.event.event_manager import event_manager
from fcs.harness.document import serialize_space, serialize_map
from fcs.harness.enumeration import enumerate_fg_spaces
from fcs.separation.deciders import decide
from fcs.space.closure_space import FuzzyClosureSpace, associated_topology
from fcs.space.fuzzy_maps import SpaceMap, is_cf_continuous, preimage_preserves_open
from fcs.space.fuzzy_topology import ft_axiom
from fcs.utils.log import logger
from fcs.utils.queue import default_workers, handle_queue

KIND_SPACE = 'space'
KIND_MAP = 'map'


def _holds(s: FuzzyClosureSpace, axiom: str) -> bool:
    return decide(s, axiom).holds


def _tau(s: FuzzyClosureSpace, which: str) -> bool:
    return ft_axiom(associated_topology(s), which).holds


class SearchProperty:
    def __init__(self, property_id: str, description: str, predicate: Callable, kind: str = KIND_SPACE):
        self.property_id = property_id
        self.description = description
        self.predicate = predicate
        self.kind = kind


PROPERTIES: Dict[str, SearchProperty] = {p.property_id: p for p in (
    SearchProperty('cft0_not_cft1', 'ČFT0 但不是 ČFT1',
                   lambda s: _holds(s, 'cft0') and not _holds(s, 'cft1')),
    SearchProperty('cft1_not_cft2', 'ČFT1 但不是 ČFT2（有限空间上不存在）',
                   lambda s: _holds(s, 'cft1') and not _holds(s, 'cft2')),
    SearchProperty('normal_not_regular', 'ČF-normal 但不是 ČF-regular',
                   lambda s: _holds(s, 'cf_normal') and not _holds(s, 'cf_regular')),
    SearchProperty('regular_not_ts', 'ČF-regular 但不是 ČFTs',
                   lambda s: _holds(s, 'cf_regular') and not _holds(s, 'cfts')),
    SearchProperty('cft0_not_tau_ft0', 'ČFT0 但 τ(c) 不是 FT0',
                   lambda s: _holds(s, 'cft0') and not _tau(s, 'FT0')),
    SearchProperty('tau_normal_not_normal', 'τ(c) 是 normal 但空间不是 ČF-normal',
                   lambda s: _tau(s, 'normal') and not _holds(s, 'cf_normal')),
    SearchProperty('preimage_open_not_continuous', '开集原像为开但不 ČF 连续的映射（4-环自映射）',
                   lambda m: preimage_preserves_open(m) and not is_cf_continuous(m).holds, KIND_MAP),
)}


def get_property(property_id: str) -> SearchProperty:
    prop = PROPERTIES.get(property_id)
    if prop is None:
        raise ValueError(f"Unknown property: {property_id}")
    return prop


class SearchResult:
    def __init__(self, property_id: str, found: bool, examined: int, document: Optional[str] = None,
                 n: int = None, d: int = None, index: int = None):
        self.property_id = property_id
        self.found = found
        self.examined = examined
        self.document = document
        self.n = n
        self.d = d
        self.index = index

    def to_dict(self) -> dict:
        result = {'property': self.property_id, 'found': self.found, 'examined': self.examined}
        if self.found:
            result.update({'n': self.n, 'd': self.d, 'index': self.index})
        return result


def _matches(property_id: str, candidate) -> bool:
    return bool(PROPERTIES[property_id].predicate(candidate))


def _self_maps(d: int) -> Iterator[SpaceMap]:
    space = cycle4_pqrs(d)
    elements = list(space.universe)
    for values in itertools.product(elements, repeat=len(elements)):
        yield SpaceMap(space, space, dict(zip(elements, values)))


def _candidates(prop: SearchProperty, max_n: int, max_d: int):
    """按搜索顺序产生 (n, d, 候选列表)；映射搜索固定在 4-环上，只遍历 D"""
    if prop.kind == KIND_MAP:
        for d in range(1, max_d + 1):
            yield 4, d, list(_self_maps(d))
        return
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            yield n, d, list(enumerate_fg_spaces(n, d))


def _first_match(property_id: str, candidates: List, workers: int) -> Optional[int]:
    if workers <= 1:
        return next((i for i, c in enumerate(candidates) if _matches(property_id, c)), None)
    flags = handle_queue(functools.partial(_matches, property_id), candidates, workers)
    return next((i for i, flag in enumerate(flags) if flag), None)


def search_counterexample(property_id: str, max_n: int, max_d: int, workers: int = None,
                          output_dir: str = None) -> SearchResult:
    """
    返回枚举序下第一个满足性质的空间（或映射），找不到时给出已检查的个数。
    预算超限的 BudgetExceededError 直接抛给调用方。
    """
    prop = get_property(property_id)
    workers = workers or default_workers()
    examined = 0
    for n, d, candidates in _candidates(prop, max_n, max_d):
        index = _first_match(property_id, candidates, workers)
        if index is None:
            examined += len(candidates)
            continue
        examined += index + 1
        witness = candidates[index]
        document = serialize_map(witness) if prop.kind == KIND_MAP else serialize_space(witness)
        logger.info(f"search {property_id}: n={n} D={d} 第 {index} 个候选满足性质")
        event_manager["counterexample_found"].send(
            CounterexampleEntity('search', property_id, [document], {'n': n, 'd': d, 'index': index}, output_dir))
        return SearchResult(property_id, True, examined, document, n, d, index)
    logger.info(f"search {property_id}: n<={max_n} D<={max_d} 范围内穷尽 {examined} 个候选，无反例")
    return SearchResult(property_id, False, examined)
