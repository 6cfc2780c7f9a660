"""
定理套件：把 theorems.THEOREMS 中的每条定理当作全称性质，在穷举层与随机层上逐一检查。

失败是数据而不是异常：每个失败带一个见证和可重放的空间文档。
同一个 SuiteConfig（含 seed）总得到逐字节相同的报告；耗时只写日志和可选的旁路文件。
"""
import functools
import itertools
import json
import os
import random
import time
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
import yaml
from tqdm import tqdm

from fcs.entity.suite_entity import TheoremResultEntity, CounterexampleEntity
from fcs.event.event_manager import event_manager
from fcs.harness.document import serialize_space
from fcs.harness.enumeration import enumerate_fg_spaces, random_fg_spaces
from fcs.harness.theorems import THEOREMS, Theorem, KIND_SPACE, KIND_PAIR, KIND_FAMILY, \
    TIER_EXHAUSTIVE, TIER_RANDOM, PAIRING_ALL, select_theorems
from fcs.separation.verdict import describe
from fcs.utils.log import logger
from fcs.utils.queue import default_workers, handle_queue
from fcs.utils.reporter import PROJECT_ROOT, render_report

SUITE_CONFIG_FILE = os.path.join(PROJECT_ROOT, "conf", "suite.yml")
DEFAULT_COUNTEREXAMPLE_DIR = "data/counterexamples"

_CONFIG_KEYS = ('exhaustive_n', 'exhaustive_d', 'random_n', 'random_d', 'samples', 'seed', 'pair_samples')

# 各定理的样本量，没有列出的定理取 pair_samples。
# sum_theorems 为抽取的空间数，其余为空间对（或因子对）数
DEFAULT_THEOREM_SAMPLES = {
    'map_characterizations': 100,
    'homeomorphism_characterization': 50,
    'sum_theorems': 30,
    'product_theorems': 50,
    'product_closure_oracles': 16,
    'coarsest_product': 16,
}


class SuiteConfig:
    def __init__(self, exhaustive_n: int = 2, exhaustive_d: int = 2, random_n: int = 3, random_d: int = 4,
                 samples: int = 500, seed: int = 20240601, pair_samples: int = 30,
                 theorem_samples: Optional[Dict[str, int]] = None,
                 theorems: Sequence[str] = None, workers: int = None, counterexample_dir: Optional[str] = None,
                 progress: bool = False):
        self.exhaustive_n = exhaustive_n
        self.exhaustive_d = exhaustive_d
        self.random_n = random_n
        self.random_d = random_d
        self.samples = samples
        self.seed = seed
        self.pair_samples = pair_samples
        self.theorem_samples = dict(DEFAULT_THEOREM_SAMPLES if theorem_samples is None else theorem_samples)
        self.theorems = list(theorems or [])
        self.workers = workers or default_workers()
        self.counterexample_dir = counterexample_dir
        self.progress = progress

    @classmethod
    def load(cls, config_file: str = SUITE_CONFIG_FILE, **overrides) -> 'SuiteConfig':
        """读取 conf/suite.yml，再用非 None 的 overrides 覆盖"""
        values: Dict[str, Any] = {}
        if os.path.exists(config_file):
            with open(config_file, "r", encoding="utf-8") as file:
                values.update((yaml.safe_load(file) or {}).get('suite') or {})
        else:
            logger.warn(f"套件配置文件 {config_file} 不存在，使用内置默认值")
        theorem_samples = overrides.pop('theorem_samples', None)
        values.update({k: v for k, v in overrides.items() if v is not None})
        if theorem_samples:
            merged = dict(values.get('theorem_samples') or DEFAULT_THEOREM_SAMPLES)
            merged.update(theorem_samples)
            values['theorem_samples'] = merged
        values.setdefault('counterexample_dir', os.getenv('FCS_COUNTEREXAMPLE_DIR', DEFAULT_COUNTEREXAMPLE_DIR))
        return cls(**values)

    def samples_for(self, theorem_id: str) -> int:
        return self.theorem_samples.get(theorem_id, self.pair_samples)

    def to_dict(self) -> Dict[str, Any]:
        # workers、输出目录和进度条不影响结果，不进报告
        result = {key: getattr(self, key) for key in _CONFIG_KEYS}
        result['theorem_samples'] = dict(sorted(self.theorem_samples.items()))
        result['theorems'] = list(self.theorems)
        return result


class SuiteReport:
    def __init__(self, config: SuiteConfig, results: List[TheoremResultEntity], elapsed: float = 0.0):
        self.config = config
        self.results = results
        self.elapsed = elapsed

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[TheoremResultEntity]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'config': self.config.to_dict(),
            'passed': self.passed,
            'results': [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False, sort_keys=True) + "\n"

    def summary_frame(self) -> pd.DataFrame:
        rows = [{'theorem': r.theorem_id, 'tier': r.tier, 'checked': r.checked, 'passed': r.passed}
                for r in self.results]
        return pd.DataFrame(rows, columns=['theorem', 'tier', 'checked', 'passed'])

    def to_markdown(self) -> str:
        rows = [dict(r.to_dict(), witness=json.dumps(r.witness, ensure_ascii=False, sort_keys=True))
                for r in self.results]
        return render_report('suite_report', config=self.config.to_dict(), passed=self.passed, results=rows)

    def timing(self) -> Dict[str, Any]:
        return {'elapsed_seconds': round(self.elapsed, 3), 'workers': self.config.workers}


def _check_item(theorem_id: str, item) -> Optional[Dict]:
    """worker 入口：item 为 (kind, payload, seed)"""
    theorem = THEOREMS[theorem_id]
    kind, payload, seed = item
    if kind == KIND_SPACE:
        return theorem.check(payload)
    if kind == KIND_PAIR:
        return theorem.check(payload[0], payload[1], random.Random(seed))
    if kind == KIND_FAMILY:
        return theorem.check(payload)
    return theorem.check(random.Random(seed), payload)


def _items(theorem: Theorem, spaces: List, cfg: SuiteConfig, tier_seed: int) -> List:
    kind = theorem.kind
    size = cfg.samples_for(theorem.theorem_id)
    if kind == KIND_SPACE:
        return [(kind, s, None) for s in spaces]
    if kind == KIND_PAIR:
        rng = random.Random(tier_seed)
        if not spaces:
            pairs = []
        elif theorem.pairing == PAIRING_ALL:
            chosen = sorted(rng.sample(range(len(spaces)), min(size, len(spaces))))
            pairs = [(spaces[i], spaces[j]) for i, j in itertools.combinations_with_replacement(chosen, 2)]
        else:
            pairs = [(rng.choice(spaces), rng.choice(spaces)) for _ in range(size)]
        return [(kind, pair, tier_seed + k) for k, pair in enumerate(pairs)]
    if kind == KIND_FAMILY:
        return [(kind, spaces, None)]
    return [(kind, size, tier_seed)]


def _first_failure(theorem_id: str, items: List, workers: int):
    """返回 (检查数, 失败下标, 见证)；串行遇到失败即停，并行全部检查后取最小下标，两者结果一致"""
    if workers <= 1:
        for i, item in enumerate(items):
            witness = _check_item(theorem_id, item)
            if witness is not None:
                return i + 1, i, witness
        return len(items), None, None
    witnesses = handle_queue(functools.partial(_check_item, theorem_id), items, workers)
    for i, witness in enumerate(witnesses):
        if witness is not None:
            return i + 1, i, witness
    return len(items), None, None


def _split_witness(witness: Dict) -> Tuple[Dict, List[str]]:
    spaces = witness.get('spaces') or []
    body = {key: describe(value) for key, value in witness.items() if key != 'spaces'}
    return body, [serialize_space(s) for s in spaces]


def run_theorem_suite(cfg: SuiteConfig) -> SuiteReport:
    started = time.time()
    theorems = select_theorems(cfg.theorems)
    tier_spaces: Dict[str, List] = {}

    def spaces_for(tier: str) -> List:
        if tier not in tier_spaces:
            if tier == TIER_EXHAUSTIVE:
                tier_spaces[tier] = list(enumerate_fg_spaces(cfg.exhaustive_n, cfg.exhaustive_d))
            else:
                tier_spaces[tier] = random_fg_spaces(cfg.random_n, cfg.random_d, cfg.samples, cfg.seed)
            logger.info(f"{tier} 层共 {len(tier_spaces[tier])} 个空间")
        return tier_spaces[tier]

    tier_seeds = {TIER_EXHAUSTIVE: cfg.seed, TIER_RANDOM: cfg.seed + 1000003}
    results = []
    for theorem in tqdm(theorems, desc="theorems", disable=not cfg.progress):
        for tier in theorem.tiers:
            spaces = spaces_for(tier) if theorem.kind in (KIND_SPACE, KIND_PAIR, KIND_FAMILY) else []
            items = _items(theorem, spaces, cfg, tier_seeds[tier])
            checked, index, witness = _first_failure(theorem.theorem_id, items, cfg.workers)
            if witness is None:
                result = TheoremResultEntity(theorem.theorem_id, theorem.description, tier, checked, True)
            else:
                body, documents = _split_witness(witness)
                body['index'] = index
                result = TheoremResultEntity(theorem.theorem_id, theorem.description, tier, checked, False,
                                             witness=body, documents=documents)
                event_manager["counterexample_found"].send(
                    CounterexampleEntity(theorem.theorem_id, tier, documents, body, cfg.counterexample_dir))
            event_manager["theorem_checked"].send(result)
            results.append(result)

    elapsed = time.time() - started
    report = SuiteReport(cfg, results, elapsed)
    logger.info(f"定理套件完成: {len(results)} 项，{len(report.failures)} 项失败，耗时 {elapsed:.1f}s")
    return report
