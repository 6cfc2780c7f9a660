from typing import Dict, List, Tuple

from fcs.separation.deciders import DECIDERS
from fcs.separation.verdict import Verdict
from fcs.space.closure_space import FuzzyClosureSpace
from fcs.utils.errors import DeciderInconsistencyError
from fcs.utils.log import logger

REPORT_AXIOMS = ('cft0', 'cft1', 'cfts', 'cft2', 'cf_urysohn', 'cf_regular', 'cf_regular_mashhour',
                 'cf_normal', 'cft3', 'cft4')

# (前件, 后件)：每个空间上都必须成立的蕴含
IMPLICATIONS: Tuple[Tuple[str, str], ...] = (
    ('cfts', 'cft1'),
    ('cft1', 'cft0'),
    ('cft2', 'cft1'),
    ('cf_urysohn', 'cft2'),
    ('cft3', 'cft2'),
    ('cft4', 'cft3'),
    ('cf_regular_mashhour', 'cf_regular'),
)

LABELS = {
    'cft0': 'ČFT0',
    'cft1': 'ČFT1',
    'cfts': 'ČFTs',
    'cft2': 'ČFT2',
    'cf_urysohn': 'ČF-Urysohn',
    'cf_regular': 'ČF-regular',
    'cf_regular_mashhour': 'Mashhour-regular',
    'cf_normal': 'ČF-normal',
    'cft3': 'ČFT3',
    'cft4': 'ČFT4',
}


class SeparationReport:
    def __init__(self, verdicts: Dict[str, Verdict]):
        self.verdicts = verdicts

    def __getitem__(self, axiom: str) -> Verdict:
        return self.verdicts[axiom]

    def holds(self, axiom: str) -> bool:
        return self.verdicts[axiom].holds

    def violated_implications(self) -> List[Tuple[str, str]]:
        return [(a, b) for a, b in IMPLICATIONS if self.holds(a) and not self.holds(b)]

    def to_dict(self) -> Dict[str, dict]:
        return {axiom: self.verdicts[axiom].to_dict() for axiom in REPORT_AXIOMS}

    def summary(self) -> Dict[str, bool]:
        return {axiom: self.holds(axiom) for axiom in REPORT_AXIOMS}


def classify(s: FuzzyClosureSpace) -> SeparationReport:
    """运行全部判定器，并按蕴含关系检查结果是否自洽"""
    report = SeparationReport({axiom: DECIDERS[axiom](s) for axiom in REPORT_AXIOMS})
    broken = report.violated_implications()
    if broken:
        logger.error(f"classify: {s} 违反蕴含关系 {broken}")
        raise DeciderInconsistencyError(f"判定结果违反蕴含关系: {broken}")
    return report
