class TheoremResultEntity:
    def __init__(self, theorem_id: str, description: str, tier: str, checked: int, passed: bool,
                 witness: dict = None, documents: list = None):
        self.theorem_id = theorem_id
        self.description = description
        self.tier = tier
        self.checked = checked
        self.passed = passed
        self.witness = witness
        self.documents = documents or []

    def to_dict(self) -> dict:
        result = {
            'theorem': self.theorem_id,
            'tier': self.tier,
            'checked': self.checked,
            'passed': self.passed,
        }
        if not self.passed:
            result['witness'] = self.witness
            result['documents'] = self.documents
        return result


class CounterexampleEntity:
    def __init__(self, source: str, label: str, documents: list, witness: dict = None, output_dir: str = None):
        self.source = source
        self.label = label
        self.documents = documents
        self.witness = witness
        self.output_dir = output_dir

    @property
    def file_stem(self):
        # theorem/tier 或 property 名，去掉不能出现在文件名里的字符
        return "".join(ch if ch.isalnum() or ch in '-_' else '_' for ch in f"{self.source}_{self.label}")
