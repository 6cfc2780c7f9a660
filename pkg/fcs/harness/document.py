"""
空间文档：JSON 格式的读写。

隶属度一律写成精确分数字符串（"3/4"），键的顺序固定为论域顺序、再按刻度升序，
因此同一个空间总是序列化成同一段文本。
"""
import json
import os
from typing import Any, Dict, Mapping, Union

from jsonschema import Draft202012Validator

from fcs.lattice.chain_lattice import Chain, Universe, FuzzySet, format_level
from fcs.space.closure_space import FuzzyClosureSpace, NamedOperator, TableOperator, \
    FinitelyGeneratedOperator, compile_points, validate
from fcs.space.fuzzy_maps import SpaceMap
from fcs.utils.errors import DocumentError, SpaceValidationError, StructuralError
from fcs.utils.log import logger

FORMAT_VERSION = 1

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), '..', '..', 'doc', 'space_document.schema.json')

_validator = None


def get_validator() -> Draft202012Validator:
    global _validator
    if _validator is None:
        with open(SCHEMA_PATH, 'r', encoding='utf-8') as f:
            _validator = Draft202012Validator(json.load(f))
    return _validator


def set_to_document(f: FuzzySet) -> Dict[str, str]:
    return {e: format_level(v) for e, v in f.to_mapping().items()}


def set_from_document(universe: Universe, chain: Chain, memberships: Mapping[str, str]) -> FuzzySet:
    return FuzzySet.from_mapping(universe, chain, memberships)


def space_to_document(s: FuzzyClosureSpace) -> Dict[str, Any]:
    """Named 与 Table 原样保存，其余表示（子空间、和、积等）先编译成有限生成形式"""
    operator = s.operator
    if isinstance(operator, NamedOperator):
        body = {'kind': 'named', 'name': operator.name}
    elif isinstance(operator, TableOperator):
        body = {'kind': 'table', 'entries': [
            {'argument': set_to_document(f), 'closure': set_to_document(s.closure(f))} for f in s.sets()]}
    else:
        compiled = compile_points(s).operator
        body = {'kind': 'finitely_generated', 'entries': {
            e: {format_level(s.chain.level(k)): set_to_document(compiled.entry(e, k))
                for k in s.chain.positive_grades()}
            for e in s.universe}}
    return {
        'format': FORMAT_VERSION,
        'universe': list(s.universe.elements),
        'denominator': s.chain.denominator,
        'operator': body,
    }


def _build_operator(universe: Universe, chain: Chain, body: Dict[str, Any]):
    kind = body['kind']
    if kind == 'named':
        return NamedOperator(universe, chain, body['name'])
    if kind == 'table':
        table = {}
        for item in body['entries']:
            argument = set_from_document(universe, chain, item['argument'])
            if argument in table:
                raise StructuralError(f"表算子中 {argument} 重复出现")
            table[argument] = set_from_document(universe, chain, item['closure'])
        return TableOperator(universe, chain, table)
    if kind == 'finitely_generated':
        entries = {}
        for element, levels in body['entries'].items():
            universe.position(element)
            for level, value in levels.items():
                key = (element, chain.grade(level))
                if key in entries:
                    raise StructuralError(f"有限生成算子中 {element} 的刻度 {level} 重复出现")
                entries[key] = set_from_document(universe, chain, value)
        return FinitelyGeneratedOperator(universe, chain, entries)
    raise StructuralError(f"Unknown operator kind: {kind}")


def _check_schema(data: Any):
    errors = sorted(get_validator().iter_errors(data), key=lambda e: list(e.path))
    if errors:
        details = "; ".join(f"{'.'.join(str(p) for p in e.path) or '<root>'}: {e.message}" for e in errors[:20])
        raise DocumentError(f"文档不符合 schema: {details}")


def document_to_space(data: Dict[str, Any]) -> FuzzyClosureSpace:
    """从已解析的 JSON 构造空间，校验失败抛 SpaceValidationError"""
    _check_schema(data)
    try:
        universe = Universe(data['universe'])
        chain = Chain(data['denominator'])
        s = FuzzyClosureSpace(universe, chain, _build_operator(universe, chain, data['operator']))
    except StructuralError as e:
        raise DocumentError(str(e))
    report = validate(s)
    if not report.passed:
        raise SpaceValidationError(report)
    return s


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"JSON 语法错误: {e.msg}", line=e.lineno, column=e.colno)


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def parse_space(text: str) -> FuzzyClosureSpace:
    return document_to_space(_load_json(text))


def serialize_space(s: FuzzyClosureSpace) -> str:
    return dumps(space_to_document(s))


def map_to_document(m: SpaceMap) -> Dict[str, Any]:
    data = space_to_document(m.source)
    data['map'] = {x: m.ground[x] for x in m.source.universe}
    if m.target is not m.source:
        data['target'] = space_to_document(m.target)
    return data


def parse_map(text: str) -> SpaceMap:
    """映射文档：源空间文档加 "map" 块；"target" 缺省时目标即源空间"""
    data = _load_json(text)
    if not isinstance(data, dict) or 'map' not in data:
        raise DocumentError("映射文档缺少 map 块")
    ground = data.pop('map')
    target_data = data.pop('target', None)
    source = document_to_space(data)
    target = document_to_space(target_data) if target_data is not None else source
    try:
        return SpaceMap(source, target, ground)
    except StructuralError as e:
        raise DocumentError(str(e))


def serialize_map(m: SpaceMap) -> str:
    return dumps(map_to_document(m))


def load(path: str) -> str:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return f.read()
    except OSError as e:
        raise DocumentError(f"无法读取文件 {path}: {e.strerror}")


def load_space(path: str) -> FuzzyClosureSpace:
    s = parse_space(load(path))
    logger.debug(f"load_space: {path} -> {s}")
    return s


def load_map(path: str) -> SpaceMap:
    return parse_map(load(path))


def save(obj: Union[FuzzyClosureSpace, SpaceMap], path: str):
    text = serialize_map(obj) if isinstance(obj, SpaceMap) else serialize_space(obj)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)


def parse_set_expression(s: FuzzyClosureSpace, expr: str) -> FuzzySet:
    """
    命令行里的模糊集写法："0"、"1"，或 "x:1/2,y:1"（未列出的元素为 0）。
    """
    expr = expr.strip()
    if expr in ('0', ''):
        return s.zero()
    if expr == '1':
        return s.one()
    memberships = {}
    for part in expr.split(','):
        element, sep, level = part.partition(':')
        if not sep:
            raise DocumentError(f"无法解析模糊集表达式: {expr!r}")
        memberships[element.strip()] = level.strip()
    try:
        return s.fuzzy_set(memberships)
    except StructuralError as e:
        raise DocumentError(str(e))
