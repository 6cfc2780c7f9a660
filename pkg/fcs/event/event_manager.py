import os

from blinker import Signal

from fcs.entity.suite_entity import TheoremResultEntity, CounterexampleEntity
from fcs.utils.log import logger

# 定义全局事件管理器（事件信号）
event_manager = {
    "theorem_checked": Signal(),
    "counterexample_found": Signal(),
}


# 定义事件处理函数
def on_theorem_checked(entity: TheoremResultEntity):
    status = "通过" if entity.passed else "失败"
    message = f"定理 {entity.theorem_id} [{entity.tier}] {status}，检查 {entity.checked} 项"
    if entity.passed:
        logger.info(message)
    else:
        logger.warn(f"{message}，见证: {entity.witness}")


def on_counterexample_found(entity: CounterexampleEntity):
    logger.info(f"发现反例: {entity.source} {entity.label}")
    if not entity.output_dir:
        return
    os.makedirs(entity.output_dir, exist_ok=True)
    for i, document in enumerate(entity.documents):
        path = os.path.join(entity.output_dir, f"{entity.file_stem}_{i}.json")
        with open(path, 'w', encoding='utf-8') as f:
            f.write(document)
        logger.info(f"反例文档已写入 {path}")


# 连接事件处理函数到事件信号
event_manager["theorem_checked"].connect(on_theorem_checked)
event_manager["counterexample_found"].connect(on_counterexample_found)
