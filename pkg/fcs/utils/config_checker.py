import os

from fcs.utils.log import logger, DEFAULT_MAX_BYTES, DEFAULT_BACKUP_COUNT

# 整数型配置项及其默认值
INT_ENV_VARS = {
    "FCS_MAX_CARRIER": 200000,
    "FCS_TABLE_MAX_ENTRIES": 1000000,
    "FCS_WORKERS": 1,
    "FCS_LOG_MAX_BYTES": DEFAULT_MAX_BYTES,
    "FCS_LOG_BACKUP_COUNT": DEFAULT_BACKUP_COUNT,
}

FLAG_ENV_VARS = {"FCS_CROSS_CHECK"}

LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
LOG_LEVEL_VARS = ("FCS_LOG_LEVEL", "FCS_LOG_CONSOLE_LEVEL")


def check_int_vars() -> list:
    """检查整数型配置项，返回有问题的变量名"""
    invalid = []
    for var, default in INT_ENV_VARS.items():
        value = os.getenv(var)
        if value is None:
            logger.info(f"{var} 未设置，使用默认值 {default}")
            continue
        try:
            if int(value) < 1:
                raise ValueError(value)
        except ValueError:
            logger.error(f"{var} 应为正整数，当前值: {value!r}")
            invalid.append(var)
    return invalid


def check_flags() -> list:
    invalid = []
    for var in FLAG_ENV_VARS:
        value = os.getenv(var)
        if value is not None and value not in ("0", "1"):
            logger.error(f"{var} 只能是 0 或 1，当前值: {value!r}")
            invalid.append(var)
    return invalid


def check_log_level() -> list:
    invalid = []
    for var in LOG_LEVEL_VARS:
        level = os.getenv(var)
        if level is not None and level.upper() not in LOG_LEVELS:
            logger.warn(f"{var} 值错误，应为 {sorted(LOG_LEVELS)} 之一，当前按 INFO 处理。")
            invalid.append(var)
    return invalid


def check_counterexample_dir() -> list:
    directory = os.getenv("FCS_COUNTEREXAMPLE_DIR", "data/counterexamples")
    if os.path.exists(directory) and not os.path.isdir(directory):
        logger.error(f"FCS_COUNTEREXAMPLE_DIR 指向的 {directory} 不是目录")
        return ["FCS_COUNTEREXAMPLE_DIR"]
    return []


def check_config() -> bool:
    """主检查入口，全部通过返回 True"""
    logger.info("开始检查配置项...")
    invalid = check_int_vars() + check_flags() + check_log_level() + check_counterexample_dir()
    if invalid:
        logger.warn(f"以下配置项有问题: {', '.join(invalid)}")
    else:
        logger.info("所有配置项均有效。")
    logger.info("配置项检查完成。")
    return not invalid
