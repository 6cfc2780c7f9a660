"""
fcs 的日志：控制台走 stderr（stdout 留给 CLI 的 JSON 结果），另有滚动日志文件。

环境变量：
- FCS_LOG_FILE：日志文件，默认 log/fcs.log；设为空串时只输出到控制台
- FCS_LOG_MAX_BYTES / FCS_LOG_BACKUP_COUNT：单个文件上限（默认 5MB）与保留份数（默认 3）
- FCS_LOG_LEVEL：文件日志级别，默认 INFO
- FCS_LOG_CONSOLE_LEVEL：控制台日志级别，缺省与 FCS_LOG_LEVEL 相同
"""
import logging
import os
from logging.handlers import RotatingFileHandler

DEFAULT_LOG_FILE = "log/fcs.log"
DEFAULT_MAX_BYTES = 5 * 1024 * 1024
DEFAULT_BACKUP_COUNT = 3

# 含进程名，区分套件的 worker
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(processName)s - %(module)s:%(funcName)s:%(lineno)d - %(message)s'


class FcsLogger(logging.Logger):
    """warn 与 error 消息分别加 ⚠️ 与 ❌ 前缀"""

    def warn(self, msg, *args, **kwargs):
        kwargs.setdefault("stacklevel", 2)
        super().warning(f"⚠️ {msg}", *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        kwargs.setdefault("stacklevel", 2)
        super().error(f"❌ {msg}", *args, **kwargs)


def level_from_env(var: str, default: str = "INFO") -> int:
    """无法识别的级别按 INFO 处理，由 check_config 负责告警"""
    return getattr(logging, os.environ.get(var, default).upper(), logging.INFO)


def build_logger(name: str = "fcs") -> FcsLogger:
    level = level_from_env("FCS_LOG_LEVEL")
    console_level = level_from_env("FCS_LOG_CONSOLE_LEVEL", logging.getLevelName(level))
    formatter = logging.Formatter(LOG_FORMAT)

    result = FcsLogger(name)
    result.setLevel(min(level, console_level))

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler.setLevel(console_level)
    result.addHandler(console_handler)

    log_file = os.environ.get("FCS_LOG_FILE", DEFAULT_LOG_FILE)
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = RotatingFileHandler(
            filename=log_file,
            mode='a',
            maxBytes=int(os.environ.get("FCS_LOG_MAX_BYTES", DEFAULT_MAX_BYTES)),
            backupCount=int(os.environ.get("FCS_LOG_BACKUP_COUNT", DEFAULT_BACKUP_COUNT)),
            encoding='utf-8',
            delay=True
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(level)
        result.addHandler(file_handler)
    return result


logger = build_logger()
