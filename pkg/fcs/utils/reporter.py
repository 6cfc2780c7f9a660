import os

import yaml
from jinja2 import Template

from fcs.utils.log import logger

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
REPORT_TEMPLATES_FILE = os.path.join(PROJECT_ROOT, "conf", "report_templates.yml")


def render_report(template_key: str, templates_file: str = REPORT_TEMPLATES_FILE, **context) -> str:
    """用 conf/report_templates.yml 中的 Jinja2 模板渲染 markdown 报告"""
    try:
        # 显式指定 UTF-8，避免使用系统默认编码
        with open(templates_file, "r", encoding="utf-8") as file:
            template_str = yaml.safe_load(file)[template_key]["template"]
    except (FileNotFoundError, KeyError, TypeError, yaml.YAMLError) as e:
        logger.error(f"加载报告模板失败: {e}")
        raise Exception(f"报告模板加载失败: {e}")
    return Template(template_str).render(**context) + "\n"
