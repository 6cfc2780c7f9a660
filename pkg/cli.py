from dotenv import load_dotenv

load_dotenv("conf/.env")

from fcs.cmd.cli import main
from fcs.utils.config_checker import check_config

if __name__ == "__main__":
    # 启动时检查配置项，有问题只告警不退出
    check_config()
    raise SystemExit(main())
