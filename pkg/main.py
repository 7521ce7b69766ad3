import sys

from loguru import logger

from src.cli.app import main

if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Прервано пользователем")
        sys.exit(130)
