import sys
import uuid
from contextvars import ContextVar
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Optional

from loguru import logger

from src.core.config import settings

# Контекстная переменная: идентификатор запуска команды
_run_id: ContextVar[str] = ContextVar("run_id", default="main")

_CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "<magenta>{extra[run_id]}</magenta> - <level>{message}</level>"
)
_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} | {extra[run_id]} | {message}"


def get_run_id() -> str:
    """Получить текущий run ID"""
    return _run_id.get()


def set_run_id(run_id: str) -> None:
    """Установить run ID для текущего контекста"""
    _run_id.set(run_id)


def generate_run_id() -> str:
    """Сгенерировать новый run ID"""
    return str(uuid.uuid4())[:8]


def _add_run_id(record):
    """Добавляет run_id в запись лога"""
    record["extra"]["run_id"] = get_run_id()
    return True


def _category_filter(category_name):
    """Создаёт фильтр по категории"""
    def filter_func(record):
        record["extra"]["run_id"] = get_run_id()
        return record["extra"].get("category") == category_name
    return filter_func


class CallTracer:
    """Декоратор для трассировки вызовов решателей"""

    def __init__(self, show_args: bool = True, show_result: bool = True):
        self.show_args = show_args
        self.show_result = show_result

    def __call__(self, func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            run_id = get_run_id()
            func_name = f"{func.__module__}.{func.__qualname__}"

            if self.show_args:
                logger.debug(f"[{run_id}] ENTER → {func_name}({self._format_args(args, kwargs)})")
            else:
                logger.debug(f"[{run_id}] ENTER → {func_name}()")

            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.error(f"[{run_id}] ERROR ← {func_name} raised {type(e).__name__}: {e}")
                raise

            if self.show_result:
                logger.debug(f"[{run_id}] EXIT  ← {func_name} = {self._format_result(result)}")
            else:
                logger.debug(f"[{run_id}] EXIT  ← {func_name}")
            return result

        return wrapper

    @staticmethod
    def _format_args(args: tuple, kwargs: dict) -> str:
        """Форматировать аргументы функции для логирования"""
        parts = []
        for arg in args:
            arg_str = str(arg)
            if len(arg_str) > 50:
                arg_str = arg_str[:47] + "..."
            parts.append(arg_str)

        for key, value in kwargs.items():
            val_str = str(value)
            if len(val_str) > 50:
                val_str = val_str[:47] + "..."
            parts.append(f"{key}={val_str}")

        return ", ".join(parts)

    @staticmethod
    def _format_result(result: Any) -> str:
        """Форматировать результат функции для логирования"""
        if result is None:
            return "None"
        result_str = str(result)
        if len(result_str) > 100:
            result_str = result_str[:97] + "..."
        return result_str


def setup_logging(level: Optional[str] = None):
    """
    Настроить логирование

    Консоль пишет в stderr: stdout занят табличным выводом команд.
    Файловые логи включаются настройкой log_to_file.
    """
    logger.remove()

    logger.add(
        sys.stderr,
        format=_CONSOLE_FORMAT,
        level=(level or settings.log_level).upper(),
        filter=_add_run_id,
    )

    if not settings.log_to_file:
        return logger

    log_dir = Path(settings.log_dir)

    # Основной лог файл
    logger.add(
        log_dir / "app_{time:YYYY-MM-DD}.log",
        format=_FILE_FORMAT,
        level="DEBUG",
        rotation="10 MB",
        retention="7 days",
        compression="zip",
        filter=_add_run_id,
    )

    # Лог ошибок
    logger.add(
        log_dir / "errors_{time:YYYY-MM-DD}.log",
        format=_FILE_FORMAT,
        level="ERROR",
        rotation="10 MB",
        retention="30 days",
        compression="zip",
        filter=_add_run_id,
    )

    # Лог потока вычислений (скобки, бисекции, исключённые корни)
    logger.add(
        log_dir / "call_flow_{time:YYYY-MM-DD}.log",
        format="{time:YYYY-MM-DD HH:mm:ss} | {extra[run_id]} | {message}",
        level="DEBUG",
        rotation="10 MB",
        retention="7 days",
        filter=_category_filter("call_flow"),
    )

    # Лог результатов проверок validate
    logger.add(
        log_dir / "validation_{time:YYYY-MM-DD}.log",
        format="{time:YYYY-MM-DD HH:mm:ss} | {extra[run_id]} | {message}",
        level="INFO",
        rotation="10 MB",
        retention="30 days",
        filter=_category_filter("validation"),
    )

    return logger


def log_call_flow(message: str) -> None:
    """Логировать шаг вычислительного потока"""
    logger.debug(message, category="call_flow")


def log_validation(name: str, passed: bool, measured: Any, tolerance: Any) -> None:
    """Логировать результат одной проверки"""
    status = "PASS" if passed else "FAIL"
    logger.info(
        f"CHECK [{status}] {name}: measured={measured} tolerance={tolerance}",
        category="validation",
    )


# Экспортируем декоратор
trace = CallTracer
