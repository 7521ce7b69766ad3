"""
Табличный вывод команд: CSV / JSON и манифест запуска
"""

import csv
import hashlib
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger

from src import __version__

MANIFEST_NAME = "manifest.json"


@dataclass
class Table:
    """Именованные столбцы и строки значений (float, int, str, bool или None)"""
    name: str
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)

    def add(self, *values: Any) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"Строка из {len(values)} значений для {len(self.columns)} столбцов")
        self.rows.append(list(values))


@dataclass
class CommandResult:
    """Таблица команды и дополнительные метрики для манифеста"""
    table: Table
    extra: Dict[str, Any] = field(default_factory=dict)
    passed: bool = True


def _cell(value: Any, precision: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, f".{precision}g")
    return str(value)


def _json_value(value: Any, precision: int) -> Any:
    if isinstance(value, float) and not isinstance(value, bool):
        return float(format(value, f".{precision}g"))
    return value


def render_csv(table: Table, precision: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(v, precision) for v in row])
    return buffer.getvalue()


def render_json(table: Table, precision: int) -> str:
    records = [
        {name: _json_value(v, precision) for name, v in zip(table.columns, row)}
        for row in table.rows
    ]
    return json.dumps(records, ensure_ascii=False, indent=2) + "\n"


def render(table: Table, fmt: str, precision: int) -> str:
    if fmt == "csv":
        return render_csv(table, precision)
    if fmt == "json":
        return render_json(table, precision)
    raise ValueError(f"Неизвестный формат вывода: {fmt}")


@dataclass
class RunManifest:
    """Параметры запуска и контрольные суммы выходных файлов (без времени — вывод детерминирован)"""
    command: str
    parameters: Dict[str, Any]
    version: str = __version__
    outputs: Dict[str, str] = field(default_factory=dict)
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def emit(
    result: CommandResult,
    fmt: str,
    precision: int,
    out_dir: Optional[Path],
    manifest: RunManifest,
) -> Optional[Path]:
    """
    Записать таблицу в stdout или в out_dir вместе с manifest.json

    Returns:
        Path: путь к файлу данных (None при выводе в stdout)
    """
    text = render(result.table, fmt, precision)
    if out_dir is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    data = text.encode("utf-8")
    data_path = out_dir / f"{result.table.name}.{fmt}"
    data_path.write_bytes(data)

    manifest.outputs[data_path.name] = sha256_hex(data)
    manifest.extra.update(result.extra)
    manifest_path = out_dir / MANIFEST_NAME
    manifest_path.write_bytes(manifest.to_json().encode("utf-8"))

    logger.success(f"✓ {data_path} ({len(result.table.rows)} строк), манифест {manifest_path}")
    return data_path


def parameters_dict(values: Dict[str, Any], keys: Sequence[str]) -> Dict[str, Any]:
    """Параметры запуска для манифеста: только перечисленные ключи, Path → str"""
    return {k: str(values[k]) if isinstance(values[k], Path) else values[k] for k in keys if k in values}
