"""
Командная строка: potential, levels, wavefunction, validate, figure

Коды выхода:
    0 — успех
    1 — validate: хотя бы одна проверка не пройдена
    2 — ошибка использования (аргументы, область параметров)
    3 — сбой решателя (оракул, сходимость, проверка корня)
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from src.cli import commands
from src.cli.emit import RunManifest, emit, parameters_dict
from src.core.config import settings
from src.core.exceptions import HeunWellError, ParameterDomainError, SolverError
from src.model.params import PhysParams
from src.utils.logging import generate_run_id, set_run_id, setup_logging

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_USAGE = 2
EXIT_SOLVER = 3

_PARAM_KEYS = ("mass", "hbar", "v0", "v1", "v2")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"ожидается целое ≥ 1, получено {text}")
    return value


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("параметры модели и вывода")
    group.add_argument("--mass", type=float, default=settings.mass, help=f"Масса m (по умолчанию: {settings.mass:g})")
    group.add_argument("--hbar", type=float, default=settings.hbar, help=f"ħ (по умолчанию: {settings.hbar:g})")
    group.add_argument("--v0", type=float, default=settings.v0, help=f"V0 (по умолчанию: {settings.v0:g})")
    group.add_argument("--v1", type=float, default=settings.v1, help=f"V1 (по умолчанию: {settings.v1:g})")
    group.add_argument("--v2", type=float, default=settings.v2, help=f"V2 (по умолчанию: {settings.v2:g})")
    group.add_argument(
        "--format",
        choices=("csv", "json"),
        default=settings.output_format,
        help=f"Формат вывода (по умолчанию: {settings.output_format})",
    )
    group.add_argument(
        "--precision",
        type=_positive_int,
        default=settings.output_precision,
        help=f"Значащих цифр (по умолчанию: {settings.output_precision})",
    )
    group.add_argument("--out-dir", type=Path, default=None, help="Директория для файла данных и manifest.json")
    group.add_argument("--log-level", type=str, default=None, help=f"Уровень логов (по умолчанию: {settings.log_level})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="heun-well",
        description="Точный спектр и волновые функции потенциала с x^{-3/2}-ямой",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("potential", parents=[common], help="Таблица V(x)")
    p.add_argument("--x-min", type=float, default=0.05, help="Левая граница (по умолчанию: 0.05)")
    p.add_argument("--x-max", type=float, default=10.0, help="Правая граница (по умолчанию: 10)")
    p.add_argument("--points", type=_positive_int, default=400, help="Число точек (по умолчанию: 400)")
    p.add_argument("--log-grid", action="store_true", help="Логарифмическая сетка")

    p = sub.add_parser("levels", parents=[common], help="Уровни энергии")
    p.add_argument("--n-max", type=_positive_int, default=10, help="Число уровней (по умолчанию: 10)")
    p.add_argument("--method", choices=commands.LEVEL_METHODS, default="exact", help="Метод (по умолчанию: exact)")

    p = sub.add_parser("wavefunction", parents=[common], help="Собственная функция уровня n")
    p.add_argument("--n", type=_positive_int, default=1, help="Номер уровня (по умолчанию: 1)")
    p.add_argument("--source", choices=commands.WAVE_SOURCES, default="analytic", help="Источник (по умолчанию: analytic)")
    p.add_argument("--x-min", type=float, default=1e-3, help="Левая граница (по умолчанию: 1e-3)")
    p.add_argument("--x-max", type=float, default=None, help="Правая граница (по умолчанию: по затуханию хвоста)")
    p.add_argument("--points", type=_positive_int, default=400, help="Число точек (по умолчанию: 400)")
    p.add_argument("--no-normalize", action="store_true", help="Не нормировать ψ")

    p = sub.add_parser("validate", parents=[common], help="Проверки согласованности")
    p.add_argument("--n-max", type=_positive_int, default=10, help="Уровней точного спектра (по умолчанию: 10)")
    p.add_argument("--oracle-n-max", type=_positive_int, default=5, help="Уровней оракула (по умолчанию: 5)")
    p.add_argument("--overlap-n-max", type=_positive_int, default=3, help="Уровней для перекрытий (по умолчанию: 3)")
    p.add_argument("--tolerance-scale", type=float, default=1.0, help="Множитель всех допусков (по умолчанию: 1)")

    p = sub.add_parser("figure", parents=[common], help="Данные рисунков 1–4")
    p.add_argument("--id", dest="figure_id", type=int, choices=commands.FIGURE_IDS, required=True, help="Номер рисунка")
    p.add_argument("--v1-values", type=float, nargs="+", default=None, help="Значения V1 для рисунка 1")
    p.add_argument("--n-max", type=_positive_int, default=10, help="Уровней для рисунка 3 (по умолчанию: 10)")
    p.add_argument("--points", type=_positive_int, default=None, help="Число точек")

    return parser


def _dispatch(args: argparse.Namespace, params: PhysParams):
    if args.command == "potential":
        return commands.cmd_potential(params, args.x_min, args.x_max, args.points, args.log_grid)
    if args.command == "levels":
        return commands.cmd_levels(params, args.n_max, args.method)
    if args.command == "wavefunction":
        return commands.cmd_wavefunction(
            params, args.n, args.source, args.x_min, args.x_max, args.points, not args.no_normalize
        )
    if args.command == "validate":
        return commands.cmd_validate(params, args.n_max, args.oracle_n_max, args.overlap_n_max, args.tolerance_scale)
    v1_values = tuple(args.v1_values) if args.v1_values else commands.figures.DEFAULT_V1_VALUES
    return commands.cmd_figure(params, args.figure_id, v1_values, args.n_max, args.points)


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа; возвращает код выхода"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    set_run_id(generate_run_id())
    setup_logging(args.log_level)
    logger.debug(f"Команда {args.command}: {vars(args)}")

    try:
        params = PhysParams(m=args.mass, hbar=args.hbar, v0=args.v0, v1=args.v1, v2=args.v2)
        result = _dispatch(args, params)
    except ValidationError as e:
        logger.error(f"Некорректные параметры: {e}")
        return EXIT_USAGE
    except ParameterDomainError as e:
        logger.error(f"Ошибка параметров: {e}")
        return EXIT_USAGE
    except SolverError as e:
        level = f" (уровень {e.level})" if e.level is not None else ""
        logger.error(f"Сбой оракула{level}: {type(e).__name__}: {e}")
        return EXIT_SOLVER
    except HeunWellError as e:
        logger.error(f"Сбой решателя: {type(e).__name__}: {e}")
        return EXIT_SOLVER

    manifest = RunManifest(
        command=args.command,
        parameters=parameters_dict(vars(args), _PARAM_KEYS + ("format", "precision") + _command_keys(args.command)),
    )
    emit(result, args.format, args.precision, args.out_dir, manifest)
    return EXIT_OK if result.passed else EXIT_VALIDATION_FAILED


def _command_keys(command: str) -> tuple:
    return {
        "potential": ("x_min", "x_max", "points", "log_grid"),
        "levels": ("n_max", "method"),
        "wavefunction": ("n", "source", "x_min", "x_max", "points", "no_normalize"),
        "validate": ("n_max", "oracle_n_max", "overlap_n_max", "tolerance_scale"),
        "figure": ("figure_id", "v1_values", "n_max", "points"),
    }[command]


if __name__ == "__main__":
    sys.exit(main())
