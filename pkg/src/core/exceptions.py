"""
Иерархия ошибок пакета

Коды выхода CLI:
    ParameterDomainError  → 2 (ошибка использования)
    SolverError, ConvergenceError, RootValidityError → 3 (сбой решателя)
"""

from typing import Optional


class HeunWellError(Exception):
    """Базовая ошибка пакета"""


class ParameterDomainError(HeunWellError, ValueError):
    """Аргумент вне области определения операции"""


class PoleError(ParameterDomainError):
    """Аргумент попал в полюс (Γ, знаменатель M или отношения F)"""


class GridError(ParameterDomainError):
    """Сетка непригодна: слишком грубая, неравномерная или вырожденная"""


class ConvergenceError(HeunWellError, ArithmeticError):
    """Заявленная точность не достигнута или результат переполнил float"""


class RootValidityError(HeunWellError):
    """Передано значение a, не являющееся корнем уравнения спектра"""


class InsufficientDecayError(HeunWellError):
    """Хвосты волновой функции не затухли на краях сетки"""


class SolverError(HeunWellError):
    """Базовая ошибка численного оракула"""

    def __init__(self, message: str, level: Optional[int] = None):
        super().__init__(message)
        self.level = level


class CutoffTooLargeError(SolverError):
    """Ряд Фробениуса не сходится в выбранной точке старта"""


class OverflowUnrecoverableError(SolverError):
    """Интегрирование дало нечисловые значения несмотря на перенормировку"""


class StepTooCoarseError(SolverError):
    """Решение меняется при уменьшении шага вдвое"""


class BracketError(SolverError):
    """Не удалось отделить уровень подсчётом узлов"""
