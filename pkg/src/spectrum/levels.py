import json
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict, NamedTuple, Optional


class Provenance(str, Enum):
    """Источник значения уровня"""
    EXACT = "exact"
    TRIG_APPROX = "trig_approx"
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


@dataclass(frozen=True)
class Level:
    """Уровень энергии: номер n ≥ 1, корень a_n (если известен), энергия E_n"""
    n: int
    a: Optional[float]
    energy: float
    provenance: Provenance
    nodes: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["provenance"] = self.provenance.value
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


class LevelError(NamedTuple):
    n: int
    relative_error: float
