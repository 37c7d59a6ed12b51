from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass(frozen=True)
class ClassificationReport:
    """Fano / weak Fano verdict for one variety.

    ``provenance`` is ``"computed"`` when the verdict comes from cone
    membership, ``"asserted-by-theorem"`` when it is a table lookup.
    """

    subject: str
    n: int
    is_fano: bool
    is_weak_fano: bool
    provenance: str = "computed"
    extra: Dict[str, Any] = field(default_factory=dict)
