from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, NamedTuple, Optional, Tuple


class Family(str, Enum):
    """Graph family, written the way spec strings spell it."""

    NSG = "nsg"
    DNG = "dng"

    @property
    def label(self) -> str:
        return {"nsg": "threshold", "dng": "chain"}[self.value]

    @classmethod
    def from_text(cls, text: str) -> "Family":
        key = text.strip().lower()
        aliases = {"nsg": cls.NSG, "threshold": cls.NSG, "dng": cls.DNG, "chain": cls.DNG}
        if key not in aliases:
            raise ValueError(f"unknown family {text!r}")
        return aliases[key]


class CellTag(NamedTuple):
    side: str  # "U" or "V"
    index: int  # 1-based

    def __str__(self) -> str:
        return f"{self.side}_{self.index}"

    @classmethod
    def parse(cls, text: str) -> "CellTag":
        side, _, index = text.partition("_")
        return cls(side, int(index))


@dataclass(frozen=True)
class GraphSpec:
    family: Family
    m: Tuple[int, ...]  # co-clique / first color class cell sizes
    n: Tuple[int, ...]  # clique / second color class cell sizes

    @property
    def h(self) -> int:
        return len(self.m)

    @property
    def M(self) -> int:
        return sum(self.m)

    @property
    def N(self) -> int:
        return sum(self.n)

    @property
    def order(self) -> int:
        return self.M + self.N

    def __str__(self) -> str:
        ms = ",".join(str(x) for x in self.m)
        ns = ",".join(str(x) for x in self.n)
        return f"{self.family.value}:{ms};{ns}"

    def sort_key(self) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
        return (self.h, self.m, self.n)


class VertexType(str, Enum):
    DOWNER = "Downer"
    NEUTRAL = "Neutral"
    PARTER = "Parter"

    @classmethod
    def from_multiplicities(cls, k: int, k_deleted: int) -> "VertexType":
        delta = k_deleted - k
        if delta == -1:
            return cls.DOWNER
        if delta == 0:
            return cls.NEUTRAL
        if delta == 1:
            return cls.PARTER
        # interlacing forbids anything else
        raise ValueError(f"multiplicity moved from {k} to {k_deleted} after one deletion")


class Route(str, Enum):
    EXACT = "Exact"
    NUMERIC = "Numeric"
    BOTH = "Both-agree"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass
class VerificationResult:
    claim: str
    spec: str
    status: Status
    witnesses: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return self.status == Status.FAIL

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["status"] = self.status.value
        return data


@dataclass
class Finding:
    kind: str  # chain-neutral / remark-mh
    spec: str
    eigenvalue: float
    index: int  # 1-based position in the descending spectrum
    minpoly: Optional[List[int]]
    vertices: List[Dict[str, Any]]
    verdict: str
    main: Optional[bool] = None
    cross_validated: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class RunConfig:
    subcommand: str
    spec: Optional[str] = None
    value: Optional[float] = None
    minpoly: Optional[List[int]] = None
    index: Optional[int] = None
    cluster_tol: Optional[float] = None
    main_tol: Optional[float] = None
    fmt: str = "json"
    out: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)

    def selectors(self) -> List[str]:
        chosen = []
        if self.value is not None:
            chosen.append("--value")
        if self.minpoly is not None:
            chosen.append("--minpoly")
        if self.index is not None:
            chosen.append("--index")
        return chosen
