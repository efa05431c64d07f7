from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .exact import RingValue


class OutputFormat(str, Enum):
    TABLE = "table"
    CSV = "csv"
    BFILE = "bfile"
    JSON = "json"


@dataclass(frozen=True)
class FamilySpec:
    # borel, r-borel, rs-borel, tilde, fuss-borel, ... (see families.FAMILIES)
    name: str
    r: Optional[RingValue] = None
    s: Optional[RingValue] = None
    t: Tuple[int, ...] = ()

    def params(self) -> Dict[str, str]:
        from .exact import to_text

        out: Dict[str, str] = {}
        if self.r is not None:
            out["r"] = to_text(self.r)
        if self.s is not None:
            out["s"] = to_text(self.s)
        if self.t:
            out["t"] = ",".join(str(v) for v in self.t)
        return out


@dataclass(frozen=True)
class BorelPolynomial:
    n: int
    value: RingValue  # sum_k B_{n,k} y^k


@dataclass(frozen=True)
class JacobiCF:
    """1/(1 - b0 x - lam1 x^2/(1 - b1 x - lam2 x^2/(...)))."""

    b: Tuple[RingValue, ...]
    lam: Tuple[RingValue, ...]
    # True when the fraction is exact at this depth (a vanishing lambda was met)
    terminating: bool = False

    def __post_init__(self):
        if len(self.b) < 1:
            raise ValueError("JacobiCF exige depth >= 1")
        if len(self.lam) != len(self.b) - 1:
            raise ValueError(f"JacobiCF com {len(self.b)} b's exige {len(self.b) - 1} lambdas, recebeu {len(self.lam)}")

    @property
    def depth(self) -> int:
        return len(self.b)

    @classmethod
    def periodic(
        cls,
        b0: RingValue,
        b: RingValue,
        lam: RingValue,
        depth: int,
        lam1: Optional[RingValue] = None,
    ) -> "JacobiCF":
        """b = (b0, b, b, ...), lam = (lam1, lam, lam, ...)."""
        bs = (b0,) + (b,) * (depth - 1)
        lams: List[RingValue] = [lam] * (depth - 1)
        if lams and lam1 is not None:
            lams[0] = lam1
        return cls(b=bs, lam=tuple(lams))


@dataclass(frozen=True)
class OrthoRecurrence:
    """P_0 = 1, P_1 = x - b0p, P_n = (x - b) P_{n-1} - lam_n P_{n-2}.

    lam1 (the first lambda, used for P_2) defaults to lam.
    """

    b0p: RingValue
    b: RingValue
    lam: RingValue
    lam1: Optional[RingValue] = None

    def lam_at(self, n: int) -> RingValue:
        if n == 1 and self.lam1 is not None:
            return self.lam1
        return self.lam


@dataclass(frozen=True)
class MomentArraySpec:
    """((1 + lam_num x + mu_num x^2)/(1 + alpha x + beta x^2), x/(1 + alpha x + beta x^2))."""

    lam_num: RingValue
    mu_num: RingValue
    alpha: RingValue
    beta: RingValue
    label: str = ""


@dataclass
class SequenceFixture:
    id: str
    terms: List[int]
    # "by-rows" for triangles read row by row, "plain" otherwise
    reading: str = "plain"
    source_path: str = ""


@dataclass
class CheckResult:
    item: str
    passed: bool
    detail: str = ""
    meta: Dict[str, str] = field(default_factory=dict)
