"""Weight vectors of weighted homogeneous surface germs."""
from dataclasses import dataclass
from functools import reduce
import math
from typing import Iterable

from .errors import InvalidTriple, InvalidWeights
from .exactnum import Ratio, lcm, ratio


@dataclass(frozen=True)
class WeightVector:
    """Positive integer weights stored in non-increasing order.

    Construct through :func:`from_list`, which sorts and validates.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        e = self.entries
        if len(e) < 2:
            raise InvalidWeights(f"need at least two weights, got {len(e)}")
        if any((not isinstance(x, int)) or isinstance(x, bool) or x < 1 for x in e):
            raise InvalidWeights(f"weights must be positive integers, got {list(e)}")
        if any(e[i] < e[i + 1] for i in range(len(e) - 1)):
            raise InvalidWeights(f"weights must be stored descending, got {list(e)}")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ", ".join(map(str, self.entries)) + ")"

    def scaled(self, c: int) -> "WeightVector":
        if c < 1:
            raise InvalidWeights(f"scale factor must be positive, got {c}")
        return WeightVector(tuple(c * x for x in self.entries))


@dataclass(frozen=True)
class BrieskornTriple:
    """Exponents of z1^a1 + z2^a2 + z3^a3 = 0."""

    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        for a in self:
            if isinstance(a, bool) or not isinstance(a, int) or a < 2:
                raise InvalidTriple(f"Brieskorn exponents must be integers >= 2, got {tuple(self)}")

    def __iter__(self):
        return iter((self.a1, self.a2, self.a3))

    @property
    def l(self) -> int:
        return lcm(self.a1, self.a2, self.a3)


def from_list(values: Iterable[int]) -> WeightVector:
    return WeightVector(tuple(sorted(values, reverse=True)))


def make_triple(a1: int, a2: int, a3: int) -> BrieskornTriple:
    return BrieskornTriple(a1, a2, a3)


def normalize(w: WeightVector) -> WeightVector:
    g = reduce(math.gcd, w.entries)
    return WeightVector(tuple(x // g for x in w.entries))


def brieskorn_weights(t: BrieskornTriple) -> WeightVector:
    l = t.l
    return normalize(from_list(l // a for a in t))


def is_homogeneous(w: WeightVector) -> bool:
    return w.entries[0] == w.entries[-1]


def two_lowest(w: WeightVector) -> tuple[int, int]:
    return w.entries[-2], w.entries[-1]


def extreme_ratios(w: WeightVector) -> tuple[Ratio, Ratio]:
    """Return ``(v1/vr, v_{r-1}/vr)``, the ratios compared when telling germs apart."""
    return ratio(w.entries[0], w.entries[-1]), ratio(w.entries[-2], w.entries[-1])
