"""Seifert invariants of Brieskorn links and a comparator for them.

For z1^a1 + z2^a2 + z3^a3 = 0 with l = lcm(a1, a2, a3):

* Euler number  e = -a1*a2*a3 / l^2
* for each axis i with complementary exponents (aj, ak), gcd(aj, ak)
  exceptional fibers of multiplicity l / lcm(aj, ak) (multiplicity 1 dropped)
* base genus    g = 1 + (a1*a2*a3/l - sum_{i<j} gcd(ai, aj)) / 2
"""
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import math

from .exactnum import Ratio, lcm
from .weights import BrieskornTriple


@dataclass(frozen=True)
class SeifertData:
    genus: int
    euler: Ratio
    fibers: tuple[tuple[int, int], ...]  # sorted (multiplicity, count)

    def fiber_multiset(self) -> list[int]:
        return [alpha for alpha, count in self.fibers for _ in range(count)]


class LinkComparison(Enum):
    EQUIVALENT_BUNDLE = "equivalent_bundle"
    INVARIANTS_AGREE = "invariants_agree"
    DISTINGUISHED = "distinguished"


def seifert_data(t: BrieskornTriple) -> SeifertData:
    a = tuple(t)
    l = t.l
    prod = a[0] * a[1] * a[2]
    euler = Fraction(-prod, l * l)

    fibers = Counter()
    for i in range(3):
        aj, ak = (a[k] for k in range(3) if k != i)
        alpha = l // lcm(aj, ak)
        if alpha >= 2:
            fibers[alpha] += math.gcd(aj, ak)

    twice = 2 + prod // l - (math.gcd(a[0], a[1]) + math.gcd(a[0], a[2]) + math.gcd(a[1], a[2]))
    if prod % l or twice % 2 or twice < 0:
        raise ArithmeticError(f"non-integral or negative genus for {a}: 2g = {twice}")
    return SeifertData(twice // 2, euler, tuple(sorted(fibers.items())))


def same_link(x: SeifertData, y: SeifertData) -> LinkComparison:
    """Compare two Seifert invariant records.

    Genus and Euler number classify oriented circle bundles, so agreement
    with no exceptional fibers means the links are homeomorphic. With
    exceptional fibers present the Seifert pairs would be needed too, which
    are not computed, so agreement is reported without a claim.
    """
    if (x.genus, x.euler, x.fibers) != (y.genus, y.euler, y.fibers):
        return LinkComparison.DISTINGUISHED
    if not x.fibers:
        return LinkComparison.EQUIVALENT_BUNDLE
    return LinkComparison.INVARIANTS_AGREE
