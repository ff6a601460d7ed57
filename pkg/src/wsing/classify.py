"""Verdicts on metric conicalness and bi-Lipschitz distinguishability.

All verdicts are derived from weight data only. The caller asserts that the
weights belong to a weighted homogeneous normal surface germ; nothing here
can check that. Every negative verdict carries a certificate that
re-verifies independently of the engine (see ``verify_*``).
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import cyclic_quotient as cqm
from .cyclic_quotient import CyclicQuotient, InvariantMonomial, SeparatingAction
from .exactnum import GREATER, Ratio, cmp_ratio, format_ratio
from .link_topology import LinkComparison, SeifertData, same_link, seifert_data
from .weights import (
    WeightVector,
    brieskorn_weights,
    extreme_ratios,
    is_homogeneous,
    make_triple,
    two_lowest,
)


class ConicalKind(Enum):
    METRICALLY_CONICAL = "metrically_conical"
    NOT_CONICAL = "not_conical"
    UNKNOWN = "unknown"


class Mechanism(Enum):
    # lowest two weights differ
    THEOREM_1 = "theorem_1"
    # cyclic quotient, lowest weights tied, separated by a perturbed C*-action
    THEOREM_1_5 = "theorem_1_5"


class CompareKind(Enum):
    NOT_BI_LIPSCHITZ = "not_bi_lipschitz"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConicalVerdict:
    kind: ConicalKind
    weights: WeightVector
    mechanism: Optional[Mechanism] = None
    action: Optional[SeparatingAction] = None
    generator: Optional[InvariantMonomial] = None

    def __post_init__(self):
        if (self.mechanism is None) != (self.kind is not ConicalKind.NOT_CONICAL):
            raise ValueError("mechanism must be given exactly for not-conical verdicts")
        if self.mechanism is Mechanism.THEOREM_1_5 and (self.action is None or self.generator is None):
            raise ValueError("a separating-action verdict needs its action and generator")


@dataclass(frozen=True)
class Certificate:
    """``lhs > rhs`` where side "left" means v_{r-1}/v_r > w_1/w_s and
    "right" means w_{s-1}/w_s > v_1/v_r."""

    side: str
    lhs: Ratio
    rhs: Ratio

    def holds(self) -> bool:
        return cmp_ratio(self.lhs, self.rhs) == GREATER

    def __str__(self):
        return f"{format_ratio(self.lhs)} > {format_ratio(self.rhs)}"


@dataclass(frozen=True)
class CompareVerdict:
    kind: CompareKind
    certificate: Optional[Certificate] = None

    def __post_init__(self):
        if (self.certificate is None) != (self.kind is CompareKind.INCONCLUSIVE):
            raise ValueError("certificate must be given exactly for not-bi-Lipschitz verdicts")


def conical_from_weights(w: WeightVector) -> ConicalVerdict:
    if is_homogeneous(w):
        return ConicalVerdict(ConicalKind.METRICALLY_CONICAL, w)
    low2, low = two_lowest(w)
    if low2 != low:
        return ConicalVerdict(ConicalKind.NOT_CONICAL, w, Mechanism.THEOREM_1)
    # Tied lowest weights: no obstruction applies and no sufficiency is known.
    return ConicalVerdict(ConicalKind.UNKNOWN, w)


def conical_cyclic(cq: CyclicQuotient) -> ConicalVerdict:
    w = cqm.diagonal_weights(cq)
    if cq.is_homogeneous:
        return ConicalVerdict(ConicalKind.METRICALLY_CONICAL, w)
    low2, low = two_lowest(w)
    if low2 != low:
        return ConicalVerdict(ConicalKind.NOT_CONICAL, w, Mechanism.THEOREM_1)
    return ConicalVerdict(
        ConicalKind.NOT_CONICAL,
        w,
        Mechanism.THEOREM_1_5,
        action=cqm.separating_action(cq),
        generator=cqm.lowest_generator(cq),
    )


def verify_conical_certificate(cq: CyclicQuotient, verdict: ConicalVerdict) -> bool:
    """Recheck a cyclic-quotient verdict without going through the engine."""
    if verdict.kind is ConicalKind.METRICALLY_CONICAL:
        return cq.q == 1
    if verdict.kind is not ConicalKind.NOT_CONICAL:
        return False
    w = cqm.diagonal_weights(cq)
    if verdict.mechanism is Mechanism.THEOREM_1:
        return w[-2] != w[-1]
    return cqm.is_separating(cq, verdict.action, verdict.generator)


def compare_weights(v: WeightVector, w: WeightVector) -> CompareVerdict:
    v_top, v_low = extreme_ratios(v)
    w_top, w_low = extreme_ratios(w)
    if cmp_ratio(v_low, w_top) == GREATER:
        return CompareVerdict(CompareKind.NOT_BI_LIPSCHITZ, Certificate("left", v_low, w_top))
    if cmp_ratio(w_low, v_top) == GREATER:
        return CompareVerdict(CompareKind.NOT_BI_LIPSCHITZ, Certificate("right", w_low, v_top))
    return CompareVerdict(CompareKind.INCONCLUSIVE)


def verify_compare_certificate(v: WeightVector, w: WeightVector, verdict: CompareVerdict) -> bool:
    if verdict.kind is CompareKind.INCONCLUSIVE:
        return True
    c = verdict.certificate
    if c.side == "left":
        expected = (v[-2], v[-1], w[0], w[-1])
    elif c.side == "right":
        expected = (w[-2], w[-1], v[0], v[-1])
    else:
        return False
    p, q, r, s = expected
    # p/q > r/s with positive denominators
    return c.lhs * q == p and c.rhs * s == r and p * s > r * q and c.holds()


COROLLARY_TRIPLES = ((2, 51, 102), (12, 15, 20))
PAPER_STATED_GENUS = 26


@dataclass(frozen=True)
class CorollaryReport:
    triples: tuple[tuple[int, int, int], tuple[int, int, int]]
    weights: tuple[WeightVector, WeightVector]
    seifert: tuple[SeifertData, SeifertData]
    link: LinkComparison
    compare: CompareVerdict
    paper_stated_genus: int

    @property
    def computed_genus(self) -> int:
        return self.seifert[0].genus


def corollary_report() -> CorollaryReport:
    """Run the Brieskorn pair (2, 51, 102) vs (12, 15, 20) end to end.

    The two germs have homeomorphic links but weights (51, 2, 1) and
    (5, 4, 3), which the ratio test tells apart.
    """
    left, right = (make_triple(*t) for t in COROLLARY_TRIPLES)
    wl, wr = brieskorn_weights(left), brieskorn_weights(right)
    sl, sr = seifert_data(left), seifert_data(right)
    return CorollaryReport(
        triples=COROLLARY_TRIPLES,
        weights=(wl, wr),
        seifert=(sl, sr),
        link=same_link(sl, sr),
        compare=compare_weights(wl, wr),
        paper_stated_genus=PAPER_STATED_GENUS,
    )
