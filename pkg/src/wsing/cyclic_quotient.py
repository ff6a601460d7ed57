"""Invariants of the cyclic quotient C^2/mu_n, xi.(u1, u2) = (xi^q u1, xi u2).

A monomial u1^a u2^b is invariant iff q*a + b = 0 (mod n). The minimal
generators of the invariant monoid all lie in the box [0, n]^2, and under the
diagonal C*-action the monomial has weight a + b.
"""
from dataclasses import dataclass
import math
from typing import Optional

from .errors import HomogeneousInput, InvalidCyclic
from .weights import WeightVector, from_list


@dataclass(frozen=True)
class CyclicQuotient:
    n: int
    q: int

    def __post_init__(self):
        n, q = self.n, self.q
        for x in (n, q):
            if isinstance(x, bool) or not isinstance(x, int):
                raise InvalidCyclic(f"n and q must be integers, got n={n!r}, q={q!r}")
        if n < 2:
            raise InvalidCyclic(f"n must be at least 2, got {n}")
        if not 0 < q < n:
            raise InvalidCyclic(f"q must satisfy 0 < q < n, got q={q}, n={n}")
        if math.gcd(q, n) != 1:
            raise InvalidCyclic(f"q must be prime to n, got gcd({q}, {n}) = {math.gcd(q, n)}")

    @property
    def is_homogeneous(self) -> bool:
        return self.q == 1

    def is_invariant(self, a: int, b: int) -> bool:
        return (self.q * a + b) % self.n == 0


@dataclass(frozen=True, order=True)
class InvariantMonomial:
    """The monomial u1^a u2^b."""

    a: int
    b: int

    @property
    def weight(self) -> int:
        return self.a + self.b

    def perturbed_weight(self, alpha: int, beta: int) -> int:
        return alpha * self.a + beta * self.b

    def as_pair(self) -> list[int]:
        return [self.a, self.b]


@dataclass(frozen=True)
class GeneratorSet:
    """Minimal generators, sorted by (diagonal weight, a)."""

    elements: tuple[InvariantMonomial, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m):
        return m in self.elements

    def pairs(self) -> list[tuple[int, int]]:
        return [(m.a, m.b) for m in self.elements]


@dataclass(frozen=True)
class CoveringData:
    """Kernel order d = gcd(q-1, n) of mu_n acting on P^1, and the covering
    degree bound (a+b)/d attached to the lowest generator.

    For q = 1 there is no distinguished generator and the last two fields are
    None.
    """

    d: int
    n_prime: int
    chosen_generator: Optional[InvariantMonomial]
    degree_bound: Optional[int]


@dataclass(frozen=True)
class SeparatingAction:
    """Coprime weights alpha > beta for the C*-action t.(u1, u2) = (t^alpha u1, t^beta u2)."""

    alpha: int
    beta: int


def make_cyclic(n: int, q: int) -> CyclicQuotient:
    return CyclicQuotient(n, q)


def invariant_monomials(cq: CyclicQuotient) -> list[InvariantMonomial]:
    """All nonzero invariant monomials with 0 <= a, b <= n, sorted by (a, b)."""
    n, q = cq.n, cq.q
    out = []
    for a in range(n + 1):
        b = (-q * a) % n
        while b <= n:
            if a or b:
                out.append(InvariantMonomial(a, b))
            b += n
    return out


def minimal_generators(cq: CyclicQuotient) -> GeneratorSet:
    # (a, b) with a >= 1 is irreducible exactly when b is the least invariant
    # exponent for that a and no invariant (a', b') with a' < a has b' <= b.
    # Since (0, n) is invariant, the running minimum starts at n.
    n, q = cq.n, cq.q
    gens = [InvariantMonomial(0, n)]
    best = n
    for a in range(1, n + 1):
        b = (-q * a) % n
        if b < best:
            gens.append(InvariantMonomial(a, b))
            best = b
    gens.sort(key=lambda m: (m.weight, m.a))
    return GeneratorSet(tuple(gens))


def diagonal_weights(cq: CyclicQuotient) -> WeightVector:
    return from_list(m.weight for m in minimal_generators(cq))


def lowest_generator(cq: CyclicQuotient) -> InvariantMonomial:
    """Generator of least diagonal weight, ties broken by smallest u1-exponent."""
    if cq.is_homogeneous:
        raise HomogeneousInput(f"q = 1: every generator of mu_{cq.n} has weight {cq.n}")
    return min(minimal_generators(cq), key=lambda m: (m.weight, m.a))


def _unique_minimizer(gens, alpha, beta):
    values = sorted((m.perturbed_weight(alpha, beta), m.a, m) for m in gens)
    if len(values) > 1 and values[0][0] == values[1][0]:
        return None
    return values[0][2]


def separating_action(cq: CyclicQuotient) -> SeparatingAction:
    """First (s+1, s), s = 1, 2, ..., making the lowest generator the unique
    minimizer of alpha*a + beta*b over the generators.

    Any s exceeding a - a' for every competing generator (a', b') with
    a' < a works, so the search stops by s = n.
    """
    target = lowest_generator(cq)
    gens = minimal_generators(cq)
    for s in range(1, cq.n + 2):
        if _unique_minimizer(gens, s + 1, s) == target:
            return SeparatingAction(s + 1, s)
    raise RuntimeError(f"no separating action found for {cq}")


def is_separating(cq: CyclicQuotient, action: SeparatingAction, generator: InvariantMonomial) -> bool:
    """Check a separating-action certificate from scratch."""
    if not action.alpha > action.beta >= 1 or math.gcd(action.alpha, action.beta) != 1:
        return False
    gens = minimal_generators(cq)
    if generator not in gens:
        return False
    w0 = generator.perturbed_weight(action.alpha, action.beta)
    return all(m == generator or m.perturbed_weight(action.alpha, action.beta) > w0 for m in gens)


def covering_data(cq: CyclicQuotient) -> CoveringData:
    n, q = cq.n, cq.q
    d = math.gcd(q - 1, n)
    if q == 1:
        return CoveringData(d, n // d, None, None)
    gen = lowest_generator(cq)
    if gen.weight % d:
        raise RuntimeError(f"gcd(q-1, n) = {d} does not divide a+b = {gen.weight} for {cq}")
    bound = gen.weight // d
    if not bound < n // d:
        raise RuntimeError(f"covering degree {bound} is not below n' = {n // d} for {cq}")
    return CoveringData(d, n // d, gen, bound)
