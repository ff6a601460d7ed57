"""Independent reference computations used only by the tests."""
from fractions import Fraction
import math


def brute_hilbert_basis(n, q):
    """Irreducible nonzero invariant exponents in [0, n]^2, by exhaustive pair sums."""
    box = [(a, b) for a in range(n + 1) for b in range(n + 1)
           if (a or b) and (q * a + b) % n == 0]
    members = set(box)
    current = set(box)
    while True:
        decomposable = set()
        for x in box:
            for y in box:
                s = (x[0] + y[0], x[1] + y[1])
                if s in members:
                    decomposable.add(s)
        nxt = current - decomposable
        if nxt == current:
            return sorted(current)
        current = nxt


def reachable(size_a, size_b, gens):
    """Table of which (a, b) in [0, size_a] x [0, size_b] are nonnegative
    integer combinations of gens (bounded DP)."""
    gens = [g for g in gens if g != (0, 0)]
    reach = [[False] * (size_b + 1) for _ in range(size_a + 1)]
    reach[0][0] = True
    for a in range(size_a + 1):
        row = reach[a]
        for b in range(size_b + 1):
            if row[b]:
                continue
            for ga, gb in gens:
                if ga <= a and gb <= b and reach[a - ga][b - gb]:
                    row[b] = True
                    break
    return reach


def decomposes(target, gens):
    return reachable(target[0], target[1], gens)[target[0]][target[1]]


def genus_by_strata(a1, a2, a3):
    """Genus of the base curve (V - 0)/C* from its Euler characteristic.

    Points with one vanishing coordinate z_i = 0 form gcd(a_j, a_k) orbits.
    The open stratum is the quotient of X = {x^a1 + y^a2 = -1, xy != 0}, with
    chi(X) = 1 - (a1-1)(a2-1) - a1 - a2 = -a1*a2, by mu_{w3}; only elements
    acting trivially on the torus fix anything, and they fix all of X.
    """
    l = math.lcm(a1, a2, a3)
    w1, w2, w3 = l // a1, l // a2, l // a3
    trivial = sum(1 for k in range(w3) if (k * w1) % w3 == 0 and (k * w2) % w3 == 0)
    chi_open = Fraction(trivial * (-a1 * a2), w3)
    chi = chi_open + math.gcd(a1, a2) + math.gcd(a1, a3) + math.gcd(a2, a3)
    assert chi.denominator == 1
    g2 = 2 - chi
    assert g2 % 2 == 0
    return int(g2 // 2)


def plane_curve_genus(d):
    return (d - 1) * (d - 2) // 2


def hyperelliptic_genus(deg):
    """Genus of the smooth completion of x^2 = f(y) with f squarefree of degree deg."""
    return (deg - 1) // 2
