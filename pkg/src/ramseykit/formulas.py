"""Closed-form Ramsey numbers and threshold multiplicities.

Threshold multiplicity m(H) is the minimum number of monochromatic copies
of H over all two-colorings of K_r, where r = r(H) is the Ramsey number.
Star multiplicities and the path/cycle Ramsey numbers are exact results;
the path/cycle multiplicity formulas are conjectured values realized by
split colorings and are flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .counting import Pattern
from .errors import DomainError

EXACT = "exact"
CONJECTURE = "conjecture"


@dataclass(frozen=True)
class RamseyValue:
    pattern: Pattern
    value: int
    provenance: str  # "formula" or "search"


@dataclass(frozen=True)
class MultiplicityValue:
    pattern: Pattern
    value: int
    status: str  # EXACT or CONJECTURE


def r_path(k: int) -> RamseyValue:
    """r(P_k) = k - 1 + floor(k/2) for k >= 2."""
    if k < 2:
        raise DomainError("path Ramsey formula needs k >= 2")
    return RamseyValue(Pattern.path(k), k - 1 + k // 2, "formula")


def r_cycle(k: int) -> RamseyValue:
    """r(C_3) = r(C_4) = 6; 2k-1 for odd k >= 5; k + k/2 - 1 for even k >= 6."""
    if k < 3:
        raise DomainError("cycles need k >= 3")
    if k in (3, 4):
        value = 6
    elif k % 2 == 1:
        value = 2 * k - 1
    else:
        value = k + k // 2 - 1
    return RamseyValue(Pattern.cycle(k), value, "formula")


def m_star(k: int) -> MultiplicityValue:
    """Threshold multiplicity of the star with k leaves (exact).

    1 for even k and for the single edge k = 1; 2k for odd k >= 3.
    """
    if k < 1:
        raise DomainError("stars need k >= 1 leaves")
    if k == 1 or k % 2 == 0:
        value = 1
    else:
        value = 2 * k
    return MultiplicityValue(Pattern.star(k), value, EXACT)


def conjectured_m(pattern: Pattern) -> MultiplicityValue:
    """Conjectured threshold multiplicities for paths and even/odd cycles.

    Paths: k!/2 for even k, (k-1)/4 * (k-1)! for odd k.
    Cycles: (k-3)/2 * (k-2)! for even k, (k-1)!/2 for odd k.
    Both are attained by split colorings at n = r(H); the conjecture is that
    no coloring does better, hence status CONJECTURE.
    """
    k = pattern.k
    if pattern.kind == "path":
        if k < 3:
            raise DomainError("path multiplicity conjecture needs k >= 3")
        if k % 2 == 0:
            value = factorial(k) // 2
        else:
            value = (k - 1) * factorial(k - 1) // 4
        return MultiplicityValue(pattern, value, CONJECTURE)
    if pattern.kind == "cycle":
        if k < 4:
            raise DomainError("cycle multiplicity conjecture needs k >= 4")
        if k % 2 == 0:
            value = (k - 3) * factorial(k - 2) // 2
        else:
            value = factorial(k - 1) // 2
        return MultiplicityValue(pattern, value, CONJECTURE)
    raise DomainError("conjectured multiplicities cover paths and cycles only")
