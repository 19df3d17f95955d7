"""Exact counting of Pauli-admissible mode configurations and of the 2x2
block multiplicities in the partially transposed density matrices.

Everything here is integer arithmetic; the test suite checks each closed
form against explicit enumeration, so the formulas never stand alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

from .modes import FieldKind, dirac, spinless

if TYPE_CHECKING:  # pragma: no cover
    from .density import ScenarioKind


def _comb0(a: int, b: int) -> int:
    """Binomial that is 0 (not an error) outside 0 <= b <= a."""
    return math.comb(a, b) if 0 <= b <= a else 0


def upsilon(n: int, m: int) -> int:
    """Admissible m-mode configurations of a Dirac field with n momenta,
    counted through the number p of fully paired momenta:

        sum_p  C(n-p, m-2p) * C(n, p) * 2^(m-2p)

    where C(n, p) places the p spin-paired momenta, C(n-p, m-2p) places the
    remaining singly occupied momenta and 2^(m-2p) chooses their spins.
    Collapses to C(2n, m).
    """
    if not 0 <= m <= 2 * n:
        raise ValueError(f"m={m} outside 0..{2 * n}")
    return sum(
        math.comb(n - p, m - 2 * p) * math.comb(n, p) * 2 ** (m - 2 * p)
        for p in range(m // 2 + 1)
    )


def chi(n: int, m: int) -> int:
    """Admissible m-mode configurations of a spinless field: C(n, m)."""
    if not 0 <= m <= n:
        raise ValueError(f"m={m} outside 0..{n}")
    return math.comb(n, m)


def block_multiplicity(scenario: "ScenarioKind", n: int, m: int) -> int:
    """How many identical 2x2 blocks the partial transpose carries at
    excitation level m.

    Vacuum/one-particle Dirac: C(2n-1, m) for m in 0..2n-1 (one
    single-particle state is reserved by the excited mode). Bell Dirac:
    C(2n-2, m) for m in 0..2n-2 (two reserved states). Vacuum/one-particle
    spinless: C(n-1, m) for m in 0..n-1.
    """
    from .density import ScenarioKind as SK

    if scenario is SK.VAC_ONE_DIRAC:
        top = 2 * n - 1
    elif scenario is SK.BELL_DIRAC:
        top = 2 * n - 2
    elif scenario is SK.VAC_ONE_SPINLESS:
        top = n - 1
    else:  # pragma: no cover - exhaustive enum
        raise ValueError(f"unknown scenario {scenario}")
    if not 0 <= m <= top:
        raise ValueError(f"m={m} outside 0..{top} for {scenario}")
    return math.comb(top, m)


def vac_one_blocks_via_exclusion(n: int, m: int) -> int:
    """Same count by exclusion: all configurations minus those colliding
    with the excited mode."""
    return upsilon(n, m) - _comb0(2 * n - 1, m - 1)


def bell_blocks_via_exclusion(n: int, m: int) -> int:
    """Same count by inclusion-exclusion over the two reserved modes."""
    return upsilon(n, m) - 2 * _comb0(2 * n - 1, m - 1) + _comb0(2 * n - 2, m - 2)


def spinless_blocks_via_exclusion(n: int, m: int) -> int:
    return chi(n, m) - _comb0(n - 1, m - 1)


def count_admissible(field: FieldKind, m: int) -> int:
    """Enumeration oracle: count m-element subsets of the sector labels."""
    return sum(1 for _ in combinations(field.labels(), m))


@dataclass(frozen=True, slots=True)
class CountReport:
    """One enumeration-versus-formula comparison."""

    n: int
    m: int
    enumerated: int
    formula: int

    @property
    def ok(self) -> bool:
        return self.enumerated == self.formula


def upsilon_report(n: int, m: int) -> CountReport:
    return CountReport(n, m, count_admissible(dirac(n), m), upsilon(n, m))


def chi_report(n: int, m: int) -> CountReport:
    return CountReport(n, m, count_admissible(spinless(n), m), chi(n, m))
