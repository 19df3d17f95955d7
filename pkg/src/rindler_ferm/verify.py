"""Grid-driven verification checks tying the closed forms, the operator
algebra and the two density-matrix paths against one another.

Each check sweeps the canonical (field, n, r) grids, records the worst
deviation and the offending tuples, and reports against its tolerance.
The negativity target 0.5 cos(r)^2 is evaluated inline from math.cos so
the comparison never routes through the code paths being checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field, fields

import numpy as np

from . import combinatorics as comb
from .density import (
    MAX_JOINT_DIM,
    Scenario,
    analytic_density,
    bell_dirac,
    build_joint_state,
    max_entry_difference,
    trace_out_region_iv,
    vac_one_dirac,
    vac_one_spinless,
)
from .entanglement import (
    EIGENSOLVER_SIDE_CAP,
    block_census,
    negativity_blocks,
    negativity_bruteforce,
    partial_transpose_alice,
)
from .fock import norm
from .modes import FieldKind, dirac, spinless
from .rindler import SqueezeParam, build_vacuum, minkowski_annihilation

CENSUS_R = 0.6  # representative interior squeezing for structural censuses


@dataclass(frozen=True, slots=True)
class Tolerances:
    annihilation: float = 1e-10
    normalization: float = 1e-12
    density_equivalence: float = 1e-12
    hermiticity: float = 1e-12
    trace: float = 1e-12
    psd: float = 1e-10
    negativity_analytic: float = 1e-12
    negativity_bruteforce: float = 1e-10
    n_independence: float = 1e-12

    @classmethod
    def with_overrides(cls, overrides: dict[str, float]) -> "Tolerances":
        known = {f.name for f in fields(cls)}
        values: dict[str, float] = {}
        for key, value in overrides.items():
            name = key.replace("-", "_")
            if name not in known:
                raise ValueError(f"unknown tolerance {key!r}; known: {sorted(known)}")
            if not value > 0.0:
                raise ValueError(f"tolerance {key} must be positive")
            values[name] = value
        return cls(**values)


@dataclass(slots=True)
class CheckResult:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    cases: int
    failures: list[str] = dataclass_field(default_factory=list)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name:<34} max dev {self.max_deviation:.3e}  "
            f"tol {self.tolerance:.1e}  cases {self.cases:>5}  {status}"
        )


def r_points(count: int) -> list[SqueezeParam]:
    """Evenly spaced squeezing grid on [0, pi/4] with exact endpoints."""
    quarter = math.pi / 4
    return [SqueezeParam(quarter * i / (count - 1)) for i in range(count)]


def nine_point_grid() -> list[SqueezeParam]:
    """The coarse oracle grid: steps of 0.1 plus the pi/4 endpoint."""
    return [SqueezeParam(0.1 * i) for i in range(8)] + [SqueezeParam(math.pi / 4)]


def oracle_fields() -> list[FieldKind]:
    return [dirac(n) for n in range(1, 5)] + [spinless(n) for n in range(1, 7)]


def density_grid() -> list[tuple[Scenario, FieldKind]]:
    pairs: list[tuple[Scenario, FieldKind]] = []
    for n in range(1, 4):
        pairs.append((vac_one_dirac(), dirac(n)))
        pairs.append((bell_dirac(), dirac(n)))
    for n in range(1, 7):
        pairs.append((vac_one_spinless(), spinless(n)))
    return pairs


def bruteforce_feasible(field: FieldKind) -> bool:
    return (2 << (2 * field.slots)) <= MAX_JOINT_DIM and (
        2 << field.slots
    ) <= EIGENSOLVER_SIDE_CAP


def _result(
    name: str, tol: float, worst: float, cases: int, failures: list[str]
) -> CheckResult:
    return CheckResult(name, not failures, worst, tol, cases, failures)


def check_annihilation(tols: Tolerances = Tolerances()) -> CheckResult:
    """Every inertial annihilator must kill the constructed vacuum."""
    worst, cases, failures = 0.0, 0, []
    for field in oracle_fields():
        for r in nine_point_grid():
            vacuum = build_vacuum(field, r)
            for mode in field.labels():
                residual = norm(minkowski_annihilation(mode, r, vacuum))
                cases += 1
                worst = max(worst, residual)
                if residual >= tols.annihilation:
                    failures.append(
                        f"{field.family.value} n={field.mode_count} r={r.r:.4f} "
                        f"mode={mode} residual={residual:.3e}"
                    )
    return _result("annihilation oracle", tols.annihilation, worst, cases, failures)


def check_normalization(tols: Tolerances = Tolerances()) -> CheckResult:
    """Raw-ansatz vacuum norm must telescope to 1/cos(r)^slots, and the
    normalized vacuum to 1."""
    worst, cases, failures = 0.0, 0, []
    for field in oracle_fields():
        for r in nine_point_grid():
            raw = norm(build_vacuum(field, r, c0=1.0))
            expected = 1.0 / r.cos**field.slots
            dev = max(abs(raw - expected), abs(norm(build_vacuum(field, r)) - 1.0))
            cases += 1
            worst = max(worst, dev)
            if dev >= tols.normalization:
                failures.append(
                    f"{field.family.value} n={field.mode_count} r={r.r:.4f} dev={dev:.3e}"
                )
    return _result("vacuum normalization", tols.normalization, worst, cases, failures)


def check_density_equivalence(tols: Tolerances = Tolerances()) -> CheckResult:
    """Analytic assembly against trace-out of the joint state, entrywise."""
    worst, cases, failures = 0.0, 0, []
    for scenario, field in density_grid():
        for r in nine_point_grid():
            brute = trace_out_region_iv(build_joint_state(scenario, field, r))
            direct = analytic_density(scenario, field, r)
            dev = max_entry_difference(brute, direct)
            cases += 1
            worst = max(worst, dev)
            if dev >= tols.density_equivalence:
                failures.append(
                    f"{scenario.kind.value} n={field.mode_count} r={r.r:.4f} dev={dev:.3e}"
                )
    return _result(
        "density path equivalence", tols.density_equivalence, worst, cases, failures
    )


def check_density_health(tols: Tolerances = Tolerances()) -> CheckResult:
    """Hermiticity, unit trace and positive semidefiniteness on both paths."""
    worst, cases, failures = 0.0, 0, []
    for scenario, field in density_grid():
        for r in nine_point_grid():
            for label, rho in (
                ("brute", trace_out_region_iv(build_joint_state(scenario, field, r))),
                ("analytic", analytic_density(scenario, field, r)),
            ):
                herm = rho.hermiticity_defect()
                trace_dev = abs(rho.trace() - 1.0)
                min_eig = float(np.linalg.eigvalsh(rho.to_dense())[0])
                cases += 1
                dev = max(herm, trace_dev, max(-min_eig, 0.0))
                worst = max(worst, dev)
                bad = (
                    herm >= tols.hermiticity
                    or trace_dev >= tols.trace
                    or min_eig <= -tols.psd
                )
                if bad:
                    failures.append(
                        f"{scenario.kind.value} n={field.mode_count} r={r.r:.4f} "
                        f"[{label}] herm={herm:.2e} trace_dev={trace_dev:.2e} "
                        f"min_eig={min_eig:.2e}"
                    )
    return _result(
        "density matrix health",
        max(tols.hermiticity, tols.trace, tols.psd),
        worst,
        cases,
        failures,
    )


def check_block_census(tols: Tolerances = Tolerances()) -> CheckResult:
    """Structural 2x2 block counts in the partial transpose against the
    binomial multiplicities, exactly."""
    del tols
    r = SqueezeParam(CENSUS_R)
    cases, failures = 0, []
    pairs = density_grid() + [(vac_one_dirac(), dirac(4)), (bell_dirac(), dirac(4))]
    for scenario, field in pairs:
        pt = partial_transpose_alice(
            trace_out_region_iv(build_joint_state(scenario, field, r))
        )
        counts = block_census(scenario, field, pt)
        _, blocks = negativity_blocks(scenario, field, r)
        expected = {b.m: b.multiplicity for b in blocks}
        cases += 1
        if counts != expected:
            failures.append(
                f"{scenario.kind.value} n={field.mode_count}: "
                f"extracted {counts} != formula {expected}"
            )
    return _result("block census (exact)", 0.0, 0.0, cases, failures)


def check_negativity_analytic(tols: Tolerances = Tolerances()) -> CheckResult:
    """Block-path negativity against 0.5 cos(r)^2 on deep mode grids."""
    worst, cases, failures = 0.0, 0, []
    grid = r_points(33)
    combos: list[tuple[Scenario, FieldKind]] = []
    for n in range(1, 13):
        combos.append((vac_one_dirac(), dirac(n)))
        combos.append((bell_dirac(), dirac(n)))
    for n in range(1, 65):
        combos.append((vac_one_spinless(), spinless(n)))
    for scenario, field in combos:
        for r in grid:
            value, _ = negativity_blocks(scenario, field, r)
            dev = abs(value - 0.5 * math.cos(r.r) ** 2)
            cases += 1
            worst = max(worst, dev)
            if dev >= tols.negativity_analytic:
                failures.append(
                    f"{scenario.kind.value} n={field.mode_count} r={r.r:.4f} dev={dev:.3e}"
                )
    return _result(
        "negativity (blocks) vs closed form",
        tols.negativity_analytic,
        worst,
        cases,
        failures,
    )


def check_negativity_bruteforce(tols: Tolerances = Tolerances()) -> CheckResult:
    """Eigensolve negativity against 0.5 cos(r)^2 where brute force fits."""
    worst, cases, failures = 0.0, 0, []
    for scenario, field in density_grid():
        if not bruteforce_feasible(field):  # pragma: no cover - grid always fits
            continue
        for r in r_points(33):
            rho = trace_out_region_iv(build_joint_state(scenario, field, r))
            dev = abs(negativity_bruteforce(rho) - 0.5 * math.cos(r.r) ** 2)
            cases += 1
            worst = max(worst, dev)
            if dev >= tols.negativity_bruteforce:
                failures.append(
                    f"{scenario.kind.value} n={field.mode_count} r={r.r:.4f} dev={dev:.3e}"
                )
    return _result(
        "negativity (brute force) vs closed form",
        tols.negativity_bruteforce,
        worst,
        cases,
        failures,
    )


def check_n_independence(tols: Tolerances = Tolerances()) -> CheckResult:
    """Spread of the block-path negativity across mode counts at fixed r."""
    worst, cases, failures = 0.0, 0, []
    grid = r_points(9)
    families: list[tuple[str, list[tuple[Scenario, FieldKind]]]] = [
        ("vac-one-dirac", [(vac_one_dirac(), dirac(n)) for n in range(1, 13)]),
        ("bell-dirac", [(bell_dirac(), dirac(n)) for n in range(1, 13)]),
        ("vac-one-spinless", [(vac_one_spinless(), spinless(n)) for n in range(1, 65)]),
    ]
    for name, combos in families:
        for r in grid:
            values = [negativity_blocks(s, f, r)[0] for s, f in combos]
            spread = max(values) - min(values)
            cases += 1
            worst = max(worst, spread)
            if spread >= tols.n_independence:
                failures.append(f"{name} r={r.r:.4f} spread={spread:.3e}")
    return _result(
        "negativity n-independence", tols.n_independence, worst, cases, failures
    )


def check_combinatorics(max_n: int = 6) -> CheckResult:
    """Exact integer identities: pair-counting sums, enumerations and the
    inclusion-exclusion block counts."""
    cases, failures = 0, []
    for n in range(1, max_n + 1):
        for m in range(0, 2 * n + 1):
            report = comb.upsilon_report(n, m)
            closed = math.comb(2 * n, m)
            cases += 1
            if not (report.ok and report.formula == closed):
                failures.append(f"upsilon n={n} m={m}: {report}")
        for m in range(0, n + 1):
            report = comb.chi_report(n, m)
            cases += 1
            if not (report.ok and report.formula == math.comb(n, m)):
                failures.append(f"chi n={n} m={m}: {report}")
        for m in range(0, 2 * n):
            cases += 1
            if comb.vac_one_blocks_via_exclusion(n, m) != math.comb(2 * n - 1, m):
                failures.append(f"vac-one exclusion n={n} m={m}")
        for m in range(0, 2 * n - 1):
            cases += 1
            if comb.bell_blocks_via_exclusion(n, m) != math.comb(2 * n - 2, m):
                failures.append(f"bell exclusion n={n} m={m}")
        for m in range(0, n):
            cases += 1
            if comb.spinless_blocks_via_exclusion(n, m) != math.comb(n - 1, m):
                failures.append(f"spinless exclusion n={n} m={m}")
    return _result("counting identities (exact)", 0.0, 0.0, cases, failures)


def run_all(tols: Tolerances = Tolerances()) -> list[CheckResult]:
    return [
        check_annihilation(tols),
        check_normalization(tols),
        check_combinatorics(),
        check_density_equivalence(tols),
        check_density_health(tols),
        check_block_census(tols),
        check_negativity_analytic(tols),
        check_negativity_bruteforce(tols),
        check_n_independence(tols),
    ]
