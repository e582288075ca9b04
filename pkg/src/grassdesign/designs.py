"""Design verification, Delsarte-style cardinality bounds, certificates.

A finite configuration X averages a harmonic component exactly when the
kernel sum sum_{a,b in X} Z_mu(y(a, b)) vanishes; the component sums are
the "defects" reported here.  A coefficient function c with positive
constant term and pointwise-nonnegative kernel combination F certifies
the cardinality bound F(1,..,1)/c_(0) for any configuration averaging
the components where c is positive.

Three certificates are built exactly:

* the product of all principal angles (bound binomial(n, m), tight on
  the maximum antipodal configurations),
* a product-plus-concavity combination whose vanishing forces every
  angle into {0, 1} (same bound; tightness characterizes the maximum
  antipodal configurations),
* the coordinate average (bound n/m for sets averaging all degree-one
  components).
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from .partitions import (
    Partition,
    binom,
    column_shape,
    descending_grid,
    enumerate_up_to_weight,
    hook_shape,
    row_shape,
)
from .scalars import as_rational, is_exact_real, rational, rational_to_str
from .zonal import harmonic_dim, zonal_hook, zonal_kernel, zonal_product_column, schur_in_zonal_basis
from .grassmann import EXACT, SubspaceConfiguration

DEFAULT_TOL = 1e-8


def column_family(m: int) -> List[Partition]:
    """Single-column shapes (1^i), i = 0..m."""
    return [column_shape(i, m) for i in range(m + 1)]


def hook_family(m: int) -> List[Partition]:
    """Hook shapes (2, 1^{i-1}), i = 2..m; empty for m = 1."""
    return [hook_shape(i, m) for i in range(2, m + 1)]


def weight_family(m: int, t: int) -> List[Partition]:
    """All shapes of weight at most t (strength-t design test set)."""
    return enumerate_up_to_weight(m, t)


def parse_family(spec: str, m: int) -> List[Partition]:
    """Resolve a CLI test-set name: 'E', 'F', 'E+F' or 'T<t>'."""
    key = spec.strip().upper()
    if key == "E":
        return column_family(m)
    if key == "F":
        return hook_family(m)
    if key in ("E+F", "F+E"):
        return column_family(m) + hook_family(m)
    if key.startswith("T") and key[1:].isdigit():
        return weight_family(m, int(key[1:]))
    raise ValueError(f"unknown test set {spec!r} (use E, F, E+F or T<t>)")


def design_defect(config: SubspaceConfiguration, mu: Partition):
    """Kernel sum over all ordered pairs of the configuration, diagonal included.

    Exact for exact configurations with rational angles; the diagonal alone
    contributes |X| times the component dimension.
    """
    if mu.m != config.m:
        raise ValueError(f"partition ambient {mu.m} vs configuration rank {config.m}")
    kernel = zonal_kernel(mu, config.n)
    if config.mode == EXACT:
        total = rational(0)
    else:
        total = 0.0
    for y, count in config.angle_classes().items():
        total = total + count * kernel.evaluate(y)
    return total


@dataclass
class DefectEntry:
    mu: Partition
    defect: object
    dim: int
    passed: bool

    def to_json(self) -> dict:
        val = (
            rational_to_str(self.defect)
            if is_exact_real(self.defect)
            else float(self.defect)
        )
        return {
            "mu": self.mu.to_json(),
            "defect": val,
            "dim": self.dim,
            "pass": self.passed,
        }


@dataclass
class DesignReport:
    """Per-component defects and the overall design verdict for one test set."""

    label: str
    mode: str
    tol: float
    size: int
    entries: List[DefectEntry] = field(default_factory=list)

    @property
    def design(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, mu: Partition) -> DefectEntry:
        for e in self.entries:
            if e.mu == mu:
                return e
        raise KeyError(f"{mu} not in report")

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "mode": self.mode,
            "tol": self.tol,
            "size": self.size,
            "design": self.design,
            "entries": [e.to_json() for e in self.entries],
        }


def is_T_design(
    config: SubspaceConfiguration,
    family: Sequence[Partition],
    tol: float = DEFAULT_TOL,
    parallel: int = 1,
) -> DesignReport:
    """Check defect vanishing for every shape in the family.

    The zero shape always passes (its defect is |X|^2 by normalization).
    Float verdicts use |defect| <= tol * |X|^2 * dim, scaling the slack
    with the kernel magnitude.
    """
    report = DesignReport(
        label=config.label, mode=config.mode, tol=tol, size=len(config)
    )
    shapes = list(family)

    def one(mu: Partition) -> DefectEntry:
        dim = harmonic_dim(mu, config.n)
        defect = design_defect(config, mu)
        if mu.is_zero():
            passed = True
        elif config.mode == EXACT:
            passed = not defect
        else:
            passed = abs(defect) <= tol * len(config) ** 2 * dim
        return DefectEntry(mu=mu, defect=defect, dim=dim, passed=passed)

    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            report.entries = list(pool.map(one, shapes))
    else:
        report.entries = [one(mu) for mu in shapes]
    return report


class CoefficientFunction:
    """Finitely supported exact coefficients c_mu over shapes of one ambient."""

    __slots__ = ("m", "n", "coeffs")

    def __init__(self, m: int, n: int, coeffs: Dict[Partition, object]):
        self.m = m
        self.n = n
        store = {}
        for mu, c in coeffs.items():
            if mu.m != m:
                raise ValueError(f"ambient mismatch for {mu}")
            c = as_rational(c)
            if c:
                store[mu] = c
        self.coeffs = store

    def coeff(self, mu: Partition):
        return self.coeffs.get(mu, rational(0))

    def support(self) -> List[Partition]:
        return sorted(self.coeffs, key=Partition.sort_key)

    def positive_support(self) -> List[Partition]:
        return [mu for mu in self.support() if self.coeffs[mu] > 0]

    def negative_support(self) -> List[Partition]:
        return [mu for mu in self.support() if self.coeffs[mu] < 0]

    def f_at_ones(self):
        """Value of the kernel combination at the all-ones point."""
        total = rational(0)
        for mu, c in self.coeffs.items():
            total = total + c * harmonic_dim(mu, self.n)
        return total

    def evaluate(self, y):
        """Pointwise value of F = sum c_mu Z_mu."""
        exact = all(is_exact_real(v) for v in y)
        total = rational(0) if exact else 0.0
        for mu, c in self.coeffs.items():
            cc = c if exact else float(c)
            total = total + cc * zonal_kernel(mu, self.n).evaluate(y)
        return total

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "terms": [
                {"partition": mu.to_json(), "coeff": rational_to_str(self.coeffs[mu])}
                for mu in self.support()
            ],
        }


@dataclass
class BoundRecord:
    bound: object
    f_at_ones: object
    c_zero: object
    t_plus: List[Partition]
    t_minus: List[Partition]

    def to_json(self) -> dict:
        return {
            "bound": rational_to_str(self.bound),
            "f_at_ones": rational_to_str(self.f_at_ones),
            "c_zero": rational_to_str(self.c_zero),
            "t_plus": [mu.to_json() for mu in self.t_plus],
            "t_minus": [mu.to_json() for mu in self.t_minus],
        }


def lp_bound(cert: CoefficientFunction) -> BoundRecord:
    """Cardinality bound F(1,..,1)/c_(0) with the sign-split support.

    Nonnegativity of F on the angle simplex is the caller's obligation;
    see :func:`check_nonnegativity` for grid evidence.
    """
    zero = column_shape(0, cert.m)
    c0 = cert.coeff(zero)
    if not c0 > 0:
        raise ValueError(f"constant coefficient must be positive, got {c0}")
    ones = cert.f_at_ones()
    plus = [mu for mu in cert.positive_support() if not mu.is_zero()]
    minus = cert.negative_support()
    return BoundRecord(
        bound=ones / c0,
        f_at_ones=ones,
        c_zero=c0,
        t_plus=[zero] + plus,
        t_minus=minus,
    )


def certificate_product(m: int, n: int) -> CoefficientFunction:
    """Kernel coefficients of the product of all principal angles.

    The product equals the top column-shape normalized Schur polynomial,
    so its coefficients are the column change-of-basis values; they are
    strictly positive and the bound equals binomial(n, m).
    """
    coeffs = dict(schur_in_zonal_basis(m, m, n))
    return CoefficientFunction(m, n, coeffs)


certificate_E = certificate_product


def certificate_antipodal(m: int, n: int) -> CoefficientFunction:
    """Kernel coefficients of B (prod y_i)(sum y_i) + sum y_i (1 - y_i).

    Here B = binomial(n-2, m-1).  Each summand vanishes exactly on angle
    vectors with entries in {0, 1}, which is what makes the tightness
    characterization work.  Assembled constructively: the column basis
    change, the hook kernel of height one, and the product expansion of
    the degree-one kernel feed a single linear combination; the known
    values of the constant and single-row coefficients then serve as
    independent checks.
    """
    if m < 2:
        raise ValueError("antipodal certificate needs rank at least 2")
    if n < 2 * m:
        raise ValueError(f"need n >= 2m, got ({m}, {n})")
    big_b = binom(n - 2, m - 1)
    acc: Dict[Partition, object] = {}

    def add(mu: Partition, c):
        if c:
            acc[mu] = acc.get(mu, rational(0)) + c

    d_one = schur_in_zonal_basis(1, m, n)
    d_top = schur_in_zonal_basis(m, m, n)
    d11 = d_one[column_shape(1, m)]

    # B * (prod y)(sum y) = B m X*_(1) X*_(top column):
    # expand the top column over kernels, then multiply each kernel by
    # X*_(1) = d_0 Z_(0) + d_1 Z_(1) and push Z_(1) Z_(1^j) through the
    # exact four-term product expansion.
    front = big_b * m
    for j in range(m + 1):
        dj = d_top[column_shape(j, m)]
        add(column_shape(j, m), front * dj * d_one[column_shape(0, m)])
        if j == 0:
            add(column_shape(1, m), front * dj * d11)
        else:
            prod = zonal_product_column(j, m, n)
            for sigma, c in prod.terms().items():
                add(sigma, front * dj * d11 * c)

    # sum y_i = m X*_(1)
    for sigma, c in d_one.items():
        add(sigma, m * c)

    # - sum y_i^2 = -(binom(m+1,2) X*_(2) - binom(m,2) X*_(1,1))
    # X*_(2) is isolated from the height-one hook kernel expansion.
    hook1 = zonal_hook(1, m, n)
    f2 = hook1.coeff(row_shape(2, m))
    f1 = hook1.coeff(column_shape(1, m))
    f0 = hook1.coeff(column_shape(0, m))
    c2 = -binom(m + 1, 2)
    add(hook_shape(1, m), c2 / f2)
    scale = -c2 * f1 / f2
    for sigma, c in d_one.items():
        add(sigma, scale * c)
    add(column_shape(0, m), -c2 * f0 / f2)
    if m >= 2:
        d_two = schur_in_zonal_basis(2, m, n)
        for sigma, c in d_two.items():
            add(sigma, binom(m, 2) * c)

    cert = CoefficientFunction(m, n, acc)

    # independent closed-form checks of the assembled coefficients
    c0 = cert.coeff(column_shape(0, m))
    if c0 != m * big_b / binom(n, m) or c0 != rational(m * m * (n - m), n * (n - 1)):
        raise ArithmeticError(f"constant coefficient {c0} fails its closed form")
    if cert.coeff(hook_shape(1, m)):
        raise ArithmeticError("single-row kernel coefficient should cancel")
    for j in range(2, m + 1):
        expected = (
            d_top[column_shape(j, m)]
            * d11
            * zonal_product_column(j, m, n).hook
            * m
            * big_b
        )
        if cert.coeff(hook_shape(j, m)) != expected or not expected > 0:
            raise ArithmeticError(f"hook coefficient at height {j} fails its closed form")
    return cert


certificate_F = certificate_antipodal


def certificate_average(m: int, n: int) -> CoefficientFunction:
    """Kernel coefficients of the coordinate average (sum y_i)/m.

    Certifies the n/m bound for configurations averaging every shape of
    weight one.
    """
    if n < 2 * m:
        raise ValueError(f"need n >= 2m, got ({m}, {n})")
    return CoefficientFunction(
        m,
        n,
        {
            column_shape(0, m): rational(m, n),
            column_shape(1, m): rational(n - m, n * (n - 1) * (n + 1)),
        },
    )


certificate_one_design = certificate_average


@dataclass
class NonnegativityReport:
    """Grid plus sampled evidence that a certificate is pointwise nonnegative.

    Evidence only: a nonnegative minimum over finitely many points proves
    nothing off the grid.
    """

    minimum: object
    argmin: tuple
    points_checked: int
    violations: List[tuple] = field(default_factory=list)

    @property
    def nonnegative_on_grid(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "minimum": rational_to_str(self.minimum),
            "argmin": [rational_to_str(v) for v in self.argmin],
            "points_checked": self.points_checked,
            "violations": [
                [rational_to_str(v) for v in y] for y in self.violations[:32]
            ],
            "nonnegative_on_grid": self.nonnegative_on_grid,
        }


def check_nonnegativity(
    cert: CoefficientFunction,
    grid_depth: int = 20,
    samples: int = 0,
    seed: int = 0,
) -> NonnegativityReport:
    """Evaluate the certificate on a simplex grid plus seeded random points."""
    best = None
    best_at = None
    violations = []
    count = 0
    points = list(descending_grid(cert.m, grid_depth))
    rng = random.Random(seed)
    for _ in range(samples):
        ys = sorted(
            (rational(rng.randint(0, 10_000), 10_000) for _ in range(cert.m)),
            reverse=True,
        )
        points.append(tuple(ys))
    for y in points:
        val = cert.evaluate(y)
        count += 1
        if best is None or val < best:
            best, best_at = val, y
        if val < 0:
            violations.append(y)
    return NonnegativityReport(
        minimum=best, argmin=best_at, points_checked=count, violations=violations
    )


@dataclass
class TightnessVerdict:
    """Both sides of a tightness equivalence, checked to agree."""

    design: bool
    geometry: bool
    report: DesignReport

    @property
    def holds(self) -> bool:
        return self.design  # == geometry, enforced at construction

    def to_json(self) -> dict:
        return {"design": self.design, "geometry": self.geometry}


def _require_cardinality(config: SubspaceConfiguration):
    expected = int(binom(config.n, config.m))
    if len(config) != expected:
        raise ValueError(
            f"tightness test needs exactly binomial({config.n},{config.m}) = "
            f"{expected} points, got {len(config)} (the design bound)"
        )


def classify_tight_E(
    config: SubspaceConfiguration, tol: float = DEFAULT_TOL
) -> TightnessVerdict:
    """Column-family design property vs vanishing last angles, at the bound size.

    For configurations of exactly binomial(n, m) points the two sides are
    equivalent; a disagreement is raised as an internal error.
    """
    _require_cardinality(config)
    report = is_T_design(config, column_family(config.m), tol=tol)
    geometry = True
    for y, count in config.angle_classes().items():
        if config.mode == EXACT:
            diagonal = all(v == 1 for v in y)
        else:
            diagonal = all(v > 1 - tol for v in y)
        if diagonal:
            if count != len(config):
                geometry = False  # repeated points masquerading as diagonal
            continue
        last = y[-1]
        ok = (last == 0) if config.mode == EXACT else abs(last) <= tol
        if not ok:
            geometry = False
    if report.design != geometry:
        raise ArithmeticError(
            "design and geometry verdicts disagree; tolerance too tight?"
        )
    return TightnessVerdict(design=report.design, geometry=geometry, report=report)


def classify_tight_EF(
    config: SubspaceConfiguration, tol: float = DEFAULT_TOL
) -> TightnessVerdict:
    """Column-plus-hook design property vs all angles in {0, 1}, at the bound size."""
    _require_cardinality(config)
    family = column_family(config.m) + hook_family(config.m)
    report = is_T_design(config, family, tol=tol)
    geometry = True
    for y in config.angle_classes():
        for v in y:
            ok = (
                (v == 0 or v == 1)
                if config.mode == EXACT
                else min(abs(v), abs(1 - v)) <= tol
            )
            if not ok:
                geometry = False
    if report.design != geometry:
        raise ArithmeticError(
            "design and geometry verdicts disagree; tolerance too tight?"
        )
    return TightnessVerdict(design=report.design, geometry=geometry, report=report)
