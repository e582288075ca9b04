"""Zonal orthogonal polynomials on the complex Grassmannian G(m, n).

Each harmonic component of function space on G(m, n) is indexed by a
partition mu with at most m parts and carries a reproducing kernel, a
symmetric polynomial Z_mu in the m principal angles, normalized so that
its value at the all-ones point equals the component's dimension.  This
module builds these kernels exactly:

* the general James-Constantine expansion over normalized Schur
  polynomials, driven by generalized binomial coefficients obtained by
  exact interpolation;
* closed-form expansions for single-column, single-row and hook shapes,
  kept as independent cross-checks of the general construction;
* the change of basis between column-shape normalized Schur polynomials
  and the kernels, and the exact four-term expansion of the product of
  a column kernel with the degree-one kernel.

Dimensions come from the Weyl product formula applied to the associated
highest weight of the unitary group.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Dict

from .exactlinalg import SingularMatrixError, solve
from .partitions import (
    Partition,
    binom,
    column_shape,
    down_set,
    double_content_sum,
    hook_shape,
    hyper_coeff,
    increment_part,
    increment_set,
    row_shape,
)
from .scalars import as_rational, rational
from .symfunc import SchurExpansion, normalized_schur_eval


class PoleError(ArithmeticError):
    """A coefficient recursion hit a pole at the requested parameter."""


def _require_ambient(m: int, n: int):
    if m < 1:
        raise ValueError(f"rank must be positive, got {m}")
    if n < 2 * m:
        raise ValueError(f"need n >= 2m, got (m, n) = ({m}, {n})")


def highest_weight(mu: Partition, n: int) -> tuple:
    """Length-n signature (mu_1..mu_m, 0.., -mu_m..-mu_1) of the component."""
    _require_ambient(mu.m, n)
    m = mu.m
    return mu.parts + (0,) * (n - 2 * m) + tuple(-p for p in reversed(mu.parts))


def weyl_dim(signature: tuple) -> int:
    """Dimension of the unitary-group irrep with the given signature."""
    n = len(signature)
    out = rational(1)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (signature[i] - signature[j] + j - i) / (j - i)
    if out.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl product for {signature}")
    return int(out)


def harmonic_dim(mu: Partition, n: int) -> int:
    """Dimension of the harmonic component indexed by mu on G(m, n)."""
    return weyl_dim(highest_weight(mu, n))


def _interpolation_points(m: int, count: int, seed: int) -> list:
    rng = random.Random((seed << 16) ^ 0x5EED ^ m)
    pts = []
    while len(pts) < count:
        p = tuple(rational(rng.randint(1, 997), rng.randint(1009, 2003)) for _ in range(m))
        pts.append(p)
    return pts


@lru_cache(maxsize=None)
def _generalized_binomial_table(kappa: Partition) -> Dict[Partition, object]:
    """Coefficients of X*_sigma(y) in the shifted expansion of X*_kappa(y+1).

    Solved from exact evaluations at as many generic rational points as the
    down-set of kappa has elements; a singular draw deterministically moves
    to the next seed.
    """
    sigmas = down_set(kappa)
    count = len(sigmas)
    for attempt in range(64):
        pts = _interpolation_points(kappa.m, count, seed=attempt)
        matrix = [[normalized_schur_eval(s, p) for s in sigmas] for p in pts]
        rhs = [
            normalized_schur_eval(kappa, tuple(v + 1 for v in p)) for p in pts
        ]
        try:
            sol = solve(matrix, rhs)
        except SingularMatrixError:
            continue
        return dict(zip(sigmas, sol))
    raise SingularMatrixError(
        f"no nonsingular interpolation draw for {kappa} after 64 seeds"
    )


def generalized_binomial(kappa: Partition, sigma: Partition):
    """Generalized binomial coefficient of the shifted-argument expansion."""
    if kappa.m != sigma.m:
        raise ValueError(f"ambient mismatch: {kappa} vs {sigma}")
    if not sigma <= kappa:
        return rational(0)
    return _generalized_binomial_table(kappa)[sigma]


@lru_cache(maxsize=None)
def hyper_coeff_pair(c, kappa: Partition, sigma: Partition):
    """Two-partition hypergeometric coefficient, base value 1 at sigma = kappa.

    Defined by the weight-gap recursion summing over single-box increments
    of sigma inside kappa.  The base choice rescales the whole family by a
    constant, which drops out after kernel normalization.
    """
    c = as_rational(c)
    if not sigma <= kappa:
        raise ValueError(f"{sigma} not contained in {kappa}")
    if sigma == kappa:
        return rational(1)
    k = kappa.weight
    s = sigma.weight
    shift = c + rational(double_content_sum(kappa) - double_content_sum(sigma), k - s)
    if not shift:
        raise PoleError(f"pole at c = {c} for pair ({kappa}, {sigma})")
    total = rational(0)
    for i in increment_set(sigma, kappa):
        up = increment_part(sigma, i)
        total = total + (
            generalized_binomial(kappa, up)
            * generalized_binomial(up, sigma)
            * hyper_coeff_pair(c, kappa, up)
        )
    return total / ((k - s) * generalized_binomial(kappa, sigma) * shift)


class ZonalPolynomial:
    """Reproducing kernel of one harmonic component, in the X* basis.

    Invariants checked at construction: the expansion is supported on the
    down-set of mu and evaluates to the component dimension at the all-ones
    point.
    """

    __slots__ = ("mu", "n", "expansion", "dim")

    def __init__(self, mu: Partition, n: int, expansion: SchurExpansion):
        _require_ambient(mu.m, n)
        if expansion.m != mu.m:
            raise ValueError("expansion ambient mismatch")
        dim = harmonic_dim(mu, n)
        if expansion.at_ones() != dim:
            raise ArithmeticError(
                f"kernel for {mu} sums to {expansion.at_ones()} at ones, expected {dim}"
            )
        for sigma in expansion.coeffs:
            if not sigma <= mu:
                raise ArithmeticError(f"kernel for {mu} has stray term {sigma}")
        self.mu = mu
        self.n = n
        self.expansion = expansion
        self.dim = dim

    @property
    def m(self) -> int:
        return self.mu.m

    def coeff(self, sigma: Partition):
        return self.expansion.coeff(sigma)

    def evaluate(self, y):
        return self.expansion.evaluate(y)

    __call__ = evaluate

    def __eq__(self, other):
        return (
            isinstance(other, ZonalPolynomial)
            and self.mu == other.mu
            and self.n == other.n
            and self.expansion == other.expansion
        )

    def __repr__(self):
        return f"ZonalPolynomial(mu={self.mu.parts}, n={self.n})"

    def to_json(self) -> dict:
        out = self.expansion.to_json()
        out.update({"mu": self.mu.to_json(), "n": self.n, "dim": self.dim})
        return out


@lru_cache(maxsize=None)
def zonal_james_constantine(mu: Partition, n: int) -> ZonalPolynomial:
    """General kernel construction from generalized binomial coefficients.

    Builds the unnormalized expansion
    sum_{sigma <= mu} (-1)^{|sigma|} [mu; sigma] pair(n) / hyper(m, sigma)
    over X*_sigma and rescales it to meet the dimension at the all-ones
    point.
    """
    m = mu.m
    _require_ambient(m, n)
    c = rational(n)
    terms = []
    for sigma in down_set(mu):
        val = (
            generalized_binomial(mu, sigma)
            * hyper_coeff_pair(c, mu, sigma)
            / hyper_coeff(m, sigma)
        )
        if sigma.weight % 2:
            val = -val
        terms.append((sigma, val))
    tilde = SchurExpansion(m, terms)
    total = tilde.at_ones()
    if not total:
        raise PoleError(f"degenerate unnormalized kernel for {mu} at n = {n}")
    return ZonalPolynomial(mu, n, tilde.scaled(rational(harmonic_dim(mu, n)) / total))


def zonal_kernel(mu: Partition, n: int) -> ZonalPolynomial:
    """Canonical cached kernel used by design verification."""
    return zonal_james_constantine(mu, n)


def zonal_column(i: int, m: int, n: int) -> ZonalPolynomial:
    """Closed-form kernel for the single-column shape (1^i)."""
    _require_ambient(m, n)
    if not 0 <= i <= m:
        raise ValueError(f"column height {i} outside 0..{m}")
    front = (n - 2 * i + 1) * binom(n + 1, i) ** 2 / ((n + 1) * binom(n - m, i))
    terms = []
    for j in range(i + 1):
        coeff = front * binom(n - i + 1, j) * binom(m - j, i - j)
        if (i - j) % 2:
            coeff = -coeff
        terms.append((column_shape(j, m), coeff))
    return ZonalPolynomial(column_shape(i, m), n, SchurExpansion(m, terms))


def zonal_row(i: int, m: int, n: int) -> ZonalPolynomial:
    """Closed-form kernel for the single-row shape (i)."""
    _require_ambient(m, n)
    if i < 0:
        raise ValueError(f"row length {i} negative")
    front = (n + 2 * i - 1) * binom(n + i - 2, i) ** 2 / ((n - 1) * binom(n - m + i - 1, i))
    terms = []
    for j in range(i + 1):
        coeff = front * binom(n + i + j - 2, j) * binom(m + i - 1, i - j)
        if (i - j) % 2:
            coeff = -coeff
        terms.append((row_shape(j, m), coeff))
    return ZonalPolynomial(row_shape(i, m), n, SchurExpansion(m, terms))


def zonal_hook(i: int, m: int, n: int) -> ZonalPolynomial:
    """Closed-form kernel for the hook shape (2, 1^{i-1})."""
    _require_ambient(m, n)
    if not 1 <= i <= m:
        raise ValueError(f"hook height {i} outside 1..{m}")
    common = (
        i
        * (i + 1)
        * (n + 3)
        * (n - 2 * i + 1)
        * binom(n + 1, i + 1) ** 2
        / ((n - i + 2) * (n - m + 1) * binom(n - m, i))
    )
    f2 = common * (n + 2)
    f1 = common * (m + 1)
    f0 = common * i * (m + 1) * binom(m, i) / ((i + 1) * (n - i + 2))
    if i % 2 == 0:
        f0 = -f0
    terms = [(column_shape(0, m), f0)]
    for j in range(1, i + 1):
        base = binom(m - j, i - j) * binom(n - i, j - 1)
        c2 = f2 * base / (j + 1)
        c1 = f1 * base / j
        if (i - j) % 2:
            c2 = -c2
        else:
            c1 = -c1
        terms.append((hook_shape(j, m), c2))
        terms.append((column_shape(j, m), c1))
    return ZonalPolynomial(hook_shape(i, m), n, SchurExpansion(m, terms))


def schur_in_zonal_basis(i: int, m: int, n: int) -> Dict[Partition, object]:
    """Column-shape normalized Schur polynomial as a kernel combination.

    Returns the coefficients d_j of Z_(1^j), j = 0..i, in the expansion of
    X*_(1^i); all strictly positive in the admissible range.
    """
    _require_ambient(m, n)
    if not 0 <= i <= m:
        raise ValueError(f"column height {i} outside 0..{m}")
    out = {}
    for j in range(i + 1):
        out[column_shape(j, m)] = (
            rational(n + 1, n - j + 1)
            * binom(m - j, i - j)
            * binom(n - m, j)
            / (binom(n - j, i) * binom(n + 1, j) ** 2)
        )
    return out


class ColumnProductExpansion:
    """Exact four-term kernel expansion of Z_(1) * Z_(1^i).

    Coefficients: ``hook`` on the hook kernel, ``up``/``same``/``down`` on
    the column kernels of heights i+1, i, i-1.  The ``up`` term does not
    exist at i = m and the ``same`` coefficient vanishes with the square
    factor (n - 2m)^2 at n = 2m.
    """

    __slots__ = ("i", "m", "n", "hook", "up", "same", "down")

    def __init__(self, i, m, n, hook, up, same, down):
        self.i, self.m, self.n = i, m, n
        self.hook, self.up, self.same, self.down = hook, up, same, down

    def terms(self) -> Dict[Partition, object]:
        out = {hook_shape(self.i, self.m): self.hook}
        if self.i < self.m:
            out[column_shape(self.i + 1, self.m)] = self.up
        if self.same:
            out[column_shape(self.i, self.m)] = self.same
        out[column_shape(self.i - 1, self.m)] = self.down
        return out

    def evaluate(self, y):
        total = rational(0)
        for sigma, c in self.terms().items():
            total = total + c * zonal_kernel(sigma, self.n).evaluate(y)
        return total


def zonal_product_column(i: int, m: int, n: int) -> ColumnProductExpansion:
    """Product of the degree-one kernel with a column kernel, exactly."""
    _require_ambient(m, n)
    if not 1 <= i <= m:
        raise ValueError(f"column height {i} outside 1..{m}")
    hook_coeff = rational(
        (i + 1) * (m + 1) * n * (n - 1) * (n - i + 2) * (n - m + 1),
        i * m * (n + 2) * (n + 3) * (n - i + 1) * (n - m),
    )
    if i < m:
        up = rational(
            (i + 1) * (m - i) * n * (n - 1) * (n + 1) * (n - m - i),
            m * (n - i + 1) * (n - 2 * i) * (n - 2 * i - 1) * (n - m),
        )
    else:
        up = rational(0)
    if n == 2 * m:
        # the (n - 2m)^2 numerator factor wins against the vanishing
        # denominator factors at i = m; verified by the product identity
        same = rational(0)
    else:
        same = rational(
            2 * i * (n - 1) * (n + 1) * (n - i + 1) * (n - 2 * m) ** 2,
            m * (n + 2) * (n - 2 * i) * (n - 2 * i + 2) * (n - m),
        )
    down = rational(
        (m - i + 1) * n * (n + 1) * (n - 1) * (n - i + 2) * (n - m - i + 1),
        i * m * (n - 2 * i + 2) * (n - 2 * i + 3) * (n - m),
    )
    return ColumnProductExpansion(i, m, n, hook_coeff, up, same, down)
