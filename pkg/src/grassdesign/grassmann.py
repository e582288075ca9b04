"""Points of G(m, n), principal angles, geodesic symmetries, antipodality.

A point is an m-dimensional subspace of C^n given by a full-rank m x n
basis matrix whose rows span it.  Two modes coexist:

* exact mode stores Gaussian-rational entries and never orthonormalizes
  (that would need square roots); principal angles come from the exact
  characteristic polynomial of the Gram-corrected product of projectors,
  and only configurations with rational spectra are representable, which
  covers every bundled configuration;
* float mode stores complex entries, orthonormalizes through a
  rank-revealing pivoted QR and reads the angles off singular values.

Principal angles are returned as descending tuples y with entries in
[0, 1]; the pair (a, b) is antipodal exactly when every entry is 0 or 1.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, List, Sequence

import numpy as np
import scipy.linalg

from .exactlinalg import charpoly, invert, mat_mul, null_space, rank, rational_roots
from .scalars import CX_ONE, CX_ZERO, ExactComplex, as_exact_complex, rational, rational_to_str

EXACT = "exact"
FLOAT = "float"

RANK_TOL = 1e-10


class IrrationalAnglesError(ArithmeticError):
    """Exact spectrum does not split over the rationals; use float mode."""


def _as_complex_entry(v) -> complex:
    """Float-mode matrix entry: number, [re, im] pair, or exact string."""
    if isinstance(v, (list, tuple)):
        re, im = v
        return complex(float(re), float(im))
    if isinstance(v, str):
        return complex(as_exact_complex(v))
    return complex(v)


class RankDeficiencyError(ValueError):
    """Basis rows do not span an m-dimensional subspace."""


class SubspacePoint:
    """An m-dimensional subspace of C^n spanned by the rows of ``basis``."""

    __slots__ = ("basis", "mode", "m", "n")

    def __init__(self, basis, mode: str = EXACT):
        if mode == EXACT:
            rows = tuple(
                tuple(as_exact_complex(v) for v in row) for row in basis
            )
            self.m = len(rows)
            self.n = len(rows[0]) if rows else 0
            if any(len(r) != self.n for r in rows):
                raise ValueError("ragged basis matrix")
            if rank([list(r) for r in rows]) != self.m:
                raise RankDeficiencyError(f"basis rank below {self.m}")
            self.basis = rows
        elif mode == FLOAT:
            if isinstance(basis, np.ndarray):
                arr = basis.astype(complex)
            else:
                arr = np.array(
                    [[_as_complex_entry(v) for v in row] for row in basis],
                    dtype=complex,
                )
            if arr.ndim != 2:
                raise ValueError("basis must be a matrix")
            self.m, self.n = arr.shape
            arr.setflags(write=False)
            self.basis = arr
            _orthonormal_rows(arr)  # raises on rank deficiency
        else:
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        if self.m < 1 or self.n < self.m:
            raise ValueError(f"bad shape ({self.m}, {self.n})")

    def to_float(self) -> "SubspacePoint":
        if self.mode == FLOAT:
            return self
        arr = [[complex(v) for v in row] for row in self.basis]
        return SubspacePoint(arr, mode=FLOAT)

    def gram(self):
        """Pairwise Hermitian products of the basis rows (exact mode)."""
        a = self.basis
        return [
            [_row_inner(a[i], a[j]) for j in range(self.m)]
            for i in range(self.m)
        ]

    def recombined(self, coeffs) -> "SubspacePoint":
        """Same subspace presented by an invertible recombination of rows."""
        if self.mode == EXACT:
            cf = [[as_exact_complex(v) for v in row] for row in coeffs]
            rows = mat_mul(cf, [list(r) for r in self.basis])
            return SubspacePoint(rows, mode=EXACT)
        cf = np.array(coeffs, dtype=complex)
        return SubspacePoint(cf @ self.basis, mode=FLOAT)

    def same_subspace(self, other: "SubspacePoint", tol: float = 1e-8) -> bool:
        _check_pair(self, other)
        if self.mode == EXACT:
            stacked = [list(r) for r in self.basis] + [list(r) for r in other.basis]
            return rank(stacked) == self.m
        y = principal_angles(self, other)
        return all(v > 1 - tol for v in y)

    def orthogonal_complement(self) -> "SubspacePoint":
        """The (n - m)-dimensional orthogonal complement (exact mode only)."""
        if self.mode != EXACT:
            raise ValueError("complement helper is exact-mode only")
        conj_rows = [[v.conjugate() for v in row] for row in self.basis]
        kernel = null_space(conj_rows, zero=CX_ZERO, one=CX_ONE)
        return SubspacePoint(kernel, mode=EXACT)

    def to_json(self) -> dict:
        if self.mode == EXACT:
            return {"rows": [[str(v) for v in row] for row in self.basis]}
        return {
            "rows": [
                [[float(v.real), float(v.imag)] for v in row] for row in self.basis
            ]
        }

    def __repr__(self):
        return f"SubspacePoint(m={self.m}, n={self.n}, mode={self.mode})"


class SubspaceConfiguration:
    """Ordered list of points sharing one ambient G(m, n) and one mode."""

    __slots__ = ("points", "label", "m", "n", "mode", "_angle_classes")

    def __init__(self, points: Sequence[SubspacePoint], label: str = ""):
        points = list(points)
        if not points:
            raise ValueError("configuration needs at least one point")
        first = points[0]
        for p in points:
            if (p.m, p.n, p.mode) != (first.m, first.n, first.mode):
                raise ValueError("points disagree on (m, n, mode)")
        if first.n < 2 * first.m:
            raise ValueError(f"need n >= 2m, got ({first.m}, {first.n})")
        self.points = points
        self.label = label
        self.m, self.n, self.mode = first.m, first.n, first.mode
        self._angle_classes = None

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, k):
        return self.points[k]

    def to_float(self) -> "SubspaceConfiguration":
        return SubspaceConfiguration(
            [p.to_float() for p in self.points], label=self.label
        )

    def angle_matrix(self) -> list:
        """Full pairwise principal-angle matrix, diagonal included."""
        k = len(self.points)
        mat: List[list] = [[None] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                y = principal_angles(self.points[i], self.points[j])
                mat[i][j] = y
                mat[j][i] = y
        return mat

    def angle_classes(self) -> dict:
        """Multiplicities of angle vectors over all ordered pairs."""
        if self._angle_classes is None:
            counts: dict = {}
            k = len(self.points)
            for i in range(k):
                for j in range(i, k):
                    y = principal_angles(self.points[i], self.points[j])
                    counts[y] = counts.get(y, 0) + (1 if i == j else 2)
            self._angle_classes = counts
        return self._angle_classes

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "mode": self.mode,
            "label": self.label,
            "points": [p.to_json() for p in self.points],
        }

    @staticmethod
    def from_json(data: dict) -> "SubspaceConfiguration":
        mode = data.get("mode", EXACT)
        pts = [SubspacePoint(p["rows"], mode=mode) for p in data["points"]]
        config = SubspaceConfiguration(pts, label=data.get("label", ""))
        if (config.m, config.n) != (int(data["m"]), int(data["n"])):
            raise ValueError("declared (m, n) disagree with the point shapes")
        return config


def _row_inner(u, v) -> ExactComplex:
    total = CX_ZERO
    for x, y in zip(u, v):
        total = total + x * y.conjugate()
    return total


def _cross_gram(a: SubspacePoint, b: SubspacePoint):
    return [
        [_row_inner(ra, rb) for rb in b.basis] for ra in a.basis
    ]


def _check_pair(a: SubspacePoint, b: SubspacePoint):
    if (a.m, a.n) != (b.m, b.n):
        raise ValueError(f"ambient mismatch: ({a.m},{a.n}) vs ({b.m},{b.n})")
    if a.mode != b.mode:
        raise ValueError(f"mode mismatch: {a.mode} vs {b.mode}")


def _orthonormal_rows(arr: np.ndarray) -> np.ndarray:
    """Orthonormal columns spanning the row space, via pivoted QR."""
    q, r, _ = scipy.linalg.qr(arr.T, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag.size < arr.shape[0] or diag.min() < RANK_TOL * diag.max():
        raise RankDeficiencyError("float basis is numerically rank deficient")
    return q


def principal_angles(a: SubspacePoint, b: SubspacePoint) -> tuple:
    """Descending eigenvalues of the composed projectors, m of them.

    Exact mode computes the characteristic polynomial of the m x m
    Gram-corrected matrix exactly and factors it by rational-root search;
    an irrational spectrum raises :class:`IrrationalAnglesError`.
    """
    _check_pair(a, b)
    if a.mode == FLOAT:
        qa = _orthonormal_rows(a.basis)
        qb = _orthonormal_rows(b.basis)
        s = np.linalg.svd(qa.conj().T @ qb, compute_uv=False)
        vals = np.clip(s, 0.0, 1.0) ** 2
        return tuple(float(v) for v in vals)

    ga_inv = invert([list(r) for r in a.gram()])
    gb_inv = invert([list(r) for r in b.gram()])
    product = mat_mul(
        mat_mul(ga_inv, _cross_gram(a, b)),
        mat_mul(gb_inv, _cross_gram(b, a)),
    )
    poly_cx = charpoly(product)
    poly = []
    for c in poly_cx:
        c = as_exact_complex(c) if not isinstance(c, ExactComplex) else c
        if c.im:
            raise ArithmeticError("characteristic polynomial not real")
        poly.append(c.re)
    roots, leftover = rational_roots(poly)
    if leftover:
        raise IrrationalAnglesError(
            "exact spectrum has irrational principal angles; "
            "convert the points to float mode"
        )
    vals = []
    for root, mult in roots:
        vals.extend([root] * mult)
    vals.sort(reverse=True)
    return tuple(vals)


def symmetry_image(a: SubspacePoint, b: SubspacePoint) -> SubspacePoint:
    """Image of b under the geodesic symmetry at a (reflection 2P_a - I)."""
    _check_pair(a, b)
    if a.mode == FLOAT:
        qa = _orthonormal_rows(a.basis)
        cols = b.basis.T
        reflected = 2.0 * (qa @ (qa.conj().T @ cols)) - cols
        return SubspacePoint(reflected.T, mode=FLOAT)
    ga_inv = invert([list(r) for r in a.gram()])
    proj = mat_mul(mat_mul(_cross_gram(b, a), ga_inv), [list(r) for r in a.basis])
    rows = [
        [2 * proj[i][k] - b.basis[i][k] for k in range(b.n)]
        for i in range(b.m)
    ]
    return SubspacePoint(rows, mode=EXACT)


def is_antipodal_pair(a: SubspacePoint, b: SubspacePoint, tol: float = 1e-8) -> bool:
    """True when every principal angle lies in {0, 1} (within tol in float mode)."""
    y = principal_angles(a, b)
    if a.mode == EXACT:
        return all(v == 0 or v == 1 for v in y)
    return all(min(abs(v), abs(1 - v)) <= tol for v in y)


def coordinate_subspace(indices: Iterable[int], n: int) -> SubspacePoint:
    """Exact span of the standard basis vectors with the given 0-based indices."""
    rows = []
    for i in indices:
        row = [CX_ZERO] * n
        row[i] = CX_ONE
        rows.append(row)
    return SubspacePoint(rows, mode=EXACT)


def great_antipodal(m: int, n: int) -> SubspaceConfiguration:
    """All coordinate m-subspaces of C^n, in lexicographic subset order.

    This is the standard maximum antipodal configuration; its cardinality
    binomial(n, m) is the largest any antipodal set can reach.
    """
    if m < 1 or n < 2 * m:
        raise ValueError(f"need 1 <= m and 2m <= n, got ({m}, {n})")
    pts = [coordinate_subspace(idx, n) for idx in combinations(range(n), m)]
    return SubspaceConfiguration(pts, label=f"great-antipodal({m},{n})")


def orthogonal_split_config(m: int, n: int) -> SubspaceConfiguration:
    """The n/m coordinate blocks of size m; requires m to divide n."""
    if m < 1 or n % m:
        raise ValueError(f"{m} does not divide {n}")
    pts = [
        coordinate_subspace(range(k * m, (k + 1) * m), n) for k in range(n // m)
    ]
    return SubspaceConfiguration(pts, label=f"orthogonal-split({m},{n})")


def six_point_config() -> SubspaceConfiguration:
    """Six exact planes in C^4: a minimum-size design that is not antipodal.

    Four coordinate planes plus two planes through e1 +- i*e2 and e3.  Every
    pair has vanishing last principal angle, yet two of the cross angles
    equal 1/2, so the set fails the antipodality test while meeting the
    design bound.
    """
    i_unit = ExactComplex(0, 1)
    pts = [
        coordinate_subspace([0, 1], 4),
        coordinate_subspace([2, 3], 4),
        coordinate_subspace([0, 3], 4),
        coordinate_subspace([1, 3], 4),
        SubspacePoint([[CX_ONE, i_unit, CX_ZERO, CX_ZERO],
                       [CX_ZERO, CX_ZERO, CX_ONE, CX_ZERO]], mode=EXACT),
        SubspacePoint([[CX_ONE, -i_unit, CX_ZERO, CX_ZERO],
                       [CX_ZERO, CX_ZERO, CX_ONE, CX_ZERO]], mode=EXACT),
    ]
    return SubspaceConfiguration(pts, label="six-point(2,4)")


def random_subspace(m: int, n: int, seed: int = 0) -> SubspacePoint:
    """Haar-ish float point from a seeded complex Gaussian basis."""
    if n < 2 * m:
        raise ValueError(f"need n >= 2m, got ({m}, {n})")
    rng = np.random.default_rng(seed)
    mtx = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    return SubspacePoint(mtx, mode=FLOAT)


def angles_to_json(y: tuple) -> list:
    if y and isinstance(y[0], float):
        return [float(v) for v in y]
    return [rational_to_str(v) for v in y]
