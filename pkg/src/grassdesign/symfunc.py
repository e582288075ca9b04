"""Symmetric polynomial evaluation and the normalized-Schur basis.

Evaluation points are plain sequences of scalars.  Exact entries (ints
or backend rationals) keep every operation exact; a single float entry
switches the whole evaluation to floating point.  Schur polynomials are
evaluated through the Jacobi-Trudi determinant, which stays well defined
at repeated coordinates (the all-ones point matters everywhere here);
the bialternant quotient is exposed only as a cross-check.
"""

from __future__ import annotations

from typing import Dict, Iterable, Sequence, Tuple

from . import exactlinalg
from .partitions import Partition, column_shape, hook_shape
from .scalars import as_rational, is_exact_real, rational, rational_to_str


def prepare_point(y: Sequence) -> Tuple[tuple, bool]:
    """Coerce an evaluation point, returning (values, exact_flag)."""
    vals = tuple(y)
    if all(is_exact_real(v) for v in vals):
        return tuple(as_rational(v) for v in vals), True
    return tuple(float(v) for v in vals), False


def elementary_all(y: Sequence, upto: int) -> list:
    """e_0 .. e_upto, read off the expanded product prod_j (1 + y_j t)."""
    vals, exact = prepare_point(y)
    one = rational(1) if exact else 1.0
    e = [one] + [one * 0] * upto
    top = 0
    for v in vals:
        top = min(top + 1, upto)
        for j in range(top, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e

def elementary_eval(i: int, y: Sequence):
    """Elementary symmetric polynomial e_i(y); zero when i exceeds len(y)."""
    if i < 0:
        raise ValueError(f"negative index {i}")
    vals, exact = prepare_point(y)
    if i > len(vals):
        return rational(0) if exact else 0.0
    return elementary_all(vals, i)[i]


def complete_all(y: Sequence, upto: int) -> list:
    """h_0 .. h_upto via the exact recurrence h_k = sum_j (-1)^{j-1} e_j h_{k-j}."""
    vals, exact = prepare_point(y)
    m = len(vals)
    e = elementary_all(vals, min(upto, m))
    one = rational(1) if exact else 1.0
    h = [one]
    for k in range(1, upto + 1):
        acc = one * 0
        for j in range(1, min(k, m) + 1):
            term = e[j] * h[k - j]
            acc = acc + term if j % 2 else acc - term
        h.append(acc)
    return h


def complete_eval(i: int, y: Sequence):
    """Complete homogeneous symmetric polynomial h_i(y)."""
    if i < 0:
        raise ValueError(f"negative index {i}")
    return complete_all(y, i)[i]


def schur_eval(mu: Partition, y: Sequence):
    """Schur polynomial via the Jacobi-Trudi determinant det(h_{mu_i - i + j})."""
    vals, exact = prepare_point(y)
    if mu.m != len(vals):
        raise ValueError(f"partition ambient {mu.m} vs point length {len(vals)}")
    ell = mu.length_index()
    if ell == 0:
        return rational(1) if exact else 1.0
    top = mu.parts[0] + ell - 1
    h = complete_all(vals, top)
    zero = rational(0) if exact else 0.0

    def h_at(k):
        return h[k] if 0 <= k <= top else zero

    rows = [[h_at(mu.parts[i] - (i + 1) + (j + 1)) for j in range(ell)] for i in range(ell)]
    return exactlinalg.det(rows)


def schur_eval_giambelli(mu: Partition, y: Sequence):
    """Dual determinant det(e_{mu'_i - i + j}); cross-check for schur_eval."""
    vals, exact = prepare_point(y)
    conj = mu.conjugate()
    ell = conj.length_index()
    if ell == 0:
        return rational(1) if exact else 1.0
    m = len(vals)
    top = min(conj.parts[0] + ell - 1, m)
    e = elementary_all(vals, top)
    zero = rational(0) if exact else 0.0

    def e_at(k):
        if k == 0:
            return e[0]
        return e[k] if 0 < k <= m else zero

    rows = [[e_at(conj.parts[i] - (i + 1) + (j + 1)) for j in range(ell)] for i in range(ell)]
    return exactlinalg.det(rows)


def schur_eval_bialternant(mu: Partition, y: Sequence):
    """Quotient of alternants; requires pairwise distinct coordinates."""
    vals, exact = prepare_point(y)
    m = len(vals)
    if mu.m != m:
        raise ValueError(f"partition ambient {mu.m} vs point length {m}")
    if len(set(vals)) != m:
        raise ValueError("bialternant undefined at repeated coordinates")
    num = [[vals[i] ** (mu.parts[j] + m - (j + 1)) for j in range(m)] for i in range(m)]
    den = [[vals[i] ** (m - (j + 1)) for j in range(m)] for i in range(m)]
    return exactlinalg.det(num) / exactlinalg.det(den)


def schur_norm(mu: Partition):
    """Value at the all-ones point, prod_{i<j} (mu_i - mu_j + j - i)/(j - i)."""
    out = rational(1)
    parts = mu.parts
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            out = out * (parts[i] - parts[j] + j - i) / (j - i)
    return out


def normalized_schur_eval(mu: Partition, y: Sequence):
    """Schur polynomial scaled to equal 1 at the all-ones point."""
    vals, exact = prepare_point(y)
    norm = schur_norm(mu)
    val = schur_eval(mu, vals)
    return val / norm if exact else val / float(norm)


class SchurExpansion:
    """Finite linear combination of normalized Schur polynomials.

    Coefficients are exact rationals keyed by partitions of one ambient
    length; zero coefficients are never stored.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Dict[Partition, object] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        store: Dict[Partition, object] = {}
        for sigma, c in items:
            if sigma.m != m:
                raise ValueError(f"ambient mismatch: {sigma} in expansion over {m} variables")
            c = as_rational(c)
            if c:
                store[sigma] = store.get(sigma, rational(0)) + c
                if not store[sigma]:
                    del store[sigma]
        self.m = m
        self.coeffs = store

    def coeff(self, sigma: Partition):
        return self.coeffs.get(sigma, rational(0))

    def support(self):
        return sorted(self.coeffs, key=Partition.sort_key)

    def terms(self):
        return [(sigma, self.coeffs[sigma]) for sigma in self.support()]

    def evaluate(self, y: Sequence):
        vals, exact = prepare_point(y)
        if len(vals) != self.m:
            raise ValueError(f"point length {len(vals)} vs ambient {self.m}")
        total = rational(0) if exact else 0.0
        for sigma, c in self.coeffs.items():
            coeff = c if exact else float(c)
            total = total + coeff * normalized_schur_eval(sigma, vals)
        return total

    def at_ones(self):
        return sum(self.coeffs.values(), rational(0))

    def scaled(self, factor) -> "SchurExpansion":
        factor = as_rational(factor)
        return SchurExpansion(self.m, [(s, c * factor) for s, c in self.coeffs.items()])

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if other.m != self.m:
            raise ValueError("ambient mismatch in expansion sum")
        return SchurExpansion(self.m, list(self.coeffs.items()) + list(other.coeffs.items()))

    def __eq__(self, other):
        return (
            isinstance(other, SchurExpansion)
            and self.m == other.m
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        body = ", ".join(f"{s.parts}: {c}" for s, c in self.terms())
        return f"SchurExpansion(m={self.m}, {{{body}}})"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [
                {"partition": s.to_json(), "coeff": rational_to_str(c)}
                for s, c in self.terms()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "SchurExpansion":
        m = int(data["m"])
        return SchurExpansion(
            m,
            [
                (Partition(t["partition"], m=m), as_rational(t["coeff"]))
                for t in data["terms"]
            ],
        )


def pieri_e1(j: int, m: int) -> SchurExpansion:
    """Expansion of the product X*_(1) X*_(1^j) in the normalized-Schur basis.

    The product splits over the two shapes obtained by adding one box to a
    height-j column; the taller column drops out at j = m.
    """
    if not 1 <= j <= m:
        raise ValueError(f"column height {j} outside 1..{m}")
    terms = [(hook_shape(j, m), rational(j * (m + 1), (j + 1) * m))]
    if j < m:
        terms.append((column_shape(j + 1, m), rational(m - j, (j + 1) * m)))
    return SchurExpansion(m, terms)
