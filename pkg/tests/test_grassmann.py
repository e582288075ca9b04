"""Subspace geometry: angles, symmetries, antipodality, configurations."""

import json

import numpy as np
import pytest

from grassdesign.grassmann import (
    EXACT,
    FLOAT,
    IrrationalAnglesError,
    RankDeficiencyError,
    SubspaceConfiguration,
    SubspacePoint,
    coordinate_subspace,
    great_antipodal,
    is_antipodal_pair,
    orthogonal_split_config,
    principal_angles,
    random_subspace,
    six_point_config,
    symmetry_image,
)
from grassdesign.partitions import binom
from grassdesign.scalars import rational

HALF = rational(1, 2)


def exact_point(rows):
    return SubspacePoint(rows, mode=EXACT)


class TestSubspacePoint:
    def test_rank_validation_exact(self):
        with pytest.raises(RankDeficiencyError):
            exact_point([["1", "0", "0", "0"], ["2", "0", "0", "0"]])

    def test_rank_validation_float(self):
        with pytest.raises(RankDeficiencyError):
            SubspacePoint([[1.0, 0, 0, 0], [1.0, 1e-14, 0, 0]], mode=FLOAT)

    def test_exact_json_round_trip(self):
        p = six_point_config()[4]
        data = p.to_json()
        assert data["rows"][0][1] == "0+1*i"
        q = SubspacePoint(data["rows"], mode=EXACT)
        assert q.same_subspace(p)

    def test_mode_mismatch_rejected(self):
        a = coordinate_subspace([0, 1], 4)
        b = a.to_float()
        with pytest.raises(ValueError):
            principal_angles(a, b)


class TestPrincipalAngles:
    def test_self_is_all_ones(self):
        a = coordinate_subspace([0, 2], 4)
        assert principal_angles(a, a) == (1, 1)

    def test_orthogonal_is_all_zeros(self):
        a = coordinate_subspace([0, 1], 4)
        b = coordinate_subspace([2, 3], 4)
        assert principal_angles(a, b) == (0, 0)

    def test_half_angle_pair(self):
        x = six_point_config()
        assert principal_angles(x[2], x[4]) == (HALF, 0)

    def test_symmetric_in_arguments(self):
        x = six_point_config()
        for i in range(6):
            for j in range(6):
                assert principal_angles(x[i], x[j]) == principal_angles(x[j], x[i])

    def test_basis_invariance_exact(self):
        x = six_point_config()[4]
        recombined = x.recombined([["1", "1/2"], ["0", "1/3"]])
        for other in six_point_config():
            assert principal_angles(x, other) == principal_angles(recombined, other)

    def test_basis_invariance_float(self):
        rng = np.random.default_rng(8)
        a = random_subspace(2, 6, seed=1)
        b = random_subspace(2, 6, seed=2)
        coeffs = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        a2 = a.recombined(coeffs)
        ya = principal_angles(a, b)
        yb = principal_angles(a2, b)
        assert max(abs(u - v) for u, v in zip(ya, yb)) < 1e-10

    def test_unitary_invariance_float(self):
        rng = np.random.default_rng(21)
        z = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        q, _ = np.linalg.qr(z)
        a = random_subspace(2, 6, seed=5)
        b = random_subspace(2, 6, seed=6)
        ga = SubspacePoint(a.basis @ q.T, mode=FLOAT)
        gb = SubspacePoint(b.basis @ q.T, mode=FLOAT)
        ya = principal_angles(a, b)
        yg = principal_angles(ga, gb)
        assert max(abs(u - v) for u, v in zip(ya, yg)) < 1e-10

    def test_irrational_spectrum_is_an_error(self):
        # a line at 30 degrees to the axis has angle value 3/4 with it,
        # but mixing a transcendental-free irrational entry forces an
        # unsplittable characteristic polynomial
        a = exact_point([["1", "0", "0", "0"], ["0", "1", "1", "0"]])
        b = exact_point([["1", "1", "0", "0"], ["0", "0", "1", "1"]])
        with pytest.raises(IrrationalAnglesError):
            principal_angles(a, b)

    def test_float_agrees_with_exact_on_six_points(self):
        x = six_point_config()
        xf = x.to_float()
        for i in range(6):
            for j in range(6):
                ye = principal_angles(x[i], x[j])
                yf = principal_angles(xf[i], xf[j])
                assert max(abs(float(u) - v) for u, v in zip(ye, yf)) < 1e-12


class TestSymmetry:
    def test_fixes_base_point(self):
        a = coordinate_subspace([0, 3], 5)
        assert symmetry_image(a, a).same_subspace(a)

    def test_fixes_coordinate_subspaces(self):
        pts = great_antipodal(2, 5)
        for a in pts:
            for b in pts:
                assert symmetry_image(a, b).same_subspace(b)

    def test_involution(self):
        a = coordinate_subspace([0, 1], 4)
        b = six_point_config()[4]
        image = symmetry_image(a, b)
        assert symmetry_image(a, image).same_subspace(b)

    def test_moves_non_antipodal_pairs(self):
        x = six_point_config()
        assert not symmetry_image(x[2], x[4]).same_subspace(x[4])

    def test_float_mode(self):
        a = random_subspace(2, 4, seed=11)
        b = random_subspace(2, 4, seed=12)
        image = symmetry_image(a, b)
        back = symmetry_image(a, image)
        assert back.same_subspace(b)

    def test_complement_is_fixed_and_orthogonal(self):
        a = coordinate_subspace([0, 1], 4)
        comp = a.orthogonal_complement()
        assert comp.m == 2
        assert principal_angles(a, comp) == (0, 0)
        assert symmetry_image(a, comp).same_subspace(comp)


class TestAntipodality:
    def test_pairs(self):
        for m, n in ((2, 4), (2, 5)):
            s = great_antipodal(m, n)
            assert all(is_antipodal_pair(a, b) for a in s for b in s)
        x = six_point_config()
        assert not is_antipodal_pair(x[2], x[4])
        assert is_antipodal_pair(x[0], x[0])

    def test_float_tolerance(self):
        s = great_antipodal(2, 4).to_float()
        assert all(is_antipodal_pair(a, b, tol=1e-10) for a in s for b in s)
        r = random_subspace(2, 4, seed=3)
        r2 = random_subspace(2, 4, seed=4)
        assert not is_antipodal_pair(r, r2, tol=1e-6)


class TestConfigurations:
    def test_great_antipodal_sizes(self):
        for m, n in ((1, 2), (2, 4), (2, 5), (3, 6)):
            s = great_antipodal(m, n)
            assert len(s) == binom(n, m)
        with pytest.raises(ValueError):
            great_antipodal(2, 3)

    def test_great_antipodal_on_projective_line(self):
        s = great_antipodal(1, 2)
        assert len(s) == 2
        assert principal_angles(s[0], s[1]) == (0,)

    def test_orthogonal_split(self):
        o = orthogonal_split_config(2, 4)
        assert len(o) == 2
        assert principal_angles(o[0], o[1]) == (0, 0)
        assert o[0].same_subspace(coordinate_subspace([0, 1], 4))
        with pytest.raises(ValueError):
            orthogonal_split_config(2, 5)

    def test_six_point_angle_matrix(self):
        x = six_point_config()
        mat = x.angle_matrix()
        ONE2 = (rational(1), rational(1))
        ZERO2 = (rational(0), rational(0))
        TEN = (rational(1), rational(0))
        HZ = (HALF, rational(0))
        expected = [
            [ONE2, ZERO2, TEN, TEN, TEN, TEN],
            [ZERO2, ONE2, TEN, TEN, TEN, TEN],
            [TEN, TEN, ONE2, TEN, HZ, HZ],
            [TEN, TEN, TEN, ONE2, HZ, HZ],
            [TEN, TEN, HZ, HZ, ONE2, TEN],
            [TEN, TEN, HZ, HZ, TEN, ONE2],
        ]
        assert [[tuple(y) for y in row] for row in mat] == expected

    def test_six_point_last_angles_vanish(self):
        x = six_point_config()
        mat = x.angle_matrix()
        for i in range(6):
            for j in range(6):
                if i != j:
                    assert mat[i][j][1] == 0

    def test_six_point_splits_into_two_antipodal_groups(self):
        x = six_point_config()
        for group in ([0, 1, 2, 3], [4, 5]):
            for i in group:
                for j in group:
                    assert is_antipodal_pair(x[i], x[j])

    def test_angle_class_counts(self):
        s = great_antipodal(2, 4)
        classes = s.angle_classes()
        assert sum(classes.values()) == 36
        assert classes[(rational(1), rational(1))] == 6
        assert classes[(rational(0), rational(0))] == 6
        assert classes[(rational(1), rational(0))] == 24

    def test_mixed_modes_rejected(self):
        a = coordinate_subspace([0, 1], 4)
        with pytest.raises(ValueError):
            SubspaceConfiguration([a, a.to_float()])

    def test_json_round_trip_exact(self):
        x = six_point_config()
        data = json.loads(json.dumps(x.to_json()))
        back = SubspaceConfiguration.from_json(data)
        assert back.mode == EXACT and len(back) == 6
        assert back.angle_matrix() == x.angle_matrix()

    def test_json_round_trip_float(self):
        pts = [random_subspace(2, 4, seed=k) for k in range(3)]
        config = SubspaceConfiguration(pts, label="floaty")
        data = json.loads(json.dumps(config.to_json()))
        back = SubspaceConfiguration.from_json(data)
        assert back.mode == FLOAT
        ya = config.angle_matrix()
        yb = back.angle_matrix()
        for i in range(3):
            for j in range(3):
                assert max(abs(u - v) for u, v in zip(ya[i][j], yb[i][j])) < 1e-12


class TestRandomSubspace:
    def test_self_angles(self):
        p = random_subspace(2, 6, seed=0)
        assert all(abs(v - 1) < 1e-12 for v in principal_angles(p, p))

    def test_generic_position(self):
        for seed in range(100):
            a = random_subspace(2, 6, seed=2 * seed)
            b = random_subspace(2, 6, seed=2 * seed + 1)
            y = principal_angles(a, b)
            assert y[-1] > 1e-6
            assert y[0] < 1 - 1e-6

    def test_determinism(self):
        a = random_subspace(3, 7, seed=42)
        b = random_subspace(3, 7, seed=42)
        assert (a.basis == b.basis).all()
