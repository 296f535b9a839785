import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from teich2.errors import BallCapacityError
from teich2.group import (
    ball,
    cells,
    generators,
    m_matrices,
    omega_table,
    relation_defect,
    side_pairing_check,
)
from teich2.hyperbolic import MobiusTransform, projective_gap, translation
from teich2.octagon import OctagonParams, build_geometry

A_REG = 2.0 ** -0.25
P0 = OctagonParams(0.8, math.pi / 12)

# regular-octagon generator g0 and its trace
U0_REG = -(1.0 + math.sqrt(2.0))
V0_REG = -2.0301035302564356 - 0.84089641525371454j
TRACE_REG = 4.8284271247461901


class TestGenerators:
    def test_regular_point_values(self):
        gens = generators(OctagonParams(A_REG, 0.0))
        g0 = gens.g[0]
        assert_allclose(g0.u, U0_REG, rtol=1e-14)
        assert_allclose(g0.v, V0_REG, rtol=1e-14)
        for g in gens.g:
            assert_allclose(abs(g.trace), TRACE_REG, rtol=1e-13)

    def test_all_hyperbolic_in_domain(self):
        rng = np.random.default_rng(42)
        for _ in range(15):
            at = rng.uniform(-0.6, 0.6)
            a = rng.uniform(1.0 / (math.sqrt(2.0) * math.cos(at)) + 0.02, 0.98)
            gens = generators(OctagonParams(a, at))
            for g in gens.g:
                assert g.classify() == "hyperbolic"
                assert abs(g.trace) > 2.0

    def test_rotation_conjugation_pairs(self):
        # g2, g3 are the quarter-turn conjugates of g0, g1: u fixed, v times i
        gens = generators(P0)
        for k in (0, 1):
            assert_allclose(gens.g[k + 2].u, gens.g[k].u, rtol=1e-13)
            assert_allclose(gens.g[k + 2].v, 1j * gens.g[k].v, rtol=1e-13)

    def test_letters_order_and_inverses(self):
        gens = generators(P0)
        labels = [label for label, _ in gens.letters()]
        assert labels == ["a", "A", "b", "B", "c", "C", "d", "D"]
        ident = MobiusTransform.identity()
        for k, ginv in enumerate(gens.inverses):
            assert projective_gap(gens.g[k] @ ginv, ident) < 1e-13


class TestTripleConstruction:
    def test_generators_match_matrix_products_and_translations(self):
        geom = build_geometry(P0)
        gens = generators(P0)
        mm = m_matrices(geom)
        omegas = omega_table(geom)
        for k in range(4):
            pk = omegas[k] / (1.0 + math.sqrt(1.0 - abs(omegas[k]) ** 2))
            assert gens.g[k].projective_gap(mm[k] @ mm[5]) < 1e-12
            assert gens.g[k].projective_gap(translation(pk)) < 1e-12


class TestRelation:
    def test_defect_and_sign(self):
        rep = relation_defect(generators(P0))
        assert rep.defect < 1e-12
        assert rep.sign == 1

    def test_defect_across_domain(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            at = rng.uniform(-0.7, 0.7)
            a = rng.uniform(1.0 / (math.sqrt(2.0) * math.cos(at)) + 0.02, 0.98)
            rep = relation_defect(generators(OctagonParams(a, at)))
            assert rep.defect < 1e-9


class TestSidePairing:
    def test_residuals_and_containment(self):
        geom = build_geometry(P0)
        rep = side_pairing_check(geom, generators(P0), samples=300, seed=1)
        assert rep.endpoint_residual < 1e-12
        assert rep.midpoint_residual < 1e-12
        assert rep.interior_samples == 300
        assert rep.interior_violations == 0
        assert rep.passed

    def test_seed_reproducible(self):
        geom = build_geometry(P0)
        gens = generators(P0)
        r1 = side_pairing_check(geom, gens, samples=100, seed=7)
        r2 = side_pairing_check(geom, gens, samples=100, seed=7)
        assert r1 == r2


class TestBall:
    def test_counts(self):
        gens = generators(P0)
        assert [len(ball(gens, n)) for n in range(4)] == [1, 9, 65, 457]

    def test_radius_one_words(self):
        words = ball(generators(P0), 1).words()
        assert words == ["", "a", "A", "b", "B", "c", "C", "d", "D"]

    def test_deterministic_rerun(self):
        gens = generators(P0)
        b1, b2 = ball(gens, 3), ball(gens, 3)
        assert b1.words() == b2.words()
        for e1, e2 in zip(b1.elements, b2.elements):
            assert projective_gap(e1.transform, e2.transform) == 0.0

    def test_elements_pairwise_distinct(self):
        b = ball(generators(P0), 2)
        els = [e.transform for e in b.elements]
        rng = np.random.default_rng(42)
        for _ in range(200):
            i, j = rng.integers(0, len(els), 2)
            if i != j:
                assert projective_gap(els[i], els[j]) > 1e-6

    def test_counts_at_regular_point(self):
        gens = generators(OctagonParams(A_REG, 0.0))
        assert len(ball(gens, 2)) == 65

    def test_capacity_guard(self):
        with pytest.raises(BallCapacityError):
            ball(generators(P0), 3, cap=100)

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError):
            ball(generators(P0), -1)


class TestCells:
    def test_cell_count_matches_ball(self):
        gens = generators(P0)
        tiles = cells(gens, 2)
        assert len(tiles) == 65

    def test_identity_cell_is_base_octagon(self):
        geom = build_geometry(P0)
        tile = cells(generators(P0), 0, geom=geom)[0]
        assert tile.word == ""
        assert_allclose(tile.vertices, geom.vertices, rtol=1e-15)

    def test_neighbor_cells_share_paired_side(self):
        geom = build_geometry(P0)
        gens = generators(P0)
        tile = [c for c in cells(gens, 1, geom=geom) if c.word == "a"][0]
        # g0 maps side 4 onto side 0, so the image octagon touches side 0
        image = {round(v.real, 9) + 1j * round(v.imag, 9) for v in tile.vertices}
        for v in (geom.vertices[0], geom.vertices[1]):
            assert round(v.real, 9) + 1j * round(v.imag, 9) in image
