import dataclasses
import json
import random
import time

import pytest

from hopfweave.plane_fields import OpenBookClass, stable_equivalence
from hopfweave.plumbing import (
    Band,
    BandSign,
    KnotMove,
    canonical_form,
    knot_plumb,
    unknot,
)
from hopfweave.search import (
    SearchConfig,
    StabilizationCertificate,
    certificate_from_json,
    certificate_to_json,
    common_stabilization,
    verify_certificate,
)
from conftest import random_tree


def tplus_tree():
    return knot_plumb(unknot(), KnotMove.TPLUS, ())


def eight_tree():
    return knot_plumb(unknot(), KnotMove.E, ())


class TestCommonStabilization:
    def test_equal_trees_need_no_moves(self, rng):
        for _ in range(10):
            t = random_tree(rng, 4)
            cert = common_stabilization(t, t, SearchConfig(max_moves_per_side=1))
            assert cert is not None
            assert cert.moves_left == () and cert.moves_right == ()
            assert cert.budget_used == 0
            assert cert.matched_form == canonical_form(t)

    def test_trefoil_figure_eight_witness(self):
        cfg = SearchConfig(max_moves_per_side=1, coord_bound=1)
        start = time.monotonic()
        cert = common_stabilization(tplus_tree(), eight_tree(), cfg)
        elapsed = time.monotonic() - start
        assert elapsed < 5.0
        assert cert is not None
        assert [m.sign for m in cert.moves_left] == [BandSign.NEGATIVE]
        assert [m.sign for m in cert.moves_right] == [BandSign.POSITIVE]
        assert cert.matched_form.mu == 3
        assert cert.budget_used == 1
        assert verify_certificate(tplus_tree(), eight_tree(), cert)

    def test_zero_moves_exhausts_on_lambda_gap(self):
        cfg = SearchConfig(max_moves_per_side=0)
        assert common_stabilization(tplus_tree(), eight_tree(), cfg) is None

    def test_deterministic(self):
        cfg = SearchConfig(max_moves_per_side=1)
        first = common_stabilization(tplus_tree(), eight_tree(), cfg)
        second = common_stabilization(tplus_tree(), eight_tree(), cfg)
        assert first == second

    def test_mu_cap_violation(self):
        cfg = SearchConfig(max_moves_per_side=2, mu_cap=3)
        with pytest.raises(ValueError):
            common_stabilization(tplus_tree(), eight_tree(), cfg)

    def test_pruning_is_sound(self):
        rng = random.Random(41)
        cases = [(rng, 2, 2) for _ in range(6)] + [(rng, 4, 1) for _ in range(6)]
        for case_rng, max_mu, depth in cases:
            t1 = random_tree(case_rng, max_mu)
            t2 = random_tree(case_rng, max_mu)
            cfg = SearchConfig(max_moves_per_side=depth)
            pruned = common_stabilization(t1, t2, cfg, _prune=True)
            unpruned = common_stabilization(t1, t2, cfg, _prune=False)
            assert pruned == unpruned

    def test_budget_within_plane_field_bound(self):
        rng = random.Random(42)
        for _ in range(8):
            t1 = random_tree(rng, 3)
            t2 = random_tree(rng, 3)
            cert = common_stabilization(
                t1, t2, SearchConfig(max_moves_per_side=1))
            if cert is None:
                continue
            bound = stable_equivalence(
                OpenBookClass.from_tree(t1),
                OpenBookClass.from_tree(t2),
            ).hminus_budget
            assert cert.budget_used <= bound


class TestVerifyCertificate:
    def test_valid_certificate(self):
        cert = common_stabilization(
            tplus_tree(), eight_tree(), SearchConfig(max_moves_per_side=1))
        assert verify_certificate(tplus_tree(), eight_tree(), cert)

    def test_tampered_gluing_detected(self):
        cert = common_stabilization(
            tplus_tree(), eight_tree(), SearchConfig(max_moves_per_side=1))
        move = cert.moves_left[0]
        tampered = dataclasses.replace(
            cert,
            moves_left=(Band(move.sign, (move.gluing[0], move.gluing[1] + 1)),),
        )
        assert not verify_certificate(tplus_tree(), eight_tree(), tampered)

    def test_empty_certificate_on_unequal_trees(self):
        empty = StabilizationCertificate((), (), canonical_form(tplus_tree()), 0)
        assert not verify_certificate(tplus_tree(), eight_tree(), empty)

    def test_wrong_budget_detected(self):
        cert = common_stabilization(
            tplus_tree(), eight_tree(), SearchConfig(max_moves_per_side=1))
        assert not verify_certificate(
            tplus_tree(), eight_tree(),
            dataclasses.replace(cert, budget_used=cert.budget_used + 1))

    def test_malformed_moves_return_false(self):
        bad = StabilizationCertificate(
            (Band(BandSign.NEGATIVE, (1,)),), (), canonical_form(tplus_tree()), 1)
        assert not verify_certificate(tplus_tree(), eight_tree(), bad)


class TestCertificateJson:
    def test_round_trip(self):
        cert = common_stabilization(
            tplus_tree(), eight_tree(), SearchConfig(max_moves_per_side=1))
        data = json.loads(json.dumps(certificate_to_json(cert)))
        assert certificate_from_json(data) == cert

    def test_schema_keys(self):
        cert = common_stabilization(
            tplus_tree(), eight_tree(), SearchConfig(max_moves_per_side=1))
        data = certificate_to_json(cert)
        assert set(data) == {"left", "right", "matched", "budget"}
        assert data["budget"] == 1
