"""Certification engine: windows, horizons, verdicts, decompositions."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genusgaps.formulas import arithmetic_genus, contiguity_holds, linsys_dim
from genusgaps.gapmap import (
    CERTIFIED_NONGAP,
    PROVED_GAP,
    SOURCE_GAPS1,
    SOURCE_LOW_DEGREE,
    SOURCE_SEVERI,
    SOURCE_XU,
    UNKNOWN,
    candidate_gap_interval,
    certify_nongap,
    coarse_horizon,
    decompose,
    initial_gap_interval,
    realizable_interval,
    refined_horizon,
    second_gap_interval,
    status,
)
from genusgaps.intervals import Interval


def brute_certificate(d: int, g: int, n_max: int) -> tuple[int, int] | None:
    """Oracle: scan every window up to n_max for the smallest containing n."""
    for n in range(1, n_max + 1):
        pa, l = arithmetic_genus(d, n), linsys_dim(d, n)
        if pa - l <= g <= pa:
            return n, pa - g
    return None


class TestWindows:
    def test_documented_values(self):
        assert realizable_interval(6, 1) == Interval(7, 10)
        assert realizable_interval(4, 1) == Interval(0, 3)
        g92 = arithmetic_genus(9, 2)
        assert g92 == 64
        assert realizable_interval(9, 2) == Interval(g92 - 9, g92)

    def test_width_is_system_dimension(self):
        for d in range(4, 30):
            for n in range(1, 15):
                w = realizable_interval(d, n)
                assert w.hi - w.lo == linsys_dim(d, n)
                assert w.hi == arithmetic_genus(d, n)


class TestCandidateWindows:
    def test_documented_values(self):
        assert candidate_gap_interval(6, 1) == Interval(11, 15)
        assert candidate_gap_interval(8, 1) == Interval(22, 39)
        assert candidate_gap_interval(6, 2) == Interval(26, 26)
        assert candidate_gap_interval(6, 4) is None

    def test_absent_iff_contiguous(self):
        for d in range(4, 40):
            for n in range(1, 2 * d):
                absent = candidate_gap_interval(d, n) is None
                assert absent == contiguity_holds(d, n + 1)

    def test_closed_form_matches(self):
        for d in range(6, 501):
            assert candidate_gap_interval(d, 1) == Interval(
                (d * d - 3 * d + 4) // 2, d * d - 2 * d - 9
            )
            assert second_gap_interval(d) == candidate_gap_interval(d, 1)


class TestHorizons:
    def test_documented_values(self):
        assert coarse_horizon(6) == 6 * 5 * 11 // 6 - 1 == 54
        assert coarse_horizon(5) == 5 * 4 * 6 // 6 - 1 == 19
        assert coarse_horizon(4) == -1
        assert refined_horizon(5) == 2
        assert refined_horizon(6) == 46 - 19 - 1 == 26
        assert refined_horizon(7) == 64 - 19 - 1 == 44

    def test_refined_below_coarse(self):
        for d in range(5, 201):
            assert refined_horizon(d) <= coarse_horizon(d)

    def test_refined_is_a_window_chain_start(self):
        # the chain of joined windows starts right above the refined horizon
        for d in range(5, 40):
            h = refined_horizon(d)
            n = next(
                n for n in range(1, d + 1)
                if arithmetic_genus(d, n) - linsys_dim(d, n) == h + 1
            )
            for m in range(n + 1, 2 * d):
                assert contiguity_holds(d, m)

    def test_rejects_low_degree(self):
        with pytest.raises(ValueError):
            refined_horizon(4)
        with pytest.raises(ValueError):
            coarse_horizon(3)


class TestCertify:
    def test_documented_values(self):
        cert = certify_nongap(6, 8)
        assert (cert.n, cert.delta) == (1, 2)
        cert = certify_nongap(5, 3)
        assert (cert.n, cert.delta) == (1, 3)
        assert certify_nongap(6, 26) is None

    def test_matches_brute_force(self):
        for d in range(4, 10):
            for g in range(0, 200):
                got = certify_nongap(d, g)
                want = brute_certificate(d, g, 3 * d + 10)
                assert (None if got is None else (got.n, got.delta)) == want

    def test_delta_in_range(self):
        for d in range(4, 20):
            for g in range(0, 3 * coarse_horizon(d) // 2 + 2):
                cert = certify_nongap(d, g)
                if cert is not None:
                    assert 0 <= cert.delta <= linsys_dim(d, cert.n)
                    w = realizable_interval(d, cert.n)
                    assert g in w

    def test_degree_four_always_certifies(self):
        for g in range(0, 500):
            cert = certify_nongap(4, g)
            assert cert is not None
            assert arithmetic_genus(4, cert.n) - g == cert.delta

    def test_everything_above_refined_horizon(self):
        rng = random.Random(20260809)
        for d in range(5, 41):
            h = refined_horizon(d)
            for g in range(h + 1, h + 501):
                assert certify_nongap(d, g) is not None, (d, g)
            for _ in range(10):
                g = rng.randint(h + 500, 10**6)
                assert certify_nongap(d, g) is not None, (d, g)


class TestStatus:
    def test_documented_values(self):
        assert status(5, 2).verdict == PROVED_GAP
        assert status(5, 2).source == SOURCE_XU
        assert status(6, 13).verdict == PROVED_GAP
        assert status(6, 13).source == SOURCE_GAPS1
        assert status(6, 26).verdict == UNKNOWN
        assert status(6, 26).source is None

    def test_low_degrees(self):
        for d in (1, 2, 3):
            st = status(d, 17)
            assert st.verdict == CERTIFIED_NONGAP
            assert st.source == SOURCE_LOW_DEGREE
            assert st.certificate is None

    def test_certificate_only_with_severi_source(self):
        for d in range(4, 12):
            for g in range(0, 2 * coarse_horizon(d) + 5):
                st = status(d, g)
                assert (st.certificate is not None) == (st.source == SOURCE_SEVERI)

    def test_degree_five(self):
        for g in range(0, 50):
            st = status(5, g)
            if g <= 2:
                assert st.verdict == PROVED_GAP and st.source == SOURCE_XU
            else:
                assert st.verdict == CERTIFIED_NONGAP and st.certificate is not None

    @given(st.integers(4, 30), st.integers(0, 5000))
    def test_verdict_matches_certificate_search(self, d, g):
        verdict = status(d, g).verdict
        cert = certify_nongap(d, g)
        if cert is not None:
            assert verdict == CERTIFIED_NONGAP
        else:
            assert verdict in (PROVED_GAP, UNKNOWN)


def assert_consistent(d: int, g: int, dec=None) -> None:
    dec = decompose(d) if dec is None else dec
    st = status(d, g)
    if g > dec.horizon:
        assert st.verdict == CERTIFIED_NONGAP, (d, g)
        return
    if st.verdict == PROVED_GAP:
        assert dec.proved_gaps.contains(g), (d, g)
    elif st.verdict == CERTIFIED_NONGAP:
        assert dec.nongap_certified.contains(g), (d, g)
    else:
        assert dec.unknown_candidates.contains(g), (d, g)


class TestDecompose:
    def test_documented_values(self):
        d4 = decompose(4)
        assert not d4.proved_gaps and not d4.unknown_candidates
        d5 = decompose(5)
        assert d5.proved_gaps.to_pairs() == [[0, 2]]
        assert not d5.unknown_candidates
        d6 = decompose(6)
        assert d6.proved_gaps.to_pairs() == [[0, 6], [11, 15]]
        assert d6.unknown_candidates.to_pairs() == [[26, 26]]
        assert d6.horizon == 26
        d7 = decompose(7)
        assert d7.proved_gaps.to_pairs() == [[0, 11], [16, 26]]
        assert d7.unknown_candidates.to_pairs() == [[37, 44]]
        assert d7.horizon == 44

    def test_sources(self):
        d6 = decompose(6)
        assert d6.proved_sources == (
            (Interval(0, 6), SOURCE_XU),
            (Interval(11, 15), SOURCE_GAPS1),
        )
        d5 = decompose(5)
        assert d5.proved_sources == ((Interval(0, 2), SOURCE_XU),)

    def test_partition(self):
        for d in range(4, 31):
            dec = decompose(d)
            total = (
                dec.proved_gaps.count
                + dec.unknown_candidates.count
                + dec.nongap_certified.count
            )
            assert total == dec.horizon + 1
            everything = dec.proved_gaps.union(dec.unknown_candidates).union(
                dec.nongap_certified
            )
            assert everything.count == total  # pairwise disjoint

    def test_status_agrees_with_membership(self):
        for d in range(4, 17):
            dec = decompose(d)
            for g in range(0, 2 * max(coarse_horizon(d), 0) + 5):
                assert_consistent(d, g, dec)

    def test_status_agrees_with_membership_sampled(self):
        rng = random.Random(1)
        for d in (20, 33, 41, 52, 60):
            dec = decompose(d)
            top = 2 * coarse_horizon(d)
            for _ in range(400):
                assert_consistent(d, rng.randint(0, top), dec)

    def test_proved_gaps_never_certifiable(self):
        # theorem-level consistency: no window reaches into a proved gap range
        for d in range(5, 61):
            parts = [initial_gap_interval(d)]
            if d >= 6:
                parts.append(second_gap_interval(d))
            for part in parts:
                assert part is not None
                for g in range(part.lo, part.hi + 1):
                    assert certify_nongap(d, g) is None, (d, g)
