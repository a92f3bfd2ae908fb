"""The named-check registry: statuses, skip semantics, and failure honesty."""

from __future__ import annotations

import pytest

from posetgroups import (
    CHECK_NAMES,
    VerifyOptions,
    builtin_group,
    spec_for,
    verify_all,
    verify_one,
)


def result_map(report):
    return {r.name: r for r in report.results}


def test_every_check_passes_on_a_small_generating_spec():
    spec = spec_for(builtin_group("cyclic:2"), ["a"])
    report = verify_all(spec, VerifyOptions(fence_range=(1, 2)))
    assert report.ok
    passed, failed, skipped = report.counts()
    assert (passed, failed, skipped) == (len(CHECK_NAMES), 0, 0)


def test_gadget_checks_skip_when_nothing_is_attached():
    spec = spec_for(builtin_group("cyclic:2"), ["a"], mode="none")
    report = verify_all(spec)
    results = result_map(report)
    assert report.ok
    assert results["base-point-count"].status == "PASS"
    assert results["full-no-beat-points"].status == "SKIP"
    assert "attach" in results["full-no-beat-points"].detail
    assert results["collapse-monotone"].status == "SKIP"


def test_fence_checks_skip_in_star_only_mode():
    spec = spec_for(builtin_group("cyclic:2"), ["a"], mode="sonly")
    report = verify_all(spec)
    results = result_map(report)
    assert report.ok
    assert results["full-no-beat-points"].status == "PASS"
    assert results["variants-distinct"].status == "SKIP"
    assert results["betti-variant-invariance"].status == "SKIP"
    assert results["betti-prediction"].status == "PASS"


def test_non_generating_input_fails_honestly():
    spec = spec_for(
        builtin_group("klein4"), ["a"], require_generating=False
    )
    report = verify_all(spec, VerifyOptions(fence_range=(1,)))
    results = result_map(report)
    assert not report.ok
    assert results["generators"].status == "FAIL"
    # The base splits into cosets, and the connectivity check knows that.
    assert results["base-connected"].status == "PASS"
    assert results["base-aut-realization"].status == "FAIL"


def test_skip_by_request():
    spec = spec_for(builtin_group("cyclic:2"), ["a"])
    report = verify_all(
        spec,
        VerifyOptions(fence_range=(1,), skip=frozenset({"h1-action-faithful"})),
    )
    results = result_map(report)
    assert results["h1-action-faithful"].status == "SKIP"
    assert results["h1-action-faithful"].detail == "skipped by request"


def test_single_check_runs_alone():
    spec = spec_for(builtin_group("cyclic:3"), ["a"])
    report = verify_one(spec, "base-point-count")
    assert len(report.results) == 1
    assert report.results[0].status == "PASS"
    assert "9" in report.results[0].detail


def test_unknown_check_name_rejected():
    spec = spec_for(builtin_group("cyclic:2"), ["a"])
    with pytest.raises(KeyError, match="unknown check"):
        verify_one(spec, "no-such-check")


def test_reports_are_deterministic_apart_from_timing():
    spec = spec_for(builtin_group("cyclic:2"), ["a"])
    options = VerifyOptions(fence_range=(1, 2))
    first = verify_all(spec, options)
    second = verify_all(spec, options)
    assert first.to_text() == second.to_text()


def test_subject_line_describes_the_input():
    spec = spec_for(builtin_group("klein4"), ["a", "b"], pointed=True)
    report = verify_one(spec, "generators", subject=None)
    assert "order 4" in report.subject
    assert "pointed" in report.subject
    assert report.to_text().startswith("subject: ")
