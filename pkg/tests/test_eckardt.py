from fractions import Fraction

import pytest

from jkdp import dp2
from jkdp.eckardt import (
    ConfigASeed,
    DegenerateSeedError,
    PlaneCurve,
    PlanePoint,
    build_config_a,
    config_from_json,
    config_to_json,
    fixture_config_b,
    fixture_config_c,
    general_position_check,
    lattice_classes,
    line_through,
    validate_config,
)


def test_general_position_detects_collinear():
    pts = [PlanePoint.of(0, 0), PlanePoint.of(1, 1), PlanePoint.of(2, 2)]
    pts += [PlanePoint.of(1, 0), PlanePoint.of(0, 1), PlanePoint.of(3, 1), PlanePoint.of(1, 3)]
    report = general_position_check(pts)
    assert not report.ok
    assert ("collinear", (0, 1, 2)) in report.failures


def test_general_position_detects_duplicate():
    pts = [PlanePoint.of(0, 0)] * 2 + [PlanePoint.of(i, i * i) for i in range(1, 6)]
    report = general_position_check(pts)
    assert ("duplicate", (0, 1)) in report.failures


def test_config_a_fixture():
    config = build_config_a()
    report = validate_config(config)
    assert report.ok, report.failed_names()
    assert all(c.contains(config.eckardt_point) for c in config.curves)
    assert [c.degree for c in config.curves] == [1, 1, 2, 2]


def test_config_a_perturbed_fails_membership():
    config = build_config_a()
    pts = list(config.points)
    pts[0] = PlanePoint.of(pts[0].coords[0] + Fraction(1, 97), pts[0].coords[1])
    from jkdp.eckardt import Configuration

    bad = Configuration("a", tuple(pts), config.eckardt_point, config.curves)
    report = validate_config(bad)
    assert not report.ok
    assert "line1_points" in report.failed_names() or "conic1_points" in report.failed_names()


def test_config_a_degenerate_seed_rejected():
    # both pencil members equal: the four curves are not distinct
    seed = ConfigASeed(
        q=PlanePoint.of(0, 0),
        base_points=(PlanePoint.of(1, 0), PlanePoint.of(0, 1), PlanePoint.of(1, 1)),
        members=(Fraction(1), Fraction(1)),
        line_points=(PlanePoint.of(1, 2), PlanePoint.of(1, 3)),
    )
    with pytest.raises(DegenerateSeedError):
        build_config_a(seed)


def test_config_b_fixture():
    config = fixture_config_b()
    report = validate_config(config)
    assert report.ok, report.failed_names()


def test_config_c_fixture():
    config = fixture_config_c()
    report = validate_config(config)
    assert report.ok, report.failed_names()


@pytest.mark.parametrize(
    "builder, pattern",
    [
        (build_config_a, (1, 1, 2, 2)),
        (fixture_config_b, (0, 2, 2, 2)),
        (fixture_config_c, (0, 1, 2, 3)),
    ],
)
def test_lattice_classes_form_clique_with_pattern(builder, pattern):
    config = builder()
    classes = lattice_classes(config)
    assert len(classes) == 4
    for v in classes:
        assert dp2.is_exceptional(v), v
    for i, u in enumerate(classes):
        for v in classes[i + 1 :]:
            assert dp2.dot(u, v) == 1
    std = tuple(tuple(1 if i == j + 1 else 0 for i in range(8)) for j in range(7))
    assert dp2.classify_clique_images(classes, std) == pattern


def test_json_roundtrip():
    for builder in (build_config_a, fixture_config_b, fixture_config_c):
        config = builder()
        data = config_to_json(config)
        assert config_from_json(data) == config


def test_line_through():
    l = line_through(PlanePoint.of(0, 0), PlanePoint.of(1, 1))
    assert l.contains(PlanePoint.of(5, 5))
    assert not l.contains(PlanePoint.of(1, 2))
    assert l == PlaneCurve.of(1, (1, -1, 0))
