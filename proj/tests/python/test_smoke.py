"""Smoke tests for the pysantalo extension module."""

import math

import pysantalo as ps


def test_counterexample_fails_the_inequality():
    f = ps.fixtures.counterexample_f()
    g = ps.fixtures.counterexample_g()
    rho = ps.RadialWeight.indicator_unit()
    cert = ps.santalo_verify(f, g, rho)
    assert not cert["passed"]
    assert abs(cert["lhs"] - 4.5) < 1e-3
    assert abs(cert["rhs"] - 4.0) < 1e-9

    duality = ps.duality_check(f, g, [0.0], rho, 20000, 1)
    assert duality["passed"]

    cloud = ps.fixtures.cloud_from_field(f)
    assert abs(ps.barycenter(cloud)[0]) < 1e-3


def test_yy_center_repairs_the_counterexample():
    f = ps.fixtures.counterexample_f()
    cloud = ps.fixtures.cloud_from_field(f)
    center = ps.yy_center_1d(cloud)
    assert abs(center[0] - 0.25) < 1e-3

    rho = ps.RadialWeight.indicator_unit()
    g = ps.polar_function(f, center, rho, [-1.0], [2.0], [2000])
    cert = ps.santalo_verify(f, g, rho)
    assert cert["passed"]
    assert abs(cert["lhs"] - 8.0 / 3.0) < 0.02


def test_equipartition_of_a_disc_cloud():
    cloud = ps.fixtures.uniform_disc_cloud(1024, 7)
    report = ps.yy_equipartition(cloud)
    assert len(report.masses) == 4
    for m in report.masses:
        assert abs(m - 256.0) <= 2.0
    verify = ps.equipartition_verify(report.tree, cloud, 1e-3)
    assert verify["passed"]


def test_weight_integrals():
    assert abs(ps.weight_integral(ps.RadialWeight.indicator_unit(), 2) - math.pi) < 1e-6
    assert abs(ps.weight_integral(ps.RadialWeight.gaussian(), 2) - 2 * math.pi) < 1e-6


def test_polytope_pipeline():
    square = ps.fixtures.square()
    polar = ps.polar_polytope(square)
    assert len(polar.vertices) == 4
    assert abs(ps.polytope_volume(square, "exact2d") - 4.0) < 1e-12
    assert abs(ps.polytope_volume(polar, "exact2d") - 2.0) < 1e-12
    cert = ps.blaschke_santalo_check(square, [0.0, 0.0])
    assert cert["passed"]
    assert cert["product"] < math.pi**2


def test_gaussian_sharpness():
    f = ps.fixtures.gaussian_field(1, 1024)
    rho = ps.RadialWeight.gaussian()
    g = ps.polar_function(f, [0.0], rho, f.lo, f.hi, f.shape)
    cert = ps.santalo_verify(f, g, rho)
    assert cert["passed"]
    assert abs(cert["margin"]) < 0.01 * cert["rhs"]


def test_errors_surface_as_python_exceptions():
    try:
        ps.WeightedPointCloud([], [])
    except Exception as exc:  # noqa: BLE001 - registered SantaloError
        assert "atom" in str(exc)
    else:
        raise AssertionError("empty clouds must be rejected")
