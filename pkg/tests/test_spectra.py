"""
Tests for the scietex.qwalk.spectra subpackage.

This module tests the dense truncations of the evolution operator, their eigendecomposition and
the classification of eigenvalues against the analytic bands, using the Hadamard walk with edge
defects and with the identity coin on {-1, 0, 1} as reference models.
"""

import pytest
import numpy as np
from numpy.testing import assert_allclose, assert_almost_equal

try:
    from src.scietex.qwalk.base import UnsupportedParameter, WindowMismatch
    from src.scietex.qwalk.lattice import (
        Boundary,
        CoinField,
        DefectSpec,
        ModelParams,
        PerturbationSpec,
        SiteOverride,
        State,
        Window,
        assemble_coin_field,
        make_coin_c0,
        step,
    )
    from src.scietex.qwalk.symbol import essential_band, symbol_eigenvalues
    from src.scietex.qwalk.spectra import (
        TruncatedOperator,
        build_matrix,
        eigendecompose,
        SpectrumLabel,
        ClassifyTolerances,
        localization_measure,
        classify,
        band_hausdorff_distance,
        doubling_stable,
        spectrum_of,
    )
except ModuleNotFoundError:
    from scietex.qwalk.base import UnsupportedParameter, WindowMismatch
    from scietex.qwalk.lattice import (
        Boundary,
        CoinField,
        DefectSpec,
        ModelParams,
        PerturbationSpec,
        SiteOverride,
        State,
        Window,
        assemble_coin_field,
        make_coin_c0,
        step,
    )
    from scietex.qwalk.symbol import essential_band, symbol_eigenvalues
    from scietex.qwalk.spectra import (
        TruncatedOperator,
        build_matrix,
        eigendecompose,
        SpectrumLabel,
        ClassifyTolerances,
        localization_measure,
        classify,
        band_hausdorff_distance,
        doubling_stable,
        spectrum_of,
    )

S2 = 1.0 / np.sqrt(2.0)
HADAMARD = ModelParams()
REFERENCE_SITES = (-1, 0, 1)


def edge_field(half_width):
    """Hadamard walk with edge defects centered at 0 and 1."""
    return assemble_coin_field(
        HADAMARD, DefectSpec(centers=(0, 1)), None, Window.centered(half_width)
    )


def vertex_field(half_width):
    """Hadamard walk with the identity coin on {-1, 0, 1}."""
    override = SiteOverride(sites=REFERENCE_SITES, coin=ModelParams(p=1.0))
    return assemble_coin_field(HADAMARD, None, None, Window.centered(half_width), [override])


@pytest.fixture(name="edge_report", scope="module")
def edge_report_fixture():
    """Classified periodic spectrum of the edge walk at L = 60."""
    return spectrum_of(edge_field(60))


@pytest.fixture(name="vertex_report", scope="module")
def vertex_report_fixture():
    """Classified periodic spectrum of the vertex walk at L = 60."""
    return spectrum_of(vertex_field(60))


def pairs_near(report, lam, tol=1e-10):
    """Eigenpairs of a report within `tol` of `lam`, with their labels."""
    return [
        (pair, label)
        for pair, label in zip(report.eigenpairs, report.labels)
        if abs(pair.eigenvalue - lam) <= tol
    ]


# Tests for build_matrix
def test_dimension():
    """The window [-60, 60] gives dimension 242."""
    op = build_matrix(edge_field(60), Window.centered(60))
    assert op.dimension == 242
    assert op.matrix.shape == (242, 242)
    assert op.boundary == Boundary.PERIODIC


def test_column_example():
    """The column of (x=0, c=0) has 1/sqrt2 at (-1, 0) and -1/sqrt2 at (1, 1)."""
    field = CoinField.constant(Window.centered(5), make_coin_c0(HADAMARD))
    op = build_matrix(field, field.window, Boundary.TRUNCATE)
    column = op.matrix[:, 10]
    assert np.count_nonzero(column) == 2
    assert_almost_equal(column[8], S2)
    assert_almost_equal(column[13], -S2)


def test_matrix_agrees_with_step():
    """For interior states the matrix action equals the exact step."""
    spec = PerturbationSpec(kind="exponential", M=0.3, seed=5)
    field = assemble_coin_field(HADAMARD, DefectSpec(centers=(2,)), spec, Window.centered(8))
    rng = np.random.default_rng(0)
    inner = Window(-7, 7)
    amp = rng.normal(size=(inner.size, 2)) + 1j * rng.normal(size=(inner.size, 2))
    state = State(inner, amp).embedded(field.window)
    expected = step(State(inner, amp), field).restricted(field.window)
    for boundary in (Boundary.PERIODIC, Boundary.TRUNCATE):
        moved = build_matrix(field, field.window, boundary).apply(state)
        assert_allclose(moved.amp, expected.amp, atol=1e-13)


def test_periodic_unitary():
    """Periodic truncations of unitary fields are unitary."""
    spec = PerturbationSpec(kind="exponential", M=0.5, seed=2)
    field = assemble_coin_field(HADAMARD, DefectSpec(centers=(0, 4)), spec, Window.centered(20))
    op = build_matrix(field, field.window, Boundary.PERIODIC)
    assert op.unitarity_defect() <= 1e-10


def test_truncate_contraction():
    """Hard truncations have operator norm at most one."""
    op = build_matrix(edge_field(20), Window.centered(20), Boundary.TRUNCATE)
    assert op.operator_norm() <= 1.0 + 1e-10
    assert op.unitarity_defect() >= 0.49


def test_build_matrix_errors():
    """Windows outside the field and the padded mode are rejected."""
    field = edge_field(10)
    with pytest.raises(WindowMismatch):
        build_matrix(field, Window.centered(11))
    with pytest.raises(UnsupportedParameter, match="Padded boundary"):
        build_matrix(field, field.window, Boundary.PADDED)


def test_sub_window_truncation():
    """A truncation may use a sub-window of the field."""
    op = build_matrix(edge_field(10), Window(-3, 3), Boundary.TRUNCATE)
    assert op.dimension == 14


def test_operator_read_only():
    """Operator matrices cannot be modified."""
    op = build_matrix(edge_field(5), Window.centered(5))
    with pytest.raises(ValueError):
        op.matrix[0, 0] = 1.0


# Tests for eigendecompose
def test_eigendecompose_reflecting_blocks():
    """Blocks [[0, 1], [-1, 0]] have eigenvalues +-i."""
    block = np.array([[0.0, 1.0], [-1.0, 0.0]])
    op = TruncatedOperator(Window(0, 1), Boundary.TRUNCATE, np.kron(np.eye(2), block))
    pairs = eigendecompose(op)
    values = np.array([pair.eigenvalue for pair in pairs])
    assert_allclose(np.sort(values.imag), [-1.0, -1.0, 1.0, 1.0], atol=1e-14)
    assert_allclose(values.real, 0.0, atol=1e-14)
    for pair in pairs:
        assert_almost_equal(np.linalg.norm(pair.vector), 1.0)
        assert pair.residual <= 1e-12


def test_eigendecompose_hadamard_ring():
    """A Hadamard ring of 64 sites has the symbol eigenvalues at commensurate momenta."""
    field = CoinField.constant(Window(0, 63), make_coin_c0(HADAMARD))
    pairs = eigendecompose(build_matrix(field, field.window))
    band = essential_band(HADAMARD)
    assert len(pairs) == 128
    for pair in pairs:
        assert abs(pair.modulus - 1.0) <= 1e-10
        assert band.distance(pair.phase) <= 1e-9
        assert pair.residual <= 1e-8
    expected = [
        lam for k in range(64) for lam in symbol_eigenvalues(2 * np.pi * k / 64, HADAMARD)
    ]
    expected_phases = np.sort(np.mod(np.angle(expected), 2 * np.pi))
    assert_allclose(np.sort([pair.phase for pair in pairs]), expected_phases, atol=1e-9)


def test_eigendecompose_shift_ring():
    """The identity coin gives the pure shift spectrum 2 pi k / N."""
    n = 24
    field = CoinField.constant(Window(0, n - 1), make_coin_c0(ModelParams(p=1.0)))
    pairs = eigendecompose(build_matrix(field, field.window))
    for pair in pairs:
        k = pair.phase * n / (2 * np.pi)
        assert abs(k - round(k)) <= 1e-9


def test_eigendecompose_ordering(edge_report):
    """Eigenpairs are ordered by phase."""
    phases = [pair.phase for pair in edge_report.eigenpairs]
    assert all(a <= b for a, b in zip(phases, phases[1:]))
    assert all(0.0 <= t < 2 * np.pi for t in phases)


def test_eigenpair_as_state(edge_report):
    """Eigenvectors convert to states on the operator window."""
    state = edge_report.eigenpairs[0].as_state(Window.centered(60))
    assert_almost_equal(state.norm(), 1.0)


# Tests for localization_measure
def test_localization_delta():
    """A delta vector is fully localized."""
    vector = np.zeros(242, dtype=complex)
    vector[100] = 1.0
    assert localization_measure(vector) == 1.0


def test_localization_uniform():
    """A uniform vector over 121 sites has measure 21/121."""
    vector = np.ones(242) / np.sqrt(242)
    assert_almost_equal(localization_measure(vector), 42 / 242)
    assert_almost_equal(localization_measure(vector, periodic=True), 42 / 242)


def test_localization_wraps():
    """Periodic windows join mass across the ends."""
    vector = np.zeros(60, dtype=complex)
    vector[0] = vector[-1] = 1.0
    assert_almost_equal(localization_measure(vector, radius=2, periodic=True), 1.0)
    assert_almost_equal(localization_measure(vector, radius=2), 0.5)


def test_localization_small_and_zero():
    """Short vectors are fully localized, the zero vector not at all."""
    assert localization_measure(np.ones(10), radius=10) == 1.0
    assert localization_measure(np.zeros(100), radius=2) == 0.0


# Tests for classify
def test_tolerances_resolved():
    """The band-edge tolerance depends on the closure."""
    tol = ClassifyTolerances()
    assert tol.resolved(True).band_edge == 1e-9
    assert tol.resolved(False).band_edge == 0.02
    assert ClassifyTolerances(band_edge=0.1).resolved(True).band_edge == 0.1


def test_edge_walk_embedded(edge_report):
    """The edge walk has embedded eigenvalues +-i with eigenvectors on {-1, 0, 1}."""
    window = Window.centered(60)
    inside = [2 * window.index(x) + c for x in REFERENCE_SITES for c in (0, 1)]
    outside = np.ones(242, dtype=bool)
    outside[inside] = False
    for lam in (1j, -1j):
        found = pairs_near(edge_report, lam)
        assert found
        for pair, label in found:
            assert label == SpectrumLabel.BAND_LOCALIZED_EMBEDDED
            assert np.sum(np.abs(pair.vector[outside]) ** 2) <= 1e-8
            assert localization_measure(pair.vector, periodic=True) >= 0.999
    assert edge_report.window == window
    assert edge_report.boundary == Boundary.PERIODIC


def test_vertex_walk_not_embedded(vertex_report):
    """The vertex walk has no embedded eigenvalue; its bound states lie in gaps."""
    counts = vertex_report.counts()
    assert counts["band_localized_embedded"] == 0
    for pair in vertex_report.with_label(SpectrumLabel.GAP_DISCRETE):
        assert vertex_report.band.distance(pair.phase) > 1e-9


def test_pure_hadamard_extended():
    """The homogeneous walk has neither localized nor gap eigenvalues."""
    field = assemble_coin_field(HADAMARD, None, None, Window.centered(60))
    counts = spectrum_of(field).counts()
    assert counts["band_localized_embedded"] == 0
    assert counts["gap_discrete"] == 0
    assert counts["non_unimodular"] == 0


def test_label_order():
    """Rules apply in order: modulus, threshold, gap, localization."""
    op = TruncatedOperator(
        Window(0, 1),
        Boundary.TRUNCATE,
        np.diag([0.5, np.exp(1j * np.pi / 4), 1.0, np.exp(1j * np.pi / 2)]),
    )
    report = classify(eigendecompose(op), essential_band(HADAMARD))
    labels = {round(pair.phase, 6): label for pair, label in zip(report.eigenpairs, report.labels)}
    assert report.counts()["non_unimodular"] == 1
    assert labels[round(np.pi / 4, 6)] == SpectrumLabel.NEAR_THRESHOLD
    assert labels[round(np.pi / 2, 6)] == SpectrumLabel.BAND_LOCALIZED_EMBEDDED
    assert sum(report.counts().values()) == len(report) == 4


def test_report_rows(edge_report):
    """Rows carry the CSV columns."""
    row = edge_report.rows()[0]
    assert list(row) == ["re", "im", "phase", "modulus", "label", "loc_measure"]
    assert row["label"] in {label.value for label in SpectrumLabel}


def test_spectrum_of_without_recipe():
    """Fields without recipe need explicit parameters."""
    field = CoinField.constant(Window(0, 9), make_coin_c0(HADAMARD))
    with pytest.raises(UnsupportedParameter, match="without recipe"):
        spectrum_of(field)
    report = spectrum_of(field, params=HADAMARD)
    assert len(report) == 20


def test_truncate_keeps_defect_eigenvalues():
    """The hard truncation of the edge walk keeps exact eigenvalues +-i."""
    field = edge_field(60)
    op = build_matrix(field, field.window, Boundary.TRUNCATE)
    pairs = eigendecompose(op)
    assert max(pair.modulus for pair in pairs) <= 1.0 + 1e-10
    for lam in (1j, -1j):
        near = [pair for pair in pairs if abs(pair.eigenvalue - lam) <= 1e-10]
        assert near
        assert all(pair.residual <= 1e-10 for pair in near)
    report = classify(pairs, essential_band(HADAMARD))
    assert report.tolerances.band_edge == 0.02
    assert report.counts()["non_unimodular"] > 0


# Tests for stability checks
def test_doubling_stability():
    """Localized eigenvalues at L = 60 recur at L = 120."""
    for build in (edge_field, vertex_field):
        small = spectrum_of(build(60))
        large = spectrum_of(build(120))
        check = doubling_stable(small, large, tol=1e-6)
        assert check.ok
        assert len(check.stable) == len(
            small.with_label(SpectrumLabel.BAND_LOCALIZED_EMBEDDED, SpectrumLabel.GAP_DISCRETE)
        )


def test_doubling_detects_missing(edge_report, vertex_report):
    """Eigenvalues absent from the other spectrum are unstable."""
    check = doubling_stable(edge_report, vertex_report)
    assert not check.ok
    assert any(abs(lam - 1j) <= 1e-10 for lam in check.unstable)


def test_band_hausdorff_perturbed():
    """Extended eigenphases of the perturbed walk stay close to the bands."""
    spec = PerturbationSpec(kind="exponential", M=0.05, rho=1.0, seed=3)
    field = assemble_coin_field(HADAMARD, None, spec, Window.centered(120))
    report = spectrum_of(field)
    phases = [
        pair.phase
        for pair in report.with_label(SpectrumLabel.BAND_EXTENDED, SpectrumLabel.NEAR_THRESHOLD)
    ]
    assert band_hausdorff_distance(phases, report.band) <= 0.05


def test_band_hausdorff_examples():
    """Hausdorff distance of simple phase sets."""
    band = essential_band(HADAMARD)
    assert band_hausdorff_distance([], band) == float("inf")
    assert band_hausdorff_distance([0.0], band) >= np.pi / 4
    dense = band.interior_grid(0.001, 0.0)
    assert band_hausdorff_distance(np.concatenate([dense, band.thresholds]), band) <= 1e-3
