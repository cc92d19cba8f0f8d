"""
Tests for the scietex.qwalk.lattice subpackage.

This module tests windows, states, bulk and defect coins, coin field assembly (defects,
exponential perturbation and site overrides) and the exact time step of the walk with its three
boundary modes.
"""

import logging

import pytest
import numpy as np
from numpy.testing import assert_allclose, assert_almost_equal
from pydantic import ValidationError

try:
    from src.scietex.qwalk.base import (
        EnvelopeViolation,
        UnsupportedParameter,
        WindowMismatch,
        WindowTooSmall,
    )
    from src.scietex.qwalk.lattice import (
        Window,
        Boundary,
        HADAMARD_P,
        ModelParams,
        DefectSpec,
        PerturbationKind,
        PerturbationSpec,
        SiteOverride,
        CoinMatrix,
        make_coin_c0,
        make_defect_coin,
        State,
        CoinField,
        assemble_coin_field,
        perturbation_coins,
        step,
        evolve,
        position_distribution,
    )
except ModuleNotFoundError:
    from scietex.qwalk.base import (
        EnvelopeViolation,
        UnsupportedParameter,
        WindowMismatch,
        WindowTooSmall,
    )
    from scietex.qwalk.lattice import (
        Window,
        Boundary,
        HADAMARD_P,
        ModelParams,
        DefectSpec,
        PerturbationKind,
        PerturbationSpec,
        SiteOverride,
        CoinMatrix,
        make_coin_c0,
        make_defect_coin,
        State,
        CoinField,
        assemble_coin_field,
        perturbation_coins,
        step,
        evolve,
        position_distribution,
    )

S2 = 1.0 / np.sqrt(2.0)
S6 = 1.0 / np.sqrt(6.0)


@pytest.fixture(name="hadamard")
def hadamard_fixture():
    """Hadamard bulk parameters."""
    return ModelParams()


@pytest.fixture(name="edge_field")
def edge_field_fixture(hadamard):
    """Hadamard walk with edge defects centered at 0 and 1 on [-30, 30]."""
    return assemble_coin_field(hadamard, DefectSpec(centers=(0, 1)), None, Window.centered(30))


def random_state(window, seed):
    """Normalized random state on a window."""
    rng = np.random.default_rng(seed)
    amp = rng.normal(size=(window.size, 2)) + 1j * rng.normal(size=(window.size, 2))
    return State(window, amp).normalized()


# Tests for Window
def test_window_basics():
    """Size, sites and index of a window."""
    window = Window(-2, 3)
    assert window.size == 6
    assert window.sites.tolist() == [-2, -1, 0, 1, 2, 3]
    assert window.index(-2) == 0
    assert window.index(3) == 5
    assert 0 in window
    assert 4 not in window
    assert Window(-1, 1) in window
    assert Window(-3, 1) not in window


def test_window_too_small():
    """Windows need at least two sites."""
    with pytest.raises(WindowTooSmall, match="at least 2 sites"):
        Window(0, 0)
    with pytest.raises(WindowTooSmall):
        Window(3, 1)
    with pytest.raises(WindowTooSmall, match="outside window"):
        Window(0, 3).index(4)


def test_window_helpers():
    """Centered, covering, expanded, shifted and union windows."""
    assert Window.centered(60).size == 121
    assert Window.covering([3, -1, 2]) == Window(-1, 3)
    assert Window.covering([5]) == Window(5, 6)
    assert Window.covering([0], margin=2) == Window(-2, 2)
    assert Window(0, 4).expanded(2) == Window(-2, 6)
    assert Window(0, 4).expanded(-1) == Window(1, 3)
    assert Window(0, 4).shifted(-3) == Window(-3, 1)
    assert Window(0, 2).union(Window(5, 7)) == Window(0, 7)
    assert Window(-5, 5).contains_interior(-4)
    assert not Window(-5, 5).contains_interior(5)


# Tests for ModelParams and specs
def test_model_params_defaults(hadamard):
    """Default parameters are the Hadamard walk."""
    assert_almost_equal(hadamard.p, HADAMARD_P)
    assert_almost_equal(hadamard.p**2 + hadamard.q**2, 1.0, decimal=14)
    assert hadamard.alpha == hadamard.beta == hadamard.gamma == 0.0


def test_model_params_phase_reduction():
    """Phases are stored reduced to [0, 2pi)."""
    params = ModelParams(p=0.5, alpha=-np.pi / 2, beta=5 * np.pi, gamma=2 * np.pi)
    assert_almost_equal(params.alpha, 3 * np.pi / 2)
    assert_almost_equal(params.beta, np.pi)
    assert params.gamma == 0.0
    assert_almost_equal(params.q, np.sqrt(0.75))


def test_model_params_invalid():
    """p outside [0, 1] and unknown fields are rejected."""
    with pytest.raises(ValidationError):
        ModelParams(p=1.5)
    with pytest.raises(ValidationError):
        ModelParams(p=-0.1)
    with pytest.raises(ValidationError):
        ModelParams(delta=0.1)


def test_defect_spec_sites():
    """Defect centers give the site set e with its bounds."""
    spec = DefectSpec(centers=(1, 0))
    assert spec.centers == (0, 1)
    assert spec.sites == (-1, 0, 1)
    assert spec.bounds == (-1, 1)
    assert DefectSpec().bounds is None
    with pytest.raises(ValidationError, match="duplicate defect centers"):
        DefectSpec(centers=(2, 2))


def test_perturbation_spec():
    """Perturbation defaults and validation."""
    spec = PerturbationSpec()
    assert spec.kind == PerturbationKind.NONE
    assert_almost_equal(spec.envelope(0), 0.05 * np.exp(-1.0))
    with pytest.raises(ValidationError):
        PerturbationSpec(M=0.0)
    with pytest.raises(ValidationError):
        PerturbationSpec(seed=-1)
    with pytest.raises(ValidationError):
        PerturbationSpec(seed=2**64)
    assert PerturbationSpec(kind="exponential").kind == PerturbationKind.EXPONENTIAL


# Tests for coins
def test_make_coin_c0_hadamard(hadamard):
    """Hadamard parameters give the Hadamard coin."""
    coin = make_coin_c0(hadamard)
    assert_allclose(coin.matrix, [[S2, S2], [-S2, S2]], atol=1e-15)
    assert coin.is_unitary()


def test_make_coin_c0_identity():
    """p = 1 with zero phases is the identity."""
    assert_allclose(make_coin_c0(ModelParams(p=1.0)).matrix, np.eye(2), atol=1e-15)


def test_make_coin_c0_p0_is_defect_coin():
    """p = 0 reduces the bulk coin to the defect coin."""
    params = ModelParams(p=0.0, beta=0.7, gamma=1.3)
    assert make_coin_c0(params).allclose(make_defect_coin(0.7, 1.3), atol=1e-14)


def test_make_defect_coin_examples():
    """Reference defect coins."""
    assert_allclose(make_defect_coin(0.0, 0.0).matrix, [[0, 1], [-1, 0]], atol=1e-15)
    assert_allclose(make_defect_coin(np.pi / 2, 0.0).matrix, [[0, 1j], [1j, 0]], atol=1e-15)


def test_make_defect_coin_structure():
    """Defect coins are unitary with zero diagonal for any phases."""
    rng = np.random.default_rng(11)
    for beta, gamma in rng.uniform(0.0, 2 * np.pi, size=(20, 2)):
        coin = make_defect_coin(beta, gamma)
        assert coin.is_unitary()
        assert coin.a == 0.0
        assert coin.d == 0.0


def test_coin_unitarity_random():
    """Bulk coins are unitary with determinant exp(i gamma)."""
    rng = np.random.default_rng(3)
    for p, alpha, beta, gamma in zip(
        rng.uniform(0, 1, 30), *rng.uniform(0, 2 * np.pi, size=(3, 30))
    ):
        params = ModelParams(p=p, alpha=alpha, beta=beta, gamma=gamma)
        coin = make_coin_c0(params)
        assert coin.unitarity_defect() <= 1e-12
        assert_almost_equal(np.linalg.det(coin.matrix), np.exp(1j * params.gamma), decimal=12)


def test_coin_projections(hadamard):
    """P and Q split the coin into its rows."""
    coin = make_coin_c0(hadamard)
    assert_allclose(coin.P + coin.Q, coin.matrix)
    assert_allclose(coin.P[1], [0, 0])
    assert_allclose(coin.Q[0], [0, 0])


def test_coin_matrix_invalid():
    """Coin matrices must be finite 2x2 arrays."""
    with pytest.raises(ValueError, match="must be 2x2"):
        CoinMatrix(np.eye(3))
    with pytest.raises(ValueError, match="finite"):
        CoinMatrix([[np.nan, 0], [0, 1]])


# Tests for State
def test_state_constructors():
    """Delta, uniform and mapping constructors."""
    window = Window(-2, 2)
    delta = State.delta(window, 1, (0.0, 1.0))
    assert_allclose(delta.at(1), [0, 1])
    assert_allclose(delta.at(5), [0, 0])
    uniform = State.uniform_on_set(window, [-1, 0, 1], (S6, 1j * S6))
    assert_almost_equal(uniform.norm_squared(), 1.0)
    mapped = State.from_mapping({0: (1, 0), 3: (0, 1j)})
    assert mapped.window == Window(0, 3)
    assert_allclose(mapped.vector(), [1, 0, 0, 0, 0, 0, 0, 1j])


def test_state_read_only():
    """Stored amplitudes cannot be modified."""
    state = State.zeros(Window(0, 3))
    with pytest.raises(ValueError):
        state.amp[0, 0] = 1.0


def test_state_shape_mismatch():
    """Amplitude arrays must match the window."""
    with pytest.raises(ValueError, match="does not match window"):
        State(Window(0, 3), np.zeros((3, 2)))
    with pytest.raises(WindowMismatch):
        State.from_vector(Window(0, 3), np.zeros(6))


def test_state_support_and_restriction():
    """Support, embedding and restriction."""
    window = Window(-5, 5)
    state = State.uniform_on_set(window, [-1, 2], (1.0, 0.0))
    assert state.support() == Window(-1, 2)
    assert State.zeros(window).support() is None
    small = state.restricted(Window(-1, 2))
    assert_almost_equal(small.norm_squared(), 2.0)
    assert state.distance(small) == 0.0
    assert small.embedded(window).distance(state) == 0.0
    with pytest.raises(WindowTooSmall):
        state.embedded(Window(-1, 2))


def test_state_algebra():
    """Inner products and sums over the union of windows."""
    a = State.delta(Window(0, 1), 0, (1.0, 0.0))
    b = State.delta(Window(3, 4), 4, (0.0, 1j))
    total = a + b
    assert total.window == Window(0, 4)
    assert_almost_equal(total.norm_squared(), 2.0)
    assert a.inner(b) == 0.0
    assert_almost_equal(total.inner(b), 1.0)


def test_normalize_zero_state():
    """The zero state cannot be normalized."""
    with pytest.raises(ValueError, match="zero state"):
        State.zeros(Window(0, 1)).normalized()


# Tests for assemble_coin_field
def test_assemble_edge_defects(hadamard, edge_field):
    """Reflecting coin on {-1, 0, 1}, Hadamard elsewhere."""
    c0 = make_coin_c0(hadamard)
    c1 = make_defect_coin(0.0, 0.0)
    for x in edge_field.window.sites:
        expected = c1 if x in (-1, 0, 1) else c0
        assert edge_field.coin(int(x)).allclose(expected)
    assert edge_field.recipe.fixed_sites == (-1, 0, 1)


def test_assemble_constant_field(hadamard):
    """Without defects the field is the bulk coin everywhere."""
    field = assemble_coin_field(hadamard, None, None, Window.centered(10))
    expected = np.broadcast_to(make_coin_c0(hadamard).matrix, (21, 2, 2))
    assert_allclose(field.coins, expected)


def test_assemble_defect_margin(hadamard):
    """Defect sites need a one-site margin inside the window."""
    with pytest.raises(WindowTooSmall, match="not interior"):
        assemble_coin_field(hadamard, DefectSpec(centers=(5,)), None, Window.centered(5))


def test_assemble_overrides(hadamard):
    """Site overrides replace the bulk coin."""
    override = SiteOverride(sites=(1, -1, 0), coin=ModelParams(p=1.0))
    assert override.sites == (-1, 0, 1)
    field = assemble_coin_field(hadamard, None, None, Window.centered(10), [override])
    for x in (-1, 0, 1):
        assert_allclose(field.coin(x).matrix, np.eye(2), atol=1e-15)
    assert field.coin(2).allclose(make_coin_c0(hadamard))


def test_assemble_override_clash(hadamard):
    """Overrides may not touch defect sites."""
    override = SiteOverride(sites=(0,), coin=ModelParams(p=1.0))
    with pytest.raises(UnsupportedParameter, match="defect sites"):
        assemble_coin_field(
            hadamard, DefectSpec(centers=(0,)), None, Window.centered(10), [override]
        )


def test_assemble_override_outside(hadamard):
    """Overrides must lie inside the window."""
    override = SiteOverride(sites=(20,), coin=ModelParams(p=1.0))
    with pytest.raises(WindowTooSmall):
        assemble_coin_field(hadamard, None, None, Window.centered(10), [override])


def test_perturbation_envelope(hadamard):
    """Perturbed coins obey the envelope and the lower bound for 100 seeds."""
    window = Window.centered(20)
    c0 = make_coin_c0(hadamard).matrix
    for seed in range(100):
        spec = PerturbationSpec(kind="exponential", M=0.1, rho=1.0, delta=0.1, seed=seed)
        field = assemble_coin_field(hadamard, None, spec, window)
        deviation = np.max(np.abs(field.coins - c0), axis=(1, 2))
        bound = 0.1 * np.exp(-np.sqrt(1.0 + window.sites.astype(float) ** 2))
        assert np.all(deviation <= bound * (1.0 + 1e-12))
        assert np.all(np.abs(field.coins[:, 0, 0]) >= 0.1 - 1e-14)
        assert field.unitarity_defect() <= 1e-12


@pytest.mark.parametrize(
    "params", [ModelParams(p=0.6), ModelParams(gamma=1.0), ModelParams(p=0.9, beta=2.0, gamma=1.0)]
)
def test_perturbation_envelope_general_bulk(params):
    """Bulks other than the plain Hadamard coin stay inside the envelope on wide windows."""
    window = Window.centered(60)
    c0 = make_coin_c0(params).matrix
    for seed in range(10):
        spec = PerturbationSpec(kind="exponential", M=0.05, seed=seed)
        field = assemble_coin_field(params, None, spec, window)
        deviation = np.max(np.abs(field.coins - c0), axis=(1, 2))
        bound = 0.05 * np.exp(-np.sqrt(1.0 + window.sites.astype(float) ** 2))
        assert np.all(deviation <= bound + 1e-15)
        assert_allclose(field.coin(60).matrix, c0, rtol=0.0, atol=1e-15)
        assert_allclose(field.coin(-60).matrix, c0, rtol=0.0, atol=1e-15)


def test_perturbation_far_sites_exact():
    """Sites where the offsets vanish in floating point carry the bulk coin exactly."""
    params = ModelParams(p=0.6, alpha=0.3, beta=0.2, gamma=1.0)
    spec = PerturbationSpec(kind="exponential", M=0.05, seed=3)
    coins = perturbation_coins(params, spec, [-60, 50, 60])
    for coin in coins:
        np.testing.assert_array_equal(coin, make_coin_c0(params).matrix)


def test_perturbation_resized_general_bulk():
    """Doubling the window of a perturbed non-Hadamard field keeps the coins."""
    params = ModelParams(p=0.6)
    spec = PerturbationSpec(kind="exponential", M=0.05, seed=3)
    field = assemble_coin_field(params, DefectSpec(centers=(0, 1)), spec, Window.centered(40))
    doubled = field.resized(Window.centered(80))
    assert_allclose(doubled.coins_on(field.window), field.coins)
    assert doubled.unitarity_defect() <= 1e-12


def test_perturbation_deterministic(hadamard):
    """The same seed gives the same coins, independent of the window."""
    spec = PerturbationSpec(kind="exponential", M=0.2, seed=7)
    small = assemble_coin_field(hadamard, None, spec, Window.centered(5))
    large = assemble_coin_field(hadamard, None, spec, Window.centered(15))
    assert_allclose(large.coins_on(small.window), small.coins)
    other = assemble_coin_field(
        hadamard, None, PerturbationSpec(kind="exponential", M=0.2, seed=8), Window.centered(5)
    )
    assert not np.allclose(other.coins, small.coins)


def test_perturbation_below_delta():
    """The bulk p must not be below the lower bound."""
    spec = PerturbationSpec(kind="exponential", delta=0.5)
    with pytest.raises(UnsupportedParameter, match="below the perturbation lower bound"):
        perturbation_coins(ModelParams(p=0.2), spec, [0, 1])


def test_perturbation_large_amplitude(hadamard):
    """A large envelope still yields unitary coins inside the bound."""
    spec = PerturbationSpec(kind="exponential", M=50.0, rho=0.1, delta=0.2, seed=1)
    field = assemble_coin_field(hadamard, DefectSpec(centers=(0,)), spec, Window.centered(8))
    assert field.unitarity_defect() <= 1e-12
    assert field.coin(0).allclose(make_defect_coin(0.0, 0.0))
    mask = np.ones(field.window.size, dtype=bool)
    mask[[field.window.index(-1), field.window.index(0)]] = False
    assert np.all(np.abs(field.coins[mask, 0, 0]) >= 0.2 - 1e-14)


def test_envelope_violation_is_runtime_error():
    """Envelope violations flag generator bugs, not bad input."""
    assert issubclass(EnvelopeViolation, RuntimeError)


def test_coin_field_resized(hadamard):
    """Fields with a recipe are rebuilt on other windows."""
    spec = PerturbationSpec(kind="exponential", seed=4)
    field = assemble_coin_field(hadamard, DefectSpec(centers=(0, 1)), spec, Window.centered(10))
    larger = field.resized(Window.centered(20))
    assert larger.window == Window.centered(20)
    assert_allclose(larger.coins_on(field.window), field.coins)
    smaller = field.restricted(Window.centered(4))
    assert_allclose(smaller.coins, field.coins_on(Window.centered(4)))


def test_coin_field_not_unitary():
    """Fields reject non-unitary coins."""
    coins = np.broadcast_to(2.0 * np.eye(2), (3, 2, 2))
    with pytest.raises(ValueError, match="not unitary"):
        CoinField(Window(0, 2), coins)


# Tests for step
def test_step_hadamard_delta(hadamard):
    """One Hadamard step from a delta spinor [1, 0] at 0."""
    field = CoinField.constant(Window.centered(5), make_coin_c0(hadamard))
    state = State.delta(Window(-1, 1), 0, (1.0, 0.0))
    moved = step(state, field, Boundary.PADDED)
    assert moved.window == Window(-2, 2)
    assert_allclose(moved.at(-1), [S2, 0], atol=1e-15)
    assert_allclose(moved.at(1), [0, -S2], atol=1e-15)
    assert_allclose(moved.at(0), [0, 0])


def test_step_identity_is_shift():
    """With the identity coin the walk is the pure shift."""
    field = CoinField.constant(Window.centered(5), make_coin_c0(ModelParams(p=1.0)))
    state = State.from_mapping({0: (1.0, 0.0), 1: (0.0, 2.0)}, Window(-1, 2))
    moved = step(state, field)
    assert_allclose(moved.at(-1), [1, 0])
    assert_allclose(moved.at(2), [0, 2])
    assert_almost_equal(moved.norm_squared(), state.norm_squared())


def test_step_periodic_wraps():
    """The periodic shift wraps around the window."""
    window = Window(0, 3)
    field = CoinField.constant(window, make_coin_c0(ModelParams(p=1.0)))
    state = State.from_mapping({0: (1.0, 0.0), 3: (0.0, 1.0)}, window)
    moved = step(state, field, Boundary.PERIODIC)
    assert moved.window == window
    assert_allclose(moved.at(3), [1, 0])
    assert_allclose(moved.at(0), [0, 1])


def test_step_truncate_drops():
    """The hard truncation drops amplitudes leaving the window."""
    window = Window(0, 3)
    field = CoinField.constant(window, make_coin_c0(ModelParams(p=1.0)))
    state = State.from_mapping({0: (1.0, 0.0), 2: (0.0, 1.0)}, window)
    moved = step(state, field, Boundary.TRUNCATE)
    assert moved.window == window
    assert_allclose(moved.at(3), [0, 1])
    assert_almost_equal(moved.norm_squared(), 1.0)


def test_step_window_mismatch(hadamard):
    """Incompatible windows are rejected."""
    field = CoinField.constant(Window(0, 5), make_coin_c0(hadamard))
    with pytest.raises(WindowMismatch, match="does not contain"):
        step(State.zeros(Window(-1, 2)), field)
    with pytest.raises(WindowMismatch, match="equal windows"):
        step(State.zeros(Window(0, 3)), field, Boundary.PERIODIC)


def test_step_accepts_strings(hadamard):
    """Boundary modes can be given by name."""
    field = CoinField.constant(Window(0, 5), make_coin_c0(hadamard))
    moved = step(State.delta(Window(0, 5), 2), field, "periodic")
    assert moved.window == Window(0, 5)


def test_norm_conservation_padded(edge_field):
    """Padded steps conserve the norm over 100 steps."""
    psi0 = random_state(Window(-3, 3), 1)
    field = edge_field.resized(Window.centered(110))
    trajectory = evolve(psi0, field, 100)
    for state in trajectory:
        assert abs(state.norm_squared() - 1.0) <= 1e-10
    assert abs(trajectory[-1].norm() - 1.0) <= 1e-12


def test_norm_conservation_periodic(edge_field):
    """Periodic steps conserve the norm over 100 steps."""
    psi0 = random_state(edge_field.window, 2)
    trajectory = evolve(psi0, edge_field, 100, Boundary.PERIODIC)
    assert abs(trajectory[-1].norm_squared() - 1.0) <= 1e-10
    assert all(state.window == edge_field.window for state in trajectory)


def test_truncate_contraction(hadamard):
    """With the hard truncation the norm never increases."""
    field = CoinField.constant(Window.centered(6), make_coin_c0(hadamard))
    trajectory = evolve(random_state(field.window, 5), field, 40, Boundary.TRUNCATE)
    norms = [state.norm_squared() for state in trajectory]
    assert all(b <= a + 1e-14 for a, b in zip(norms, norms[1:]))
    assert norms[-1] < norms[0]


@pytest.mark.parametrize("y", [-5, -2, 0, 3, 5])
def test_translation_covariance(hadamard, y):
    """For a constant field the step commutes with translations."""
    field = CoinField.constant(Window.centered(20), make_coin_c0(hadamard))
    state = random_state(Window(-4, 4), 10 + y)
    left = step(state.shifted(y), field)
    right = step(state, field).shifted(y)
    assert left.distance(right) <= 1e-14


# Tests for evolve and position_distribution
def test_evolve_zero_steps(edge_field):
    """steps = 0 returns the initial state."""
    psi0 = State.delta(Window(-1, 1), 0)
    trajectory = evolve(psi0, edge_field, 0)
    assert len(trajectory) == 1
    assert trajectory[0] is psi0


def test_evolve_invalid(edge_field):
    """Negative steps and too small fields are rejected."""
    psi0 = State.delta(Window(-1, 1), 0)
    with pytest.raises(UnsupportedParameter, match="non-negative"):
        evolve(psi0, edge_field, -1)
    with pytest.raises(WindowTooSmall, match="does not cover"):
        evolve(psi0, edge_field, 30)


def test_evolve_logs(edge_field, caplog):
    """Evolution reports through the injected logger."""
    logger = logging.getLogger("test_logger")
    with caplog.at_level(logging.DEBUG, logger="test_logger"):
        evolve(State.delta(Window(-1, 1), 0), edge_field, 3, logger=logger)
    assert "Evolved 3 steps with padded boundary" in caplog.text


def test_reference_initial_state_distribution():
    """The reference initial state puts 1/3 on each of -1, 0, 1."""
    psi0 = State.uniform_on_set(Window(-1, 1), [-1, 0, 1], (S6, 1j * S6))
    dist = position_distribution(psi0)
    assert set(dist) == {-1, 0, 1}
    for value in dist.values():
        assert_almost_equal(value, 1.0 / 3.0)
    assert_almost_equal(sum(dist.values()), 1.0)


def test_position_distribution_examples():
    """Zero and delta states."""
    window = Window(-2, 2)
    assert all(v == 0.0 for v in position_distribution(State.zeros(window)).values())
    dist = position_distribution(State.delta(window, 0))
    assert dist[0] == 1.0
    assert sum(dist.values()) == 1.0


def test_edge_walk_localizes(edge_field):
    """The reference edge walk keeps mass near the origin."""
    psi0 = State.uniform_on_set(Window(-1, 1), [-1, 0, 1], (S6, 1j * S6))
    field = edge_field.resized(Window.centered(105))
    final = evolve(psi0, field, 100)[-1]
    dist = position_distribution(final)
    assert abs(sum(dist.values()) - 1.0) <= 1e-10
    assert sum(p for x, p in dist.items() if abs(x) <= 3) >= 0.1
