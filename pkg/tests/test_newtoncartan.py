import numpy as np
import pytest

from tabletopqg import gie, newtoncartan as nc


class TestStaticPhase:
    def test_energy_and_phase(self):
        rep = nc.static_differential_phase(m=2.0, delta_phi=3.0, T=5.0, hbar=1.0)
        assert rep.total_energy == pytest.approx(6.0, abs=1e-14)
        assert rep.phase == pytest.approx(30.0, abs=1e-12)

    def test_carries_comparison(self):
        rep = nc.static_differential_phase(1.0, 1.0, 1.0, hbar=1.0,
                                           comparison_phase=1.0)
        assert rep.comparison_phase == pytest.approx(rep.phase, rel=1e-12)


class TestPotentialDifference:
    def test_gravcat_gap(self):
        assert nc.gravcat_potential_difference(2.0, 0.5, G=1.0) == pytest.approx(
            4.0, abs=1e-14)

    def test_finite_far_branch(self):
        val = nc.gravcat_potential_difference(1.0, 1.0, delta_far=2.0, G=1.0)
        assert val == pytest.approx(0.5, abs=1e-14)

    def test_validation(self):
        with pytest.raises(ValueError):
            nc.PotentialDifference(times=[0.0, 1.0], samples=[1.0])
        with pytest.raises(ValueError):
            nc.PotentialDifference(times=[0.0, 0.0, 1.0], samples=[1.0, 1.0, 1.0])
        with pytest.raises(ValueError):
            nc.PotentialDifference(times=[0.0, 1.0], samples=[1.0, np.inf])


class TestWorldlineIntegral:
    def test_constant_samples_reduce_to_product(self):
        diff = nc.PotentialDifference(times=np.linspace(0, 5, 11),
                                      samples=np.full(11, 3.0))
        for method in ("trapezoid", "simpson"):
            val = nc.worldline_energy_integral(2.0, diff, method=method)
            assert val == pytest.approx(2.0 * 3.0 * 5.0, rel=1e-14)

    def test_constant_field_rejected(self):
        with pytest.raises(ValueError):
            nc.worldline_energy_integral(1.0, nc.PotentialDifference(constant=3.0))

    def test_unknown_method(self):
        diff = nc.PotentialDifference(times=[0.0, 1.0], samples=[1.0, 1.0])
        with pytest.raises(ValueError):
            nc.worldline_energy_integral(1.0, diff, method="midpoint")

    def test_second_order_convergence(self):
        # smooth time dependence: error should fall ~4x per halving
        exact = 1.0 - np.cos(1.0)  # integral of sin on [0, 1]
        errors = []
        for n in (8, 16, 32, 64):
            t = np.linspace(0, 1, n + 1)
            diff = nc.PotentialDifference(times=t, samples=np.sin(t))
            val = nc.worldline_energy_integral(1.0, diff, method="trapezoid")
            errors.append(abs(val - exact))
        for coarse, fine in zip(errors, errors[1:]):
            assert 3.5 < coarse / fine < 4.5

    def test_simpson_beats_trapezoid(self):
        t = np.linspace(0, 1, 33)
        diff = nc.PotentialDifference(times=t, samples=np.sin(t))
        exact = 1.0 - np.cos(1.0)
        err_t = abs(nc.worldline_energy_integral(1.0, diff, "trapezoid") - exact)
        err_s = abs(nc.worldline_energy_integral(1.0, diff, "simpson") - exact)
        assert err_s < err_t


class TestHamiltonJacobi:
    def test_on_shell(self):
        m, p, V = 2.0, 3.0, 1.5
        E = p ** 2 / (2 * m) + V
        assert nc.hamilton_jacobi_residual(p, E, V, m) == pytest.approx(0.0, abs=1e-14)

    def test_off_shell(self):
        assert nc.hamilton_jacobi_residual(1.0, 0.0, 0.0, 1.0) == pytest.approx(
            0.5, abs=1e-14)


class TestThreeWayAgreement:
    def test_natural_units(self):
        a, b, c = nc.three_way_comparison(m=1.0, delta=0.5, T=2.0, G=1.0, hbar=1.0)
        assert a == pytest.approx(4.0, rel=1e-12)
        assert b == pytest.approx(a, rel=1e-12)
        assert c == pytest.approx(a, rel=1e-12)

    def test_matches_two_body_model(self):
        cfg = gie.GravcatConfig(mass=1e-14, half_separation=100e-6,
                                packet_offset=50e-6, duration=3.0)
        newtonian, redshift, geometric = nc.three_way_comparison(
            cfg.mass, cfg.delta, cfg.duration)
        direct = gie.phase_rate(cfg) * cfg.duration
        for phase in (newtonian, redshift, geometric):
            assert phase == pytest.approx(direct, rel=1e-12)

    def test_worldline_route_agrees(self):
        m, delta, T = 1e-14, 1e-4, 3.0
        dphi = nc.gravcat_potential_difference(m, delta)
        t = np.linspace(0, T, 65)
        diff = nc.PotentialDifference(times=t, samples=np.full_like(t, dphi))
        energy_time = nc.worldline_energy_integral(m, diff)
        closed = nc.static_differential_phase(m, dphi, T)
        assert energy_time / nc.HBAR == pytest.approx(closed.phase, rel=1e-12)
