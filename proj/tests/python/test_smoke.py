"""Smoke tests: the compiled module imports and agrees with frozen values,
and the CLI honors its exit-code contract."""

import math
import os
import subprocess

import pytest

import rotorcom

TWO_PI = 2.0 * math.pi

REFERENCE_CONFIG = """\
c2_hz = 20
q_hz = 0.02
n_atoms = 100000
u0_hz = 100
gamma_hz = 50e3
kappa_l_hz = 3e6
delta_hz = 0
temperature_k = 5e-10
d_theta = 40
"""


def reference_params():
    p = rotorcom.PhysicalParams()
    p.c2 = TWO_PI * 20.0
    p.q = TWO_PI * 0.02
    p.n_atoms = 100000
    p.u0 = TWO_PI * 100.0
    p.gamma = TWO_PI * 5e4
    p.kappa_l = TWO_PI * 3e6
    p.delta = 0.0
    p.d_theta = 40.0
    p.temperature = 5e-10
    return p


def test_rotor_and_steady_state_values():
    p = reference_params()
    m = rotorcom.build_rotor(p)
    assert m.inertia == pytest.approx(795.77471545947674, rel=1e-14)
    assert m.omega_theta == pytest.approx(5.6227031362664599, rel=1e-14)

    s = rotorcom.solve_steady(p, m)
    assert s.a_s == pytest.approx(60.0 + 0.0j, abs=1e-12)
    assert s.photon_number == pytest.approx(3600.0, rel=1e-14)
    assert s.eta == pytest.approx(4242.6408049704141, rel=1e-12)
    assert s.omega_eff == pytest.approx(s.eta * m.omega_theta, rel=1e-14)

    assert rotorcom.quadratic_zeeman(1e-5, TWO_PI * 1.77e9) == pytest.approx(
        17.38478694, rel=1e-8
    )


def test_moment_fixed_point_values():
    p = reference_params()
    m = rotorcom.build_rotor(p)
    s = rotorcom.solve_steady(p, m)
    fixed = rotorcom.steady_moments(p, m, s)
    assert fixed.sym == 0.0
    assert fixed.l2 == pytest.approx(52123.43645, rel=1e-8)
    assert fixed.theta2 == pytest.approx(1.446405053e-10, rel=1e-8)
    n = rotorcom.thermal_occupation(m.omega_theta, p.temperature)
    energy = rotorcom.rotor_energy(fixed, m)
    assert rotorcom.roton_occupation(n, s.eta) * s.omega_eff == pytest.approx(
        energy, rel=1e-12
    )


def test_exact_spinor_spectrum():
    spec = rotorcom.exact_spinor_spectrum(20, 1.0, 0.02, 6)
    assert spec.basis_dimension == 231
    assert spec.ground_fz == 0
    assert spec.energies[0] == 0.0
    assert spec.energies[1] == pytest.approx(0.187730892155, rel=1e-9)
    assert spec.energies[2] == pytest.approx(spec.energies[1], rel=1e-12)
    assert spec.energies[3] == pytest.approx(0.247987731915, rel=1e-9)


def test_welch_psd_peak_bin():
    dt = 1e-3
    length = 2048
    k0 = 37
    segment = 512
    omega0 = TWO_PI * k0 / (segment * dt)
    x = [0.7 * math.sin(omega0 * dt * i) for i in range(length)]
    psd = rotorcom.welch_psd(x, dt, segment, rotorcom.PsdWindow.none)
    peak = max(range(len(psd)), key=lambda k: psd[k].s_theta)
    assert peak == k0
    assert psd[peak].omega == pytest.approx(omega0, rel=1e-12)
    assert psd[peak].s_theta == pytest.approx(dt * 0.7**2 * segment / 4, rel=1e-9)


def test_undriven_sweep_occupation():
    p = reference_params()
    p.kappa_l = 0.0
    spec = rotorcom.SweepSpec()
    spec.axis = rotorcom.SweepAxis.delta_over_gamma
    spec.start = -2.0
    spec.stop = 2.0
    spec.points = 5
    rows = rotorcom.run_sweep(p, spec)
    assert len(rows) == 5
    for row in rows:
        assert row.stable
        assert row.eta == 1.0
        assert row.nbar == pytest.approx(row.n_thermal + 0.5, rel=1e-12)


@pytest.fixture()
def cli():
    path = os.environ.get("ROTORCOM_CLI")
    if not path:
        pytest.skip("ROTORCOM_CLI not set")
    return path


def run_cli(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def test_cli_steady_deterministic(cli, tmp_path):
    cfg = tmp_path / "ref.txt"
    cfg.write_text(REFERENCE_CONFIG)
    outputs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        result = run_cli(cli, "steady", "-c", str(cfg), "-o", str(out))
        assert result.returncode == 0, result.stderr
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]

    data_line = outputs[0].decode().strip().splitlines()[-1]
    fields = [float(v) for v in data_line.split(",")]
    assert fields[2] == pytest.approx(3600.0, rel=1e-12)  # photon_number
    assert fields[3] == pytest.approx(4242.6408049704141, rel=1e-12)  # eta


def test_cli_exit_code_config_error(cli, tmp_path):
    cfg = tmp_path / "ref.txt"
    cfg.write_text(REFERENCE_CONFIG)
    result = run_cli(cli, "steady", "-c", str(cfg), "--set", "bogus=1")
    assert result.returncode == 1
    assert result.stderr != ""


def test_cli_exit_code_anti_trapping(cli, tmp_path):
    cfg = tmp_path / "anti.txt"
    cfg.write_text(
        "c2_hz = 20\nq_hz = 2\nn_atoms = 1000\nu0_hz = -0.06\n"
        "gamma_hz = 200\nkappa_l_hz = 2000\ndelta_hz = 0\n"
        "temperature_k = 1e-7\nd_theta = 50\n"
    )
    result = run_cli(cli, "steady", "-c", str(cfg))
    assert result.returncode == 2
    assert result.stderr != ""


def test_cli_exit_code_divergence(cli, tmp_path):
    cfg = tmp_path / "compact.txt"
    cfg.write_text(
        "c2_hz = 20\nq_hz = 2\nn_atoms = 1000\nu0_hz = 0.06\n"
        "gamma_hz = 200\nkappa_l_hz = 2000\ndelta_hz = 0\n"
        "temperature_k = 1e-7\nd_theta = 50\n"
    )
    result = run_cli(
        cli, "simulate", "-c", str(cfg), "--t_end_s", "5", "--dt_s", "0.1",
        "--noise", "deterministic", "--theta0", "0.1",
        "-o", str(tmp_path / "traj.csv"),
    )
    assert result.returncode == 3
    assert result.stderr != ""
