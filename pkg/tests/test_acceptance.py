"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with `pytest -s tests/test_acceptance.py` to see them).
All tolerances are fixed here, not configurable.
"""

import itertools
import json
import math

import numpy as np

from qutrit_bloch import adjoint, bloch, density, gellmann, triangle
from qutrit_bloch.cli import main
from qutrit_bloch.triangle import VERTICES, bloch_from_diag

from conftest import (
    LAMBDA_REF,
    d_oracle,
    f_oracle,
    haar_unitary_oracle,
    rho_from_bloch_oracle,
    sample_box_bloch,
    sample_pure_bloch,
    sample_radial_bloch,
    sample_valid_bloch,
)

N_R = bloch_from_diag(VERTICES["R"])
N_B = bloch_from_diag(VERTICES["B"])
N_G = bloch_from_diag(VERTICES["G"])


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_criterion_1_structure_constant_fidelity():
    worst_f = worst_d = 0.0
    for j, k, l in itertools.product(range(1, 9), repeat=3):
        worst_f = max(worst_f, abs(gellmann.f_symbol(j, k, l) - f_oracle(j, k, l)))
        worst_d = max(worst_d, abs(gellmann.d_symbol(j, k, l) - d_oracle(j, k, l)))
    worst_p = 0.0
    for j, k in itertools.product(range(1, 9), repeat=2):
        direct = LAMBDA_REF[j - 1] @ LAMBDA_REF[k - 1]
        worst_p = max(worst_p, np.max(np.abs(gellmann.product_expansion(j, k) - direct)))
    ok = worst_f <= 1e-14 and worst_d <= 1e-14 and worst_p <= 1e-14
    _report(
        "criterion 1 (structure constants)",
        ok,
        f"max dev f={worst_f:.2e} d={worst_d:.2e} product={worst_p:.2e} (tol 1e-14)",
    )


def test_criterion_2_pure_state_characterization():
    worst_norm = worst_star = 0.0
    for n in (N_R, N_B, N_G):
        worst_norm = max(worst_norm, abs(bloch.dot(n, n) - 1.0))
        worst_star = max(worst_star, float(np.max(np.abs(bloch.star(n, n) - n))))
    vertices_ok = worst_norm <= 1e-12 and worst_star <= 1e-12

    rng = np.random.default_rng(2001)
    samples = np.concatenate(
        [
            sample_box_bloch(rng, 4000),
            sample_pure_bloch(rng, 3000),
            sample_valid_bloch(rng, 3000),
        ]
    )
    rhos = rho_from_bloch_oracle(samples)
    residual = np.abs(np.einsum("nab,nbc->nac", rhos, rhos) - rhos).max(axis=(1, 2))
    disagreements = sum(
        bloch.is_pure(n) != (res <= 1e-10) for n, res in zip(samples, residual)
    )
    ok = vertices_ok and disagreements == 0
    _report(
        "criterion 2 (pure states)",
        ok,
        f"vertex devs norm={worst_norm:.2e} star={worst_star:.2e} (tol 1e-12); "
        f"disagreements {disagreements}/10000",
    )


def test_criterion_3_mixed_state_constraints():
    band = 1e-9
    grid = triangle.entropy_grid(200, tol=band)
    x, y = np.meshgrid(grid.n3, grid.n8)
    vecs = np.zeros(x.shape + (8,))
    vecs[..., 2], vecs[..., 7] = x, y
    min_eig = np.linalg.eigvalsh(rho_from_bloch_oracle(vecs))[..., 0]
    boundary = np.minimum.reduce(
        [np.abs(grid.q1), np.abs(1 - grid.q1), np.abs(grid.q2), np.abs(1 - grid.q2), np.abs(min_eig)]
    )
    decisive = boundary > band
    grid_disagree = int(np.sum(grid.in_region[decisive] != (min_eig[decisive] >= -band)))

    rng = np.random.default_rng(2003)
    samples = np.concatenate([sample_radial_bloch(rng, 7000), sample_box_bloch(rng, 3000)])
    min_eig_r = np.linalg.eigvalsh(rho_from_bloch_oracle(samples))[:, 0]
    rand_disagree = 0
    for n, lo in zip(samples, min_eig_r):
        q1, q2 = bloch.state_constraints(n)
        if min(abs(q1), abs(1 - q1), abs(q2), abs(1 - q2), abs(lo)) <= band:
            continue
        if bloch.is_mixed_state(n, tol=band) != (lo >= -band):
            rand_disagree += 1
    ok = grid_disagree == 0 and rand_disagree == 0
    _report(
        "criterion 3 (mixed-state constraints)",
        ok,
        f"disagreements outside 1e-9 band: grid {grid_disagree}/40000, random {rand_disagree}/10000",
    )


def test_criterion_4_named_point_table():
    expected = {
        "R": (VERTICES["R"], np.diag([1.0, 0, 0])),
        "B": (VERTICES["B"], np.diag([0.0, 1, 0])),
        "G": (VERTICES["G"], np.diag([0.0, 0, 1])),
        "M_RB": ((0.0, 0.5), np.diag([0.5, 0.5, 0])),
        "M_RG": ((gellmann.SQRT3 / 4, -0.25), np.diag([0.5, 0, 0.5])),
        "M_BG": ((-gellmann.SQRT3 / 4, -0.25), np.diag([0.0, 0.5, 0.5])),
        "O": ((0.0, 0.0), np.eye(3) / 3),
    }
    table = triangle.named_points()
    worst = 0.0
    for label, (point, rho) in expected.items():
        got_point, got_rho = table[label]
        worst = max(worst, abs(got_point.n3 - point[0]), abs(got_point.n8 - point[1]))
        worst = max(worst, float(np.max(np.abs(got_rho - rho))))
        n = density.to_bloch(rho)
        worst = max(worst, abs(n[2] - point[0]), abs(n[7] - point[1]))
        worst = max(
            worst, float(np.max(np.abs(density.from_bloch(bloch_from_diag(point)) - rho)))
        )
    ok = worst <= 1e-14
    _report("criterion 4 (named points)", ok, f"max conversion dev {worst:.2e} (tol 1e-14)")


def test_criterion_5_orthogonality_and_geodesics():
    worst_dot = max(
        abs(bloch.dot(a, b) + 0.5) for a, b in [(N_R, N_B), (N_B, N_G), (N_R, N_G)]
    )
    worst_angle = max(
        abs(bloch.geodesic_distance(a, b) - 2 * math.pi / 3)
        for a, b in [(N_R, N_B), (N_B, N_G), (N_R, N_G)]
    )
    ok = worst_dot <= 1e-14 and worst_angle <= 1e-12
    _report(
        "criterion 5 (orthogonality/geodesics)",
        ok,
        f"max |dot+1/2|={worst_dot:.2e} (tol 1e-14), max |angle-2pi/3|={worst_angle:.2e} (tol 1e-12)",
    )


def test_criterion_6_adjoint_representation():
    rng = np.random.default_rng(2006)
    states = sample_valid_bloch(rng, 100)
    worst_orth = worst_det = worst_hom = worst_equiv = worst_star = worst_su2 = 0.0
    for i in range(100):
        u = adjoint._haar_special_unitary(3, rng)
        v = adjoint._haar_special_unitary(3, rng)
        ad_u, ad_v = adjoint.adjoint_su3(u), adjoint.adjoint_su3(v)
        worst_orth = max(worst_orth, float(np.max(np.abs(ad_u.T @ ad_u - np.eye(8)))))
        worst_det = max(worst_det, abs(np.linalg.det(ad_u) - 1.0))
        worst_hom = max(
            worst_hom, float(np.max(np.abs(adjoint.adjoint_su3(u @ v) - ad_u @ ad_v)))
        )
        n = states[i]
        rho = rho_from_bloch_oracle(n)
        worst_equiv = max(
            worst_equiv,
            float(np.max(np.abs(density.to_bloch(u @ rho @ u.conj().T) - ad_u @ n))),
        )
        a, b = rng.uniform(-1, 1, 8), rng.uniform(-1, 1, 8)
        worst_star = max(
            worst_star,
            float(np.max(np.abs(ad_u @ bloch.star(a, b) - bloch.star(ad_u @ a, ad_u @ b)))),
        )
        r = adjoint.adjoint_su2(adjoint._haar_special_unitary(2, rng))
        worst_su2 = max(
            worst_su2,
            float(np.max(np.abs(r.T @ r - np.eye(3)))),
            abs(np.linalg.det(r) - 1.0),
        )
    ok = (
        worst_orth <= 1e-10
        and worst_det <= 1e-10
        and worst_hom <= 1e-10
        and worst_equiv <= 1e-10
        and worst_star <= 1e-9
        and worst_su2 <= 1e-10
    )
    _report(
        "criterion 6 (adjoint representation)",
        ok,
        f"orth={worst_orth:.2e} det={worst_det:.2e} hom={worst_hom:.2e} "
        f"equiv={worst_equiv:.2e} (tol 1e-10), star={worst_star:.2e} (tol 1e-9), "
        f"su2={worst_su2:.2e} (tol 1e-10)",
    )


def test_criterion_7_entropy():
    dev_mixed = abs(density.entropy_of_mixing(np.eye(3) / 3) - 1.0)
    rng = np.random.default_rng(2007)
    dev_pure = max(
        density.entropy_of_mixing(rho_from_bloch_oracle(n))
        for n in np.concatenate([[N_R, N_B, N_G], sample_pure_bloch(rng, 20)])
    )
    dev_half = abs(density.entropy_of_mixing(np.diag([0.5, 0.5, 0])) - math.log(2) / math.log(3))
    rho = rho_from_bloch_oracle(sample_valid_bloch(rng, 1)[0])
    e0 = density.entropy_of_mixing(rho)
    dev_inv = max(
        abs(density.entropy_of_mixing(u @ rho @ u.conj().T) - e0)
        for u in (haar_unitary_oracle(rng) for _ in range(100))
    )
    ok = dev_mixed <= 1e-12 and dev_pure <= 1e-12 and dev_half <= 1e-12 and dev_inv <= 1e-10
    _report(
        "criterion 7 (entropy)",
        ok,
        f"E(I/3)-1={dev_mixed:.2e} E(pure)={dev_pure:.2e} E(half)-log3(2)={dev_half:.2e} "
        f"(tol 1e-12); invariance {dev_inv:.2e} (tol 1e-10)",
    )


def test_criterion_8_cayley_hamilton():
    rng = np.random.default_rng(2008)
    worst_res = 0.0
    coeffs_ok = True
    for n in sample_valid_bloch(rng, 1000):
        rho = rho_from_bloch_oracle(n)
        c1, c2, c3 = density.char_poly_coeffs(rho)
        res = rho @ rho @ rho - rho @ rho + c2 * rho - c3 * np.eye(3)
        worst_res = max(worst_res, float(np.max(np.abs(res))))
        coeffs_ok = coeffs_ok and 0.0 <= c2 <= 1 / 3 and 0.0 <= c3 <= 1 / 27
    ok = worst_res <= 1e-10 and coeffs_ok
    _report(
        "criterion 8 (Cayley-Hamilton)",
        ok,
        f"max residual {worst_res:.2e} (tol 1e-10); coefficient ranges ok: {coeffs_ok}",
    )


def test_criterion_9_cli_determinism_and_grid_fraction(capsys):
    args = ["orbit", "0", "0", repr(gellmann.SQRT3 / 2), "0", "0", "0", "0", "0.5",
            "--count", "50", "--seed", "77"]
    code1 = main(args)
    out1 = capsys.readouterr().out
    code2 = main(args)
    out2 = capsys.readouterr().out
    identical = code1 == code2 == 0 and out1.encode() == out2.encode()

    code3 = main(["triangle", "--resolution", "200", "--format", "csv"])
    rows = capsys.readouterr().out.strip().split("\n")[1:]
    fraction = sum(r.split(",")[4] == "true" for r in rows) / len(rows)
    fraction_ok = code3 == 0 and abs(fraction - 0.5) <= 0.01
    ok = identical and fraction_ok
    with capsys.disabled():
        _report(
            "criterion 9 (CLI determinism/grid)",
            ok,
            f"orbit byte-identical: {identical}; in-region fraction {fraction:.4f} (target 0.5 +- 0.01)",
        )
