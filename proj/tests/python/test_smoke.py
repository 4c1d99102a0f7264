from fractions import Fraction

import numpy as np
import pytest

import lapvertex as lv


def test_graph_construction():
    g = lv.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert (g.n, g.m) == (3, 3)
    assert g.degrees == [2, 2, 2]
    assert g == lv.complete(3)
    assert lv.from_spec("complete_bipartite:2,3").m == 6
    assert lv.parse_edge_list("2\n0 1\n") == lv.complete(2)


def test_errors_surface_as_exceptions():
    with pytest.raises(lv.LapvertexError, match="Disconnected"):
        lv.Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(lv.LapvertexError):
        lv.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        lv.vertex_energies(lv.star(4), kind="bogus")


def test_star_energies_match_across_methods():
    g = lv.star(4)
    spectral = lv.vertex_energies(g)
    assert spectral[0] == pytest.approx(2.25, abs=1e-12)
    assert spectral[1] == pytest.approx(11 / 12, abs=1e-12)
    np.testing.assert_allclose(lv.vertex_energies(g, method="coulson"), spectral, atol=1e-6)
    np.testing.assert_allclose(lv.vertex_energies(g, method="closed_form"), spectral, atol=1e-9)
    assert lv.star_normalized_energy(5, 1) == 1.0


def test_spectral_energy_against_numpy():
    g = lv.random_connected(8, 0.5, 3)
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    lap = np.diag(a.sum(axis=1)) - a
    lam, u = np.linalg.eigh(lap)
    b = 2 * g.m / g.n
    expected = (u**2) @ np.abs(lam - b)
    np.testing.assert_allclose(lv.vertex_energies(g), expected, atol=1e-9)
    np.testing.assert_allclose(lv.eigenvalues(g), lam, atol=1e-9)
    assert lv.coulson_energy(g, 0) == pytest.approx(expected[0], abs=1e-6)


def test_geometry_is_exact():
    value, witness = lv.cheeger(lv.cycle(4))
    assert value == Fraction(1, 2) and 0 in witness
    assert lv.dual_cheeger(lv.complete(3))[0] == Fraction(2, 3)
    assert lv.wasserstein1(lv.complete(3), 0, 1) == Fraction(1, 2)
    assert set(lv.curvature(lv.cycle(6)).values()) == {Fraction(0)}


def test_certificates_and_conjecture():
    certs = lv.verify(lv.complete_bipartite(2, 3))
    assert certs and all(c["passed"] for c in certs)
    margin, worst, violated = lv.conjecture_margin(lv.path(5))
    assert violated and worst == 2
    assert margin == pytest.approx(1 - 2 / np.sqrt(3))
    assert lv.randic(lv.star(4))[1] == pytest.approx(1.0)
