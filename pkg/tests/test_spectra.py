import numpy as np
import pytest

from blockrmt.blockops import complete_graph_w
from blockrmt.spectra import EigensolveError, SpectralMeasure, hermitian_eigenvalues, spectral_measure

from conftest import SEED


def test_small_examples():
    np.testing.assert_array_equal(hermitian_eigenvalues(np.diag([3.0, 1.0, 2.0])), [1, 2, 3])
    np.testing.assert_allclose(hermitian_eigenvalues(np.array([[0.0, 1.0], [1.0, 0.0]])), [-1, 1], atol=1e-15)
    np.testing.assert_allclose(hermitian_eigenvalues(complete_graph_w(5)[0]), [-1, -1, -1, -1, 4], atol=1e-10)
    np.testing.assert_array_equal(spectral_measure(np.eye(3)).eigenvalues, [1, 1, 1])
    np.testing.assert_array_equal(spectral_measure(np.zeros((4, 4))).eigenvalues, np.zeros(4))


def test_moments_match_matrix_powers():
    rng = np.random.default_rng(SEED)
    for _ in range(5):
        z = rng.standard_normal((10, 10)) + 1j * rng.standard_normal((10, 10))
        m = (z + z.conj().T) / 2
        mu = spectral_measure(m)
        assert mu.eigenvalues.sum() == pytest.approx(np.trace(m).real, abs=1e-9 * 10 * np.linalg.norm(m, 2))
        for p in range(1, 7):
            direct = np.trace(np.linalg.matrix_power(m, p)).real / 10
            assert mu.moment(p) == pytest.approx(direct, rel=1e-9, abs=1e-12)


def test_errors():
    with pytest.raises(ValueError):
        hermitian_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(EigensolveError):
        hermitian_eigenvalues(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_measure_is_sorted_and_frozen():
    mu = SpectralMeasure([3.0, -1.0, 2.0])
    np.testing.assert_array_equal(mu.eigenvalues, [-1, 2, 3])
    with pytest.raises(ValueError):
        mu.eigenvalues[0] = 5.0


def test_csv_round_trips(tmp_path):
    rng = np.random.default_rng(SEED)
    mu = SpectralMeasure(rng.standard_normal(257))
    mu.to_csv(tmp_path / "ev.csv")
    np.testing.assert_array_equal(SpectralMeasure.from_csv(tmp_path / "ev.csv").eigenvalues, mu.eigenvalues)
    mu.histogram_to_csv(tmp_path / "h.csv", bins=20)
    header = (tmp_path / "h.csv").read_text().splitlines()[0]
    assert header == "bin_left,bin_right,count"


def test_pooled_merges_parts():
    mu = SpectralMeasure.pooled([np.array([2.0, 0.0]), SpectralMeasure([1.0])])
    np.testing.assert_array_equal(mu.eigenvalues, [0, 1, 2])
    assert mu.order == 3
