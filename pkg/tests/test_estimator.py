import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from _fixtures import GRID3, GRID3_BOX, UNIT, random_sites
from proxinerve import VoronoiNerveAnalyzer


def test_fit_exposes_mesh_and_clusters():
    est = VoronoiNerveAnalyzer(bbox=GRID3_BOX).fit(np.array(GRID3))
    assert len(est.tessellation_.cells) == 9
    assert [c.nucleus for c in est.mncs_] == [4]
    assert est.nerves_[0].complex.f_vector() == [5, 8, 4]
    assert est.n_features_in_ == 2 and est.score() == 1.0


def test_predict_agrees_with_nearest_site():
    sites = random_sites(11)
    est = VoronoiNerveAnalyzer(bbox=UNIT).fit(sites)
    rng = np.random.default_rng(0)
    pts = rng.uniform(0, 1, (2000, 2))
    d2 = ((pts[:, None] - sites[None]) ** 2).sum(-1)
    assert (est.predict(pts) == d2.argmin(1)).mean() > 0.999


def test_transform_returns_cell_features():
    est = VoronoiNerveAnalyzer(bbox=GRID3_BOX).fit(GRID3)
    feats = est.transform([[1.1, 0.9], [9.0, 9.0]])
    assert feats[0].tolist() == [1.0, 1.0, 1.0, pytest.approx(np.sqrt(2)), 4.0]
    assert np.isnan(feats[1]).all()
    assert list(est.get_feature_names_out()) == ["centroid_x", "centroid_y", "area", "diameter", "side_count"]


def test_sklearn_protocol():
    est = VoronoiNerveAnalyzer(bbox=UNIT, spec="side_count,area:0.01")
    assert clone(est).get_params() == {"bbox": UNIT, "spec": "side_count,area:0.01"}
    with pytest.raises(NotFittedError):
        est.predict([[0.5, 0.5]])
    with pytest.raises(ValueError):
        est.fit(np.zeros((3, 3)))
    # usable as the last step of a pipeline
    pipe = make_pipeline(StandardScaler(), VoronoiNerveAnalyzer()).fit(random_sites(1))
    assert pipe.predict(random_sites(1)[:5]).tolist() == [0, 1, 2, 3, 4]
