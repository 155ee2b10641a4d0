"""scikit-learn style façade: fit on sites, predict containing cells, transform to cell features."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .description import REGION_FEATURES, DescriptorSpec
from .pipeline import analyze
from .voronoi import locate


class VoronoiNerveAnalyzer(TransformerMixin, BaseEstimator):
    """Voronoi mesh of the training sites with its maximal nucleus clusters and nerves.

    Parameters
    ----------
    bbox : tuple (x0, y0, x1, y1) or None
        Clipping box; None pads the site extent by 10%.
    spec : str
        Descriptor spec such as ``"side_count"`` or ``"side_count,area:0.01"``.
    """

    def __init__(self, bbox=None, spec="side_count"):
        self.bbox = bbox
        self.spec = spec

    def fit(self, X, y=None):
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != 2:
            raise ValueError(f"sites must be 2-D points, got {X.shape[1]} columns")
        self.analysis_ = analyze(X, self.bbox, DescriptorSpec.parse(self.spec))
        self.tessellation_ = self.analysis_.tessellation
        self.descriptions_ = self.analysis_.descriptions
        self.mncs_ = self.analysis_.mncs
        self.nerves_ = self.analysis_.nerves
        self.n_features_in_ = 2
        return self

    def predict(self, X):
        """Id of the cell containing each point, -1 outside the box."""
        check_is_fitted(self, "tessellation_")
        X = check_array(X, dtype=np.float64)
        return locate(self.tessellation_, X)

    def transform(self, X):
        """Feature vector of the containing cell; NaN rows outside the box."""
        ids = self.predict(X)
        table = np.array([d.values for d in self.descriptions_])
        out = np.full((len(ids), len(REGION_FEATURES)), np.nan)
        inside = ids >= 0
        out[inside] = table[ids[inside]]
        return out

    def get_feature_names_out(self, input_features=None):
        return np.asarray(REGION_FEATURES, dtype=object)

    def score(self, X=None, y=None):
        """1.0 when every theorem check on the fitted mesh passes, else 0.0."""
        check_is_fitted(self, "analysis_")
        return float(self.analysis_.passed)
