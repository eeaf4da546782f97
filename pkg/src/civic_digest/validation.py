"""Input validation shared by the estimator classes."""

from __future__ import annotations

import numpy as np

from civic_digest.errors import SingleClassCorpus


def as_feature_matrix(X) -> np.ndarray:
    """Coerce to a 2-D float64 array."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    if X.ndim != 2:
        raise ValueError(f"expected a 2-D feature matrix, got ndim={X.ndim}")
    return X


def as_binary_labels(y, n_rows: int) -> np.ndarray:
    """Coerce labels to a 0/1 int array and require both classes present."""
    y = np.asarray(y)
    if y.ndim != 1 or y.shape[0] != n_rows:
        raise ValueError(f"expected {n_rows} labels, got shape {y.shape}")
    values = np.unique(y)
    if not np.isin(values, (0, 1)).all():
        raise ValueError(f"labels must be 0 or 1, got {values!r}")
    if values.size < 2:
        raise SingleClassCorpus("training data contains a single label")
    return y.astype(np.int64)


def check_fitted(estimator, attribute: str) -> None:
    if not hasattr(estimator, attribute):
        raise RuntimeError(f"{type(estimator).__name__} is not fitted yet")
