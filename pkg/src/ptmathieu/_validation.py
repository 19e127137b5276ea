"""Input validation helpers shared by the library, the estimators and the CLI."""

import numpy as np


def check_positive(value, name):
    value = float(value)
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def check_levels(k, minimum=1):
    if isinstance(k, bool) or int(k) != k or k < minimum:
        raise ValueError(f"number of levels must be an integer >= {minimum}, got {k!r}")
    return int(k)


def check_grid(grid, name="grid", require_nonnegative=False):
    """Return a strictly ascending 1-D float array, rejecting anything else."""
    arr = np.asarray(grid, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{name} must be a nonempty 1-D sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    if arr.size > 1 and not np.all(np.diff(arr) > 0):
        raise ValueError(f"{name} must be strictly ascending")
    if require_nonnegative and arr[0] < 0:
        raise ValueError(f"{name} must be nonnegative")
    return arr


def check_parameter_points(X):
    """Coerce X to an (n, 2) float array of (q, delta) parameter points."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 1 and arr.size == 2:
        arr = arr.reshape(1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of (q, delta) points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("parameter points must be finite")
    return arr
