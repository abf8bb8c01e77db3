"""
Settings for the fiedler toolkit.

Every value can be overridden from the environment, e.g.
``FIEDLER_CLUSTER_TOL=1e-9 python main.py spectrum half:7``.
"""

import os


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name, "").strip()
    return float(raw) if raw else default


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    return int(raw) if raw else default


# Numerical tolerances
# τ_cluster = CLUSTER_TOL * max(1, spectral radius)
CLUSTER_TOL = _env_float("FIEDLER_CLUSTER_TOL", 1e-7)
RESIDUAL_TOL = _env_float("FIEDLER_RESIDUAL_TOL", 1e-9)
MAIN_TOL = _env_float("FIEDLER_MAIN_TOL", 1e-7)
JACOBI_TOL = _env_float("FIEDLER_JACOBI_TOL", 1e-12)
JACOBI_MAX_SWEEPS = _env_int("FIEDLER_JACOBI_MAX_SWEEPS", 100)
# values quoted in the literature with two decimals
INTERVAL_TOL = _env_float("FIEDLER_INTERVAL_TOL", 0.01)

EIGEN_METHOD = os.environ.get("FIEDLER_EIGEN_METHOD", "eigh")

# Reproducibility
DEFAULT_SEED = _env_int("FIEDLER_SEED", 7)
WORKERS = _env_int("FIEDLER_WORKERS", 1)

# Output
FLOAT_DIGITS = _env_int("FIEDLER_FLOAT_DIGITS", 12)
OUTPUT_FORMATS = ("json", "csv", "text")


# Logging
# https://docs.python.org/3/library/logging.config.html#logging-config-dictschema

LOG_LEVEL = os.environ.get("LOG_LEVEL", "WARNING").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "stderr": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        "fiedler": {"handlers": ["stderr"], "level": LOG_LEVEL, "propagate": False},
        "main": {"handlers": ["stderr"], "level": LOG_LEVEL, "propagate": False},
        "io_store": {"handlers": ["stderr"], "level": LOG_LEVEL, "propagate": False},
    },
}
