"""Backend selection for the compiled kernels.

Set ``STARDISC_BACKEND=numpy`` (or ``STARDISC_DISABLE_NUMBA=1``) to force the
pure-numpy fallback. Without either variable numba is used when importable.
"""
import os
import warnings

# numba probes TBB on first parallel call and warns when it is too old; the
# workqueue/omp layers are used instead, so the warning is noise.
warnings.filterwarnings("ignore", message=".*TBB.*")

try:
    import numba  # noqa: F401
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False


def _env_backend():
    if os.environ.get("STARDISC_DISABLE_NUMBA", "").strip() not in ("", "0"):
        return "numpy"
    name = os.environ.get("STARDISC_BACKEND", "").strip().lower()
    if name in ("numpy", "numba"):
        return name
    return "numba"


def resolve_backend(backend=None):
    """Return ``"numba"`` or ``"numpy"``.

    An explicit ``backend`` argument wins over the environment. Asking for
    numba when it is not importable silently degrades to numpy.
    """
    name = backend if backend is not None else _env_backend()
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAS_NUMBA:
        return "numpy"
    return name


if HAS_NUMBA:
    from numba import njit, prange
else:  # pragma: no cover
    prange = range

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
