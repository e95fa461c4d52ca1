"""Exact matroids, Lindstrom valuations, duals and linear flocks of modules
over the endomorphism rings of one-dimensional algebraic groups.

The heavy lifting happens in the C++ extension ``oremat._core``; this wrapper
accepts and returns plain Python dicts/lists (JSON documents).
"""

import json as _json
import os as _os

# When installed as a wheel the example documents ship inside the package;
# point the registry there unless the caller already chose a directory.
_pkg_data = _os.path.join(_os.path.dirname(__file__), "data")
if "OREMAT_DATA_DIR" not in _os.environ and _os.path.isdir(_pkg_data):
    _os.environ["OREMAT_DATA_DIR"] = _pkg_data

from . import _core  # noqa: E402
from ._core import (  # noqa: E402,F401
    InvariantError,
    SchemaError,
    UnsupportedRingError,
    __version__,
)


def _doc(document):
    if isinstance(document, str):
        return document
    return _json.dumps(document)


def matroid(document):
    """Matroid of a MatrixDocument (dict or JSON string)."""
    return _json.loads(_core.matroid(_doc(document)))


def valuation(document):
    """Lindstrom valuation table (raw and normalized) over the bases."""
    return _json.loads(_core.valuation(_doc(document)))


def circuits(document):
    """Valuated circuits of the module."""
    return _json.loads(_core.circuits(_doc(document)))


def dual(document):
    """Dual module representation, as a MatrixDocument dict."""
    return _json.loads(_core.dual(_doc(document)))


def saturate(document):
    """Saturation of the module plus a ``was_saturated`` flag."""
    return _json.loads(_core.saturate(_doc(document)))


def perp(document):
    """Orthogonal complement module."""
    return _json.loads(_core.perp(_doc(document)))


def flock_slice(document, alpha):
    """Flock slice at the integer shift vector ``alpha``."""
    return _json.loads(_core.flock_slice(_doc(document), list(alpha)))


def flock_check(document, radius=2, threads=1):
    """Flock axioms and slice/argmin consistency over the box."""
    return _json.loads(_core.flock_check(_doc(document), radius, threads))


def check(document, radius=2, threads=1):
    """Full invariant suite on one module document."""
    return _json.loads(_core.check(_doc(document), radius, threads))


def sample_verify(document, count=100, seed=42):
    """Annihilator check on seeded sample points."""
    return _json.loads(_core.sample_verify(_doc(document), count, seed))


def examples():
    """Ids of the shipped example registry."""
    return list(_core.examples())


def run_example(example_id):
    """Recompute the expected facts of one shipped example."""
    return _json.loads(_core.run_example(example_id))
