"""Pivot-minor and pure-pair toolkit (Python bindings)."""

import json

from . import _pivotminor as _core
from ._pivotminor import (  # noqa: F401
    CapExceeded,
    Error,
    Graph,
    PreconditionError,
    SchemaError,
    anti_hole,
    bounded_degree,
    canonical_form,
    caterpillar,
    complement,
    fan,
    gnp,
    is_induced_cycle,
    long_cycle,
    pivot,
)


def has_pivot_minor(g, k, max_orbit=1_000_000, threads=1):
    """Return the witness dict if g has a C_k pivot-minor, else None."""
    w = _core.has_pivot_minor(g, k, max_orbit, threads)
    return None if w is None else json.loads(w)


def cycle_reduce(g, order, k):
    return json.loads(_core.cycle_reduce(g, list(order), k))


def antihole_extract(g, order, k):
    return json.loads(_core.antihole_extract(g, list(order), k))


def skeleton(g, root=0):
    return json.loads(_core.skeleton(g, root))


def pipeline(g, k):
    """Run the pure-pair pipeline; returns the run report as a dict."""
    return json.loads(_core.pipeline(g, k))


def verify(g, certificate, min_hole=5):
    """Check a certificate (dict, witness dict, or JSON text). Returns (ok, diagnostic)."""
    if not isinstance(certificate, str):
        if "type" not in certificate and "ops" in certificate:
            certificate = dict(certificate, type="witness")
        certificate = json.dumps(certificate)
    return _core.verify(g, certificate, min_hole)
