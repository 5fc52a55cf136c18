"""Tours over disjoint plane regions, guillotine transforms, and certificates.

The native module speaks JSON text; this wrapper converts to and from python
dicts so callers never touch serialized strings.
"""

import json

try:
    from . import _tspn
except ImportError:  # build-tree layout: the native module sits on sys.path
    import _tspn

__all__ = ["solve", "transform", "check", "certify", "render", "gen"]


def solve(instance, method="oracle", resolution=0.05, eps=1 / 3, demo_spacing="1/4", m=3, M=1):
    return json.loads(
        _tspn.solve(json.dumps(instance), method, resolution, eps, demo_spacing, m, M)
    )


def transform(instance, m=3, M=1, grid_repairs=False, demo_spacing="1/4"):
    return json.loads(_tspn.transform(json.dumps(instance), m, M, grid_repairs, demo_spacing))


def check(scene, m=3, M=1, variant="span_in_e"):
    return json.loads(_tspn.check(json.dumps(scene), m, M, variant))


def certify(claim, instance=None):
    return json.loads(_tspn.certify(claim, json.dumps(instance) if instance else ""))


def render(instance):
    return _tspn.render(json.dumps(instance))


def gen(kind, k=4, seed=1, box=12, name=""):
    return json.loads(_tspn.gen(kind, k, seed, box, name))
