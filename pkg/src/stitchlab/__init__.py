"""stitchlab: modular stitch graphs, planet dances, and their aliasing.

The package builds chord figures MMT(m, a) on the unit circle, finds the
two-speed "planet dance" each one most naturally samples, decomposes
graphs into rotated overlay copies, verifies cycloid envelopes
numerically, and renders everything as deterministic SVG.
"""

from .cycloid import CycloidSpec, EnvelopeReport, classify, verify_envelope
from .dances import PlanetDance, Sampling, StitchGraph, mmt_chords, sample
from .kernel import ChordSet, CirclePoint, DirectedChord, TorusPoint
from .overlay import OverlayDecomposition, overlay_decompose, predict_family
from .torusgeo import AliasAnalysis, natural_alias, shortest_sample_vector

__version__ = "0.1.0"

__all__ = [
    "AliasAnalysis",
    "ChordSet",
    "CirclePoint",
    "CycloidSpec",
    "DirectedChord",
    "EnvelopeReport",
    "OverlayDecomposition",
    "PlanetDance",
    "Sampling",
    "StitchGraph",
    "TorusPoint",
    "classify",
    "mmt_chords",
    "natural_alias",
    "overlay_decompose",
    "predict_family",
    "sample",
    "shortest_sample_vector",
    "verify_envelope",
    "__version__",
]
