"""Bounded Voronoi meshes with their maximal nucleus clusters and the nerves of those clusters."""

from .clusters import (Cluster, descriptive_nucleus_cluster, maximal_descriptive_clusters,
                       maximal_nucleus_clusters, nucleus_cluster)
from .description import DescriptorSpec, FeatureVector, describe_cell, descriptive_intersection
from .errors import *  # noqa: F401,F403
from .geometry import Contact, ConvexPolygon, Point, Segment, classify_contact, intersect
from .nerve import (Nerve, SimplicialComplex, build_nerve, homotopy_type_proxy,
                    verify_descriptive_nerve_theorem, verify_nerve_lemma, verify_spoke_theorem)
from .pipeline import Analysis, analyze
from .proximity import (Region, descriptively_near, descriptively_strongly_near, mesh_strongly_near,
                        near, strongly_near)
from .voronoi import Tessellation, build_tessellation, locate

__version__ = "0.1.0"


def __getattr__(name):
    # keep the sklearn import off the import path of the core library
    if name == "VoronoiNerveAnalyzer":
        from .estimator import VoronoiNerveAnalyzer
        return VoronoiNerveAnalyzer
    raise AttributeError(name)
