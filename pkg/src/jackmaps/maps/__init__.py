"""Bipartite maps: oriented (permutation pairs) and non-oriented (ribbon graphs)."""

from .oriented import (
    MapStats,
    OrientedBicolMap,
    ch_a1_one_face,
    ch_top_maps,
    ch_top_maps_value,
    count_embeddings,
    count_labeled,
    enumerate_labeled,
    enumerate_rooted,
    map_stats,
    rooted_canonical,
    weight_N,
    weight_N_multirect,
)

__all__ = [
    "MapStats",
    "OrientedBicolMap",
    "ch_a1_one_face",
    "ch_top_maps",
    "ch_top_maps_value",
    "count_embeddings",
    "count_labeled",
    "enumerate_labeled",
    "enumerate_rooted",
    "map_stats",
    "rooted_canonical",
    "weight_N",
    "weight_N_multirect",
]
