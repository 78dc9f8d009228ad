"""Kostka matrices, tunnel hook coverings and sign-reversing involutions."""

from ._kostka import (
    KostkaError,
    compositions,
    delta,
    dominates,
    enumerate_pairs,
    enumerate_thc,
    involution,
    matrix,
    partitions,
    perm_of_thc,
    perm_srt,
    render_thc,
    srht_from_perm,
    thc_from_perm,
    verify_identity,
    verify_involution,
    xi,
)

__all__ = [
    "KostkaError",
    "compositions",
    "delta",
    "dominates",
    "enumerate_pairs",
    "enumerate_thc",
    "involution",
    "matrix",
    "partitions",
    "perm_of_thc",
    "perm_srt",
    "render_thc",
    "srht_from_perm",
    "thc_from_perm",
    "verify_identity",
    "verify_involution",
    "xi",
]
