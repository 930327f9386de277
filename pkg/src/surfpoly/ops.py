"""Duality, edge deletion, edge contraction, and subset minors.

Deletion and contraction use the skip rules of the defining three-case
formulas: walking from ``tau(b)``, a cross of a deleted edge is skipped via
``tau`` and a cross of a contracted edge via ``tau . theta sigma``.  Vertex
counts after contraction follow the edge type (a non-loop merges two
vertices, a twisted loop keeps its vertex, a non-twisted loop splits one),
which also fixes the number of isolated vertices the image array cannot
carry.
"""

from __future__ import annotations

from typing import Iterable

from .errors import EdgeOutOfRange
from .premap import EdgeKind, Premap, classify_edge, map_params, tau_cycles

__all__ = ["dual", "delete", "contract", "minor_pair"]


def _role_swap(x: int) -> int:
    # theta <-> sigma role exchange: crosses 4e+1 and 4e+2 trade places.
    return x if x & 3 in (0, 3) else x ^ 3


def dual(p: Premap) -> Premap:
    """Surface dual: vertex rotation becomes phi, re-expressed in convention.

    Faces of degree zero (one per isolated vertex) stay isolated vertices.
    """
    tau = [0] * (4 * p.m)
    for x in p.crosses:
        tau[_role_swap(x)] = _role_swap(p.tau[x ^ 3])
    return Premap(p.m, tuple(tau), p.isolated_vertices)


def _remove_edge(p: Premap, e: int, contracting: bool) -> Premap:
    if not 0 <= e < p.m:
        raise EdgeOutOfRange(e)
    if contracting:
        kind = classify_edge(p, e)
        dv = {
            EdgeKind.NON_LOOP: -1,
            EdgeKind.TWISTED_LOOP: 0,
            EdgeKind.NON_TWISTED_LOOP: 1,
        }[kind]
    else:
        dv = 0
    v_target = map_params(p).v + dv

    removed = {4 * e, 4 * e + 1, 4 * e + 2, 4 * e + 3}

    def relabel(x: int) -> int:
        return x - 4 if x // 4 > e else x

    tau = [0] * (4 * (p.m - 1))
    for b in p.crosses:
        if b in removed:
            continue
        d = p.tau[b]
        while d in removed:
            d = p.tau[d ^ 3] if contracting else p.tau[d]
        tau[relabel(b)] = relabel(d)

    nonempty_pairs = len(tau_cycles(tau)) // 2
    return Premap(p.m - 1, tuple(tau), v_target - nonempty_pairs)


def delete(p: Premap, e: int) -> Premap:
    """Delete edge ``e``; a vertex left with no crosses becomes isolated."""
    return _remove_edge(p, e, contracting=False)


def contract(p: Premap, e: int) -> Premap:
    """Contract edge ``e`` (surface contraction, dual to deletion)."""
    return _remove_edge(p, e, contracting=True)


def _fold(p: Premap, edges: Iterable[int], contracting: bool) -> Premap:
    # Ascending original ids; earlier removals shift later ids down.
    for shift, e in enumerate(sorted(edges)):
        p = _remove_edge(p, e - shift, contracting)
    return p


def minor_pair(p: Premap, subset: Iterable[int]) -> tuple[Premap, Premap]:
    """Return ``(M/A, M\\A^c)`` for an edge subset ``A``.

    Both are independent of the order in which edges are processed.
    """
    chosen = set(subset)
    for e in chosen:
        if not 0 <= e < p.m:
            raise EdgeOutOfRange(e)
    contracted = _fold(p, chosen, contracting=True)
    restricted = _fold(p, set(range(p.m)) - chosen, contracting=False)
    return contracted, restricted
