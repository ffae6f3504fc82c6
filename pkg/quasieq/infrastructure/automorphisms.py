"""Automorphism enumeration and permutation helpers for small finite groups."""

import itertools
from collections import deque

import numpy as np

from quasieq.config import get_settings
from quasieq.domain.exceptions import OrderBoundError
from quasieq.domain.models import Permutation
from quasieq.infrastructure.cayley import FiniteGroup
from quasieq.logging_config import get_logger

logger = get_logger(__name__)


def automorphisms(
    g: FiniteGroup,
    max_order: int | None = None,
    filter_max_order: int | None = None,
) -> list[Permutation]:
    """Return every automorphism of ``g`` as a permutation tuple, sorted lexicographically.

    Small groups are handled by filtering all permutations that fix the
    identity; above ``filter_max_order`` images of a generating set are
    searched instead.  Bounds default to the configured settings.
    """
    settings = get_settings()
    bound = max_order if max_order is not None else settings.automorphism_max_order
    filter_bound = (
        filter_max_order if filter_max_order is not None else settings.automorphism_filter_max_order
    )
    if g.order > bound:
        raise OrderBoundError(f"automorphism search is bounded at order {bound}, got {g.order}")

    if g.order <= filter_bound:
        found = _filter_permutations(g)
        method = "filter"
    else:
        found = _generator_images(g)
        method = "generators"
    result = sorted(found)
    logger.debug("automorphisms_enumerated", group=g.spec, method=method, count=len(result))
    return result


def _filter_permutations(g: FiniteGroup) -> list[Permutation]:
    n, e, t = g.order, g.identity, g.cayley
    others = [a for a in range(n) if a != e]
    found: list[Permutation] = []
    for images in itertools.permutations(others):
        p = np.empty(n, dtype=np.int64)
        p[e] = e
        p[others] = images
        if np.array_equal(p[t], t[np.ix_(p, p)]):
            found.append(tuple(int(v) for v in p))
    return found


def generating_set(g: FiniteGroup) -> list[int]:
    """Greedy generating set: smallest elements outside the subgroup generated so far."""
    generators: list[int] = []
    span = {g.identity}
    for a in range(g.order):
        if a in span:
            continue
        generators.append(a)
        span = _closure(g, generators)
        if len(span) == g.order:
            break
    return generators


def _closure(g: FiniteGroup, generators: list[int]) -> set[int]:
    span = {g.identity}
    queue = deque([g.identity])
    while queue:
        a = queue.popleft()
        for s in generators:
            b = int(g.cayley[a, s])
            if b not in span:
                span.add(b)
                queue.append(b)
    return span


def _extend(g: FiniteGroup, generators: list[int], images: tuple[int, ...]) -> np.ndarray | None:
    """Extend generator images to a map on all of ``g``; None on conflict or non-bijection."""
    n = g.order
    phi = np.full(n, -1, dtype=np.int64)
    phi[g.identity] = g.identity
    queue = deque([g.identity])
    while queue:
        a = queue.popleft()
        for s, image in zip(generators, images, strict=True):
            b = int(g.cayley[a, s])
            value = int(g.cayley[phi[a], image])
            if phi[b] == -1:
                phi[b] = value
                queue.append(b)
            elif phi[b] != value:
                return None
    if len(set(phi.tolist())) != n:
        return None
    return phi


def _generator_images(g: FiniteGroup) -> list[Permutation]:
    generators = generating_set(g)
    candidates = [a for a in range(g.order) if a != g.identity]
    found: list[Permutation] = []
    for images in itertools.product(candidates, repeat=len(generators)):
        phi = _extend(g, generators, images)
        if phi is None:
            continue
        if np.array_equal(phi[g.cayley], g.cayley[np.ix_(phi, phi)]):
            found.append(tuple(int(v) for v in phi))
    return found


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q."""
    return tuple(p[i] for i in q)


def invert(p: Permutation) -> Permutation:
    inverse = [0] * len(p)
    for i, v in enumerate(p):
        inverse[v] = i
    return tuple(inverse)
