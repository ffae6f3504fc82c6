"""Holomorphisms of finite groups: bijections m with m(x - y + z) = m(x) - m(y) + m(z).

Every holomorphism is an automorphism followed by a translation, on either side.
"""

from collections.abc import Sequence

import numpy as np

from quasieq.domain.exceptions import PreconditionError
from quasieq.domain.models import Permutation
from quasieq.infrastructure.automorphisms import automorphisms
from quasieq.infrastructure.cayley import FiniteGroup, is_automorphism


def _is_bijection(m: np.ndarray, n: int) -> bool:
    return m.shape == (n,) and np.array_equal(np.sort(m), np.arange(n))


def is_holomorphism(m: Sequence[int] | np.ndarray, g: FiniteGroup) -> bool:
    """True iff m(x + y^-1 + z) = m(x) + m(y)^-1 + m(z) for every triple."""
    p = np.asarray(m, dtype=np.int64)
    if not _is_bijection(p, g.order):
        return False
    t, inv = g.cayley, g.inverse
    # x + y^-1 + z at [x, y, z]
    xy = t[:, inv]  # x + y^-1 at [x, y]
    lhs = p[t[xy[:, :, None], np.arange(g.order)[None, None, :]]]
    pxy = t[p[:, None], inv[p][None, :]]  # m(x) + m(y)^-1 at [x, y]
    rhs = t[pxy[:, :, None], p[None, None, :]]
    return bool(np.array_equal(lhs, rhs))


def decompose_holomorphism(
    m: Sequence[int] | np.ndarray, g: FiniteGroup
) -> tuple[Permutation, int, int]:
    """Split ``m`` as m(x) = phi1(x) + k1 = k2 + phi2(x).

    Returns ``(phi1, k1, k2)``; both constants equal m(identity) and phi2 is
    recovered as x -> -k2 + m(x).
    """
    p = np.asarray(m, dtype=np.int64)
    if not is_holomorphism(p, g):
        raise PreconditionError("map is not a holomorphism of the group")
    t, inv = g.cayley, g.inverse
    k1 = k2 = int(p[g.identity])
    phi1 = t[p, inv[k1]]
    phi2 = t[inv[k2], p]
    for phi in (phi1, phi2):
        if not is_automorphism(g, phi):
            raise PreconditionError("holomorphism does not decompose over an automorphism")
    return tuple(int(v) for v in phi1), k1, k2


def translate(phi: Sequence[int], k: int, g: FiniteGroup) -> Permutation:
    """The map x -> phi(x) + k."""
    p = np.asarray(phi, dtype=np.int64)
    return tuple(int(v) for v in g.cayley[p, k])


def holomorphisms(g: FiniteGroup) -> list[Permutation]:
    """All maps x -> phi(x) + k, phi an automorphism, sorted lexicographically."""
    maps = {translate(phi, k, g) for phi in automorphisms(g) for k in range(g.order)}
    return sorted(maps)
