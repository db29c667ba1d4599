"""Cone-off graphs: one extra vertex per peripheral, joined to its members.

Restriction (drop the cone vertices) carries admissible cone-off cuts to
elliptic base cuts and is a ring homomorphism; the lift goes the other
way, adding a cone vertex exactly when the cut's side meets the
peripheral's rel-escape ideal. On tame systems these are mutually inverse
on elliptic pools; on non-tame ones the lift fails loudly, and that
failure is the non-tameness certificate.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .bitset import iter_bits
from .boolean_ring import Cut
from .cut_search import CutPool
from .errors import EllipticityViolation, InadmissibleLift, NotElliptic
from .graph_core import Graph, Window, build_graph
from .peripheral import PeripheralSystem, ellipticity_witness

__all__ = [
    "ConeOff",
    "build_cone_off",
    "restrict",
    "lift",
    "GrowthProfile",
    "growth_profile",
]


class ConeOff:
    """The coned graph plus bookkeeping to move cuts across.

    Base vertices keep their ids; cone vertex for peripheral h is
    base_n + h. The cone window reuses the base frontier, so cone
    vertices are never frontier and escape is judged in the base window.
    """

    def __init__(self, base: Window, system: PeripheralSystem) -> None:
        self.base = base
        self.system = system
        g = base.graph
        n = g.n
        labels = list(g.labels) + [f"*{p.name}" for p in system]
        edges: List[Tuple[int, int]] = list(g.edges)
        elabs = list(g.edge_labels) if g.edge_labels is not None else ["" for _ in g.edges]
        self.base_edge_count = len(g.edges)
        self.cone_edge_bits: List[Dict[int, int]] = []
        dist = list(base.dist)
        for h, p in enumerate(system):
            vh = n + h
            bits: Dict[int, int] = {}
            best = None
            for u in iter_bits(p.members):
                bits[u] = 1 << len(edges)
                edges.append((u, vh))
                elabs.append("cone")
                if best is None or base.dist[u] < best:
                    best = base.dist[u]
            self.cone_edge_bits.append(bits)
            dist.append((best if best is not None else base.radius) + 1)
        self.graph: Graph = build_graph(n + len(system), edges, labels, elabs)
        self.cone_index: Dict[int, int] = {h: n + h for h in range(len(system))}
        self.window = Window(
            self.graph,
            base.radius,
            base.inner_radius,
            dist,
            family=base.family,
            basepoint=base.basepoint,
            params=base.params,
            frontier_override=base.frontier_mask,
        )
        self.base_full = g.full_mask
        self.base_edges_mask = (1 << self.base_edge_count) - 1

    def cone_vertex(self, h: int) -> int:
        return self.cone_index[h]

    def __repr__(self) -> str:
        return (
            f"ConeOff(base={self.base.graph.n}, cones={len(self.system)}, "
            f"edges={len(self.graph.edges)})"
        )


def build_cone_off(window: Window, sys: PeripheralSystem) -> ConeOff:
    return ConeOff(window, sys)


def restrict(cone: ConeOff, c_hat: Cut) -> Cut:
    """Drop the cone vertices; the result is elliptic, and asserted so."""
    side = c_hat.side & cone.base_full
    b = Cut(cone.base, side, _cob=c_hat.cob & cone.base_edges_mask)
    bad = ellipticity_witness(b, cone.system)
    if bad is not None:
        raise EllipticityViolation(
            f"restriction splits {bad.name}; cone-off admissibility was violated upstream",
            witness=bad,
        )
    return b


def lift(cone: ConeOff, b: Cut) -> Cut:
    """Section of restrict: add v_H exactly when b meets H's escape ideal.

    Cone edges from v_H to members on the other side join the coboundary;
    if any such member sits on the frontier the lift has no admissible
    representative and the offending peripheral is reported.
    """
    sys = cone.system
    bad = ellipticity_witness(b, sys)
    if bad is not None:
        raise NotElliptic(f"cut splits {bad.name}", witness=bad)
    side = b.side
    cob = b.cob
    fr = cone.base.frontier_mask
    for h, p in enumerate(sys):
        z = sys.z_masks[h]
        if side & z:
            opposite = p.members & ~side
            side_h = True
        else:
            opposite = p.members & side
            side_h = False
        if opposite & fr:
            raise InadmissibleLift(
                f"lift of the cut needs a frontier cone edge at {p.name}",
                witness=p,
            )
        if side_h:
            side_out = 1 << cone.cone_vertex(h)
        else:
            side_out = 0
        if side_h:
            side |= side_out
        bits = cone.cone_edge_bits[h]
        for u in iter_bits(opposite):
            cob |= bits[u]
    return Cut(cone.window, side, _cob=cob)


class GrowthProfile:
    """Observed coboundary growth across one lift of a pool.

    envelope(s) is the largest lifted coboundary among samples whose base
    coboundary is at most s: a measured, monotone bound, never a fit.
    """

    def __init__(self, samples: List[Tuple[int, int]]) -> None:
        self.samples = sorted(samples)
        env: Dict[int, int] = {}
        best = 0
        for s_in, s_out in self.samples:
            best = max(best, s_out)
            env[s_in] = best
        self._env = env
        self._keys = sorted(env)

    def envelope(self, s: int) -> int:
        best = 0
        for k in self._keys:
            if k > s:
                break
            best = self._env[k]
        return best

    def __repr__(self) -> str:
        pts = {k: self._env[k] for k in self._keys}
        return f"GrowthProfile({len(self.samples)} samples, envelope={pts})"


def growth_profile(cone: ConeOff, pool: CutPool) -> GrowthProfile:
    """Lift every pool cut and record (|db|, |db^|) pairs.

    InadmissibleLift propagates: a pool that cannot be lifted is the
    non-tameness report for this system at this scale.
    """
    samples = []
    for c in pool:
        c_hat = lift(cone, c)
        samples.append((c.size, c_hat.size))
    return GrowthProfile(samples)
