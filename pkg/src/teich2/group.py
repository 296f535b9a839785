"""The Fuchsian group of the octagon: generators, relation, tiling balls.

Four generators g0..g3 pair opposite octagon sides (g_k maps side k+4 onto
side k) and satisfy the single genus-2 relation

    g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3 = identity   (up to sign in SU(1,1)).

Each generator is realized three independent ways: the explicit closed-form
matrix, the product M_k M_5 of trace-zero half turns, and the half-turn
composition H(p_k) about the side midpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BallCapacityError
from .hyperbolic import MobiusTransform, m_half_turn, projective_gap, rotation
from .octagon import OctagonGeometry, OctagonParams, build_geometry, in_octagon

__all__ = [
    "GeneratorSet",
    "GroupBall",
    "BallElement",
    "Cell",
    "RelationReport",
    "SidePairingReport",
    "generators",
    "omega_table",
    "m_matrices",
    "relation_defect",
    "side_pairing_check",
    "ball",
    "cells",
]

# BFS dedup: candidate pairs are confirmed equal below this entry distance
DEDUP_TOLERANCE = 1e-9
_KEY_QUANTUM = 1e-6

# letter order fixes the deterministic (shortest-lex) word ordering
LETTERS = "aAbBcCdD"


@dataclass(frozen=True)
class GeneratorSet:
    """The four side-pairing generators with their rotation structure."""

    params: OctagonParams
    g: tuple[MobiusTransform, MobiusTransform, MobiusTransform, MobiusTransform]
    norm: float

    @property
    def inverses(self) -> tuple[MobiusTransform, ...]:
        return tuple(t.inverse() for t in self.g)

    def letters(self) -> list[tuple[str, MobiusTransform]]:
        """(label, transform) pairs in the canonical a,A,b,B,... order."""
        out = []
        for k, t in enumerate(self.g):
            out.append((LETTERS[2 * k], t))
            out.append((LETTERS[2 * k + 1], t.inverse()))
        return out


def generators(params: OctagonParams) -> GeneratorSet:
    """Closed-form g0, g1 and their pi/2-rotation conjugates g2, g3."""
    a, at = params.a, params.alpha_tilde
    a2 = a * a
    tn = math.tan(at)
    cos2 = math.cos(at) ** 2
    norm = -math.cos(at) / math.sqrt((1.0 - a2) * (2.0 * a2 * cos2 - 1.0))
    g0 = MobiusTransform(norm * a * (1.0 - tn), norm * ((a2 - tn) + 1j * (1.0 - a2)))
    g1 = MobiusTransform(norm * a * (1.0 + tn), norm * ((1.0 - a2) + 1j * (a2 + tn)))
    r = rotation(math.pi / 2)
    ri = r.inverse()
    return GeneratorSet(params, (g0, g1, r @ g0 @ ri, r @ g1 @ ri), norm)


def omega_table(geom: OctagonGeometry) -> tuple[complex, ...]:
    """(omega_0..omega_5) = (omega+, omega-, i omega+, i omega-, 2a/(1+a^2), 0)."""
    op, om = geom.omega_plus, geom.omega_minus
    return (op, om, 1j * op, 1j * om, complex(geom.omega4), 0j)


def m_matrices(geom: OctagonGeometry) -> tuple[MobiusTransform, ...]:
    """Trace-zero half turns M_k = M(omega_k) for the table above."""
    return tuple(m_half_turn(w) for w in omega_table(geom))


@dataclass(frozen=True)
class RelationReport:
    defect: float
    sign: int


def relation_defect(gens: GeneratorSet) -> RelationReport:
    """Defect of g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3 against +-identity.

    The realized lift sign is measured, not assumed.
    """
    g0, g1, g2, g3 = gens.g
    word = g0 @ g1.inverse() @ g2 @ g3.inverse() @ g0.inverse() @ g1 @ g2.inverse() @ g3
    plus = max(abs(word.u - 1.0), abs(word.v))
    minus = max(abs(word.u + 1.0), abs(word.v))
    if plus <= minus:
        return RelationReport(plus, +1)
    return RelationReport(minus, -1)


@dataclass(frozen=True)
class SidePairingReport:
    endpoint_residual: float
    midpoint_residual: float
    interior_samples: int
    interior_violations: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return (
            self.endpoint_residual <= self.tolerance
            and self.midpoint_residual <= self.tolerance
            and self.interior_violations == 0
        )


def side_pairing_check(
    geom: OctagonGeometry,
    gens: GeneratorSet,
    samples: int = 1000,
    seed: int = 0,
    tol: float = DEDUP_TOLERANCE,
) -> SidePairingReport:
    """Verify that g_k carries side k+4 onto side k.

    Endpoints of side k+4 must land on the endpoint pair of side k (as a
    set), the opposite midpoint -p_k must map to p_k, and images of
    interior sample points must leave the octagon (weak disjointness of
    g_k[F] and F).
    """
    v = geom.vertices
    endpoint_res = 0.0
    midpoint_res = 0.0
    for k, g in enumerate(gens.g):
        targets = (v[k], v[(k + 1) % 8])
        for src in (v[(k + 4) % 8], v[(k + 5) % 8]):
            img = g(src)
            endpoint_res = max(endpoint_res, min(abs(img - t) for t in targets))
        p = geom.midpoints[k]
        midpoint_res = max(midpoint_res, abs(g(-p) - p))

    rng = np.random.default_rng(seed)
    bound = max(geom.params.a, geom.b)
    violations = 0
    drawn = 0
    while drawn < samples:
        z = complex(*rng.uniform(-bound, bound, 2))
        if not in_octagon(geom, z, shrink=1e-4):
            continue
        drawn += 1
        for g in gens.g:
            if in_octagon(geom, g(z), shrink=-1e-7):
                violations += 1
    return SidePairingReport(endpoint_res, midpoint_res, drawn, violations, tol)


@dataclass(frozen=True)
class BallElement:
    word: str
    transform: MobiusTransform


@dataclass(frozen=True)
class GroupBall:
    radius: int
    elements: tuple[BallElement, ...]
    relation_sign: int

    def __len__(self) -> int:
        return len(self.elements)

    def words(self) -> list[str]:
        return [e.word for e in self.elements]


def _key(t: MobiusTransform) -> tuple[int, int, int, int]:
    return (
        round(t.u.real / _KEY_QUANTUM),
        round(t.u.imag / _KEY_QUANTUM),
        round(t.v.real / _KEY_QUANTUM),
        round(t.v.imag / _KEY_QUANTUM),
    )


def _candidate_keys(t: MobiusTransform):
    # neighbor bins are probed only for coordinates near a bin edge, so one
    # element straddling an edge cannot split into two entries
    axes = []
    for x in (t.u.real, t.u.imag, t.v.real, t.v.imag):
        q = x / _KEY_QUANTUM
        r = round(q)
        offs = [r]
        if 0.5 - abs(q - r) <= 2.0 * DEDUP_TOLERANCE / _KEY_QUANTUM:
            offs.append(r + 1 if q > r else r - 1)
        axes.append(offs)
    for k0 in axes[0]:
        for k1 in axes[1]:
            for k2 in axes[2]:
                for k3 in axes[3]:
                    yield (k0, k1, k2, k3)


def _match(store: dict, t: MobiusTransform) -> bool:
    for key in _candidate_keys(t):
        for hit in store.get(key, ()):
            if projective_gap(hit, t) <= DEDUP_TOLERANCE:
                return True
    return False


def ball(gens: GeneratorSet, n: int, cap: int = 200_000) -> GroupBall:
    """Shortest-word BFS ball of radius n with canonical-sign dedup.

    Deterministic: the frontier is expanded in (length, word) lexicographic
    order over the letters a,A,b,B,c,C,d,D, and the first (shortest-lex)
    word reaching an element is kept.  Raises BallCapacityError beyond
    ``cap`` elements.
    """
    if n < 0:
        raise ValueError(f"ball radius must be >= 0, got {n!r}")
    letters = gens.letters()
    ident = MobiusTransform.identity().canonical()
    store: dict[tuple[int, int, int, int], list[MobiusTransform]] = {_key(ident): [ident]}
    elements = [BallElement("", ident)]
    frontier = [("", ident)]
    for _ in range(n):
        next_frontier: list[tuple[str, MobiusTransform]] = []
        for word, t in frontier:
            last = word[-1] if word else ""
            for label, gen in letters:
                if last and label == last.swapcase():
                    continue  # free reduction: skip immediate backtracking
                cand = (t @ gen).canonical()
                if _match(store, cand):
                    continue
                if len(elements) >= cap:
                    raise BallCapacityError(
                        f"ball exceeded cap of {cap} elements at radius {len(word) + 1}"
                    )
                store.setdefault(_key(cand), []).append(cand)
                new_word = word + label
                elements.append(BallElement(new_word, cand))
                next_frontier.append((new_word, cand))
        frontier = next_frontier
    return GroupBall(n, tuple(elements), relation_defect(gens).sign)


@dataclass(frozen=True)
class Cell:
    """One tile of the disk tiling: a ball element applied to the octagon."""

    word: str
    vertices: tuple[complex, ...]
    midpoints: tuple[complex, ...]


def cells(gens: GeneratorSet, n: int, geom: OctagonGeometry | None = None) -> list[Cell]:
    """Images of the octagon under every element of the radius-n ball."""
    if geom is None:
        geom = build_geometry(gens.params)
    out = []
    for el in ball(gens, n).elements:
        t = el.transform
        out.append(
            Cell(
                el.word,
                tuple(t(v) for v in geom.vertices),
                tuple(t(p) for p in geom.midpoints),
            )
        )
    return out
