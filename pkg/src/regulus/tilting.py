"""Branch modules, the (Y, P) parametrization, and the induced tilting and
cotilting decompositions.

A branch module is a multiplicity-free exceptional regular module whose
summands fill disjoint wings, with exactly m summands inside the wing of each
length-m summand.  Together with a set P of tube ids, it determines:

* a tilting decomposition  Y + lukas_localized(V) + pruefer(S) for S in U,
  where V collects the quasi-simples of the P-tubes and the composition
  factors of Y, and U the quasi-simples of P-tubes that are not composition
  factors of the inverse-shift of Y;
* a cotilting decomposition  Y + generic + prueders over the non-P tubes
  whose whole ray has no extensions by Y + adic(S) for S in U.

The decomposition is minimal (no smaller equivalent (co)tilting module)
exactly when P is non-empty, equivalently when U is non-empty.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .homext import ext_dim, hom_to_ray_vanishes, pruefer_perp1_member
from .tubes import (
    AdicModule,
    ConfigurationError,
    FormalModule,
    GenericModule,
    InvariantViolation,
    LukasLocalized,
    PrueferModule,
    Segment,
    TubeConfig,
    Wing,
    comp_factors,
    norm_index,
    parse_segment,
    quasi_simple,
    sort_segments,
    tau,
)

SCHEMA = "regulus/1"


class BranchViolation(ConfigurationError):
    """The given summands fail one of the branch-module conditions."""


# ---------------------------------------------------------------------------
# Branch modules
# ---------------------------------------------------------------------------


def is_exceptional(summands: Iterable[Segment]) -> bool:
    """No extensions between (or within) any of the given segments."""
    segs = list(summands)
    return all(ext_dim(a, b) == 0 for a in segs for b in segs)


def branch_violation(summands: Iterable[Segment]) -> str | None:
    """First reason the given summands fail to form a branch module, if any."""
    segs = list(summands)
    seen = set()
    for s in segs:
        if s in seen:
            return f"summand {s} repeats; branch modules are multiplicity-free"
        seen.add(s)
    for s in segs:
        if s.length >= s.rank:
            return f"summand {s} has length >= tube rank {s.rank}"
    for a in segs:
        for b in segs:
            if ext_dim(a, b) != 0:
                return f"extension obstruction: ext({a}, {b}) != 0"
    for root in segs:
        wing = Wing(root)
        inside = sum(1 for s in segs if wing.contains(s))
        if inside != root.length:
            return (
                f"wing of {root} holds {inside} summands, needs {root.length}"
            )
    return None


def is_branch_module(summands: Iterable[Segment]) -> bool:
    return branch_violation(summands) is None


@dataclass(frozen=True)
class BranchModule:
    """A validated branch module; summands are kept sorted."""

    summands: tuple[Segment, ...]

    def __post_init__(self) -> None:
        if self.summands != sort_segments(self.summands):
            raise ConfigurationError("summands must be sorted and duplicate-free")
        reason = branch_violation(self.summands)
        if reason is not None:
            raise BranchViolation(reason)

    @classmethod
    def of(cls, summands: Iterable[Segment]) -> BranchModule:
        return cls(sort_segments(summands))

    def tube_ids(self) -> tuple[str, ...]:
        return tuple(sorted({s.tube for s in self.summands}))

    def in_tube(self, tube_id: str) -> tuple[Segment, ...]:
        return tuple(s for s in self.summands if s.tube == tube_id)

    def is_empty(self) -> bool:
        return not self.summands

    def __str__(self) -> str:
        return "0" if self.is_empty() else " + ".join(str(s) for s in self.summands)


def wings_of(branch: BranchModule, tube_id: str) -> tuple[Wing, ...]:
    """The disjoint wings of the branch module inside one tube, sorted by
    socle index of their roots."""
    segs = branch.in_tube(tube_id)
    roots = [
        s
        for s in segs
        if not any(other != s and Wing(other).contains(s) for other in segs)
    ]
    wings = tuple(sorted(Wing(r) for r in roots))
    support: set[int] = set()
    for w in wings:
        overlap = support.intersection(w.support())
        if overlap:
            raise InvariantViolation(
                f"wings of {branch} in tube {tube_id!r} overlap at {sorted(overlap)}"
            )
        support.update(w.support())
    for w, nxt in zip(wings, wings[1:] + wings[:1]):
        gap = (nxt.root.socle - w.root.socle - w.size) % w.root.rank
        if len(wings) > 1 and gap == 0:
            raise InvariantViolation(
                f"wings rooted at {w.root} and {nxt.root} are adjacent"
            )
    return wings


# ---------------------------------------------------------------------------
# Pairs (Y, P)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pair:
    """A branch module together with a set P of tube ids; the parameter space
    of the minimal (co)tilting classification."""

    config: TubeConfig
    branch: BranchModule
    tube_set: frozenset[str]

    def __post_init__(self) -> None:
        for s in self.branch.summands:
            self.config.check_segment(s)
        for tube_id in self.tube_set:
            self.config.rank_of(tube_id)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "tubes": self.config.to_json()["tubes"],
            "branch": [str(s) for s in self.branch.summands],
            "P": sorted(self.tube_set),
        }

    @classmethod
    def from_json(cls, doc: dict) -> Pair:
        try:
            config = TubeConfig.from_json(doc)
            branch_texts = list(doc.get("branch", []))
            tube_set = frozenset(str(t) for t in doc.get("P", []))
        except (TypeError, AttributeError) as exc:
            raise ConfigurationError(f"malformed pair document: {exc}") from exc
        branch = BranchModule.of(parse_segment(config, t) for t in branch_texts)
        return cls(config, branch, tube_set)


def localized_simples(pair: Pair) -> tuple[Segment, ...]:
    """V: the quasi-simples inverted by the localization — every quasi-simple
    of a P-tube plus every regular composition factor of the branch module."""
    out: set[Segment] = set()
    for tube_id in pair.tube_set:
        out.update(pair.config.quasi_simples(tube_id))
    for s in pair.branch.summands:
        out.update(
            quasi_simple(s.tube, i, s.rank) for i in comp_factors(s)
        )
    return sort_segments(out)


def pruefer_socles(pair: Pair) -> tuple[Segment, ...]:
    """U: quasi-simples of P-tubes that are not composition factors of the
    inverse shift of the branch module."""
    out: list[Segment] = []
    for tube_id in sorted(pair.tube_set):
        rank = pair.config.rank_of(tube_id)
        shifted: set[int] = set()
        for s in pair.branch.in_tube(tube_id):
            shifted.update(comp_factors(tau(s, -1)))
        out.extend(
            quasi_simple(tube_id, i, rank)
            for i in range(1, rank + 1)
            if i not in shifted
        )
    return sort_segments(out)


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TiltingDescriptor:
    branch: BranchModule
    tube_set: frozenset[str]
    localized: tuple[Segment, ...]
    socles: tuple[Segment, ...]

    @property
    def parts(self) -> tuple[FormalModule, ...]:
        return (
            *self.branch.summands,
            LukasLocalized(self.localized),
            *(PrueferModule(s) for s in self.socles),
        )

    def is_minimal(self) -> bool:
        return bool(self.tube_set)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "parts": [str(p) for p in self.parts],
            "V": [str(s) for s in self.localized],
            "U": [str(s) for s in self.socles],
            "P": sorted(self.tube_set),
            "minimal": self.is_minimal(),
        }


@dataclass(frozen=True)
class CotiltingDescriptor:
    branch: BranchModule
    tube_set: frozenset[str]
    pruefer_socles: tuple[Segment, ...]
    adic_socles: tuple[Segment, ...]

    @property
    def parts(self) -> tuple[FormalModule, ...]:
        return (
            *self.branch.summands,
            GenericModule(),
            *(PrueferModule(s) for s in self.pruefer_socles),
            *(AdicModule(s) for s in self.adic_socles),
        )

    def is_minimal(self) -> bool:
        return bool(self.adic_socles)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "parts": [str(p) for p in self.parts],
            "pruefer_socles": [str(s) for s in self.pruefer_socles],
            "adic_socles": [str(s) for s in self.adic_socles],
            "P": sorted(self.tube_set),
            "minimal": self.is_minimal(),
        }


def build_tilting(pair: Pair) -> TiltingDescriptor:
    v = localized_simples(pair)
    u = pruefer_socles(pair)
    if not set(u) <= set(v):
        raise InvariantViolation(f"U {u} escapes V {v}")
    return TiltingDescriptor(pair.branch, pair.tube_set, v, u)


def build_cotilting(pair: Pair) -> CotiltingDescriptor:
    prueders: list[Segment] = []
    for tube_id in pair.config.tube_ids():
        if tube_id in pair.tube_set:
            continue
        for s in pair.config.quasi_simples(tube_id):
            if all(
                hom_to_ray_vanishes(a, tau(s))
                for a in pair.branch.in_tube(tube_id)
            ):
                prueders.append(s)
    return CotiltingDescriptor(
        pair.branch,
        pair.tube_set,
        sort_segments(prueders),
        pruefer_socles(pair),
    )


def is_minimal_tilting(desc: TiltingDescriptor) -> bool:
    return desc.is_minimal()


def is_minimal_cotilting(desc: CotiltingDescriptor) -> bool:
    return desc.is_minimal()


# ---------------------------------------------------------------------------
# Membership of regular test objects
# ---------------------------------------------------------------------------


def gen_class_contains(desc: TiltingDescriptor, z: Segment) -> bool:
    """Whether the regular segment z lies in the class generated by the
    tilting module: no extensions by any ray over U nor by any Y-summand."""
    return all(pruefer_perp1_member(s, z) for s in desc.socles) and all(
        ext_dim(a, z) == 0 for a in desc.branch.summands
    )


def ray_or_branch_prefix(desc: TiltingDescriptor, m: Segment) -> bool:
    """Whether m lies on a ray starting in U or under a Y-summand on its own
    ray.  (Regular members only; preprojectives impose no Ext-conditions on
    regular test objects and are left out.)"""
    for s in desc.socles:
        if s.tube == m.tube and s.socle == m.socle:
            return True
    return any(
        a.tube == m.tube and a.socle == m.socle and m.length <= a.length
        for a in desc.branch.summands
    )


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _wing_arrangements(
    tube_id: str, socle: int, size: int, rank: int
) -> tuple[frozenset[Segment], ...]:
    """All branch arrangements filling a wing rooted at S_socle[size]: the
    root plus a split into two independent sub-wings, Catalan-many in total."""
    if size == 0:
        return (frozenset(),)
    root = Segment(tube_id, norm_index(socle, rank), size, rank)
    out = []
    for t in range(size):
        for left in _wing_arrangements(tube_id, socle, t, rank):
            for right in _wing_arrangements(tube_id, socle + t + 1, size - 1 - t, rank):
                out.append(frozenset({root}) | left | right)
    return tuple(out)


def _root_configs(rank: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All families of wing roots (socle, size) with the cyclic gap
    size_j + 1 <= distance to the next root."""
    yield ()
    for count in range(1, rank // 2 + 1):
        for socles in itertools.combinations(range(1, rank + 1), count):
            gaps = [
                (socles[(j + 1) % count] - socles[j] - 1) % rank + 1
                for j in range(count)
            ]
            if any(g < 2 for g in gaps):
                continue
            for sizes in itertools.product(*(range(1, g) for g in gaps)):
                yield tuple(zip(socles, sizes))


def tube_branch_families(config: TubeConfig, tube_id: str) -> tuple[tuple[Segment, ...], ...]:
    """All branch-module summand sets supported on a single tube, sorted."""
    rank = config.rank_of(tube_id)
    families: set[tuple[Segment, ...]] = set()
    for roots in _root_configs(rank):
        for choice in itertools.product(
            *(_wing_arrangements(tube_id, socle, size, rank) for socle, size in roots)
        ):
            families.add(sort_segments(frozenset().union(*choice, frozenset())))
    return tuple(sorted(families))


def enumerate_branch_modules(
    config: TubeConfig, restrict_tubes: Iterable[str] | None = None
) -> Iterator[BranchModule]:
    """Exhaustively enumerate branch modules on the declared tubes,
    duplicate-free, in a deterministic order."""
    tube_ids = tuple(restrict_tubes) if restrict_tubes is not None else config.tube_ids()
    for tube_id in tube_ids:
        config.rank_of(tube_id)
    per_tube = [tube_branch_families(config, t) for t in tube_ids]
    for combo in itertools.product(*per_tube):
        branch = BranchModule.of(itertools.chain.from_iterable(combo))
        for tube_id in tube_ids:
            wings_of(branch, tube_id)
        yield branch
