"""Combinatorics of stable tubes.

A stable tube of rank r has quasi-simple modules S_1, ..., S_r at its mouth.
Every indecomposable in the tube is a *segment* S_i[l]: the uniserial regular
module with socle S_i and regular length l, whose regular composition factors
are S_i, S_{i+1}, ..., S_{i+l-1} (indices cyclic in 1..r, repeating when
l > r).  Rays are obtained by fixing the socle and growing the length.

Package convention (fixed once, here): the Auslander-Reiten translate shifts
the socle index *down*, tau(S_i[l]) = S_{i-1}[l], so its inverse shifts the
socle up.  The matrix model in :func:`cyclic_rep` orients the cyclic quiver
accordingly (arrows v -> v-1); homext.py re-checks the orientation against
the AR formula at import time.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Union


class InvariantViolation(RuntimeError):
    """Internal inconsistency that valid inputs can never trigger."""


class ConfigurationError(ValueError):
    """A tube family or segment reference is malformed or undeclared."""


def norm_index(i: int, rank: int) -> int:
    """Normalize a cyclic quasi-simple index into 1..rank."""
    return (i - 1) % rank + 1


@dataclass(frozen=True, order=True)
class Segment:
    """Indecomposable regular module S_{socle}[length] in a named tube.

    Attributes:
        tube: identifier of the tube the segment lives in.
        socle: index of the quasi-simple socle, in 1..rank.
        length: regular length, at least 1.
        rank: rank of the ambient tube (carried so that all cyclic
            arithmetic is local to the segment).
    """

    tube: str
    socle: int
    length: int
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ConfigurationError(f"tube rank must be >= 1, got {self.rank}")
        if not 1 <= self.socle <= self.rank:
            raise ConfigurationError(
                f"socle index {self.socle} outside 1..{self.rank}"
            )
        if self.length < 1:
            raise ConfigurationError(f"segment length must be >= 1, got {self.length}")

    @property
    def top(self) -> int:
        """Index of the top quasi-simple composition factor."""
        return norm_index(self.socle + self.length - 1, self.rank)

    @property
    def end(self) -> int:
        """Index just past the top factor: the socle a concatenating quotient must have."""
        return norm_index(self.socle + self.length, self.rank)

    def with_length(self, length: int) -> Segment:
        return Segment(self.tube, self.socle, length, self.rank)

    def is_quasi_simple(self) -> bool:
        return self.length == 1

    def __str__(self) -> str:
        return format_segment(self)


def quasi_simple(tube: str, index: int, rank: int) -> Segment:
    return Segment(tube, norm_index(index, rank), 1, rank)


def tau(seg: Segment, power: int = 1) -> Segment:
    """Auslander-Reiten translate: shifts the socle down by `power` (cyclically).

    Negative powers give the inverse translate, which shifts the socle up.
    """
    return Segment(seg.tube, norm_index(seg.socle - power, seg.rank), seg.length, seg.rank)


def comp_factors(seg: Segment) -> Counter:
    """Multiset of quasi-simple composition factor indices of the segment."""
    return Counter(norm_index(seg.socle + k, seg.rank) for k in range(seg.length))


def dim_vector(seg: Segment) -> tuple[int, ...]:
    """Counts of each quasi-simple factor, indexed by vertex 1..rank."""
    counts = comp_factors(seg)
    return tuple(counts.get(v, 0) for v in range(1, seg.rank + 1))


@dataclass(frozen=True, order=True)
class Wing:
    """The wing of a segment: all segments supported strictly inside it.

    The root S_n[m] must satisfy m < rank, so the wing is a triangle of
    m*(m+1)/2 segments with socles n, ..., n+m-1.
    """

    root: Segment

    def __post_init__(self) -> None:
        if self.root.length >= self.root.rank:
            raise ConfigurationError(
                f"wing root {self.root} must have length < rank {self.root.rank}"
            )

    @property
    def size(self) -> int:
        return self.root.length

    def support(self) -> tuple[int, ...]:
        """Socle indices covered by the wing, in ray order from the root socle."""
        r = self.root
        return tuple(norm_index(r.socle + k, r.rank) for k in range(r.length))

    def members(self) -> tuple[Segment, ...]:
        """All segments lying in the wing, sorted."""
        r = self.root
        out = [
            Segment(r.tube, norm_index(r.socle + k, r.rank), t, r.rank)
            for k in range(r.length)
            for t in range(1, r.length - k + 1)
        ]
        return tuple(sorted(out))

    def contains(self, seg: Segment) -> bool:
        if seg.tube != self.root.tube:
            return False
        for k, s in enumerate(self.support()):
            if seg.socle == s and seg.length <= self.size - k:
                return True
        return False


_SEGMENT_RE = re.compile(r"^(?P<tube>.+):S(?P<socle>\d+)(?:\[(?P<length>\d+)\])?$")


def format_segment(seg: Segment) -> str:
    """Text form 't1:S3[5]'; quasi-simples print without the bracket."""
    if seg.length == 1:
        return f"{seg.tube}:S{seg.socle}"
    return f"{seg.tube}:S{seg.socle}[{seg.length}]"


@dataclass(frozen=True)
class TubeConfig:
    """A declared family of tubes, each with an id and a rank.

    Tubes not declared here are implicitly homogeneous and play no role;
    a homogeneous tube that should participate is declared with rank 1.
    """

    tubes: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for tube_id, rank in self.tubes:
            if tube_id in seen:
                raise ConfigurationError(f"duplicate tube id {tube_id!r}")
            seen.add(tube_id)
            if rank < 1:
                raise ConfigurationError(f"tube {tube_id!r} has invalid rank {rank}")

    def tube_ids(self) -> tuple[str, ...]:
        return tuple(t for t, _ in self.tubes)

    def rank_of(self, tube_id: str) -> int:
        for t, rank in self.tubes:
            if t == tube_id:
                return rank
        raise ConfigurationError(f"unknown tube id {tube_id!r}")

    def segment(self, tube_id: str, socle: int, length: int) -> Segment:
        return Segment(tube_id, socle, length, self.rank_of(tube_id))

    def quasi_simples(self, tube_id: str) -> tuple[Segment, ...]:
        rank = self.rank_of(tube_id)
        return tuple(Segment(tube_id, i, 1, rank) for i in range(1, rank + 1))

    def segments(self, tube_id: str, max_length: int) -> Iterator[Segment]:
        """All segments of the tube with length up to max_length, sorted."""
        rank = self.rank_of(tube_id)
        for socle in range(1, rank + 1):
            for length in range(1, max_length + 1):
                yield Segment(tube_id, socle, length, rank)

    def all_segments(self, max_length: int) -> Iterator[Segment]:
        for tube_id in self.tube_ids():
            yield from self.segments(tube_id, max_length)

    def check_segment(self, seg: Segment) -> Segment:
        if self.rank_of(seg.tube) != seg.rank:
            raise ConfigurationError(
                f"segment {seg} carries rank {seg.rank}, tube is declared with "
                f"rank {self.rank_of(seg.tube)}"
            )
        return seg

    def to_json(self) -> dict:
        return {"tubes": [{"id": t, "rank": r} for t, r in self.tubes]}

    @classmethod
    def from_json(cls, doc: dict) -> TubeConfig:
        try:
            tubes = tuple((str(e["id"]), int(e["rank"])) for e in doc["tubes"])
        except (KeyError, TypeError) as exc:
            raise ConfigurationError(f"malformed tube configuration: {exc}") from exc
        return cls(tubes)

    @classmethod
    def from_file(cls, path: str) -> TubeConfig:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def parse_segment(config: TubeConfig, text: str) -> Segment:
    """Parse 't1:S3[5]' (or 't1:S3' for a quasi-simple) against a config."""
    m = _SEGMENT_RE.match(text.strip())
    if m is None:
        raise ConfigurationError(f"cannot parse segment {text!r}")
    length = int(m.group("length")) if m.group("length") else 1
    return config.segment(m.group("tube"), int(m.group("socle")), length)


# ---------------------------------------------------------------------------
# Matrix model: nilpotent representations of the cyclic quiver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclicRep:
    """Nilpotent representation of the cyclic quiver with `rank` vertices.

    Vertices are 1..rank; there is one arrow out of each vertex v, going to
    v-1 (cyclically).  maps[v-1] is the matrix of that arrow, of shape
    (dims[v-2 mod rank], dims[v-1]), acting on column vectors.
    """

    rank: int
    dims: tuple[int, ...]
    maps: tuple[tuple[tuple[int, ...], ...], ...]

    def arrow_target(self, v: int) -> int:
        return norm_index(v - 1, self.rank)


def cyclic_rep(seg: Segment) -> CyclicRep:
    """Realize a segment as a representation, basis e_0..e_{l-1} with e_k at
    vertex socle+k and the arrows acting by e_k -> e_{k-1}, e_0 -> 0."""
    r = seg.rank
    vertex_of = [norm_index(seg.socle + k, r) for k in range(seg.length)]
    basis: dict[int, list[int]] = {v: [] for v in range(1, r + 1)}
    for k, v in enumerate(vertex_of):
        basis[v].append(k)
    pos = {k: basis[v].index(k) for k, v in enumerate(vertex_of)}
    dims = tuple(len(basis[v]) for v in range(1, r + 1))

    maps = []
    for v in range(1, r + 1):
        tgt = norm_index(v - 1, r)
        mat = [[0] * dims[v - 1] for _ in range(dims[tgt - 1])]
        for k in basis[v]:
            if k >= 1:
                mat[pos[k - 1]][pos[k]] = 1
        maps.append(tuple(tuple(row) for row in mat))
    return CyclicRep(r, dims, tuple(maps))


# ---------------------------------------------------------------------------
# Formal (typically infinite-dimensional) modules used in decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class PrueferModule:
    """Union of the ray above a quasi-simple: direct limit of S[n], n >= 1."""

    socle: Segment

    def __post_init__(self) -> None:
        if self.socle.length != 1:
            raise ConfigurationError("Pruefer modules are based at quasi-simples")

    def __str__(self) -> str:
        return f"pruefer({self.socle})"


@dataclass(frozen=True, order=True)
class AdicModule:
    """Inverse limit along the coray down to a quasi-simple."""

    socle: Segment

    def __post_init__(self) -> None:
        if self.socle.length != 1:
            raise ConfigurationError("adic modules are based at quasi-simples")

    def __str__(self) -> str:
        return f"adic({self.socle})"


@dataclass(frozen=True)
class GenericModule:
    """The unique generic module (symbolic, never computed with)."""

    def __str__(self) -> str:
        return "generic"


@dataclass(frozen=True)
class LukasLocalized:
    """The Lukas tilting module tensored with the universal localization
    inverting the listed quasi-simples (symbolic)."""

    localized: tuple[Segment, ...]

    def __post_init__(self) -> None:
        for s in self.localized:
            if s.length != 1:
                raise ConfigurationError("localized set must consist of quasi-simples")
        if list(self.localized) != sorted(set(self.localized)):
            raise ConfigurationError("localized set must be sorted and duplicate-free")

    def __str__(self) -> str:
        inner = ",".join(str(s) for s in self.localized)
        return f"lukas_localized({inner})"


FormalModule = Union[Segment, PrueferModule, AdicModule, GenericModule, LukasLocalized]


def sort_segments(segs: Iterable[Segment]) -> tuple[Segment, ...]:
    return tuple(sorted(set(segs)))
