"""Generators of the localization at a pair (Y, P) and the finite description
of the wide closure they generate.

For each tube carrying branch summands, the wing of every maximal summand
determines two finite sets: the caps (longest summands on each ray through
the wing) and the complement generators (segments growing out of the wing
root up to the next wing, plus the loose quasi-simples between wings).  The
union over wings, together with whole tubes for the P-members without branch
summands, generates a wide subcategory.  Its indecomposables are described
finitely: full rays over the quasi-simples in U, and finite prefixes below
the caps.

Because the closure itself is infinite, its correctness is established by
three checkable directions: the generators satisfy the description, a
closure probe starting from the description's defining segments stays inside
it, and perpendicularity against the description matches the generated-class
test on all bounded segments.  Filtration witnesses certify the full-turn
segments S[rank] explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .homext import ext_dim, hom_basis, pruefer_perp1_member
from .tilting import (
    BranchModule,
    Pair,
    TiltingDescriptor,
    build_tilting,
    gen_class_contains,
    pruefer_socles,
    wings_of,
)
from .tubes import (
    ConfigurationError,
    InvariantViolation,
    Segment,
    TubeConfig,
    Wing,
    dim_vector,
    norm_index,
    sort_segments,
)

SCHEMA = "regulus/1"


# ---------------------------------------------------------------------------
# Wing caps and complement generators
# ---------------------------------------------------------------------------


def ray_caps(wing: Wing, branch: BranchModule) -> tuple[Segment, ...]:
    """For each ray through the wing, the longest branch summand on it."""
    out = []
    for socle in wing.support():
        on_ray = [
            s
            for s in branch.in_tube(wing.root.tube)
            if s.socle == socle and wing.contains(s)
        ]
        if on_ray:
            out.append(max(on_ray, key=lambda s: s.length))
    return sort_segments(out)


def ray_caps_nonroot(wing: Wing, branch: BranchModule) -> tuple[Segment, ...]:
    """Ray caps of the wing, omitting the root's own ray."""
    return tuple(s for s in ray_caps(wing, branch) if s.socle != wing.root.socle)


def wing_complement_generators(wings: tuple[Wing, ...]) -> tuple[tuple[Segment, ...], ...]:
    """Per wing j: the segments growing the root past its wing up to the next
    wing root, and the loose quasi-simples strictly between the two wings."""
    if not wings:
        raise ConfigurationError("complement generators need at least one wing")
    rank = wings[0].root.rank
    tube = wings[0].root.tube
    out = []
    for w, nxt in zip(wings, wings[1:] + wings[:1]):
        n, m = w.root.socle, w.root.length
        reach = (nxt.root.socle - n - 1) % rank + 1
        segments = [Segment(tube, n, k, rank) for k in range(m + 1, reach + 1)]
        loose = [
            Segment(tube, norm_index(n + t, rank), 1, rank)
            for t in range(m + 1, reach)
        ]
        out.append(sort_segments(segments + loose))
    return tuple(out)


# ---------------------------------------------------------------------------
# The generator system of a pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TubeGenerators:
    """Generators contributed by one tube carrying branch summands."""

    tube: str
    in_p: bool
    caps: tuple[Segment, ...]
    complement: tuple[tuple[Segment, ...], ...]

    @property
    def generators(self) -> tuple[Segment, ...]:
        return sort_segments(self.caps + tuple(itertools.chain.from_iterable(self.complement)))


@dataclass(frozen=True)
class GeneratorSystem:
    pair: Pair
    entries: tuple[TubeGenerators, ...]
    whole_tubes: tuple[str, ...]

    def branch_tubes(self) -> tuple[str, ...]:
        return tuple(e.tube for e in self.entries)

    def entry(self, tube_id: str) -> TubeGenerators | None:
        for e in self.entries:
            if e.tube == tube_id:
                return e
        return None

    def generators(self, tube_id: str) -> tuple[Segment, ...]:
        e = self.entry(tube_id)
        if e is not None:
            return e.generators
        if tube_id in self.whole_tubes:
            return self.pair.config.quasi_simples(tube_id)
        return ()

    def is_generator(self, seg: Segment) -> bool:
        if seg.tube in self.whole_tubes:
            return True
        return seg in self.generators(seg.tube)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "tubes": [
                {
                    "tube": e.tube,
                    "in_p": e.in_p,
                    "caps": [str(s) for s in e.caps],
                    "complement": [[str(s) for s in r] for r in e.complement],
                }
                for e in self.entries
            ],
            "whole_tubes": list(self.whole_tubes),
        }


def generator_system(pair: Pair) -> GeneratorSystem:
    """Assemble caps, complement generators, and whole-tube markers.

    Tubes with branch summands contribute their ray caps (omitting root rays
    when the tube is in P, where the root rays are already full rays) and,
    when in P, the wing-complement generators.  Tubes in P without branch
    summands are generated by all their quasi-simples.
    """
    entries = []
    whole = []
    for tube_id in pair.config.tube_ids():
        wings = wings_of(pair.branch, tube_id)
        in_p = tube_id in pair.tube_set
        if not wings:
            if in_p:
                whole.append(tube_id)
            continue
        if in_p:
            caps = tuple(
                itertools.chain.from_iterable(
                    ray_caps_nonroot(w, pair.branch) for w in wings
                )
            )
            complement = wing_complement_generators(wings)
        else:
            caps = tuple(
                itertools.chain.from_iterable(ray_caps(w, pair.branch) for w in wings)
            )
            complement = ()
        entries.append(TubeGenerators(tube_id, in_p, sort_segments(caps), complement))
    return GeneratorSystem(pair, tuple(entries), tuple(whole))


# ---------------------------------------------------------------------------
# The finite description of the wide closure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WideDescription:
    """Indecomposables of the wide closure: every segment on a ray over a
    full-ray quasi-simple, plus every prefix under a cap."""

    config: TubeConfig
    full_rays: tuple[Segment, ...]
    caps: tuple[Segment, ...]

    def contains(self, seg: Segment) -> bool:
        for s in self.full_rays:
            if s.tube == seg.tube and s.socle == seg.socle:
                return True
        return any(
            c.tube == seg.tube and c.socle == seg.socle and seg.length <= c.length
            for c in self.caps
        )

    def is_empty(self) -> bool:
        return not self.full_rays and not self.caps

    def defining_segments(self) -> tuple[Segment, ...]:
        """The finite family whose closure the description stands for."""
        return sort_segments(self.full_rays + self.caps)

    def members(self, max_length: int) -> Iterator[Segment]:
        for seg in self.config.all_segments(max_length):
            if self.contains(seg):
                yield seg

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "full_rays": [str(s) for s in self.full_rays],
            "caps": [str(s) for s in self.caps],
        }


def wide_closure_description(pair: Pair) -> WideDescription:
    system = generator_system(pair)
    caps = tuple(
        itertools.chain.from_iterable(e.caps for e in system.entries)
    )
    return WideDescription(pair.config, pruefer_socles(pair), sort_segments(caps))


def closure_probe(desc: WideDescription, len_bound: int) -> tuple[Segment, ...]:
    """Close the description's defining segments under concatenation
    extensions and kernels/cokernels of basis maps, up to len_bound.

    This is a necessary-condition probe: the true closure also contains
    middle terms of non-concatenation extensions, but everything the probe
    produces must already satisfy the membership test.
    """
    known: set[Segment] = set(desc.defining_segments())
    frontier = set(known)
    while frontier:
        new: set[Segment] = set()
        pairs = itertools.chain(
            itertools.product(sorted(frontier), sorted(known)),
            itertools.product(sorted(known - frontier), sorted(frontier)),
        )
        for x, y in pairs:
            if x.tube != y.tube:
                continue
            if y.socle == x.end and x.length + y.length <= len_bound:
                new.add(x.with_length(x.length + y.length))
            for m in hom_basis(x, y):
                ker, coker = m.kernel(), m.cokernel()
                if ker is not None:
                    new.add(ker)
                if coker is not None:
                    new.add(coker)
        frontier = new - known
        known |= frontier
    return sort_segments(known)


# ---------------------------------------------------------------------------
# Filtration witnesses
# ---------------------------------------------------------------------------


GENERATOR = "generator"
ASSUMED = "assumed"


class WitnessSearchError(InvariantViolation):
    """The breadth-first search failed to certify a target; carries a report."""

    def __init__(self, target: Segment, generators: tuple[Segment, ...], reached: int):
        self.target = target
        self.generators = generators
        self.reached = reached
        super().__init__(
            f"no filtration of {target} from {len(generators)} generators "
            f"({reached} segments reached)"
        )


@dataclass(frozen=True)
class WitnessStep:
    sub: Segment
    mid: Segment
    quot: Segment
    sub_origin: str
    quot_origin: str


@dataclass(frozen=True)
class FiltrationWitness:
    target: Segment
    steps: tuple[WitnessStep, ...]

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "target": str(self.target),
            "steps": [
                {
                    "sub": str(s.sub),
                    "mid": str(s.mid),
                    "quot": str(s.quot),
                    "sub_origin": s.sub_origin,
                    "quot_origin": s.quot_origin,
                }
                for s in self.steps
            ],
        }


GeneratorSource = Union[GeneratorSystem, Iterable[Segment]]


def _generator_pool(gens: GeneratorSource, tube_id: str) -> tuple[Segment, ...]:
    if isinstance(gens, GeneratorSystem):
        return gens.generators(tube_id)
    return sort_segments(g for g in gens if g.tube == tube_id)


def verify_witness(
    witness: FiltrationWitness,
    gens: GeneratorSource,
    assumed: Iterable[Segment] = (),
) -> tuple[bool, str | None]:
    """Check every bookkeeping invariant of a filtration witness; on failure
    return the first diagnostic."""
    target = witness.target
    pool = set(_generator_pool(gens, target.tube))
    pool.update(a for a in assumed if a.tube == target.tube)
    mids: list[Segment] = []
    for idx, step in enumerate(witness.steps):
        for part in (step.sub, step.mid, step.quot):
            if part.tube != target.tube or part.rank != target.rank:
                return False, f"step {idx}: {part} is outside the target tube"
        if step.mid.socle != step.sub.socle:
            return False, f"step {idx}: mid socle {step.mid.socle} != sub socle"
        if step.mid.length != step.sub.length + step.quot.length:
            return False, f"step {idx}: lengths {step.sub.length}+{step.quot.length} != {step.mid.length}"
        if step.quot.socle != step.sub.end:
            return False, (
                f"step {idx}: quot socle {step.quot.socle} does not continue "
                f"sub (needs {step.sub.end})"
            )
        mid_dim = dim_vector(step.mid)
        sum_dim = tuple(
            a + b for a, b in zip(dim_vector(step.sub), dim_vector(step.quot))
        )
        if mid_dim != sum_dim:
            return False, f"step {idx}: dimension vectors do not add up"
        for role, part in (("sub", step.sub), ("quot", step.quot)):
            if part not in pool and part not in mids:
                return False, f"step {idx}: {role} {part} is neither a generator nor a prior mid"
        mids.append(step.mid)
    if witness.steps:
        if mids[-1] != target:
            return False, f"final mid {mids[-1]} is not the target {target}"
    elif target not in pool:
        return False, f"zero-step target {target} is not a generator"
    return True, None


def _origin(seg: Segment, pool: frozenset[Segment], produced: dict[Segment, int]) -> str:
    if seg in produced:
        return f"step:{produced[seg]}"
    return GENERATOR if seg in pool else ASSUMED


def concatenation_witness(
    target: Segment,
    generators: Iterable[Segment],
    assumed: Iterable[Segment] = (),
    max_length: int | None = None,
) -> FiltrationWitness:
    """Breadth-first search for a concatenation filtration of the target from
    the generators (ties broken by segment order, shortest derivations first)."""
    pool = frozenset(g for g in generators if g.tube == target.tube)
    seeds = sort_segments(
        set(pool) | {a for a in assumed if a.tube == target.tube}
    )
    cap = max_length
    if cap is None:
        cap = target.rank + max((g.length for g in seeds), default=0)
    cap = max(cap, target.length)
    parents: dict[Segment, tuple[Segment, Segment]] = {}
    known = list(seeds)
    known_set = set(known)
    frontier = list(known)
    while frontier and target not in known_set:
        new: list[Segment] = []
        for sub, quot in sorted(
            itertools.chain(
                itertools.product(frontier, known),
                itertools.product(known, frontier),
            )
        ):
            if quot.socle != sub.end:
                continue
            length = sub.length + quot.length
            if length > cap:
                continue
            mid = sub.with_length(length)
            if mid in known_set or mid in parents:
                continue
            parents[mid] = (sub, quot)
            new.append(mid)
        new = sort_segments(new)
        known.extend(new)
        known_set.update(new)
        frontier = list(new)
    if target not in known_set:
        raise WitnessSearchError(target, tuple(seeds), len(known_set))

    # Unwind the parent links into an ordered, deduplicated step list.
    order: list[Segment] = []

    def unwind(seg: Segment) -> None:
        if seg in order or seg not in parents:
            return
        sub, quot = parents[seg]
        unwind(sub)
        unwind(quot)
        order.append(seg)

    unwind(target)
    produced: dict[Segment, int] = {}
    steps = []
    for mid in order:
        sub, quot = parents[mid]
        steps.append(
            WitnessStep(
                sub,
                mid,
                quot,
                _origin(sub, pool, produced),
                _origin(quot, pool, produced),
            )
        )
        produced[mid] = len(steps) - 1
    return FiltrationWitness(target, tuple(steps))


def full_turn_witness(s: Segment, pair: Pair) -> FiltrationWitness:
    """Certify S[rank] as an iterated concatenation extension of the pair's
    generators, for a quasi-simple S in U."""
    if s not in pruefer_socles(pair):
        raise ConfigurationError(f"{s} is not a Pruefer socle of the pair")
    system = generator_system(pair)
    target = s.with_length(s.rank)
    return concatenation_witness(target, system.generators(s.tube))


def pruefer_filtration_steps(s: Segment, n: int) -> FiltrationWitness:
    """Witness for S[n*rank] from the single assumed segment S[rank]: n-1
    concatenations, each appending one full turn."""
    if s.length != 1:
        raise ConfigurationError(f"ray socle must be a quasi-simple, got {s}")
    if n < 1:
        raise ConfigurationError(f"turn count must be >= 1, got {n}")
    r = s.rank
    steps = []
    for k in range(2, n + 1):
        steps.append(
            WitnessStep(
                s.with_length(r * (k - 1)),
                s.with_length(r * k),
                s.with_length(r),
                ASSUMED if k == 2 else f"step:{k - 3}",
                ASSUMED,
            )
        )
    return FiltrationWitness(s.with_length(r * n), tuple(steps))


# ---------------------------------------------------------------------------
# Perpendicularity of the description and the generated class
# ---------------------------------------------------------------------------


def closure_perp_contains(desc: WideDescription, z: Segment) -> bool:
    """Whether Ext^1(m, z) vanishes for every indecomposable m of the
    description: full rays via the Pruefer reduction, caps prefix by prefix."""
    for s in desc.full_rays:
        if not pruefer_perp1_member(s, z):
            return False
    for c in desc.caps:
        for i in range(1, c.length + 1):
            if ext_dim(c.with_length(i), z) != 0:
                return False
    return True


@dataclass(frozen=True)
class Mismatch:
    segment: Segment
    gen_member: bool
    perp_member: bool

    def to_json(self) -> dict:
        return {
            "Z": str(self.segment),
            "genT": self.gen_member,
            "mperp": self.perp_member,
        }


@dataclass(frozen=True)
class MatchReport:
    pair: Pair
    len_bound: int
    checked: int
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "pair": self.pair.to_json(),
            "len_bound": self.len_bound,
            "checked": self.checked,
            "ok": self.ok,
            "mismatches": [m.to_json() for m in self.mismatches],
        }


def localization_match_report(
    pair: Pair,
    len_bound: int,
    desc_t: TiltingDescriptor | None = None,
    desc_m: WideDescription | None = None,
) -> MatchReport:
    """Compare membership in the tilting-generated class against
    perpendicularity to the wide-closure description, for every segment of
    length <= len_bound in the declared tubes."""
    if desc_t is None:
        desc_t = build_tilting(pair)
    if desc_m is None:
        desc_m = wide_closure_description(pair)
    checked = 0
    mismatches = []
    for z in pair.config.all_segments(len_bound):
        checked += 1
        gen_member = gen_class_contains(desc_t, z)
        perp_member = closure_perp_contains(desc_m, z)
        if gen_member != perp_member:
            mismatches.append(Mismatch(z, gen_member, perp_member))
    return MatchReport(pair, len_bound, checked, tuple(mismatches))
