"""Independent brute-force reference implementations used by the tests.

These deliberately avoid the package's construction-side shortcuts: they
filter the full candidate space through the definitional checks, so the
fast enumerators can be compared against them.
"""

import itertools

from regulus.tilting import is_branch_module
from regulus.tubes import Segment, TubeConfig, sort_segments


def brute_force_branch_families(config: TubeConfig, tube_id: str):
    """All multiplicity-free segment sets (lengths < rank) in one tube that
    pass the definitional branch-module check, sorted."""
    rank = config.rank_of(tube_id)
    candidates = [
        Segment(tube_id, socle, length, rank)
        for socle in range(1, rank + 1)
        for length in range(1, rank)
    ]
    found = []
    for count in range(len(candidates) + 1):
        for subset in itertools.combinations(candidates, count):
            if is_branch_module(subset):
                found.append(sort_segments(subset))
    return sorted(found)
