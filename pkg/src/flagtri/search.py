"""Randomised blow-up / contract-down search for small flag triangulations.

Each round starts from the seed complex, subdivides random edges until a
target vertex count is reached, then contracts random admissible edges until
none remain.  The endpoint is a local minimum of the move system; distinct
minima are archived by canonical digest together with a move trace that
replays the round bit for bit.

Rounds are independent: round i draws its randomness from a sub-seed that is
a pure function of (master seed, i), so results do not depend on how many
worker processes execute them.  Set the FLAGTRI_WORKERS environment variable
or pass ``workers`` to spread rounds over processes.
"""

from __future__ import annotations

import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .complexes import FlagComplex, as_flag, labeled_digest
from .errors import InvalidInput, RoundAborted
from .iso import canonical_form
from .moves import (CONTRACT, SUBDIVIDE, Move, MoveTrace, contract_edge,
                    is_admissible, subdivide_edge)

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(x: int) -> int:
    x = (x + _GAMMA) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def round_seed(master_seed: int, round_index: int) -> int:
    """Sub-seed for one round; depends only on the master seed and index."""
    return _mix64((master_seed + round_index * _GAMMA) & _MASK64)


class Objective(Enum):
    """Quantity minimised by the search (archive tiers group by its value)."""

    VERTICES = "f0"
    EDGES = "f1"

    def value_of(self, c: FlagComplex) -> int:
        if self is Objective.VERTICES:
            return c.vertex_count
        return c.edge_count()


@dataclass(frozen=True)
class SearchConfig:
    """Tunables for :func:`run_search`.

    ``target_f0`` is the vertex count the blow-up phase aims for (default:
    four above the seed); ``max_moves_per_round`` is a safety cap that turns
    a runaway round into a recorded abort instead of a hang.
    """

    target_f0: int | None = None
    objective: Objective = Objective.VERTICES
    max_moves_per_round: int = 10_000
    archive_cap: int = 100


@dataclass(frozen=True)
class LocalMinimumCertificate:
    """Proof that no admissible edge exists.

    Truthy iff the complex is a local minimum; then ``witnesses`` pairs every
    edge with an induced 4-cycle through it.  Otherwise ``admissible_edge``
    names a contractible edge.
    """

    ok: bool
    admissible_edge: tuple | None
    witnesses: tuple

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Minimum:
    """One archived local minimum."""

    complex: FlagComplex
    digest: str  # canonical, so equal means isomorphic
    value: int
    trace: MoveTrace
    round_index: int


@dataclass
class SearchResult:
    archive: "MinimaArchive"
    rounds: int
    aborted: tuple  # (round_index, moves) pairs
    seed_digest: str
    config: SearchConfig


def blow_up(c: FlagComplex, rng: random.Random, target_f0: int,
            max_moves: int = 10_000):
    """Subdivide uniformly random edges until the vertex count reaches
    ``target_f0``.  Returns the new complex and the moves made."""
    moves = []
    while c.vertex_count < target_f0:
        if len(moves) >= max_moves:
            raise RoundAborted(0, len(moves))
        edge = rng.choice(c.edges())
        moves.append(Move(SUBDIVIDE, edge))
        c = subdivide_edge(c, edge)
    return c, moves


def contract_to_minimum(c: FlagComplex, rng: random.Random,
                        max_moves: int = 10_000):
    """Contract uniformly random admissible edges until none remain."""
    moves = []
    while True:
        admissible = [e for e in c.edges() if is_admissible(c, e)]
        if not admissible:
            return c, moves
        if len(moves) >= max_moves:
            raise RoundAborted(0, len(moves))
        edge = rng.choice(admissible)
        moves.append(Move(CONTRACT, edge))
        c = contract_edge(c, edge)


def local_minimum_certificate(c) -> LocalMinimumCertificate:
    """Check every edge and certify that none is admissible."""
    fc = as_flag(c)
    witnesses = []
    for e in fc.edges():
        res = is_admissible(fc, e)
        if res:
            return LocalMinimumCertificate(False, e, ())
        witnesses.append((e, res.cycle))
    return LocalMinimumCertificate(True, None, tuple(witnesses))


class MinimaArchive:
    """Local minima keyed by canonical digest.

    ``add`` deduplicates isomorphic finds (the earliest round wins);
    ``finalize`` applies a per-tier cap with a deterministic order, so the
    archive contents do not depend on timing.
    """

    def __init__(self, objective: Objective = Objective.VERTICES,
                 cap: int = 100):
        self.objective = objective
        self.cap = cap
        self._by_digest = {}

    def add(self, m: Minimum) -> bool:
        if m.digest in self._by_digest:
            return False
        self._by_digest[m.digest] = m
        return True

    def finalize(self) -> None:
        tiers = {}
        for m in self._by_digest.values():
            tiers.setdefault(m.value, []).append(m)
        kept = {}
        for value in sorted(tiers):
            tier = sorted(tiers[value], key=lambda m: (m.round_index, m.digest))
            for m in tier[:self.cap]:
                kept[m.digest] = m
        self._by_digest = kept

    def minima(self) -> list:
        return sorted(self._by_digest.values(),
                      key=lambda m: (m.value, m.round_index, m.digest))

    def best(self) -> Minimum | None:
        ms = self.minima()
        return ms[0] if ms else None

    def tiers(self) -> dict:
        out = {}
        for m in self.minima():
            out.setdefault(m.value, []).append(m)
        return out

    def __len__(self) -> int:
        return len(self._by_digest)

    def __contains__(self, digest: str) -> bool:
        return digest in self._by_digest


def _run_round(args):
    rows, index, sub_seed, target_f0, max_moves = args
    c = FlagComplex(rows)
    rng = random.Random(sub_seed)
    moves = []
    try:
        c, made = blow_up(c, rng, target_f0, max_moves)
        moves.extend(made)
        c, made = contract_to_minimum(c, rng, max_moves - len(moves))
        moves.extend(made)
    except RoundAborted as exc:
        return index, None, None, exc.moves
    return index, c.rows, [m.as_json_obj() for m in moves], None


def default_workers() -> int:
    try:
        w = int(os.environ.get("FLAGTRI_WORKERS", "1"))
    except ValueError:
        return 1
    return max(1, w)


def run_search(seed_complex, rounds: int, master_seed: int,
               config: SearchConfig | None = None, workers: int | None = None,
               progress: bool = False) -> SearchResult:
    """Run independent blow-up / contract-down rounds and archive the minima.

    Identical inputs give an identical archive regardless of ``workers``.
    """
    if rounds < 0:
        raise InvalidInput("rounds must be non-negative")
    fc = as_flag(seed_complex)
    config = config or SearchConfig()
    target = config.target_f0
    if target is None:
        target = fc.vertex_count + 4
    if target < fc.vertex_count:
        raise InvalidInput(
            f"target_f0 {target} below the seed's vertex count")
    if workers is None:
        workers = default_workers()
    seed_digest = labeled_digest(fc)
    archive = MinimaArchive(config.objective, config.archive_cap)
    aborted = []
    jobs = [(fc.rows, i, round_seed(master_seed, i), target,
             config.max_moves_per_round) for i in range(rounds)]
    if workers > 1 and rounds > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_run_round, jobs, chunksize=max(1, rounds // (8 * workers)))
            outcomes = list(results)
    else:
        outcomes = map(_run_round, jobs)

    every = max(1, rounds // 10)
    for index, rows, move_objs, aborted_moves in outcomes:
        if rows is None:
            aborted.append((index, aborted_moves))
        else:
            c = FlagComplex(rows)
            trace = MoveTrace(seed_digest,
                              tuple(Move.from_json_obj(o) for o in move_objs))
            m = Minimum(c, canonical_form(c).digest,
                        config.objective.value_of(c), trace, index)
            archive.add(m)
        if progress and (index + 1) % every == 0:
            best = archive.best()
            print(f"round {index + 1}/{rounds}: archive size {len(archive)}"
                  + (f", best {config.objective.value} = {best.value}"
                     if best else ""),
                  file=sys.stderr)
    archive.finalize()
    return SearchResult(archive, rounds, tuple(aborted), seed_digest, config)
