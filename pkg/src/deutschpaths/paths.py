"""Lattice paths with unit up-steps and down-steps of arbitrary size.

A Deutsch path moves by (1, +1) or by (1, -j) for any integer j >= 1.  A
validated path starts at level 0, never dips below 0, and ends back at
level 0.  A valley is a lattice point reached by a down-step and left by
an up-step.  The paths whose valley levels never decrease from left to
right are the main subject of this package: they split uniquely into
bundles of mountains hung on a rising staircase, finished by one final
descent (the home run), and that split is what :func:`decompose` and
:func:`compose` convert between.

Enumeration is streaming and deterministic.  The canonical order is
lexicographic on token sequences with U before D1 before D2 and so on,
so the all-up prefix comes first.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from itertools import pairwise
from typing import Iterator

__all__ = [
    "PathTokenError",
    "NegativeExcursionError",
    "NonzeroEndError",
    "NotNonDecreasingError",
    "Up",
    "Down",
    "UP",
    "Step",
    "DeutschPath",
    "Mountain",
    "Decomposition",
    "PathStats",
    "StatsSummary",
    "parse_path",
    "render_path",
    "path_to_json",
    "path_from_json",
    "validate",
    "heights",
    "valley_levels",
    "is_nondecreasing",
    "as_mountain",
    "enumerate_deutsch",
    "enumerate_nondecreasing_filter",
    "enumerate_nondecreasing_direct",
    "iter_decompositions",
    "decompose",
    "compose",
    "path_stats",
    "statistics",
]


class PathTokenError(ValueError):
    """Raised for a step token that is neither "U" nor "D<k>" with k >= 1."""


class NegativeExcursionError(ValueError):
    """Raised when a path dips below ground level."""

    def __init__(self, position: int, height: int):
        super().__init__(f"path reaches level {height} after step {position}")
        self.position = position
        self.height = height


class NonzeroEndError(ValueError):
    """Raised when a path does not return to ground level."""

    def __init__(self, final_height: int):
        super().__init__(f"path ends at level {final_height}, expected 0")
        self.final_height = final_height


class NotNonDecreasingError(ValueError):
    """Raised when valley levels decrease somewhere along a path."""


@dataclass(frozen=True, slots=True)
class Up:
    """Unit rise."""


@dataclass(frozen=True, slots=True)
class Down:
    """Fall of ``size`` levels in a single step."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"down-step size must be >= 1, got {self.size}")


Step = Up | Down

UP = Up()

_DOWN_CACHE: dict[int, Down] = {}


def _down(size: int) -> Down:
    step = _DOWN_CACHE.get(size)
    if step is None:
        step = _DOWN_CACHE[size] = Down(size)
    return step


def _rise(step: Step) -> int:
    return 1 if isinstance(step, Up) else -step.size


def _token(step: Step) -> str:
    return "U" if isinstance(step, Up) else f"D{step.size}"


def _step_key(step: Step) -> tuple[int, int]:
    # canonical token order: U < D1 < D2 < ...
    return (0, 0) if isinstance(step, Up) else (1, step.size)


@dataclass(frozen=True, slots=True)
class DeutschPath:
    """Immutable step sequence, not necessarily validated."""

    steps: tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        """Key realising the canonical lexicographic order."""
        return tuple(_step_key(s) for s in self.steps)


_DOWN_TOKEN = re.compile(r"D([1-9][0-9]*)\Z")


def _parse_token(token: str) -> Step:
    if token == "U":
        return UP
    match = _DOWN_TOKEN.fullmatch(token)
    if match is None:
        raise PathTokenError(f"bad step token {token!r}")
    return _down(int(match.group(1)))


def parse_path(text: str) -> DeutschPath:
    """Parse whitespace separated step tokens into a path.

    Each token is "U" or "D<k>" with k a positive decimal integer
    carrying no leading zeros, so "D0", "D01" and "d1" are all
    rejected.  The empty string parses to the empty path.  No ground
    rule is checked here; use :func:`validate` for that.

    >>> parse_path("U D1 U U D2").steps[1]
    Down(size=1)
    """
    return DeutschPath(tuple(_parse_token(t) for t in text.split()))


def render_path(path: DeutschPath) -> str:
    """Render a path as single-space separated tokens."""
    return " ".join(_token(s) for s in path.steps)


def path_to_json(path: DeutschPath) -> str:
    """Serialise a path as ``{"steps": ["U", "D1", ...]}``."""
    record = {"steps": [_token(s) for s in path.steps]}
    return json.dumps(record, separators=(",", ":"))


def path_from_json(text: str) -> DeutschPath:
    """Inverse of :func:`path_to_json`; rejects malformed records."""
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PathTokenError(f"bad path record: {exc}") from None
    if not isinstance(record, dict) or set(record) != {"steps"}:
        raise PathTokenError('path record must be an object with a "steps" key')
    tokens = record["steps"]
    if not isinstance(tokens, list) or not all(isinstance(t, str) for t in tokens):
        raise PathTokenError('"steps" must be a list of token strings')
    return DeutschPath(tuple(_parse_token(t) for t in tokens))


def validate(path: DeutschPath) -> DeutschPath:
    """Check the ground rules and return the path unchanged.

    Raises :class:`NegativeExcursionError` at the first step (1-based)
    that drops below level 0 and :class:`NonzeroEndError` when the walk
    ends off the ground.  The empty path is valid.
    """
    height = 0
    for position, step in enumerate(path.steps, start=1):
        height += _rise(step)
        if height < 0:
            raise NegativeExcursionError(position, height)
    if height != 0:
        raise NonzeroEndError(height)
    return path


def heights(path: DeutschPath) -> tuple[int, ...]:
    """Level after each step; no validation is performed."""
    out = []
    height = 0
    for step in path.steps:
        height += _rise(step)
        out.append(height)
    return tuple(out)


def valley_levels(path: DeutschPath) -> tuple[int, ...]:
    """Levels of the valleys of a validated path, left to right.

    A valley is an interior lattice point entered by a down-step and
    left by an up-step.  Endpoints never count.
    """
    validate(path)
    steps = path.steps
    levels = []
    height = 0
    for i, step in enumerate(steps):
        height += _rise(step)
        if i + 1 < len(steps) and isinstance(step, Down) and isinstance(steps[i + 1], Up):
            levels.append(height)
    return tuple(levels)


def is_nondecreasing(path: DeutschPath) -> bool:
    """True when the valley levels weakly increase left to right."""
    levels = valley_levels(path)
    return all(a <= b for a, b in pairwise(levels))


@dataclass(frozen=True, slots=True)
class Mountain:
    """A rise of ``ups`` unit steps followed only by down-steps.

    The descent is a composition of ``ups``, so a mountain returns to
    its base level and stays strictly above it in between.  Its length
    is ``ups + len(descent)``.
    """

    ups: int
    descent: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.ups < 1:
            raise ValueError("a mountain must rise at least one level")
        if not self.descent or any(d < 1 for d in self.descent):
            raise ValueError("descent parts must be positive integers")
        if sum(self.descent) != self.ups:
            raise ValueError("descent must sum to the rise")

    @property
    def length(self) -> int:
        return self.ups + len(self.descent)


def as_mountain(path: DeutschPath) -> Mountain | None:
    """Return the mountain a validated path traces, or None.

    A path is a mountain when it consists of one up-run followed by one
    down-run and nothing else.  The empty path is not a mountain.
    """
    validate(path)
    steps = path.steps
    ups = 0
    while ups < len(steps) and isinstance(steps[ups], Up):
        ups += 1
    rest = steps[ups:]
    if ups == 0 or not rest or any(isinstance(s, Up) for s in rest):
        return None
    return Mountain(ups, tuple(s.size for s in rest))


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Canonical split of a path whose valley levels never decrease.

    ``bundles[i]`` lists the mountains based at level ``i`` in walking
    order, one entry per level 0 .. height-1.  After the mountains at
    level ``i`` the path climbs one backbone up-step, and after the last
    backbone step it takes the home run, a final descent recorded as a
    composition of ``height``.  Height 0 encodes the empty path.
    """

    height: int
    bundles: tuple[tuple[Mountain, ...], ...]
    homerun: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.height < 0:
            raise ValueError("height must be >= 0")
        if len(self.bundles) != self.height:
            raise ValueError("need exactly one bundle per level below the height")
        if self.height == 0:
            if self.homerun:
                raise ValueError("the empty decomposition has no home run")
        elif not self.homerun or any(d < 1 for d in self.homerun) or sum(self.homerun) != self.height:
            raise ValueError("home run must be a composition of the height")

    @property
    def length(self) -> int:
        mountain_steps = sum(m.length for bundle in self.bundles for m in bundle)
        return mountain_steps + self.height + len(self.homerun)


def decompose(path: DeutschPath) -> Decomposition:
    """Split a validated path with weakly increasing valleys.

    The home run is the final maximal run of down-steps; its total fall
    is the height.  Every other down-run closes a mountain based at the
    valley it lands on, and the up-steps that strictly raise the running
    valley level form the backbone.  Raises
    :class:`NotNonDecreasingError` when the valley levels dip.

    >>> decompose(parse_path("U U D2 U D1")).homerun
    (1,)
    """
    if not is_nondecreasing(path):
        raise NotNonDecreasingError(f"valley levels decrease in {render_path(path)!r}")
    steps = path.steps
    if not steps:
        return Decomposition(0, (), ())
    cut = len(steps)
    while cut > 0 and isinstance(steps[cut - 1], Down):
        cut -= 1
    homerun = tuple(steps[i].size for i in range(cut, len(steps)))
    height = sum(homerun)
    bundles: list[list[Mountain]] = [[] for _ in range(height)]
    level = 0
    i = 0
    while i < cut:
        ups = 0
        while i < cut and isinstance(steps[i], Up):
            ups += 1
            i += 1
        descent = []
        while i < cut and isinstance(steps[i], Down):
            descent.append(steps[i].size)
            i += 1
        if not descent:
            # trailing backbone ups, they end exactly at the height
            assert level + ups == height
            break
        fall = sum(descent)
        base = level + ups - fall
        assert level <= base < height
        bundles[base].append(Mountain(fall, tuple(descent)))
        level = base
    return Decomposition(height, tuple(tuple(b) for b in bundles), homerun)


def compose(dec: Decomposition) -> DeutschPath:
    """Rebuild the path of a decomposition; inverse of :func:`decompose`.

    Walks each level in turn, emitting its mountains and then one
    backbone up-step, and finishes with the home run.
    """
    steps: list[Step] = []
    for bundle in dec.bundles:
        for mountain in bundle:
            steps.extend([UP] * mountain.ups)
            steps.extend(_down(d) for d in mountain.descent)
        steps.append(UP)
    steps.extend(_down(d) for d in dec.homerun)
    return validate(DeutschPath(tuple(steps)))


def _can_finish(height: int, remaining: int) -> bool:
    # a single step cannot start and end on the ground
    if remaining == 0:
        return height == 0
    if remaining == 1:
        return height >= 1
    return True


def enumerate_deutsch(n: int) -> Iterator[DeutschPath]:
    """Yield every validated path of length ``n`` once, in canonical order.

    The stream is lexicographic on tokens with U < D1 < D2 < ..., so it
    opens with the all-up prefix.  Generation is lazy; nothing is
    materialised.
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    prefix: list[Step] = []

    def extend(height: int, remaining: int) -> Iterator[DeutschPath]:
        if remaining == 0:
            yield DeutschPath(tuple(prefix))
            return
        if _can_finish(height + 1, remaining - 1):
            prefix.append(UP)
            yield from extend(height + 1, remaining - 1)
            prefix.pop()
        for size in range(1, height + 1):
            if _can_finish(height - size, remaining - 1):
                prefix.append(_down(size))
                yield from extend(height - size, remaining - 1)
                prefix.pop()

    return extend(0, n) if _can_finish(0, n) else iter(())


def enumerate_nondecreasing_filter(n: int) -> Iterator[DeutschPath]:
    """Brute-force stream: every length-``n`` path that keeps its valleys
    weakly increasing, in canonical order.  Each candidate is validated
    in full, which is what makes this the reference oracle."""
    return (p for p in enumerate_deutsch(n) if is_nondecreasing(p))


def _compositions_exact(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # ordered compositions of total into exactly `parts` positive parts
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions_exact(total - first, parts - 1):
            yield (first,) + rest


def _mountains_of_length(length: int) -> Iterator[Mountain]:
    for ups in range(1, length):
        parts = length - ups
        if parts > ups:
            continue
        for descent in _compositions_exact(ups, parts):
            yield Mountain(ups, descent)


def _bundles_of_total(total: int) -> Iterator[tuple[Mountain, ...]]:
    # ordered mountain sequences with the given total length
    if total == 0:
        yield ()
        return
    for first_len in range(2, total + 1):
        if total - first_len == 1:
            continue
        for mountain in _mountains_of_length(first_len):
            for rest in _bundles_of_total(total - first_len):
                yield (mountain,) + rest


def _bundle_rows(levels: int, budget: int) -> Iterator[tuple[tuple[Mountain, ...], ...]]:
    if levels == 0:
        if budget == 0:
            yield ()
        return
    for spent in range(budget + 1):
        if spent == 1:
            continue
        for bundle in _bundles_of_total(spent):
            for rest in _bundle_rows(levels - 1, budget - spent):
                yield (bundle,) + rest


def iter_decompositions(total_length: int) -> Iterator[Decomposition]:
    """Yield every decomposition whose composed path has the given length.

    The order is deterministic but not the canonical path order; callers
    that need canonical order compose and re-sort, as
    :func:`enumerate_nondecreasing_direct` does.
    """
    if total_length < 0:
        raise ValueError("length must be >= 0")

    def walk() -> Iterator[Decomposition]:
        if total_length == 0:
            yield Decomposition(0, (), ())
            return
        for height in range(1, total_length):
            for parts in range(1, height + 1):
                budget = total_length - height - parts
                if budget < 0:
                    break
                for homerun in _compositions_exact(height, parts):
                    for bundles in _bundle_rows(height, budget):
                        yield Decomposition(height, bundles, homerun)

    return walk()


def enumerate_nondecreasing_direct(n: int) -> Iterator[DeutschPath]:
    """Structural stream of the weakly-increasing-valley paths of length ``n``.

    Builds every path from its decomposition, without filtering, then
    re-sorts into the canonical lexicographic order so the stream can be
    compared step for step with :func:`enumerate_nondecreasing_filter`.
    """
    paths = [compose(d) for d in iter_decompositions(n)]
    paths.sort(key=DeutschPath.sort_key)
    return iter(paths)


@dataclass(frozen=True, slots=True)
class PathStats:
    """Per-path record of the basic statistics."""

    length: int
    up_count: int
    downstep_count: int
    height: int
    valley_levels: tuple[int, ...]


def path_stats(path: DeutschPath) -> PathStats:
    """Statistics of one validated path."""
    levels = valley_levels(path)
    downs = sum(1 for s in path.steps if isinstance(s, Down))
    top = max(heights(path), default=0)
    return PathStats(
        length=len(path.steps),
        up_count=len(path.steps) - downs,
        downstep_count=downs,
        height=top,
        valley_levels=levels,
    )


@dataclass(frozen=True)
class StatsSummary:
    """Aggregate view over all weakly-increasing-valley paths of one length.

    The histograms map a value to how many paths attain it: number of
    down-steps, path height, and number of valleys respectively.
    """

    records: tuple[PathStats, ...]
    downstep_histogram: dict[int, int]
    height_histogram: dict[int, int]
    valley_histogram: dict[int, int]


def statistics(n: int) -> StatsSummary:
    """Collect :class:`PathStats` for every qualifying path of length ``n``."""
    records = tuple(path_stats(p) for p in enumerate_nondecreasing_filter(n))
    return StatsSummary(
        records=records,
        downstep_histogram=dict(Counter(r.downstep_count for r in records)),
        height_histogram=dict(Counter(r.height for r in records)),
        valley_histogram=dict(Counter(len(r.valley_levels) for r in records)),
    )
