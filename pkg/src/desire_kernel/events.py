"""Events over the coherent SDTs of a universe, and their bounded lattice.

An event is a set of coherent SDTs, stored as a bitmask over the
canonical enumeration of C (all coherent SDTs in increasing thing-mask
order).  Joins are bitwise or, meets bitwise and, so the lattice of
events is distributive by construction.
"""

from __future__ import annotations

from .core import CapacityError, Universe

__all__ = [
    "coherent_sdts",
    "event_members",
    "basic_event",
    "event_of",
    "production_event",
    "upset_in_C",
    "EventLattice",
    "build_event_lattice",
    "format_event",
]

DEFAULT_C_LIMIT = 12


def coherent_sdts(u: Universe) -> tuple[int, ...]:
    """The canonical enumeration of C, cached on the universe."""
    cached = getattr(u, "_coherent_sdts", None)
    if cached is None:
        cached = u._coherent_sdts = tuple(u.enumerate_coherent_sdts())
    return cached


def event_members(u: Universe, event: int) -> tuple[int, ...]:
    """The coherent SDTs (as thing masks) belonging to an event mask."""
    C = coherent_sdts(u)
    return tuple(C[i] for i in range(len(C)) if event >> i & 1)


def basic_event(u: Universe, s: int) -> int:
    """A_s: the coherent SDTs compatible with 's holds a desirable thing'."""
    u.check_mask(s)
    event = 0
    for i, D in enumerate(coherent_sdts(u)):
        if s & D:
            event |= 1 << i
    return event


def event_of(u: Universe, W) -> int:
    """E_W: the coherent SDTs compatible with every statement in W."""
    C = coherent_sdts(u)
    event = (1 << len(C)) - 1
    for s in W:
        event &= basic_event(u, s)
    return event


def upset_in_C(u: Universe, event: int) -> int:
    """All coherent SDTs extending some member of the event."""
    C = coherent_sdts(u)
    out = 0
    for i, D in enumerate(C):
        if event >> i & 1:
            for j, E in enumerate(C):
                if D & ~E == 0:
                    out |= 1 << j
    return out


def production_event(u: Universe, W) -> int:
    """The coherent SDTs of the form cl(sigma(W)) for a selection map sigma.

    Its upset in C equals event_of(u, W): what can be produced from W
    pins down exactly which coherent SDTs remain compatible with it.
    """
    from .sds import _production_constraints  # deferred: sds imports this module

    family = tuple(sorted(set(W)))
    C = coherent_sdts(u)
    index = {D: i for i, D in enumerate(C)}
    event = 0
    if 0 in family:
        return 0
    for closed in _production_constraints(u, family):
        i = index.get(closed)
        if i is not None:
            event |= 1 << i
    return event


class EventLattice:
    """All events of the form E_W, closed under union and intersection."""

    def __init__(self, u: Universe, elements: frozenset[int]):
        self.universe = u
        self.elements = elements
        self.top = (1 << len(coherent_sdts(u))) - 1
        self.bottom = 0

    def __contains__(self, event: int) -> bool:
        return event in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def upset(self, event: int) -> frozenset[int]:
        """Lattice elements above the given one (its principal filter)."""
        return frozenset(e for e in self.elements if event & ~e == 0)


def build_event_lattice(u: Universe, limit: int = DEFAULT_C_LIMIT) -> EventLattice:
    """Close the basic events under pairwise union and intersection.

    Every A_s is a union of single-thing events A_{t} for t in s, so the
    generators are those, plus the empty event for A_0.  The scan stays
    feasible only for small C, hence the limit.
    """
    C = coherent_sdts(u)
    if len(C) > limit:
        raise CapacityError(f"lattice construction limited to {limit} coherent SDTs, got {len(C)}")
    top = (1 << len(C)) - 1
    elements = {0, top}
    for t in range(u.size):
        elements.add(basic_event(u, 1 << t))
    while True:
        new = set()
        for a in elements:
            for b in elements:
                if a < b:
                    if a | b not in elements:
                        new.add(a | b)
                    if a & b not in elements:
                        new.add(a & b)
        if not new:
            break
        elements |= new
    return EventLattice(u, frozenset(elements))


def format_event(u: Universe, event: int) -> str:
    """Bracketed list of the member SDTs in canonical order."""
    return "[%s]" % " ".join(u.format_set(D) for D in event_members(u, event))
