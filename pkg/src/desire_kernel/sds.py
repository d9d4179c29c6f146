"""Sets of desirable (finite) sets of things.

An SDS is represented as a frozenset of thing masks.  On a finite
universe every set of things is finite, so SDS and SDFS coincide
structurally; the separate entry points keep the two calling
conventions apart.

Inconsistency is a value: the closure operators return the full power
set (the top of the closed-SDS lattice) instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import CapacityError, InconsistencyError, InputError, Universe
from . import events

__all__ = [
    "Verdict",
    "selection_maps",
    "production_step",
    "production_step_raw",
    "check_sds_coherent",
    "check_sdfs_coherent",
    "sds_closure",
    "sdfs_closure",
    "conjunctive_closure",
    "power_set",
    "is_top",
    "sdtify",
    "sdsify",
    "sdfsify",
    "is_conjunctive",
    "conjunctive_part",
    "is_complete",
    "finite_part",
    "finitary_part",
    "up_close",
    "is_finitary",
    "bottom_sds",
    "enumerate_complete_coherent_extensions",
    "parse_sds",
    "format_sds",
]

AXIOM_NAMES = ("1", "2", "3", "4", "5")

# Enumerating selection maps over a family W costs prod(|s| for s in W);
# refuse beyond this many maps.
MAX_SELECTIONS = 1 << 16


@dataclass(frozen=True)
class Verdict:
    """Outcome of a coherence check: ok, or the first violated axiom with witness."""

    ok: bool
    axiom: str | None = None
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def selection_maps(family: tuple[int, ...]):
    """All ways of picking one thing (as a singleton mask) from each member."""
    choices = [tuple(_bits(member)) for member in family]
    count = 1
    for c in choices:
        count *= len(c)
        if count > MAX_SELECTIONS:
            raise CapacityError(f"selection space exceeds {MAX_SELECTIONS} maps")
    return product(*choices)


def _production_constraints(u: Universe, family: tuple[int, ...]) -> frozenset[int]:
    """Deduplicated closures cl(sigma(W)) over all selection maps sigma."""
    masks = set()
    for sigma in selection_maps(family):
        picked = 0
        for bit in sigma:
            picked |= bit
        masks.add(u.closure(picked))
    return frozenset(masks)


def production_step(u: Universe, W) -> frozenset[int]:
    """Sets derivable from the family W by production, in hitting-set form.

    Returns every s that meets cl(sigma(W)) for each selection map sigma;
    this is exactly the upward closure of the sets of per-selection picks.
    The empty family is allowed and yields the sets meeting cl({}).
    """
    family = tuple(sorted(set(W)))
    if 0 in family:
        raise InputError("the empty set admits no selection map")
    constraints = _production_constraints(u, family)
    return frozenset(
        s for s in u.subsets() if all(s & m for m in constraints)
    )


def production_step_raw(u: Universe, W) -> frozenset[int]:
    """Raw production: one set of per-selection picks per choice function.

    Every produced set has one element t in cl(sigma(W)) for each
    selection map sigma.  Upward closure of this family recovers
    production_step; the hitting-set form is only equivalent in the
    presence of the superset axiom.
    """
    family = tuple(sorted(set(W)))
    if 0 in family:
        raise InputError("the empty set admits no selection map")
    # One pick per selection map; accumulate the partial unions instead
    # of expanding the full choice product (there are only 2^|T| results).
    out = {0}
    for sigma in selection_maps(family):
        picked = 0
        for bit in sigma:
            picked |= bit
        choices = tuple(_bits(u.closure(picked)))
        out = {s | bit for s in out for bit in choices}
    return frozenset(out)


def _coherence_violation(u, K, finite_mode, axiom_prefix, skip):
    """Shared K/F axiom scan; returns a Verdict.

    `skip` names axiom numbers ("1".."5") to bypass; it exists so the
    self-test harness can verify that each axiom is load-bearing.
    """
    members = frozenset(K)
    for s in members:
        u.check_mask(s)
    p = axiom_prefix
    if "1" not in skip and 0 in members:
        return Verdict(False, p + "1", (0,), "the empty set is a member")
    if "2" not in skip:
        for s in members:
            rest = u.full_mask & ~s
            sub = rest
            while True:
                bigger = s | sub
                if bigger not in members:
                    return Verdict(
                        False, p + "2", (s, bigger),
                        f"{u.format_set(s)} is a member but superset {u.format_set(bigger)} is not",
                    )
                if sub == 0:
                    break
                sub = (sub - 1) & rest
    if "3" not in skip:
        for s in members:
            stripped = s & ~u.forbidden_mask
            if stripped not in members:
                return Verdict(
                    False, p + "3", (s, stripped),
                    f"member {u.format_set(s)} stripped of forbidden things is missing",
                )
    if "4" not in skip:
        for bit in _bits(u.always_desirable_mask):
            if bit not in members:
                return Verdict(
                    False, p + "4", (bit,),
                    f"singleton {u.format_set(bit)} of an always-desirable thing is missing",
                )
    if "5" not in skip:
        ordered = sorted(members)
        n = len(ordered)
        if n > 16:
            raise CapacityError(f"production scan over 2^{n} subfamilies refused")
        # Subfamilies in order of increasing size, for small witnesses.
        subsets = sorted(range(1, 1 << n), key=lambda b: (b.bit_count(), b))
        for bits in subsets:
            family = tuple(ordered[i] for i in range(n) if bits >> i & 1)
            if 0 in family:
                continue  # covered by axiom 1
            if "2" in skip:
                # Without the superset axiom the hitting-set shortcut is
                # unjustified; fall back to the raw per-choice products.
                produced = production_step_raw(u, family)
            else:
                produced = production_step(u, family)
            per_sigma = tuple(sorted(_production_constraints(u, family)))
            for s in sorted(produced):
                if s not in members:
                    return Verdict(
                        False, p + "5", (family, s, per_sigma),
                        f"family {[u.format_set(f) for f in family]} produces "
                        f"{u.format_set(s)}, which is missing",
                    )
        _ = finite_mode  # identical to the unrestricted mode on a finite universe
    return Verdict(True)


def check_sds_coherent(u: Universe, K, mode: str = "finite", *, skip_axioms=frozenset()) -> Verdict:
    """Check axioms K1-K5; `mode` is "finite" or "full" (identical here)."""
    if mode not in ("finite", "full"):
        raise InputError(f"unknown mode {mode!r}")
    return _coherence_violation(u, K, mode == "finite", "K", frozenset(skip_axioms))


def check_sdfs_coherent(u: Universe, F, *, skip_axioms=frozenset()) -> Verdict:
    """Check axioms F1-F5 (finite coherence for families of finite sets)."""
    return _coherence_violation(u, F, True, "F", frozenset(skip_axioms))


def power_set(u: Universe) -> frozenset[int]:
    """The top sentinel: every subset of things."""
    return frozenset(u.subsets())


def is_top(u: Universe, K) -> bool:
    return len(K) == u.full_mask + 1


def sds_closure(u: Universe, W, *, skip_axioms=frozenset()) -> frozenset[int]:
    """Least fixpoint of the coherence axioms over W; top if inconsistent.

    Brute force: iterates superset closure, forbidden stripping,
    always-desirable singletons, and production over every subfamily of
    the current set, until stable.  Only viable on very small universes;
    `conjunctive_closure` is the scalable route and must agree.
    """
    skip = frozenset(skip_axioms)
    K = set(W)
    for s in K:
        u.check_mask(s)
    if "4" not in skip:
        K.update(_bits(u.always_desirable_mask))
    while True:
        added = set()
        if "3" not in skip:
            for s in K:
                stripped = s & ~u.forbidden_mask
                if stripped not in K:
                    added.add(stripped)
        if "2" not in skip:
            for s in K:
                rest = u.full_mask & ~s
                sub = rest
                while True:
                    bigger = s | sub
                    if bigger not in K:
                        added.add(bigger)
                    if sub == 0:
                        break
                    sub = (sub - 1) & rest
        if not added and "5" not in skip:
            ordered = sorted(K)
            n = len(ordered)
            if n > 16:
                raise CapacityError(f"closure fixpoint over 2^{n} subfamilies refused")
            step = production_step_raw if "2" in skip else production_step
            for bits in range(1, 1 << n):
                family = tuple(ordered[i] for i in range(n) if bits >> i & 1)
                if 0 in family:
                    continue
                produced = step(u, family) - K
                if produced:
                    added |= produced
                    break
        if not added:
            break
        K |= added
    if 0 in K and "1" not in skip:
        return power_set(u)
    return frozenset(K)


def sdfs_closure(u: Universe, W, *, skip_axioms=frozenset()) -> frozenset[int]:
    """Finite-sets variant; coincides with sds_closure on a finite universe."""
    return sds_closure(u, W, skip_axioms=skip_axioms)


def conjunctive_closure(u: Universe, W) -> frozenset[int]:
    """Closure of W via its compatible coherent SDTs; top if none remain.

    Every consistent W closes to the intersection of the conjunctive
    models of the coherent SDTs compatible with it.  (In general the
    closure is the union of these intersections over the finite
    subfamilies of W; here W itself is finite and its own term absorbs
    the rest.)
    """
    compatible = events.event_members(u, events.event_of(u, W))
    if not compatible:
        return power_set(u)
    return frozenset(
        s for s in u.subsets() if all(s & d for d in compatible)
    )


def sdtify(K) -> int:
    """Things whose singletons are members: the conjunctive content of K."""
    mask = 0
    for s in K:
        if s and s & (s - 1) == 0:
            mask |= s
    return mask


def sdsify(u: Universe, D: int) -> frozenset[int]:
    """All sets of things meeting D: the conjunctive model of the SDT D."""
    u.check_mask(D)
    return frozenset(s for s in u.subsets() if s & D)


def sdfsify(u: Universe, D: int) -> frozenset[int]:
    """Finite-sets variant of sdsify; identical on a finite universe."""
    return sdsify(u, D)


def is_conjunctive(u: Universe, K) -> bool:
    """Every member contains a thing whose singleton is also a member."""
    return frozenset(K) == sdsify(u, sdtify(K)) if K else True


def conjunctive_part(u: Universe, K) -> frozenset[int]:
    """Members witnessed by a desirable singleton; a conservative approximation."""
    D = sdtify(K)
    return frozenset(s for s in K if s & D)


def is_complete(K) -> bool:
    """No member splits: if a union is desirable, one of the parts is."""
    members = frozenset(K)
    for s in members:
        # Check every 2-partition s = s1 | s2 (overlaps reduce to these).
        sub = s
        while True:
            s1 = sub
            s2 = s & ~sub
            if s1 not in members and s2 not in members:
                return False
            if sub == 0:
                break
            sub = (sub - 1) & s
    return True


def finite_part(K) -> frozenset[int]:
    """Members that are finite sets; everything, on a finite universe."""
    return frozenset(K)


def up_close(u: Universe, F) -> frozenset[int]:
    """All supersets of members of F."""
    out = set()
    for s in F:
        u.check_mask(s)
        rest = u.full_mask & ~s
        sub = rest
        while True:
            out.add(s | sub)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return frozenset(out)


def finitary_part(u: Universe, K) -> frozenset[int]:
    """Supersets of finite members; equals K itself for coherent K here."""
    return up_close(u, finite_part(K))


def is_finitary(u: Universe, K) -> bool:
    """Every member has a finite member as subset; trivially true here."""
    return frozenset(K) <= finitary_part(u, K)


def bottom_sds(u: Universe) -> frozenset[int]:
    """The smallest coherent SDS: sets meeting the always-desirable things."""
    return sdsify(u, u.always_desirable_mask)


def enumerate_complete_coherent_extensions(u: Universe, K) -> list[frozenset[int]]:
    """All complete, finitely coherent supersets of K.

    Conjunctive models of coherent SDTs are always complete and cover
    every case here (the closure operator is finitary); when the power
    set of things is tiny we additionally scan all SDSes outright so
    that nothing is silently assumed.
    """
    members = frozenset(K)
    if not events.event_of(u, members):
        raise InconsistencyError("no coherent SDT is compatible with K", 0)
    found = set()
    for D in u.enumerate_coherent_sdts():
        model = sdsify(u, D)
        if members <= model:
            found.add(model)
    if u.full_mask + 1 <= 8:
        all_subsets = sorted(u.subsets())
        n = len(all_subsets)
        for bits in range(1 << n):
            cand = frozenset(all_subsets[i] for i in range(n) if bits >> i & 1)
            if members <= cand and is_complete(cand) and check_sds_coherent(u, cand).ok:
                found.add(cand)
    return sorted(found, key=lambda f: sorted(f))


def parse_sds(u: Universe, text: str) -> frozenset[int]:
    """Parse `assert-set: a b` statement lines into an SDS."""
    members = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep or key.strip() != "assert-set":
            raise InputError(f"line {lineno}: expected 'assert-set: <things>'")
        try:
            members.add(u.mask_of(value.split()))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    return frozenset(members)


def format_sds(u: Universe, K) -> str:
    """One set per line in canonical mask order; `INCONSISTENT` for the top."""
    if is_top(u, K):
        return "INCONSISTENT"
    return "\n".join(" ".join(u.names_of(s)) for s in sorted(K))
