"""Desirable gambles over a finite outcome space, credal sets, E-admissibility.

All arithmetic is exact rational (fractions.Fraction); every verdict is
backed by a feasibility certificate or its impossibility, never by a
floating-point tolerance.  Gambles are tuples of Fractions; the strict
ordering is pointwise (`h > g` everywhere), so the non-positive cone is
the strictly negative gambles together with zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .core import InputError

__all__ = [
    "Gamble",
    "gamble",
    "parse_rational",
    "solve_lp",
    "GambleStatementSet",
    "natural_extension_contains",
    "is_consistent_gambles",
    "GambleVerdict",
    "check_gamble_sdfs",
    "CredalSet",
    "credal_sdfs",
    "rejects",
    "e_admissible",
    "dominates",
    "enumerate_vertices",
    "parse_gamble_file",
    "parse_credal_file",
    "parse_option_sets",
]

Gamble = tuple  # tuple of Fractions, one per outcome


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational literal {text!r}") from None


def gamble(*values) -> Gamble:
    return tuple(Fraction(v) for v in values)


def _check_dim(dim: int, g: Gamble):
    if len(g) != dim:
        raise InputError(f"gamble has {len(g)} coordinates, expected {dim}")


# -- exact linear programming -----------------------------------------

def _pivot(rows, r, c):
    piv = rows[r][c]
    rows[r] = [v / piv for v in rows[r]]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            coef = row[c]
            rows[i] = [v - coef * p for v, p in zip(row, rows[r])]


def _run_simplex(rows, basis, cols):
    """Maximize with Bland's rule; objective is the last row, rhs last column.

    Returns "optimal" or "unbounded"; rows/basis are updated in place.
    """
    while True:
        obj = rows[-1]
        enter = next((j for j in range(cols) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(len(rows) - 1):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        r = best[1]
        _pivot(rows, r, enter)
        basis[r] = enter


def solve_lp(c, A_eq=(), b_eq=(), A_ub=(), b_ub=()):
    """Maximize c.x subject to A_eq x = b_eq, A_ub x <= b_ub, x >= 0.

    Two-phase simplex over exact rationals.  Returns (status, value, x)
    with status in {"optimal", "infeasible", "unbounded"}.
    """
    n = len(c)
    rows = []
    rhs = []
    for a, b in zip(A_eq, b_eq):
        rows.append([Fraction(v) for v in a] + [Fraction(0)] * len(A_ub))
        rhs.append(Fraction(b))
    for k, (a, b) in enumerate(zip(A_ub, b_ub)):
        slack = [Fraction(0)] * len(A_ub)
        slack[k] = Fraction(1)
        rows.append([Fraction(v) for v in a] + slack)
        rhs.append(Fraction(b))
    m = len(rows)
    total = n + len(A_ub)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    # Phase 1: artificial variable per row, minimize their sum.
    tab = []
    for i in range(m):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append(rows[i] + art + [rhs[i]])
    phase1_obj = [Fraction(0)] * total + [Fraction(1)] * m + [Fraction(0)]
    tab.append(phase1_obj)
    basis = [total + i for i in range(m)]
    for i in range(m):
        tab[-1] = [v - w for v, w in zip(tab[-1], tab[i])]
    _run_simplex(tab, basis, total + m)
    if -tab[-1][-1] != 0:  # leftover artificial infeasibility
        return "infeasible", None, None
    # Drive remaining artificials out of the basis.
    for i in range(m):
        if basis[i] >= total:
            col = next((j for j in range(total) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, i, col)
                basis[i] = col
    keep = [i for i in range(m) if basis[i] < total]
    # Phase 2: real objective over the surviving rows.
    rows2 = [tab[i][:total] + [tab[i][-1]] for i in keep]
    basis2 = [basis[i] for i in keep]
    obj = [-Fraction(v) for v in c] + [Fraction(0)] * len(A_ub) + [Fraction(0)]
    rows2.append(obj)
    for i, bvar in enumerate(basis2):
        coef = rows2[-1][bvar]
        if coef:
            rows2[-1] = [v - coef * w for v, w in zip(rows2[-1], rows2[i])]
    status = _run_simplex(rows2, basis2, total)
    if status == "unbounded":
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i, bvar in enumerate(basis2):
        if bvar < n:
            x[bvar] = rows2[i][-1]
    return "optimal", rows2[-1][-1], tuple(x)


# -- sets of desirable gambles ----------------------------------------

@dataclass(frozen=True)
class GambleStatementSet:
    """Generators of a set of desirable gambles; the strictly positive
    cone is always implicitly included."""

    dim: int
    desirable: tuple[Gamble, ...]

    def __post_init__(self):
        for g in self.desirable:
            _check_dim(self.dim, g)


def natural_extension_contains(D: GambleStatementSet, g: Gamble) -> bool:
    """g lies in the positive-combination cone of D and the strictly
    positive gambles.

    Either g = lambda.D with lambda >= 0 not all zero, or g - lambda.D
    is strictly positive; the strict part is decided by maximizing a
    slack epsilon with exact rationals.
    """
    _check_dim(D.dim, g)
    gens = D.desirable
    k = len(gens)
    # Combination using a strictly positive part: maximize eps subject
    # to sum_i lambda_i d_i(x) + eps <= g(x).
    A_ub = []
    b_ub = []
    for x in range(D.dim):
        A_ub.append([gen[x] for gen in gens] + [Fraction(1)])
        b_ub.append(g[x])
    c = [Fraction(0)] * k + [Fraction(1)]
    status, value, _x = solve_lp(c, A_ub=A_ub, b_ub=b_ub)
    if status == "unbounded" or (status == "optimal" and value > 0):
        return True
    # Pure combination of generators: lambda.D = g with sum lambda = 1
    # after rescaling (g = 0 needs the normalization; g != 0 gets it free).
    if k:
        A_eq = [[gen[x] for gen in gens] for x in range(D.dim)]
        b_eq = list(g)
        if not any(g):
            A_eq.append([Fraction(1)] * k)
            b_eq.append(Fraction(1))
        status, _v, _x = solve_lp([Fraction(0)] * k, A_eq=A_eq, b_eq=b_eq)
        if status == "optimal":
            return True
    return False


def is_consistent_gambles(D: GambleStatementSet) -> bool:
    """No positive combination with the strictly positive cone hits zero."""
    return not natural_extension_contains(D, tuple([Fraction(0)] * D.dim))


@dataclass(frozen=True)
class GambleVerdict:
    ok: bool  # ok=True means only `no-violation-found`, never a proof
    label: str
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def check_gamble_sdfs(dim: int, F) -> GambleVerdict:
    """Search for finite-coherence violations in a family of gamble sets.

    Membership of produced sets ranges over an infinite family, so only
    the finitely many queried combinations are examined: a reported
    violation is real, while the positive outcome is merely
    `no-violation-found`.
    """
    members = [tuple(m) for m in F]
    for m in members:
        for g in m:
            _check_dim(dim, g)
    for m in members:
        if not m:
            return GambleVerdict(False, "violated-OF1", (m,))
    n = len(members)
    for bits in range(1, 1 << n):
        family = [members[i] for i in range(n) if bits >> i & 1]
        # If every selection from the subfamily is jointly inconsistent,
        # production reaches a set of forbidden gambles and strips to
        # the empty set.
        if all(
            not is_consistent_gambles(GambleStatementSet(dim, tuple(sigma)))
            for sigma in product(*family)
        ):
            return GambleVerdict(False, "violated-production", (tuple(family),))
    return GambleVerdict(True, "no-violation-found")


# -- credal sets and choice -------------------------------------------

@dataclass(frozen=True)
class CredalSet:
    """Rational linear constraints on mass functions, inside the simplex.

    Each constraint is (coefficients, relation, rhs) with relation one
    of "<=", ">=", "="; p >= 0 and sum(p) = 1 are implicit.
    """

    dim: int
    constraints: tuple[tuple[Gamble, str, Fraction], ...] = ()

    def __post_init__(self):
        for coeffs, rel, _rhs in self.constraints:
            _check_dim(self.dim, coeffs)
            if rel not in ("<=", ">=", "="):
                raise InputError(f"unknown relation {rel!r}")
        if self.feasible_point() is None:
            raise InputError("empty credal set")

    def _system(self, extra_ub=()):
        A_eq = [[Fraction(1)] * self.dim]
        b_eq = [Fraction(1)]
        A_ub = []
        b_ub = []
        for coeffs, rel, rhs in self.constraints:
            if rel == "=":
                A_eq.append(list(coeffs))
                b_eq.append(rhs)
            elif rel == "<=":
                A_ub.append(list(coeffs))
                b_ub.append(rhs)
            else:
                A_ub.append([-v for v in coeffs])
                b_ub.append(-rhs)
        for g in extra_ub:  # E_p(g) <= 0
            A_ub.append(list(g))
            b_ub.append(Fraction(0))
        return A_eq, b_eq, A_ub, b_ub

    def feasible_point(self, extra_ub=()):
        """A mass function satisfying all constraints plus E_p(g) <= 0
        for each extra gamble, or None."""
        A_eq, b_eq, A_ub, b_ub = self._system(extra_ub)
        status, _v, x = solve_lp([Fraction(0)] * self.dim, A_eq, b_eq, A_ub, b_ub)
        return x if status == "optimal" else None


def expectation(p, g) -> Fraction:
    return sum(pi * gi for pi, gi in zip(p, g))


def credal_sdfs(M: CredalSet, hs) -> bool:
    """Every mass function in M gives some member positive expectation.

    Decided by its negation: a witness p with all expectations <= 0.
    """
    hs = tuple(hs)
    for g in hs:
        _check_dim(M.dim, g)
    if not hs:
        return False
    return M.feasible_point(extra_ub=hs) is None


def dominates(h: Gamble, u: Gamble) -> bool:
    """Strictly larger in every coordinate."""
    return all(a > b for a, b in zip(h, u))


def rejects(model, H, u: Gamble) -> bool:
    """u is rejected from H when H with u removed, shifted by -u, is a
    desirable gamble set under the model.

    The model is a CredalSet or a GambleStatementSet; for the latter,
    desirability of a gamble set means some member falls in the natural
    extension of the statements.
    """
    H = tuple(H)
    if u not in H:
        raise InputError("u must be one of the options in H")
    shifted = tuple(
        tuple(a - b for a, b in zip(h, u)) for h in H if h != u
    )
    if not shifted:
        return False
    if isinstance(model, CredalSet):
        return credal_sdfs(model, shifted)
    if isinstance(model, GambleStatementSet):
        return any(natural_extension_contains(model, g) for g in shifted)
    raise InputError(f"unsupported model {model!r}")


def e_admissible(M: CredalSet, H) -> tuple[Gamble, ...]:
    """Options maximizing expectation under at least one member of M."""
    H = tuple(H)
    out = []
    for u in H:
        _check_dim(M.dim, u)
        shifted = tuple(
            tuple(a - b for a, b in zip(h, u)) for h in H if h != u
        )
        if M.feasible_point(extra_ub=shifted) is not None:
            out.append(u)
    return tuple(out)


# -- brute-force oracle ------------------------------------------------

def _solve_square(rows, rhs):
    """Gaussian elimination over Fractions; None if singular."""
    n = len(rows)
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        M[col] = [v / M[col][col] for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [v - f * w for v, w in zip(M[r], M[col])]
    return tuple(M[r][-1] for r in range(n))


def enumerate_vertices(M: CredalSet, extra_ub=()) -> list[tuple]:
    """All vertices of M intersected with {p : E_p(g) <= 0} constraints.

    Brute force over active-constraint subsets; only intended as a test
    oracle for tiny outcome spaces.
    """
    dim = M.dim
    A_eq, b_eq, A_ub, b_ub = M._system(extra_ub)
    for i in range(dim):  # p(x) >= 0 as -p(x) <= 0
        row = [Fraction(0)] * dim
        row[i] = Fraction(-1)
        A_ub.append(row)
        b_ub.append(Fraction(0))
    need = dim - len(A_eq)
    vertices = set()
    for active in combinations(range(len(A_ub)), need) if need >= 0 else ():
        rows = A_eq + [A_ub[i] for i in active]
        rhs = b_eq + [b_ub[i] for i in active]
        point = _solve_square(rows, rhs)
        if point is None:
            continue
        if all(
            expectation(point, a) <= b for a, b in zip(A_ub, b_ub)
        ) and all(
            expectation(point, a) == b for a, b in zip(A_eq, b_eq)
        ):
            vertices.add(point)
    return sorted(vertices)


# -- file formats ------------------------------------------------------

def parse_gamble_file(text: str) -> dict[str, Gamble]:
    """`gamble name: 1 -1` lines; rational literals allowed."""
    out: dict[str, Gamble] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        parts = key.split()
        if not sep or len(parts) != 2 or parts[0] != "gamble":
            raise InputError(f"line {lineno}: expected 'gamble <name>: <values>'")
        name = parts[1]
        if name in out:
            raise InputError(f"line {lineno}: duplicate gamble {name!r}")
        try:
            out[name] = tuple(parse_rational(v) for v in value.split())
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    return out


def parse_credal_file(text: str, dim: int) -> CredalSet:
    """`constraint: c0 c1 ... >= r` lines over mass-function coordinates."""
    constraints = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep or key.strip() != "constraint":
            raise InputError(f"line {lineno}: expected 'constraint: ...'")
        tokens = value.split()
        rel = next((t for t in tokens if t in ("<=", ">=", "=")), None)
        if rel is None:
            raise InputError(f"line {lineno}: constraint needs one of <=, >=, =")
        at = tokens.index(rel)
        coeffs = tokens[:at]
        rest = tokens[at + 1:]
        if len(coeffs) != dim or len(rest) != 1:
            raise InputError(f"line {lineno}: expected {dim} coefficients, relation, rhs")
        try:
            constraints.append((
                tuple(parse_rational(v) for v in coeffs),
                rel,
                parse_rational(rest[0]),
            ))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    return CredalSet(dim, tuple(constraints))


def parse_option_sets(text: str, gambles_by_name: dict[str, Gamble]) -> list[tuple[Gamble, ...]]:
    """`set: name1 name2` lines referring to named gambles."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep or key.strip() != "set":
            raise InputError(f"line {lineno}: expected 'set: <names>'")
        names = value.split()
        try:
            out.append(tuple(gambles_by_name[n] for n in names))
        except KeyError as exc:
            raise InputError(f"line {lineno}: unknown gamble {exc.args[0]!r}") from None
    return out
