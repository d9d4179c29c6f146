"""Exact-rational gambles: cones, credal sets, choice functions."""

from fractions import Fraction

import pytest

from desire_kernel import gambles
from desire_kernel.core import InputError
from desire_kernel.gambles import (
    CredalSet,
    GambleStatementSet,
    credal_sdfs,
    dominates,
    e_admissible,
    enumerate_vertices,
    gamble,
    is_consistent_gambles,
    natural_extension_contains,
    rejects,
    solve_lp,
)

F = Fraction


# -- the LP core --------------------------------------------------------

def test_lp_optimum():
    # max x + y st x + 2y <= 4, x <= 2, x,y >= 0
    status, value, x = solve_lp(
        [F(1), F(1)], A_ub=[[F(1), F(2)], [F(1), F(0)]], b_ub=[F(4), F(2)]
    )
    assert status == "optimal"
    assert value == F(3)
    assert x == (F(2), F(1))


def test_lp_infeasible_and_unbounded():
    status, _, _ = solve_lp([F(0)], A_eq=[[F(1)]], b_eq=[F(-1)])  # x = -1, x >= 0
    assert status == "infeasible"
    status, _, _ = solve_lp([F(1)])  # max x, no constraints
    assert status == "unbounded"


def test_lp_equalities():
    status, value, x = solve_lp(
        [F(0), F(1)], A_eq=[[F(1), F(1)]], b_eq=[F(1)]
    )
    assert status == "optimal" and value == F(1) and x == (F(0), F(1))


# -- natural extension --------------------------------------------------

def test_extension_contains_positive_multiples_plus_slack():
    D = GambleStatementSet(2, (gamble(1, -1),))
    assert natural_extension_contains(D, gamble(2, -1))  # 3/2 copies + (1/2,1/2)


def test_extension_contains_every_strictly_positive_gamble():
    for D in (GambleStatementSet(2, ()), GambleStatementSet(2, (gamble(-3, -3),))):
        assert natural_extension_contains(D, gamble("1/7", 2))


def test_extension_rejects_unreachable_gambles():
    D = GambleStatementSet(2, (gamble(1, -1),))
    assert not natural_extension_contains(D, gamble(-1, 0))
    assert not natural_extension_contains(D, gamble(0, 0))


def test_extension_contains_the_generators_themselves():
    D = GambleStatementSet(2, (gamble(1, -1),))
    assert natural_extension_contains(D, gamble(1, -1))


def test_extension_checks_dimensions():
    with pytest.raises(InputError):
        natural_extension_contains(GambleStatementSet(2, ()), gamble(1, 2, 3))
    with pytest.raises(InputError):
        GambleStatementSet(2, (gamble(1,),))


def test_consistency():
    assert is_consistent_gambles(GambleStatementSet(2, (gamble(1, -1),)))
    assert not is_consistent_gambles(
        GambleStatementSet(2, (gamble(1, -1), gamble(-1, 1)))
    )
    assert is_consistent_gambles(GambleStatementSet(2, ()))


def test_gamble_sdfs_checks():
    ok = gambles.check_gamble_sdfs(2, [(gamble(1, -1),), (gamble(2, 0),)])
    assert ok.ok and ok.label == "no-violation-found"
    empty = gambles.check_gamble_sdfs(2, [(gamble(1, -1),), ()])
    assert not empty.ok and empty.label == "violated-OF1"
    clash = gambles.check_gamble_sdfs(2, [(gamble(1, -1),), (gamble(-1, 1),)])
    assert not clash.ok and clash.label == "violated-production"


# -- credal sets --------------------------------------------------------

def test_credal_set_must_be_nonempty():
    with pytest.raises(InputError):
        CredalSet(2, (((F(1), F(0)), ">=", F(2)),))  # p(x) >= 2 on a simplex
    with pytest.raises(InputError):
        CredalSet(2, (((F(1), F(0)), "<", F(1)),))  # unknown relation


def test_credal_sdfs_on_the_full_simplex():
    M = CredalSet(2)
    # p = (1/2, 1/2) zeroes both expectations, so the pair does not cover M
    assert not credal_sdfs(M, [gamble(1, -1), gamble(-1, 1)])
    point = M.feasible_point(extra_ub=[gamble(1, -1), gamble(-1, 1)])
    assert point == (F(1, 2), F(1, 2))
    assert credal_sdfs(M, [gamble(1, 2)])  # strictly positive member
    assert not credal_sdfs(M, [])


def test_credal_sdfs_via_vertices():
    M = CredalSet(2, (((F(1), F(0)), ">=", F(3, 5)),))
    h = gamble(1, -1)  # E_p(h) = 2p(x) - 1 > 0 on all of M
    assert all(gambles.expectation(v, h) > 0 for v in enumerate_vertices(M))
    assert credal_sdfs(M, [h])


def test_e_admissibility_interval_example():
    M = CredalSet(2, (
        ((F(1), F(0)), ">=", F(3, 10)),
        ((F(1), F(0)), "<=", F(7, 10)),
    ))
    H = (gamble(1, 0), gamble(0, 1), gamble("3/5", "3/5"))
    assert e_admissible(M, H) == H  # witnesses p(x) = 7/10, 3/10, 1/2


def test_e_admissibility_bayes_for_a_singleton():
    M = CredalSet(2, (((F(1), F(0)), "=", F(1, 4)),))
    H = (gamble(1, 0), gamble(0, 1), gamble(2, 0))
    admissible = e_admissible(M, H)
    best = max(gambles.expectation((F(1, 4), F(3, 4)), h) for h in H)
    assert set(admissible) == {
        h for h in H if gambles.expectation((F(1, 4), F(3, 4)), h) == best
    }


def test_dominated_options_are_never_admissible():
    M = CredalSet(2)
    H = (gamble(1, 1), gamble(0, 0), gamble(2, 2))
    assert dominates(gamble(2, 2), gamble(1, 1))
    admissible = e_admissible(M, H)
    assert gamble(0, 0) not in admissible and gamble(1, 1) not in admissible


def test_rejection_translates_to_admissibility():
    M = CredalSet(2, (((F(1), F(0)), ">=", F(3, 10)),))
    H = (gamble(1, 0), gamble(0, 1), gamble(-1, -1))
    admissible = e_admissible(M, H)
    for u in H:
        assert rejects(M, H, u) == (u not in admissible)


def test_rejection_by_dominance_under_a_statement_model():
    D = GambleStatementSet(2, ())
    h, g = gamble(2, 2), gamble(1, 1)
    assert rejects(D, (h, g), g)  # h - g is strictly positive
    assert not rejects(D, (h,), h)  # nothing left to beat it
    vac = (gamble(1, 0), gamble(0, 1))
    assert not rejects(D, vac, vac[0])  # neither direction dominates
    with pytest.raises(InputError):
        rejects(D, (h,), g)


def test_vertex_enumeration_of_a_credal_interval():
    M = CredalSet(2, (
        ((F(1), F(0)), ">=", F(3, 10)),
        ((F(1), F(0)), "<=", F(7, 10)),
    ))
    assert enumerate_vertices(M) == [
        (F(3, 10), F(7, 10)),
        (F(7, 10), F(3, 10)),
    ]


# -- file formats -------------------------------------------------------

def test_parse_gamble_file():
    table = gambles.parse_gamble_file("gamble h: 1 -1\ngamble g: 1/2 0\n")
    assert table == {"h": gamble(1, -1), "g": gamble("1/2", 0)}
    with pytest.raises(InputError):
        gambles.parse_gamble_file("gamble h: 1\ngamble h: 2\n")
    with pytest.raises(InputError):
        gambles.parse_gamble_file("h: 1 2\n")
    with pytest.raises(InputError):
        gambles.parse_gamble_file("gamble h: one\n")


def test_parse_credal_file():
    M = gambles.parse_credal_file("constraint: 1 0 >= 3/10\n", 2)
    assert M.constraints == (((F(1), F(0)), ">=", F(3, 10)),)
    with pytest.raises(InputError):
        gambles.parse_credal_file("constraint: 1 0 3/10\n", 2)
    with pytest.raises(InputError):
        gambles.parse_credal_file("constraint: 1 >= 3/10\n", 2)


def test_parse_option_sets():
    table = {"h": gamble(1, 0), "g": gamble(0, 1)}
    sets = gambles.parse_option_sets("set: h g\nset: h\n", table)
    assert sets == [(gamble(1, 0), gamble(0, 1)), (gamble(1, 0),)]
    with pytest.raises(InputError):
        gambles.parse_option_sets("set: z\n", table)
