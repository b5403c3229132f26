import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from caryb.groups import builtin, cyclic
from caryb.hopf import (
    check_antipode_twist,
    check_hopf,
    check_hopf_axioms,
    function_algebra,
    group_algebra,
    is_cocommutative,
    is_involutory,
)
from caryb.linalg import LinMap, SpaceMismatch, apply, compose, identity
from caryb.scalars import GF

GROUPS = ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "D4"]


def image(f, label):
    j = f.source.index(*label.split("⊗")) if "⊗" in label else f.source.index(label)
    return {f.target.label(i): c for i, c in apply(f, {j: 1}).items()}


def test_trivial_group_is_the_field():
    H = group_algebra(builtin("Z1"))
    assert H.dim == 1
    for f in (H.mu, H.eta, H.delta, H.epsilon, H.antipode):
        assert f.to_dense() == [[1]]


def test_z2_structure():
    H = group_algebra(cyclic(2))
    assert image(H.mu, "a⊗a") == {"e": 1}
    assert image(H.antipode, "a") == {"a": 1}
    assert image(H.delta, "a") == {"a⊗a": 1}
    assert image(H.epsilon, "a") == {"1": 1}


def test_s3_antipode_is_inversion():
    G = builtin("S3")
    H = group_algebra(G)
    assert H.dim == 6
    for g in range(6):
        assert apply(H.antipode, {g: 1}) == {G.inv(g): 1}
    assert image(H.antipode, "(123)") == {"(132)": 1}


@pytest.mark.parametrize("name", GROUPS)
def test_group_algebra_grouplike(name):
    G = builtin(name)
    H = group_algebra(G)
    n = G.order
    for b in range(n):
        assert apply(H.delta, {b: 1}) == {b * n + b: 1}
        assert apply(H.epsilon, {b: 1}) == {0: 1}


def test_function_algebra_coproduct():
    H = function_algebra(cyclic(2))
    assert image(H.delta, "δ_e") == {"δ_e⊗δ_e": 1, "δ_a⊗δ_a": 1}
    assert image(H.delta, "δ_a") == {"δ_e⊗δ_a": 1, "δ_a⊗δ_e": 1}
    assert function_algebra(builtin("Z1")).delta.to_dense() == [[1]]


@pytest.mark.parametrize("name", GROUPS)
def test_axioms_pass(name):
    for H in (group_algebra(builtin(name)), function_algebra(builtin(name))):
        rep = check_hopf(H)
        assert rep.passed, str(rep)
        assert len(rep.checks) == 14


def test_axioms_over_gf():
    for p in (2, 3, 5):
        assert check_hopf(group_algebra(builtin("S3"), GF(p))).passed
        assert check_hopf(function_algebra(builtin("S3"), GF(p))).passed


def test_corrupted_antipode_witness():
    H = group_algebra(cyclic(2))
    bad = H.replace(antipode=LinMap(H.space, H.space, [(0, 0, 1), (0, 1, 1), (1, 1, 1)]))
    rep = check_hopf_axioms(bad)
    c = rep["antipode.left"]
    assert not c.passed
    assert c.witness["basis"] == "a"
    assert c.witness["lhs"] == {"e": "1", "a": "1"}
    assert c.witness["rhs"] == {"e": "1"}
    assert not rep["antipode.right"].passed
    assert rep["associativity"].passed


def _mutations(H):
    for name in ("mu", "eta", "delta", "epsilon", "antipode"):
        f = getattr(H, name)
        current = {(i, j): v for i, j, v in f.entries()}
        for i in range(f.target.dim):
            for j in range(f.source.dim):
                for bump in (1, -1, 2):
                    d = dict(current)
                    d[(i, j)] = d.get((i, j), 0) + bump
                    entries = [(r, c, v) for (r, c), v in d.items() if v]
                    yield name, (i, j, bump), LinMap(f.source, f.target, entries, f.field)


def test_every_single_entry_mutation_detected():
    H = group_algebra(cyclic(2))
    seen = 0
    for name, where, g in _mutations(H):
        rep = check_hopf_axioms(H.replace(**{name: g}))
        assert not rep.passed, (name, where)
        assert rep.first_failure().id
        seen += 1
    assert seen == 3 * (4 * 2 + 2 * 1 + 2 * 4 + 1 * 2 + 2 * 2)


@pytest.mark.parametrize("name", ["Z2", "S3", "D4"])
def test_antipode_twist(name):
    assert check_antipode_twist(group_algebra(builtin(name))).passed
    assert check_antipode_twist(function_algebra(builtin(name))).passed


@pytest.mark.parametrize("name", GROUPS)
def test_cocommutativity_tracks_abelian(name):
    G = builtin(name)
    assert is_cocommutative(group_algebra(G))
    assert is_cocommutative(function_algebra(G)) == G.is_abelian()


def test_function_s3_not_cocommutative():
    assert not is_cocommutative(function_algebra(builtin("S3")))
    assert is_cocommutative(function_algebra(cyclic(2)))


@pytest.mark.parametrize("name", GROUPS)
def test_involutory(name):
    assert is_involutory(group_algebra(builtin(name)))
    assert is_involutory(function_algebra(builtin(name)))


def _twisted_antipode(n, k):
    """``k[Z_n]`` with ``S`` replaced by ``S o phi`` for ``phi(a) = a^k``."""
    H = group_algebra(cyclic(n))
    phi = LinMap.from_basis_function(H.space, H.space, lambda i: (i * k) % n)
    return H.replace(antipode=compose(H.antipode, phi))


def test_twisted_antipode_z3_is_still_involutory():
    # on Z_3, inversion and squaring coincide, so S o phi is the identity
    H = _twisted_antipode(3, 2)
    assert H.antipode == identity(H.space)
    assert is_involutory(H)


def test_twisted_antipode_z7_not_involutory():
    assert not is_involutory(_twisted_antipode(7, 2))


def test_space_validation():
    H = group_algebra(cyclic(2))
    with pytest.raises(SpaceMismatch):
        H.replace(mu=H.delta)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 7))
def test_cyclic_hopf_property(n):
    H = group_algebra(cyclic(n))
    assert check_hopf(H).passed
    assert check_hopf(function_algebra(cyclic(n))).passed
