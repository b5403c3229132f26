import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from caryb.groups import builtin, cyclic, dihedral
from caryb.settheoretic import (
    FiniteRack,
    SetAugRack,
    adjoint_aug_rack,
    alexander_quandle,
    check_aug_invariants,
    check_rack_axioms,
    check_set_ybe,
    conj_aug_rack,
    conjugation_quandle,
    core_quandle,
    cyclic_rack,
    heap_aug_rack,
    induced_rack,
    linearize,
    oracle_compare,
    set_r,
    trivial_quandle,
)

from conftest import rack

ORACLE_GROUPS = ["Z1", "Z2", "Z3", "S3"]


def test_trivial_quandle():
    rep = check_rack_axioms(trivial_quandle(4))
    assert rep.passed and rep.info["quandle"]


def test_cyclic_rack_not_quandle():
    rep = check_rack_axioms(cyclic_rack(3))
    assert rep.passed and not rep.info["quandle"]
    assert check_rack_axioms(cyclic_rack(1)).info["quandle"]


def test_non_bijective_column():
    R = FiniteRack("bad", ("0", "1", "2"), ((0, 0, 0), (1, 0, 1), (2, 2, 2)))
    rep = check_rack_axioms(R)
    c = rep["rack.bijective"]
    assert not c.passed and c.witness["column"] == "1"
    assert c.witness["collision"] == ["0", "1"]


def test_sd_failure_witness():
    # x * y = 2x + y mod 3 has bijective columns but is not self-distributive
    R = FiniteRack.from_op("affine", range(3), lambda x, y: (2 * x + y) % 3)
    rep = check_rack_axioms(R)
    assert rep["rack.bijective"].passed
    assert not rep["rack.self-distributive"].passed
    assert len(rep["rack.self-distributive"].witness["triple"]) == 3


@pytest.mark.parametrize("G", [builtin("S3"), dihedral(4), cyclic(5), builtin("S4")])
def test_conjugation_quandles(G):
    for k in (1, 2, -1):
        rep = check_rack_axioms(conjugation_quandle(G, k))
        assert rep.passed and rep.info["quandle"]


def test_core_quandle():
    for G in (builtin("S3"), cyclic(5), dihedral(3)):
        rep = check_rack_axioms(core_quandle(G))
        assert rep.passed and rep.info["quandle"]


@pytest.mark.parametrize("p,t", [(5, 2), (5, 3), (7, 3), (3, 2)])
def test_alexander(p, t):
    rep = check_rack_axioms(alexander_quandle(p, t))
    assert rep.passed and rep.info["quandle"]


def test_alexander_needs_unit():
    with pytest.raises(ValueError):
        alexander_quandle(5, 0)


def test_table_shape():
    with pytest.raises(ValueError):
        FiniteRack("bad", ("0", "1"), ((0, 1),))
    with pytest.raises(ValueError):
        FiniteRack("bad", ("0", "1"), ((0, 2), (1, 0)))


def test_conj_aug_rack():
    assert all(v == x for x, row in enumerate(induced_rack(conj_aug_rack(cyclic(2))).op) for v in row)
    G = builtin("S3")
    star = induced_rack(conj_aug_rack(G))
    s, r = G.index("(12)"), G.index("(123)")
    assert G.elements[star(s, r)] == "(13)"
    assert star(s, r) == G.mul(G.mul(G.inv(r), s), r)
    assert check_rack_axioms(induced_rack(conj_aug_rack(dihedral(4)))).passed


def test_heap_aug_rack_examples():
    one = heap_aug_rack(builtin("Z1"))
    assert one.size == 1 and check_aug_invariants(one).passed
    G = cyclic(2)
    R = heap_aug_rack(G)
    ae, ea = R.labels.index("(a⊗e)"), R.labels.index("(e⊗a)")
    assert G.elements[R.nu[ae]] == "a"
    assert R.act[ea][G.index("a")] == ae
    S = heap_aug_rack(builtin("S3"))
    assert S.size == 36
    assert check_rack_axioms(induced_rack(S)).passed


FIXTURES = [f(builtin(g)) for g in ORACLE_GROUPS for f in (heap_aug_rack, adjoint_aug_rack, conj_aug_rack)]
FIXTURES += [conj_aug_rack(dihedral(4))]


@pytest.mark.parametrize("R", FIXTURES, ids=lambda R: R.name)
def test_augmented_invariants_and_induced_rack(R):
    assert check_aug_invariants(R).passed
    assert check_rack_axioms(induced_rack(R)).passed
    assert check_set_ybe(induced_rack(R)).passed


def test_broken_augmentation_detected():
    G = builtin("S3")
    R = heap_aug_rack(G)
    m = G.mult
    bad = SetAugRack("bad", R.labels, G, R.act, tuple(m[x // 6][x % 6] for x in range(36)))
    rep = check_aug_invariants(bad)
    assert rep["action.unit"].passed and rep["action.associativity"].passed
    assert not rep["augmentation"].passed


def test_set_r_table():
    R = trivial_quandle(3)
    assert set_r(R) == tuple(y * 3 + x for x in range(3) for y in range(3))


def test_set_ybe_can_fail():
    R = FiniteRack.from_op("affine", range(3), lambda x, y: (2 * x + y) % 3)
    assert not check_set_ybe(R)["set-ybe"].passed


@given(st.integers(2, 11).filter(lambda p: all(p % d for d in range(2, p))), st.integers(1, 10))
def test_alexander_property(p, t):
    if t % p:
        R = alexander_quandle(p, t)
        assert check_rack_axioms(R).passed
        assert check_set_ybe(R).passed


def test_json_roundtrip():
    R = heap_aug_rack(builtin("S3"))
    assert SetAugRack.from_json(json.loads(json.dumps(R.to_json()))) == R
    Q = core_quandle(builtin("S3"))
    assert FiniteRack.from_json(json.loads(json.dumps(Q.to_json()))) == Q


# -- crossing over -------------------------------------------------------------------


def test_linearize_conj_z2():
    L = linearize(conj_aug_rack(cyclic(2)))
    assert L.certified and L.cocommutative_certified


def test_linearize_one_point():
    L = linearize(heap_aug_rack(builtin("Z1")))
    assert L.certified and L.dim == 1 and L.hopf.dim == 1


def test_linearize_heap_z3_nu_matches():
    cat = rack("heap", "Z3")
    L = linearize(heap_aug_rack(cyclic(3)), carrier=cat.space)
    assert L.nu == cat.nu
    assert L.X.action == cat.X.action


@pytest.mark.parametrize("group", ORACLE_GROUPS)
@pytest.mark.parametrize("family", ["heap", "adjoint"])
def test_oracle_compare(family, group):
    G = builtin(group)
    s = (heap_aug_rack if family == "heap" else adjoint_aug_rack)(G)
    rep = oracle_compare(s, rack(family, group))
    assert rep.passed, str(rep)
    assert [c.id for c in rep.checks] == ["oracle.nu", "oracle.action", "oracle.q", "oracle.r-matrix"]
    assert rep.info["elements"] == G.order ** 2


def test_oracle_detects_family_mismatch():
    G = builtin("S3")
    rep = oracle_compare(heap_aug_rack(G), rack("adjoint", "S3"))
    assert not rep.passed
    assert not rep["oracle.nu"].passed
    assert rep["oracle.nu"].witness is not None


def test_oracle_label_mismatch():
    rep = oracle_compare(heap_aug_rack(cyclic(2)), rack("heap", "Z3"))
    assert not rep.passed and rep.first_failure().id == "oracle.labels"


def test_oracle_is_table_only():
    import caryb.settheoretic as mod

    src = open(mod.__file__, encoding="utf-8").read()
    head = src.split("# -- crossing over")[0]
    assert "caryb.linalg" not in head and "caryb.scalars" not in head
