import warnings

import pytest

from caryb.constructions import (
    CapExceeded,
    ConstructionDescriptor,
    adjoint_map,
    adjoint_rack,
    double_rack,
    heap_rack,
    power_rack,
    power_structure,
    trivial_rack,
)
from caryb.groups import builtin
from caryb.hopf import function_algebra, group_algebra
from caryb.linalg import Swap, apply, chain, identity, local, materialize
from caryb.ybe import sd_map

from conftest import doubled, hopf, rack


def img(f, *labels):
    j = f.source.index(*labels)
    return {f.target.label(i): c for i, c in apply(f, {j: 1}).items()}


def test_heap_over_field():
    R = rack("heap", "Z1")
    assert R.dim == 1
    assert R.nu.to_dense() == [[1]]
    assert R.certified


def test_heap_z2_values():
    R = rack("heap", "Z2")
    assert img(R.nu, "(a⊗e)") == {"a": 1}
    assert img(R.X.action, "(e⊗a)", "a") == {"(a⊗e)": 1}
    assert img(R.X.delta, "(e⊗a)") == {"(e⊗a)⊗(e⊗a)": 1}


def test_heap_s3():
    R = rack("heap", "S3")
    assert R.dim == 36 and R.certified and R.cocommutative_certified


@pytest.mark.parametrize("name", ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "D4"])
def test_heap_and_adjoint_certified(name):
    H = hopf(name)
    for build in (heap_rack, adjoint_rack):
        R = build(H)
        assert R.certified and R.cocommutative_certified, R.certification


def test_adjoint_map_on_grouplikes():
    G = builtin("S3")
    ad = adjoint_map(group_algebra(G))
    n = G.order
    for x in range(n):
        assert apply(ad, {x * n + G.identity: 1}) == {x: 1}
        for g in range(n):
            assert apply(ad, {x * n + g: 1}) == {G.mul(G.mul(G.inv(g), x), g): 1}
    # ad_r(s) = r^-1 s r
    assert img(ad, "(12)", "(123)") == {"(13)": 1}


def test_adjoint_z2_trivial_action():
    R = rack("adjoint", "Z2")
    d = R.hopf.dim
    for j in range(R.dim):
        for g in range(d):
            assert apply(R.X.action, {j * d + g: 1}) == {j: 1}
    assert img(R.nu, "(a⊗a)") == {"e": 1}
    q = sd_map(R).map
    for x in R.space.labels:
        for y in R.space.labels:
            assert img(q, x, y) == {x: 1}


def test_adjoint_s3_q():
    q = sd_map(rack("adjoint", "S3")).map
    assert img(q, "((12)⊗e)", "((123)⊗e)") == {"((13)⊗e)": 1}


def test_double_of_trivial():
    T = trivial_rack(hopf("Z1"), ["p"])
    D = double_rack(T)
    assert D.dim == 1 and D.certified
    assert D.nu.to_dense() == [[1]]
    assert D.X.action.to_dense() == [[1]]


def test_double_heap_z2():
    D = doubled("Z2", 1)
    assert D.dim == 16 and D.certified and D.cocommutative_certified
    assert img(D.nu, "(e⊗a)", "(e⊗a)") == {"e": 1}
    assert img(D.nu, "(e⊗a)", "(a⊗a)") == {"a": 1}


def test_double_double_heap_z2():
    D = doubled("Z2", 2)
    assert D.dim == 256 and D.certified
    assert D.descriptor.kind == "double" and D.descriptor.parent.kind == "double"


def test_power_one_is_identity_construction():
    R = rack("heap", "S3")
    P = power_rack(R, 1)
    for a in ("delta", "epsilon", "action"):
        assert getattr(P.X, a) == getattr(R.X, a)
    assert P.nu == R.nu and P.space == R.space


@pytest.mark.parametrize("fam,group", [("heap", "Z2"), ("adjoint", "Z3"), ("heap", "S3")])
def test_power_two_equals_double(fam, group):
    R = rack(fam, group)
    P, D = power_rack(R, 2), double_rack(R)
    for a in ("delta", "epsilon", "action"):
        assert getattr(P.X, a) == getattr(D.X, a)
    assert P.nu == D.nu


@pytest.mark.parametrize("fam,group", [("heap", "Z2"), ("heap", "Z3"), ("adjoint", "Z3")])
def test_power_three_nu_left_to_right(fam, group):
    R = rack(fam, group)
    G = R.hopf.group
    P = power_rack(R, 3)
    assert P.certified
    D = R.dim
    nu1 = [next(iter(apply(R.nu, {x: 1}))) for x in range(D)]
    for j in range(P.dim):
        a, rest = divmod(j, D * D)
        b, c = divmod(rest, D)
        expect = G.mul(G.mul(nu1[a], nu1[b]), nu1[c])
        assert apply(P.nu, {j: 1}) == {expect: 1}


def test_m_bracketings_agree():
    H = hopf("S3")
    V, mu = H.space, H.mu
    left3 = materialize(chain(mu, local(mu, right=V)))
    right3 = materialize(chain(mu, local(mu, left=V)))
    assert left3 == right3
    left4 = materialize(chain(mu, local(mu, right=V), local(mu, right=V * V)))
    mixed4 = materialize(chain(mu, local(mu, right=V), local(mu, left=V * V)))
    right4 = materialize(chain(mu, local(mu, left=V), local(mu, left=V * V)))
    assert left4 == mixed4 == right4


def test_power_nu_against_composition():
    # nu_3 from the combinatorial build equals mu(1 x mu)(nu x nu x nu)
    R = rack("adjoint", "Z3")
    X, V, mu = R.space, R.hopf.space, R.hopf.mu
    composed = materialize(
        chain(mu, local(mu, left=V), local(R.nu, left=V * V), local(R.nu, left=V, right=X), local(R.nu, right=X * X))
    )
    assert power_structure(R, 3)[3] == composed


def test_power_rejects_zero():
    with pytest.raises(ValueError):
        power_rack(rack("heap", "Z2"), 0)


def test_cap():
    R = rack("heap", "S3")
    with pytest.raises(CapExceeded) as exc:
        power_rack(R, 3)
    assert exc.value.dim == 36 ** 3 and exc.value.cap == 4096
    with pytest.raises(CapExceeded):
        double_rack(doubled("Z2", 2))
    with pytest.raises(CapExceeded):
        heap_rack(hopf("S3"), cap=35)
    assert power_rack(R, 2, cap=None).dim == 1296


def test_descriptor_roundtrip():
    d = doubled("Z2", 2).descriptor
    assert ConstructionDescriptor.from_dict(d.to_dict()) == d
    assert d.to_dict()["parent"]["parent"] == {"kind": "heap", "base": "k[Z2]"}


def test_coalgebra_is_cocommutative_tensor_square():
    R = rack("heap", "S3")
    assert materialize(chain(Swap(R.space, R.space), R.X.delta)) == R.X.delta
    counit = materialize(chain(local(R.X.epsilon, left=R.space), R.X.delta))
    assert counit.to_dense() == identity(R.space).to_dense()


# -- non-cocommutative bases -------------------------------------------------------


def test_noncocommutative_warns():
    with pytest.warns(UserWarning, match="non-cocommutative"):
        adjoint_rack(function_algebra(builtin("S3")))


def test_heap_over_function_s3_fails_compatibility():
    H = function_algebra(builtin("S3"))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        R = heap_rack(H, strict=False)
    assert not R.certified
    rep = R.certification
    failed = [c.id for c in rep.checks if not c.passed]
    assert failed == ["action-compatibility", "coalgebra-morphism.comult"]
    assert rep["augmentation"].passed


def test_adjoint_over_function_s3_certifies():
    R = rack("adjoint", "S3", "function")
    assert R.certified and not R.cocommutative_certified
    assert R.certification.info == {"cocommutative_X": False, "cocommutative_H": False}


def test_over_function_z2():
    for fam in ("heap", "adjoint"):
        R = rack(fam, "Z2", "function")
        assert R.certified and R.cocommutative_certified
