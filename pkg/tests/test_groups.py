import json

import pytest

from caryb.groups import GroupTable, GroupTableError, builtin, cyclic, dihedral, symmetric


def test_builtin_orders():
    assert [builtin(n).order for n in ("Z1", "Z4", "C5", "S3", "D4", "S4")] == [1, 4, 5, 6, 8, 24]


def test_symmetric_composition_order():
    S3 = symmetric(3)
    s, r = S3.index("(12)"), S3.index("(123)")
    # apply (123) first, then (12): 1->2->1, 2->3->3, 3->1->2
    assert S3.elements[S3.mul(s, r)] == "(23)"
    assert not S3.is_abelian()


def test_dihedral_relation():
    D4 = dihedral(4)
    r, s = D4.index("r"), D4.index("s")
    assert D4.mul(s, r) == D4.mul(D4.inv(r), s)
    assert D4.order == 8


def test_cyclic_inverses():
    Z5 = cyclic(5)
    assert [Z5.elements[Z5.inv(i)] for i in range(5)] == ["e", "a^4", "a^3", "a^2", "a"]


def test_json_roundtrip():
    G = builtin("S3")
    H = GroupTable.from_json(json.dumps(G.to_json()))
    assert H == G


def test_json_by_name_or_index():
    a = GroupTable.from_json({"elements": ["e", "a"], "mult": [[0, 1], [1, 0]]})
    b = GroupTable.from_json({"elements": ["e", "a"], "mult": [["e", "a"], ["a", "e"]]})
    assert a.mult == b.mult and a.identity == 0 and a.inverse == (0, 1)


def test_non_associative_witness():
    # a latin square with identity 0 that is not associative
    mult = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupTableError) as exc:
        GroupTable.from_table("01234", mult)
    assert exc.value.witness is not None and len(exc.value.witness) == 3


def test_missing_inverse():
    with pytest.raises(GroupTableError) as exc:
        GroupTable.from_table(["e", "a"], [[0, 1], [1, 1]])
    assert exc.value.witness == ("a",)


def test_bad_shapes():
    with pytest.raises(GroupTableError):
        GroupTable.from_table(["e", "a"], [[0, 1]])
    with pytest.raises(GroupTableError):
        GroupTable.from_table(["e", "a"], [[0, 1], [1, 2]])
    with pytest.raises(GroupTableError):
        GroupTable.from_json('{"elements": []}')
    with pytest.raises(GroupTableError):
        builtin("Q8")
