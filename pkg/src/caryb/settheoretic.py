"""Finite racks and augmented racks as integer tables.

This module is an independent oracle for the linear engine: everything
here is plain index arithmetic on Cayley tables, with no scalars and no
sparse maps. Only ``linearize`` and ``oracle_compare`` cross over to the
categorical side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from caryb.groups import GroupTable
from caryb.report import Check, Report


def _pair_labels(G: GroupTable):
    return ["(%s⊗%s)" % (a, b) for a in G.elements for b in G.elements]


@dataclass(frozen=True)
class FiniteRack:
    """``op[x][y]`` is the index of ``x * y``."""

    name: str
    labels: tuple
    op: tuple

    def __post_init__(self):
        n = len(self.labels)
        if len(self.op) != n or any(len(row) != n for row in self.op):
            raise ValueError("operation table of %s must be %dx%d" % (self.name, n, n))
        if any(not 0 <= v < n for row in self.op for v in row):
            raise ValueError("operation table of %s has entries out of range" % self.name)

    @classmethod
    def from_op(cls, name, labels, fn) -> "FiniteRack":
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        return cls(name, labels, tuple(tuple(fn(x, y) for y in range(n)) for x in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __call__(self, x: int, y: int) -> int:
        return self.op[x][y]

    def is_quandle(self) -> bool:
        return all(self.op[x][x] == x for x in range(self.size))

    def to_json(self) -> dict:
        return {"name": self.name, "labels": list(self.labels), "op": [list(r) for r in self.op]}

    @classmethod
    def from_json(cls, d) -> "FiniteRack":
        return cls(d.get("name", "rack"), tuple(d["labels"]), tuple(tuple(r) for r in d["op"]))


def check_rack_axioms(R: FiniteRack) -> Report:
    """Bijective right translations and right self-distributivity, by enumeration."""
    n, op, lab = R.size, R.op, R.labels
    rep = Report("rack-axioms[%s]" % R.name)

    witness = None
    for y in range(n):
        seen = {}
        for x in range(n):
            z = op[x][y]
            if z in seen:
                witness = {"column": lab[y], "collision": [lab[seen[z]], lab[x]], "value": lab[z]}
                break
            seen[z] = x
        if witness:
            break
    rep.add(Check("rack.bijective", "x -> x*y is a bijection", witness is None, witness, n))

    witness = None
    for x, y, z in itertools.product(range(n), repeat=3):
        a, b = op[op[x][y]][z], op[op[x][z]][op[y][z]]
        if a != b:
            witness = {"triple": [lab[x], lab[y], lab[z]], "lhs": lab[a], "rhs": lab[b]}
            break
    rep.add(Check("rack.self-distributive", "(x*y)*z = (x*z)*(y*z)", witness is None, witness, n ** 3))
    rep.info["quandle"] = R.is_quandle()
    return rep


# -- fixtures ------------------------------------------------------------------


def trivial_quandle(n: int) -> FiniteRack:
    return FiniteRack.from_op("trivial(%d)" % n, range(n), lambda x, y: x)


def cyclic_rack(n: int) -> FiniteRack:
    """``x * y = x + 1`` on ``Z_n``: a rack, and a quandle only for ``n = 1``."""
    return FiniteRack.from_op("cyclic(%d)" % n, range(n), lambda x, y: (x + 1) % n)


def _power_of(G: GroupTable, g: int, k: int) -> int:
    r = G.identity
    if k < 0:
        g, k = G.inverse[g], -k
    for _ in range(k):
        r = G.mult[r][g]
    return r


def conjugation_quandle(G: GroupTable, k: int = 1) -> FiniteRack:
    """``x * y = y^-k x y^k``; ``k = 1`` is ordinary conjugation."""
    m = G.mult

    def op(x, y):
        yk = _power_of(G, y, k)
        return m[m[G.inverse[yk]][x]][yk]

    name = "conj(%s)" % G.name if k == 1 else "conj^%d(%s)" % (k, G.name)
    return FiniteRack.from_op(name, G.elements, op)


def core_quandle(G: GroupTable) -> FiniteRack:
    """``x * y = y x^-1 y``."""
    m = G.mult
    return FiniteRack.from_op("core(%s)" % G.name, G.elements, lambda x, y: m[m[y][G.inverse[x]]][y])


def alexander_quandle(p: int, t: int) -> FiniteRack:
    """``x * y = t x + (1 - t) y`` on ``Z_p``; needs ``t`` invertible mod ``p``."""
    if t % p == 0:
        raise ValueError("t must be a unit mod %d" % p)
    return FiniteRack.from_op("alexander(%d,%d)" % (p, t), range(p), lambda x, y: (t * x + (1 - t) * y) % p)


# -- augmented racks -----------------------------------------------------------


@dataclass(frozen=True)
class SetAugRack:
    """Right ``G``-set with ``nu: X -> G``; ``act[x][g]`` and ``nu[x]`` are indices."""

    name: str
    labels: tuple
    group: GroupTable
    act: tuple
    nu: tuple

    @property
    def size(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "labels": list(self.labels),
            "group": self.group.to_json(),
            "action": [list(r) for r in self.act],
            "nu": list(self.nu),
        }

    @classmethod
    def from_json(cls, d) -> "SetAugRack":
        G = GroupTable.from_json(d["group"])
        return cls(d.get("name", "rack"), tuple(d["labels"]), G,
                   tuple(tuple(r) for r in d["action"]), tuple(d["nu"]))


def check_aug_invariants(R: SetAugRack) -> Report:
    G, act, nu, lab = R.group, R.act, R.nu, R.labels
    n, d = R.size, G.order
    el = G.elements
    rep = Report("augmented-rack[%s]" % R.name)

    w = next(({"element": lab[x]} for x in range(n) if act[x][G.identity] != x), None)
    rep.add(Check("action.unit", "x.e = x", w is None, w, n))
    w = None
    for x, g, h in itertools.product(range(n), range(d), range(d)):
        if act[act[x][g]][h] != act[x][G.mult[g][h]]:
            w = {"element": lab[x], "g": el[g], "h": el[h]}
            break
    rep.add(Check("action.associativity", "(x.g).h = x.(gh)", w is None, w, n * d * d))
    w = None
    for x, g in itertools.product(range(n), range(d)):
        lhs = nu[act[x][g]]
        rhs = G.mult[G.mult[G.inverse[g]][nu[x]]][g]
        if lhs != rhs:
            w = {"element": lab[x], "g": el[g], "lhs": el[lhs], "rhs": el[rhs]}
            break
    rep.add(Check("augmentation", "nu(x.g) = g^-1 nu(x) g", w is None, w, n * d))
    return rep


def induced_rack(R: SetAugRack) -> FiniteRack:
    """``x * y = x . nu(y)``."""
    return FiniteRack.from_op("induced(%s)" % R.name, R.labels, lambda x, y: R.act[x][R.nu[y]])


def conj_aug_rack(G: GroupTable) -> SetAugRack:
    """``G`` acting on itself by conjugation, ``nu = id``."""
    m, inv = G.mult, G.inverse
    act = tuple(tuple(m[m[inv[g]][x]][g] for g in range(G.order)) for x in range(G.order))
    return SetAugRack("conj(%s)" % G.name, G.elements, G, act, tuple(range(G.order)))


def heap_aug_rack(G: GroupTable) -> SetAugRack:
    """``G x G`` with ``(x, y).g = (xg, yg)`` and ``nu(x, y) = x^-1 y``."""
    d, m, inv = G.order, G.mult, G.inverse
    pairs = list(itertools.product(range(d), repeat=2))
    act = tuple(tuple(m[x][g] * d + m[y][g] for g in range(d)) for x, y in pairs)
    nu = tuple(m[inv[x]][y] for x, y in pairs)
    return SetAugRack("heap(%s)" % G.name, tuple(_pair_labels(G)), G, act, nu)


def adjoint_aug_rack(G: GroupTable) -> SetAugRack:
    """``G x G`` with componentwise conjugation and ``nu(x, y) = xy``."""
    d, m, inv = G.order, G.mult, G.inverse
    pairs = list(itertools.product(range(d), repeat=2))

    def conj(x, g):
        return m[m[inv[g]][x]][g]

    act = tuple(tuple(conj(x, g) * d + conj(y, g) for g in range(d)) for x, y in pairs)
    nu = tuple(m[x][y] for x, y in pairs)
    return SetAugRack("adjoint(%s)" % G.name, tuple(_pair_labels(G)), G, act, nu)


def set_r(R: FiniteRack):
    """``(x, y) -> (y, x * y)`` as a table on pair indices ``x * n + y``."""
    n = R.size
    return tuple(y * n + R.op[x][y] for x in range(n) for y in range(n))


def check_set_ybe(R: FiniteRack) -> Report:
    """Braid relation for ``(x, y) -> (y, x*y)`` on all triples, plus bijectivity."""
    n, op, lab = R.size, R.op, R.labels

    def r1(t):
        x, y, z = t
        return (y, op[x][y], z)

    def r2(t):
        x, y, z = t
        return (x, z, op[y][z])

    rep = Report("set-ybe[%s]" % R.name)
    images = set_r(R)
    ok = len(set(images)) == n * n
    rep.add(Check("set-r.bijective", "(x, y) -> (y, x*y) is a bijection", ok, None if ok else {"size": n}, n * n))
    w = None
    for t in itertools.product(range(n), repeat=3):
        a, b = r1(r2(r1(t))), r2(r1(r2(t)))
        if a != b:
            w = {"triple": [lab[i] for i in t], "lhs": [lab[i] for i in a], "rhs": [lab[i] for i in b]}
            break
    rep.add(Check("set-ybe", "r12 r23 r12 = r23 r12 r23", w is None, w, n ** 3))
    return rep


# -- crossing over to the linear engine ------------------------------------------


def linearize(R: SetAugRack, field=None, carrier=None):
    """Linear extension over ``k[G]`` with every carrier element group-like.

    ``carrier`` may supply the BasedSpace to use (its labels must be a
    permutation of ``R.labels``); by default a fresh atom named after ``R``.
    """
    from caryb.constructions import ConstructionDescriptor
    from caryb.hopf import group_algebra
    from caryb.linalg import UNIT, LinMap, space
    from caryb.modcoalg import ModuleCoalgebra, make_augmented_rack
    from caryb.scalars import QQ

    field = field or QQ
    H = group_algebra(R.group, field)
    X = carrier if carrier is not None else space(R.name, R.labels)
    if sorted(X.labels) != sorted(R.labels):
        raise ValueError("carrier labels do not match %s" % R.name)
    pos = {lab: i for i, lab in enumerate(X.labels)}
    to_x = [pos[lab] for lab in R.labels]
    from_x = [R.labels.index(lab) for lab in X.labels]
    n, d = X.dim, R.group.order

    delta = LinMap.from_basis_function(X, X * X, lambda j: j * n + j, field)
    eps = LinMap.from_basis_function(X, UNIT, lambda j: 0, field)
    act = LinMap.from_basis_function(X * H.space, X, lambda j: to_x[R.act[from_x[j // d]][j % d]], field)
    nu = LinMap.from_basis_function(X, H.space, lambda j: R.nu[from_x[j]], field)
    M = ModuleCoalgebra(X.factors[0].name if X.factors else "k", X, delta, eps, act, H)
    return make_augmented_rack(M, nu, ConstructionDescriptor("linearized", H.name, params={"set": R.name}))


def oracle_compare(set_rack: SetAugRack, cat_rack) -> Report:
    """Compare ``nu``, action, ``q`` and ``R`` of the two sides on every basis element.

    Only group-like carriers are meaningful here; ``cat_rack`` must be over
    ``k[G]`` for the same group and share the label set.
    """
    from caryb.checks import check_identity
    from caryb.linalg import LinMap
    from caryb.ybe import r_matrix, sd_map

    X, F = cat_rack.space, cat_rack.field
    rep = Report("oracle[%s vs %s]" % (set_rack.name, cat_rack.name))
    if sorted(X.labels) != sorted(set_rack.labels):
        rep.add(Check("oracle.labels", "basis label sets coincide", False,
                      {"set": sorted(set_rack.labels)[:8], "categorical": sorted(X.labels)[:8]}))
        return rep
    if list(cat_rack.hopf.space.labels) != list(set_rack.group.elements):
        rep.add(Check("oracle.group", "same group elements", False,
                      {"set": list(set_rack.group.elements), "categorical": list(cat_rack.hopf.space.labels)}))
        return rep
    lin = linearize(set_rack, F, carrier=X)
    pos = {lab: i for i, lab in enumerate(X.labels)}
    to_x = [pos[lab] for lab in set_rack.labels]
    from_x = [set_rack.labels.index(lab) for lab in X.labels]
    n = X.dim
    star = induced_rack(set_rack).op
    q_set = LinMap.from_basis_function(X * X, X, lambda j: to_x[star[from_x[j // n]][from_x[j % n]]], F)

    def r_col(j):
        x, y = from_x[j // n], from_x[j % n]
        return to_x[y] * n + to_x[star[x][y]]

    r_set = LinMap.from_basis_function(X * X, X * X, r_col, F)
    rep.add(check_identity("oracle.nu", "nu agrees", lin.nu, cat_rack.nu, F))
    rep.add(check_identity("oracle.action", "action agrees", lin.X.action, cat_rack.X.action, F))
    rep.add(check_identity("oracle.q", "q agrees", q_set, sd_map(cat_rack).map, F))
    rep.add(check_identity("oracle.r-matrix", "R agrees", r_set, r_matrix(cat_rack, verify=False).forward, F))
    rep.info["elements"] = n
    return rep
