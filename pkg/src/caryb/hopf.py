"""Finite-dimensional Hopf algebras with exhaustive axiom checks.

Sweedler components are never manipulated symbolically: ``x(1) (x) x(2)``
is simply ``delta`` applied to a basis vector, and iterated components are
iterated applications.
"""

from __future__ import annotations

from dataclasses import dataclass

from caryb.checks import check_identity
from caryb.groups import GroupTable
from caryb.linalg import (
    UNIT,
    BasedSpace,
    LinMap,
    SpaceMismatch,
    Swap,
    chain,
    compose,
    identity,
    local,
    materialize,
    space,
    tensor,
)
from caryb.report import Report
from caryb.scalars import QQ


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    name: str
    space: BasedSpace
    mu: LinMap
    eta: LinMap
    delta: LinMap
    epsilon: LinMap
    antipode: LinMap
    field: object = QQ
    group: GroupTable | None = None
    kind: str | None = None

    def __post_init__(self):
        H = self.space
        expected = {
            "mu": (H * H, H),
            "eta": (UNIT, H),
            "delta": (H, H * H),
            "epsilon": (H, UNIT),
            "antipode": (H, H),
        }
        for attr, (src, tgt) in expected.items():
            f = getattr(self, attr)
            if f.source != src or f.target != tgt:
                raise SpaceMismatch(
                    "%s of %s must map %r -> %r, got %r -> %r" % (attr, self.name, src, tgt, f.source, f.target)
                )

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def unit(self) -> dict:
        return self.eta.column(0)

    def replace(self, **maps) -> "HopfAlgebra":
        """Copy with some structure maps swapped out (used for mutation fixtures)."""
        kw = {k: getattr(self, k) for k in ("name", "space", "mu", "eta", "delta", "epsilon", "antipode", "field", "group", "kind")}
        kw.update(maps)
        return HopfAlgebra(**kw)


def group_algebra(G: GroupTable, field=QQ) -> HopfAlgebra:
    """``k[G]``: every group element is group-like, ``S(g) = g^-1``."""
    n = G.order
    H = space("k[%s]" % G.name, G.elements)
    one = field.one
    mu = LinMap.from_basis_function(H * H, H, lambda j: G.mul(*divmod(j, n)), field)
    eta = LinMap.from_columns(UNIT, H, {0: {G.identity: one}}, field)
    delta = LinMap.from_basis_function(H, H * H, lambda g: g * n + g, field)
    epsilon = LinMap.from_basis_function(H, UNIT, lambda g: 0, field)
    antipode = LinMap.from_basis_function(H, H, G.inv, field)
    return HopfAlgebra("k[%s]" % G.name, H, mu, eta, delta, epsilon, antipode, field, G, "group")


def function_algebra(G: GroupTable, field=QQ) -> HopfAlgebra:
    """``k^G``: pointwise product on delta functions, ``Delta(d_g) = sum_{hk=g} d_h (x) d_k``."""
    n = G.order
    H = space("k^%s" % G.name, ["δ_" + e for e in G.elements])
    one = field.one

    def mu_col(j):
        a, b = divmod(j, n)
        return {a: one} if a == b else {}

    def delta_col(g):
        return {h * n + k: one for h in range(n) for k in range(n) if G.mul(h, k) == g}

    mu = LinMap.from_function(H * H, H, mu_col, field)
    eta = LinMap.from_columns(UNIT, H, {0: {g: one for g in range(n)}}, field)
    delta = LinMap.from_function(H, H * H, delta_col, field)
    epsilon = LinMap.from_columns(H, UNIT, {G.identity: {0: one}}, field)
    antipode = LinMap.from_basis_function(H, H, G.inv, field)
    return HopfAlgebra("k^%s" % G.name, H, mu, eta, delta, epsilon, antipode, field, G, "function")


def _delta2(delta, H):
    """``Delta (x) Delta`` on ``H (x) H`` as a lazy chain."""
    return chain(local(delta, left=H * H), local(delta, right=H))


def check_hopf_axioms(H: HopfAlgebra) -> Report:
    V, F = H.space, H.field
    mu, eta, delta, eps, S = H.mu, H.eta, H.delta, H.epsilon, H.antipode
    one_V = identity(V, F)
    rep = Report("hopf-axioms[%s]" % H.name)
    add = rep.add

    add(check_identity("associativity", "mu(mu x 1) = mu(1 x mu)",
                       chain(mu, local(mu, right=V)), chain(mu, local(mu, left=V)), F))
    add(check_identity("unit.left", "mu(eta x 1) = 1", chain(mu, local(eta, right=V)), one_V, F))
    add(check_identity("unit.right", "mu(1 x eta) = 1", chain(mu, local(eta, left=V)), one_V, F))
    add(check_identity("coassociativity", "(Delta x 1)Delta = (1 x Delta)Delta",
                       chain(local(delta, right=V), delta), chain(local(delta, left=V), delta), F))
    add(check_identity("counit.left", "(eps x 1)Delta = 1", chain(local(eps, right=V), delta), one_V, F))
    add(check_identity("counit.right", "(1 x eps)Delta = 1", chain(local(eps, left=V), delta), one_V, F))
    add(check_identity("bialgebra.comult-mult", "Delta mu = (mu x mu)(1 x tau x 1)(Delta x Delta)",
                       chain(delta, mu),
                       chain(tensor(mu, mu), local(Swap(V, V), left=V, right=V), _delta2(delta, V)), F))
    add(check_identity("bialgebra.counit-mult", "eps mu = eps x eps",
                       chain(eps, mu), tensor(eps, eps), F))
    add(check_identity("bialgebra.comult-unit", "Delta eta = eta x eta",
                       chain(delta, eta), tensor(eta, eta), F))
    add(check_identity("bialgebra.counit-unit", "eps eta = 1_k",
                       chain(eps, eta), identity(UNIT, F), F))
    add(check_identity("antipode.left", "mu(1 x S)Delta = eta eps",
                       chain(mu, local(S, left=V), delta), chain(eta, eps), F))
    add(check_identity("antipode.right", "mu(S x 1)Delta = eta eps",
                       chain(mu, local(S, right=V), delta), chain(eta, eps), F))
    return rep


def check_antipode_twist(H: HopfAlgebra) -> Report:
    """The antipode reverses products and coproducts.

    ``mu(S x S) = S mu tau`` and ``(S x S) Delta = tau Delta S``.
    """
    V, F = H.space, H.field
    mu, delta, S = H.mu, H.delta, H.antipode
    SS = tensor(S, S)
    tau = Swap(V, V)
    rep = Report("antipode-twist[%s]" % H.name)
    rep.add(check_identity("twist.mult", "mu(S x S) = S mu tau", chain(mu, SS), chain(S, mu, tau), F))
    rep.add(check_identity("twist.comult", "(S x S)Delta = tau Delta S", chain(SS, delta), chain(tau, delta, S), F))
    return rep


def is_cocommutative(H: HopfAlgebra) -> bool:
    return materialize(chain(Swap(H.space, H.space), H.delta), H.field) == H.delta


def is_involutory(H: HopfAlgebra) -> bool:
    return compose(H.antipode, H.antipode) == identity(H.space, H.field)


def check_hopf(H: HopfAlgebra) -> Report:
    """Axioms plus the derived antipode-twist identities, in one report."""
    rep = check_hopf_axioms(H)
    rep.extend(check_antipode_twist(H))
    rep.name = "hopf[%s]" % H.name
    return rep
