"""Module-coalgebras over a Hopf algebra and categorical augmented racks.

An augmented rack is certified at construction: the coalgebra and module
axioms, compatibility of the action with the comultiplication, the
coalgebra-morphism property of the augmentation ``nu`` and the
augmentation identity ``nu(x.g) = S(g(1)) nu(x) g(2)`` are all checked
exhaustively on bases.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from caryb.checks import check_identity
from caryb.hopf import HopfAlgebra, is_cocommutative
from caryb.linalg import (
    UNIT,
    BasedSpace,
    LinMap,
    SpaceMismatch,
    Swap,
    chain,
    identity,
    local,
    materialize,
)
from caryb.report import CertificationError, Report


@dataclass(frozen=True, eq=False)
class ModuleCoalgebra:
    """Coalgebra ``(X, delta, epsilon)`` with a right action ``X (x) H -> X``."""

    name: str
    space: BasedSpace
    delta: LinMap
    epsilon: LinMap
    action: LinMap
    hopf: HopfAlgebra

    def __post_init__(self):
        X, H = self.space, self.hopf.space
        for attr, src, tgt in (
            ("delta", X, X * X),
            ("epsilon", X, UNIT),
            ("action", X * H, X),
        ):
            f = getattr(self, attr)
            if f.source != src or f.target != tgt:
                raise SpaceMismatch("%s of %s must map %r -> %r" % (attr, self.name, src, tgt))

    @property
    def field(self):
        return self.hopf.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_cocommutative(self) -> bool:
        return materialize(chain(Swap(self.space, self.space), self.delta), self.field) == self.delta


def check_module_coalgebra(X: ModuleCoalgebra) -> Report:
    """Coassociativity, counit, and the right-module axioms of the action."""
    V, F, H = X.space, X.field, X.hopf
    delta, eps, act = X.delta, X.epsilon, X.action
    one = identity(V, F)
    rep = Report("module-coalgebra[%s]" % X.name)
    rep.add(check_identity("coalgebra.coassociativity", "(Delta x 1)Delta = (1 x Delta)Delta",
                           chain(local(delta, right=V), delta), chain(local(delta, left=V), delta), F))
    rep.add(check_identity("coalgebra.counit.left", "(eps x 1)Delta = 1", chain(local(eps, right=V), delta), one, F))
    rep.add(check_identity("coalgebra.counit.right", "(1 x eps)Delta = 1", chain(local(eps, left=V), delta), one, F))
    rep.add(check_identity("module.associativity", "(x.g).h = x.(gh)",
                           chain(act, local(act, right=H.space)), chain(act, local(H.mu, left=V)), F))
    rep.add(check_identity("module.unit", "x.1 = x", chain(act, local(H.eta, left=V)), one, F))
    return rep


def check_action_compatibility(X: ModuleCoalgebra) -> Report:
    """``Delta_X(x.g) = (x(1).g(1)) (x) (x(2).g(2))`` as maps ``X (x) H -> X (x) X``."""
    V, H, F = X.space, X.hopf.space, X.field
    act = X.action
    lhs = chain(X.delta, act)
    rhs = chain(
        local(act, right=V),
        local(act, left=V * H),
        local(Swap(V, H), left=V, right=H),
        local(X.hopf.delta, left=V * V),
        local(X.delta, right=H),
    )
    rep = Report("action-compatibility[%s]" % X.name)
    rep.add(check_identity("action-compatibility", "Delta_X(x.g) = x(1).g(1) (x) x(2).g(2)", lhs, rhs, F))
    return rep


def check_coalgebra_morphism(f: LinMap, source, target) -> Report:
    """``Delta_T f = (f x f) Delta_S`` and ``eps_T f = eps_S``.

    ``source`` and ``target`` are anything with ``space``, ``delta`` and
    ``epsilon`` (a ModuleCoalgebra or a HopfAlgebra).
    """
    if f.source != source.space or f.target != target.space:
        raise SpaceMismatch("coalgebra morphism must map %r -> %r" % (source.space, target.space))
    F = f.field
    rep = Report("coalgebra-morphism")
    rep.add(check_identity("coalgebra-morphism.comult", "Delta f = (f x f) Delta",
                           chain(target.delta, f),
                           chain(local(f, right=target.space), local(f, left=source.space), source.delta), F))
    rep.add(check_identity("coalgebra-morphism.counit", "eps f = eps", chain(target.epsilon, f), source.epsilon, F))
    return rep


def augmentation_rhs(X: ModuleCoalgebra, nu: LinMap):
    """The map ``x (x) g -> S(g(1)) nu(x) g(2)``, ``X (x) H -> H``."""
    Hopf = X.hopf
    V, H = X.space, Hopf.space
    return chain(
        Hopf.mu,
        local(Hopf.mu, right=H),
        local(Hopf.antipode, right=H * H),
        local(nu, left=H, right=H),
        local(Swap(V, H), right=H),
        local(Hopf.delta, left=V),
    )


def check_augmentation(X: ModuleCoalgebra, nu: LinMap) -> Report:
    """``nu(x.g) = S(g(1)) nu(x) g(2)``."""
    if nu.source != X.space or nu.target != X.hopf.space:
        raise SpaceMismatch("augmentation must map %r -> %r" % (X.space, X.hopf.space))
    rep = Report("augmentation")
    rep.add(check_identity("augmentation", "nu(x.g) = S(g(1)) nu(x) g(2)",
                           chain(nu, X.action), augmentation_rhs(X, nu), X.field))
    return rep


@dataclass(frozen=True, eq=False)
class AugmentedRack:
    """Triple ``(X, H, nu)``. Only ``make_augmented_rack`` should build these."""

    X: ModuleCoalgebra
    nu: LinMap
    certified: bool
    cocommutative_certified: bool
    certification: Report
    descriptor: object = None

    @property
    def hopf(self) -> HopfAlgebra:
        return self.X.hopf

    @property
    def space(self) -> BasedSpace:
        return self.X.space

    @property
    def field(self):
        return self.X.field

    @property
    def dim(self) -> int:
        return self.X.space.dim

    @property
    def name(self) -> str:
        return self.X.name


def certify(X: ModuleCoalgebra, nu: LinMap) -> Report:
    rep = Report("certification[%s]" % X.name)
    rep.extend(check_module_coalgebra(X))
    rep.extend(check_action_compatibility(X))
    rep.extend(check_coalgebra_morphism(nu, X, X.hopf))
    rep.extend(check_augmentation(X, nu))
    return rep


def make_augmented_rack(X: ModuleCoalgebra, nu: LinMap, descriptor=None, strict: bool = True) -> AugmentedRack:
    """Certify and assemble an augmented rack.

    With ``strict`` (the default) a failing identity raises
    ``CertificationError`` carrying the full report; otherwise an
    uncertified rack is returned for empirical experiments.
    """
    rep = certify(X, nu)
    rep.info["cocommutative_X"] = cx = X.is_cocommutative()
    rep.info["cocommutative_H"] = ch = is_cocommutative(X.hopf)
    cocomm = cx and ch
    if not rep.passed and strict:
        raise CertificationError(rep)
    if not rep.passed:
        warnings.warn("uncertified augmented rack %s: %s fails" % (X.name, rep.first_failure().id))
    return AugmentedRack(X, nu, rep.passed, rep.passed and cocomm, rep, descriptor)


def check_rack_homomorphism(f: LinMap, R1: AugmentedRack, R2: AugmentedRack) -> Report:
    """Equivariant coalgebra morphism ``X1 -> X2`` with ``nu2 f = nu1``."""
    if R1.hopf is not R2.hopf and R1.hopf.space != R2.hopf.space:
        raise SpaceMismatch("racks are over different Hopf algebras")
    F = f.field
    H = R1.hopf.space
    rep = Report("rack-homomorphism")
    for c in check_coalgebra_morphism(f, R1.X, R2.X).checks:
        c.id = "homomorphism." + c.id
        rep.add(c)
    rep.add(check_identity("homomorphism.equivariance", "f(x.g) = f(x).g",
                           chain(f, R1.X.action), chain(R2.X.action, local(f, right=H)), F))
    rep.add(check_identity("homomorphism.augmentation", "nu2 f = nu1", chain(R2.nu, f), R1.nu, F))
    return rep
