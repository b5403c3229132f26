"""Factories for augmented racks.

* ``heap_rack``: ``X = H (x) H``, ``nu(x (x) y) = S(x) y``, ``(x (x) y).g = x g(1) (x) y g(2)``.
* ``adjoint_rack``: ``X = H (x) H``, ``nu = mu``, ``(x (x) y).g = ad_{g(1)}(x) (x) ad_{g(2)}(y)``.
* ``double_rack``: ``Y = X (x) X``, ``nu~ = mu(nu (x) nu)``, diagonal action and coproduct.
* ``power_rack``: ``X^n`` with ``nu_n`` the left-iterated product of the ``nu(x_i)``.

``double_rack`` is written with map composition exactly as the formulas
read; ``power_rack`` is built combinatorially from the Sweedler sums. The
two must agree for ``n = 2`` and the tests hold them to it.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field

from caryb.hopf import HopfAlgebra, is_cocommutative
from caryb.linalg import (
    UNIT,
    Atom,
    BasedSpace,
    LinMap,
    Swap,
    chain,
    compose,
    identity,
    local,
    materialize,
    recast,
    tensor,
)
from caryb.modcoalg import AugmentedRack, ModuleCoalgebra, make_augmented_rack

DEFAULT_CAP = 4096


class CapExceeded(RuntimeError):
    def __init__(self, what, dim, cap):
        self.dim, self.cap = dim, cap
        super().__init__("%s would have dimension %d > cap %d" % (what, dim, cap))


@dataclass(frozen=True)
class ConstructionDescriptor:
    kind: str
    base: str
    n: int | None = None
    parent: "ConstructionDescriptor | None" = None
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "base": self.base}
        if self.n is not None:
            d["n"] = self.n
        if self.params:
            d["params"] = dict(self.params)
        if self.parent is not None:
            d["parent"] = self.parent.to_dict()
        return d

    @classmethod
    def from_dict(cls, d) -> "ConstructionDescriptor":
        parent = cls.from_dict(d["parent"]) if d.get("parent") else None
        return cls(d["kind"], d["base"], d.get("n"), parent, dict(d.get("params", {})))


def _guard(what, dim, cap):
    if cap is not None and dim > cap:
        raise CapExceeded(what, dim, cap)


def _pair_space(kind: str, H: HopfAlgebra) -> BasedSpace:
    labels = ["(%s⊗%s)" % (a, b) for a in H.space.labels for b in H.space.labels]
    return BasedSpace((Atom("%s(%s)" % (kind, H.name), labels),))


def _pair_coalgebra(X: BasedSpace, H: HopfAlgebra):
    """``Delta_X = (1 x tau x 1)(Delta_H x Delta_H)`` and ``eps_X = eps x eps``, on ``X = H (x) H``."""
    V = H.space
    delta = materialize(chain(local(Swap(V, V), left=V, right=V), tensor(H.delta, H.delta)), H.field)
    return recast(delta, source=X, target=X * X), recast(tensor(H.epsilon, H.epsilon), source=X)


def _warn_cocommutative(H, what):
    if not is_cocommutative(H):
        warnings.warn("%s over non-cocommutative %s: certification may fail" % (what, H.name))


def heap_rack(H: HopfAlgebra, cap: int = DEFAULT_CAP, strict: bool = True) -> AugmentedRack:
    """Quantum heap on ``H (x) H`` with ``nu(x (x) y) = S(x) y``."""
    _warn_cocommutative(H, "heap rack")
    V, F = H.space, H.field
    _guard("heap rack", V.dim ** 2, cap)
    X = _pair_space("heap", H)
    delta, eps = _pair_coalgebra(X, H)
    act = materialize(chain(tensor(H.mu, H.mu), local(Swap(V, V), left=V, right=V), local(H.delta, left=V * V)), F)
    nu = materialize(chain(H.mu, local(H.antipode, right=V)), F)
    M = ModuleCoalgebra(X.factors[0].name, X, delta, eps, recast(act, source=X * V, target=X), H)
    return make_augmented_rack(M, recast(nu, source=X), ConstructionDescriptor("heap", H.name), strict)


def adjoint_map(H: HopfAlgebra) -> LinMap:
    """``ad: x (x) y -> ad_y(x) = S(y(1)) x y(2)``."""
    V = H.space
    return materialize(
        chain(H.mu, local(H.mu, right=V), local(H.antipode, right=V * V), local(Swap(V, V), right=V), local(H.delta, left=V)),
        H.field,
    )


def adjoint_rack(H: HopfAlgebra, cap: int = DEFAULT_CAP, strict: bool = True) -> AugmentedRack:
    """``H (x) H`` with ``nu = mu`` and componentwise adjoint action."""
    _warn_cocommutative(H, "adjoint rack")
    V, F = H.space, H.field
    _guard("adjoint rack", V.dim ** 2, cap)
    X = _pair_space("adjoint", H)
    delta, eps = _pair_coalgebra(X, H)
    ad = adjoint_map(H)
    act = materialize(chain(tensor(ad, ad), local(Swap(V, V), left=V, right=V), local(H.delta, left=V * V)), F)
    M = ModuleCoalgebra(X.factors[0].name, X, delta, eps, recast(act, source=X * V, target=X), H)
    return make_augmented_rack(M, recast(H.mu, source=X), ConstructionDescriptor("adjoint", H.name), strict)


def double_rack(R: AugmentedRack, cap: int = DEFAULT_CAP, strict: bool = True) -> AugmentedRack:
    """``Y = X (x) X`` with ``nu~ = mu(nu (x) nu)`` and ``y.h = y.Delta(h)``."""
    X, Hopf, F = R.space, R.hopf, R.field
    H = Hopf.space
    _guard("double rack", X.dim ** 2, cap)
    Y = X * X
    delta = materialize(chain(local(Swap(X, X), left=X, right=X), tensor(R.X.delta, R.X.delta)), F)
    eps = tensor(R.X.epsilon, R.X.epsilon)
    act = materialize(
        chain(
            local(R.X.action, right=X),
            local(R.X.action, left=X * H),
            local(Swap(X, H), left=X, right=H),
            local(Hopf.delta, left=Y),
        ),
        F,
    )
    nu = materialize(chain(Hopf.mu, local(R.nu, right=H), local(R.nu, left=X)), F)
    M = ModuleCoalgebra("double(%s)" % R.name, Y, delta, eps, act, Hopf)
    desc = ConstructionDescriptor("double", Hopf.name, parent=R.descriptor)
    return make_augmented_rack(M, nu, desc, strict)


def _iterated_coproduct(Hopf: HopfAlgebra, g: int, n: int) -> dict:
    """``g(1) (x) ... (x) g(n)`` as ``{(h1, ..., hn): coeff}``."""
    d = Hopf.space.dim
    terms = {(g,): Hopf.field.one}
    for _ in range(n - 1):
        nxt = {}
        for key, c in terms.items():
            for k, a in Hopf.delta.cols.get(key[-1], ()):
                h1, h2 = divmod(k, d)
                t = key[:-1] + (h1, h2)
                nxt[t] = nxt.get(t, 0) + c * a
        terms = {k: v for k, v in nxt.items() if v}
    return terms


def _digits(j, base, n):
    out = []
    for _ in range(n):
        j, r = divmod(j, base)
        out.append(r)
    return out[::-1]


def _join(digits, base):
    j = 0
    for x in digits:
        j = j * base + x
    return j


def _products(factors, one):
    """Expand a product of sparse sums ``[[(key, coeff), ...], ...]``."""
    for combo in itertools.product(*factors):
        c = one
        for _, a in combo:
            c = c * a
        yield tuple(k for k, _ in combo), c


def power_structure(R: AugmentedRack, n: int):
    """``(Delta_n, eps_n, action_n, nu_n)`` on ``X^n``, unchecked."""
    if n < 1:
        raise ValueError("power needs n >= 1")
    X, Hopf, F = R.space, R.hopf, R.field
    D, d = X.dim, Hopf.space.dim
    Xn = X ** n
    one = F.one
    dcols = [[(divmod(i, D), a) for i, a in R.X.delta.cols.get(x, ())] for x in range(D)]

    delta, eps, act, nu = {}, {}, {}, {}
    for j in range(Xn.dim):
        xs = _digits(j, D, n)
        col = {}
        for pairs, c in _products([dcols[x] for x in xs], one):
            t = _join([p[0] for p in pairs], D) * Xn.dim + _join([p[1] for p in pairs], D)
            col[t] = col.get(t, 0) + c
        delta[j] = col
        c = one
        for x in xs:
            c = c * dict(R.X.epsilon.cols.get(x, ())).get(0, 0)
        eps[j] = {0: c}
        v = dict(R.nu.cols.get(xs[0], ()))
        for x in xs[1:]:
            w = dict(R.nu.cols.get(x, ()))
            v = Hopf.mu._apply({a * d + b: ca * cb for a, ca in v.items() for b, cb in w.items()})
        nu[j] = v

    acol = R.X.action.cols
    for j in range(Xn.dim):
        xs = _digits(j, D, n)
        for g in range(d):
            col = {}
            for hs, ch in _iterated_coproduct(Hopf, g, n).items():
                for ys, c in _products([acol.get(x * d + h, ()) for x, h in zip(xs, hs)], one):
                    t = _join(ys, D)
                    col[t] = col.get(t, 0) + ch * c
            act[j * d + g] = col

    H = Hopf.space
    return (
        LinMap.from_columns(Xn, Xn * Xn, delta, F),
        LinMap.from_columns(Xn, UNIT, eps, F),
        LinMap.from_columns(Xn * H, Xn, act, F),
        LinMap.from_columns(Xn, H, nu, F),
    )


def power_rack(R: AugmentedRack, n: int, cap: int = DEFAULT_CAP, strict: bool = True) -> AugmentedRack:
    """``X^(x)n`` with diagonal coproduct and action, ``nu_n = M o nu^(x)n``."""
    if n < 1:
        raise ValueError("power_rack needs n >= 1")
    _guard("power rack", R.dim ** n, cap)
    delta, eps, act, nu = power_structure(R, n)
    name = R.name if n == 1 else "%s^%d" % (R.name, n)
    M = ModuleCoalgebra(name, R.space ** n, delta, eps, act, R.hopf)
    desc = ConstructionDescriptor("power", R.hopf.name, n=n, parent=R.descriptor)
    return make_augmented_rack(M, nu, desc, strict)


def grouplike_coalgebra(name: str, labels, field):
    """A coalgebra in which every basis vector is group-like."""
    X = BasedSpace((Atom(name, tuple(labels)),))
    n = X.dim
    delta = LinMap.from_basis_function(X, X * X, lambda j: j * n + j, field)
    eps = LinMap.from_basis_function(X, UNIT, lambda j: 0, field)
    return X, delta, eps


def trivial_rack(H: HopfAlgebra, labels=None) -> AugmentedRack:
    """Trivial action ``x.g = eps(g) x`` and ``nu = eta eps_X``.

    Without ``labels`` the carrier is the ground field itself.
    """
    F = H.field
    if labels is None:
        X, delta, eps = UNIT, identity(UNIT, F), identity(UNIT, F)
        name = "k"
    else:
        name = "trivial(%s)" % ",".join(labels)
        X, delta, eps = grouplike_coalgebra(name, labels, F)
    act = tensor(identity(X, F), H.epsilon)
    nu = compose(H.eta, eps)
    M = ModuleCoalgebra(name, X, delta, eps, act, H)
    return make_augmented_rack(M, nu, ConstructionDescriptor("trivial", H.name, params={"dim": X.dim}))
