"""Self-distributive maps, R-matrices and the braided structure they generate.

For an augmented rack ``(X, H, nu)``:

* ``q(x (x) y) = x . nu(y)``
* ``R(x (x) y) = y(1) (x) q(x (x) y(2))``
* ``R^-1(x (x) y) = y . S(nu(x(2))) (x) x(1)``
* ``R_{m,n}`` on ``X^m (x) X^n`` uses the tensor-power rack structures.

All identities are verified by pushing every basis vector through both
sides; composite matrices on ``X^3`` and beyond are never formed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from caryb.checks import check_identity
from caryb.constructions import DEFAULT_CAP, power_rack
from caryb.linalg import (
    BasedSpace,
    Id,
    LinMap,
    Stage,
    Swap,
    chain,
    local,
    materialize,
)
from caryb.modcoalg import AugmentedRack
from caryb.report import Report


class InverseError(ArithmeticError):
    def __init__(self, report: Report):
        self.report = report
        bad = report.first_failure()
        super().__init__("braiding is not invertible: %s fails at %s" % (bad.id, bad.witness and bad.witness["basis"]))


@dataclass(frozen=True, eq=False)
class SDMap:
    rack: AugmentedRack
    map: LinMap


@dataclass(frozen=True, eq=False)
class YBOperator:
    """``R_{m,n}: X^m (x) X^n -> X^n (x) X^m`` together with its inverse."""

    rack: AugmentedRack
    m: int
    n: int
    forward: Stage
    inverse: Stage
    inverse_verified: bool

    @property
    def theorem_backed(self) -> bool:
        return self.rack.certified and self.rack.cocommutative_certified

    @property
    def source(self) -> BasedSpace:
        return self.forward.source

    def forward_map(self) -> LinMap:
        return materialize(self.forward, self.rack.field)

    def inverse_map(self) -> LinMap:
        return materialize(self.inverse, self.rack.field)


def _mode(R: AugmentedRack) -> str:
    return "theorem-backed" if R.certified and R.cocommutative_certified else "empirical"


def sd_map(R: AugmentedRack) -> SDMap:
    """``q = action o (1 (x) nu)``."""
    return SDMap(R, materialize(chain(R.X.action, local(R.nu, left=R.space)), R.field))


def check_self_distributive(q: SDMap) -> Report:
    """``q(q x 1) = q(q x q)(1 x tau x 1)(1 x 1 x Delta)`` on ``X^3``."""
    R = q.rack
    X, f = R.space, q.map
    lhs = chain(f, local(f, right=X))
    rhs = chain(
        f,
        local(f, right=X),
        local(f, left=X * X),
        local(Swap(X, X), left=X, right=X),
        local(R.X.delta, left=X * X),
    )
    rep = Report("self-distributive[%s]" % R.name)
    rep.add(check_identity("self-distributive", "q(q x 1) = q(q x q)(1 x tau x 1)(1 x 1 x Delta)", lhs, rhs, R.field))
    return rep


def check_sd_comult_compatibility(q: SDMap) -> Report:
    """``Delta q = (q x q)(1 x tau x 1)(Delta x Delta)``."""
    R = q.rack
    X, f = R.space, q.map
    lhs = chain(R.X.delta, f)
    rhs = chain(
        local(f, right=X),
        local(f, left=X * X),
        local(Swap(X, X), left=X, right=X),
        local(R.X.delta, left=X * X),
        local(R.X.delta, right=X),
    )
    rep = Report("sd-comult-compatibility[%s]" % R.name)
    rep.add(check_identity("sd-comult-compatibility", "Delta q = (q x q)(1 x tau x 1)(Delta x Delta)", lhs, rhs, R.field))
    return rep


# -- braidings ---------------------------------------------------------------


@functools.lru_cache(maxsize=64)
def _power(R: AugmentedRack, n: int, cap) -> AugmentedRack:
    return R if n == 1 else power_rack(R, n, cap=cap)


def _q(A: AugmentedRack, B: AugmentedRack) -> Stage:
    """``x (x) y -> x . nu_B(y)`` on ``A (x) B``."""
    return chain(A.X.action, local(B.nu, left=A.space))


def _q_inv(A: AugmentedRack, B: AugmentedRack) -> Stage:
    """``x (x) y -> x . S(nu_B(y))``."""
    return chain(A.X.action, local(A.hopf.antipode, left=A.space), local(B.nu, left=A.space))


def _braid(A: AugmentedRack, B: AugmentedRack) -> Stage:
    """``x (x) y -> y(1) (x) x . nu_B(y(2))``, ``A (x) B -> B (x) A``."""
    return chain(
        local(_q(A, B), left=B.space),
        local(Swap(A.space, B.space), right=B.space),
        local(B.X.delta, left=A.space),
    )


def _unbraid(A: AugmentedRack, B: AugmentedRack) -> Stage:
    """Inverse of ``_braid(A, B)``: ``x (x) y -> y . S(nu_B(x(2))) (x) x(1)``, ``B (x) A -> A (x) B``."""
    return chain(
        Swap(B.space, A.space),
        local(_q_inv(A, B), left=B.space),
        local(Swap(B.space, A.space), left=B.space),
        local(B.X.delta, right=A.space),
    )


def check_inverse(op: YBOperator) -> Report:
    R = op.rack
    rep = Report("inverse[%s; %d,%d]" % (R.name, op.m, op.n), mode=_mode(R))
    rep.add(check_identity("inverse.left", "R^-1 R = 1", chain(op.inverse, op.forward), Id(op.forward.source), R.field))
    rep.add(check_identity("inverse.right", "R R^-1 = 1", chain(op.forward, op.inverse), Id(op.forward.target), R.field))
    return rep


def _finish(R, m, n, fwd, inv, verify):
    op = YBOperator(R, m, n, fwd, inv, False)
    if verify:
        rep = check_inverse(op)
        if not rep.passed:
            raise InverseError(rep)
        op = YBOperator(R, m, n, fwd, inv, True)
    return op


def r_inverse_11(R: AugmentedRack) -> LinMap:
    """``R^-1(x (x) y) = y . S(nu(x(2))) (x) x(1)``, written out term by term.

    Deliberately independent of the pipeline used for general ``(m, n)``.
    """
    X, F = R.space, R.field
    n, d = X.dim, R.hopf.dim
    delta, nu, S, act = R.X.delta.cols, R.nu.cols, R.hopf.antipode.cols, R.X.action.cols

    def column(j):
        x, y = divmod(j, n)
        out = {}
        for k, a in delta.get(x, ()):
            x1, x2 = divmod(k, n)
            for h, b in nu.get(x2, ()):
                for s, c in S.get(h, ()):
                    for z, e in act.get(y * d + s, ()):
                        t = z * n + x1
                        out[t] = out.get(t, 0) + a * b * c * e
        return out

    return LinMap.from_function(X * X, X * X, column, F)


def r_matrix(R: AugmentedRack, verify: bool = True) -> YBOperator:
    """``R(x (x) y) = y(1) (x) q(x (x) y(2))`` as an explicit sparse map."""
    X = R.space
    q = sd_map(R).map
    fwd = materialize(chain(local(q, left=X), local(Swap(X, X), right=X), local(R.X.delta, left=X)), R.field)
    return _finish(R, 1, 1, fwd, r_inverse_11(R), verify)


def r_inverse(R: AugmentedRack, m: int = 1, n: int = 1, cap=DEFAULT_CAP, verify: bool = True) -> LinMap:
    """Inverse of ``R_{m,n}``, a map ``X^n (x) X^m -> X^m (x) X^n``."""
    A, B = _power(R, m, cap), _power(R, n, cap)
    inv = _unbraid(A, B)
    if verify:
        _finish(R, m, n, _braid(A, B), inv, True)
    return materialize(inv, R.field)


def braiding(R: AugmentedRack, m: int, n: int, cap=DEFAULT_CAP, verify: bool = True) -> YBOperator:
    """``R_{m,n}`` with the power-rack structures on ``X^m`` and ``X^n``.

    Forward and inverse are lazy pipelines; call ``forward_map()`` to
    materialize.
    """
    if m < 1 or n < 1:
        raise ValueError("braiding needs m, n >= 1")
    A, B = _power(R, m, cap), _power(R, n, cap)
    return _finish(R, m, n, _braid(A, B), _unbraid(A, B), verify)


def check_ybe(op: YBOperator) -> Report:
    """``(R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R)`` on every basis vector of ``V^3``."""
    if op.m != op.n:
        raise ValueError("the braid relation needs a square operator (m == n)")
    R = op.rack
    V = R.space ** op.m
    F = op.forward
    lhs = chain(local(F, right=V), local(F, left=V), local(F, right=V))
    rhs = chain(local(F, left=V), local(F, right=V), local(F, left=V))
    rep = Report("ybe[%s; %d,%d]" % (R.name, op.m, op.n), mode=_mode(R))
    c = rep.add(check_identity("ybe", "(R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R)", lhs, rhs, R.field))
    rep.info["basis_checked"] = c.checked
    return rep


def check_hexagons(R: AugmentedRack, l: int, m: int, n: int, cap=DEFAULT_CAP) -> Report:
    """``R_{A,B(x)C} = (1 x R_{A,C})(R_{A,B} x 1)`` and ``R_{A(x)B,C} = (R_{A,C} x 1)(1 x R_{B,C})``."""
    A, B, C = (R.space ** k for k in (l, m, n))
    PA, PB, PC = (_power(R, k, cap) for k in (l, m, n))
    PBC, PAB = _power(R, m + n, cap), _power(R, l + m, cap)
    rep = Report("hexagons[%s; %d,%d,%d]" % (R.name, l, m, n), mode=_mode(R))
    rep.add(check_identity("hexagon.1", "R_{A,BC} = (1 x R_{A,C})(R_{A,B} x 1)",
                           _braid(PA, PBC), chain(local(_braid(PA, PC), left=B), local(_braid(PA, PB), right=C)),
                           R.field))
    rep.add(check_identity("hexagon.2", "R_{AB,C} = (R_{A,C} x 1)(1 x R_{B,C})",
                           _braid(PAB, PC), chain(local(_braid(PA, PC), right=B), local(_braid(PB, PC), left=A)),
                           R.field))
    return rep


def reduced_word(m: int, n: int) -> list:
    """Lexicographically first reduced word for the block transposition.

    Positions of the adjacent crossings in the order they are applied,
    moving the last ``n`` strands in front of the first ``m``.
    """
    strands = ["x"] * m + ["y"] * n
    word = []
    while True:
        for i in range(len(strands) - 1):
            if strands[i] == "x" and strands[i + 1] == "y":
                strands[i], strands[i + 1] = "y", "x"
                word.append(i)
                break
        else:
            return word


def braid_word_map(R: AugmentedRack, word, k: int) -> Stage:
    """Product of ``1^i (x) R_{1,1} (x) 1^(k-i-2)`` over ``word`` (applied in order)."""
    X = R.space
    r11 = r_matrix(R, verify=False).forward
    if not word:
        return Id(X ** k)
    return chain(*[local(r11, left=X ** i, right=X ** (k - i - 2)) for i in reversed(word)])


def check_braiding_decomposition(R: AugmentedRack, m: int, n: int, cap=DEFAULT_CAP) -> Report:
    word = reduced_word(m, n)
    op = braiding(R, m, n, cap, verify=False)
    rep = Report("braiding-decomposition[%s; %d,%d]" % (R.name, m, n), mode=_mode(R), info={"word": word})
    rep.add(check_identity("braiding-decomposition", "R_{m,n} = product of R_{1,1} crossings",
                           op.forward, braid_word_map(R, word, m + n), R.field))
    return rep


def check_sd_transport(f: LinMap, R1: AugmentedRack, R2: AugmentedRack) -> Report:
    """A rack homomorphism intertwines the SD maps and the R-matrices."""
    q1, q2 = sd_map(R1).map, sd_map(R2).map
    X1, X2 = R1.space, R2.space
    ff = chain(local(f, right=X2), local(f, left=X1))
    r1, r2 = r_matrix(R1, verify=False).forward, r_matrix(R2, verify=False).forward
    rep = Report("sd-transport")
    rep.add(check_identity("transport.sd", "q2 (f x f) = f q1", chain(q2, ff), chain(f, q1), f.field))
    rep.add(check_identity("transport.r-matrix", "(f x f) R1 = R2 (f x f)", chain(ff, r1), chain(r2, ff), f.field))
    return rep
