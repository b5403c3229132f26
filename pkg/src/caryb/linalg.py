"""Sparse based linear algebra over an exact field.

A ``BasedSpace`` is a tensor product of ``Atom`` s (named spaces with
labelled bases). Tensor products flatten, so the monoidal structure is
strict: ``(A*B)*C`` and ``A*(B*C)`` are the same object and the empty
product is the ground field ``UNIT``. Basis indices of products are
row-major (left factor slowest).

``LinMap`` is an immutable sparse matrix stored by columns. Large
composites are never materialized: ``Local`` (``1 (x) f (x) 1``), ``Swap``
and ``Pipeline`` apply a chain of maps to one basis vector at a time, and
``find_difference`` compares two such chains on every basis vector.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from caryb.scalars import QQ

TENSOR = "⊗"


class DimensionMismatch(ValueError):
    def __init__(self, what, expected, got):
        self.expected = expected
        self.got = got
        super().__init__("%s: expected dim %s, got dim %s" % (what, expected, got))


class SpaceMismatch(ValueError):
    pass


# --------------------------------------------------------------------------
# spaces


@dataclass(frozen=True)
class Atom:
    name: str
    labels: tuple

    def __post_init__(self):
        labels = tuple(str(l) for l in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError("atom %r needs at least one basis vector" % self.name)
        if len(set(labels)) != len(labels):
            raise ValueError("atom %r has repeated labels" % self.name)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def position(self, label: str) -> int:
        pos = self.__dict__.get("_pos")
        if pos is None:
            pos = {l: i for i, l in enumerate(self.labels)}
            object.__setattr__(self, "_pos", pos)
        return pos[label]

    def __repr__(self):
        return "Atom(%r, dim=%d)" % (self.name, self.dim)


class BasedSpace:
    """Free module with an ordered basis: a tensor product of atoms."""

    __slots__ = ("factors", "dim", "_hash")

    def __init__(self, factors: Iterable[Atom] = ()):
        self.factors = tuple(factors)
        self.dim = math.prod(a.dim for a in self.factors)
        self._hash = hash(self.factors)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def __eq__(self, other):
        return isinstance(other, BasedSpace) and self.factors == other.factors

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "BasedSpace") -> "BasedSpace":
        return BasedSpace(self.factors + other.factors)

    def __pow__(self, n: int) -> "BasedSpace":
        return BasedSpace(self.factors * n)

    def split(self, i: int) -> tuple:
        """Atom indices of basis vector ``i``."""
        parts = []
        for a in reversed(self.factors):
            i, r = divmod(i, a.dim)
            parts.append(r)
        return tuple(reversed(parts))

    def join(self, parts) -> int:
        i = 0
        for a, p in zip(self.factors, parts):
            i = i * a.dim + p
        return i

    def label(self, i: int) -> str:
        if not 0 <= i < self.dim:
            raise IndexError("basis index %d out of range for dim %d" % (i, self.dim))
        if not self.factors:
            return "1"
        return TENSOR.join(a.labels[p] for a, p in zip(self.factors, self.split(i)))

    @property
    def labels(self) -> list:
        return [self.label(i) for i in range(self.dim)]

    def index(self, *atom_labels: str) -> int:
        if len(atom_labels) != len(self.factors):
            raise ValueError("need one label per factor")
        return self.join(a.position(l) for a, l in zip(self.factors, atom_labels))

    def __repr__(self):
        if not self.factors:
            return "BasedSpace(k)"
        return "BasedSpace(%s)" % " ⊗ ".join(a.name for a in self.factors)


UNIT = BasedSpace(())


def space(name: str, labels) -> BasedSpace:
    return BasedSpace((Atom(name, tuple(labels)),))


def coordinate_space(n: int) -> BasedSpace:
    return space("k^%d" % n, [str(i) for i in range(n)])


def tensor_spaces(*spaces: BasedSpace) -> BasedSpace:
    factors = ()
    for s in spaces:
        factors += s.factors
    return BasedSpace(factors)


def _as_space(s) -> BasedSpace:
    if isinstance(s, BasedSpace):
        return s
    if isinstance(s, int):
        if s < 1:
            raise ValueError("dimension must be positive, got %d" % s)
        return coordinate_space(s)
    raise TypeError("expected a BasedSpace or a dimension, got %r" % (s,))


# --------------------------------------------------------------------------
# vectors


def _clean(acc: dict) -> dict:
    return {i: c for i, c in acc.items() if c}


class Vector:
    """Sparse vector in a based space; no stored zeros."""

    __slots__ = ("space", "entries")

    def __init__(self, space: BasedSpace, entries: Mapping[int, object] = ()):
        self.space = space
        entries = dict(entries)
        for i in entries:
            if not 0 <= i < space.dim:
                raise DimensionMismatch("vector index %d" % i, space.dim, i + 1)
        self.entries = _clean(entries)

    @classmethod
    def basis(cls, space: BasedSpace, i: int, field=QQ) -> "Vector":
        return cls(space, {i: field.one})

    def __eq__(self, other):
        return isinstance(other, Vector) and self.space == other.space and self.entries == other.entries

    def __repr__(self):
        terms = ["%s*%s" % (c, self.space.label(i)) for i, c in sorted(self.entries.items())]
        return "Vector(%s)" % (" + ".join(terms) or "0")


# --------------------------------------------------------------------------
# maps


class Stage:
    """Common interface of things that can be applied basis vector by basis vector."""

    source: BasedSpace
    target: BasedSpace

    def _apply(self, v: dict) -> dict:
        raise NotImplementedError

    def _column(self, j: int):
        return self._apply({j: 1}).items()

    @property
    def is_basis_map(self) -> bool:
        return False

    def _apply_idx(self, idx: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, v):
        return apply(self, v)


class LinMap(Stage):
    """Immutable sparse linear map ``source -> target``, stored by columns.

    ``cols[j]`` is a tuple of ``(i, value)`` pairs sorted by ``i`` with no
    zero values; columns that vanish are absent.
    """

    __slots__ = ("source", "target", "field", "cols", "_img")

    def __init__(self, source, target, entries=(), field=QQ):
        source, target = _as_space(source), _as_space(target)
        seen = {}
        for i, j, v in entries:
            if not (0 <= i < target.dim and 0 <= j < source.dim):
                raise DimensionMismatch("entry (%d, %d)" % (i, j), (target.dim, source.dim), (i + 1, j + 1))
            if (i, j) in seen:
                raise ValueError("duplicate entry at (%d, %d)" % (i, j))
            seen[i, j] = field(v)
        cols = {}
        for (i, j), v in seen.items():
            if v:
                cols.setdefault(j, {})[i] = v
        self._init(source, target, field, {j: tuple(sorted(c.items())) for j, c in cols.items()})

    def _init(self, source, target, field, cols):
        self.source = source
        self.target = target
        self.field = field
        self.cols = cols
        self._img = None

    @classmethod
    def _make(cls, source, target, field, cols) -> "LinMap":
        f = cls.__new__(cls)
        f._init(source, target, field, cols)
        return f

    @classmethod
    def from_columns(cls, source, target, columns: Mapping[int, Mapping[int, object]], field=QQ) -> "LinMap":
        """Build from ``{j: {i: value}}``; values are coerced, zeros dropped."""
        source, target = _as_space(source), _as_space(target)
        cols = {}
        for j, col in columns.items():
            if not 0 <= j < source.dim:
                raise DimensionMismatch("column %d" % j, source.dim, j + 1)
            c = []
            for i, v in col.items():
                if not 0 <= i < target.dim:
                    raise DimensionMismatch("row %d" % i, target.dim, i + 1)
                v = field(v)
                if v:
                    c.append((i, v))
            if c:
                cols[j] = tuple(sorted(c))
        return cls._make(source, target, field, cols)

    @classmethod
    def from_function(cls, source, target, fn, field=QQ) -> "LinMap":
        """``fn(j)`` returns the image of basis vector ``j`` as ``{i: value}``."""
        source = _as_space(source)
        return cls.from_columns(source, target, {j: fn(j) for j in range(source.dim)}, field)

    @classmethod
    def from_basis_function(cls, source, target, fn, field=QQ) -> "LinMap":
        """``fn(j)`` returns a target basis index (or None for zero)."""
        source = _as_space(source)
        one = field.one
        cols = {}
        for j in range(source.dim):
            i = fn(j)
            if i is not None:
                cols[j] = {i: one}
        return cls.from_columns(source, target, cols, field)

    def _column(self, j: int):
        return self.cols.get(j, ())

    def column(self, j: int) -> dict:
        return dict(self.cols.get(j, ()))

    def entries(self) -> list:
        """All ``(row, col, value)`` triples in canonical (row, col) order."""
        out = [(i, j, v) for j, col in self.cols.items() for i, v in col]
        out.sort(key=lambda e: (e[0], e[1]))
        return out

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def _apply(self, v: dict) -> dict:
        acc = {}
        cols = self.cols
        for j, c in v.items():
            for i, a in cols.get(j, ()):
                acc[i] = acc.get(i, 0) + c * a
        return _clean(acc)

    @property
    def is_basis_map(self) -> bool:
        return self.basis_image() is not None

    def basis_image(self):
        """Index array sending each basis vector to its image basis vector.

        Defined only when every column is zero or a single entry equal to
        one; then the map is a (partial) function on bases, and ``-1`` marks
        columns that vanish. Returns None otherwise.
        """
        if self._img is None:
            img = np.full(self.source.dim, -1, dtype=np.int64)
            ok = True
            one = self.field.one
            for j, col in self.cols.items():
                if len(col) != 1 or col[0][1] != one:
                    ok = False
                    break
                img[j] = col[0][0]
            self._img = img if ok else False
        return self._img if self._img is not False else None

    def _apply_idx(self, idx):
        img = self.basis_image()
        return np.where(idx < 0, -1, img[np.maximum(idx, 0)])

    def to_dense(self) -> list:
        zero = self.field.zero
        rows = [[zero] * self.source.dim for _ in range(self.target.dim)]
        for j, col in self.cols.items():
            for i, v in col:
                rows[i][j] = v
        return rows

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.field == other.field
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.source, self.target, len(self.cols)))

    def __matmul__(self, other):
        return compose(self, other)

    def __getstate__(self):
        return (self.source, self.target, self.field, self.cols)

    def __setstate__(self, state):
        self._init(*state)

    def __repr__(self):
        return "LinMap(%d -> %d, nnz=%d)" % (self.source.dim, self.target.dim, self.nnz)


class Swap(Stage):
    """The transposition ``A (x) B -> B (x) A``, applied by index arithmetic."""

    def __init__(self, a: BasedSpace, b: BasedSpace):
        self.a, self.b = a, b
        self.source = a * b
        self.target = b * a

    def _column(self, j: int):
        i, k = divmod(j, self.b.dim)
        return ((k * self.a.dim + i, 1),)

    def _apply(self, v: dict) -> dict:
        da, db = self.a.dim, self.b.dim
        out = {}
        for j, c in v.items():
            i, k = divmod(j, db)
            out[k * da + i] = c
        return out

    @property
    def is_basis_map(self) -> bool:
        return True

    def _apply_idx(self, idx):
        i, k = np.divmod(idx, self.b.dim)
        return np.where(idx < 0, -1, k * self.a.dim + i)

    def __repr__(self):
        return "Swap(%r, %r)" % (self.a, self.b)


class Id(Stage):
    """Identity on a space, never materialized."""

    def __init__(self, space: BasedSpace):
        self.source = self.target = space

    def _column(self, j: int):
        return ((j, 1),)

    def _apply(self, v: dict) -> dict:
        return dict(v)

    @property
    def is_basis_map(self) -> bool:
        return True

    def _apply_idx(self, idx):
        return idx


class Local(Stage):
    """``1_left (x) inner (x) 1_right`` without materializing it."""

    def __init__(self, inner: Stage, left: BasedSpace = UNIT, right: BasedSpace = UNIT):
        self.inner = inner
        self.left, self.right = left, right
        self.source = left * inner.source * right
        self.target = left * inner.target * right

    def _apply(self, v: dict) -> dict:
        s, t, r = self.inner.source.dim, self.inner.target.dim, self.right.dim
        sr, tr = s * r, t * r
        acc = {}
        col = self.inner._column
        for idx, c in v.items():
            l, rest = divmod(idx, sr)
            m, rr = divmod(rest, r)
            base = l * tr + rr
            for i, a in col(m):
                k = base + i * r
                acc[k] = acc.get(k, 0) + c * a
        return _clean(acc)

    @property
    def is_basis_map(self) -> bool:
        return self.inner.is_basis_map

    def _apply_idx(self, idx):
        s, t, r = self.inner.source.dim, self.inner.target.dim, self.right.dim
        l, rest = np.divmod(idx, s * r)
        m, rr = np.divmod(rest, r)
        img = self.inner._apply_idx(np.where(idx < 0, -1, m))
        return np.where(img < 0, -1, l * (t * r) + img * r + rr)

    def __repr__(self):
        return "Local(%r, left=%d, right=%d)" % (self.inner, self.left.dim, self.right.dim)


class Pipeline(Stage):
    """Stages applied in order (first stage first)."""

    def __init__(self, stages):
        flat = []
        for st in stages:
            if isinstance(st, Pipeline):
                flat.extend(st.stages)
            else:
                flat.append(st)
        if not flat:
            raise ValueError("empty pipeline")
        for a, b in zip(flat, flat[1:]):
            if a.target != b.source:
                raise SpaceMismatch("cannot feed %r into %r" % (a.target, b.source))
        self.stages = tuple(flat)
        self.source = flat[0].source
        self.target = flat[-1].target

    def _apply(self, v: dict) -> dict:
        for st in self.stages:
            if not v:
                return v
            v = st._apply(v)
        return v

    @property
    def is_basis_map(self) -> bool:
        return all(st.is_basis_map for st in self.stages)

    def _apply_idx(self, idx):
        for st in self.stages:
            idx = st._apply_idx(idx)
        return idx

    def __repr__(self):
        return "Pipeline(%d stages, %d -> %d)" % (len(self.stages), self.source.dim, self.target.dim)


# --------------------------------------------------------------------------
# operations


def apply(f: Stage, v):
    """Exact image of ``v`` under ``f``.

    ``v`` is a ``Vector`` over ``f.source`` or a plain ``{index: scalar}``
    dict; the result has the same kind.
    """
    if isinstance(v, Vector):
        if v.space.dim != f.source.dim:
            raise DimensionMismatch("apply", f.source.dim, v.space.dim)
        return Vector(f.target, f._apply(v.entries))
    for i in v:
        if not 0 <= i < f.source.dim:
            raise DimensionMismatch("apply: vector index %d" % i, f.source.dim, i + 1)
    return f._apply(_clean(dict(v)))


def identity(space, field=QQ) -> LinMap:
    space = _as_space(space)
    one = field.one
    return LinMap._make(space, space, field, {j: ((j, one),) for j in range(space.dim)})


def zero_map(source, target, field=QQ) -> LinMap:
    return LinMap._make(_as_space(source), _as_space(target), field, {})


def transposition(a, b, field=QQ) -> LinMap:
    """``tau: A (x) B -> B (x) A``, ``x (x) y -> y (x) x``."""
    a, b = _as_space(a), _as_space(b)
    return materialize(Swap(a, b), field)


def recast(f: LinMap, source: BasedSpace = None, target: BasedSpace = None) -> LinMap:
    """Same matrix, reinterpreted between spaces of equal dimension."""
    source = f.source if source is None else source
    target = f.target if target is None else target
    if source.dim != f.source.dim:
        raise DimensionMismatch("recast source", f.source.dim, source.dim)
    if target.dim != f.target.dim:
        raise DimensionMismatch("recast target", f.target.dim, target.dim)
    return LinMap._make(source, target, f.field, f.cols)


def materialize(f: Stage, field=QQ) -> LinMap:
    if isinstance(f, LinMap):
        return f
    one = field.one
    cols = {}
    for j in range(f.source.dim):
        col = f._apply({j: one})
        if col:
            cols[j] = tuple(sorted(col.items()))
    return LinMap._make(f.source, f.target, field, cols)


def compose(f: Stage, g: Stage) -> LinMap:
    """``f o g`` as a materialized LinMap. Requires ``g.target == f.source``."""
    if g.target != f.source:
        raise SpaceMismatch("compose: %r is not %r" % (g.target, f.source))
    field = getattr(g, "field", None) or getattr(f, "field", None) or QQ
    if isinstance(f, LinMap) and isinstance(g, LinMap) and f.field != g.field:
        raise ValueError("compose: fields differ (%r, %r)" % (f.field, g.field))
    if not isinstance(g, LinMap):
        g = materialize(g, field)
    cols = {}
    for j, col in g.cols.items():
        out = f._apply(dict(col))
        if out:
            cols[j] = tuple(sorted(out.items()))
    return LinMap._make(g.source, f.target, field, cols)


def tensor(*maps: LinMap) -> LinMap:
    """Kronecker product under row-major basis ordering."""
    if not maps:
        return identity(UNIT)
    out = maps[0]
    for g in maps[1:]:
        out = _kron(out, g)
    return out


def _kron(f: LinMap, g: LinMap) -> LinMap:
    if f.field != g.field:
        raise ValueError("tensor: fields differ (%r, %r)" % (f.field, g.field))
    gs, gt = g.source.dim, g.target.dim
    cols = {}
    for j1, c1 in f.cols.items():
        for j2, c2 in g.cols.items():
            cols[j1 * gs + j2] = tuple((i1 * gt + i2, a * b) for i1, a in c1 for i2, b in c2)
    return LinMap._make(f.source * g.source, f.target * g.target, f.field, cols)


def local(f: Stage, left: BasedSpace = UNIT, right: BasedSpace = UNIT) -> Stage:
    """Lazy ``1_left (x) f (x) 1_right``."""
    if not left.factors and not right.factors:
        return f
    if isinstance(f, Pipeline):
        return Pipeline([local(st, left, right) for st in f.stages])
    if isinstance(f, Local):
        return Local(f.inner, left * f.left, f.right * right)
    return Local(f, left, right)


def chain(*maps: Stage) -> Stage:
    """Lazy composite in mathematical order: ``chain(f, g, h) = f o g o h``."""
    if len(maps) == 1:
        return maps[0]
    return Pipeline(reversed(maps))


# --------------------------------------------------------------------------
# exhaustive comparison


def _generic_scan(lhs, rhs, start, stop, one):
    for j in range(start, stop):
        a = lhs._apply({j: one})
        b = rhs._apply({j: one})
        if a != b:
            return j, a, b
    return None


def _scan_task(args):
    return _generic_scan(*args)


def find_difference(lhs: Stage, rhs: Stage, field=QQ, jobs: int = 1, chunk: int = 1 << 16):
    """First basis vector (ascending) on which ``lhs`` and ``rhs`` differ.

    Returns ``None`` or ``(j, lhs_image, rhs_image)`` with images as sparse
    dicts. When both sides are basis maps the scan is vectorized over index
    arrays; otherwise each basis vector is pushed through both chains.
    """
    if lhs.source != rhs.source or lhs.target != rhs.target:
        raise SpaceMismatch(
            "cannot compare %r -> %r with %r -> %r" % (lhs.source, lhs.target, rhs.source, rhs.target)
        )
    n = lhs.source.dim
    one = field.one
    if lhs.is_basis_map and rhs.is_basis_map:
        for start in range(0, n, chunk):
            idx = np.arange(start, min(n, start + chunk), dtype=np.int64)
            bad = np.nonzero(lhs._apply_idx(idx) != rhs._apply_idx(idx))[0]
            if bad.size:
                j = int(idx[bad[0]])
                return j, lhs._apply({j: one}), rhs._apply({j: one})
        return None
    if jobs > 1 and n >= 2 * jobs:
        step = -(-n // (jobs * 4))
        tasks = [(lhs, rhs, s, min(n, s + step), one) for s in range(0, n, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = [h for h in pool.map(_scan_task, tasks) if h is not None]
        return min(hits, key=lambda h: h[0]) if hits else None
    return _generic_scan(lhs, rhs, 0, n, one)
