"""Finite groups as explicit Cayley tables.

Pure integer-table code; used both by the Hopf algebra constructors and
by the set-theoretic oracle.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass


class GroupTableError(ValueError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg if witness is None else "%s (witness %s)" % (msg, witness))


@dataclass(frozen=True)
class GroupTable:
    """Elements by name, multiplication by index; identity and inverses are inferred."""

    name: str
    elements: tuple
    mult: tuple
    identity: int
    inverse: tuple

    @classmethod
    def from_table(cls, elements, mult, name="G") -> "GroupTable":
        elements = tuple(str(e) for e in elements)
        n = len(elements)
        if n == 0:
            raise GroupTableError("group has no elements")
        if len(set(elements)) != n:
            raise GroupTableError("repeated element names")
        pos = {e: i for i, e in enumerate(elements)}
        rows = []
        if len(mult) != n:
            raise GroupTableError("mult has %d rows, expected %d" % (len(mult), n))
        for a, row in enumerate(mult):
            if len(row) != n:
                raise GroupTableError("mult row %d has %d entries, expected %d" % (a, len(row), n))
            out = []
            for b, c in enumerate(row):
                if isinstance(c, str):
                    if c not in pos:
                        raise GroupTableError("unknown element %r" % c, (elements[a], elements[b]))
                    c = pos[c]
                if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < n:
                    raise GroupTableError("mult entry out of range", (a, b, c))
                out.append(c)
            rows.append(tuple(out))
        mult = tuple(rows)

        for a, b, c in itertools.product(range(n), repeat=3):
            if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                raise GroupTableError(
                    "not associative: (%s*%s)*%s != %s*(%s*%s)" % ((elements[a], elements[b], elements[c]) * 2),
                    (elements[a], elements[b], elements[c]),
                )
        ids = [e for e in range(n) if all(mult[e][x] == x == mult[x][e] for x in range(n))]
        if not ids:
            raise GroupTableError("no identity element")
        e = ids[0]
        inverse = []
        for a in range(n):
            inv = [b for b in range(n) if mult[a][b] == e and mult[b][a] == e]
            if not inv:
                raise GroupTableError("no inverse", (elements[a],))
            inverse.append(inv[0])
        return cls(name, elements, mult, e, tuple(inverse))

    @classmethod
    def from_json(cls, text, name="G") -> "GroupTable":
        """Parse ``{"elements": [...], "mult": [[...], ...]}``."""
        data = json.loads(text) if isinstance(text, str) else text
        if not isinstance(data, dict) or "elements" not in data or "mult" not in data:
            raise GroupTableError('expected an object with "elements" and "mult"')
        return cls.from_table(data["elements"], data["mult"], data.get("name", name))

    def to_json(self) -> dict:
        return {"name": self.name, "elements": list(self.elements), "mult": [list(r) for r in self.mult]}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.mult[a][b] == self.mult[b][a] for a in range(n) for b in range(n))


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupTableError("Z_n needs n >= 1")
    names = ["e"] + ["a" if i == 1 else "a^%d" % i for i in range(1, n)]
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable.from_table(names, mult, "Z%d" % n)


def dihedral(n: int) -> GroupTable:
    """Symmetries of the n-gon (order 2n); ``s r = r^-1 s``."""
    if n < 1:
        raise GroupTableError("D_n needs n >= 1")

    def rname(i):
        return "" if i == 0 else ("r" if i == 1 else "r^%d" % i)

    elems = [(0, i) for i in range(n)] + [(1, i) for i in range(n)]
    names = [("s" + rname(i)) if f else (rname(i) or "e") for f, i in elems]
    pos = {x: k for k, x in enumerate(elems)}

    def mul(x, y):
        (a, i), (b, k) = x, y
        return ((a + b) % 2, ((-i if b else i) + k) % n)

    mult = [[pos[mul(x, y)] for y in elems] for x in elems]
    return GroupTable.from_table(names, mult, "D%d" % n)


def _cycle_name(perm) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i + 1)
            i = perm[i]
        cycles.append("(" + "".join(str(c) for c in cyc) + ")")
    return "".join(cycles) or "e"


def symmetric(n: int) -> GroupTable:
    """Permutations of {1..n}; ``g*h = g o h`` (apply h first)."""
    if not 1 <= n <= 5:
        raise GroupTableError("S_n builtin supports 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    pos = {p: k for k, p in enumerate(perms)}
    mult = [[pos[tuple(g[h[i]] for i in range(n))] for h in perms] for g in perms]
    return GroupTable.from_table([_cycle_name(p) for p in perms], mult, "S%d" % n)


_BUILTIN = re.compile(r"^([ZCSD])(\d+)$", re.IGNORECASE)


def builtin(name: str) -> GroupTable:
    """``Z3``, ``C4``, ``S3``, ``D4`` (dihedral of order 8), ..."""
    m = _BUILTIN.match(name.strip())
    if not m:
        raise GroupTableError("unknown builtin group %r" % name)
    kind, n = m.group(1).upper(), int(m.group(2))
    if kind in "ZC":
        return cyclic(n)
    if kind == "S":
        return symmetric(n)
    return dihedral(n)
