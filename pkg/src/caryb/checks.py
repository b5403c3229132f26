"""Turn exhaustive basis comparisons into report entries."""

from __future__ import annotations

from caryb.linalg import Stage, find_difference
from caryb.report import Check

# Worker processes for generic (non basis-map) scans; set by the CLI.
JOBS = 1


def set_jobs(n: int):
    global JOBS
    JOBS = max(1, int(n))


def format_vector(space, vec: dict, field) -> dict:
    return {space.label(i): field.format(c) for i, c in sorted(vec.items())}


def check_identity(check_id: str, law: str, lhs: Stage, rhs: Stage, field) -> Check:
    """``lhs == rhs`` verified on every basis vector of the common source."""
    hit = find_difference(lhs, rhs, field, jobs=JOBS)
    n = lhs.source.dim
    if hit is None:
        return Check(check_id, law, True, checked=n)
    j, a, b = hit
    witness = {
        "index": j,
        "basis": lhs.source.label(j),
        "lhs": format_vector(lhs.target, a, field),
        "rhs": format_vector(rhs.target, b, field),
    }
    return Check(check_id, law, False, witness, checked=n)
