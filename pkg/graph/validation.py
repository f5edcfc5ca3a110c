# structural checks on a materialized graph
from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, Field

from graph.model import Graph

class ViolationKind(str, Enum):
    OUT_OF_RANGE = "out_of_range"
    UNSORTED = "unsorted"
    SELF_LOOP = "self_loop"
    DUPLICATE = "duplicate"
    ASYMMETRIC = "asymmetric"
    DEGREE = "degree"

class Violation(BaseModel):
    kind: ViolationKind
    node: int
    other: int | None = None
    detail: str = ""

class ValidationReport(BaseModel):
    n: int
    m: int
    declared_degree: int | None
    is_regular: bool
    degree: int | None = Field(default=None, description="Common degree when every node has the same degree.")
    violations: list[Violation] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}

def validate(graph: Graph, max_violations: int | None = 1000) -> ValidationReport:
    """
    Confirms symmetry, simplicity, sorted rows and (if declared) d-regularity.
    Never raises; every defect is listed (up to max_violations per kind).
    """
    n = graph.n
    offsets, nbrs = graph.offsets, graph.neighbor_array.astype(np.int64)
    degrees = graph.degrees()
    src = np.repeat(np.arange(n, dtype=np.int64), degrees)
    violations: list[Violation] = []

    def _add(kind: ViolationKind, nodes, others, detail: str) -> None:
        for count, (a, b) in enumerate(zip(nodes, others)):
            if max_violations is not None and count >= max_violations:
                break
            violations.append(Violation(kind=kind, node=int(a), other=None if b is None else int(b), detail=detail))

    bad = (nbrs < 0) | (nbrs >= n)
    if bad.any():
        _add(ViolationKind.OUT_OF_RANGE, src[bad], nbrs[bad], "neighbor index outside [0, n)")
    ok_src, ok_dst = src[~bad], nbrs[~bad]

    loops = ok_src == ok_dst
    if loops.any():
        _add(ViolationKind.SELF_LOOP, ok_src[loops], ok_dst[loops], "node lists itself as a neighbor")

    # rows are stored sorted, so in-row duplicates and order defects are adjacent
    same_row = src[1:] == src[:-1]
    if nbrs.size > 1:
        dup = same_row & (nbrs[1:] == nbrs[:-1])
        if dup.any():
            _add(ViolationKind.DUPLICATE, src[1:][dup], nbrs[1:][dup], "parallel edge")
        unsorted = same_row & (nbrs[1:] < nbrs[:-1])
        if unsorted.any():
            _add(ViolationKind.UNSORTED, src[1:][unsorted], nbrs[1:][unsorted], "row not ascending")

    # symmetry: the multiset of (u, v) must equal the multiset of (v, u)
    forward = ok_src * max(n, 1) + ok_dst
    backward = ok_dst * max(n, 1) + ok_src
    f_keys, f_counts = np.unique(forward, return_counts=True)
    b_keys, b_counts = np.unique(backward, return_counts=True)
    missing = ~np.isin(f_keys, b_keys)
    if not missing.any():
        common_f = f_counts
        common_b = b_counts[np.searchsorted(b_keys, f_keys)]
        missing = common_f != common_b
    if missing.any():
        keys = f_keys[missing]
        _add(ViolationKind.ASYMMETRIC, keys // max(n, 1), keys % max(n, 1), "edge present in one direction only")

    regular = bool(degrees.size) and bool(np.all(degrees == degrees[0]))
    d = graph.regular_degree
    if d is not None:
        wrong = np.flatnonzero(degrees != d)
        if wrong.size:
            _add(ViolationKind.DEGREE, wrong, [None] * wrong.size, f"degree differs from declared d={d}")

    return ValidationReport(
        n=n,
        m=graph.m,
        declared_degree=d,
        is_regular=regular,
        degree=int(degrees[0]) if regular else None,
        violations=violations,
    )
