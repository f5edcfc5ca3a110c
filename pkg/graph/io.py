# graph file formats
# - edge list (text): "n m [d]" header, then m lines "u v" with u < v
# - binary: b"XPGR", version u32, n u64, m u64, CSR offsets (n+1 x u64), neighbors (2m x u32), little-endian
# - matching (text, M_{n,d}): "matching n d" header, then nd/2 lines "a ja b jb", one per
#   matched pair of half-nodes (a, ja) - (b, jb), smaller flat index first
from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from common.logger import logger
from core.errors import FormatError
from graph.model import Graph, MatchingGraph

BINARY_MAGIC = b"XPGR"
BINARY_VERSION = 1
_HEADER = struct.Struct("<4sIQQ")

def write_edge_list(graph: Graph, path: str | Path) -> Path:
    path = Path(path)
    edges = graph.edges()
    header = f"{graph.n} {graph.m}" + (f" {graph.regular_degree}" if graph.regular_degree is not None else "")
    with path.open("w", encoding="ascii", newline="\n") as f:
        f.write(header + "\n")
        if edges.size:
            np.savetxt(f, edges, fmt="%d", delimiter=" ", newline="\n")
    logger.info(f"[io] wrote edge list {path} (n={graph.n}, m={graph.m})")
    return path

def _first_bad_line(body: str, width: int, first_line: int) -> tuple[int, str] | None:
    for lineno, line in enumerate(body.splitlines(), start=first_line):
        parts = line.split()
        if parts and (len(parts) != width or not all(p.lstrip("-").isdigit() for p in parts)):
            return lineno, line
    return None

def _parse_rows(path: Path, body: str, width: int, first_line: int) -> np.ndarray:
    """Whitespace-separated integer rows of exactly `width` fields; FormatError names the bad line."""
    tokens = body.split()
    if not tokens:
        return np.empty((0, width), dtype=np.int64)
    if len(tokens) % width == 0:
        try:
            return np.array(tokens, dtype=np.int64).reshape(-1, width)
        except ValueError:
            pass
    bad = _first_bad_line(body, width, first_line)
    where = f"line {bad[0]}: {bad[1].strip()!r}" if bad else f"{len(tokens)} tokens"
    logger.error(f"[io] malformed rows in {path}, {where}")
    raise FormatError(f"{path}: expected {width} integers per line, {where}")

def read_edge_list(path: str | Path) -> Graph:
    path = Path(path)
    with path.open("r", encoding="ascii") as f:
        head = f.readline().split()
        if len(head) not in (2, 3):
            raise FormatError(f"{path}: header must be 'n m [d]', got {head!r}")
        try:
            n, m = int(head[0]), int(head[1])
            d = int(head[2]) if len(head) == 3 else None
        except ValueError as e:
            raise FormatError(f"{path}: non-integer header {head!r}") from e
        body = f.read()
    edges = _parse_rows(path, body, width=2, first_line=2)
    if edges.shape[0] != m:
        raise FormatError(f"{path}: header declares m={m} but found {edges.shape[0]} edges")
    if m and np.any(edges[:, 0] >= edges[:, 1]):
        raise FormatError(f"{path}: every edge line must satisfy u < v")
    graph = Graph.from_edges(n, edges, d)
    if graph.m != m:
        raise FormatError(f"{path}: duplicate edges in file (m={m}, distinct={graph.m})")
    return graph

def write_binary(graph: Graph, path: str | Path) -> Path:
    path = Path(path)
    with path.open("wb") as f:
        f.write(_HEADER.pack(BINARY_MAGIC, BINARY_VERSION, graph.n, graph.m))
        f.write(graph.offsets.astype("<u8").tobytes())
        f.write(graph.neighbor_array.astype("<u4").tobytes())
    logger.info(f"[io] wrote binary graph {path} (n={graph.n}, m={graph.m})")
    return path

def read_binary(path: str | Path) -> Graph:
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < _HEADER.size:
        raise FormatError(f"{path}: truncated header")
    magic, version, n, m = _HEADER.unpack_from(raw, 0)
    if magic != BINARY_MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}")
    if version != BINARY_VERSION:
        raise FormatError(f"{path}: unsupported version {version}")
    expected = _HEADER.size + 8 * (n + 1) + 4 * 2 * m
    if len(raw) != expected:
        raise FormatError(f"{path}: expected {expected} bytes, found {len(raw)}")
    offsets = np.frombuffer(raw, dtype="<u8", count=n + 1, offset=_HEADER.size).astype(np.int64)
    neighbors = np.frombuffer(raw, dtype="<u4", count=2 * m, offset=_HEADER.size + 8 * (n + 1)).astype(np.int32)
    graph = Graph(offsets, neighbors)
    # the binary header has no degree slot; a uniform degree is recovered from the rows
    if graph.is_regular():
        graph = Graph(graph.offsets, graph.neighbor_array, int(graph.degrees()[0]))
    return graph

def load_graph(path: str | Path) -> Graph:
    """Reads either format, sniffing the binary magic."""
    path = Path(path)
    with path.open("rb") as f:
        magic = f.read(len(BINARY_MAGIC))
    return read_binary(path) if magic == BINARY_MAGIC else read_edge_list(path)

def save_graph(graph: Graph, path: str | Path, fmt: str | None = None) -> Path:
    """fmt: "edgelist" | "binary"; inferred from the suffix (.xpgr / .bin = binary) when None."""
    path = Path(path)
    fmt = fmt or ("binary" if path.suffix in (".xpgr", ".bin") else "edgelist")
    if fmt == "binary":
        return write_binary(graph, path)
    if fmt == "edgelist":
        return write_edge_list(graph, path)
    raise FormatError(f"unknown graph format {fmt!r}")

def write_matching(mg: MatchingGraph, path: str | Path) -> Path:
    path = Path(path)
    with path.open("w", encoding="ascii", newline="\n") as f:
        f.write(f"matching {mg.n} {mg.d}\n")
        for (a, ja), (b, jb) in mg.pairs():
            f.write(f"{a} {ja} {b} {jb}\n")
    logger.info(f"[io] wrote matching graph {path} (n={mg.n}, d={mg.d})")
    return path

def read_matching(path: str | Path) -> MatchingGraph:
    path = Path(path)
    with path.open("r", encoding="ascii") as f:
        head = f.readline().split()
        if len(head) != 3 or head[0] != "matching":
            raise FormatError(f"{path}: header must be 'matching n d', got {head!r}")
        try:
            n, d = int(head[1]), int(head[2])
        except ValueError as e:
            raise FormatError(f"{path}: non-integer header {head!r}") from e
        body = f.read()
    rows = _parse_rows(path, body, width=4, first_line=2)
    if 2 * rows.shape[0] != n * d:
        raise FormatError(f"{path}: n={n}, d={d} needs {n * d // 2} pairs, found {rows.shape[0]}")
    if rows.size and (rows[:, [0, 2]].min() < 0 or rows[:, [0, 2]].max() >= n
                      or rows[:, [1, 3]].min() < 0 or rows[:, [1, 3]].max() >= d):
        raise FormatError(f"{path}: half-node outside groups [0, {n}) x slots [0, {d})")
    pairs = [((int(a), int(ja)), (int(b), int(jb))) for a, ja, b, jb in rows]
    try:
        return MatchingGraph.from_pairs(n, d, pairs)
    except ValueError as e:
        raise FormatError(f"{path}: {e}") from e
