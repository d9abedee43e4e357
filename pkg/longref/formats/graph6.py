"""graph6 codec.

Vertex count N(n) is one byte for n <= 62, '~' plus three bytes for n <= 258047,
and '~~' plus six bytes beyond that. The adjacency part packs the upper triangle
in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...) six bits per byte,
padded with zeros, each byte offset by 63.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterator, Union

import numpy as np

from longref.errors import Graph6Error
from longref.graph import Graph, build_graph


HEADER = ">>graph6<<"
_MIN, _MAX = 63, 126
_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)


def _decode_n(data: bytes, base: int) -> tuple[int, int]:
    """Returns (n, length of the N(n) field)."""
    if len(data) == 0:
        raise Graph6Error("empty graph6 string", offset=base)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    field = data[start:start + width]
    if len(field) < width:
        raise Graph6Error("truncated vertex count", offset=base + len(data))
    n = 0
    for byte in field:
        n = (n << 6) | (byte - 63)
    return n, start + width


def parse_graph6(text: Union[str, bytes]) -> Graph:
    if isinstance(text, str):
        try:
            data = text.strip().encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6Error("non-ascii character", offset=e.start)
    else:
        data = text.strip()

    base = 0
    if data.startswith(HEADER.encode()):
        base = len(HEADER)
        data = data[base:]

    for i, byte in enumerate(data):
        if not (_MIN <= byte <= _MAX):
            raise Graph6Error(f"byte {byte!r} outside 63..126", offset=base + i)

    n, header_len = _decode_n(data, base)
    num_bits = n * (n - 1) // 2
    expected = header_len + (num_bits + 5) // 6
    if len(data) < expected:
        raise Graph6Error(
            f"too short for n={n}: expected {expected} bytes, got {len(data)}",
            offset=base + len(data),
        )
    if len(data) > expected:
        raise Graph6Error(f"trailing garbage after n={n} graph", offset=base + expected)

    body = np.frombuffer(data[header_len:], dtype=np.uint8) - 63
    bits = np.unpackbits(body[:, None], axis=1)[:, 2:].reshape(-1)[:num_bits]
    rows, cols = np.tril_indices(n, -1)
    hits = np.flatnonzero(bits)
    return build_graph(n, zip(cols[hits].tolist(), rows[hits].tolist()))


def write_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        prefix = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))

    matrix = np.zeros((n, n), dtype=np.uint8)
    for u, v in g.edges():
        matrix[u, v] = matrix[v, u] = 1
    rows, cols = np.tril_indices(n, -1)
    bits = matrix[rows, cols]
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    body = "".join(chr(int(x) + 63) for x in bits.astype(np.int64) @ _WEIGHTS)
    return (HEADER if header else "") + prefix + body


def read_graph6_lines(lines: Iterator[str]) -> Iterator[Graph]:
    """One graph per non-empty line; errors carry the line number."""
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as e:
            raise Graph6Error(f"line {lineno}: {e.reason}", offset=e.offset) from e


def read_graph6_file(path: Union[str, Path]) -> list[Graph]:
    with open(path, "r") as f:
        return list(read_graph6_lines(iter(f)))


def write_graph6_file(graphs: list[Graph], path: Union[str, Path]):
    with open(path, "w") as f:
        for g in graphs:
            f.write(write_graph6(g) + "\n")
