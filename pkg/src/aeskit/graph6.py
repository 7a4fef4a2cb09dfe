"""graph6 encoding (the plain-text format used by nauty and friends).

Only the two size forms reachable for n <= 258047 are handled: one byte for
n <= 62, otherwise ``~`` followed by three 6-bit chunks.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

HEADER = b">>graph6<<"
MAX_N = 258047


def _size_field(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def encode(G: Graph) -> bytes:
    n = G.n
    if not 1 <= n <= MAX_N:
        raise Graph6Error(f"graph6 handles 1 <= n <= {MAX_N}, got {n}", 0)
    out = bytearray(_size_field(n))
    acc = nbits = 0
    rows = G.rows
    for j in range(1, n):
        row = rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.rstrip(b"\r\n")
    pos = len(HEADER) if data.startswith(HEADER) else 0

    def byte(i: int) -> int:
        if i >= len(data):
            raise Graph6Error("unexpected end of input", i)
        b = data[i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the printable range 63..126", i)
        return b - 63

    first = byte(pos)
    if first < 63:
        n, pos = first, pos + 1
    else:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            raise Graph6Error("graphs with n > 258047 are not supported", pos + 1)
        n = byte(pos + 1) << 12 | byte(pos + 2) << 6 | byte(pos + 3)
        pos += 4
    if n < 1:
        raise Graph6Error("graph with no vertices", pos - 1)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(data) - pos < nbytes:
        raise Graph6Error(f"bit vector truncated: need {nbytes} bytes, have {len(data) - pos}", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after the bit vector", pos + nbytes)
    for i in range(pos, pos + nbytes):
        byte(i)
    # the whole bit vector as one integer, first bit most significant
    packed = 0
    for c in data[pos:]:
        packed = packed << 6 | (c - 63)
    bits = packed >> (6 * nbytes - nbits)
    rows = [0] * n
    b = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            b -= 1
    return Graph._symmetric(n, tuple(rows))


def read_file(path: str) -> list[Graph]:
    """Every non-empty line of a graph6 file."""
    with open(path, "rb") as fh:
        return [decode(line) for line in fh.read().splitlines() if line.strip()]


def write_file(path: str, graphs: list[Graph]) -> None:
    with open(path, "wb") as fh:
        for G in graphs:
            fh.write(encode(G) + b"\n")
