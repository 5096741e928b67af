"""graph6 codec, bit-exact per the standard format.

Short form only (n <= 62): one header byte chr(63+n), then the upper
triangle in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
MSB-first into 6-bit groups, zero-padded, each group offset by 63 into the
printable range '?'..'~'.  Decoding is strict: bad header bytes, wrong
record length, and nonzero padding bits are all rejected with the byte
offset of the problem.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Graph

MAX_SHORT_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 record; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


def _triangle_bit_count(n: int) -> int:
    return n * (n - 1) // 2


def from_graph6(text: str) -> Graph:
    """Decode one graph6 record (no trailing newline)."""
    data = text.encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty record", 0)
    head = data[0]
    if head == 126:  # '~' starts the long form
        raise Graph6Error("long-form header (n > 62) unsupported", 0)
    if not 63 <= head <= 125:
        raise Graph6Error(f"invalid header byte {head!r}", 0)
    n = head - 63
    nbits = _triangle_bit_count(n)
    nbytes = (nbits + 5) // 6
    if len(data) - 1 < nbytes:
        raise Graph6Error(f"record truncated: need {nbytes} edge bytes, got {len(data) - 1}", len(data))
    if len(data) - 1 > nbytes:
        raise Graph6Error("trailing garbage after edge bytes", 1 + nbytes)
    rows = [0] * n
    bit_index = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for byte_pos in range(nbytes):
        raw = data[1 + byte_pos]
        if not 63 <= raw <= 126:
            raise Graph6Error(f"invalid edge byte {raw!r}", 1 + byte_pos)
        group = raw - 63
        for k in range(6):
            bit = group >> (5 - k) & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bit", 1 + byte_pos)
            elif bit:
                i, j = pairs[bit_index]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph of order <= 62 as a canonical short-form record."""
    if g.n > MAX_SHORT_N:
        raise ValueError(f"graph6 short form supports n <= {MAX_SHORT_N}, got {g.n}")
    out = [chr(63 + g.n)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        group <<= 6 - filled
        out.append(chr(63 + group))
    return "".join(out)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (line_number, record) from graph6 file content.

    Blank lines and '>'-prefixed banner lines (as emitted by some
    generators) are skipped; line numbers are 1-based.
    """
    for lineno, raw in enumerate(lines, start=1):
        record = raw.strip()
        if not record or record.startswith(">"):
            continue
        yield lineno, record


def read_graph6_file(path: str) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return [from_graph6(rec) for _, rec in iter_graph6_lines(fh)]


def write_graph6_file(path: str, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
