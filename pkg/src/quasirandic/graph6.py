"""graph6 reader and writer (orders 1..64).

Only the undirected graph6 variant is handled.  Lines may carry the optional
``>>graph6<<`` header.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import MAX_ORDER, Graph, pair_count

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the 0-based byte position of the fault."""

    def __init__(self, message: str, offset: int, line: int | None = None) -> None:
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} ({where})")


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))


def encode(G: Graph) -> str:
    out = [_encode_order(G.n)]
    acc = nbits = 0
    for j in range(1, G.n):
        row = G.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.rstrip("\r\n")
    start = len(HEADER) if s.startswith(HEADER) else 0
    for pos in range(start, len(s)):
        if not 63 <= ord(s[pos]) <= 126:
            raise Graph6Error(f"invalid graph6 character {s[pos]!r}", pos)
    if start >= len(s):
        raise Graph6Error("missing order byte", start)
    pos = start
    if s[pos] == "~":
        if pos + 1 < len(s) and s[pos + 1] == "~":
            raise Graph6Error("orders above 258047 are not supported", pos)
        if pos + 4 > len(s):
            raise Graph6Error("truncated extended order field", len(s))
        n = 0
        for c in s[pos + 1 : pos + 4]:
            n = n << 6 | (ord(c) - 63)
        if n <= 62:
            raise Graph6Error("non-canonical extended order field", pos)
        pos += 4
    else:
        n = ord(s[pos]) - 63
        pos += 1
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(f"order {n} outside 1..{MAX_ORDER}", start)
    nbits = pair_count(n)
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field: expected {nbytes} bytes, got {len(body)}", len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after bit field", pos + nbytes)
    rows = [0] * n
    b = 0
    i, j = 0, 1
    for off, c in enumerate(body):
        val = ord(c) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if b < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bits", pos + off)
            b += 1
    return Graph(n, tuple(rows))


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line; errors carry the 1-based line number."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield decode(line.strip())
        except Graph6Error as exc:
            raise Graph6Error(str(exc).rsplit(" (", 1)[0], exc.offset, lineno) from None


def read_file(fh: IO[str]) -> Iterator[Graph]:
    return read_lines(fh)


def write_lines(graphs: Iterable[Graph], fh: IO[str]) -> int:
    count = 0
    for G in graphs:
        fh.write(encode(G) + "\n")
        count += 1
    return count
