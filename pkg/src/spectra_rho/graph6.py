"""graph6 text encoding for graphs of order <= 62 (the short form)."""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6FormatError(ValueError):
    pass


def encode(G: Graph) -> str:
    if G.n > 62:
        raise Graph6FormatError(f"short-form graph6 caps order at 62, got {G.n}")
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append((G.rows[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + G.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def decode(text: str, name: str | None = None) -> Graph:
    data = text.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER) :]
    if not data:
        raise Graph6FormatError("empty graph6 string")
    head = ord(data[0]) - 63
    if not (0 <= head <= 62):
        raise Graph6FormatError(f"unsupported graph6 order byte {data[0]!r}")
    n = head
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    body = data[1:]
    if len(body) != need_chars:
        raise Graph6FormatError(
            f"graph6 body for order {n} needs {need_chars} characters, "
            f"got {len(body)} in {text!r}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise Graph6FormatError(f"invalid graph6 character {ch!r} in {text!r}")
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows), name)


def read_lines(text: str) -> list[Graph]:
    """Decode one graph per non-empty line."""
    return [decode(line) for line in text.splitlines() if line.strip()]
