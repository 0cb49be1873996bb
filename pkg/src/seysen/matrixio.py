"""Bracketed matrix text format (``[[1 0]\\n[1 1]]``).

Grammar::

    matrix := '[' row+ ']'
    row    := '[' entry (WS entry)* ']'
    entry  := integer | integer '/' positive-integer

Whitespace between tokens is free on input.  Output is canonical: single
spaces, one row per line, rationals in lowest terms.
"""

from fractions import Fraction

from .errors import ParseError
from .lattice import EXACT, Basis


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, message, pos=None):
        raise ParseError(message, *self.where(pos))

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        start = self.pos
        while self.peek() and self.peek().isspace():
            self.pos += 1
        return self.pos > start

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected {ch!r}, found {found}")
        self.pos += 1

    def digits(self):
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        if self.pos == start:
            self.fail("expected digits")
        return int(self.text[start:self.pos])

    def entry(self):
        start = self.pos
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        num = sign * self.digits()
        if self.peek() == "/":
            self.pos += 1
            den_pos = self.pos
            den = self.digits()
            if den == 0:
                self.fail("zero denominator", den_pos)
            return Fraction(num, den)
        if self.peek() and not (self.peek().isspace() or self.peek() == "]"):
            self.fail(f"unexpected character {self.peek()!r} in entry starting here", start)
        return Fraction(num)

    def row(self):
        self.expect("[")
        self.skip_ws()
        entries = [self.entry()]
        while True:
            had_ws = self.skip_ws()
            if self.peek() == "]":
                self.pos += 1
                return entries
            if not had_ws:
                self.fail("entries must be separated by whitespace")
            entries.append(self.entry())


def parse_rows(text):
    """Parse matrix text into a list of Fraction rows (no rank check)."""
    sc = _Scanner(text)
    sc.skip_ws()
    sc.expect("[")
    sc.skip_ws()
    rows = []
    while True:
        row_pos = sc.pos
        rows.append(sc.row())
        if len(rows[-1]) != len(rows[0]):
            sc.fail(f"row has {len(rows[-1])} entries, expected {len(rows[0])}", row_pos)
        sc.skip_ws()
        if sc.peek() == "]":
            sc.pos += 1
            break
        if sc.peek() != "[":
            sc.fail("expected '[' or ']'")
    sc.skip_ws()
    if sc.peek():
        sc.fail("trailing characters after matrix")
    return rows


def parse_matrix(text, mode=EXACT):
    """Parse matrix text into a :class:`Basis`.

    Raises :class:`ParseError` on malformed text and
    :class:`~seysen.errors.RankDeficient` (carrying the zero Gram determinant)
    on dependent rows.
    """
    return Basis.from_rows(parse_rows(text), mode)


def format_scalar(x):
    return str(Fraction(x))


def serialize_matrix(b):
    """Canonical text for a basis or a plain matrix of rationals.

    Float entries are written as the exact rational value of the double.
    """
    rows = b.rows if isinstance(b, Basis) else b
    body = "]\n[".join(" ".join(format_scalar(x) for x in row) for row in rows)
    return f"[[{body}]]"
