"""Character scanner shared by the N-Triples, Turtle and SPARQL parsers."""

from __future__ import annotations

import re
from bisect import bisect_right
from typing import NoReturn, Optional, Tuple

from .errors import IriError, LiteralError, ParseDiagnostic, ParseError
from .terms import BNODE_LABEL, BlankNode, Iri

_ESCAPES = {"t": "\t", "n": "\n", "r": "\r", "b": "\b", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_LANGTAG = re.compile(r"[A-Za-z]+(?:-[A-Za-z0-9]+)*")
_BNODE = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?")
# prefix:local, local may contain inner dots but never ends with one
_PNAME = re.compile(
    r"([A-Za-z](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)?:"
    r"([A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)?"
)
_WORD = re.compile(r"[A-Za-z]+")


class Scanner:
    def __init__(self, text: str, first_line: int = 1):
        self.text = text
        self.pos = 0
        self.first_line = first_line
        self._line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    # -- positions and errors ------------------------------------------------

    def location(self, offset: Optional[int] = None) -> Tuple[int, int]:
        offset = self.pos if offset is None else offset
        idx = bisect_right(self._line_starts, offset) - 1
        return self.first_line + idx, offset - self._line_starts[idx] + 1

    def diagnostic(self, message: str, offset: Optional[int] = None) -> ParseDiagnostic:
        line, col = self.location(offset)
        return ParseDiagnostic(line, col, message)

    def fail(self, message: str, offset: Optional[int] = None) -> NoReturn:
        raise ParseError(self.diagnostic(message, offset))

    def describe_here(self) -> str:
        if self.at_end():
            return "end of input"
        return repr(self.text[self.pos : self.pos + 12].split("\n")[0])

    # -- primitives ------------------------------------------------------------

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self, n: int = 1) -> str:
        return self.text[self.pos : self.pos + n]

    def startswith(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def expect(self, s: str, what: Optional[str] = None) -> None:
        if not self.startswith(s):
            self.fail(f"expected {what or repr(s)}, found {self.describe_here()}")
        self.pos += len(s)

    def skip_ws(self, newlines: bool = True) -> None:
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch in " \t\r" or (newlines and ch == "\n"):
                self.pos += 1
            elif ch == "#":
                end = text.find("\n", self.pos)
                self.pos = len(text) if end < 0 else end
            else:
                break

    def match(self, pattern: re.Pattern) -> Optional[re.Match]:
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def peek_word(self) -> str:
        m = _WORD.match(self.text, self.pos)
        return m.group(0) if m else ""

    # -- terms -------------------------------------------------------------------

    def _read_uchar(self, start: int) -> str:
        kind = self.text[self.pos]
        width = 4 if kind == "u" else 8
        digits = self.text[self.pos + 1 : self.pos + 1 + width]
        if len(digits) != width or not all(c in "0123456789abcdefABCDEF" for c in digits):
            self.fail(f"bad \\{kind} escape", start)
        self.pos += 1 + width
        try:
            return chr(int(digits, 16))
        except (ValueError, OverflowError):
            self.fail(f"escape \\{kind}{digits} is out of range", start)

    def read_iriref(self) -> Iri:
        start = self.pos
        self.expect("<", "'<'")
        out = []
        text = self.text
        while True:
            if self.pos >= len(text) or text[self.pos] == "\n":
                self.fail("unterminated IRI", start)
            ch = text[self.pos]
            if ch == ">":
                self.pos += 1
                break
            if ch == "\\":
                esc_at = self.pos
                self.pos += 1
                if self.pos < len(text) and text[self.pos] in "uU":
                    out.append(self._read_uchar(esc_at))
                    continue
                self.fail("only \\u and \\U escapes are allowed in IRIs", esc_at)
            out.append(ch)
            self.pos += 1
        try:
            return Iri("".join(out))
        except IriError as exc:
            self.fail(f"invalid IRI: {exc}", start)

    def read_string(self, allow_single: bool = False) -> str:
        start = self.pos
        quote = self.peek()
        if quote != '"' and not (allow_single and quote == "'"):
            self.fail(f"expected a quoted string, found {self.describe_here()}")
        self.pos += 1
        out = []
        text = self.text
        while True:
            if self.pos >= len(text) or text[self.pos] == "\n":
                self.fail("unterminated string literal", start)
            ch = text[self.pos]
            if ch == quote:
                self.pos += 1
                return "".join(out)
            if ch == "\\":
                esc_at = self.pos
                self.pos += 1
                if self.pos >= len(text):
                    self.fail("dangling escape", esc_at)
                code = text[self.pos]
                if code in "uU":
                    out.append(self._read_uchar(esc_at))
                    continue
                if code not in _ESCAPES:
                    self.fail(f"unknown escape \\{code}", esc_at)
                out.append(_ESCAPES[code])
                self.pos += 1
                continue
            out.append(ch)
            self.pos += 1

    def read_langtag(self) -> str:
        self.expect("@")
        m = self.match(_LANGTAG)
        if not m:
            self.fail("malformed language tag")
        return m.group(0)

    def read_bnode(self) -> BlankNode:
        start = self.pos
        self.expect("_:")
        m = self.match(_BNODE)
        if not m or not BNODE_LABEL.match(m.group(0)):
            self.fail("malformed blank node label", start)
        return BlankNode(m.group(0))

    def read_pname(self) -> Tuple[str, str, int]:
        """Return ``(prefix, local, start_offset)`` for ``prefix:local``."""
        start = self.pos
        m = self.match(_PNAME)
        if not m:
            self.fail(f"expected a prefixed name, found {self.describe_here()}")
        return m.group(1) or "", m.group(2) or "", start

    def literal_error(self, exc: LiteralError, offset: int) -> NoReturn:
        self.fail(f"invalid literal: {exc}", offset)
