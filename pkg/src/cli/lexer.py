"""
Tokenizer for the ring expression language.

Words cover identifiers, labels and numbers alike; the parser decides what a
word means from where it appears. `;` and newlines both end a statement and
`#` starts a comment that runs to the end of the line.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List

from src.error_handling.exceptions import ParseException


class TokenType(Enum):
    WORD = "word"
    LBRACE = "'{'"
    RBRACE = "'}'"
    LPAREN = "'('"
    RPAREN = "')'"
    COMMA = "','"
    PLUS = "'+'"
    STAR = "'*'"
    QUOTE = "'''"
    EQUALS = "'='"
    SEP = "end of statement"
    EOF = "end of input"


PUNCTUATION = {
    "{": TokenType.LBRACE,
    "}": TokenType.RBRACE,
    "(": TokenType.LPAREN,
    ")": TokenType.RPAREN,
    ",": TokenType.COMMA,
    "+": TokenType.PLUS,
    "*": TokenType.STAR,
    "'": TokenType.QUOTE,
    "=": TokenType.EQUALS,
    ";": TokenType.SEP,
    "\n": TokenType.SEP,
}

WORD_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.\-]*")


@dataclass(frozen=True)
class Token:
    type: TokenType
    text: str
    line: int
    column: int

    @property
    def end_column(self) -> int:
        return self.column + max(len(self.text), 1)


def tokenize(source: str) -> List[Token]:
    return list(_scan(source))


def _scan(source: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        ch = source[pos]
        column = pos - line_start + 1
        if ch == "#":
            while pos < len(source) and source[pos] != "\n":
                pos += 1
            continue
        if ch in PUNCTUATION:
            yield Token(PUNCTUATION[ch], ch, line, column)
            pos += 1
            if ch == "\n":
                line, line_start = line + 1, pos
            continue
        if ch.isspace():
            pos += 1
            continue
        match = WORD_RE.match(source, pos)
        if match is None:
            raise ParseException(
                f"Unexpected character {ch!r}",
                line,
                column,
                expected=["word"] + [t.value for t in PUNCTUATION.values()],
            )
        yield Token(TokenType.WORD, match.group(), line, column)
        pos = match.end()
    yield Token(TokenType.EOF, "", line, pos - line_start + 1)
