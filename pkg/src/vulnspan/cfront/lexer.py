"""Tokenizer for the C subset the front-end understands."""

from __future__ import annotations

from dataclasses import dataclass

# Longest-match first.
PUNCTUATORS = [
    ">>=", "<<=", "...",
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "&", "|", "^",
    "?", ":", ";", ",", ".", "(", ")", "[", "]", "{", "}",
]

_PUNCT_BY_FIRST: dict[str, list[str]] = {}
for _p in PUNCTUATORS:
    _PUNCT_BY_FIRST.setdefault(_p[0], []).append(_p)

C_KEYWORDS = frozenset(
    """auto break case char const continue default do double else enum extern
    float for goto if inline int long register restrict return short signed
    sizeof static struct switch typedef union unsigned void volatile while
    _Bool _Complex _Imaginary""".split()
)

TYPE_KEYWORDS = frozenset(
    """void char short int long float double signed unsigned _Bool _Complex
    struct union enum const volatile static register extern inline auto
    restrict typedef""".split()
)


@dataclass(frozen=True)
class Token:
    kind: str  # id | num | str | char | punct | pp
    text: str
    line: int  # 1-based
    col: int   # 1-based

    def is_punct(self, *texts: str) -> bool:
        return self.kind == "punct" and self.text in texts

    def is_kw(self, *words: str) -> bool:
        return self.kind == "id" and self.text in words


def _is_ident_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _is_ident(c: str) -> bool:
    return c.isalnum() or c == "_"


def tokenize(text: str, first_line: int = 1) -> list[Token]:
    """Lex C source into tokens, keeping 1-based line/column positions.

    Preprocessor directives become single ``pp`` tokens spanning the whole
    logical line (backslash continuations included). Comments and
    whitespace are dropped.
    """
    toks: list[Token] = []
    i = 0
    n = len(text)
    line = first_line
    col = 1
    at_line_start = True

    def advance(k: int) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        if c in " \t\r":
            advance(1)
            continue
        if c == "\n":
            advance(1)
            at_line_start = True
            continue
        if c == "\\" and i + 1 < n and text[i + 1] == "\n":
            advance(2)
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                advance(1)
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "*":
            advance(2)
            while i + 1 < n and not (text[i] == "*" and text[i + 1] == "/"):
                advance(1)
            advance(2 if i + 1 < n else n - i)
            continue
        if c == "#" and at_line_start:
            start, sl, sc = i, line, col
            while i < n:
                if text[i] == "\\" and i + 1 < n and text[i + 1] == "\n":
                    advance(2)
                elif text[i] == "\n":
                    break
                else:
                    advance(1)
            toks.append(Token("pp", text[start:i], sl, sc))
            continue
        at_line_start = False
        if _is_ident_start(c):
            start, sl, sc = i, line, col
            while i < n and _is_ident(text[i]):
                advance(1)
            toks.append(Token("id", text[start:i], sl, sc))
            continue
        if c.isdigit() or (c == "." and i + 1 < n and text[i + 1].isdigit()):
            start, sl, sc = i, line, col
            while i < n and (text[i].isalnum() or text[i] in "._" or
                             (text[i] in "+-" and text[i - 1] in "eEpP")):
                advance(1)
            toks.append(Token("num", text[start:i], sl, sc))
            continue
        if c in "\"'":
            quote = c
            start, sl, sc = i, line, col
            advance(1)
            while i < n and text[i] != quote:
                if text[i] == "\\":
                    advance(2)
                else:
                    advance(1)
            advance(1)
            toks.append(Token("str" if quote == '"' else "char",
                              text[start:i], sl, sc))
            continue
        cands = _PUNCT_BY_FIRST.get(c)
        if cands:
            for p in sorted(cands, key=len, reverse=True):
                if text.startswith(p, i):
                    toks.append(Token("punct", p, line, col))
                    advance(len(p))
                    break
            continue
        # Unknown byte: keep it as a punct token so recovery can skip it.
        toks.append(Token("punct", c, line, col))
        advance(1)
    return toks
