"""Expression syntax for the command line.

    expr   := term (('+' | '-') term)*
    term   := ['+'|'-'] factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := 'y' uint | 'z' uint | uint | '(' expr ')' | '[' expr ',' expr ']'

Multiplication is always explicit; juxtaposition is a syntax error.  Brackets
are commutators and expand before any canonical reduction, so the parser's
output is a plain weighted word list over the graded letters.
"""

from dataclasses import dataclass

from .errors import ParseError
from .freealg import QPoly, Word, normalize


@dataclass(frozen=True)
class Token:
    kind: str
    value: object
    pos: int


_SINGLE = {
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "^": "CARET",
    "(": "LPAREN",
    ")": "RPAREN",
    "[": "LBRACK",
    "]": "RBRACK",
    ",": "COMMA",
}


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SINGLE:
            toks.append(Token(_SINGLE[ch], ch, i))
            i += 1
            continue
        if ch in ("y", "z"):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(f"letter {ch!r} needs an index", i + 1, ("digits",))
            idx = int(text[i + 1:j])
            if idx < 1:
                raise ParseError("letter index must be >= 1", i + 1, ("index >= 1",))
            toks.append(Token("VAR", (ch, idx), i))
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("INT", int(text[i:j]), i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i, ())
    toks.append(Token("EOF", None, n))
    return toks


# expression nodes: ("int", n) | ("var", letter) | ("pow", node, k)
#                   ("mul", [nodes]) | ("add", [(sign, node), ...]) | ("br", a, b)

_ATOM_STARTS = ("'y'", "'z'", "integer", "'('", "'['")


def _describe(t: Token) -> str:
    if t.kind == "EOF":
        return "input ended"
    if t.kind == "VAR":
        fam, idx = t.value
        return f"got {fam}{idx}"
    return f"got {t.value!r}"


class _Parser:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.k = 0

    def peek(self) -> Token:
        return self.toks[self.k]

    def take(self) -> Token:
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, kind: str, what: str) -> Token:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(_describe(t), t.pos, (what,))
        return self.take()

    def expr(self):
        items = [(1, self.term())]
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = 1 if self.take().kind == "PLUS" else -1
            items.append((sign, self.term()))
        return ("add", items)

    def term(self):
        sign = 1
        if self.peek().kind in ("PLUS", "MINUS"):
            sign = 1 if self.take().kind == "PLUS" else -1
        factors = [self.factor()]
        while self.peek().kind == "STAR":
            self.take()
            factors.append(self.factor())
        node = ("mul", factors) if len(factors) > 1 else factors[0]
        if sign < 0:
            node = ("mul", [("int", -1), node])
        return node

    def factor(self):
        node = self.atom()
        if self.peek().kind == "CARET":
            self.take()
            t = self.expect("INT", "nonnegative integer exponent")
            node = ("pow", node, t.value)
        return node

    def atom(self):
        t = self.peek()
        if t.kind == "VAR":
            self.take()
            return ("var", t.value)
        if t.kind == "INT":
            self.take()
            return ("int", t.value)
        if t.kind == "LPAREN":
            self.take()
            node = self.expr()
            self.expect("RPAREN", "')'")
            return node
        if t.kind == "LBRACK":
            self.take()
            a = self.expr()
            self.expect("COMMA", "','")
            b = self.expr()
            self.expect("RBRACK", "']'")
            return ("br", a, b)
        raise ParseError(_describe(t), t.pos, _ATOM_STARTS)


def parse(text: str):
    """Parse to an expression tree; raises ParseError with a byte offset."""
    p = _Parser(tokenize(text))
    node = p.expr()
    t = p.peek()
    if t.kind != "EOF":
        raise ParseError(_describe(t), t.pos,
                         ("'*'", "'+'", "'-'", "'^'", "')'", "']'", "','", "end of input"))
    return node


def to_words(node) -> list[tuple[int, Word]]:
    """Expand an expression tree to a weighted word list (no reduction)."""
    kind = node[0]
    if kind == "int":
        return [(node[1], ())] if node[1] else []
    if kind == "var":
        return [(1, (node[1],))]
    if kind == "pow":
        base = to_words(node[1])
        out: list[tuple[int, Word]] = [(1, ())]
        for _ in range(node[2]):
            out = [(c0 * c1, w0 + w1) for c0, w0 in out for c1, w1 in base]
        return out
    if kind == "mul":
        out = [(1, ())]
        for sub in node[1]:
            expansion = to_words(sub)
            out = [(c0 * c1, w0 + w1) for c0, w0 in out for c1, w1 in expansion]
        return out
    if kind == "add":
        out = []
        for sign, sub in node[1]:
            out.extend((sign * c, w) for c, w in to_words(sub))
        return out
    if kind == "br":
        left = to_words(node[1])
        right = to_words(node[2])
        out = [(cl * cr, wl + wr) for cl, wl in left for cr, wr in right]
        out.extend((-cl * cr, wr + wl) for cl, wl in left for cr, wr in right)
        return out
    raise ValueError(f"unknown node kind {kind!r}")


def parse_words(text: str) -> list[tuple[int, Word]]:
    return to_words(parse(text))


def parse_poly(text: str) -> QPoly:
    return normalize(parse_words(text))
