"""Parser and serializer for sememe definition expressions.

A definition expression is the text form of a sememe tree:

    def       := '{' head ( ':' role ( ',' role )* )? '}'
    head      := sememeRef | '$' | '~' | '?' | '"' chars '"'
    role      := roleName '=' def
    sememeRef := english '|' chinese

Whitespace between tokens is ignored; the canonical form produced by
``render_def`` contains none.  ``parse_def(render_def(t)) == t`` for every
valid tree.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .errors import KbError

PLACEHOLDER_SYMBOLS = ("$", "~", "?")
ROLE_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
MAX_DEPTH = 64

# Punctuation with grammatical meaning; excluded from sememe labels.
_RESERVED = set('{}:,=|')

_TOKEN_RE = re.compile(r'[^\S\n]+|\n|[{}:,=|]|"[^"]*"|[^{}:,=|"\s]+')


class ParseError(KbError):
    """Raised on any non-conforming input.

    ``kind`` is one of UnexpectedToken, UnbalancedBraces, EmptyHead,
    BadRoleName, TrailingInput; ``offset`` is the 0-based character index
    of the earliest offending position (== input length at unexpected EOF).
    """

    def __init__(self, kind: str, offset: int, message: str):
        super().__init__(f"{message} (at offset {offset})")
        self.kind = kind
        self.offset = offset


def _check_label(text: str, what: str) -> str:
    if not text:
        raise ValueError(f"{what} label must be non-empty")
    for ch in text:
        if ch in _RESERVED or ch == '"' or ch.isspace():
            raise ValueError(f"{what} label contains reserved character {ch!r}: {text!r}")
    return text


@dataclass(frozen=True)
class SememeRef:
    """Bilingual sememe label, written ``english|chinese``."""

    english: str
    chinese: str

    def __post_init__(self):
        _check_label(self.english, "english")
        _check_label(self.chinese, "chinese")

    @classmethod
    def parse(cls, text: str) -> "SememeRef":
        en, sep, zh = text.partition("|")
        if not sep:
            raise ValueError(f"sememe ref must contain '|': {text!r}")
        return cls(en, zh)

    def __str__(self) -> str:
        return f"{self.english}|{self.chinese}"


@dataclass(frozen=True)
class Placeholder:
    """Opaque placeholder head: one of ``$``, ``~``, ``?``."""

    symbol: str

    def __post_init__(self):
        if self.symbol not in PLACEHOLDER_SYMBOLS:
            raise ValueError(f"unknown placeholder symbol: {self.symbol!r}")

    def __str__(self) -> str:
        return self.symbol


@dataclass(frozen=True)
class Literal:
    """Quoted string head for proper-name / value fillers."""

    text: str

    def __post_init__(self):
        if '"' in self.text:
            raise ValueError("literal text must not contain a double quote")

    def __str__(self) -> str:
        return f'"{self.text}"'


Head = SememeRef | Placeholder | Literal


@dataclass(frozen=True, eq=False)
class SememeTree:
    """A head plus ordered, role-labeled children.

    Child order is preserved (rendering keeps it), but equality is
    order-insensitive: two trees are equal when their heads match and the
    multisets of ``(role, subtree)`` pairs match.  The same role name may
    label several children.
    """

    head: Head
    children: tuple[tuple[str, "SememeTree"], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        for role, child in self.children:
            if not ROLE_NAME_RE.match(role):
                raise ValueError(f"invalid role name: {role!r}")
            if not isinstance(child, SememeTree):
                raise TypeError("child must be a SememeTree")

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, SememeTree):
            return NotImplemented
        if self.head != other.head:
            return False
        if len(self.children) != len(other.children):
            return False
        if self.children == other.children:  # positional fast path
            return True
        return Counter(self.children) == Counter(other.children)

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((self.head, frozenset(Counter(self.children).items())))
            object.__setattr__(self, "_hash", cached)
        return cached

    def node_count(self) -> int:
        return 1 + sum(child.node_count() for _, child in self.children)

    def iter_nodes(self):
        """Yield every node in preorder, self first."""
        yield self
        for _, child in self.children:
            yield from child.iter_nodes()


def leaf(english: str, chinese: str) -> SememeTree:
    """Convenience constructor for a childless sememe node."""
    return SememeTree(SememeRef(english, chinese))


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split into (kind, value, offset) tokens; whitespace dropped.

    Kinds: one of the punctuation characters, 'TEXT', 'STRING'.
    """
    tokens = []
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        if m.start() != pos:
            # The only character the pattern cannot match is a lone '"'.
            raise ParseError("UnexpectedToken", pos, "unterminated quoted literal")
        pos = m.end()
        tok = m.group()
        first = tok[0]
        if first.isspace():
            continue
        if first in _RESERVED:
            tokens.append((tok, tok, m.start()))
        elif first == '"':
            tokens.append(("STRING", tok[1:-1], m.start()))
        else:
            tokens.append(("TEXT", tok, m.start()))
    if pos != len(text):
        raise ParseError("UnexpectedToken", pos, "unterminated quoted literal")
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def next(self):
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    @property
    def eof_offset(self) -> int:
        return len(self.text)

    def parse_def(self, depth: int) -> SememeTree:
        if depth > MAX_DEPTH:
            tok = self.peek()
            offset = tok[2] if tok else self.eof_offset
            raise ParseError("UnexpectedToken", offset,
                             f"nesting exceeds the depth limit of {MAX_DEPTH}")
        tok = self.next()
        if tok is None:
            raise ParseError("UnbalancedBraces", self.eof_offset, "expected '{'")
        if tok[0] != "{":
            raise ParseError("UnbalancedBraces", tok[2], "expected '{'")
        head = self.parse_head()
        children: list[tuple[str, SememeTree]] = []
        tok = self.next()
        if tok is None:
            raise ParseError("UnbalancedBraces", self.eof_offset, "expected '}'")
        if tok[0] == ":":
            children.append(self.parse_role(depth))
            tok = self.next()
            while tok is not None and tok[0] == ",":
                children.append(self.parse_role(depth))
                tok = self.next()
            if tok is None:
                raise ParseError("UnbalancedBraces", self.eof_offset, "expected '}'")
        if tok[0] != "}":
            raise ParseError("UnexpectedToken", tok[2], f"expected '}}', got {tok[1]!r}")
        return SememeTree(head, tuple(children))

    def parse_head(self) -> Head:
        tok = self.peek()
        if tok is None:
            raise ParseError("UnbalancedBraces", self.eof_offset, "expected '}'")
        kind, value, offset = tok
        if kind in ("}", ":"):
            raise ParseError("EmptyHead", offset, "definition head is empty")
        if kind == "STRING":
            self.next()
            return Literal(value)
        if kind != "TEXT":
            raise ParseError("UnexpectedToken", offset, f"expected a head, got {value!r}")
        self.next()
        nxt = self.peek()
        if nxt is not None and nxt[0] == "|":
            self.next()
            zh = self.peek()
            if zh is None or zh[0] != "TEXT":
                bad_offset = zh[2] if zh is not None else self.eof_offset
                raise ParseError("UnexpectedToken", bad_offset,
                                 "expected a Chinese label after '|'")
            self.next()
            return SememeRef(value, zh[1])
        if value in PLACEHOLDER_SYMBOLS:
            return Placeholder(value)
        bad = nxt[2] if nxt is not None else self.eof_offset
        raise ParseError("UnexpectedToken", bad,
                         f"expected '|' after sememe label {value!r}")

    def parse_role(self, depth: int) -> tuple[str, SememeTree]:
        tok = self.next()
        if tok is None:
            raise ParseError("UnbalancedBraces", self.eof_offset, "expected a role name")
        kind, value, offset = tok
        if kind != "TEXT":
            raise ParseError("UnexpectedToken", offset,
                             f"expected a role name, got {value!r}")
        if not ROLE_NAME_RE.match(value):
            raise ParseError("BadRoleName", offset, f"invalid role name {value!r}")
        eq = self.next()
        if eq is None:
            raise ParseError("UnbalancedBraces", self.eof_offset, "expected '='")
        if eq[0] != "=":
            raise ParseError("UnexpectedToken", eq[2],
                             f"expected '=' after role name, got {eq[1]!r}")
        return value, self.parse_def(depth + 1)


def parse_def(text: str) -> SememeTree:
    """Parse a definition expression into its sememe tree.

    Raises ParseError (never anything else) on non-conforming input, with
    the earliest offending character offset.
    """
    parser = _Parser(text)
    tree = parser.parse_def(depth=1)
    trailing = parser.peek()
    if trailing is not None:
        raise ParseError("TrailingInput", trailing[2],
                         "unexpected input after the closing brace")
    return tree


def render_def(tree: SememeTree) -> str:
    """Serialize a tree to canonical text: no whitespace, original child order."""
    parts = ["{", str(tree.head)]
    if tree.children:
        parts.append(":")
        for i, (role, child) in enumerate(tree.children):
            if i:
                parts.append(",")
            parts.append(role)
            parts.append("=")
            parts.append(render_def(child))
    parts.append("}")
    return "".join(parts)


@dataclass(frozen=True)
class Issue:
    """One consistency problem found by validate_def."""

    kind: str
    ref: SememeRef

    def __str__(self) -> str:
        return f"{self.kind}: {self.ref}"


def validate_def(tree: SememeTree, taxonomy) -> list[Issue]:
    """Report every sememe head not resolvable in the taxonomy.

    Placeholder and literal heads carry no taxonomy reference and are
    always accepted.  An empty list means the definition is consistent.
    """
    issues = []
    for node in tree.iter_nodes():
        head = node.head
        if isinstance(head, SememeRef) and taxonomy.find_ref(head) is None:
            issues.append(Issue("UnknownSememe", head))
    return issues
