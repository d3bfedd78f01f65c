"""Group presentations: parsing, standard constructors, and coset enumeration.

The textual grammar (ASCII, whitespace insignificant)::

    presentation := "<" gens "|" relators ">"
    gens         := ident ("," ident)*
    relators     := word ("," word)*
    word         := factor+
    factor       := ident ("^" int)? | "(" word ")" ("^" int)?
    ident        := [A-Za-z][A-Za-z0-9]*

Coset enumeration runs over the trivial subgroup, so a successful run yields
the regular permutation representation of the presented group on its own
elements.  The strategy is definition-driven with immediate deductions
(Felsch style): always fill the lowest empty slot of the lowest live coset,
and close relator cycles as soon as their last edge appears.  Coincidences
are processed through a union-find with path compression.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .perm_group import FiniteGroup, Permutation, closure

DEFAULT_MAX_COSETS = 10**6

Word = tuple[tuple[int, int], ...]


class PresentationSyntaxError(ValueError):
    """Malformed presentation text, with 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class CosetLimitExceeded(RuntimeError):
    """Enumeration exceeded max_cosets; the group may be infinite or the
    bound too small.  Never a certificate of infiniteness."""


@dataclass(frozen=True)
class GroupPresentation:
    """Named generators plus relator words, each word a sequence of
    (generator index, exponent) terms."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        for word in self.relators:
            for idx, exp in word:
                if not 0 <= idx < len(self.generator_names):
                    raise ValueError(f"generator index {idx} out of range")
                if exp == 0:
                    raise ValueError("zero exponent in relator")

    def __str__(self) -> str:
        names = self.generator_names

        def render(word: Word) -> str:
            parts = []
            for idx, exp in word:
                parts.append(names[idx] if exp == 1 else f"{names[idx]}^{exp}")
            return " ".join(parts)

        gens = ", ".join(names)
        rels = ", ".join(render(w) for w in self.relators)
        return f"< {gens} | {rels} >"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_PUNCT = set("<>|,^()")


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind: str, text: str, line: int, column: int):
        self.kind = kind  # "punct", "ident", "int", "end"
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token("punct", ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            tokens.append(_Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < len(text) and text[i + 1].isdigit()):
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise PresentationSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != text:
            raise PresentationSyntaxError(
                f"expected {text!r}, found {tok.text or 'end of input'!r}",
                tok.line, tok.column)
        return self.take()

    def parse(self) -> GroupPresentation:
        self.expect("<")
        names = [self.ident()]
        while self.peek().text == "," and self.peek().kind == "punct":
            self.take()
            names.append(self.ident())
        seen = set()
        for name in names:
            if name in seen:
                tok = self.tokens[0]
                raise PresentationSyntaxError(
                    f"duplicate generator name {name!r}", tok.line, tok.column)
            seen.add(name)
        self.expect("|")
        index = {name: i for i, name in enumerate(names)}
        relators = [self.word(index)]
        while self.peek().kind == "punct" and self.peek().text == ",":
            self.take()
            relators.append(self.word(index))
        self.expect(">")
        tok = self.peek()
        if tok.kind != "end":
            raise PresentationSyntaxError(
                f"trailing input {tok.text!r}", tok.line, tok.column)
        return GroupPresentation(tuple(names), tuple(relators))

    def ident(self) -> str:
        tok = self.peek()
        if tok.kind != "ident":
            raise PresentationSyntaxError(
                f"expected identifier, found {tok.text or 'end of input'!r}",
                tok.line, tok.column)
        return self.take().text

    def exponent(self) -> int:
        tok = self.peek()
        if tok.kind != "int":
            raise PresentationSyntaxError(
                f"expected integer exponent, found {tok.text or 'end of input'!r}",
                tok.line, tok.column)
        self.take()
        value = int(tok.text)
        if value == 0:
            raise PresentationSyntaxError("zero exponent", tok.line, tok.column)
        return value

    def word(self, index: dict[str, int]) -> Word:
        terms: list[tuple[int, int]] = []
        first = True
        while True:
            tok = self.peek()
            if tok.kind == "ident":
                self.take()
                if tok.text not in index:
                    raise PresentationSyntaxError(
                        f"unknown generator name {tok.text!r}", tok.line, tok.column)
                exp = 1
                if self.peek().kind == "punct" and self.peek().text == "^":
                    self.take()
                    exp = self.exponent()
                terms.append((index[tok.text], exp))
            elif tok.kind == "punct" and tok.text == "(":
                self.take()
                inner = self.word(index)
                self.expect(")")
                exp = 1
                if self.peek().kind == "punct" and self.peek().text == "^":
                    self.take()
                    exp = self.exponent()
                terms.extend(_power(inner, exp))
            else:
                if first:
                    raise PresentationSyntaxError(
                        f"expected word, found {tok.text or 'end of input'!r}",
                        tok.line, tok.column)
                return tuple(terms)
            first = False


def _invert(word: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(idx, -exp) for idx, exp in reversed(word)]


def _power(word: Sequence[tuple[int, int]], exp: int) -> list[tuple[int, int]]:
    base = list(word) if exp > 0 else _invert(word)
    return base * abs(exp)


def parse_presentation(text: str) -> GroupPresentation:
    """Parse presentation text; raises PresentationSyntaxError on bad input."""
    return _Parser(text).parse()


def evaluate_word(word: Word, generators: Sequence[Permutation]) -> Permutation:
    """Evaluate a relator word on concrete permutations, left to right."""
    result = Permutation.identity(generators[0].degree)
    for idx, exp in word:
        g = generators[idx] if exp > 0 else generators[idx].inverse()
        for _ in range(abs(exp)):
            result = result * g
    return result


# ---------------------------------------------------------------------------
# Standard presentations
# ---------------------------------------------------------------------------

def triangle_group(k: int, l: int) -> GroupPresentation:
    """Full triangle group of type (k, l) on generators R0, R2, R1."""
    if k < 2 or l < 2:
        raise ValueError("triangle group parameters must be at least 2")
    r0, r2, r1 = 0, 1, 2
    return GroupPresentation(
        ("R0", "R2", "R1"),
        (
            ((r0, 2),),
            ((r2, 2),),
            ((r1, 2),),
            tuple([(r0, 1), (r2, 1)] * 2),
            tuple([(r1, 1), (r2, 1)] * k),
            tuple([(r0, 1), (r1, 1)] * l),
        ),
    )


def dihedral_presentation(m: int) -> GroupPresentation:
    """Two involutions whose product has order m: the dihedral group of order 2m."""
    if m < 1:
        raise ValueError("m must be positive")
    return GroupPresentation(
        ("a", "b"),
        (((0, 2),), ((1, 2),), tuple([(0, 1), (1, 1)] * m)),
    )


_SLOT_GENS = ("r0", "r2", "rho0", "rho2")


def ebr_type_presentation(k: int, l: int) -> GroupPresentation:
    """Partial presentation shared by every edge-biregular map of type (k, l):
    four involutions r0, r2, rho0, rho2 with commuting edge pairs and
    (r2 rho2)^(k/2), (r0 rho0)^(l/2).  Finite quotients add relators; the
    presentation itself is finite only for the spherical types (2, 2m) and
    (2m, 2)."""
    if k < 2 or l < 2 or k % 2 or l % 2:
        raise ValueError("type entries must be even and at least 2")
    r0, r2, p0, p2 = 0, 1, 2, 3
    squares = tuple(((g, 2),) for g in (r0, r2, p0, p2))
    pairs = (
        tuple([(r0, 1), (r2, 1)] * 2),
        tuple([(p0, 1), (p2, 1)] * 2),
        tuple([(r2, 1), (p2, 1)] * (k // 2)),
        tuple([(r0, 1), (p0, 1)] * (l // 2)),
    )
    return GroupPresentation(_SLOT_GENS, squares + pairs)


def square_grid_group() -> GroupPresentation:
    """Colour-preserving symmetries of the alternately coloured square grid:
    the type (4, 4) partial presentation.  Infinite."""
    return ebr_type_presentation(4, 4)


def corner_monodromy_presentation() -> GroupPresentation:
    """The universal corner-gluing group: two commuting pairs of involutions
    with no mixed relations (a free product of two Klein four-groups)."""
    r0, r2, p0, p2 = 0, 1, 2, 3
    return GroupPresentation(
        ("r0", "r2", "p0", "p2"),
        (
            ((r0, 2),),
            ((r2, 2),),
            ((p0, 2),),
            ((p2, 2),),
            tuple([(r0, 1), (r2, 1)] * 2),
            tuple([(p0, 1), (p2, 1)] * 2),
        ),
    )


# ---------------------------------------------------------------------------
# Coset enumeration (Felsch strategy, trivial subgroup)
# ---------------------------------------------------------------------------

class _CosetTable:
    def __init__(self, n_cols: int, inv_col: list[int], max_cosets: int):
        self.n_cols = n_cols
        self.inv_col = inv_col
        self.max_cosets = max_cosets
        self.table: list[list[Optional[int]]] = [[None] * n_cols]
        self.parent = [0]
        self.alive = [True]
        self.live_count = 1
        self.deductions: list[tuple[int, int]] = []
        # Rotations of relators (and their inverses) indexed by first letter.
        self.rotations: list[list[tuple[int, ...]]] = [[] for _ in range(n_cols)]
        self.cursor = 0  # lowest row that might have an empty slot

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, x: int) -> None:
        if self.live_count >= self.max_cosets:
            raise CosetLimitExceeded(
                f"enumeration exceeded max_cosets={self.max_cosets}")
        d = len(self.table)
        self.table.append([None] * self.n_cols)
        self.parent.append(d)
        self.alive.append(True)
        self.live_count += 1
        self.set_entry(c, x, d)

    def set_entry(self, c: int, x: int, d: int) -> None:
        # Anchor at live representatives so no edge is recorded on a dead row.
        c, d = self.find(c), self.find(d)
        row = self.table[c]
        if row[x] is not None:
            if self.find(row[x]) != d:
                self.coincidence(row[x], d)
            return
        mirror = self.table[d][self.inv_col[x]]
        if mirror is not None and self.find(mirror) != c:
            self.coincidence(mirror, c)
            return
        row[x] = d
        self.table[d][self.inv_col[x]] = c
        self.deductions.append((c, x))
        self.deductions.append((d, self.inv_col[x]))

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []

        def merge(u: int, v: int) -> None:
            u, v = self.find(u), self.find(v)
            if u == v:
                return
            if u > v:
                u, v = v, u
            self.parent[v] = u
            self.alive[v] = False
            self.live_count -= 1
            queue.append(v)

        merge(a, b)
        pos = 0
        while pos < len(queue):
            dead = queue[pos]
            pos += 1
            row = self.table[dead]
            for x in range(self.n_cols):
                d = row[x]
                if d is None:
                    continue
                # Detach the mirror entry, then reinstall under representatives.
                self.table[d][self.inv_col[x]] = None
                if self.alive[d] and d < self.cursor:
                    self.cursor = d
                u, v = self.find(dead), self.find(d)
                if self.table[u][x] is not None:
                    merge(v, self.table[u][x])
                elif self.table[v][self.inv_col[x]] is not None:
                    merge(u, self.table[v][self.inv_col[x]])
                else:
                    self.table[u][x] = v
                    self.table[v][self.inv_col[x]] = u
                    self.deductions.append((u, x))
                    self.deductions.append((v, self.inv_col[x]))

    def scan(self, word: tuple[int, ...], alpha: int) -> None:
        table = self.table
        f, i = alpha, 0
        while i < len(word):
            nxt = table[f][word[i]]
            if nxt is None:
                break
            f = nxt
            i += 1
        if i == len(word):
            if f != alpha:
                self.coincidence(f, alpha)
            return
        b, j = alpha, len(word)
        while j > i:
            prv = table[b][self.inv_col[word[j - 1]]]
            if prv is None:
                break
            b = prv
            j -= 1
        if j == i:
            if f != b:
                self.coincidence(f, b)
        elif j == i + 1:
            self.set_entry(f, word[i], b)

    def process_deductions(self) -> None:
        while self.deductions:
            c, x = self.deductions.pop()
            c = self.find(c)
            if not self.alive[c] or self.table[c][x] is None:
                continue
            for word in self.rotations[x]:
                self.scan(word, c)
                if not self.alive[c]:
                    break

    def next_empty(self) -> Optional[tuple[int, int]]:
        c = self.cursor
        while c < len(self.table):
            if self.alive[c]:
                row = self.table[c]
                for x in range(self.n_cols):
                    if row[x] is None:
                        self.cursor = c
                        return c, x
            c += 1
        self.cursor = c
        return None


def coset_enumerate(pres: GroupPresentation,
                    max_cosets: int = DEFAULT_MAX_COSETS) -> FiniteGroup:
    """Enumerate the presented group over the trivial subgroup.

    Returns the regular permutation representation with generator
    permutations named as in the presentation.  Raises CosetLimitExceeded
    when more than ``max_cosets`` live cosets would be needed.
    """
    ngens = len(pres.generator_names)
    if ngens == 0:
        raise ValueError("presentation has no generators")
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")

    letters = [_flatten(word) for word in pres.relators]

    involutory = set()
    for word in letters:
        if len(word) == 2 and word[0] == word[1]:
            involutory.add(word[0][0])

    col_of: dict[tuple[int, int], int] = {}
    inv_col: list[int] = []
    for i in range(ngens):
        if i in involutory:
            col = len(inv_col)
            col_of[(i, 1)] = col
            col_of[(i, -1)] = col
            inv_col.append(col)
        else:
            col = len(inv_col)
            col_of[(i, 1)] = col
            col_of[(i, -1)] = col + 1
            inv_col.extend([col + 1, col])

    ct = _CosetTable(len(inv_col), inv_col, max_cosets)

    seen_words = set()
    for word in letters:
        cols = tuple(col_of[letter] for letter in word)
        if len(cols) == 2 and cols[0] == cols[1]:
            continue  # involution squares are built into the column structure
        inverse = tuple(inv_col[x] for x in reversed(cols))
        for base in (cols, inverse):
            for shift in range(len(base)):
                rot = base[shift:] + base[:shift]
                if rot not in seen_words:
                    seen_words.add(rot)
                    ct.rotations[rot[0]].append(rot)

    while True:
        ct.process_deductions()
        slot = ct.next_empty()
        if slot is None:
            break
        ct.define(*slot)

    live = [c for c in range(len(ct.table)) if ct.alive[c]]
    renumber = {c: i for i, c in enumerate(live)}
    perms = []
    for i in range(ngens):
        col = col_of[(i, 1)]
        perms.append(Permutation(renumber[ct.table[c][col]] for c in live))

    group = closure(perms, names=pres.generator_names, max_order=len(live))
    if group.order != len(live):
        raise AssertionError("coset table does not define a regular action")
    return group


def _flatten(word: Word) -> list[tuple[int, int]]:
    out = []
    for idx, exp in word:
        sign = 1 if exp > 0 else -1
        out.extend([(idx, sign)] * abs(exp))
    return out
