"""Finitely presented homogeneous monoids and a brute-force congruence oracle.

A word is a tuple of generator indices; the empty tuple is the monoid
identity.  Presentations come from `.gar` documents:

    # comment
    gens: s t u
    rel: s t u s = t u s t
    rel: t u s t = u s t u
    delta: s t u s

Exactly one `gens:` and one `delta:` line; words are whitespace-separated
generator names matching ``[A-Za-z][A-Za-z0-9_]*``; `rel:` order is kept.

The oracle enumerates every word of each length up to a bound and merges
words connected by a single-relation rewrite with a union-find.  Relations
preserve length, so strata are independent and the congruence closure on a
stratum is just graph connectivity over single rewrites.  The canonical
representative of a class is its lexicographically least word (in declared
generator order), which makes every downstream table deterministic.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import BudgetExceeded, InhomogeneousPresentation, ParseError

Word = tuple[int, ...]

TOKEN_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

# Default per-stratum word cap.  Desk-scale inputs (three generators, Delta
# of length at most nine) stay under it with room to spare.
DEFAULT_BUDGET = 3**10


@dataclass(frozen=True)
class Presentation:
    """Generators, homogeneous relations, and the designated Garside word."""

    generators: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...]
    delta_word: Word

    def word_from_tokens(self, tokens: list[str]) -> Word:
        index = {name: i for i, name in enumerate(self.generators)}
        missing = [t for t in tokens if t not in index]
        if missing:
            raise ParseError(f"undeclared generator token(s): {' '.join(missing)}")
        return tuple(index[t] for t in tokens)

    def render(self, word: Word) -> str:
        return " ".join(self.generators[i] for i in word)


def parse_presentation(text: str) -> Presentation:
    """Parse a `.gar` document.  Homogeneity is validated separately."""
    gens: tuple[str, ...] | None = None
    raw_relations: list[tuple[list[str], list[str]]] = []
    raw_delta: list[str] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'key: value', got {line!r}")
        key = key.strip()
        if key == "gens":
            if gens is not None:
                raise ParseError(f"line {lineno}: duplicate gens: line")
            names = value.split()
            if not names:
                raise ParseError(f"line {lineno}: gens: line declares no generators")
            for name in names:
                if not TOKEN_RE.match(name):
                    raise ParseError(f"line {lineno}: invalid generator name {name!r}")
            if len(set(names)) != len(names):
                raise ParseError(f"line {lineno}: duplicate generator name")
            gens = tuple(names)
        elif key == "rel":
            lhs, eq, rhs = value.partition("=")
            if not eq:
                raise ParseError(f"line {lineno}: rel: line needs '='")
            raw_relations.append((lhs.split(), rhs.split()))
        elif key == "delta":
            if raw_delta is not None:
                raise ParseError(f"line {lineno}: duplicate delta: line")
            raw_delta = value.split()
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")

    if gens is None:
        raise ParseError("missing gens: line")
    if raw_delta is None:
        raise ParseError("missing delta: line")

    scaffold = Presentation(gens, (), ())
    relations = tuple(
        (scaffold.word_from_tokens(lhs), scaffold.word_from_tokens(rhs))
        for lhs, rhs in raw_relations
    )
    return Presentation(gens, relations, scaffold.word_from_tokens(raw_delta))


def homogeneity_violations(p: Presentation) -> list[int]:
    """Indices of relations that change word length (empty list means ok)."""
    return [i for i, (lhs, rhs) in enumerate(p.relations) if len(lhs) != len(rhs)]


def require_homogeneous(p: Presentation) -> None:
    bad = homogeneity_violations(p)
    if bad:
        raise InhomogeneousPresentation(bad)


@dataclass
class CongruenceTable:
    """Canonical representative for every word of length <= max_length.

    Two words are congruent iff they share a representative.  Representatives
    are lexicographically least in their class, so recomputation is stable.
    """

    presentation: Presentation
    max_length: int
    reps: dict[Word, Word]

    def rep(self, word: Word) -> Word:
        if len(word) > self.max_length:
            raise BudgetExceeded(len(word), -1, -1)
        return self.reps[word]

    def congruent(self, u: Word, v: Word) -> bool:
        return self.rep(u) == self.rep(v)

    def class_members(self, word: Word) -> list[Word]:
        target = self.rep(word)
        return sorted(w for w, r in self.reps.items() if r == target)

    def classes(self, length: int) -> list[list[Word]]:
        """All classes of the given length, sorted by representative."""
        by_rep: dict[Word, list[Word]] = {}
        for w, r in self.reps.items():
            if len(w) == length:
                by_rep.setdefault(r, []).append(w)
        return [sorted(by_rep[r]) for r in sorted(by_rep)]


def congruence_classes(
    p: Presentation, max_length: int, budget: int = DEFAULT_BUDGET
) -> CongruenceTable:
    """Close every stratum of words up to max_length under the relations."""
    require_homogeneous(p)
    n = len(p.generators)
    rules = [(lhs, rhs) for lhs, rhs in p.relations]
    rules += [(rhs, lhs) for lhs, rhs in p.relations]

    reps: dict[Word, Word] = {(): ()}
    for length in range(1, max_length + 1):
        count = n**length
        if count > budget:
            raise BudgetExceeded(length, count, budget)
        words = list(itertools.product(range(n), repeat=length))
        index = {w: i for i, w in enumerate(words)}
        parent = list(range(count))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for w in words:
            for lhs, rhs in rules:
                span = len(lhs)
                for at in range(length - span + 1):
                    if w[at : at + span] == lhs:
                        other = index[w[:at] + rhs + w[at + span :]]
                        ra, rb = find(index[w]), find(other)
                        if ra != rb:
                            # Root at the smaller index: words are enumerated
                            # in lexicographic order, so the root stays the
                            # lexicographically least member.
                            parent[max(ra, rb)] = min(ra, rb)
        for w in words:
            reps[w] = words[find(index[w])]
    return CongruenceTable(p, max_length, reps)
