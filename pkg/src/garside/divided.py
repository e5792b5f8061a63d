"""Divided sets D_m^n, the categories C_p^q, and vertex-group extraction.

D_m^n is the set of m-tuples of simples with ordered product Delta, fixed by
the n-th power of the twisted shift sigma(a_1,...,a_m) = (a_2,...,a_m,
phi(a_1)).  Rather than filtering all decompositions, the enumeration walks
the index-shift cycles: i -> (i+n) mod m has gcd(m,n) orbits, a tuple fixed
by sigma^n is determined by one free entry per orbit (fixed by phi^(n/gcd)),
and entry lengths force the free entries to split length(Delta)*gcd/m.

C_p^q has objects D_p^q, generating morphisms D_2p^2q, and relations induced
by D_3p^3q (each 3p-tuple yields a composable triple f;g = h).  Tuples of the
interleaved form (1, x_1, 1, x_2, ...) are the object identities; relations
through them are provably trivial and are checked, then dropped.  An
endomorphism generator defined by some triple (f, g, endo) with f, g proper
non-endos is eliminated and rewritten as that path, matching how such
composites are usually named rather than listed as generators.

Vertex groups come from the standard groupoid contraction: spanning tree,
one loop generator per non-tree edge, one relator per presented relation,
plus a bounded Tietze simplifier and the collapse map to the Garside group
(a path maps to the signed product of first entries).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import NonComposablePath
from .monoid import GarsideStructure, NormalForm

Path = list[tuple[int, int]]  # (morphism id, +1 forward / -1 backward)


def decompositions(g: GarsideStructure, m: int) -> list[tuple[int, ...]]:
    """All m-tuples of simples with ordered product Delta, in lex id order."""
    if m < 1:
        raise ValueError("m must be at least 1")
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(x: int, remaining: int) -> None:
        if remaining == 1:
            out.append(tuple(prefix) + (x,))
            return
        mask = g.left_div_mask[x]
        while mask:
            low = mask & -mask
            a = low.bit_length() - 1
            mask ^= low
            prefix.append(a)
            rec(g.residual_left[a][x], remaining - 1)
            prefix.pop()

    rec(g.delta, m)
    return out


def twisted_shift(g: GarsideStructure, t: tuple[int, ...]) -> tuple[int, ...]:
    return t[1:] + (g.phi_simple(t[0]),)


def divided_set(g: GarsideStructure, m: int, n: int) -> list[tuple[int, ...]]:
    """D_m^n: decompositions of Delta fixed by the n-th twisted shift."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if n == 0:
        return decompositions(g, m)
    cycles = math.gcd(m, n)
    free_length, rem = divmod(g.delta_length * cycles, m)
    if rem:
        return []
    twist = n // cycles
    fixed = g.phi_fixed_simples(twist)
    by_len: dict[int, list[int]] = {}
    for a in fixed:
        by_len.setdefault(g.simple_length(a), []).append(a)

    delta_rep = g.simples[g.delta]
    out: list[tuple[int, ...]] = []
    lengths = sorted(by_len)
    for combo in itertools.product(lengths, repeat=cycles):
        if sum(combo) != free_length:
            continue
        for reps in itertools.product(*(by_len[le] for le in combo)):
            entries = [0] * m
            for base in range(cycles):
                entries[base] = reps[base]
                i = base
                while True:
                    j = (i + n) % m
                    if j == base:
                        break
                    # t_i = phi^{e_i}(t_j) with e_i = (i+n) // m
                    entries[j] = g.phi_simple(entries[i], -((i + n) // m))
                    i = j
            word = sum((g.simples[a] for a in entries), ())
            if g.oracle.rep(word) == delta_rep:
                out.append(tuple(entries))
    out.sort()
    return out


@dataclass(frozen=True)
class Morphism:
    entries: tuple[int, ...]
    source: int
    target: int

    def is_endo(self) -> bool:
        return self.source == self.target


@dataclass
class DividedCategory:
    g: GarsideStructure
    p: int
    q: int
    objects: list[tuple[int, ...]]
    morphisms: list[Morphism]  # every non-identity member of D_2p^2q
    identity_tuples: dict[int, tuple[int, ...]]  # object id -> identity tuple
    triples: list[tuple[int, int, int]]  # composable f;g = h, morphism ids
    eliminated: dict[int, tuple[int, int]]  # endo id -> defining path (f, g)
    relations: list[tuple[list[int], list[int]]]  # presented path equations

    def generator_ids(self) -> list[int]:
        return [i for i in range(len(self.morphisms)) if i not in self.eliminated]

    def object_label(self, oid: int) -> str:
        return "(" + ", ".join(self.g.render_simple(a) for a in self.objects[oid]) + ")"

    def object_param(self, oid: int) -> str:
        return self.g.render_simple(self.objects[oid][0])

    def morphism_label(self, mid: int) -> str:
        e = self.morphisms[mid].entries
        return f"({self.g.render_simple(e[0])}, {self.g.render_simple(e[1])})"

    def path_label(self, path: list[int]) -> str:
        return " ".join(self.morphism_label(m) for m in path)

    def relation_label(self, rel: tuple[list[int], list[int]]) -> str:
        return f"{self.path_label(rel[0])} = {self.path_label(rel[1])}"


def _is_identity_tuple(t: tuple[int, ...]) -> bool:
    return all(t[i] == 0 for i in range(0, len(t), 2))


def _endpoints(
    g: GarsideStructure, t: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p = len(t) // 2
    source = []
    target = []
    for k in range(p):
        source.append(g.simple_product(t[2 * k], t[2 * k + 1]))
        right = t[2 * k + 2] if k < p - 1 else g.phi_simple(t[0])
        target.append(g.simple_product(t[2 * k + 1], right))
    assert None not in source and None not in target, "non-simple endpoint block"
    return tuple(source), tuple(target)


def _triple_parts(
    g: GarsideStructure, u: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    p = len(u) // 3
    f: list[int] = []
    h: list[int] = []
    gg: list[int] = []
    for k in range(p):
        f += [u[3 * k], g.simple_product(u[3 * k + 1], u[3 * k + 2])]
        nxt = u[3 * k + 3] if k < p - 1 else g.phi_simple(u[0])
        gg += [u[3 * k + 1], g.simple_product(u[3 * k + 2], nxt)]
        h += [g.simple_product(u[3 * k], u[3 * k + 1]), u[3 * k + 2]]
    parts = (tuple(f), tuple(gg), tuple(h))
    assert all(None not in part for part in parts), "non-simple relation block"
    return parts


def build_category(g: GarsideStructure, p: int, q: int) -> DividedCategory:
    """Assemble C_p^q: objects, generating morphisms, induced relations."""
    if p < 1 or q < 0:
        raise ValueError("need p >= 1 and q >= 0")
    objects = divided_set(g, p, q)
    obj_index = {t: i for i, t in enumerate(objects)}

    raw = divided_set(g, 2 * p, 2 * q)
    morphisms: list[Morphism] = []
    mor_index: dict[tuple[int, ...], int] = {}
    identity_tuples: dict[int, tuple[int, ...]] = {}
    for t in raw:
        src_t, tgt_t = _endpoints(g, t)
        assert src_t in obj_index and tgt_t in obj_index, "dangling endpoint"
        if _is_identity_tuple(t):
            oid = obj_index[src_t]
            assert src_t == tgt_t and t[1::2] == objects[oid]
            identity_tuples[oid] = t
        else:
            mor_index[t] = len(morphisms)
            morphisms.append(Morphism(t, obj_index[src_t], obj_index[tgt_t]))
    assert set(identity_tuples) == set(range(len(objects)))

    triples: list[tuple[int, int, int]] = []
    for u in divided_set(g, 3 * p, 3 * q):
        f_t, g_t, h_t = _triple_parts(g, u)
        ids = [_is_identity_tuple(t) for t in (f_t, g_t, h_t)]
        if any(ids):
            # Identity-involving relations carry no content; prove it.
            if ids[2]:
                assert ids[0] and ids[1] and f_t == g_t == h_t
            elif ids[0]:
                assert g_t == h_t
            else:
                assert f_t == h_t
            continue
        fid, gid, hid = (mor_index[t] for t in (f_t, g_t, h_t))
        assert morphisms[fid].target == morphisms[gid].source
        assert morphisms[fid].source == morphisms[hid].source
        assert morphisms[gid].target == morphisms[hid].target
        triples.append((fid, gid, hid))

    eliminated: dict[int, tuple[int, int]] = {}
    for fid, gid, hid in triples:
        if (
            morphisms[hid].is_endo()
            and hid not in eliminated
            and not morphisms[fid].is_endo()
            and not morphisms[gid].is_endo()
        ):
            eliminated[hid] = (fid, gid)

    def expand(mid: int) -> list[int]:
        return list(eliminated[mid]) if mid in eliminated else [mid]

    relations: list[tuple[list[int], list[int]]] = []
    for fid, gid, hid in triples:
        if eliminated.get(hid) == (fid, gid):
            continue
        relations.append((expand(fid) + expand(gid), expand(hid)))

    return DividedCategory(
        g, p, q, objects, morphisms, identity_tuples, triples, eliminated, relations
    )


def components(c: DividedCategory) -> list[list[int]]:
    """Undirected connected components of the objects, sorted by least member."""
    parent = list(range(len(c.objects)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for m in c.morphisms:
        ra, rb = find(m.source), find(m.target)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for i in range(len(c.objects)):
        groups.setdefault(find(i), []).append(i)
    return [sorted(groups[r]) for r in sorted(groups)]


def collapse(c: DividedCategory, path: Path) -> NormalForm:
    """Signed product of first entries along a composable path."""
    g = c.g
    out = NormalForm(0, ())
    position: int | None = None
    for mid, sign in path:
        m = c.morphisms[mid]
        start, end = (m.source, m.target) if sign > 0 else (m.target, m.source)
        if position is not None and position != start:
            raise NonComposablePath(f"path breaks at morphism {mid}")
        position = end
        first = m.entries[0]
        if first == g.delta:
            nf = NormalForm(1, ())
        else:
            nf = NormalForm(0, (first,) if first != g.identity else ())
        out = g.multiply(out, nf if sign > 0 else g.invert(nf))
    return out


@dataclass
class VertexGroupPresentation:
    category: DividedCategory
    base: int
    tree_edges: list[int]
    loop_edges: list[int]  # non-tree morphism ids, one loop generator each
    loop_paths: list[Path]  # base -> base conjugated loops
    relators: list[list[int]]  # words in signed 1-based loop references
    collapse_images: list[NormalForm]


def _free_reduce(word: list[int]) -> list[int]:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return out


def vertex_group(c: DividedCategory, base: int) -> VertexGroupPresentation:
    """Contract the component of base to a one-object group presentation."""
    gens = c.generator_ids()
    parent = list(range(len(c.objects)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    tree: list[int] = []
    adjacency: dict[int, list[tuple[int, int, int]]] = {}
    for mid in gens:
        m = c.morphisms[mid]
        if find(m.source) != find(m.target):
            parent[find(m.source)] = find(m.target)
            tree.append(mid)
            adjacency.setdefault(m.source, []).append((m.target, mid, 1))
            adjacency.setdefault(m.target, []).append((m.source, mid, -1))

    paths: dict[int, Path] = {base: []}
    frontier = [base]
    while frontier:
        node = frontier.pop(0)
        for nxt, mid, sign in adjacency.get(node, ()):
            if nxt not in paths:
                paths[nxt] = paths[node] + [(mid, sign)]
                frontier.append(nxt)

    def inverse(path: Path) -> Path:
        return [(mid, -sign) for mid, sign in reversed(path)]

    component = set(paths)
    loop_edges = [
        mid
        for mid in gens
        if mid not in tree and c.morphisms[mid].source in component
    ]
    loop_paths = [
        paths[c.morphisms[mid].source]
        + [(mid, 1)]
        + inverse(paths[c.morphisms[mid].target])
        for mid in loop_edges
    ]
    loop_of = {mid: i for i, mid in enumerate(loop_edges)}

    def letters(path: list[int]) -> list[int]:
        return [loop_of[mid] + 1 for mid in path if mid in loop_of]

    relators = []
    for lhs, rhs in c.relations:
        if c.morphisms[lhs[0]].source not in component:
            continue
        word = letters(lhs) + [-x for x in reversed(letters(rhs))]
        relators.append(_free_reduce(word))
    images = [collapse(c, path) for path in loop_paths]
    return VertexGroupPresentation(c, base, tree, loop_edges, loop_paths, relators, images)


@dataclass
class SimplifiedPresentation:
    generators: list[int]  # surviving loop indices (into loop_edges)
    relators: list[list[int]]
    inconclusive: bool


def simplify_presentation(v: VertexGroupPresentation) -> SimplifiedPresentation:
    """Bounded Tietze reduction: free-reduce and eliminate isolated generators."""
    gens = set(range(1, len(v.loop_edges) + 1))
    relators = [r for r in (_free_reduce(list(r)) for r in v.relators) if r]
    bound = 10 * (len(gens) + len(relators))
    steps = 0
    while steps < bound:
        steps += 1
        target = None
        for ri, rel in enumerate(relators):
            once = [x for x in gens if sum(1 for y in rel if abs(y) == x) == 1]
            if once:
                target = (ri, max(once))
                break
        if target is None:
            return SimplifiedPresentation(
                [x - 1 for x in sorted(gens)], relators, False
            )
        ri, x = target
        rel = relators.pop(ri)
        pos = next(i for i, y in enumerate(rel) if abs(y) == x)
        before, after = rel[:pos], rel[pos + 1 :]
        # u x v = 1  =>  x = u^-1 v^-1 ; u x^-1 v = 1  =>  x = v u
        if rel[pos] > 0:
            image = [-y for y in reversed(before)] + [-y for y in reversed(after)]
        else:
            image = after + before
        replaced = []
        for other in relators:
            word: list[int] = []
            for y in other:
                if abs(y) != x:
                    word.append(y)
                elif y > 0:
                    word.extend(image)
                else:
                    word.extend(-z for z in reversed(image))
            word = _free_reduce(word)
            if word:
                replaced.append(word)
        relators = replaced
        gens.discard(x)
    return SimplifiedPresentation([x - 1 for x in sorted(gens)], relators, True)
