"""Garside structures: simples, divisibility lattices, phi, normal forms.

A structure is built from a homogeneous presentation with a designated
Garside word Delta.  The congruence oracle (up to length l(Delta)) supplies
ground truth: simples are the congruence classes of prefixes of words in
Delta's class, and every table below (division, residuals, gcd/lcm, the
left-weighted product splitting, the automorphism phi) is computed from
oracle lookups and verified exhaustively.  Axiom failures raise
AxiomViolation with rendered witnesses instead of producing a structure.

Elements of the Garside group are NormalForm values: an integer power of
Delta followed by left-weighted simple factors, none equal to the identity
or to Delta.  Multiplication moves Delta across factors with the twist rule
x * Delta = Delta * phi(x) and re-normalizes by local splitting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AxiomViolation, GarsideError
from .presentation import (
    DEFAULT_BUDGET,
    CongruenceTable,
    Presentation,
    Word,
    congruence_classes,
)


@dataclass(frozen=True)
class NormalForm:
    """Delta power plus left-weighted proper simple factors."""

    delta_power: int
    factors: tuple[int, ...]

IDENTITY_NF = NormalForm(0, ())


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GarsideStructure:
    """Verified Garside data for one presentation.

    Instances are built by build_garside and must be treated as immutable;
    all public methods are pure reads.
    """

    def __init__(self, presentation: Presentation, oracle: CongruenceTable):
        self.presentation = presentation
        self.oracle = oracle
        self.simples: tuple[Word, ...] = ()
        self.simple_index: dict[Word, int] = {}
        self.identity = 0
        self.delta = 0
        self.atoms: tuple[int, ...] = ()
        self.left_div_mask: list[int] = []     # bit i set in entry j: i left-divides j
        self.right_div_mask: list[int] = []
        self.left_mult_mask: list[int] = []    # bit j set in entry i: i left-divides j
        self.right_mult_mask: list[int] = []
        self.residual_left: list[list[int | None]] = []   # a * c = b  =>  [a][b] = c
        self.residual_right: list[list[int | None]] = []  # c * a = b  =>  [a][b] = c
        self.gcd_left_table: list[list[int]] = []
        self.lcm_left_table: list[list[int]] = []
        self.gcd_right_table: list[list[int]] = []
        self.lcm_right_table: list[list[int]] = []
        self.left_complement: tuple[int, ...] = ()   # a * comp(a) = Delta
        self.right_complement: tuple[int, ...] = ()  # comp(a) * a = Delta
        self.phi_perm: tuple[int, ...] = ()
        self._phi_powers: list[tuple[int, ...]] = []
        self.product_decomp_table: list[list[tuple[int, int]]] = []
        self._atom_nf: dict[int, NormalForm] = {}

    # -- rendering ---------------------------------------------------------

    def render_simple(self, i: int) -> str:
        return self.presentation.render(self.simples[i]) if i else "1"

    def format_normal_form(self, nf: NormalForm) -> str:
        parts = []
        if nf.delta_power:
            parts.append(
                "delta" if nf.delta_power == 1 else f"delta^{nf.delta_power}"
            )
        parts.extend(self.render_simple(f) for f in nf.factors)
        return " . ".join(parts) if parts else "1"

    # -- basic lookups -----------------------------------------------------

    @property
    def delta_length(self) -> int:
        return len(self.presentation.delta_word)

    def simple_of_word(self, word: Word) -> int | None:
        """Simple id of a positive word, or None when it is not a divisor."""
        if len(word) > self.delta_length:
            return None
        return self.simple_index.get(self.oracle.rep(word))

    def simple_product(self, a: int, b: int) -> int | None:
        """Product of two simples when it is again simple, else None."""
        return self.simple_of_word(self.simples[a] + self.simples[b])

    def simple_length(self, a: int) -> int:
        return len(self.simples[a])

    def left_divides(self, a: int, b: int) -> bool:
        return bool(self.left_div_mask[b] >> a & 1)

    def right_divides(self, a: int, b: int) -> bool:
        return bool(self.right_div_mask[b] >> a & 1)

    def gcd_left(self, a: int, b: int) -> int:
        return self.gcd_left_table[a][b]

    def lcm_left(self, a: int, b: int) -> int:
        return self.lcm_left_table[a][b]

    def gcd_right(self, a: int, b: int) -> int:
        return self.gcd_right_table[a][b]

    def lcm_right(self, a: int, b: int) -> int:
        return self.lcm_right_table[a][b]

    def product_decomp(self, a: int, b: int) -> tuple[int, int]:
        return self.product_decomp_table[a][b]

    # -- phi ---------------------------------------------------------------

    @property
    def phi_order(self) -> int:
        return len(self._phi_powers)

    def phi_power_perm(self, k: int) -> tuple[int, ...]:
        return self._phi_powers[k % self.phi_order]

    def phi_simple(self, a: int, k: int = 1) -> int:
        return self.phi_power_perm(k)[a]

    def phi_fixed_simples(self, k: int) -> list[int]:
        perm = self.phi_power_perm(k)
        return [a for a in range(len(self.simples)) if perm[a] == a]

    def phi_apply(self, x: NormalForm, k: int = 1) -> NormalForm:
        perm = self.phi_power_perm(k)
        return NormalForm(x.delta_power, tuple(perm[f] for f in x.factors))

    # -- left-weightedness -------------------------------------------------

    def left_weighted(self, a: int, b: int) -> bool:
        """No atom x satisfies a*x <= Delta and x <= b."""
        comp = self.left_complement[a]
        return not any(
            self.left_divides(x, comp) and self.left_divides(x, b)
            for x in self.atoms
        )

    # -- normal forms ------------------------------------------------------

    def _normalize_simple_seq(self, seq: list[int]) -> tuple[int, tuple[int, ...]]:
        """Left-weight a sequence of simples; return (delta count, proper rest)."""
        factors = [f for f in seq if f != self.identity]
        changed = True
        while changed:
            changed = False
            for i in range(len(factors) - 1):
                c, d = self.product_decomp_table[factors[i]][factors[i + 1]]
                if (c, d) != (factors[i], factors[i + 1]):
                    factors[i], factors[i + 1] = c, d
                    changed = True
            if changed:
                factors = [f for f in factors if f != self.identity]
        k = 0
        while k < len(factors) and factors[k] == self.delta:
            k += 1
        return k, tuple(factors[k:])

    def normal_form(self, word: Word) -> NormalForm:
        """Normal form of a positive word in the generators."""
        seq = []
        for gi in word:
            a = self.simple_of_word((gi,))
            if a is None:
                raise GarsideError(f"generator index {gi} is not an atom")
            seq.append(a)
        k, factors = self._normalize_simple_seq(seq)
        return NormalForm(k, factors)

    def normal_form_signed(self, letters: list[tuple[int, int]]) -> NormalForm:
        """Normal form of a group word given as (generator index, +-1) pairs."""
        out = IDENTITY_NF
        for gi, sign in letters:
            a = self.simple_of_word((gi,))
            if a is None:
                raise GarsideError(f"generator index {gi} is not an atom")
            nf = NormalForm(0, (a,))
            out = self.multiply(out, nf if sign > 0 else self.invert(nf))
        return out

    def nf_length(self, x: NormalForm) -> int:
        return x.delta_power * self.delta_length + sum(
            self.simple_length(f) for f in x.factors
        )

    # -- group arithmetic ----------------------------------------------------

    def multiply(self, x: NormalForm, y: NormalForm) -> NormalForm:
        perm = self.phi_power_perm(y.delta_power)
        seq = [perm[f] for f in x.factors] + list(y.factors)
        k, factors = self._normalize_simple_seq(seq)
        return NormalForm(x.delta_power + y.delta_power + k, factors)

    def invert(self, x: NormalForm) -> NormalForm:
        inv_phi = self.phi_power_perm(-1)
        out = IDENTITY_NF
        for f in reversed(x.factors):
            out = self.multiply(
                out, NormalForm(-1, (inv_phi[self.left_complement[f]],))
            )
        return self.multiply(out, NormalForm(-x.delta_power, ()))

    def power(self, x: NormalForm, k: int) -> NormalForm:
        if k < 0:
            return self.power(self.invert(x), -k)
        out = IDENTITY_NF
        base = x
        while k:
            if k & 1:
                out = self.multiply(out, base)
            base = self.multiply(base, base)
            k >>= 1
        return out

    def is_central(self, x: NormalForm) -> bool:
        for a in self.atoms:
            nf = self._atom_nf[a]
            if self.multiply(x, nf) != self.multiply(nf, x):
                return False
        return True


def _divisor_classes(g: GarsideStructure, prefixes: bool) -> set[Word]:
    oracle = g.oracle
    members = oracle.class_members(g.presentation.delta_word)
    out: set[Word] = set()
    for w in members:
        for k in range(len(w) + 1):
            out.add(oracle.rep(w[:k] if prefixes else w[k:]))
    return out


def _build_residuals(g: GarsideStructure, left: bool) -> list[list[int | None]]:
    n = len(g.simples)
    by_length: dict[int, list[int]] = {}
    for i, w in enumerate(g.simples):
        by_length.setdefault(len(w), []).append(i)
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    for a in range(n):
        wa = g.simples[a]
        for b in range(n):
            wb = g.simples[b]
            need = len(wb) - len(wa)
            if need < 0:
                continue
            matches = [
                c
                for c in by_length.get(need, ())
                if g.oracle.rep(wa + g.simples[c] if left else g.simples[c] + wa)
                == wb
            ]
            if len(matches) > 1:
                side = "left" if left else "right"
                raise AxiomViolation(
                    "lattice",
                    [
                        f"{side} residual of {g.render_simple(a)} in "
                        f"{g.render_simple(b)} is not unique: "
                        f"{g.render_simple(matches[0])} vs {g.render_simple(matches[1])}"
                    ],
                )
            if matches:
                table[a][b] = matches[0]
    return table


def _bound_table(
    g: GarsideStructure, masks: list[int], kind: str, lower: bool
) -> list[list[int]]:
    """gcd table when lower (masks = divisor masks), lcm table otherwise."""
    n = len(g.simples)
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            common = masks[a] & masks[b]
            winners = [w for w in _bits(common) if common & ~masks[w] == 0]
            if len(winners) != 1:
                what = ("gcd" if lower else "lcm") + f" ({kind})"
                raise AxiomViolation(
                    "lattice",
                    [
                        f"{what} of {g.render_simple(a)} and {g.render_simple(b)} "
                        f"has {len(winners)} candidates"
                    ],
                )
            table[a][b] = table[b][a] = winners[0]
    return table


def build_garside(
    p: Presentation, budget: int = DEFAULT_BUDGET
) -> GarsideStructure:
    """Build and exhaustively verify the Garside structure over p."""
    if not p.delta_word:
        raise GarsideError("delta word must be non-empty")
    oracle = congruence_classes(p, len(p.delta_word), budget)
    g = GarsideStructure(p, oracle)

    # Simples and balancedness.
    prefixes = _divisor_classes(g, prefixes=True)
    suffixes = _divisor_classes(g, prefixes=False)
    if prefixes != suffixes:
        witnesses = [
            f"{p.render(w)} ({'left' if w in prefixes else 'right'} divisor only)"
            for w in sorted(prefixes ^ suffixes, key=lambda w: (len(w), w))
        ]
        raise AxiomViolation("balanced", witnesses)
    g.simples = tuple(sorted(prefixes, key=lambda w: (len(w), w)))
    g.simple_index = {w: i for i, w in enumerate(g.simples)}
    g.delta = g.simple_index[oracle.rep(p.delta_word)]
    atom_ids = []
    for gi, name in enumerate(p.generators):
        a = g.simple_index.get(oracle.rep((gi,)))
        if a is None:
            raise AxiomViolation(
                "balanced", [f"generator {name} does not divide delta"]
            )
        atom_ids.append(a)
    g.atoms = tuple(sorted(set(atom_ids)))

    # Residuals, divisibility masks, lattice tables.
    g.residual_left = _build_residuals(g, left=True)
    g.residual_right = _build_residuals(g, left=False)
    n = len(g.simples)
    g.left_div_mask = [0] * n
    g.right_div_mask = [0] * n
    g.left_mult_mask = [0] * n
    g.right_mult_mask = [0] * n
    for a in range(n):
        for b in range(n):
            if g.residual_left[a][b] is not None:
                g.left_div_mask[b] |= 1 << a
                g.left_mult_mask[a] |= 1 << b
            if g.residual_right[a][b] is not None:
                g.right_div_mask[b] |= 1 << a
                g.right_mult_mask[a] |= 1 << b
    g.gcd_left_table = _bound_table(g, g.left_div_mask, "left", lower=True)
    g.lcm_left_table = _bound_table(g, g.left_mult_mask, "left", lower=False)
    g.gcd_right_table = _bound_table(g, g.right_div_mask, "right", lower=True)
    g.lcm_right_table = _bound_table(g, g.right_mult_mask, "right", lower=False)

    # Complements and the Garside automorphism phi = complement squared.
    left_comp = [g.residual_left[a][g.delta] for a in range(n)]
    right_comp = [g.residual_right[a][g.delta] for a in range(n)]
    assert None not in left_comp and None not in right_comp
    g.left_complement = tuple(left_comp)
    g.right_complement = tuple(right_comp)
    if len(set(g.left_complement)) != n:
        seen: dict[int, int] = {}
        for a, c in enumerate(g.left_complement):
            if c in seen:
                raise AxiomViolation(
                    "phi",
                    [
                        f"complement is not injective: {g.render_simple(seen[c])} "
                        f"and {g.render_simple(a)} share {g.render_simple(c)}"
                    ],
                )
            seen[c] = a
    phi = tuple(g.left_complement[g.left_complement[a]] for a in range(n))
    bad = [a for a in (g.identity, g.delta) if phi[a] != a]
    if bad or sorted(phi) != list(range(n)):
        raise AxiomViolation(
            "phi", [f"phi is not a permutation fixing 1 and delta: {phi}"]
        )
    if {phi[a] for a in g.atoms} != set(g.atoms):
        raise AxiomViolation(
            "phi",
            [
                f"phi does not preserve atoms: "
                f"{[g.render_simple(phi[a]) for a in g.atoms]}"
            ],
        )
    g.phi_perm = phi
    powers = [tuple(range(n))]
    current = phi
    while current != powers[0]:
        powers.append(current)
        current = tuple(phi[current[a]] for a in range(n))
    g._phi_powers = powers

    # Left-weighted splitting of two-simple products.
    g.product_decomp_table = [[(0, 0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            e = g.gcd_left_table[g.left_complement[a]][b]
            c = g.simple_product(a, e)
            d = g.residual_left[e][b]
            assert c is not None and d is not None
            if g.gcd_left_table[g.left_complement[c]][d] != g.identity:
                raise AxiomViolation(
                    "lattice",
                    [
                        f"product of {g.render_simple(a)} and {g.render_simple(b)} "
                        f"has no left-weighted splitting"
                    ],
                )
            g.product_decomp_table[a][b] = (c, d)
    g._atom_nf = {a: NormalForm(0, (a,)) for a in g.atoms}

    # Twist identity x * Delta = Delta * phi(x), at the normal-form level.
    for x in range(n):
        if g._normalize_simple_seq([x, g.delta]) != g._normalize_simple_seq(
            [g.delta, phi[x]]
        ):
            raise AxiomViolation(
                "phi",
                [f"x.delta != delta.phi(x) for x = {g.render_simple(x)}"],
            )
    return g


def verify_presentation(p: Presentation, budget: int = DEFAULT_BUDGET) -> dict:
    """Run the staged axiom checks and emit the verification report."""
    stages = ("balanced", "lattice", "phi")
    axioms: dict[str, bool | None] = {s: None for s in stages}
    try:
        g = build_garside(p, budget)
    except AxiomViolation as exc:
        for stage in stages:
            if stage == exc.kind:
                axioms[stage] = False
                break
            axioms[stage] = True
        return {
            "schema": 1,
            "axioms": axioms,
            "simple_count": None,
            "phi_order": None,
            "witnesses": exc.witnesses,
        }
    return {
        "schema": 1,
        "axioms": {s: True for s in stages},
        "simple_count": len(g.simples),
        "phi_order": g.phi_order,
        "witnesses": [],
    }
