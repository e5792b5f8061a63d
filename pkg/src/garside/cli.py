"""Command-line verification driver.

Subcommands
-----------
verify      axiom report for a presentation
nf          normal form of a (possibly signed) word
divided     the divided category C_p^q as JSON or DOT
roots       existence and conjugacy of d-th roots of a central delta power
regular     regular-number arithmetic for a reflection group
pairs       isodiscriminantal pair search over the group catalogue
typeb       type B family: presentation, epsilon check, winding
scenario    bundled end-to-end verification suites

Reports are JSON on stdout with a ``schema`` field and deterministic
ordering; diagnostics go to stderr.  Exit status: 0 when every check
passes, 1 when a verification claim fails, 2 for input or environment
problems (unreadable source, bad arguments, enumeration budget).  The
per-stratum enumeration budget honours ``--budget`` first, then the
``GARSIDE_ENUM_BUDGET`` environment variable, then the built-in default.

Word arguments use the ``.gar`` token syntax, whitespace-separated, with
an optional ``^-1`` suffix per letter for inverses.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections.abc import Callable

from . import bundled, divided, periodic, reflgroups, typeb
from .errors import (
    AxiomViolation,
    BudgetExceeded,
    GarsideError,
    NonComposablePath,
    ParseError,
    PeriodicityError,
    UnknownGroup,
)
from .monoid import GarsideStructure, NormalForm, build_garside, verify_presentation
from .presentation import DEFAULT_BUDGET, Presentation

ENV_BUDGET = "GARSIDE_ENUM_BUDGET"

SCENARIO_NAMES = (
    "verify-g12",
    "verify-g13",
    "verify-typeb",
    "verify-regular",
    "verify-pairs",
)


def _resolve_budget(value: int | None) -> int:
    if value is not None:
        if value < 1:
            raise GarsideError(f"budget must be positive, got {value}")
        return value
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        parsed = int(raw)
    except ValueError:
        raise GarsideError(f"{ENV_BUDGET} must be an integer, got {raw!r}") from None
    if parsed < 1:
        raise GarsideError(f"{ENV_BUDGET} must be positive, got {parsed}")
    return parsed


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _parse_signed_word(p: Presentation, text: str) -> list[tuple[int, int]]:
    letters = []
    for token in text.split():
        name, caret, exponent = token.partition("^")
        if caret and exponent != "-1":
            raise ParseError(f"unsupported exponent in {token!r} (only ^-1)")
        letters.append((p.word_from_tokens([name])[0], -1 if caret else 1))
    return letters


# -- ad-hoc subcommands ------------------------------------------------------


def _cmd_verify(args: argparse.Namespace, budget: int) -> int:
    report = verify_presentation(bundled.load_presentation(args.source), budget)
    _emit(
        {
            "schema": 1,
            "source": args.source,
            "axioms": report["axioms"],
            "simple_count": report["simple_count"],
            "phi_order": report["phi_order"],
            "witnesses": report["witnesses"],
        }
    )
    return 0 if all(report["axioms"].values()) else 1


def _cmd_nf(args: argparse.Namespace, budget: int) -> int:
    g = bundled.get_structure(args.source, budget)
    text = " ".join(args.word)
    nf = g.normal_form_signed(_parse_signed_word(g.presentation, text))
    _emit(
        {
            "schema": 1,
            "source": args.source,
            "word": text,
            "delta_power": nf.delta_power,
            "factors": [g.render_simple(f) for f in nf.factors],
            "rendered": g.format_normal_form(nf),
            "canonical_length": g.nf_length(nf),
        }
    )
    return 0


def _render_dot(cat: divided.DividedCategory) -> str:
    lines = [f'digraph "C_{cat.p}^{cat.q}" {{']
    for oid in range(len(cat.objects)):
        lines.append(f'  o{oid} [label="{cat.object_label(oid)}"];')
    for mid, m in enumerate(cat.morphisms):
        style = ", style=dashed" if mid in cat.eliminated else ""
        lines.append(
            f'  o{m.source} -> o{m.target} [label="{cat.morphism_label(mid)}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines)


def _cmd_divided(args: argparse.Namespace, budget: int) -> int:
    g = bundled.get_structure(args.source, budget)
    cat = divided.build_category(g, args.p, args.q)
    if args.dot:
        sys.stdout.write(_render_dot(cat) + "\n")
        return 0
    _emit(
        {
            "schema": 1,
            "source": args.source,
            "p": args.p,
            "q": args.q,
            "objects": [
                {"id": oid, "label": cat.object_label(oid)}
                for oid in range(len(cat.objects))
            ],
            "morphisms": [
                {
                    "id": mid,
                    "label": cat.morphism_label(mid),
                    "src": m.source,
                    "tgt": m.target,
                    "endo": m.is_endo(),
                    "eliminated": mid in cat.eliminated,
                }
                for mid, m in enumerate(cat.morphisms)
            ],
            "relations": [
                {"lhs": lhs, "rhs": rhs, "label": cat.relation_label((lhs, rhs))}
                for lhs, rhs in cat.relations
            ],
            "component_count": len(divided.components(cat)),
        }
    )
    return 0


def _centralizer_payload(
    g: GarsideStructure, summary: periodic.CentralizerSummary | None
) -> dict | None:
    if summary is None:
        return None
    collapse = summary.generator_collapse
    return {
        "generators": summary.generator_count,
        "relators": summary.relator_count,
        "cyclic": summary.cyclic,
        "collapse": None if collapse is None else g.format_normal_form(collapse),
        "inconclusive": summary.inconclusive,
    }


def _cmd_roots(args: argparse.Namespace, budget: int) -> int:
    g = bundled.get_structure(args.source, budget)
    report = periodic.roots_report(g, args.zp, args.d, with_centralizer=args.centralizer)
    _emit(
        {
            "schema": 1,
            "source": args.source,
            "zp_power": args.zp,
            "d": report.d,
            "p_reduced": report.p_reduced,
            "q_reduced": report.q_reduced,
            "object_count": report.object_count,
            "morphism_count": report.morphism_count,
            "component_count": report.component_count,
            "exists": report.exists,
            "centralizer": _centralizer_payload(g, report.centralizer),
        }
    )
    return 0


def _regularity_payload(report: reflgroups.RegularityReport) -> dict:
    return {
        "d": report.d,
        "regular": report.regular,
        "degrees_divisible": list(report.a),
        "codegrees_divisible": list(report.b),
        "fundamental": report.fundamental,
        "class": None if report.r_class is None else list(report.r_class),
        "class_minimum": report.class_minimum,
    }


def _cmd_regular(args: argparse.Namespace, budget: int) -> int:
    data = reflgroups.group_data(args.group)
    payload = {
        "schema": 1,
        "group": data.name,
        "degrees": list(data.degrees),
        "codegrees": list(data.codegrees),
        "rank": data.rank,
        "order": reflgroups.group_order(data),
        "center_order": reflgroups.center_order(data),
    }
    if args.d is not None:
        payload["report"] = _regularity_payload(reflgroups.regularity(data, args.d))
    else:
        regular = reflgroups.regular_numbers(data)
        payload["regular_numbers"] = list(regular)
        payload["reports"] = [
            _regularity_payload(reflgroups.regularity(data, d)) for d in regular
        ]
    _emit(payload)
    return 0


def _cmd_pairs(args: argparse.Namespace, budget: int) -> int:
    pairs = reflgroups.isodiscriminantal_pairs(args.max_de, args.max_n)
    _emit(
        {
            "schema": 1,
            "max_de": args.max_de,
            "max_n": args.max_n,
            "count": len(pairs),
            "pairs": [
                {
                    "first": p.first,
                    "second": p.second,
                    "degrees": list(p.degrees),
                    "codegrees": list(p.codegrees),
                }
                for p in pairs
            ],
        }
    )
    return 0


def _typeb_structure(n: int, budget: int) -> GarsideStructure:
    if n in (2, 3):
        return bundled.get_structure(f"typeb{n}", budget)
    return build_garside(typeb.typeb_presentation(n), budget)


def _cmd_typeb(args: argparse.Namespace, budget: int) -> int:
    p = typeb.typeb_presentation(args.n)
    payload: dict = {
        "schema": 1,
        "n": args.n,
        "generators": list(p.generators),
        "relations": [f"{p.render(lhs)} = {p.render(rhs)}" for lhs, rhs in p.relations],
        "delta": p.render(p.delta_word),
    }
    failed = False
    if args.check_epsilon:
        g = _typeb_structure(args.n, budget)
        report = typeb.check_epsilon(g, args.n)
        payload["simple_count"] = len(g.simples)
        payload["epsilon_check"] = {
            "epsilon": report["epsilon"],
            "epsilon_power_is_delta": report["epsilon_power_is_delta"],
            "delta_central": report["delta_central"],
            "phi_order": report["phi_order"],
            "syntactic_b1": report["syntactic_b1"],
        }
        failed = not (
            report["epsilon_power_is_delta"] and report["delta_central"]
        )
    if args.wd is not None:
        letters = _parse_signed_word(p, args.wd)
        payload["winding"] = {"word": args.wd, "value": typeb.winding(letters)}
    if args.member is not None:
        if args.e is None:
            raise GarsideError("--member requires -e to name the subgroup index")
        letters = _parse_signed_word(p, args.member)
        payload["membership"] = {
            "word": args.member,
            "e": args.e,
            "member": typeb.is_member(letters, args.e),
        }
    _emit(payload)
    return 1 if failed else 0


# -- scenario suites ---------------------------------------------------------

# A check is (id, description, frozen expected value, computation).  The
# expected values are literals so a regression shows up as a reported
# mismatch, never as a silently recomputed baseline.
Check = tuple[str, str, object, Callable[[], object]]

_AXIOMS_OK = {"balanced": True, "lattice": True, "phi": True}


def _axioms(source: str, budget: int) -> dict:
    report = verify_presentation(bundled.load_presentation(source), budget)
    return report["axioms"]


def _word_nf(g: GarsideStructure, text: str) -> NormalForm:
    return g.normal_form(g.presentation.word_from_tokens(text.split()))


def _divided_rendered(g: GarsideStructure, p: int, q: int) -> list[list[str]]:
    return [
        [g.render_simple(a) for a in t] for t in divided.divided_set(g, p, q)
    ]


def _category_shape(g: GarsideStructure, p: int, q: int) -> dict:
    cat = divided.build_category(g, p, q)
    return {
        "objects": len(cat.objects),
        "morphisms": len(cat.generator_ids()),
        "relations": len(cat.relations),
        "components": len(divided.components(cat)),
    }


def _category_generators(g: GarsideStructure, p: int, q: int) -> list[dict]:
    cat = divided.build_category(g, p, q)
    return [
        {
            "label": cat.morphism_label(mid),
            "src": cat.morphisms[mid].source,
            "tgt": cat.morphisms[mid].target,
        }
        for mid in cat.generator_ids()
    ]


def _category_relations(g: GarsideStructure, p: int, q: int) -> list[str]:
    cat = divided.build_category(g, p, q)
    return [cat.relation_label(rel) for rel in cat.relations]


def _vertex_summary(g: GarsideStructure, p: int, q: int) -> dict:
    cat = divided.build_category(g, p, q)
    v = divided.vertex_group(cat, 0)
    simp = divided.simplify_presentation(v)
    collapse = None
    if len(simp.generators) == 1:
        collapse = g.format_normal_form(v.collapse_images[simp.generators[0]])
    return {
        "generators": len(simp.generators),
        "relators": len(simp.relators),
        "inconclusive": simp.inconclusive,
        "collapse": collapse,
    }


def _collapse_power(g: GarsideStructure, p: int, q: int, k: int) -> str:
    cat = divided.build_category(g, p, q)
    v = divided.vertex_group(cat, 0)
    simp = divided.simplify_presentation(v)
    image = v.collapse_images[simp.generators[0]]
    return g.format_normal_form(g.power(image, k))


def _exists_map(g: GarsideStructure, zp_power: int) -> dict[str, bool]:
    return {
        str(d): periodic.roots_report(g, zp_power, d).exists
        for d in periodic.candidate_root_orders(g, zp_power)
    }


def _root_centralizer(g: GarsideStructure, zp_power: int, d: int) -> dict:
    report = periodic.roots_report(g, zp_power, d, with_centralizer=True)
    payload = _centralizer_payload(g, report.centralizer)
    assert payload is not None
    return {
        "cyclic": payload["cyclic"],
        "generators": payload["generators"],
        "relators": payload["relators"],
        "collapse": payload["collapse"],
    }


def _roots_vs_regular(g: GarsideStructure, zp_power: int, group: str) -> dict:
    exists = [
        d
        for d in periodic.candidate_root_orders(g, zp_power)
        if periodic.roots_report(g, zp_power, d).exists
    ]
    regular = list(reflgroups.regular_numbers(reflgroups.group_data(group)))
    return {"roots": exists, "regular": regular}


def _scenario_g12(budget: int) -> list[Check]:
    src = "g12"

    def g() -> GarsideStructure:
        return bundled.get_structure(src, budget)

    def power_of(text: str, k: int) -> str:
        s = g()
        return s.format_normal_form(s.power(_word_nf(s, text), k))

    return [
        (
            "c01-axioms",
            "balanced, lattice, and phi axioms hold",
            _AXIOMS_OK,
            lambda: _axioms(src, budget),
        ),
        (
            "c02-simple-count",
            "eleven simple elements",
            11,
            lambda: len(g().simples),
        ),
        (
            "c03-phi-order",
            "phi has order three",
            3,
            lambda: g().phi_order,
        ),
        (
            "c04-phi-atoms",
            "phi cycles the atoms s -> t -> u -> s",
            ["t", "u", "s"],
            lambda: [g().render_simple(g().phi_simple(a)) for a in g().atoms],
        ),
        (
            "c05-power-stu-4",
            "(s t u)^4 = delta^3",
            "delta^3",
            lambda: power_of("s t u", 4),
        ),
        (
            "c06-power-stu-8",
            "(s t u)^8 = delta^6",
            "delta^6",
            lambda: power_of("s t u", 8),
        ),
        (
            "c07-delta3-central",
            "delta^3 is central",
            True,
            lambda: g().is_central(NormalForm(3, ())),
        ),
        (
            "c08-delta-not-central",
            "delta itself is not central",
            False,
            lambda: g().is_central(NormalForm(1, ())),
        ),
        (
            "c09-divided-2-1",
            "D_2^1 is empty",
            [],
            lambda: _divided_rendered(g(), 2, 1),
        ),
        (
            "c10-divided-4-3",
            "D_4^3 is the three cyclic atom tuples",
            [["s", "t", "u", "s"], ["t", "u", "s", "t"], ["u", "s", "t", "u"]],
            lambda: _divided_rendered(g(), 4, 3),
        ),
        (
            "c11-divided-2-3",
            "D_2^3 pairs each length-two simple with its complement",
            [["s t", "u s"], ["t u", "s t"], ["u s", "t u"]],
            lambda: _divided_rendered(g(), 2, 3),
        ),
        (
            "c12-divided-4-1",
            "D_4^1 is empty",
            [],
            lambda: _divided_rendered(g(), 4, 1),
        ),
        (
            "c13-category-1-1",
            "C_1^1 is a single object with one endomorphism",
            {"objects": 1, "morphisms": 1, "relations": 0, "components": 1},
            lambda: _category_shape(g(), 1, 1),
        ),
        (
            "c14-category-1-3",
            "C_1^3 is connected with all proper simples as endomorphisms",
            {"objects": 1, "morphisms": 10, "relations": 18, "components": 1},
            lambda: _category_shape(g(), 1, 3),
        ),
        (
            "c15-category-4-3",
            "C_4^3 is a connected three-cycle",
            {"objects": 3, "morphisms": 3, "relations": 0, "components": 1},
            lambda: _category_shape(g(), 4, 3),
        ),
        (
            "c16-category-1-2-vertex",
            "C_1^2 vertex group is infinite cyclic, generated by delta",
            {"generators": 1, "relators": 0, "inconclusive": False, "collapse": "delta"},
            lambda: _vertex_summary(g(), 1, 2),
        ),
        (
            "c17-category-2-3-shape",
            "C_2^3 has three objects, six morphisms, three relations",
            {"objects": 3, "morphisms": 6, "relations": 3, "components": 1},
            lambda: _category_shape(g(), 2, 3),
        ),
        (
            "c18-category-2-3-generators",
            "C_2^3 generating morphisms and their endpoints",
            [
                {"label": "(s, t)", "src": 0, "tgt": 1},
                {"label": "(t, u)", "src": 1, "tgt": 2},
                {"label": "(u, s)", "src": 2, "tgt": 0},
                {"label": "(s t, 1)", "src": 0, "tgt": 2},
                {"label": "(t u, 1)", "src": 1, "tgt": 0},
                {"label": "(u s, 1)", "src": 2, "tgt": 1},
            ],
            lambda: _category_generators(g(), 2, 3),
        ),
        (
            "c19-category-2-3-relations",
            "C_2^3 relations compose consecutive atom morphisms",
            [
                "(s, t) (t, u) = (s t, 1)",
                "(t, u) (u, s) = (t u, 1)",
                "(u, s) (s, t) = (u s, 1)",
            ],
            lambda: _category_relations(g(), 2, 3),
        ),
        (
            "c20-category-2-3-vertex",
            "C_2^3 vertex group simplifies to one free generator",
            {"generators": 1, "relators": 0, "inconclusive": False, "collapse": "s t u"},
            lambda: _vertex_summary(g(), 2, 3),
        ),
        (
            "c21-collapse-root",
            "the surviving generator is an eighth root of delta^6",
            "delta^6",
            lambda: _collapse_power(g(), 2, 3, 8),
        ),
        (
            "c22-roots-candidates",
            "candidate root orders are the divisors of 24",
            [1, 2, 3, 4, 6, 8, 12, 24],
            lambda: periodic.candidate_root_orders(g(), 6),
        ),
        (
            "c23-roots-exist",
            "d-th roots of delta^6 exist exactly for d in {1,2,3,4,6,8}",
            {
                "1": True,
                "2": True,
                "3": True,
                "4": True,
                "6": True,
                "8": True,
                "12": False,
                "24": False,
            },
            lambda: _exists_map(g(), 6),
        ),
        (
            "c24-roots-8-centralizer",
            "the eighth root has infinite cyclic centralizer on s t u",
            {"cyclic": True, "generators": 1, "relators": 0, "collapse": "s t u"},
            lambda: _root_centralizer(g(), 6, 8),
        ),
        (
            "c25-regular-match",
            "root existence coincides with the regular numbers of G12",
            {"roots": [1, 2, 3, 4, 6, 8], "regular": [1, 2, 3, 4, 6, 8]},
            lambda: _roots_vs_regular(g(), 6, "G12"),
        ),
    ]


def _scenario_g13(budget: int) -> list[Check]:
    src = "g13"

    def g() -> GarsideStructure:
        return bundled.get_structure(src, budget)

    def power_of(text: str, k: int) -> str:
        s = g()
        return s.format_normal_form(s.power(_word_nf(s, text), k))

    triple = [["a b c"] * 3, ["b c a"] * 3, ["c a b"] * 3]
    return [
        (
            "c01-axioms",
            "balanced, lattice, and phi axioms hold",
            _AXIOMS_OK,
            lambda: _axioms(src, budget),
        ),
        (
            "c02-simple-count",
            "ninety simple elements",
            90,
            lambda: len(g().simples),
        ),
        (
            "c03-phi-order",
            "phi is the identity",
            1,
            lambda: g().phi_order,
        ),
        (
            "c04-power-abc-3",
            "(a b c)^3 = delta",
            "delta",
            lambda: power_of("a b c", 3),
        ),
        (
            "c05-power-abc-12",
            "(a b c)^12 = delta^4",
            "delta^4",
            lambda: power_of("a b c", 12),
        ),
        (
            "c06-delta-central",
            "delta is central",
            True,
            lambda: g().is_central(NormalForm(1, ())),
        ),
        (
            "c07-divided-3-2",
            "D_3^2 is the three constant cube-root tuples",
            triple,
            lambda: _divided_rendered(g(), 3, 2),
        ),
        (
            "c08-divided-3-1",
            "D_3^1 equals D_3^2",
            triple,
            lambda: _divided_rendered(g(), 3, 1),
        ),
        (
            "c09-divided-9-4",
            "D_9^4 is empty",
            [],
            lambda: _divided_rendered(g(), 9, 4),
        ),
        (
            "c10-category-3-2",
            "C_3^2 is connected",
            {"objects": 3, "morphisms": 6, "relations": 6, "components": 1},
            lambda: _category_shape(g(), 3, 2),
        ),
        (
            "c11-category-3-1",
            "C_3^1 is connected",
            {"objects": 3, "morphisms": 6, "relations": 6, "components": 1},
            lambda: _category_shape(g(), 3, 1),
        ),
        (
            "c12-category-3-4-shape",
            "C_3^4 has three objects, six morphisms, six relations",
            {"objects": 3, "morphisms": 6, "relations": 6, "components": 1},
            lambda: _category_shape(g(), 3, 4),
        ),
        (
            "c13-category-3-4-generators",
            "C_3^4 generating morphisms and their endpoints",
            [
                {"label": "(a, b c)", "src": 0, "tgt": 1},
                {"label": "(b, c a)", "src": 1, "tgt": 2},
                {"label": "(c, a b)", "src": 2, "tgt": 0},
                {"label": "(a b, c)", "src": 0, "tgt": 2},
                {"label": "(b c, a)", "src": 1, "tgt": 0},
                {"label": "(c a, b)", "src": 2, "tgt": 1},
            ],
            lambda: _category_generators(g(), 3, 4),
        ),
        (
            "c14-category-3-4-relations",
            "C_3^4 presents six relations after endomorphism elimination",
            [
                "(a, b c) (b, c a) = (a b, c)",
                "(b, c a) (c, a b) = (b c, a)",
                "(c, a b) (a, b c) = (c a, b)",
                "(a b, c) (c, a b) = (a, b c) (b c, a)",
                "(b c, a) (a, b c) = (b, c a) (c a, b)",
                "(c a, b) (b, c a) = (c, a b) (a b, c)",
            ],
            lambda: _category_relations(g(), 3, 4),
        ),
        (
            "c15-category-3-4-vertex",
            "C_3^4 vertex group simplifies to one free generator",
            {"generators": 1, "relators": 0, "inconclusive": False, "collapse": "a b c"},
            lambda: _vertex_summary(g(), 3, 4),
        ),
        (
            "c16-collapse-root",
            "the surviving generator is a twelfth root of delta^4",
            "delta^4",
            lambda: _collapse_power(g(), 3, 4, 12),
        ),
        (
            "c17-roots-candidates",
            "candidate root orders are the divisors of 36",
            [1, 2, 3, 4, 6, 9, 12, 18, 36],
            lambda: periodic.candidate_root_orders(g(), 4),
        ),
        (
            "c18-roots-exist",
            "d-th roots of delta^4 exist exactly for d in {1,2,3,4,6,12}",
            {
                "1": True,
                "2": True,
                "3": True,
                "4": True,
                "6": True,
                "9": False,
                "12": True,
                "18": False,
                "36": False,
            },
            lambda: _exists_map(g(), 4),
        ),
        (
            "c19-roots-12-centralizer",
            "the twelfth root has infinite cyclic centralizer on a b c",
            {"cyclic": True, "generators": 1, "relators": 0, "collapse": "a b c"},
            lambda: _root_centralizer(g(), 4, 12),
        ),
        (
            "c20-regular-match",
            "root existence coincides with the regular numbers of G13",
            {"roots": [1, 2, 3, 4, 6, 12], "regular": [1, 2, 3, 4, 6, 12]},
            lambda: _roots_vs_regular(g(), 4, "G13"),
        ),
    ]


def _scenario_typeb(budget: int) -> list[Check]:
    def b(n: int) -> GarsideStructure:
        return bundled.get_structure(f"typeb{n}", budget)

    def epsilon_summary(n: int) -> dict:
        report = typeb.check_epsilon(b(n), n)
        return {
            "epsilon": report["epsilon"],
            "epsilon_power_is_delta": report["epsilon_power_is_delta"],
            "delta_central": report["delta_central"],
            "syntactic_b1": report["syntactic_b1"],
        }

    def wd(n: int, text: str) -> int:
        return typeb.winding(_parse_signed_word(typeb.typeb_presentation(n), text))

    def member(n: int, text: str, e: int) -> bool:
        return typeb.is_member(
            _parse_signed_word(typeb.typeb_presentation(n), text), e
        )

    def cancel() -> str:
        s = b(3)
        letters = _parse_signed_word(s.presentation, "b1 b1^-1 b2")
        return s.format_normal_form(s.normal_form_signed(letters))

    return [
        (
            "c01-b2-axioms",
            "rank two: balanced, lattice, and phi axioms hold",
            _AXIOMS_OK,
            lambda: _axioms("typeb2", budget),
        ),
        (
            "c02-b2-simple-count",
            "rank two has eight simples",
            8,
            lambda: len(b(2).simples),
        ),
        (
            "c03-b2-phi-order",
            "rank two: phi is the identity",
            1,
            lambda: b(2).phi_order,
        ),
        (
            "c04-b2-epsilon",
            "rank two: epsilon^2 = delta, syntactically a defining relation",
            {
                "epsilon": "b2 b1",
                "epsilon_power_is_delta": True,
                "delta_central": True,
                "syntactic_b1": True,
            },
            lambda: epsilon_summary(2),
        ),
        (
            "c05-b3-axioms",
            "rank three: balanced, lattice, and phi axioms hold",
            _AXIOMS_OK,
            lambda: _axioms("typeb3", budget),
        ),
        (
            "c06-b3-simple-count",
            "rank three has forty-eight simples",
            48,
            lambda: len(b(3).simples),
        ),
        (
            "c07-b3-phi-order",
            "rank three: phi is the identity",
            1,
            lambda: b(3).phi_order,
        ),
        (
            "c08-b3-epsilon",
            "rank three: epsilon^3 = delta",
            {
                "epsilon": "b3 b2 b1",
                "epsilon_power_is_delta": True,
                "delta_central": True,
                "syntactic_b1": None,
            },
            lambda: epsilon_summary(3),
        ),
        (
            "c09-winding-positive",
            "winding counts b1 letters",
            2,
            lambda: wd(2, "b1 b2 b1 b2"),
        ),
        (
            "c10-winding-signed",
            "winding is signed",
            1,
            lambda: wd(3, "b1 b2^-1 b1 b2 b1^-1"),
        ),
        (
            "c11-member-even",
            "winding 2 lies in the index-2 kernel",
            True,
            lambda: member(2, "b1 b2 b1 b2", 2),
        ),
        (
            "c12-member-odd",
            "winding 1 is outside the index-2 kernel",
            False,
            lambda: member(2, "b1 b2", 2),
        ),
        (
            "c13-signed-cancel",
            "b1 b1^-1 b2 reduces to b2",
            "b2",
            cancel,
        ),
    ]


def _scenario_regular(budget: int) -> list[Check]:
    def classes(group: str) -> dict:
        data = reflgroups.group_data(group)
        out = {}
        for d in reflgroups.regular_numbers(data):
            rep = reflgroups.regularity(data, d)
            out[str(d)] = {
                "class": list(rep.r_class or ()),
                "minimum": rep.class_minimum,
            }
        return out

    def fundamentals(group: str) -> dict:
        data = reflgroups.group_data(group)
        return {
            str(d): reflgroups.regularity(data, d).fundamental
            for d in reflgroups.regular_numbers(data)
        }

    def center_anchor() -> dict:
        out = {}
        for group in ("G12", "G13"):
            data = reflgroups.group_data(group)
            center = reflgroups.center_order(data)
            div = [e for e in range(1, center + 1) if center % e == 0]
            out[group] = list(reflgroups.regularity(data, 1).r_class or ()) == div
        return out

    def dihedral_case() -> dict:
        rep = reflgroups.regularity(reflgroups.group_data("G(12,12,2)"), 3)
        return {
            "regular": rep.regular,
            "class": list(rep.r_class or ()),
            "minimum": rep.class_minimum,
        }

    def exceptional_minima() -> bool:
        for data in reflgroups.exceptional_table().values():
            for d in reflgroups.regular_numbers(data):
                if reflgroups.regularity(data, d).class_minimum is None:
                    return False
        return True

    def fundamental_invariance() -> bool:
        for data in reflgroups.exceptional_table().values():
            for d in reflgroups.regular_numbers(data):
                rep = reflgroups.regularity(data, d)
                frep = reflgroups.regularity(data, rep.fundamental)
                if not (frep.regular and frep.a == rep.a and frep.b == rep.b):
                    return False
        return True

    return [
        (
            "c01-g12-regular-numbers",
            "regular numbers of G12",
            [1, 2, 3, 4, 6, 8],
            lambda: list(reflgroups.regular_numbers(reflgroups.group_data("G12"))),
        ),
        (
            "c02-g12-classes",
            "regularity classes of G12 with divisibility minima",
            {
                "1": {"class": [1, 2], "minimum": 1},
                "2": {"class": [1, 2], "minimum": 1},
                "3": {"class": [3, 6], "minimum": 3},
                "4": {"class": [4, 8], "minimum": 4},
                "6": {"class": [3, 6], "minimum": 3},
                "8": {"class": [4, 8], "minimum": 4},
            },
            lambda: classes("G12"),
        ),
        (
            "c03-g12-fundamentals",
            "fundamental regular numbers of G12",
            {"1": 2, "2": 2, "3": 6, "4": 8, "6": 6, "8": 8},
            lambda: fundamentals("G12"),
        ),
        (
            "c04-g13-regular-numbers",
            "regular numbers of G13",
            [1, 2, 3, 4, 6, 12],
            lambda: list(reflgroups.regular_numbers(reflgroups.group_data("G13"))),
        ),
        (
            "c05-g13-classes",
            "regularity classes of G13 with divisibility minima",
            {
                "1": {"class": [1, 2, 4], "minimum": 1},
                "2": {"class": [1, 2, 4], "minimum": 1},
                "3": {"class": [3, 6, 12], "minimum": 3},
                "4": {"class": [1, 2, 4], "minimum": 1},
                "6": {"class": [3, 6, 12], "minimum": 3},
                "12": {"class": [3, 6, 12], "minimum": 3},
            },
            lambda: classes("G13"),
        ),
        (
            "c06-g13-fundamentals",
            "fundamental regular numbers of G13",
            {"1": 4, "2": 4, "3": 12, "4": 4, "6": 12, "12": 12},
            lambda: fundamentals("G13"),
        ),
        (
            "c07-center-anchor",
            "the class of 1 is exactly the divisors of the center order",
            {"G12": True, "G13": True},
            center_anchor,
        ),
        (
            "c08-dihedral-no-minimum",
            "G(12,12,2) at d=3 is regular but has no class minimum",
            {"regular": True, "class": [3, 4, 6, 12], "minimum": None},
            dihedral_case,
        ),
        (
            "c09-exceptional-minima",
            "every exceptional regular number has a unique class minimum",
            True,
            exceptional_minima,
        ),
        (
            "c10-fundamental-invariance",
            "fundamental regular numbers keep the divisibility filters",
            True,
            fundamental_invariance,
        ),
    ]


def _scenario_pairs(budget: int) -> list[Check]:
    def pair_names() -> list[list[str]]:
        return [[p.first, p.second] for p in reflgroups.isodiscriminantal_pairs()]

    return [
        (
            "c01-pair-count",
            "exactly eleven isodiscriminantal pairs",
            11,
            lambda: len(reflgroups.isodiscriminantal_pairs()),
        ),
        (
            "c02-pair-list",
            "the eleven pairs, ordered by shared invariants",
            [
                ["G(1,1,3)", "G(3,3,2)"],
                ["G(1,1,4)", "G(2,2,3)"],
                ["G(2,1,2)", "G(4,4,2)"],
                ["G5", "G(6,1,2)"],
                ["G26", "G(6,1,3)"],
                ["G7", "G(12,2,2)"],
                ["G10", "G(12,1,2)"],
                ["G15", "G(24,4,2)"],
                ["G11", "G(24,2,2)"],
                ["G18", "G(30,1,2)"],
                ["G19", "G(60,2,2)"],
            ],
            pair_names,
        ),
    ]


_SCENARIOS: dict[str, Callable[[int], list[Check]]] = {
    "verify-g12": _scenario_g12,
    "verify-g13": _scenario_g13,
    "verify-typeb": _scenario_typeb,
    "verify-regular": _scenario_regular,
    "verify-pairs": _scenario_pairs,
}


def run_scenario(name: str, budget: int = DEFAULT_BUDGET, timings: bool = False) -> dict:
    """Execute a bundled suite and return its report dict.

    Math-level failures become failed checks inside the report; missing
    sources and budget overruns propagate so the caller can abort without
    emitting a partial report.
    """
    checks = _SCENARIOS[name](budget)
    results = []
    for cid, description, expected, compute in checks:
        start = time.perf_counter()
        try:
            actual = compute()
        except BudgetExceeded:
            raise
        except GarsideError as exc:
            actual = f"error: {exc}"
        elapsed = (time.perf_counter() - start) * 1000.0
        results.append(
            {
                "id": cid,
                "description": description,
                "expected": expected,
                "actual": actual,
                "pass": actual == expected,
                "elapsed_ms": round(elapsed, 3) if timings else None,
            }
        )
    results.sort(key=lambda item: item["id"])
    return {
        "schema": 1,
        "scenario": name,
        "pass": all(item["pass"] for item in results),
        "checks": results,
    }


def _cmd_scenario(args: argparse.Namespace, budget: int) -> int:
    report = run_scenario(args.name, budget, timings=args.timings)
    _emit(report)
    return 0 if report["pass"] else 1


# -- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="Garside structure computations and verification suites.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--budget",
        type=int,
        default=None,
        help="per-stratum enumeration cap (default from "
        f"{ENV_BUDGET} or {DEFAULT_BUDGET})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", parents=[shared], help="check the Garside axioms for a presentation"
    )
    p_verify.add_argument("source", help="presentation file or bundled name")
    p_verify.set_defaults(handler=_cmd_verify)

    p_nf = sub.add_parser(
        "nf", parents=[shared], help="normal form of a word in the enveloping group"
    )
    p_nf.add_argument("source", help="presentation file or bundled name")
    p_nf.add_argument("word", nargs="+", help="letters, each optionally with ^-1")
    p_nf.set_defaults(handler=_cmd_nf)

    p_div = sub.add_parser(
        "divided", parents=[shared], help="divided category C_p^q"
    )
    p_div.add_argument("source", help="presentation file or bundled name")
    p_div.add_argument("-p", type=int, required=True, help="tuple length")
    p_div.add_argument("-q", type=int, required=True, help="twisted-shift power")
    p_div.add_argument("--dot", action="store_true", help="emit a DOT graph instead of JSON")
    p_div.set_defaults(handler=_cmd_divided)

    p_roots = sub.add_parser(
        "roots", parents=[shared], help="d-th roots of the central power delta^k"
    )
    p_roots.add_argument("source", help="presentation file or bundled name")
    p_roots.add_argument("--zp", type=int, required=True, help="central delta power k")
    p_roots.add_argument("-d", type=int, required=True, help="root order")
    p_roots.add_argument(
        "--centralizer",
        action="store_true",
        help="summarize the vertex group at the first object",
    )
    p_roots.set_defaults(handler=_cmd_roots)

    p_reg = sub.add_parser(
        "regular", parents=[shared], help="regular numbers of a reflection group"
    )
    p_reg.add_argument("group", help='group name, e.g. "G12" or "G(12,12,2)"')
    p_reg.add_argument("-d", type=int, default=None, help="report a single candidate")
    p_reg.set_defaults(handler=_cmd_regular)

    p_pairs = sub.add_parser(
        "pairs", parents=[shared], help="groups sharing degrees and codegrees"
    )
    p_pairs.add_argument("--max-de", type=int, default=120, help="series cap on de")
    p_pairs.add_argument("--max-n", type=int, default=10, help="series cap on n")
    p_pairs.set_defaults(handler=_cmd_pairs)

    p_typeb = sub.add_parser(
        "typeb", parents=[shared], help="type B family presentation and checks"
    )
    p_typeb.add_argument("-n", type=int, required=True, help="number of generators")
    p_typeb.add_argument(
        "--check-epsilon",
        action="store_true",
        help="verify epsilon^n = delta (builds the structure; n <= 3)",
    )
    p_typeb.add_argument("--wd", metavar="WORD", help="winding number of a signed word")
    p_typeb.add_argument(
        "--member", metavar="WORD", help="test membership in the winding kernel mod e"
    )
    p_typeb.add_argument("-e", type=int, default=None, help="subgroup index for --member")
    p_typeb.set_defaults(handler=_cmd_typeb)

    p_scen = sub.add_parser(
        "scenario", parents=[shared], help="run a bundled verification suite"
    )
    p_scen.add_argument("name", choices=SCENARIO_NAMES)
    p_scen.add_argument(
        "--timings", action="store_true", help="record per-check elapsed milliseconds"
    )
    p_scen.set_defaults(handler=_cmd_scenario)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        budget = _resolve_budget(args.budget)
        return args.handler(args, budget)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, UnknownGroup) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AxiomViolation, PeriodicityError, NonComposablePath) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GarsideError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
