"""Fixed formulas and the fixed presentation used throughout the suite.

The presentation below has seven equations over the letters a-e; the two
big sentences encode its word problem with branched prefixes in two
shapes.  The first uses twelve independent rows, two per function symbol
(for the five letters and the composite cc); the second gets away with
two universals by hanging ten existentials off the first and eight off
the second.  Both come with their conjuncts individually labeled so tests
can point at the exact clause that fails.

``infinity_sentence`` is the classic branched sentence that is true
exactly on infinite domains (an injective, non-surjective pairing forced
by one equivalence and one avoided value), so its negation is a sentence
true on every finite domain and no infinite one.
"""

from __future__ import annotations

import itertools

from .evaluator import evaluate
from .reducer import separation_clauses
from .syntax import (
    And,
    Branch,
    Exists,
    Formula,
    HenkinPrefix,
    Iff,
    Implies,
    Not,
    Variable,
    equal,
    free_variables,
    not_equal,
)
from .words import Equation, Presentation

__all__ = [
    "ceitin_presentation",
    "ceitin_h12_prefix",
    "ceitin_h12_clauses",
    "ceitin_h12",
    "ceitin_h12_with_query",
    "ceitin_e10_prefix",
    "ceitin_e10_clauses",
    "ceitin_e10",
    "infinity_sentence",
    "ehrenfeucht_finiteness",
    "identity_check_failures",
]


def ceitin_presentation() -> Presentation:
    return Presentation.of(
        [
            ("ac", "ca"),
            ("ad", "da"),
            ("bc", "cb"),
            ("bd", "db"),
            ("eca", "ce"),
            ("edb", "de"),
            ("cca", "ccae"),
        ]
    )


_H12_KEYS = ("a", "b", "c", "d", "e", "cc")


def ceitin_h12_prefix() -> HenkinPrefix:
    universals = []
    existentials = []
    deps = []
    for key in _H12_KEYS:
        for mark in ("", "'"):
            x = Variable(f"x{mark}_{key}")
            universals.append(x)
            existentials.append(Variable(f"y{mark}_{key}"))
            deps.append((x,))
    return HenkinPrefix(tuple(universals), tuple(existentials), tuple(deps))


def ceitin_h12_clauses() -> list[tuple[str, Formula]]:
    """The twelve-row matrix, one labeled conjunct at a time.

    Each function symbol q owns two rows (x_q, y_q) and (x'_q, y'_q); the
    one-function clauses glue each pair into a single unary function, the
    compose clause defines cc as c applied twice, and each relation clause
    asserts one equation of the presentation at an arbitrary point.
    """
    out: list[tuple[str, Formula]] = []
    for key in _H12_KEYS:
        out.append(
            (
                f"one-function:{key}",
                Implies(equal(f"x_{key}", f"x'_{key}"), equal(f"y_{key}", f"y'_{key}")),
            )
        )
    out.append(
        (
            "compose:cc",
            Implies(
                And((equal("x_c", "x_cc"), equal("y_c", "x'_c"))),
                equal("y'_c", "y_cc"),
            ),
        )
    )
    out.append(
        (
            "relation:ac=ca",
            Implies(
                And((equal("x_a", "x_c"), equal("x'_a", "y_c"), equal("x'_c", "y_a"))),
                equal("y'_c", "y'_a"),
            ),
        )
    )
    out.append(
        (
            "relation:ad=da",
            Implies(
                And((equal("x_a", "x_d"), equal("x'_a", "y_d"), equal("x'_d", "y_a"))),
                equal("y'_d", "y'_a"),
            ),
        )
    )
    out.append(
        (
            "relation:bc=cb",
            Implies(
                And((equal("x_b", "x_c"), equal("x'_b", "y_c"), equal("x'_c", "y_b"))),
                equal("y'_c", "y'_b"),
            ),
        )
    )
    out.append(
        (
            "relation:bd=db",
            Implies(
                And((equal("x_b", "x_d"), equal("x'_b", "y_d"), equal("x'_d", "y_b"))),
                equal("y'_d", "y'_b"),
            ),
        )
    )
    out.append(
        (
            "relation:eca=ce",
            Implies(
                And(
                    (
                        equal("x_a", "x'_e"),
                        equal("y_a", "x_c"),
                        equal("y'_e", "x'_c"),
                        equal("x_e", "y_c"),
                    )
                ),
                equal("y_e", "y'_c"),
            ),
        )
    )
    out.append(
        (
            "relation:edb=de",
            Implies(
                And(
                    (
                        equal("x_b", "x'_e"),
                        equal("y_b", "x_d"),
                        equal("y_d", "x_e"),
                        equal("y'_e", "x'_d"),
                    )
                ),
                equal("y_e", "y'_d"),
            ),
        )
    )
    out.append(
        (
            "relation:cca=ccae",
            Implies(
                And(
                    (
                        equal("x_a", "x'_e"),
                        equal("y_a", "x_cc"),
                        equal("y'_e", "x'_a"),
                        equal("y'_a", "x'_cc"),
                    )
                ),
                equal("y_cc", "y'_cc"),
            ),
        )
    )
    return out


def ceitin_h12() -> Branch:
    clauses = ceitin_h12_clauses()
    return Branch(ceitin_h12_prefix(), And(tuple(f for _, f in clauses)))


def ceitin_h12_with_query(query: Equation) -> Exists:
    """The twelve-row sentence extended with a separation spine for a query.

    The designated row for each query letter is its unprimed row, so the
    query may only use the letters a-e.
    """
    letters = set(query.lhs) | set(query.rhs)
    extra = sorted(letters - set("abcde"))
    if extra:
        raise ValueError("query letters must be among a-e, got: " + ", ".join(extra))
    t_vars = tuple(Variable(f"t{j}") for j in range(len(query.lhs) + 1))
    s_vars = tuple(Variable(f"s{j}") for j in range(len(query.rhs) + 1))
    designated = {
        ch: (Variable(f"x_{ch}"), Variable(f"y_{ch}")) for ch in "abcde"
    }
    sep = separation_clauses(query, designated, t_vars, s_vars)
    matrix = And(tuple(f for _, f in ceitin_h12_clauses()) + tuple(sep))
    return Exists(t_vars + s_vars, Branch(ceitin_h12_prefix(), matrix))


_E10_ROW1 = ("y_a", "y_ca", "y_da", "y_b", "y_cb", "y_db", "y_e", "y_eca", "y_de", "y_cca")
_E10_ROW2 = ("y_c", "y_ac", "y_d", "y_ad", "y_bc", "y_bd", "y'_e", "y'_cca")


def ceitin_e10_prefix() -> HenkinPrefix:
    x1, x2 = Variable("x1"), Variable("x2")
    existentials = tuple(Variable(name) for name in _E10_ROW1 + _E10_ROW2)
    deps = ((x1,),) * len(_E10_ROW1) + ((x2,),) * len(_E10_ROW2)
    return HenkinPrefix((x1, x2), existentials, deps)


def ceitin_e10_clauses() -> list[tuple[str, Formula]]:
    """The two-universal matrix.

    Subscripts name the word each existential traces from its universal,
    so y_ca stands for the action of ca on x1 and y_ac for the action of
    ac on x2.  The compose clauses make those readings true, the
    one-function clauses identify the doubled symbols across the two rows,
    and the relation clauses assert the equations.
    """
    return [
        ("compose:ca", Implies(equal("y_a", "x2"), equal("y_c", "y_ca"))),
        ("compose:ac", Implies(equal("y_c", "x1"), equal("y_a", "y_ac"))),
        ("compose:da", Implies(equal("y_a", "x2"), equal("y_da", "y_d"))),
        ("compose:ad", Implies(equal("y_d", "x1"), equal("y_ad", "y_a"))),
        ("compose:cb", Implies(equal("y_b", "x2"), equal("y_cb", "y_c"))),
        ("compose:bc", Implies(equal("y_c", "x1"), equal("y_b", "y_bc"))),
        ("compose:db", Implies(equal("y_b", "x2"), equal("y_db", "y_d"))),
        ("compose:bd", Implies(equal("y_d", "x1"), equal("y_bd", "y_b"))),
        ("one-function:e", Implies(equal("x1", "x2"), equal("y_e", "y'_e"))),
        ("compose:eca", Implies(equal("y_ca", "x2"), equal("y_eca", "y'_e"))),
        ("compose:de", Implies(equal("y_e", "x2"), equal("y_de", "y_d"))),
        ("compose:cca", Implies(equal("y_ca", "x2"), equal("y_cca", "y_c"))),
        ("one-function:cca", Implies(equal("x1", "x2"), equal("y_cca", "y'_cca"))),
        (
            "relation:ac=ca,ad=da,bc=cb,bd=db",
            Implies(
                equal("x1", "x2"),
                And(
                    (
                        equal("y_ca", "y_ac"),
                        equal("y_ad", "y_da"),
                        equal("y_bc", "y_cb"),
                        equal("y_db", "y_bd"),
                    )
                ),
            ),
        ),
        ("relation:eca=ce", Implies(equal("y_e", "x2"), equal("y_eca", "y_c"))),
        ("relation:edb=de", Implies(equal("y_db", "x2"), equal("y_de", "y'_e"))),
        ("relation:cca=ccae", Implies(equal("y_e", "x2"), equal("y_cca", "y'_cca"))),
    ]


def ceitin_e10() -> Branch:
    clauses = ceitin_e10_clauses()
    return Branch(ceitin_e10_prefix(), And(tuple(f for _, f in clauses)))


def infinity_sentence() -> Exists:
    """True exactly on infinite domains.

    The branched prefix picks unary y(x) and w(z); the equivalence forces
    them to be one injective function, and the avoided value t makes that
    function miss a point.  No finite set carries such a function.
    """
    x, z = Variable("x"), Variable("z")
    y, w = Variable("y"), Variable("w")
    prefix = HenkinPrefix((x, z), (y, w), ((x,), (z,)))
    matrix = And((Iff(equal(y, w), equal(x, z)), not_equal("t", "y")))
    return Exists((Variable("t"),), Branch(prefix, matrix))


def ehrenfeucht_finiteness() -> Not:
    """True on every finite domain, false on every infinite one."""
    return Not(infinity_sentence())


def identity_check_failures(
    clauses: list[tuple[str, Formula]], prefix: HenkinPrefix, size: int
) -> list[str]:
    """Labels of clauses that fail under identity tables.

    Every existential of ``prefix`` must depend on exactly one universal;
    the check sets it equal to that universal.  A clause is only sensitive
    to the universals it mentions, directly or through an existential, so
    those are the only ones enumerated.  A correctly built matrix over
    these fixtures passes for every clause; a nonempty result names the
    conjunct that was mangled.
    """
    dep_of: dict[str, str] = {}
    for e, ds in zip(prefix.existentials, prefix.deps):
        if len(ds) != 1:
            raise ValueError(f"existential '{e}' does not have exactly one dependency")
        dep_of[e.name] = ds[0].name
    universal_names = {v.name for v in prefix.universals}
    failures = []
    for label, clause in clauses:
        mentioned = {v.name for v in free_variables(clause)}
        relevant = sorted(
            (mentioned & universal_names)
            | {dep_of[name] for name in mentioned if name in dep_of}
        )
        ok = True
        for combo in itertools.product(range(size), repeat=len(relevant)):
            env = dict(zip(relevant, combo))
            for name in mentioned:
                if name in dep_of:
                    env[name] = env[dep_of[name]]
            if not evaluate(clause, size, env=env):
                ok = False
                break
        if not ok:
            failures.append(label)
    return failures
