"""Static table data and the batch checks behind ``ntcodes evidence``.

Every check records what was computed, what was expected and a verdict of
"pass", "fail" or "skipped". Reports contain no timings or other run-dependent
values, so two runs produce byte-identical JSON.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ntcodes.certification import (
    design_counts,
    design_lambda,
    is_s_regular,
    neighbour_transitive,
    required_lambda,
)
from ntcodes.constructions import (
    binary_code_autgroup,
    design_autgroup,
    even_subcode_ph12,
    paley_hadamard_12,
    punctured_hadamard_12,
    repetition_code,
    repetition_transitive_group,
    weight_class_blocks,
)
from ntcodes.hamming import Vertex, distance_partition, hamming_distance
from ntcodes.perm import (
    entry_faithful,
    group_order,
    is_code_group,
    is_k_transitive,
    orbit,
    stabilizer,
)
from ntcodes.spectra import (
    DistanceDistribution,
    distance_distribution,
    lemma210_divides,
    macwilliams_transform,
    rational_str,
    singleton_bound,
    sphere_size,
)

REPORT_FORMAT = "ntcodes-evidence/1"
SELECTORS = ("table2", "table4", "prop43", "lemma42", "thm12", "lemma33", "lemma210")


def factored(f: dict[int, int]) -> int:
    return math.prod(p**e for p, e in f.items())


def factor_str(f: dict[int, int]) -> str:
    return ".".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(f.items()))


@dataclass(frozen=True)
class TableRow:
    """One row of a classification table.

    ``order`` is the printed order used for the divisibility test (|X| for
    the alternating/symmetric candidates, |X_0| for the distinct-socle
    table); ``inherited`` marks continuation rows whose order cell is blank
    and carried from the row above.
    """

    label: str
    m: int | None
    q: int | None
    order: dict[int, int] | None
    target: dict[int, int] | None
    expected_verdict: str
    inherited: bool = False
    note: str = ""


# group / (X_0, X), m, q, printed order, printed C(m,2)(q-1)^2, verdict
TABLE1 = (
    ("<= AGL_d(r)", "r^d", "X has a 2-homogeneous index 2 subgroup"),
    ("S_m", "m", ""),
    ("M_22 : Z_2", "22", ""),
    (">= PSU_3(r)", "r^6 + 1", "X has an index 2 subgroup"),
    (">= PSL_d(r)", "(r^d - 1)/(r - 1)", "X has an index 2 subgroup"),
)

TABLE2 = (
    TableRow("A_m, S_m", None, None, None, None, "n/a", note="m and q = m-1 symbolic; no printed order"),
    TableRow("S_m", None, 2, None, None, "n/a", note="m symbolic; no printed order"),
    TableRow("S_5", 5, 3, {2: 3, 3: 1, 5: 1}, {2: 3, 5: 1}, "pass"),
    TableRow("A_6", 6, 6, {2: 3, 3: 2, 5: 1}, {3: 1, 5: 3}, "fail"),
    TableRow("S_6", 6, 6, {2: 4, 3: 2, 5: 1}, {3: 1, 5: 3}, "fail"),
    TableRow("A_7", 7, 10, {2: 3, 3: 2, 5: 1, 7: 1}, {3: 5, 7: 1}, "fail"),
    TableRow("S_7", 7, 10, {2: 4, 3: 2, 5: 1, 7: 1}, {3: 5, 7: 1}, "fail"),
    TableRow("A_8", 8, 15, {2: 6, 3: 2, 5: 1, 7: 1}, {2: 4, 7: 3}, "fail"),
    TableRow("A_9", 9, 15, {2: 6, 3: 4, 5: 1, 7: 1}, {2: 4, 3: 2, 7: 2}, "fail"),
)

TABLE3 = (
    ("Z_7.Z_3", "PSL_3(2)", 7, "I"),
    ("Z_11.Z_5", "PSL_2(11) or M_11", 11, "I"),
    ("Z_23.Z_11", "M_23", 23, "I"),
    ("PSL_2(7)", "AGL_3(2)", 8, "II"),
    ("A_7", "A_8", 15, "III"),
    ("PSL_2(11)", "M_11", 11, "IV"),
    ("PSL_2(11) or M_11", "M_12", 12, "IV"),
    ("PSL_2(23)", "M_24", 24, "IV"),
)

_Z11Z5 = {5: 1, 11: 1}
_A7 = {2: 3, 3: 2, 5: 1, 7: 1}
_PSL2_11 = {2: 2, 3: 1, 5: 1, 11: 1}
_M11 = {2: 4, 3: 2, 5: 1, 11: 1}

TABLE4 = (
    TableRow("Z_7.Z_3 < PSL_3(2)", 7, 2, {3: 1, 7: 1}, {3: 1, 7: 1}, "pass"),
    TableRow("Z_11.Z_5 < PSL_2(11)", 11, 2, _Z11Z5, _Z11Z5, "pass"),
    TableRow("Z_11.Z_5 < M_11", 11, 2, _Z11Z5, _Z11Z5, "pass", inherited=True),
    TableRow("A_7 < A_8", 15, 7, _A7, {2: 2, 3: 3, 5: 1, 7: 1}, "fail"),
    TableRow("A_7 < A_8", 15, 8, _A7, {3: 1, 5: 1, 7: 3}, "fail", inherited=True),
    TableRow("PSL_2(11) < M_11", 11, 2, _PSL2_11, _Z11Z5, "pass"),
    TableRow("PSL_2(11) < M_11", 11, 10, _PSL2_11, {3: 4, 5: 1, 11: 1}, "fail", inherited=True),
    TableRow("PSL_2(11) < M_12", 12, 11, _PSL2_11, {2: 3, 3: 1, 5: 2, 11: 1}, "fail", inherited=True),
    TableRow("PSL_2(11) < M_12", 12, 12, _PSL2_11, {2: 1, 3: 1, 11: 3}, "fail", inherited=True),
    TableRow("M_11 < M_12", 12, 11, _M11, {2: 3, 3: 1, 5: 2, 11: 1}, "fail"),
    TableRow("M_11 < M_12", 12, 12, _M11, {2: 1, 3: 1, 11: 3}, "fail", inherited=True),
    TableRow("PSL_2(23) < M_24", 24, 23, {2: 4, 3: 1, 11: 1, 23: 1}, {2: 4, 3: 1, 11: 2, 23: 1}, "fail"),
)

ORDER_M11 = factored(_M11)
ORDER_PSL2_11 = factored(_PSL2_11)


@dataclass
class Check:
    name: str
    computed: object
    expected: object
    verdict: str
    detail: str = ""

    @property
    def location(self) -> str:
        """Selector, plus the row number for table checks."""
        head = self.name.split(" ", 1)[0]
        battery, _, rest = head.partition(".")
        if rest.startswith("row"):
            return f"{battery} row {int(rest[3:])}"
        return battery

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "location": self.location,
            "computed": self.computed,
            "expected": self.expected,
            "verdict": self.verdict,
        }
        if self.detail:
            d["detail"] = self.detail
        return d


def _check(name, computed, expected, detail="") -> Check:
    return Check(name, computed, expected, "pass" if computed == expected else "fail", detail)


@dataclass
class EvidenceReport:
    selector: str
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.verdict == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        counts = {v: sum(1 for c in self.checks if c.verdict == v) for v in ("pass", "fail", "skipped")}
        return {
            "format": REPORT_FORMAT,
            "selector": self.selector,
            "ok": self.ok,
            "summary": counts,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.name)],
        }


def _table_checks(prefix: str, rows) -> list[Check]:
    out = []
    for n, row in enumerate(rows, 1):
        name = f"{prefix}.row{n:02d} {row.label} q={row.q if row.q is not None else '-'}"
        if row.expected_verdict == "n/a":
            out.append(Check(name, None, None, "skipped", f"not machine-checkable: {row.note}"))
            continue
        target = sphere_size(row.m, row.q, 2)
        out.append(_check(name + " target", target, factored(row.target), factor_str(row.target)))
        order = factored(row.order)
        divides = lemma210_divides(row.m, row.q, order)
        detail = f"C({row.m},2)*{row.q - 1}^2 = {target} vs order {factor_str(row.order)} = {order}"
        if row.inherited:
            detail += " (order carried from the row above)"
        out.append(_check(name + " verdict", "pass" if divides else "fail", row.expected_verdict, detail))
    return out


def battery_table2() -> list[Check]:
    return _table_checks("table2", TABLE2)


def battery_table4() -> list[Check]:
    checks = _table_checks("table4", TABLE4)
    for label, x, x0 in (
        ("PSL_2(11)/Z_11.Z_5", ORDER_PSL2_11, 55),
        ("M_11/PSL_2(11)", ORDER_M11, ORDER_PSL2_11),
    ):
        checks.append(_check(f"table4.code_size {label}", x // x0, 12))
    size = ORDER_M11 // 55
    bound = singleton_bound(11, 2, 5)
    checks.append(_check("table4.code_size M_11/Z_11.Z_5", size, 144, "2^4.3^2"))
    checks.append(_check("table4.singleton M_11/Z_11.Z_5 exceeds bound", size > bound, True, f"{size} > 2^7 = {bound}"))
    return checks


def battery_prop43() -> list[Check]:
    checks = []
    p = punctured_hadamard_12()
    dist = distance_distribution(p)
    checks.append(
        _check("prop43.distribution_P", dist.to_strings(), ["1", "0", "0", "0", "0", "11", "11", "0", "0", "0", "0", "1"])
    )
    for b, a2, nonneg in ((0, "-55", False), (1, "0", True)):
        d = DistanceDistribution.of(11, 2, (1, 0, 0, 0, 0, 11, 11, 0, 0, 0, 0, b))
        t = macwilliams_transform(d)
        checks.append(_check(f"prop43.transform b={b} a'_2", rational_str(t.aprime[2]), a2))
        checks.append(_check(f"prop43.transform b={b} nonnegative", t.nonnegative, nonneg, " ".join(t.to_strings())))

    admissible = []
    for delta in range(5, 11):
        for a in (1, 2):
            lam = Fraction(a * delta * (delta - 1), 10)
            if lam.denominator == 1:
                c = design_counts(11, delta, lam, 2)
                if c.feasible and c.b == 11 * a:
                    admissible.append(delta)
                    break
    checks.append(_check("prop43.branch admissible delta", admissible, [5, 6, 10], "a*delta*(delta-1) = 10*lambda, a in {1,2}"))
    checks.append(
        _check(
            "prop43.delta10 all weight-10 words",
            design_counts(11, 10, 9, 2).to_dict()["b"],
            "11",
            "lambda = 9 gives b = 11 = C(11,10)",
        )
    )
    u = Vertex((1,) * 10 + (0,), 2)
    w = Vertex((0,) + (1,) * 10, 2)
    checks.append(_check("prop43.delta10 refuted", hamming_distance(u, w), 2, "two weight-10 words at distance 2 < 10"))
    i_ok = [i for i in (2, 3, 4) if 10 - 2 * i >= 5]
    checks.append(_check("prop43.delta5 overlap", i_ok, [2], "d = 10 - 2i >= 5"))
    lam5 = [int(Fraction(5 * 4 * a, 10)) for a in (1, 2)]
    checks.append(_check("prop43.delta5 lambda options", lam5, [2, 4]))
    checks.append(_check("prop43.weight6 design b", design_counts(11, 6, 3, 2).to_dict(), {"b": "11", "r": "6", "lambda": "3", "feasible": True, "reason": ""}))
    checks.append(_check("prop43.weight5 design b", design_counts(11, 5, 2, 2).to_dict()["b"], "11"))
    checks.append(_check("prop43.delta11 trivial design", design_counts(11, 11, 1, 2).to_dict()["b"], "1"))
    e = even_subcode_ph12()
    checks.append(_check("prop43.regular P", is_s_regular(p, 2).regular, True))
    checks.append(_check("prop43.regular E", is_s_regular(e, 2).regular, True))
    checks.append(_check("prop43.regular Rep(11,2)", is_s_regular(repetition_code(11, 2), 2).regular, True))
    checks.append(_check("prop43.delta P, E", [p.min_distance, e.min_distance], [5, 6]))
    return checks


def battery_lemma42() -> list[Check]:
    checks = []
    h = paley_hadamard_12()
    checks.append(_check("lemma42.hadamard identity", h.is_hadamard(), True))
    e = even_subcode_ph12()
    checks.append(_check("lemma42.E size, delta", [len(e), e.min_distance], [12, 6]))
    aut = binary_code_autgroup(e)
    order = group_order(aut, "vertices")
    checks.append(_check("lemma42.|Aut(E)|", order, ORDER_M11, "2^4.3^2.5.11"))
    checks.append(_check("lemma42.Aut(E) entry-faithful", entry_faithful(aut), True))
    checks.append(_check("lemma42.Aut(E) entry-action order", group_order(aut, "entries"), ORDER_M11))
    checks.append(_check("lemma42.Aut(E) transitive on E", len(orbit(aut, Vertex.zero(11, 2))), 12))
    x0 = stabilizer(aut, Vertex.zero(11, 2))
    checks.append(_check("lemma42.|Aut(E)_0|", group_order(x0, "vertices"), ORDER_PSL2_11, "2^2.3.5.11"))
    checks.append(_check("lemma42.Aut(E)_0 2-transitive on entries", is_k_transitive(x0, "entries", 2), True))
    checks.append(_check("lemma42.Aut(E)_0 3-transitive on entries", is_k_transitive(x0, "entries", 3), False))
    for i, size in ((1, 11), (2, 55)):
        checks.append(
            _check(f"lemma42.Aut(E)_0 orbit on weight {i}", len(orbit(x0, Vertex.block(1, i, 11, 2))), size)
        )
    cert2 = neighbour_transitive(e, aut, 2)
    checks.append(_check("lemma42.(Aut(E),2)-neighbour transitive", cert2.verdict, "pass", str([lv.orbit_sizes for lv in cert2.levels])))
    cert3 = neighbour_transitive(e, aut, 3)
    checks.append(_check("lemma42.(Aut(E),3)-neighbour transitive", cert3.verdict, "fail", str([lv.orbit_sizes for lv in cert3.levels])))
    rho = distance_partition(e).rho
    checks.append(_check("lemma42.rho(E) >= 3", rho >= 3, True, f"rho = {rho}"))
    checks.append(_check("lemma42.completely transitive", neighbour_transitive(e, aut, "rho").verdict, "fail"))
    blocks = weight_class_blocks(e, 6)
    checks.append(_check("lemma42.D is 2-(11,6,3)", design_lambda(blocks, 2).lam, 3))
    checks.append(_check("lemma42.D strength 3", design_lambda(blocks, 3).is_design, False, str(design_lambda(blocks, 3).to_dict())))
    lam3 = required_lambda(11, 6, 11, 3)
    checks.append(_check("lemma42.forced lambda at strength 3", rational_str(lam3), "4/3"))
    checks.append(_check("lemma42.strength-3 counts infeasible", design_counts(11, 6, lam3, 3).feasible, False))
    daut = design_autgroup(blocks)
    checks.append(_check("lemma42.|Aut(D)|", group_order(daut, "entries"), ORDER_PSL2_11))
    checks.append(_check("lemma42.Aut(D) 2-transitive", is_k_transitive(daut, "entries", 2), True))
    checks.append(_check("lemma42.Aut(D) 3-transitive", is_k_transitive(daut, "entries", 3), False))
    p = punctured_hadamard_12()
    checks.append(_check("lemma42.|Aut(P)|", group_order(binary_code_autgroup(p), "vertices"), 2 * ORDER_M11))
    return checks


def battery_thm12(ms=range(5, 11)) -> list[Check]:
    checks = []
    for m in ms:
        code = repetition_code(m, 2)
        gens = repetition_transitive_group(m)
        part = distance_partition(code)
        checks.append(_check(f"thm12.m={m} code group", is_code_group(gens, code), True))
        checks.append(_check(f"thm12.m={m} rho", part.rho, m // 2))
        weights_ok = all(sorted({v.weight for v in part.cell(i)}) == sorted({i, m - i}) for i in range(part.rho + 1))
        checks.append(_check(f"thm12.m={m} C_i weights i, m-i", weights_ok, True))
        cert = neighbour_transitive(code, gens, "rho")
        checks.append(_check(f"thm12.m={m} completely transitive", cert.verdict, "pass", str([lv.orbit_sizes for lv in cert.levels])))
        if m <= 8:
            checks.append(_check(f"thm12.m={m} order", group_order(gens, "vertices"), math.factorial(m)))
            checks.append(_check(f"thm12.m={m} entry-faithful", entry_faithful(gens), True))
    return checks


def battery_lemma33() -> list[Check]:
    bad = [m for m in range(5, 65) if not 2 ** (m - 4) < math.factorial((m + 1) // 2)]
    checks = [_check("lemma33.2^(m-4) < floor((m+1)/2)! for m in 5..64", bad, [])]
    target = sphere_size(7, 6, 2)
    checks.append(_check("lemma33.m=7 q=6 target", target, 3 * 5**2 * 7))
    checks.append(_check("lemma33.m=7 target divides 7!", math.factorial(7) % target == 0, False))
    return checks


def battery_lemma210() -> list[Check]:
    checks = [
        _check("lemma210.C(7,2)*9^2", sphere_size(7, 10, 2), 3**5 * 7),
        _check("lemma210.A_6 m=6 q=6 order 360", lemma210_divides(6, 6, 360), False),
        _check("lemma210.Z_11.Z_5 m=11 q=2 order 55", lemma210_divides(11, 2, 55), True),
        _check("lemma210.PSL_2(11) m=11 q=10 order 660", lemma210_divides(11, 10, 660), False),
    ]
    for q, expected in ((7, 4 * 7 * 6**2), (8, 4 * 7**3)):
        checks.append(_check(f"lemma210.affine m=8 q={q} target", sphere_size(8, q, 2), expected))
        checks.append(_check(f"lemma210.affine m=8 q={q} divides 168", lemma210_divides(8, q, 168), False))
    only_binary = all(
        (sphere_size(m, q, 2) == m * (m - 1) // 2) == (q == 2) for m in range(5, 31) for q in range(2, 31)
    )
    checks.append(_check("lemma210.order m(m-1)/2 forces q=2", only_binary, True))
    return checks


BATTERIES = {
    "table2": battery_table2,
    "table4": battery_table4,
    "prop43": battery_prop43,
    "lemma42": battery_lemma42,
    "thm12": battery_thm12,
    "lemma33": battery_lemma33,
    "lemma210": battery_lemma210,
}


def run_evidence(selector: str = "all") -> EvidenceReport:
    if selector != "all" and selector not in BATTERIES:
        raise ValueError(f"unknown selector {selector!r}; choose from all, {', '.join(SELECTORS)}")
    report = EvidenceReport(selector)
    for name in SELECTORS:
        if selector in ("all", name):
            report.checks.extend(BATTERIES[name]())
    return report
