"""Verification layer: digit-agreement comparison, report serialization,
suite determinism, and the perturbation controls that prove the evaluators
would catch a wrong identity."""

import dataclasses
import json
import random
from fractions import Fraction

from qprod import products
from qprod.characters import enumerate_characters
from qprod.products import IdentitySpec, eval_rhs
from qprod.qfunc import Precision, context
from qprod.verify import (
    VerificationReport,
    compare,
    default_suite,
    random_cor2_instance,
    random_thm1_instance,
    reports_csv,
    reports_json,
    run_identity,
    run_suite,
    summarize,
)

CHI4 = enumerate_characters(4)[1]


def _frac_parts(s):
    """Exact (re, im) Fractions from an 'a', 'a+bi', or 'a-bi' decimal string."""
    if s.endswith("i"):
        core = s[:-1]
        for pos in range(len(core) - 1, 0, -1):
            if core[pos] in "+-":
                return Fraction(core[:pos]), Fraction(core[pos:])
    return Fraction(s), Fraction(0)


def test_compare_equal_values():
    r = compare(1, 1, 40, Precision(50))
    assert r.passed and not r.vacuous
    assert r.digits_agreed == 60  # clipped at working digits incl. guard
    assert r.rel_diff == "0.0"


def test_compare_graded_disagreement():
    # a value off by 1e-30, constructed at full working precision
    ctx = context(Precision(50))
    b = 1 + ctx.mpf(10) ** -30
    r = compare(1, b, 40, Precision(50))
    assert r.digits_agreed == 30 and not r.passed
    r2 = compare(1, b, 25, Precision(50))
    assert r2.passed
    assert r2.tolerance_digits == 25


def test_compare_total_disagreement_clips_to_zero():
    r = compare(1, -1, 10, Precision(50))
    assert r.digits_agreed == 0 and not r.passed


def test_compare_vacuous():
    r = compare("1e-60", "2e-60", 40, Precision(50))
    assert r.vacuous and r.passed
    assert r.rel_diff == "0.0"


def test_report_json_shape():
    r = compare(1, 1, 40, Precision(50), identity="X", params={"a": 1})
    obj = r.to_json()
    assert obj["identity"] == "X"
    assert obj["pass"] is True
    assert set(obj) == {
        "identity", "params", "lhs", "rhs", "abs_diff", "rel_diff",
        "digits_agreed", "tolerance_digits", "pass", "vacuous", "error",
        "elapsed_ms",
    }


def test_run_identity_records_character_facts():
    spec = IdentitySpec(id="THM5", chi=CHI4, z="0.5", q="0.3", prec=Precision(50))
    r = run_identity(spec, 40)
    assert r.passed
    assert r.params["chi"]["conductor"] == 4
    assert r.params["chi"]["primitive"] is True
    assert r.params["lhs_terms"] > 0
    assert r.elapsed_ms >= 0


def test_run_identity_error_becomes_failing_report():
    spec = IdentitySpec(id="COR2", alphas=("0.5",), betas=("0.6",), terms=1000)
    r = run_identity(spec, 4)
    assert not r.passed
    assert r.error.startswith("ValueError")
    assert "converge" in r.error


def test_run_suite_sorted_and_total():
    entries = [
        (IdentitySpec(id="EX1B", prec=Precision(50)), 40),
        (IdentitySpec(id="COR2", alphas=("0.5",), betas=("0.6",), terms=1000), 4),
        (IdentitySpec(id="EX1A", prec=Precision(50)), 40),
    ]
    reports = run_suite(entries)
    assert [r.identity for r in reports] == ["COR2", "EX1A", "EX1B"]
    s = summarize(reports)
    assert s == {"total": 3, "passed": 2, "failed": 1}
    assert run_suite([]) == []


def test_perturbed_q_fails():
    good = IdentitySpec(id="THM5", chi=CHI4, z="0.5", q="0.3", prec=Precision(50))
    assert run_identity(good, 40).passed
    ctx = context(Precision(50))
    lhs = products.eval_lhs(good)
    nudged = IdentitySpec(id="THM5", chi=CHI4, z="0.5", q="0.3000000001",
                          prec=Precision(50))
    r = compare(lhs, eval_rhs(nudged), 40, Precision(50), identity="THM5")
    assert not r.passed
    assert r.digits_agreed < 12


def test_perturbed_z_fails():
    good = IdentitySpec(id="THM5", chi=CHI4, z="0.5", q="0.3", prec=Precision(50))
    lhs = products.eval_lhs(good)
    nudged = IdentitySpec(id="THM5", chi=CHI4, z="0.5000000001", q="0.3",
                          prec=Precision(50))
    r = compare(lhs, eval_rhs(nudged), 40, Precision(50), identity="THM5")
    assert not r.passed
    assert r.digits_agreed < 12


class _NudgedRoot:
    """Duck-typed root of unity whose complex value is off by a fixed delta."""

    order = 3  # anything above 2 forces the complex-value path

    def __init__(self, base, delta):
        self._base = base
        self._delta = delta

    def to_complex(self, ctx):
        return ctx.mpf(self._base) + ctx.mpf(self._delta)


class _NudgedCharacter:
    """Wraps a real character, perturbing its value at one residue."""

    def __init__(self, chi, residue, delta):
        self._chi = chi
        self._residue = residue
        self._delta = delta
        self.modulus = chi.modulus

    def value(self, n):
        v = self._chi.value(n)
        if v is None or n % self.modulus != self._residue:
            return v
        return _NudgedRoot(v.as_int(), self._delta)


def test_perturbed_character_value_fails():
    prec = Precision(50)
    ctx = context(prec)
    spec = IdentitySpec(id="THM5", chi=CHI4, z="0.5", q="0.3", prec=prec)
    rhs = eval_rhs(spec)
    fake = _NudgedCharacter(CHI4, 3, "1e-10")
    q = ctx.mpf(3) / 10
    z = ctx.mpf(1) / 2
    lhs, _ = products._char_shift_lhs(fake, z, q, ctx)
    r = compare(lhs, rhs, 40, prec, identity="THM5")
    assert not r.passed
    assert r.digits_agreed < 15
    # sanity: the same call with delta 0 reproduces the true left side
    clean, _ = products._char_shift_lhs(_NudgedCharacter(CHI4, 3, "0"), z, q, ctx)
    assert compare(clean, rhs, 40, prec).passed


def test_reports_json_deterministic():
    entries = [
        (IdentitySpec(id="EX1A", prec=Precision(50)), 40),
        (IdentitySpec(id="THM5", chi=CHI4, z="0.5", q="0.3", prec=Precision(50)), 40),
    ]

    def frozen(reports):
        return reports_json([dataclasses.replace(r, elapsed_ms=0) for r in reports])

    one = frozen(run_suite(entries))
    two = frozen(run_suite(list(reversed(entries))))
    assert one == two
    payload = json.loads(one)
    assert payload["summary"] == {"total": 2, "passed": 2, "failed": 0}
    assert [r["identity"] for r in payload["reports"]] == ["EX1A", "THM5"]


def test_reports_csv_shape():
    reports = run_suite([(IdentitySpec(id="EX1B", prec=Precision(50)), 40)])
    text = reports_csv(reports)
    lines = text.strip().splitlines()
    assert lines[0].startswith("identity,")
    assert len(lines) == 2
    assert lines[1].startswith("EX1B,")


def test_random_thm1_instances_balance_exactly():
    rng = random.Random(99)
    for _ in range(50):
        alphas, betas = random_thm1_instance(rng)
        parts_a = [_frac_parts(a) for a in alphas]
        parts_b = [_frac_parts(b) for b in betas]
        assert sum(r for r, _ in parts_a) == sum(r for r, _ in parts_b)
        assert sum(i for _, i in parts_a) == sum(i for _, i in parts_b)
        assert 1 <= len(alphas) == len(betas) <= 4
        assert all(Fraction(1, 5) <= r <= 3 for r, _ in parts_a + parts_b)


def test_random_cor2_instances_balance_exactly():
    rng = random.Random(7)
    for _ in range(50):
        alphas, betas = random_cor2_instance(rng)
        sa = sum(Fraction(a) for a in alphas)
        sb = sum(Fraction(b) for b in betas)
        assert sa == sb
        assert all(Fraction(e) > 0 for e in alphas + betas)


def test_default_suite_composition():
    entries = default_suite()
    assert len(entries) == 556
    counts: dict = {}
    for spec, tol in entries:
        counts[spec.id] = counts.get(spec.id, 0) + 1
        assert tol >= 4
    assert counts["THM1"] == 60
    assert counts["COR2"] == 11
    assert counts["THM3_FULL"] == counts["THM3_COPRIME"] == 33
    assert counts["THM5"] == counts["COR6"] == 204
    assert counts["THM4"] == 2
    assert counts["PROTOTYPE"] == 1
    for ex in ("EX1A", "EX1B", "EX2A", "EX2B",
               "JACKSON1", "JACKSON2", "JACKSON3", "JACKSON4"):
        assert counts[ex] == 1


def test_default_suite_seeded_and_filterable():
    a = default_suite()
    b = default_suite()
    assert [(s.to_json(), t) for s, t in a] == [(s.to_json(), t) for s, t in b]
    only = default_suite(include=("EX1A", "THM4"))
    assert sorted({s.id for s, _ in only}) == ["EX1A", "THM4"]
    assert len(only) == 3
    # smaller knobs produce a smaller run without changing shape
    quick = default_suite(include=("THM4",), thm4_blocks=1000)
    assert all(s.blocks == 1000 for s, _ in quick)
