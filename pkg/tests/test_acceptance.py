"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Every identity is exact (zero residual); the only tolerances are the stated
wall-clock budgets.  Run with plain pytest; the summary lines print through
the capture so they are visible either way.
"""

import time
from fractions import Fraction

from aw6_expected import aw6_relation_table
from onsaw.altpres import (
    QuotientA,
    appendix_fixtures_report,
    beta_alpha_report,
    beta_from_alpha,
    reduction_diagram_report,
    verify_iso,
)
from onsaw.envelope import PBW, aw3_fit, verify_quartic
from onsaw.matrices import Matrix
from onsaw.onsager import A, G, bracket, verify_dolan_grady
from onsaw.quotient import (
    QuotientO,
    defining_relations,
    implied_relations_report,
    u_poly_report,
    verify_sn,
)
from onsaw.reps import rep_build, rep_check
from onsaw.reports import DISCREPANCY
from onsaw.scalars import LaurentPoly, lvar
from onsaw.yangbaxter import (
    ChargeParams,
    build_B_alt,
    build_B_onsager,
    corrupted_r_matrix,
    expand_b,
    verify_commuting,
    verify_cybe,
    verify_frt,
    verify_frt_series_alt,
    verify_frt_series_onsager,
)


class criterion:
    """Times a criterion, prints its verdict, and enforces the budget."""

    def __init__(self, capsys, number, name, budget):
        self.capsys = capsys
        self.number = number
        self.name = name
        self.budget = budget

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        verdict = "PASS" if exc_type is None and elapsed < self.budget else "FAIL"
        with self.capsys.disabled():
            print(
                f"ACCEPTANCE {self.number:02d} {self.name}: {verdict}"
                f" ({elapsed:.2f}s / budget {self.budget:g}s)"
            )
        assert elapsed < self.budget, f"{self.name} exceeded its {self.budget}s budget"
        return False


def test_criterion_01_cybe(capsys):
    with criterion(capsys, 1, "cybe", 1.0):
        assert verify_cybe().status == "pass"
        assert verify_cybe(corrupted_r_matrix()).status == "fail"


def test_criterion_02_dolan_grady(capsys):
    with criterion(capsys, 2, "dolan-grady", 0.1):
        assert verify_dolan_grady().status == "pass"
        lhs = bracket(A(0), bracket(A(0), bracket(A(0), A(1))))
        rhs = bracket(A(0), A(1)) * 16
        assert lhs == rhs == G(1, Fraction(-64))
        lhs_swapped = bracket(A(1), bracket(A(1), bracket(A(1), A(0))))
        assert lhs_swapped == bracket(A(1), A(0)) * 16
        assert (lhs - rhs).is_zero()


def test_criterion_03_frt_onsager(capsys):
    with criterion(capsys, 3, "frt-onsager", 30.0):
        for N in (1, 2, 3):
            q = QuotientO.symbolic(N)
            assert verify_frt(build_B_onsager(q)).status == "pass", f"N={N}"
        q1 = QuotientO.symbolic(1)
        alpha = q1.alphas[0]
        rels = dict(defining_relations(q1))
        assert rels[(("A", 1), ("A", 0))] == G(1, Fraction(4))
        assert rels[(("G", 1), ("A", 0))] == A(0) * (2 * alpha) + A(1) * 4
        assert -rels[(("G", 1), ("A", 1))] == A(1) * (2 * alpha) + A(0) * 4
        q2 = QuotientO.symbolic(2)
        rels2 = dict(defining_relations(q2))
        expected = aw6_relation_table(q2.alphas[0], q2.alphas[1])
        assert set(rels2) == set(expected)
        for pair, value in expected.items():
            assert rels2[pair] == value, f"aw(6) mismatch at {pair}"


def test_criterion_04_frt_alt(capsys):
    with criterion(capsys, 4, "frt-alt", 30.0):
        for N in (1, 2, 3):
            qa = QuotientA.symbolic(N)
            assert verify_frt(build_B_alt(qa)).status == "pass", f"N={N}"


def test_criterion_05_frt_series(capsys):
    with criterion(capsys, 5, "frt-series", 60.0):
        assert verify_frt_series_onsager(8).status == "pass"
        assert verify_frt_series_alt(8).status == "pass"


def test_criterion_06_charges(capsys):
    with criterion(capsys, 6, "charges", 60.0):
        for N in (1, 2, 3, 4):
            assert verify_commuting(QuotientO.symbolic(N)).status == "pass"
        for N in (1, 2, 3):
            _, report = expand_b(QuotientO.symbolic(N), ChargeParams.symbolic())
            assert report.status == "pass"


def test_criterion_07_quotient_coherence(capsys):
    with criterion(capsys, 7, "quotient-coherence", 60.0):
        for N in (1, 2, 3, 4):
            q = QuotientO.symbolic(N)
            assert verify_sn(q).status == "pass"
            assert implied_relations_report(q, pmax=6).status == "pass"
        for N in (1, 2, 3):
            assert u_poly_report(QuotientO.symbolic(N), pmax=10).status == "pass"
        # a corrupted table entry must surface as a discrepancy, never silently
        poisoned = QuotientO.symbolic(1)
        poisoned._upoly[(0, 0)] = LaurentPoly.const(7)
        report = u_poly_report(poisoned, pmax=2)
        assert report.status == DISCREPANCY
        assert any(c.status == DISCREPANCY for c in report.checks)


def test_criterion_08_isomorphism(capsys):
    with criterion(capsys, 8, "isomorphism", 60.0):
        report = verify_iso(kmax_bracket=8, kmax_round=20)
        assert report.status == "pass"
        fixtures = appendix_fixtures_report()
        by_id = {c.id: c for c in fixtures.checks}
        for label in ("A0", "A1", "G1", "A-1", "A2", "G2", "A-2", "A3", "G3"):
            assert by_id[f"appendix-a:to-alt:{label}"].status == "pass"
            assert by_id[f"appendix-a:to-ons:{label}"].status == "pass"


def test_criterion_09_beta_alpha(capsys):
    with criterion(capsys, 9, "beta-alpha", 60.0):
        for N in (1, 2, 3, 4):
            q = QuotientO.symbolic(N)
            assert beta_alpha_report(q).status == "pass"
            assert reduction_diagram_report(q).status == "pass"
        alpha = lvar("alpha")
        assert beta_from_alpha(QuotientO.symbolic(1)).betas == (alpha, Fraction(2))
        alphap = lvar("alphap")
        assert beta_from_alpha(QuotientO.symbolic(2)).betas == (
            alphap - 2,
            alpha * 2,
            Fraction(4),
        )


def test_criterion_10_quartic(capsys):
    with criterion(capsys, 10, "quartic", 10.0):
        assert verify_quartic(QuotientO.symbolic(1)).status == "pass"
        assert verify_quartic(QuotientO.symbolic(2)).status == "pass"
        import random

        rng = random.Random(7)
        q = QuotientO.symbolic(1)
        first, last = PBW(q, "first"), PBW(q, "last")
        syms = q.basis_syms()
        for _ in range(40):
            word = tuple(rng.choice(syms) for _ in range(rng.randint(2, 5)))
            assert first.normalize_word(word) == last.normalize_word(word)


def test_criterion_11_representations(capsys):
    with criterion(capsys, 11, "representations", 30.0):
        q1, rep1 = rep_build(["w"])
        w, wi = lvar("w"), lvar("w", -1)
        zero, two = LaurentPoly(), LaurentPoly.const(2)
        assert rep1[("A", 0)] == Matrix([[zero, two], [two, zero]])
        assert rep1[("A", 1)] == Matrix([[zero, wi * 2], [w * 2, zero]])
        assert rep1[("G", 1)] == Matrix([[wi - w, zero], [zero, w - wi]])
        assert rep_check(q1, rep1).status == "pass"
        q2, rep2 = rep_build(["w1", "w2"])
        assert rep_check(q2, rep2).status == "pass"
        w1, w2 = lvar("w1"), lvar("w2")
        w1i, w2i = lvar("w1", -1), lvar("w2", -1)
        assert q2.alphas[0] == (
            LaurentPoly.const(2) + w1 * w2 + w1 * w2i + w1i * w2 + w1i * w2i
        )


def test_criterion_12_aw3_fit(capsys):
    with criterion(capsys, 12, "aw3-fit", 10.0):
        constants, report = aw3_fit()
        assert report.ok
        by_id = {c.id: c for c in report.checks}
        assert by_id["aw3-fit:B-consistent"].status == "pass"
        assert by_id["aw3-fit:relation2-solved"].status == "pass"
        assert by_id["aw3-fit:relation3-solved"].status == "pass"
        comparisons = [
            c for c in report.checks if c.id.startswith("aw3-fit:vs-reference")
        ]
        assert comparisons, "reference comparison missing from the report"
        for check in comparisons:
            assert check.status in ("pass", DISCREPANCY)
            if check.status == DISCREPANCY:
                assert check.residual


def test_criterion_13_property_suites(capsys):
    import test_properties as props

    with criterion(capsys, 13, "property-suites", 120.0):
        assert props.CASES >= 500
        props.test_jacobi_identity_onsager()
        props.test_jacobi_identity_alt()
        props.test_automorphisms_respect_the_bracket()
        props.test_alt_automorphisms_respect_the_bracket()
        props.test_involutions()
        props.test_reduce_idempotent_linear_and_ideal_compatible()
        props.test_bracket_antisymmetry()
