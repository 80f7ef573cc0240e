"""
Tests for the sampler, the law table and the suite runner.
"""

from fractions import Fraction

from hyperck.limits import RATIONAL_BOUND
from hyperck.models.config import Operation, RunConfig, SettingSpec, Suite
from hyperck.operators.stem_ops import cr_check
from hyperck.stem.pair import is_slice_form, materialize
from hyperck.verify.laws import LAWS, Law
from hyperck.verify.sampling import RationalSampler
from hyperck.verify.suites import laws_for, run_law, run_suite, run_verification, suite_settings


def _config(setting: str = "clifford:n=3", **fields) -> RunConfig:
    fields.setdefault("trials", 2)
    fields.setdefault("degree", 2)
    return RunConfig(setting=SettingSpec.parse(setting), operation=Operation.VERIFY, **fields)


class TestRationalSampler:
    """Tests for the seeded generators."""

    def test_reproducible(self, r03_p0):
        """Same seed, same draws."""
        a = RationalSampler(7)
        b = RationalSampler(7)
        assert [a.rational() for _ in range(20)] == [b.rational() for _ in range(20)]
        assert a.ambient_poly(r03_p0, 3) == b.ambient_poly(r03_p0, 3)

    def test_bounds(self, sampler):
        """Numerators and denominators stay within the bound."""
        for _ in range(200):
            value = sampler.rational()
            assert isinstance(value, Fraction)
            assert abs(value.numerator) <= RATIONAL_BOUND
            assert 1 <= value.denominator <= RATIONAL_BOUND

    def test_nonzero(self, sampler):
        assert all(sampler.rational(nonzero=True) != 0 for _ in range(100))

    def test_per_law_streams(self):
        """Different laws draw from different streams."""
        a = RationalSampler.for_law(0, "ck", "regular", "clifford:n=3,m=3,p=0")
        b = RationalSampler.for_law(0, "ck", "trace", "clifford:n=3,m=3,p=0")
        assert [a.rational() for _ in range(10)] != [b.rational() for _ in range(10)]

    def test_seed_poly_uses_base_variables(self, sampler, r05_p2):
        """Seeds never involve x_{p+1}..x_m."""
        f0 = sampler.seed_poly(r05_p2, 3)
        assert all(not any(mon[3:]) for mon, _ in f0.items())

    def test_regular_stem(self, sampler, r03_p1):
        S = sampler.regular_stem(r03_p1, 3)
        assert cr_check(S)
        assert is_slice_form(materialize(S))

    def test_multi_index(self, sampler):
        k = sampler.multi_index(2, 5)
        assert len(k) == 3
        assert sum(k) == 5


class TestLawTable:
    """Tests for the law registry."""

    def test_every_suite_has_laws(self):
        for suite in Suite:
            if suite is not Suite.ALL:
                assert laws_for(suite), suite

    def test_sorted_by_name(self):
        names = [law.name for law in laws_for(Suite.CK)]
        assert names == sorted(names)

    def test_unique_names_per_suite(self):
        keys = [(law.suite, law.name) for law in LAWS]
        assert len(keys) == len(set(keys))


class TestSuiteSettings:
    """Tests for the settings each suite runs in."""

    def test_q_independent_suite(self):
        config = _config(q_values=[2, 4])
        assert suite_settings(config, Suite.ALGEBRA) == [config.setting]

    def test_gck_per_q(self):
        """GCK runs once per requested q, keeping p."""
        config = _config("clifford:n=3,m=3,p=1", q_values=[1, 2])
        specs = suite_settings(config, Suite.GCK)
        assert [(s.p, s.q) for s in specs] == [(1, 1), (1, 2)]

    def test_gck_without_q(self):
        config = _config()
        assert suite_settings(config, Suite.GCK) == [config.setting]

    def test_odd_q_default(self):
        """Even configured q falls back to q = 3 for the Fueter-Sce suites."""
        config = _config("clifford:n=4")
        specs = suite_settings(config, Suite.DIAGRAMS)
        assert [s.q for s in specs] == [3]

    def test_odd_q_keeps_configured(self):
        config = _config("clifford:n=5")
        assert [s.q for s in suite_settings(config, Suite.FUETER_SCE)] == [5]

    def test_even_q_skipped_under_all(self):
        """With every suite requested, even q is skipped where odd q is needed."""
        config = _config(q_values=[2, 3])
        assert [s.q for s in suite_settings(config, Suite.DIAGRAMS)] == [3]
        assert [s.q for s in suite_settings(config, Suite.HGCK)] == [2, 3]


class TestRunner:
    """Tests for running laws and suites."""

    def test_passing_law(self, r03_p0):
        law = Law(Suite.ALGEBRA, "always", lambda smp, setting, degree: None)
        result = run_law(law, r03_p0, _config(trials=3))
        assert result.passed
        assert result.trials == 3
        assert result.setting == r03_p0.name

    def test_failing_law_records_counterexamples(self, r03_p0):
        law = Law(Suite.ALGEBRA, "never", lambda smp, setting, degree: {"lhs": "1", "rhs": "0"})
        result = run_law(law, r03_p0, _config(trials=2))
        assert not result.passed
        assert [f.trial for f in result.failures] == [0, 1]
        assert result.failures[0].data == {"lhs": "1", "rhs": "0"}

    def test_exception_is_a_failure(self, r03_p0):
        def boom(smp, setting, degree):
            raise ZeroDivisionError("boom")

        result = run_law(Law(Suite.ALGEBRA, "boom", boom), r03_p0, _config(trials=1))
        assert not result.passed
        assert result.failures[0].data["error"] == "ZeroDivisionError: boom"

    def test_deterministic_law_runs_once(self, r03_p0):
        law = Law(Suite.KERNELS, "once", lambda smp, setting, degree: None, deterministic=True)
        assert run_law(law, r03_p0, _config(trials=5)).trials == 1

    def test_ck_suite_passes(self):
        results = run_suite(Suite.CK, _config("clifford:n=3,m=3,p=1"))
        assert {r.law for r in results} == {law.name for law in laws_for(Suite.CK)}
        assert all(r.passed for r in results), [r.failures for r in results if not r.passed]

    def test_progress_labels(self):
        labels = []
        run_suite(Suite.ALGEBRA, _config(trials=1), progress=labels.append)
        assert len(labels) == len(laws_for(Suite.ALGEBRA))
        assert labels[0].startswith("algebra/")

    def test_octonion_algebra_suite(self):
        """The octonions satisfy the alternative-algebra laws."""
        results = run_suite(Suite.ALGEBRA, _config("octonion,m=7,p=0", trials=3))
        assert all(r.passed for r in results)

    def test_report_is_deterministic(self):
        """The same configuration dumps the same JSON."""
        config = _config(suites=[Suite.ALGEBRA, Suite.FUETER], seed=11)
        first = run_verification(config).model_dump_json()
        second = run_verification(config).model_dump_json()
        assert first == second

    def test_report_summary(self):
        config = _config(suites=[Suite.POLY], seed=3)
        report = run_verification(config)
        assert report.passed
        assert report.suites == ["poly"]
        assert report.seed == 3
        assert report.failed_laws == []
