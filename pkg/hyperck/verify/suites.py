"""
Runner for the randomized law suites.

Laws run sequentially in (suite, law, setting) order. Every law draws from
its own seeded sampler, so a report depends only on the configuration.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from hyperck.algebra.setting import HypercomplexSetting
from hyperck.models.config import ODD_Q_SUITES, RunConfig, SettingSpec, Suite
from hyperck.models.reports import Counterexample, LawResult, VerificationReport
from hyperck.verify.laws import LAWS, Law
from hyperck.verify.sampling import RationalSampler

logger = logging.getLogger(__name__)

Q_DEPENDENT_SUITES = {Suite.GCK, Suite.HGCK} | ODD_Q_SUITES

ProgressFn = Callable[[str], None]


def laws_for(suite: Suite) -> list[Law]:
    """Laws of one suite, sorted by name."""
    return sorted((law for law in LAWS if law.suite is suite), key=lambda law: law.name)


def suite_settings(config: RunConfig, suite: Suite) -> list[SettingSpec]:
    """
    Settings a suite runs in.

    q-dependent suites run once per requested q (same family and p). The
    Fueter-Sce suites skip even q; with no q requested they use the
    configured q when odd and q = 3 otherwise.
    """
    spec = config.setting
    if suite not in Q_DEPENDENT_SUITES:
        return [spec]
    q_values = list(config.q_values)
    if suite in ODD_Q_SUITES:
        if not q_values:
            q_values = [spec.q if spec.q % 2 else 3]
        skipped = [q for q in q_values if q % 2 == 0]
        if skipped:
            logger.info("Suite %s skips even q %s", suite.value, skipped)
        q_values = [q for q in q_values if q % 2]
    elif not q_values:
        return [spec]
    return [spec.with_q(q) for q in q_values]


def run_law(law: Law, setting: HypercomplexSetting, config: RunConfig) -> LawResult:
    """Run all trials of one law; exceptions count as failing trials."""
    trials = 1 if law.deterministic else config.trials
    sampler = RationalSampler.for_law(config.seed, law.suite.value, law.name, setting.name)
    failures: list[Counterexample] = []
    for trial in range(trials):
        try:
            failure = law.check(sampler, setting, config.degree)
        except Exception as e:  # noqa: BLE001
            failure = {"error": f"{type(e).__name__}: {e}"}
        if failure is not None:
            failures.append(Counterexample(trial=trial, data=failure))
    if failures:
        logger.warning(
            "Law %s/%s failed %d of %d trials in %s",
            law.suite.value, law.name, len(failures), trials, setting.name,
        )
    return LawResult(
        suite=law.suite.value,
        law=law.name,
        setting=setting.name,
        trials=trials,
        failures=failures,
        passed=not failures,
    )


def run_suite(suite: Suite, config: RunConfig, progress: ProgressFn | None = None) -> list[LawResult]:
    results: list[LawResult] = []
    for spec in suite_settings(config, suite):
        setting = spec.to_setting()
        logger.info("Suite %s in %s", suite.value, setting.name)
        for law in laws_for(suite):
            if progress is not None:
                progress(f"{suite.value}/{law.name} [{setting.name}]")
            results.append(run_law(law, setting, config))
    return results


def run_verification(config: RunConfig, progress: ProgressFn | None = None) -> VerificationReport:
    """
    Run every requested suite and collect a report.

    Args:
        config: run configuration (suites, trials, degree, seed, q values)
        progress: optional callback receiving a label before each law

    Returns:
        VerificationReport with one LawResult per (law, setting)
    """
    suites = config.expanded_suites()
    results: list[LawResult] = []
    for suite in suites:
        results.extend(run_suite(suite, config, progress))
    passed = all(r.passed for r in results)
    logger.info("Verification %s: %d laws", "passed" if passed else "FAILED", len(results))
    return VerificationReport(
        suites=[s.value for s in suites],
        seed=config.seed,
        trials=config.trials,
        degree=config.degree,
        q_values=list(config.q_values),
        results=results,
        passed=passed,
    )
