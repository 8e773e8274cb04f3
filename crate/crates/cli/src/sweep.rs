use std::io::{self, Write};

use clap::ValueEnum;
use qcong_core::verify::{
    explore_conjecture51, explore_conjecture61, run_suite, Bounds, Report, Suite,
};

use crate::records::{Counts, ReportRecord, SummaryRecord};
use crate::{BoundArgs, CliError};

pub const MAX_N_VAR: &str = "QCONG_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Theorem1,
    Corollary1,
    Lemma31,
    Desarmenien,
    Theorem2,
    Lemma41,
    Eq23,
    Eq24,
    Theorem51,
    Theorem52,
    Corollary52,
    Stern,
    Foata,
    PermEuler,
    PermSalie,
    Gauss,
    QLucas,
    Parity,
    Specializations,
    All,
}

impl SuiteArg {
    fn suites(&self) -> Vec<Suite> {
        match self {
            SuiteArg::All => Suite::ALL.to_vec(),
            other => {
                let name = other.to_possible_value().expect("no skipped variants");
                vec![name.get_name().parse().expect("suite names match the core")]
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Conjecture {
    Conj51,
    Conj61,
}

/// The optional global cap from the environment.
pub fn env_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            CliError::Usage(format!(
                "{MAX_N_VAR} must be a nonnegative integer, got '{v}'"
            ))
        }),
        Err(_) => Ok(None),
    }
}

/// Flags win; otherwise the default, lowered to the environment cap.
fn resolve(flag: Option<usize>, default: usize, cap: Option<usize>) -> usize {
    flag.unwrap_or_else(|| cap.map_or(default, |c| default.min(c)))
}

fn resolve_bounds(args: &BoundArgs, defaults: Bounds, cap: Option<usize>) -> Bounds {
    Bounds {
        n_max: resolve(args.n_max, defaults.n_max, cap),
        m_max: resolve(args.m_max, defaults.m_max, cap),
        k_max: resolve(args.k_max, defaults.k_max, cap),
        d_max: resolve(args.d_max, defaults.d_max, cap),
    }
}

pub struct Summary {
    pub record: SummaryRecord,
    pub counts: Counts,
    lines: Vec<String>,
}

impl Summary {
    fn new(command: &'static str, target: String, reports: Vec<(String, Report)>) -> Self {
        let mut counts = Counts::default();
        let mut lines = Vec::with_capacity(reports.len());
        let mut records = Vec::with_capacity(reports.len());
        for (suite, report) in &reports {
            counts.checked += 1;
            if report.passed() {
                counts.passed += 1;
            } else {
                counts.failed += 1;
            }
            lines.push(report.to_string());
            records.push(ReportRecord::new(suite, report));
        }
        Summary {
            record: SummaryRecord {
                command,
                target,
                counts,
                reports: records,
            },
            counts,
            lines,
        }
    }

    pub fn write(&self, w: &mut dyn Write, json: bool) -> io::Result<()> {
        if json {
            serde_json::to_writer(&mut *w, &self.record)?;
            writeln!(w)
        } else {
            for line in &self.lines {
                writeln!(w, "{line}")?;
            }
            let Counts {
                checked,
                passed,
                failed,
            } = self.counts;
            let (ok, bad) = if self.record.command == "explore" {
                ("holds", "fails")
            } else {
                ("passed", "failed")
            };
            writeln!(
                w,
                "{}: checked {checked}, {ok} {passed}, {bad} {failed}",
                self.record.target
            )
        }
    }
}

pub fn verify(arg: SuiteArg, args: &BoundArgs, cap: Option<usize>) -> Result<Summary, CliError> {
    let mut reports = Vec::new();
    for suite in arg.suites() {
        let bounds = resolve_bounds(args, suite.default_bounds(), cap);
        let found = run_suite(suite, &bounds).map_err(|e| CliError::Usage(e.to_string()))?;
        reports.extend(found.into_iter().map(|r| (suite.name().to_string(), r)));
    }
    let target = arg
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    Ok(Summary::new("verify", target, reports))
}

pub fn explore(
    conjecture: Conjecture,
    args: &BoundArgs,
    cap: Option<usize>,
) -> Result<Summary, CliError> {
    let (name, reports) = match conjecture {
        Conjecture::Conj51 => {
            let b = resolve_bounds(
                args,
                Bounds {
                    n_max: 0,
                    m_max: 10,
                    k_max: 3,
                    d_max: 0,
                },
                cap,
            );
            ("conj51", explore_conjecture51(b.k_max, b.m_max))
        }
        Conjecture::Conj61 => {
            let b = resolve_bounds(
                args,
                Bounds {
                    n_max: 12,
                    m_max: 0,
                    k_max: 0,
                    d_max: 0,
                },
                cap,
            );
            if b.n_max == 0 {
                return Err(CliError::Usage("conj61 needs --n-max >= 1".into()));
            }
            ("conj61", explore_conjecture61(b.n_max))
        }
    };
    let reports = reports
        .into_iter()
        .map(|r| (name.to_string(), Report::Conjecture(r)))
        .collect();
    Ok(Summary::new("explore", name.to_string(), reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        assert_eq!(resolve(Some(20), 12, Some(5)), 20);
        assert_eq!(resolve(None, 12, Some(5)), 5);
        assert_eq!(resolve(None, 12, Some(50)), 12);
        assert_eq!(resolve(None, 12, None), 12);
    }

    #[test]
    fn every_suite_arg_maps_to_core() {
        for arg in SuiteArg::value_variants() {
            assert!(!arg.suites().is_empty());
        }
        assert_eq!(SuiteArg::All.suites().len(), Suite::ALL.len());
    }
}
