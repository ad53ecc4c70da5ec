//! Deterministic rendering of job results.

use std::fmt::Write as _;

use fhcalc_core::functor_calc::Provenance;
use fhcalc_core::verify::SuiteReport;
use fhcalc_core::GradedSpace;

use crate::job::Format;

#[derive(Debug, Clone)]
pub enum ReportBody {
    Table {
        space: GradedSpace,
        provenance: Provenance,
    },
    Verify(Vec<SuiteReport>),
}

#[derive(Debug, Clone)]
pub struct Report {
    pub task: &'static str,
    pub p: u64,
    pub truncation: usize,
    pub body: ReportBody,
}

impl Report {
    /// False only for verification runs with a failing check.
    pub fn passed(&self) -> bool {
        match &self.body {
            ReportBody::Table { .. } => true,
            ReportBody::Verify(suites) => suites.iter().all(SuiteReport::passed),
        }
    }

    pub fn space(&self) -> Option<&GradedSpace> {
        match &self.body {
            ReportBody::Table { space, .. } => Some(space),
            ReportBody::Verify(_) => None,
        }
    }

    /// CSV carries the table only (`degree,dimension`); text carries the
    /// table, series and provenance. Both end with a newline and use LF.
    pub fn render(&self, format: Format) -> String {
        match (format, &self.body) {
            (Format::Csv, ReportBody::Table { space, .. }) => space.to_csv(),
            (Format::Csv, ReportBody::Verify(suites)) => {
                let mut out = String::from("suite,check,instances,status\n");
                for s in suites {
                    for c in &s.checks {
                        let _ = writeln!(
                            out,
                            "{},\"{}\",{},{}",
                            s.suite,
                            c.name.replace('"', "\"\""),
                            c.instances,
                            if c.passed() { "pass" } else { "fail" }
                        );
                    }
                }
                out
            }
            (Format::Text, ReportBody::Table { space, provenance }) => {
                let mut out = String::new();
                let _ = writeln!(out, "task: {}", self.task);
                let _ = writeln!(out, "field: GF({})", self.p);
                let _ = writeln!(out, "truncation: {}", self.truncation);
                let _ = writeln!(out, "series: {}", space.poincare_series());
                out.push_str("degree  dimension\n");
                for (n, d) in space.dims().iter().enumerate() {
                    let _ = writeln!(out, "{n:>6}  {d:>9}");
                }
                out.push_str("provenance:\n  results:\n");
                for f in &provenance.facts {
                    let _ = writeln!(out, "    - {}", f.name());
                }
                out.push_str("  hypotheses:\n");
                for h in &provenance.hypotheses {
                    let _ = writeln!(out, "    - {}", h.name());
                }
                out
            }
            (Format::Text, ReportBody::Verify(suites)) => {
                suites.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
            }
        }
    }
}
