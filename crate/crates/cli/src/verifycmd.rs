//! The `verify` command: sweeps every cataloged identity over a sample of
//! generating polynomials. The process exit status is the contract: zero
//! iff every report is all-pass.

use incpoly_core::{verify_identity_range, FamilyParams, IdentityId, IdentityReport};

use crate::opts::Format;
use crate::render::Grid;

pub struct VerifyModel {
    pub n_max: u64,
    pub reports: Vec<IdentityReport>,
}

pub fn build_verify(samples: &[FamilyParams], n_max: u64) -> VerifyModel {
    let mut reports = Vec::with_capacity(samples.len() * IdentityId::ALL.len());
    for params in samples {
        for id in IdentityId::ALL {
            reports.push(verify_identity_range(id, params, n_max));
        }
    }
    VerifyModel { n_max, reports }
}

impl VerifyModel {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }

    pub fn total_points(&self) -> usize {
        self.reports.iter().map(|r| r.points).sum()
    }

    fn grid(&self) -> Grid {
        Grid {
            headers: ["h", "identity", "points", "status"]
                .map(str::to_string)
                .to_vec(),
            rows: self
                .reports
                .iter()
                .map(|r| {
                    vec![
                        r.h_text.clone(),
                        r.identity.tag().to_string(),
                        r.points.to_string(),
                        r.status.as_str().to_string(),
                    ]
                })
                .collect(),
        }
    }

    fn counterexample_section(&self) -> String {
        let mut out = String::new();
        for report in self.reports.iter().filter(|r| !r.passed()) {
            for ce in &report.counterexamples {
                out.push_str(&format!(
                    "- {} at h = {}, {}: lhs = {}, rhs = {}\n",
                    report.identity.tag(),
                    report.h_text,
                    ce.args,
                    ce.lhs.to_text(),
                    ce.rhs.to_text()
                ));
            }
        }
        if out.is_empty() {
            out
        } else {
            format!("\nCounterexamples:\n\n{out}")
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => {
                let mut text = self.grid().to_markdown();
                text.push_str(&self.counterexample_section());
                text
            }
            Format::Csv => self.grid().to_csv(),
            Format::Latex => self.grid().to_latex(usize::MAX),
            Format::Json => {
                let mut text =
                    serde_json::to_string_pretty(&self.reports).expect("reports serialize");
                text.push('\n');
                text
            }
        }
    }
}
