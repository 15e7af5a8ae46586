//! The `eval` command: integer specializations of the four families.

use incpoly_core::{fib, fib_incomplete, lucas, lucas_incomplete, FamilyParams};
use num_bigint::BigInt;
use serde::Serialize;

use crate::opts::{EvalKind, Format};
use crate::render::Grid;
use crate::CliError;

pub struct EvalModel {
    pub kind: EvalKind,
    pub h_text: String,
    pub at: BigInt,
    pub l: Option<u64>,
    pub rows: Vec<(u64, BigInt)>,
}

pub fn build_eval(
    kind: EvalKind,
    params: &FamilyParams,
    at: &BigInt,
    l: Option<u64>,
    n_max: u64,
) -> Result<EvalModel, CliError> {
    let rows = match kind {
        EvalKind::Fib => (1..=n_max).map(|n| (n, fib(params, n))).collect(),
        EvalKind::Lucas => (1..=n_max).map(|n| (n, lucas(params, n))).collect(),
        EvalKind::FibIncomplete => {
            let l = l.ok_or(CliError::MissingL("fib_incomplete"))?;
            (2 * l + 1..=n_max)
                .map(|n| (n, fib_incomplete(params, n, l).expect("n >= 2l+1")))
                .collect::<Vec<_>>()
        }
        EvalKind::LucasIncomplete => {
            let l = l.ok_or(CliError::MissingL("lucas_incomplete"))?;
            (2 * l..=n_max)
                .map(|n| (n, lucas_incomplete(params, n, l).expect("n >= 2l")))
                .collect::<Vec<_>>()
        }
    };
    let rows = rows
        .into_iter()
        .map(|(n, poly)| (n, poly.eval_int(at)))
        .collect();
    Ok(EvalModel {
        kind,
        h_text: params.h().to_text(),
        at: at.clone(),
        l,
        rows,
    })
}

impl EvalModel {
    fn grid(&self) -> Grid {
        Grid {
            headers: vec!["n".to_string(), "value".to_string()],
            rows: self
                .rows
                .iter()
                .map(|(n, v)| vec![n.to_string(), v.to_string()])
                .collect(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => self.grid().to_markdown(),
            Format::Csv => self.grid().to_csv(),
            // integer cells, no math mode needed
            Format::Latex => self.grid().to_latex(usize::MAX),
            Format::Json => {
                let repr = EvalJson {
                    kind: match self.kind {
                        EvalKind::Fib => "fib",
                        EvalKind::Lucas => "lucas",
                        EvalKind::FibIncomplete => "fib_incomplete",
                        EvalKind::LucasIncomplete => "lucas_incomplete",
                    },
                    h: self.h_text.clone(),
                    at: self.at.to_string(),
                    l: self.l,
                    values: self
                        .rows
                        .iter()
                        .map(|(n, v)| ValueJson {
                            n: *n,
                            value: v.to_string(),
                        })
                        .collect(),
                };
                let mut text = serde_json::to_string_pretty(&repr).expect("eval serializes");
                text.push('\n');
                text
            }
        }
    }
}

#[derive(Serialize)]
struct EvalJson {
    kind: &'static str,
    h: String,
    at: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u64>,
    values: Vec<ValueJson>,
}

#[derive(Serialize)]
struct ValueJson {
    n: u64,
    value: String,
}
