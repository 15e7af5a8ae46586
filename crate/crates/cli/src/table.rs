//! The `table` command: triangular tables of the incomplete polynomials,
//! cell-for-cell in the layout the families are usually tabulated in.

use incpoly_core::{fib_incomplete, lucas_incomplete, FamilyParams, Polynomial};
use serde::Serialize;

use crate::opts::{Format, TableKind};
use crate::render::Grid;

pub struct TableModel {
    pub kind: TableKind,
    pub h_text: String,
    pub n_max: u64,
    /// Variable letter used in cell text. When h(x) = x the cells are
    /// powers of the generating polynomial itself, so they print with `h`
    /// unless the caller asked for the literal variable.
    pub letter: char,
    pub rows: Vec<TableRow>,
}

pub struct TableRow {
    pub n: u64,
    pub cells: Vec<Polynomial>,
}

pub fn max_l(kind: TableKind, n: u64) -> u64 {
    match kind {
        TableKind::Fib => (n - 1) / 2,
        TableKind::Lucas => n / 2,
    }
}

pub fn build_table(
    kind: TableKind,
    params: &FamilyParams,
    n_max: u64,
    literal_var: bool,
) -> TableModel {
    let letter = if *params.h() == Polynomial::x() && !literal_var {
        'h'
    } else {
        'x'
    };
    let rows = (1..=n_max)
        .map(|n| {
            let cells = (0..=max_l(kind, n))
                .map(|l| match kind {
                    TableKind::Fib => fib_incomplete(params, n, l),
                    TableKind::Lucas => lucas_incomplete(params, n, l),
                })
                .map(|r| r.expect("indices are valid by construction"))
                .collect();
            TableRow { n, cells }
        })
        .collect();
    TableModel {
        kind,
        h_text: params.h().to_text(),
        n_max,
        letter,
        rows,
    }
}

impl TableModel {
    pub fn cell_text(&self, poly: &Polynomial) -> String {
        poly.format_with(self.letter)
    }

    fn columns(&self) -> u64 {
        max_l(self.kind, self.n_max) + 1
    }

    fn grid(&self) -> Grid {
        let mut headers = vec![r"n\l".to_string()];
        headers.extend((0..self.columns()).map(|l| l.to_string()));
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut cells = vec![row.n.to_string()];
                cells.extend(row.cells.iter().map(|p| self.cell_text(p)));
                cells.resize(self.columns() as usize + 1, String::new());
                cells
            })
            .collect();
        Grid { headers, rows }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => self.grid().to_markdown(),
            Format::Csv => self.grid().to_csv(),
            Format::Latex => self.grid().to_latex(1),
            Format::Json => {
                let mut text =
                    serde_json::to_string_pretty(&self.json_repr()).expect("table serializes");
                text.push('\n');
                text
            }
        }
    }

    fn json_repr(&self) -> TableJson {
        TableJson {
            kind: match self.kind {
                TableKind::Fib => "fib",
                TableKind::Lucas => "lucas",
            },
            h: self.h_text.clone(),
            n_max: self.n_max,
            var: self.letter.to_string(),
            rows: self
                .rows
                .iter()
                .map(|row| RowJson {
                    n: row.n,
                    cells: row
                        .cells
                        .iter()
                        .map(|p| CellJson {
                            text: self.cell_text(p),
                            poly: p.clone(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct TableJson {
    kind: &'static str,
    h: String,
    n_max: u64,
    var: String,
    rows: Vec<RowJson>,
}

#[derive(Serialize)]
struct RowJson {
    n: u64,
    cells: Vec<CellJson>,
}

#[derive(Serialize)]
struct CellJson {
    text: String,
    poly: Polynomial,
}
