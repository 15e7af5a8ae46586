//! Shared plain-text emitters. Output is fully determined by the input
//! model, so identical configurations render byte-identical text.

/// A rectangular grid with a header row; empty cells are empty strings.
pub struct Grid {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Grid {
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&markdown_row(&self.headers));
        let dashes: Vec<String> = self.headers.iter().map(|_| "---".to_string()).collect();
        out.push_str(&markdown_row(&dashes));
        for row in &self.rows {
            out.push_str(&markdown_row(row));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.headers.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// A plain tabular environment; polynomial cells are set in math mode
    /// with braced exponents.
    pub fn to_latex(&self, math_columns_from: usize) -> String {
        let mut out = String::new();
        let spec: String = (0..self.headers.len())
            .map(|i| if i == 0 { "r|" } else { "l" })
            .collect();
        out.push_str(&format!("\\begin{{tabular}}{{{spec}}}\n"));
        out.push_str(&self.headers.join(" & "));
        out.push_str(" \\\\\n\\hline\n");
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(i, cell)| {
                    if i >= math_columns_from && !cell.is_empty() {
                        format!("${}$", latex_math(cell))
                    } else {
                        cell.clone()
                    }
                })
                .collect();
            out.push_str(&cells.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn markdown_row(cells: &[String]) -> String {
    let mut out = String::from("|");
    for cell in cells {
        out.push(' ');
        out.push_str(cell);
        out.push_str(" |");
    }
    out.push('\n');
    out
}

/// Braces multi-digit exponents: `h^12` becomes `h^{12}`.
pub fn latex_math(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            let mut digits = String::new();
            while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                digits.push(chars.next().unwrap());
            }
            out.push('{');
            out.push_str(&digits);
            out.push('}');
        }
    }
    out
}
