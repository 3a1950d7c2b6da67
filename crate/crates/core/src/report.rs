//! Plain tables rendered as aligned text, CSV or JSON.

use serde_json::{json, Value};

use crate::rational::{format_exact, format_rounded, Rational};

/// How rationals are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberStyle {
    Exact,
    /// Rounded half away from zero to this many decimals.
    Rounded(u32),
}

impl NumberStyle {
    pub fn format(self, value: &Rational) -> String {
        match self {
            NumberStyle::Exact => format_exact(value),
            NumberStyle::Rounded(digits) => format_rounded(value, digits),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    /// A number; `marked` cells get a trailing `*` in text output.
    Value {
        value: Rational,
        marked: bool,
    },
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    pub fn value(value: Rational) -> Self {
        Cell::Value {
            value,
            marked: false,
        }
    }

    fn is_numeric(&self) -> bool {
        matches!(self, Cell::Value { .. })
    }

    fn render(&self, style: NumberStyle, with_marks: bool) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Value { value, marked } => {
                let mut s = style.format(value);
                if *marked && with_marks {
                    s.push('*');
                }
                s
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub title: Option<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(columns: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    pub fn titled(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Columns separated by two spaces; numbers and their headers are
    /// right-aligned, everything else left-aligned.
    pub fn render_text(&self, style: NumberStyle) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c.render(style, true)).collect())
            .collect();
        let numeric: Vec<bool> = (0..self.columns.len())
            .map(|j| !self.rows.is_empty() && self.rows.iter().all(|r| r[j].is_numeric()))
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                rendered
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain([self.columns[j].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    let pad = " ".repeat(widths[j] - s.chars().count());
                    if numeric[j] {
                        format!("{pad}{s}")
                    } else {
                        format!("{s}{pad}")
                    }
                })
                .collect();
            padded.join("  ").trim_end().to_string()
        };

        let mut out = String::new();
        if let Some(title) = &self.title {
            out.push_str(title);
            out.push('\n');
        }
        out.push_str(&line(&self.columns));
        out.push('\n');
        for row in &rendered {
            out.push_str(&line(row));
            out.push('\n');
        }
        for note in &self.notes {
            out.push_str("note: ");
            out.push_str(note);
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self, style: NumberStyle) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(&self.columns)
            .expect("writing to memory");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(|c| c.render(style, false)))
                .expect("writing to memory");
        }
        String::from_utf8(writer.into_inner().expect("flushing to memory"))
            .expect("csv output is utf-8")
    }

    /// Numbers become strings in the chosen style.
    pub fn to_json(&self, style: NumberStyle) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|c| match c {
                            Cell::Text(s) => Value::String(s.clone()),
                            Cell::Value { value, .. } => Value::String(style.format(value)),
                        })
                        .collect(),
                )
            })
            .collect();
        json!({
            "title": self.title,
            "columns": self.columns,
            "rows": rows,
            "notes": self.notes,
        })
    }
}
