use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Tsv,
    JsonLines,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(u64),
    /// Arbitrary-size integer, emitted as a JSON string.
    Big(String),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(s) | Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Big(s) | Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Cell {
        Cell::Int(v.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Cell {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Cell {
        Cell::Text(s.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlainStyle {
    /// Aligned columns, no header.
    Rows,
    /// Aligned columns under a header row.
    Header,
    /// The last column of every row on one line, space separated.
    Line,
}

pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub plain: PlainStyle,
}

impl Table {
    pub fn new(columns: &[&str], plain: PlainStyle) -> Table {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            plain,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        match format {
            OutputFormat::Plain => self.render_plain(&mut out),
            OutputFormat::Tsv => {
                out.push_str(&self.columns.join("\t"));
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::text).collect();
                    out.push_str(&cells.join("\t"));
                    out.push('\n');
                }
            }
            OutputFormat::JsonLines => {
                for row in &self.rows {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .cloned()
                        .zip(row.iter().map(Cell::json))
                        .collect();
                    out.push_str(&Value::Object(obj).to_string());
                    out.push('\n');
                }
            }
        }
        out
    }

    fn render_plain(&self, out: &mut String) {
        if self.plain == PlainStyle::Line {
            let cells: Vec<String> = self
                .rows
                .iter()
                .filter_map(|r| r.last().map(Cell::text))
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
            return;
        }
        let mut lines: Vec<Vec<String>> = Vec::new();
        if self.plain == PlainStyle::Header {
            lines.push(self.columns.clone());
        }
        lines.extend(self.rows.iter().map(|r| r.iter().map(Cell::text).collect()));
        let mut widths = vec![0; self.columns.len()];
        for line in &lines {
            for (w, cell) in widths.iter_mut().zip(line) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for line in lines {
            let mut s = String::new();
            for (i, cell) in line.iter().enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(cell);
                let pad = widths[i] - cell.chars().count();
                s.extend(std::iter::repeat_n(' ', pad));
            }
            out.push_str(s.trim_end());
            out.push('\n');
        }
    }
}

/// Writes to stdout, treating a closed pipe as success.
pub fn emit(text: &str) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => r,
    }
}
