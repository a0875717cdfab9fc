use std::io::Write;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl Cell {
    /// 17 significant digits for floats so that output round-trips.
    pub fn render(&self) -> String {
        match self {
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Int(v) => v.to_string(),
        }
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            Cell::Float(v) => v,
            Cell::Int(v) => v as f64,
        }
    }
}

/// Named columns with units, rows in output order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<(&'static str, &'static str)>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<(&'static str, &'static str)>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|(c, _)| *c == name)?;
        Some(self.rows.iter().map(|r| r[idx].as_f64()).collect())
    }

    /// Header comments, the column-name row and every data row.
    pub fn write_csv<W: Write>(&self, mut out: W, config_line: &str) -> std::io::Result<()> {
        writeln!(
            out,
            "# {} {}",
            env!("CARGO_PKG_NAME"),
            env!("CARGO_PKG_VERSION")
        )?;
        writeln!(out, "# config: {config_line}")?;
        let units: Vec<String> = self
            .columns
            .iter()
            .map(|(c, u)| format!("{c} [{u}]"))
            .collect();
        writeln!(out, "# units: {}", units.join(", "))?;
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(self.columns.iter().map(|(c, _)| *c))?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()
    }

    pub fn to_csv_string(&self, config_line: &str) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf, config_line)
            .expect("writing to memory");
        String::from_utf8(buf).expect("csv output is ASCII")
    }
}

pub(crate) fn io_error(path: &str) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}
