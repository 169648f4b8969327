//! Rendering of command results as text, canonical JSON or CSV.

use std::io::{self, Write};

use serde_json::Value;

/// A command result in every supported format.
pub struct Report {
    pub text: String,
    pub json: Value,
    /// Header and rows; commands without a natural table omit it and fall
    /// back to text under `--csv`.
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Report {
    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match (format, &self.table) {
            (Format::Json, _) => {
                // serde_json's default map is ordered, so keys come out sorted
                let s = serde_json::to_string_pretty(&self.json).map_err(io::Error::other)?;
                writeln!(out, "{s}")
            }
            (Format::Csv, Some((header, rows))) => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(header)?;
                for r in rows {
                    w.write_record(r)?;
                }
                w.flush()
            }
            _ => writeln!(out, "{}", self.text.trim_end()),
        }
    }
}
