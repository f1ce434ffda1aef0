//! Plain-text and line-oriented machine reports.
//!
//! Text format: `key = value` lines and free rows, then `status = <s>`.
//! Machine format: one record per line, tab separated:
//! `field\t<key>\t<value>`, `row\t<text>`, and a final `status\t<s>`.

use std::fmt::Write as _;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    InputError,
    Exhausted,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InputError => 2,
            Status::Exhausted => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::InputError => "input-error",
            Status::Exhausted => "exhausted",
        }
    }

    /// The worse of two statuses.
    pub fn and(self, other: Status) -> Status {
        if other.code() > self.code() {
            other
        } else {
            self
        }
    }
}

enum Line {
    Field(String, String),
    Row(String),
}

pub struct Report {
    lines: Vec<Line>,
    pub status: Status,
}

impl Default for Report {
    fn default() -> Self {
        Report { lines: Vec::new(), status: Status::Pass }
    }
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.lines.push(Line::Field(key.into(), value.to_string()));
        self
    }

    pub fn row(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(Line::Row(text.into()));
        self
    }

    /// A `name = pass|FAIL` row that downgrades the status on failure.
    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> &mut Self {
        self.field(name, if passed { "pass" } else { "FAIL" });
        if !passed {
            self.status = self.status.and(Status::Fail);
        }
        self
    }

    pub fn fail(&mut self) -> &mut Self {
        self.status = self.status.and(Status::Fail);
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let _ = match (line, format) {
                (Line::Field(k, v), Format::Text) => writeln!(out, "{k} = {v}"),
                (Line::Row(r), Format::Text) => writeln!(out, "{r}"),
                (Line::Field(k, v), Format::Machine) => writeln!(out, "field\t{k}\t{v}"),
                (Line::Row(r), Format::Machine) => writeln!(out, "row\t{r}"),
            };
        }
        let _ = match format {
            Format::Text => writeln!(out, "status = {}", self.status.label()),
            Format::Machine => writeln!(out, "status\t{}", self.status.label()),
        };
        out
    }
}
