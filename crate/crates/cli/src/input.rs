//! Parsing of command-line inputs into toolkit values.

use std::path::Path;
use std::sync::Arc;

use braidkit::braidrep::braid_structure;
use braidkit::garside::PresentationFile;
use braidkit::{BaseGroup, CyclicGroup, Error, GarsideGroup, IntegerGroup, PositiveWord, SignedWord};

use crate::report::Status;

/// A failure carrying the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { status: Status::InputError, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Diverged { .. } | Error::Budget(_) => Status::Exhausted,
            _ => Status::InputError,
        };
        Failure { status, message: e.to_string() }
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

pub fn read_presentation(path: &Path) -> CliResult<PresentationFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    PresentationFile::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// `Z`, `Z/k` or `B<n>`.
pub fn parse_base(name: &str) -> CliResult<Arc<dyn BaseGroup>> {
    if name == "Z" {
        return Ok(Arc::new(IntegerGroup::new()));
    }
    if let Some(k) = name.strip_prefix("Z/") {
        let k: u64 = k.parse().map_err(|_| Failure::input(format!("bad cyclic order in `{name}`")))?;
        return Ok(Arc::new(CyclicGroup::new(k)?));
    }
    if let Some(n) = name.strip_prefix('B') {
        let n: usize = n.parse().map_err(|_| Failure::input(format!("bad strand count in `{name}`")))?;
        if n < 2 {
            return Err(Failure::input("braid base groups need at least 2 strands"));
        }
        return Ok(Arc::new(GarsideGroup::new(braid_structure(n)?, name)));
    }
    Err(Failure::input(format!("unknown base group `{name}` (expected Z, Z/k or B<n>)")))
}

pub fn parse_base_word(base: &dyn BaseGroup, text: &str) -> CliResult<SignedWord> {
    Ok(base.alphabet().parse_signed(text)?)
}

/// The file's `delta` unless one is given on the command line.
pub fn delta_of(file: &PresentationFile, given: Option<&str>) -> CliResult<PositiveWord> {
    match given {
        Some(text) => Ok(file.presentation.alphabet().parse_positive(text)?),
        None => file.delta.clone().ok_or_else(|| Failure::input("no delta in the file and none given with --delta")),
    }
}
