use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde_json::{Number, Value};
use twoline::counting::BigCount;

use crate::CliError;

pub fn open(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| io_at(path, e))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_at(path: &Path, e: io::Error) -> CliError {
    CliError::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

/// Exact JSON number for an arbitrarily large count.
pub fn big(x: &BigCount) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal digits are a valid JSON number"))
}

pub fn big_rows(rows: &[Vec<BigCount>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(big).collect())).collect())
}

pub fn json(w: &mut dyn Write, v: &impl serde::Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *w, v).map_err(|e| CliError::Io(e.into()))?;
    writeln!(w)?;
    Ok(())
}

/// `index value` lines starting at `offset`.
pub fn bfile(w: &mut dyn Write, offset: usize, values: &[BigCount]) -> Result<(), CliError> {
    for (i, v) in values.iter().enumerate() {
        writeln!(w, "{} {v}", i + offset)?;
    }
    Ok(())
}

pub fn joined(row: &[BigCount], sep: &str) -> String {
    row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
