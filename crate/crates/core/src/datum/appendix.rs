//! The small-shape table used when both largest parts equal 3.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};

/// Raw table text: blank-line separated blocks of `key: value` lines.
pub const APPENDIX_DATA: &str = include_str!("../../data/appendix.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixRow {
    pub index: usize,
    pub degree: usize,
    pub d1: Partition,
    pub d2: Partition,
    pub lambda: Permutation,
    pub beta: Permutation,
    /// The product as printed in the table.
    pub product: Permutation,
}

impl AppendixRow {
    /// Checks every claim the row makes; returns the first failure.
    pub fn check(&self) -> std::result::Result<(), String> {
        let d = self.degree;
        if self.lambda.cycle_type() != self.d1 {
            return Err(format!("lambda {} not in {}", self.lambda, self.d1));
        }
        if self.beta.cycle_type() != self.d2 {
            return Err(format!("beta {} not in {}", self.beta, self.d2));
        }
        let prod = self.lambda.then(&self.beta);
        if prod != self.product {
            return Err(format!("product {prod} differs from printed {}", self.product));
        }
        if prod.cycle_type() != Partition::near_full(d) {
            return Err(format!("product {prod} is not a ({})-cycle", d - 2));
        }
        Ok(())
    }
}

fn field<'a>(lines: &[&'a str], key: &str) -> Result<&'a str> {
    lines
        .iter()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(':')))
        .map(str::trim)
        .ok_or_else(|| Error::Format(format!("table block lacks {key:?}")))
}

fn parse_block(block: &str) -> Result<AppendixRow> {
    let lines: Vec<&str> = block.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let num = |key: &str| -> Result<usize> {
        field(&lines, key)?
            .parse()
            .map_err(|_| Error::Format(format!("bad {key} in table block")))
    };
    let index = num("row")?;
    let degree = num("degree")?;
    let parts = super::parse_partitions(field(&lines, "datum")?)?;
    let [d1, d2]: [Partition; 2] = parts
        .try_into()
        .map_err(|_| Error::Format(format!("row {index} does not list two partitions")))?;
    let perm = |key: &str| -> Result<Permutation> { Ok(Permutation::parse(field(&lines, key)?, degree)?) };
    Ok(AppendixRow {
        index,
        degree,
        d1,
        d2,
        lambda: perm("u[1]")?,
        beta: perm("u[2]")?,
        product: perm("product")?,
    })
}

/// Parses and checks the table. Any malformed or failing row is an error.
pub fn load_appendix() -> Result<Vec<AppendixRow>> {
    let rows = APPENDIX_DATA
        .split("\n\n")
        .filter(|b| !b.trim().is_empty())
        .map(parse_block)
        .collect::<Result<Vec<_>>>()?;
    for (i, row) in rows.iter().enumerate() {
        if row.index != i + 1 {
            return Err(Error::Format(format!("table row {} out of sequence", row.index)));
        }
        row.check()
            .map_err(|e| Error::Internal(format!("table row {}: {e}", row.index)))?;
    }
    Ok(rows)
}

/// The verified table, loaded once.
pub fn appendix_rows() -> Result<&'static [AppendixRow]> {
    static ROWS: OnceLock<std::result::Result<Vec<AppendixRow>, String>> = OnceLock::new();
    ROWS.get_or_init(|| load_appendix().map_err(|e| e.to_string()))
        .as_deref()
        .map_err(|e| Error::Internal(e.clone()))
}

/// Finds the row for the unordered pair `{d1, d2}`; the flag is set when the row lists
/// them in the opposite order.
pub(crate) fn lookup(d1: &Partition, d2: &Partition) -> Result<Option<(&'static AppendixRow, bool)>> {
    let rows = appendix_rows()?;
    Ok(rows.iter().find_map(|r| {
        if r.d1 == *d1 && r.d2 == *d2 {
            Some((r, false))
        } else if r.d1 == *d2 && r.d2 == *d1 {
            Some((r, true))
        } else {
            None
        }
    }))
}
