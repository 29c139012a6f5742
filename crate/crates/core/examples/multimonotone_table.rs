//! Multimonotone Hurwitz numbers as CSV.
//!
//! cargo run --example multimonotone_table -- 3

use hurwitz::tau::{hurwitz_table, table_to_csv, TableKind};

fn main() -> Result<(), hurwitz::error::Error> {
    let m: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let kind = TableKind::Multi(m);
    let rows = hurwitz_table(kind, 4, 3, false)?;
    print!("{}", table_to_csv(kind, &rows)?);
    Ok(())
}
