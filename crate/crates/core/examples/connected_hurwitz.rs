//! Connected double Hurwitz numbers from the logarithm of the tau function,
//! next to direct counts of transitive walks.

use hurwitz::tau::{hurwitz_table, TableKind};
use hurwitz::walks::{count_walks, Constraint, WalkQuery};

fn main() -> Result<(), hurwitz::error::Error> {
    for row in hurwitz_table(TableKind::Plain, 4, 4, true)? {
        if row.count == 0.into() {
            continue;
        }
        let b = row.steps[0].1 as usize;
        let q = WalkQuery::new(row.from.clone(), row.to.clone(), Constraint::Plain(b)).transitive(true);
        println!("n={} {} -> {} b={b}: log {} walks {}", row.n, row.from, row.to, row.count, count_walks(&q)?);
    }
    Ok(())
}
