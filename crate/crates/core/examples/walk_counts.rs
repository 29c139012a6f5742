//! Counts walks on the Cayley graph of S_4 under each step constraint and
//! compares them with the twisted connection coefficients.

use hurwitz::partition::Partition;
use hurwitz::twist::{connection_coeffs, TwistSpec};
use hurwitz::walks::{count_walks, Constraint, WalkQuery};

fn main() -> Result<(), hurwitz::error::Error> {
    let from: Partition = "2,1,1".parse()?;
    let to: Partition = "3,1".parse()?;
    let k = 3;
    for c in [
        Constraint::Plain(k),
        Constraint::WeaklyMonotone(k),
        Constraint::StrictlyMonotone(k),
        Constraint::Mixed { p: 2, k },
        Constraint::MultiMonotone(vec![2, 1]),
    ] {
        let label = c.to_string();
        let n = count_walks(&WalkQuery::new(from.clone(), to.clone(), c))?;
        println!("{label:>24}: {n}");
    }
    let g = connection_coeffs(&TwistSpec::monotone(k as u32), 4)?;
    println!("H(z) coefficient series {from} -> {to}: {}", g.entry(&from, &to));
    Ok(())
}
