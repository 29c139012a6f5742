//! Schur functions in the power-sum basis, and the Cauchy identity at a point.

use hurwitz::partition::partitions_of;
use hurwitz::scalar::frac;
use hurwitz::symfunc::{cauchy_sides, schur_to_powersum};

fn main() -> Result<(), hurwitz::error::Error> {
    for lambda in partitions_of(4)? {
        let s = schur_to_powersum(&lambda)?;
        let terms: Vec<String> = s.terms().map(|(mu, c)| format!("{c} p[{mu}]")).collect();
        println!("s[{lambda}] = {}", terms.join(" + "));
    }
    let x = [frac(1, 1), frac(1, 2)];
    let y = [frac(1, 3), frac(2, 1)];
    for n in 0..=4 {
        let (schur, power) = cauchy_sides(n, &x, &y)?;
        println!("degree {n}: sum s(x)s(y) = {schur}, sum p(x)p(y)/z = {power}");
    }
    Ok(())
}
