//! The twisted Cauchy kernel: the Schur-side and power-sum-side expansions agree.

use hurwitz::convolution::Family;
use hurwitz::tau::{build_tau, schur_side};
use hurwitz::twist::TwistSpec;

fn main() -> Result<(), hurwitz::error::Error> {
    let tau = build_tau(&Family::Twist(TwistSpec::weak_then_strict(3, 3)), 4)?;
    for n in 0..=4 {
        let lhs = schur_side(tau.schur(), n)?;
        let rhs = tau.powersum().degree_part(n);
        println!("degree {n}: {} terms, sides agree: {}", rhs.len(), lhs == rhs);
    }
    Ok(())
}
