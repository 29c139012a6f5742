//! Convolution coefficients of the monotone twist and the shifted content
//! product they produce.

use hurwitz::convolution::{intertwine, r_lambda_shifted};
use hurwitz::partition::Partition;
use hurwitz::twist::TwistSpec;

fn main() -> Result<(), hurwitz::error::Error> {
    let c = intertwine(&TwistSpec::monotone(4))?;
    for j in -3..=3 {
        let rho = c.rho(j)?;
        println!("rho_{j} = {}", rho.series);
    }
    let lambda: Partition = "2,1".parse()?;
    for n in 0..=3 {
        let r = r_lambda_shifted(&c, &lambda, n)?;
        println!("r_({lambda})({n}) = {}", r.series);
    }
    Ok(())
}
