//! Compares the two readings of the (alpha, q) determinant formula with the
//! Schur expansion and prints a markdown report.
//!
//! cargo run --example alpha_q_report > reports/alpha_q_determinant.md

fn main() -> Result<(), hurwitz::error::Error> {
    print!("{}", hurwitz::determinant::standard_alpha_q_report(1)?);
    Ok(())
}
