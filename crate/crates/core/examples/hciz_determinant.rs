//! The HCIZ tau function in three variables against its determinant formula.

use hurwitz::convolution::Family;
use hurwitz::determinant::{distinct_rationals, hciz_determinant};
use hurwitz::scalar::format;
use hurwitz::tau::{build_tau, tau_eval};

fn main() -> Result<(), hurwitz::error::Error> {
    let n = 3;
    let cap = 6;
    let points = distinct_rationals(7, 2 * n);
    let (a, b) = points.split_at(n);
    let det = hciz_determinant(n, a, b, cap)?;
    let tau = build_tau(&Family::HcizExp { z_cap: cap, n_vars: n }, cap as usize)?;
    let series = tau_eval(&tau, a, b)?.embed(det.vars())?;
    let show = |v: &[_]| v.iter().map(format).collect::<Vec<_>>().join(", ");
    println!("a = ({})", show(a));
    println!("b = ({})", show(b));
    println!("determinant: {det}");
    println!("schur sum:   {series}");
    println!("equal: {}", det == series);
    Ok(())
}
