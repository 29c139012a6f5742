//! Jucys-Murphy power sums are central; their class expansions for small n.

use hurwitz::group_algebra::jm_power_sum;

fn main() -> Result<(), hurwitz::error::Error> {
    for n in 2..=5 {
        for i in 1..=3 {
            let c = jm_power_sum(n, i)?.project_to_classes()?;
            let terms: Vec<String> = c.coords().map(|(mu, q)| format!("{q} C[{mu}]")).collect();
            println!("n={n} P_{i} = {}", terms.join(" + "));
        }
    }
    Ok(())
}
