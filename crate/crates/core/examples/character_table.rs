//! Prints the character table of S_n and checks both orthogonality relations.
//!
//! cargo run --example character_table -- 5

use hurwitz::characters::character_table;

fn main() -> Result<(), hurwitz::error::Error> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let t = character_table(n)?;
    let order = hurwitz::partition::partitions_of(n)?;
    print!("{:>12}", "");
    for mu in &order {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for lambda in &order {
        print!("{:>12}", lambda.to_string());
        for mu in &order {
            print!("{:>10}", t.value(lambda, mu));
        }
        println!();
    }
    println!("row orthogonality: {}", t.row_orthogonality_holds());
    println!("column orthogonality: {}", t.column_orthogonality_holds());
    Ok(())
}
