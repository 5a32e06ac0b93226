//! Infinite families: rates and relative distances converging to R and 1 - R,
//! with CSS parameters for the quantum variant.
//!
//! `cargo run --example series -- char2-mersenne 3/4 qecc 10`

use fourier_codes::block::Rate;
use fourier_codes::series::{enumerate, limit_report, Family, SeriesSpec, SeriesType};

fn main() -> fourier_codes::Result<()> {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().unwrap_or_else(|| "char2-mersenne".into()).parse()?;
    let rate: Rate = args.next().unwrap_or_else(|| "3/4".into()).parse()?;
    let code_type: SeriesType = args.next().unwrap_or_else(|| "qecc".into()).parse()?;
    let count = args.next().and_then(|c| c.parse().ok()).unwrap_or(10);
    let elements = enumerate(&SeriesSpec::new(family, rate, code_type), count)?;
    println!("{:>40}  |r/n - R|  |d/n - (1-R)|", "element");
    for (e, row) in elements.iter().zip(limit_report(rate, &elements)) {
        println!(
            "{:>40}  {:.6}   {:.6}",
            e.to_string(),
            row.rate_gap,
            row.rdist_gap
        );
    }
    // Small members are built and certified.
    for e in elements.iter().filter(|e| e.n <= 31) {
        let code = e.instantiate()?;
        println!("built {}", code.summary_line());
    }
    Ok(())
}
