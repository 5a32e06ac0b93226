//! Free distances: trellis search, the memory-1 structural certificate and
//! bounded-degree enumeration, compared with the generalized Singleton bound.
//!
//! `cargo run --release --example free_distance`

use fourier_codes::conv::{lift_dc_char2, lift_memory1, lift_preset, ConvCode, Preset};
use fourier_codes::verify::free::memory1_certificate;
use fourier_codes::verify::{free_distance, DEFAULT_BUDGET};
use fourier_codes::{Field, FourierContext};
use std::sync::Arc;
use std::time::Instant;

fn ctx(p: u64, s: u32, n: usize) -> fourier_codes::Result<Arc<FourierContext>> {
    Ok(Arc::new(FourierContext::new(Arc::new(Field::new(p, s)?), n)?))
}

fn main() -> fourier_codes::Result<()> {
    let c7 = ctx(2, 3, 7)?;
    let c15 = ctx(2, 4, 15)?;
    let c31 = ctx(2, 5, 31)?;
    let codes: Vec<ConvCode> = vec![
        lift_memory1(&c7, 4)?,
        lift_preset(&c7, Preset::Mem2)?,
        lift_preset(&c7, Preset::Mem3)?,
        lift_preset(&c7, Preset::Repetition)?,
        lift_memory1(&c15, 8)?,
        lift_memory1(&c15, 9)?,
        lift_memory1(&ctx(11, 1, 10)?, 6)?,
        lift_dc_char2(&c31, 10)?,
        lift_dc_char2(&c31, 8)?,
    ];
    for code in &codes {
        let start = Instant::now();
        let rep = free_distance(code, 2, DEFAULT_BUDGET)?;
        println!(
            "{:<18} GSB {:>3}  {rep} via {:?} in {:.1?}",
            code.params(),
            code.gsb(),
            rep.method,
            start.elapsed()
        );
        if code.memory() == 1 {
            let cert = memory1_certificate(code, DEFAULT_BUDGET)?;
            println!(
                "{:<18} certificate lower {} upper {:?}",
                "", cert.lower, cert.upper
            );
        }
    }
    Ok(())
}
