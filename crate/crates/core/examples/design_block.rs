//! MDS, dual-containing and LCD block codes from Fourier rows, certified.
//!
//! `cargo run --example design_block`

use fourier_codes::block::{design_dc, design_dc_hermitian, design_lcd, design_mds};
use fourier_codes::verify::{certify_block, DEFAULT_BUDGET};
use fourier_codes::{Field, FourierContext};
use std::sync::Arc;

fn main() -> fourier_codes::Result<()> {
    let gf8 = Arc::new(FourierContext::new(Arc::new(Field::new(2, 3)?), 7)?);
    let gf11 = Arc::new(FourierContext::new(Arc::new(Field::new(11, 1)?), 10)?);
    let codes = [
        design_mds(&gf11, 0, 1, 6)?,
        design_mds(&gf11, 3, 3, 6)?,
        design_dc(&gf8, 4)?,
        design_lcd(&gf8, 2)?,
        design_dc_hermitian(Arc::new(Field::new(2, 6)?), 7, 4)?,
    ];
    for mut code in codes {
        let verdict = certify_block(&mut code, DEFAULT_BUDGET);
        let dist = verdict
            .distance
            .map(|d| d.to_string())
            .unwrap_or_else(|e| e.to_string());
        println!("{:<40} rows {:?}  {dist}", code.summary_line(), code.selection());
    }
    Ok(())
}
