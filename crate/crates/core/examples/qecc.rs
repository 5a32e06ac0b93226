//! CSS quantum codes from certified dual-containing codes, Euclidean and
//! Hermitian.
//!
//! `cargo run --example qecc`

use fourier_codes::block::{css_from_dc, design_dc, design_dc_hermitian, BlockCode};
use fourier_codes::verify::{certify_block, DEFAULT_BUDGET};
use fourier_codes::{Field, FourierContext};
use std::sync::Arc;

fn main() -> fourier_codes::Result<()> {
    let codes: Vec<BlockCode> = vec![
        design_dc(&Arc::new(FourierContext::new(Arc::new(Field::new(2, 3)?), 7)?), 4)?,
        design_dc(
            &Arc::new(FourierContext::new(Arc::new(Field::new(2, 5)?), 31)?),
            17,
        )?,
        design_dc_hermitian(Arc::new(Field::new(2, 6)?), 7, 4)?,
        design_dc_hermitian(Arc::new(Field::new(11, 2)?), 10, 6)?,
    ];
    for mut code in codes {
        // Uncertified codes yield no quantum parameters.
        assert!(css_from_dc(&code).is_err());
        certify_block(&mut code, DEFAULT_BUDGET);
        let q = css_from_dc(&code)?;
        let form = if q.hermitian { "Hermitian" } else { "Euclidean" };
        println!("{:<36} -> {q} ({form})", code.summary_line());
    }
    Ok(())
}
