//! Sizing from a rate and an error target, with the CSS parameters of the
//! certified dual-containing result.
//!
//! `cargo run --release --example design_to_spec -- 7/8 25`

use fourier_codes::block::{
    css_from_dc, design_to_spec, size_block, CharConstraint, CodeType, DesignRequest, Flag, Rate,
};
use fourier_codes::verify::{certify_dc, InnerProduct};

fn main() -> fourier_codes::Result<()> {
    let mut args = std::env::args().skip(1);
    let rate: Rate = args.next().unwrap_or_else(|| "7/8".into()).parse()?;
    let errors: u64 = args.next().and_then(|t| t.parse().ok()).unwrap_or(25);
    for constraint in [
        CharConstraint::None,
        CharConstraint::Characteristic(2),
        CharConstraint::PrimeField,
    ] {
        let req = DesignRequest::new(rate, errors, CodeType::Dc, constraint);
        let sizing = match size_block(&req) {
            Ok(s) => s,
            Err(e) => {
                println!("{constraint:?}: {e}");
                continue;
            }
        };
        let mut code = design_to_spec(&req)?;
        if certify_dc(&code, InnerProduct::Euclidean) {
            code.flags.dc_euclidean = Flag::Certified;
        }
        let css = css_from_dc(&code)
            .map(|q| q.to_string())
            .unwrap_or_else(|e| e.to_string());
        println!(
            "{constraint:?}: n={} r={} over {}  {}  CSS {css}",
            sizing.n,
            sizing.r,
            sizing.field,
            code.summary_line()
        );
    }
    Ok(())
}
