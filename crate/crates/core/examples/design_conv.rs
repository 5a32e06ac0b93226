//! Memory-1 convolutional lifts, their control matrix and right inverse, and
//! sizing for a rate and free-distance target.
//!
//! `cargo run --example design_conv`

use fourier_codes::block::{CharConstraint, Rate};
use fourier_codes::conv::{lift_conv_lcd, lift_dc_char2, lift_memory1, size_conv};
use fourier_codes::verify::{certify_conv_type, check_conv_identities, ConvType};
use fourier_codes::{Field, FourierContext};
use std::sync::Arc;

fn main() -> fourier_codes::Result<()> {
    let ctx = Arc::new(FourierContext::new(Arc::new(Field::new(2, 3)?), 7)?);
    let f = ctx.field();
    for code in [
        lift_memory1(&ctx, 4)?,
        lift_conv_lcd(&ctx, 4)?,
        lift_dc_char2(&ctx, 2)?,
    ] {
        println!("{}  plan {}  GSB {}", code.params(), code.plan(), code.gsb());
        println!(
            "  identities {}  LCD {}  DC {}",
            check_conv_identities(&code),
            certify_conv_type(&code, ConvType::Lcd),
            certify_conv_type(&code, ConvType::Dc)
        );
    }
    let code = lift_memory1(&ctx, 4)?;
    for (t, g) in code.coefficients().iter().enumerate() {
        print!("G_{t}:\n{}", g.to_text(f));
    }
    let rate: Rate = "15/16".parse()?;
    let s = size_conv(rate, 61, CharConstraint::None, 1000)?;
    let fields: Vec<String> = s.admissible.iter().map(ToString::to_string).collect();
    println!(
        "rate {rate}, free distance >= 61: ({},{},{};1) over {}, admissible {}",
        s.n,
        s.r,
        s.degree,
        s.field,
        fields.join(" ")
    );
    Ok(())
}
