//! Field selection for a length: `s = OrderMod(p, n)`, the field GF(p^s)
//! and a primitive n-th root of unity.
//!
//! `cargo run --example field_info -- 2 7`

use fourier_codes::{order_mod, Field, FourierContext};
use std::sync::Arc;

fn main() -> fourier_codes::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, n) = match args.as_slice() {
        [p, n, ..] => (*p, *n),
        _ => (2, 7),
    };
    let s = order_mod(p, n)?;
    let field = Arc::new(Field::new(p, s)?);
    let ctx = FourierContext::new(field.clone(), n as usize)?;
    println!("OrderMod({p}, {n}) = {s}");
    println!("field {} of order {}", field.header(), field.order());
    println!("omega = {}", field.format_element(ctx.omega()));
    let powers: Vec<String> = (0..n as usize)
        .map(|k| field.format_element(ctx.omega_pow(k)))
        .collect();
    println!("powers of omega: {}", powers.join(" "));
    Ok(())
}
