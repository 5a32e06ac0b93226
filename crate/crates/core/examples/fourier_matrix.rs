//! The Fourier matrix F_n over GF(8) and its pairing `e_i · f_j = n δ_ij`.
//!
//! `cargo run --example fourier_matrix`

use fourier_codes::matrix::dot;
use fourier_codes::{Field, FourierContext};
use std::sync::Arc;

fn main() -> fourier_codes::Result<()> {
    let ctx = FourierContext::new(Arc::new(Field::new(2, 3)?), 7)?;
    let f = ctx.field();
    print!("{}", ctx.matrix().to_text(f));
    println!("n as a field element: {}", f.format_element(ctx.n_scalar()));
    for i in 0..ctx.n() {
        let row: Vec<String> = (0..ctx.n())
            .map(|j| f.format_element(dot(f, ctx.row(i), ctx.inv_col(j))))
            .collect();
        println!("e_{i} . f_j = {}", row.join(" "));
    }
    Ok(())
}
