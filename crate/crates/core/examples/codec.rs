//! Encode, corrupt and decode on [10,6,5] over GF(11) and the [15,9,7] LCD
//! code over GF(16).
//!
//! `cargo run --example codec`

use fourier_codes::block::{design_lcd, design_mds};
use fourier_codes::codec::{encode, inject_errors, random_message, Decoder};
use fourier_codes::{Field, FourierContext};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn main() -> fourier_codes::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let codes = [
        design_mds(
            &Arc::new(FourierContext::new(Arc::new(Field::new(11, 1)?), 10)?),
            0,
            1,
            6,
        )?,
        design_lcd(
            &Arc::new(FourierContext::new(Arc::new(Field::new(2, 4)?), 15)?),
            4,
        )?,
    ];
    for code in &codes {
        let f = code.field();
        let dec = Decoder::new(code)?;
        let show = |v: &[fourier_codes::Gf]| {
            v.iter()
                .map(|&x| f.format_element(x))
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("{}  corrects {} errors", code.summary_line(), dec.capability());
        for errors in 0..=dec.capability() + 1 {
            let msg = random_message(f, code.r(), &mut rng);
            let mut word = encode(code, &msg)?;
            let positions = inject_errors(f, &mut word, errors, &mut rng);
            match dec.decode(&word) {
                Ok(d) => println!(
                    "  {errors} errors at {positions:?}: fixed {:?}, message ok {}",
                    d.error_positions,
                    d.message == msg
                ),
                Err(e) => println!("  {errors} errors at {positions:?}: {e}"),
            }
            if errors == 0 {
                println!("  message  {}\n  codeword {}", show(&msg), show(&word));
            }
        }
    }
    Ok(())
}
