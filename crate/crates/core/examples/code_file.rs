//! Writing and reading the text code-file format.
//!
//! `cargo run --example code_file`

use fourier_codes::block::design_dc;
use fourier_codes::codefile::CodeFile;
use fourier_codes::conv::lift_conv_lcd;
use fourier_codes::{Field, FourierContext};
use std::sync::Arc;

fn main() -> fourier_codes::Result<()> {
    let ctx = Arc::new(FourierContext::new(Arc::new(Field::new(2, 3)?), 7)?);
    for file in [
        CodeFile::Block(design_dc(&ctx, 4)?),
        CodeFile::Conv(lift_conv_lcd(&ctx, 4)?),
    ] {
        let text = file.to_text();
        print!("{text}");
        assert_eq!(CodeFile::parse(&text)?, file);
        println!("-- parsed back identically\n");
    }
    Ok(())
}
