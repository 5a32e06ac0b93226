use std::sync::Arc;

use fourier_codes::block::{
    design_dc, design_dc_hermitian, design_lcd, design_mds, design_to_spec, CharConstraint, CodeType,
    DesignRequest,
};
use fourier_codes::codefile::CodeFile;
use fourier_codes::conv::{lift_conv_lcd, lift_dc_char2, lift_memory1, lift_preset, Preset};
use fourier_codes::verify::{certify_block, certify_conv, DEFAULT_BUDGET};
use fourier_codes::{Field, FourierContext};

fn ctx(p: u64, s: u32, n: usize) -> Arc<FourierContext> {
    Arc::new(FourierContext::new(Arc::new(Field::new(p, s).unwrap()), n).unwrap())
}

fn fixtures() -> Vec<CodeFile> {
    let c7 = ctx(2, 3, 7);
    let c15 = ctx(2, 4, 15);
    let c10 = ctx(11, 1, 10);
    let c31 = ctx(2, 5, 31);
    vec![
        design_dc(&c7, 4).unwrap().into(),
        design_lcd(&c7, 2).unwrap().into(),
        design_mds(&c10, 0, 1, 6).unwrap().into(),
        design_lcd(&c15, 4).unwrap().into(),
        design_dc(&c31, 17).unwrap().into(),
        design_dc_hermitian(Arc::new(Field::new(2, 6).unwrap()), 7, 4)
            .unwrap()
            .into(),
        design_dc_hermitian(Arc::new(Field::new(11, 2).unwrap()), 10, 6)
            .unwrap()
            .into(),
        design_to_spec(&DesignRequest::new(
            "7/8".parse().unwrap(),
            25,
            CodeType::Dc,
            CharConstraint::None,
        ))
        .unwrap()
        .into(),
        lift_memory1(&c7, 4).unwrap().into(),
        lift_conv_lcd(&c7, 4).unwrap().into(),
        lift_dc_char2(&c7, 2).unwrap().into(),
        lift_memory1(&c15, 8).unwrap().into(),
        lift_memory1(&c15, 9).unwrap().into(),
        lift_memory1(&c10, 6).unwrap().into(),
        lift_dc_char2(&c31, 8).unwrap().into(),
        lift_preset(&c7, Preset::Mem2).unwrap().into(),
        lift_preset(&c7, Preset::Mem2Lcd).unwrap().into(),
        lift_preset(&c7, Preset::Mem3).unwrap().into(),
        lift_preset(&c7, Preset::Repetition).unwrap().into(),
    ]
}

#[test]
fn every_fixture_roundtrips() {
    for code in fixtures() {
        let text = code.to_text();
        let back = CodeFile::parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(back, code);
        assert_eq!(back.to_text(), text);
    }
}

#[test]
fn certified_flags_roundtrip() {
    for code in fixtures().into_iter().take(4) {
        let CodeFile::Block(mut c) = code else {
            unreachable!()
        };
        certify_block(&mut c, DEFAULT_BUDGET);
        let file = CodeFile::Block(c);
        assert_eq!(CodeFile::parse(&file.to_text()).unwrap(), file);
    }
    let mut conv = lift_conv_lcd(&ctx(2, 3, 7), 4).unwrap();
    certify_conv(&mut conv, 2, DEFAULT_BUDGET);
    let file = CodeFile::Conv(conv);
    let text = file.to_text();
    assert!(text.lines().nth(1).unwrap().contains(" mds lcd FIELD"));
    assert_eq!(CodeFile::parse(&text).unwrap(), file);
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let code: CodeFile = design_dc(&ctx(2, 3, 7), 4).unwrap().into();
    let text = code.to_text().replace("\nBLOCK", "\n\n# block follows\nBLOCK");
    assert_eq!(CodeFile::parse(&text).unwrap(), code);
}

#[test]
fn foreign_rows_are_rejected() {
    let code: CodeFile = design_dc(&ctx(2, 3, 7), 4).unwrap().into();
    let text = code.to_text();
    let lines: Vec<&str> = text.lines().collect();
    // Generator row 0 is all ones; make it a non-Fourier row.
    let mut patched: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
    patched[5] = ["0,0,0"; 7].join(" ");
    assert!(CodeFile::parse(&patched.join("\n")).is_err());
}
