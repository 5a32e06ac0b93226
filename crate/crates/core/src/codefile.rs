//! Text serialization of block and convolutional codes, plus the symbol-file
//! format used by `encode`/`decode`.
//!
//! Layout, one item per line:
//!
//! ```text
//! GF p s [c_0 … c_s]
//! CODE n r d TYPE [certified flags] FIELD p s     (or CONV n r δ μ d TYPE …)
//! OMEGA <element>
//! BLOCK generator | check | Gz^t | Hz^t
//! MATRIX rows cols
//! <rows>
//! FLAGS name=state …
//! ```
//!
//! The matrices are authoritative: on parse the Fourier row indices are
//! recovered by matching generator rows (and check columns) against the
//! Fourier matrix built from `OMEGA`, and every stored block must agree with
//! the reconstruction.

use std::collections::HashMap;
use std::sync::Arc;

use crate::block::{BlockCode, BlockFlags, BlockKind, Flag};
use crate::conv::{ConvCode, ConvFlags, ConvKind, RowPlan};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::fourier::FourierContext;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeFile {
    Block(BlockCode),
    Conv(ConvCode),
}

impl From<BlockCode> for CodeFile {
    fn from(c: BlockCode) -> CodeFile {
        CodeFile::Block(c)
    }
}

impl From<ConvCode> for CodeFile {
    fn from(c: ConvCode) -> CodeFile {
        CodeFile::Conv(c)
    }
}

impl CodeFile {
    pub fn field(&self) -> &Field {
        match self {
            CodeFile::Block(c) => c.field(),
            CodeFile::Conv(c) => c.field(),
        }
    }

    pub fn summary_line(&self) -> String {
        match self {
            CodeFile::Block(c) => c.summary_line(),
            CodeFile::Conv(c) => c.summary_line(),
        }
    }

    pub fn to_text(&self) -> String {
        let f = self.field();
        let ctx = match self {
            CodeFile::Block(c) => c.ctx(),
            CodeFile::Conv(c) => c.ctx(),
        };
        let mut out = format!(
            "{}\n{}\nOMEGA {}\n",
            f.header(),
            self.summary_line(),
            f.format_element(ctx.omega())
        );
        let mut block = |label: String, m: &Matrix| {
            out.push_str(&format!("BLOCK {label}\n"));
            out.push_str(&m.to_text(f));
        };
        let flags: Vec<(&str, Flag)> = match self {
            CodeFile::Block(c) => {
                block("generator".into(), &c.generator());
                block("check".into(), &c.check());
                c.flag_list().to_vec()
            }
            CodeFile::Conv(c) => {
                for (t, g) in c.coefficients().iter().enumerate() {
                    block(format!("Gz^{t}"), g);
                }
                for (t, h) in c.control_coefficients().iter().enumerate() {
                    block(format!("Hz^{t}"), h);
                }
                c.flag_list().to_vec()
            }
        };
        let flags: Vec<String> = flags.iter().map(|(n, s)| format!("{n}={}", s.as_str())).collect();
        out.push_str(&format!("FLAGS {}\n", flags.join(" ")));
        out
    }

    pub fn parse(text: &str) -> Result<CodeFile> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty code file"))?;
        let field = Arc::new(Field::from_header(header)?);

        let (pl, params) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing parameter line"))?;
        let params = Params::parse(pl, params, &field)?;

        let (ol, omega_line) = lines.next().ok_or_else(|| parse_err(pl, "missing OMEGA line"))?;
        let omega = match omega_line.split_once(' ') {
            Some(("OMEGA", v)) => field
                .parse_element(v.trim())
                .map_err(|e| parse_err(ol, &e.to_string()))?,
            _ => return Err(parse_err(ol, "expected `OMEGA <element>`")),
        };
        let ctx = Arc::new(FourierContext::with_root(field.clone(), params.n, omega)?);

        let mut blocks: Vec<(String, Matrix)> = Vec::new();
        let mut flag_line = None;
        let mut lines = lines.peekable();
        while let Some(&(ln, line)) = lines.peek() {
            if let Some(label) = line.strip_prefix("BLOCK ") {
                lines.next();
                let m = Matrix::parse_lines(&field, &mut lines)?;
                blocks.push((label.trim().to_string(), m));
            } else if let Some(rest) = line.strip_prefix("FLAGS") {
                lines.next();
                flag_line = Some((ln, rest.to_string()));
                if let Some((extra, _)) = lines.next() {
                    return Err(parse_err(extra, "content after FLAGS line"));
                }
            } else {
                return Err(parse_err(ln, &format!("unexpected line `{line}`")));
            }
        }
        let (fl, flag_text) = flag_line.ok_or_else(|| parse_err(ol, "missing FLAGS line"))?;
        let flags = parse_flags(fl, &flag_text)?;

        let code = if params.conv {
            params.build_conv(ctx, &blocks)?
        } else {
            params.build_block(ctx, &blocks)?
        };
        let mut code = code;
        for (name, state) in flags {
            match &mut code {
                CodeFile::Block(c) => c.set_flag(&name, state),
                CodeFile::Conv(c) => c.set_flag(&name, state),
            }
            .map_err(|e| parse_err(fl, &e.to_string()))?;
        }
        let certified_claim = params.certified;
        let certified_now: Vec<String> = match &code {
            CodeFile::Block(c) => certified_names(&c.flag_list()),
            CodeFile::Conv(c) => certified_names(&c.flag_list()),
        };
        if certified_claim != certified_now {
            return Err(parse_err(pl, "parameter line disagrees with FLAGS"));
        }
        Ok(code)
    }
}

fn certified_names(list: &[(&'static str, Flag)]) -> Vec<String> {
    list.iter()
        .filter(|(_, s)| *s == Flag::Certified)
        .map(|(n, _)| n.to_string())
        .collect()
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}

fn parse_flags(line: usize, text: &str) -> Result<Vec<(String, Flag)>> {
    text.split_whitespace()
        .map(|tok| {
            let (name, state) = tok
                .split_once('=')
                .ok_or_else(|| parse_err(line, &format!("expected name=state, found `{tok}`")))?;
            let state: Flag = state
                .parse()
                .map_err(|e: Error| parse_err(line, &e.to_string()))?;
            Ok((name.to_string(), state))
        })
        .collect()
}

/// Parsed parameter line.
struct Params {
    line: usize,
    conv: bool,
    n: usize,
    r: usize,
    degree: usize,
    memory: usize,
    distance: Option<usize>,
    kind: String,
    certified: Vec<String>,
}

impl Params {
    fn parse(line: usize, text: &str, field: &Field) -> Result<Params> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let bad = |msg: &str| parse_err(line, msg);
        let conv = match toks.first() {
            Some(&"CODE") => false,
            Some(&"CONV") => true,
            _ => return Err(bad("expected CODE or CONV parameter line")),
        };
        let numeric = if conv { 5 } else { 3 };
        if toks.len() < numeric + 5 {
            return Err(bad("parameter line too short"));
        }
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| bad(&format!("expected a number, found `{t}`")))
        };
        let n = num(toks[1])?;
        let r = num(toks[2])?;
        let (degree, memory, distance) = if conv {
            let d = match toks[5] {
                "?" => None,
                t => Some(num(t)?),
            };
            (num(toks[3])?, num(toks[4])?, d)
        } else {
            (0, 0, Some(num(toks[3])?))
        };
        let kind = toks[numeric + 1].to_string();
        let tail = &toks[numeric + 2..];
        let fpos = tail
            .iter()
            .position(|&t| t == "FIELD")
            .ok_or_else(|| bad("missing FIELD p s"))?;
        if tail.len() != fpos + 3 {
            return Err(bad("FIELD must be followed by exactly p and s"));
        }
        let (p, s) = (num(tail[fpos + 1])?, num(tail[fpos + 2])?);
        if p as u64 != field.characteristic() || s as u32 != field.degree() {
            return Err(bad("FIELD disagrees with the GF header"));
        }
        Ok(Params {
            line,
            conv,
            n,
            r,
            degree,
            memory,
            distance,
            kind,
            certified: tail[..fpos].iter().map(|t| t.to_string()).collect(),
        })
    }

    fn build_block(&self, ctx: Arc<FourierContext>, blocks: &[(String, Matrix)]) -> Result<CodeFile> {
        let kind: BlockKind = self
            .kind
            .parse()
            .map_err(|e: Error| parse_err(self.line, &e.to_string()))?;
        let gen = find_block(blocks, "generator", self.line)?;
        let check = find_block(blocks, "check", self.line)?;
        if blocks.len() != 2 {
            return Err(parse_err(
                self.line,
                "block code files carry exactly generator and check",
            ));
        }
        let rows = RowIndex::new(&ctx);
        let selection = gen
            .row_iter()
            .map(|row| {
                rows.lookup(row)
                    .ok_or_else(|| parse_err(self.line, "generator row is not a Fourier row"))
            })
            .collect::<Result<Vec<_>>>()?;
        let cols = ColIndex::new(&ctx);
        let check_indices = (0..check.cols())
            .map(|j| {
                cols.lookup(&check.col(j))
                    .ok_or_else(|| parse_err(self.line, "check column is not a Fourier column"))
            })
            .collect::<Result<Vec<_>>>()?;
        let code = BlockCode::from_indices(ctx, kind, selection, check_indices, BlockFlags::default())?;
        if code.r() != self.r || Some(code.design_distance()) != self.distance {
            return Err(parse_err(self.line, "parameter line disagrees with the matrices"));
        }
        Ok(CodeFile::Block(code))
    }

    fn build_conv(&self, ctx: Arc<FourierContext>, blocks: &[(String, Matrix)]) -> Result<CodeFile> {
        let kind: ConvKind = self
            .kind
            .parse()
            .map_err(|e: Error| parse_err(self.line, &e.to_string()))?;
        let gs: Vec<&Matrix> = (0..=self.memory)
            .map(|t| find_block(blocks, &format!("Gz^{t}"), self.line))
            .collect::<Result<_>>()?;
        let index = RowIndex::new(&ctx);
        let plan_rows = (0..self.r)
            .map(|k| {
                gs.iter()
                    .map(|g| {
                        if k >= g.rows() {
                            return Err(parse_err(self.line, "Gz^t has too few rows"));
                        }
                        let row = g.row(k);
                        if row.iter().all(|x| x.is_zero()) {
                            return Ok(None);
                        }
                        index
                            .lookup(row)
                            .map(Some)
                            .ok_or_else(|| parse_err(self.line, "Gz^t row is not a Fourier row"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let plan = RowPlan::new(plan_rows)?;
        let code = ConvCode::from_plan(ctx, kind, plan, self.distance, ConvFlags::default())?;
        if code.degree() != self.degree || code.memory() != self.memory {
            return Err(parse_err(self.line, "parameter line disagrees with the matrices"));
        }
        let expected: Vec<(String, Matrix)> = code
            .coefficients()
            .into_iter()
            .enumerate()
            .map(|(t, g)| (format!("Gz^{t}"), g))
            .chain(
                code.control_coefficients()
                    .into_iter()
                    .enumerate()
                    .map(|(t, h)| (format!("Hz^{t}"), h)),
            )
            .collect();
        for (label, m) in blocks {
            match expected.iter().find(|(l, _)| l == label) {
                Some((_, want)) if want == m => {}
                Some(_) => {
                    return Err(parse_err(
                        self.line,
                        &format!("block {label} disagrees with the code"),
                    ))
                }
                None => return Err(parse_err(self.line, &format!("unexpected block {label}"))),
            }
        }
        Ok(CodeFile::Conv(code))
    }
}

fn find_block<'a>(blocks: &'a [(String, Matrix)], label: &str, line: usize) -> Result<&'a Matrix> {
    blocks
        .iter()
        .find(|(l, _)| l == label)
        .map(|(_, m)| m)
        .ok_or_else(|| parse_err(line, &format!("missing block {label}")))
}

/// Fourier row `e_i` → `i`.
struct RowIndex(HashMap<Vec<u32>, usize>);

impl RowIndex {
    fn new(ctx: &FourierContext) -> RowIndex {
        RowIndex((0..ctx.n()).map(|i| (raw(ctx.row(i)), i)).collect())
    }

    fn lookup(&self, row: &[Gf]) -> Option<usize> {
        self.0.get(&raw(row)).copied()
    }
}

/// Fourier column `f_j` → `j`.
struct ColIndex(HashMap<Vec<u32>, usize>);

impl ColIndex {
    fn new(ctx: &FourierContext) -> ColIndex {
        ColIndex((0..ctx.n()).map(|j| (raw(ctx.inv_col(j)), j)).collect())
    }

    fn lookup(&self, col: &[Gf]) -> Option<usize> {
        self.0.get(&raw(col)).copied()
    }
}

fn raw(v: &[Gf]) -> Vec<u32> {
    v.iter().map(|x| x.raw()).collect()
}

/// One vector per line, elements in matrix-entry encoding.
pub fn format_vectors(f: &Field, vectors: &[Vec<Gf>]) -> String {
    vectors
        .iter()
        .map(|v| {
            let mut line = v
                .iter()
                .map(|&x| f.format_element(x))
                .collect::<Vec<_>>()
                .join(" ");
            line.push('\n');
            line
        })
        .collect()
}

pub fn parse_vectors(f: &Field, text: &str) -> Result<Vec<Vec<Gf>>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            l.split_whitespace()
                .map(|t| f.parse_element(t).map_err(|e| parse_err(i + 1, &e.to_string())))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::{design_dc, design_dc_hermitian, design_lcd, design_mds};
    use crate::conv::{lift_conv_lcd, lift_dc_char2, lift_memory1, lift_preset, Preset};

    fn ctx(p: u64, s: u32, n: usize) -> Arc<FourierContext> {
        Arc::new(FourierContext::new(Arc::new(Field::new(p, s).unwrap()), n).unwrap())
    }

    fn roundtrip(code: CodeFile) {
        let text = code.to_text();
        let back = CodeFile::parse(&text).unwrap();
        assert_eq!(back, code, "{text}");
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn block_codes_roundtrip() {
        roundtrip(design_dc(&ctx(2, 3, 7), 4).unwrap().into());
        roundtrip(design_lcd(&ctx(2, 3, 7), 2).unwrap().into());
        roundtrip(design_mds(&ctx(11, 1, 10), 0, 1, 6).unwrap().into());
        roundtrip(design_mds(&ctx(11, 1, 10), 3, 3, 5).unwrap().into());
        let mut herm = design_dc_hermitian(Arc::new(Field::new(2, 6).unwrap()), 7, 4).unwrap();
        herm.flags.dc_hermitian = Flag::Certified;
        herm.flags.mds = Flag::Certified;
        roundtrip(herm.into());
    }

    #[test]
    fn conv_codes_roundtrip() {
        let c7 = ctx(2, 3, 7);
        roundtrip(lift_memory1(&c7, 4).unwrap().into());
        roundtrip(lift_conv_lcd(&c7, 4).unwrap().into());
        roundtrip(lift_dc_char2(&c7, 2).unwrap().into());
        for p in [Preset::Mem2, Preset::Mem2Lcd, Preset::Mem3, Preset::Repetition] {
            roundtrip(lift_preset(&c7, p).unwrap().into());
        }
        roundtrip(lift_memory1(&ctx(11, 1, 10), 6).unwrap().into());
    }

    #[test]
    fn layout_is_stable() {
        let code: CodeFile = design_dc(&ctx(2, 3, 7), 4).unwrap().into();
        let text = code.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "GF 2 3 1 1 0 1");
        assert_eq!(lines[1], "CODE 7 4 4 DC FIELD 2 3");
        assert!(lines[2].starts_with("OMEGA "));
        assert_eq!(lines[3], "BLOCK generator");
        assert_eq!(lines[4], "MATRIX 4 7");
        assert_eq!(lines[9], "BLOCK check");
        assert_eq!(lines[10], "MATRIX 7 3");
        assert_eq!(
            *lines.last().unwrap(),
            "FLAGS mds=claimed dc=claimed hdc=false lcd=false"
        );
    }

    #[test]
    fn tampering_is_rejected() {
        let code: CodeFile = design_dc(&ctx(2, 3, 7), 4).unwrap().into();
        let text = code.to_text();
        // A certified name on the parameter line must match FLAGS.
        let forged = text.replace("CODE 7 4 4 DC FIELD", "CODE 7 4 4 DC dc FIELD");
        assert!(CodeFile::parse(&forged).is_err());
        let wrong_d = text.replace("CODE 7 4 4", "CODE 7 4 5");
        assert!(CodeFile::parse(&wrong_d).is_err());
        let mut lines: Vec<String> = text.lines().map(String::from).collect();
        lines[5] = lines[6].clone();
        assert!(CodeFile::parse(&lines.join("\n")).is_err());
        assert!(CodeFile::parse("").is_err());
        assert!(CodeFile::parse(&text.replace("FLAGS", "FLAGZ")).is_err());
    }

    #[test]
    fn conv_control_blocks_are_checked() {
        let code: CodeFile = lift_memory1(&ctx(2, 3, 7), 4).unwrap().into();
        let text = code.to_text();
        let pos = text.find("BLOCK Hz^1").unwrap();
        let mut lines: Vec<String> = text[pos..].lines().map(String::from).collect();
        lines[2] = lines[2].replacen('0', "1", 1);
        let forged = format!("{}{}", &text[..pos], lines.join("\n"));
        assert!(CodeFile::parse(&forged).is_err());
    }

    #[test]
    fn vectors_roundtrip() {
        let f = Field::new(2, 3).unwrap();
        let v: Vec<Vec<Gf>> = vec![
            f.elements().take(7).collect(),
            f.elements().skip(1).take(7).collect(),
        ];
        let text = format_vectors(&f, &v);
        assert_eq!(parse_vectors(&f, &text).unwrap(), v);
        assert!(parse_vectors(&f, "0,0,9").is_err());
    }
}
