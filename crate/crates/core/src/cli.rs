//! Command-line front end. [`run`] is pure apart from file reads and the
//! optional `--out` writes, so tests drive it directly.
//!
//! Exit codes: 0 success, 1 failed verification or unsatisfiable request,
//! 2 usage error (bad flags, unreadable or malformed input files).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::block::{
    choose_field, css_from_dc, design_to_spec, CharConstraint, CodeType, DesignRequest, FieldChoice, Flag,
    LengthPolicy, QeccParams, Rate,
};
use crate::codec::{self, Decoder};
use crate::codefile::{format_vectors, parse_vectors, CodeFile};
use crate::conv::{lift_conv_lcd, lift_dc_char2, lift_memory1, lift_preset, size_conv, ConvCode, Preset};
use crate::error::Error;
use crate::field::{order_mod, Field};
use crate::fourier::FourierContext;
use crate::series::{self, Family, SeriesSpec, SeriesType};
use crate::verify::{self, certify_block, certify_conv, Certainty, DistanceReport, FlagCheck, InnerProduct};

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "fcodes",
    version,
    about = "Design, verify, encode and decode Fourier-matrix codes over finite fields",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplicative order of p mod n and the field GF(p^s) holding an n-th root of unity.
    FieldInfo(FieldInfoArgs),
    /// Build a code from design parameters.
    #[command(subcommand)]
    Design(DesignCommand),
    /// Certify the flags claimed by a code file.
    Verify(VerifyArgs),
    /// Encode each message line of a symbol file.
    Encode(EncodeArgs),
    /// Decode each received line of a symbol file.
    Decode(DecodeArgs),
    /// Enumerate an infinite family of code parameters.
    Series(SeriesArgs),
}

#[derive(Args, Debug)]
struct FieldInfoArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    n: u64,
}

#[derive(Subcommand, Debug)]
enum DesignCommand {
    /// Block code from a rate and an error-correction target.
    Block(BlockArgs),
    /// Memory-1 lift or named preset convolutional code of given length.
    Conv(ConvArgs),
    /// Length and fields for a convolutional rate and free-distance target.
    ConvSize(ConvSizeArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BlockType {
    Mds,
    Dc,
    Lcd,
    Hdc,
}

#[derive(Args, Debug)]
struct BlockArgs {
    /// Rational rate `p/q`.
    #[arg(long, value_parser = parse_rate)]
    rate: Rate,
    #[arg(long)]
    errors: u64,
    #[arg(long = "type", value_enum, default_value = "dc")]
    code_type: BlockType,
    /// Required field characteristic; characteristic 2 uses lengths 2^i - 1.
    #[arg(long = "char", conflicts_with = "prime_field")]
    characteristic: Option<u64>,
    /// Restrict to prime fields GF(p).
    #[arg(long)]
    prime_field: bool,
    /// Under characteristic 2, search every odd length instead of 2^i - 1.
    #[arg(long)]
    any_length: bool,
    /// Run the rank-based dual-containment/LCD certificates before output.
    #[arg(long)]
    certify: bool,
    /// Write the code file here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConvType {
    Mds,
    Lcd,
    Dc,
}

#[derive(Args, Debug)]
struct ConvArgs {
    #[arg(long, required_unless_present = "preset")]
    n: Option<usize>,
    #[arg(long, required_unless_present = "preset")]
    r: Option<usize>,
    #[arg(long = "type", value_enum, default_value = "mds")]
    code_type: ConvType,
    /// Named higher-memory preset (n7-mem2, n7-mem2-lcd, n7-mem3, n7-repetition).
    #[arg(long, value_parser = parse_preset, conflicts_with_all = ["n", "r"])]
    preset: Option<Preset>,
    /// Field characteristic; with `--s` fixes the field, alone constrains it.
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, requires = "p")]
    s: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConvSizeArgs {
    #[arg(long, value_parser = parse_rate)]
    rate: Rate,
    /// Minimum free distance.
    #[arg(long)]
    free_distance: u64,
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Largest prime considered when listing admissible fields.
    #[arg(long, default_value_t = 1000)]
    prime_bound: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IpArg {
    Euclidean,
    Hermitian,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    code: PathBuf,
    /// Degree bound for the bounded free-distance search fallback.
    #[arg(long, default_value_t = 2)]
    free_deg: usize,
    #[arg(long, value_enum, default_value = "euclidean")]
    ip: IpArg,
    #[arg(long, default_value_t = verify::DEFAULT_BUDGET as u64)]
    budget: u64,
    /// Write the code file with upgraded flags here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EncodeArgs {
    code: PathBuf,
    message: PathBuf,
}

#[derive(Args, Debug)]
struct DecodeArgs {
    code: PathBuf,
    received: PathBuf,
    /// Corrupt each received line with this many random symbol errors first.
    #[arg(long, default_value_t = 0)]
    inject: usize,
    /// Seed for `--inject`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, value_parser = parse_rate)]
    rate: Rate,
    #[arg(long = "type", value_parser = parse_series_type, default_value = "dc")]
    code_type: SeriesType,
    #[arg(long, default_value_t = 8)]
    count: usize,
    /// First exponent, prime or length, depending on the family.
    #[arg(long)]
    start: Option<u64>,
    /// Fixed characteristic for the char-p family.
    #[arg(long)]
    p: Option<u64>,
    /// Append the rate and relative-distance gaps.
    #[arg(long)]
    limits: bool,
}

fn parse_rate(s: &str) -> Result<Rate, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_series_type(s: &str) -> Result<SeriesType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1.
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Failed(e.to_string())
    }
}

/// Text written so far and whether the command succeeded.
struct Report {
    out: String,
    ok: bool,
}

impl Report {
    fn new() -> Report {
        Report {
            out: String::new(),
            ok: true,
        }
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut report = Report::new();
    let result = match cli.command {
        Command::FieldInfo(a) => field_info(&a, &mut report),
        Command::Design(DesignCommand::Block(a)) => design_block(&a, &mut report),
        Command::Design(DesignCommand::Conv(a)) => design_conv(&a, &mut report),
        Command::Design(DesignCommand::ConvSize(a)) => design_conv_size(&a, &mut report),
        Command::Verify(a) => verify_file(&a, &mut report),
        Command::Encode(a) => encode_file(&a, &mut report),
        Command::Decode(a) => decode_file(&a, &mut report),
        Command::Series(a) => series_cmd(&a, &mut report),
    };
    match result {
        Ok(()) => Outcome {
            code: if report.ok { 0 } else { 1 },
            stdout: report.out,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: report.out,
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Failed(msg)) => Outcome {
            code: 1,
            stdout: report.out,
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_code(path: &Path) -> Result<CodeFile, Failure> {
    CodeFile::parse(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_vectors(f: &Field, path: &Path) -> Result<Vec<Vec<crate::field::Gf>>, Failure> {
    parse_vectors(f, &read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn field_info(a: &FieldInfoArgs, report: &mut Report) -> Result<(), Failure> {
    let s = order_mod(a.p, a.n)?;
    report.line(format!("ORDERMOD {s}"));
    report.line(format!("FIELD {} {s}", a.p));
    let field = Arc::new(Field::new(a.p, s)?);
    report.line(field.header());
    report.line(format!("ORDER {}", field.order()));
    report.line(format!("GENERATOR {}", field.format_element(field.generator())));
    let ctx = FourierContext::new(field.clone(), a.n as usize)?;
    report.line(format!("OMEGA {}", field.format_element(ctx.omega())));
    if let Some(l) = field.conjugation_exponent() {
        let aligned = (l % a.n) == 1;
        report.line(format!("HERMITIAN l={l} aligned={aligned}"));
    }
    Ok(())
}

fn char_constraint(characteristic: Option<u64>, prime_field: bool) -> CharConstraint {
    match (characteristic, prime_field) {
        (Some(p), _) => CharConstraint::Characteristic(p),
        (None, true) => CharConstraint::PrimeField,
        (None, false) => CharConstraint::None,
    }
}

fn design_block(a: &BlockArgs, report: &mut Report) -> Result<(), Failure> {
    let code_type = match a.code_type {
        BlockType::Mds => CodeType::Plain,
        BlockType::Dc => CodeType::Dc,
        BlockType::Lcd => CodeType::Lcd,
        BlockType::Hdc => CodeType::HermitianDc,
    };
    let mut req = DesignRequest::new(
        a.rate,
        a.errors,
        code_type,
        char_constraint(a.characteristic, a.prime_field),
    );
    if a.any_length {
        req.length_policy = LengthPolicy::Smallest;
    }
    let mut code = design_to_spec(&req)?;
    if a.certify {
        let hermitian = code_type == CodeType::HermitianDc;
        let (slot, holds) = match code_type {
            CodeType::Dc | CodeType::HermitianDc => {
                let ip = if hermitian {
                    InnerProduct::Hermitian
                } else {
                    InnerProduct::Euclidean
                };
                (
                    if hermitian { "hdc" } else { "dc" },
                    verify::certify_dc(&code, ip),
                )
            }
            CodeType::Lcd => ("lcd", verify::certify_lcd(&code)),
            CodeType::Plain => ("mds", verify::structural_distance(&code).is_exact()),
        };
        code.set_flag(slot, if holds { Flag::Certified } else { Flag::False })?;
        report.ok &= holds;
    }
    report.line(code.summary_line());
    if matches!(code_type, CodeType::Dc | CodeType::HermitianDc) {
        let (q, status) = match css_from_dc(&code) {
            Ok(q) => (Some(q), "certified"),
            Err(_) => (
                QeccParams::from_dimensions(code.n(), code.r(), code_type == CodeType::HermitianDc),
                "claimed",
            ),
        };
        if let Some(q) = q {
            report.line(format!("QECC {} {} {} {status}", q.n, q.k, q.d));
        }
    }
    if let Some(path) = &a.out {
        write(path, &CodeFile::Block(code).to_text())?;
    }
    Ok(())
}

fn conv_field(n: usize, p: Option<u64>, s: Option<u32>) -> Result<Arc<Field>, Failure> {
    let choice = match (p, s) {
        (Some(p), Some(s)) => FieldChoice { p, s },
        (p, _) => {
            let constraint = p.map_or(CharConstraint::None, CharConstraint::Characteristic);
            choose_field(n as u64, constraint, false)
                .ok_or_else(|| Failure::Failed(format!("no supported field holds an element of order {n}")))?
        }
    };
    Ok(Arc::new(choice.build()?))
}

fn design_conv(a: &ConvArgs, report: &mut Report) -> Result<(), Failure> {
    let code: ConvCode = if let Some(preset) = a.preset {
        let ctx = Arc::new(FourierContext::new(
            conv_field(preset.length(), a.p, a.s)?,
            preset.length(),
        )?);
        lift_preset(&ctx, preset)?
    } else {
        let (n, r) = (a.n.expect("required by clap"), a.r.expect("required by clap"));
        let ctx = Arc::new(FourierContext::new(conv_field(n, a.p, a.s)?, n)?);
        match a.code_type {
            ConvType::Mds => lift_memory1(&ctx, r)?,
            ConvType::Lcd => lift_conv_lcd(&ctx, r)?,
            ConvType::Dc => {
                if r % 2 == 0 {
                    return Err(Failure::Failed(format!(
                        "dual-containing lift needs odd r, got {r}"
                    )));
                }
                lift_dc_char2(&ctx, (r - 1) / 2)?
            }
        }
    };
    report.line(code.summary_line());
    report.line(format!("PARAMS {}", code.params()));
    report.line(format!("GSB {}", code.gsb()));
    report.line(format!("PLAN {}", code.plan()));
    if let Some(path) = &a.out {
        write(path, &CodeFile::Conv(code).to_text())?;
    }
    Ok(())
}

fn design_conv_size(a: &ConvSizeArgs, report: &mut Report) -> Result<(), Failure> {
    let constraint = char_constraint(a.characteristic, false);
    let s = size_conv(a.rate, a.free_distance, constraint, a.prime_bound)?;
    report.line(format!(
        "SIZE {} {} {} {} FIELD {} {}",
        s.n, s.r, s.degree, s.free_distance, s.field.p, s.field.s
    ));
    let list: Vec<String> = s.admissible.iter().map(ToString::to_string).collect();
    report.line(format!("ADMISSIBLE {}", list.join(" ")));
    Ok(())
}

fn distance_line(d: &Result<DistanceReport, Error>) -> String {
    match d {
        Ok(rep) => rep.to_string(),
        Err(e) => format!("DIST ? ({e})"),
    }
}

/// A claimed flag passes only when its oracle ran and confirmed it.
fn all_claims_certified(checks: &[FlagCheck]) -> bool {
    checks.iter().all(|c| !c.claimed || c.holds == Some(true))
}

fn holds(checks: &[FlagCheck], name: &str) -> String {
    match checks.iter().find(|c| c.name == name).and_then(|c| c.holds) {
        Some(b) => b.to_string(),
        None => "unknown".into(),
    }
}

fn verify_file(a: &VerifyArgs, report: &mut Report) -> Result<(), Failure> {
    let budget = u128::from(a.budget);
    let code = match load_code(&a.code)? {
        CodeFile::Block(mut code) => {
            let verdict = certify_block(&mut code, budget);
            report.line(distance_line(&verdict.distance));
            let dc_name = match a.ip {
                IpArg::Euclidean => "dc",
                IpArg::Hermitian => "hdc",
            };
            report.line(format!("DC {}", holds(&verdict.checks, dc_name)));
            report.line(format!("LCD {}", holds(&verdict.checks, "lcd")));
            report.line(format!("MDS {}", holds(&verdict.checks, "mds")));
            report.ok = all_claims_certified(&verdict.checks);
            CodeFile::Block(code)
        }
        CodeFile::Conv(mut code) => {
            let verdict = certify_conv(&mut code, a.free_deg, budget);
            report.line(distance_line(&verdict.distance));
            report.line(format!("DC {}", holds(&verdict.checks, "dc")));
            report.line(format!("LCD {}", holds(&verdict.checks, "lcd")));
            report.line(format!("MDS {}", holds(&verdict.checks, "mds")));
            report.line(format!("IDENTITIES {}", verdict.identities));
            if let Ok(d) = &verdict.distance {
                if let (Some(design), Certainty::Exact) = (code.design_free_distance(), d.certainty) {
                    report.line(format!(
                        "DESIGN {design} {}",
                        if d.value == design { "met" } else { "missed" }
                    ));
                }
            }
            report.ok = verdict.identities && all_claims_certified(&verdict.checks);
            CodeFile::Conv(code)
        }
    };
    report.line(code.summary_line());
    if let Some(path) = &a.out {
        write(path, &code.to_text())?;
    }
    Ok(())
}

fn encode_file(a: &EncodeArgs, report: &mut Report) -> Result<(), Failure> {
    let code = load_code(&a.code)?;
    let f = code.field();
    let messages = load_vectors(f, &a.message)?;
    let words = match &code {
        CodeFile::Block(c) => messages
            .iter()
            .map(|m| codec::encode(c, m))
            .collect::<Result<Vec<_>, Error>>()
            .map_err(|e| Failure::Usage(e.to_string()))?,
        CodeFile::Conv(c) => c.encode(&messages).map_err(|e| Failure::Usage(e.to_string()))?,
    };
    report.out.push_str(&format_vectors(f, &words));
    Ok(())
}

fn decode_file(a: &DecodeArgs, report: &mut Report) -> Result<(), Failure> {
    let code = match load_code(&a.code)? {
        CodeFile::Block(c) => c,
        CodeFile::Conv(_) => return Err(Failure::Usage("decoding supports block codes only".into())),
    };
    let f = code.field();
    let decoder = Decoder::new(&code)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    for mut word in load_vectors(f, &a.received)? {
        if word.len() != code.n() {
            return Err(Failure::Usage(format!(
                "received word has {} symbols, expected {}",
                word.len(),
                code.n()
            )));
        }
        if a.inject > 0 {
            codec::inject_errors(f, &mut word, a.inject, &mut rng);
        }
        match decoder.decode(&word) {
            Ok(d) => report.out.push_str(&format_vectors(f, &[d.message])),
            Err(e) => {
                report.ok = false;
                let _ = writeln!(report.out, "FAIL {e}");
            }
        }
    }
    Ok(())
}

fn series_cmd(a: &SeriesArgs, report: &mut Report) -> Result<(), Failure> {
    let family = match (a.family, a.p) {
        (Family::CharP(_), Some(p)) => Family::CharP(Some(p)),
        (_, Some(_)) => return Err(Failure::Usage("--p applies to the char-p family only".into())),
        (fam, None) => fam,
    };
    let mut spec = SeriesSpec::new(family, a.rate, a.code_type);
    spec.start = a.start;
    let elements = series::enumerate(&spec, a.count)?;
    for e in &elements {
        report.line(e.to_string());
    }
    if a.limits {
        for row in series::limit_report(a.rate, &elements) {
            report.line(format!("LIMIT {row}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &str) -> Outcome {
        run(std::iter::once("fcodes").chain(args.split_whitespace()))
    }

    #[test]
    fn empty_argv_is_usage() {
        let out = run(["fcodes"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("Usage"));
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(cli("--help").code, 0);
    }

    #[test]
    fn field_info_reports_order() {
        let out = cli("field-info --p 2 --n 7");
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("ORDERMOD 3\nFIELD 2 3\nGF 2 3"));
        assert_eq!(cli("field-info --p 2 --n 6").code, 1);
    }

    #[test]
    fn design_block_parameter_line() {
        let out = cli("design block --rate 7/8 --errors 25 --type dc");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout.lines().next(), Some("CODE 400 350 51 DC FIELD 401 1"));
        assert!(out.stdout.contains("QECC 400 300 51 claimed"));
    }

    #[test]
    fn bad_flags_are_usage_errors() {
        assert_eq!(cli("design block --rate 0.875 --errors 25").code, 2);
        assert_eq!(cli("series --family nope --rate 1/2").code, 2);
        assert_eq!(cli("verify /nonexistent/file").code, 2);
    }

    #[test]
    fn unsatisfiable_request_fails() {
        assert_eq!(cli("design block --rate 1/3 --errors 2 --type dc").code, 1);
    }

    #[test]
    fn series_lines() {
        let out = cli("series --family char2-mersenne --rate 1/2 --type dc --count 3");
        assert_eq!(out.stdout, "3 2 2 FIELD 2 2\n7 4 4 FIELD 2 3\n15 8 8 FIELD 2 4\n");
    }

    #[test]
    fn conv_sizing() {
        let out = cli("design conv-size --rate 15/16 --free-distance 61");
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("SIZE 480 450 30 61 FIELD"));
        assert!(out.stdout.contains("GF(7^4)"));
    }
}
