//! Block codes generated by rows of a Fourier matrix: MDS, dual-containing
//! (Euclidean and Hermitian), LCD, plus sizing from a rate/error request and
//! CSS parameter derivation.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{gcd, is_prime, order_mod, prime_power, Field};
use crate::fourier::FourierContext;
use crate::matrix::Matrix;

/// Tri-state property flag. Only verifier oracles promote `Claimed` to
/// `Certified`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Flag {
    #[default]
    False,
    Claimed,
    Certified,
}

impl Flag {
    pub fn is_set(self) -> bool {
        self != Flag::False
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flag::False => "false",
            Flag::Claimed => "claimed",
            Flag::Certified => "certified",
        }
    }
}

impl FromStr for Flag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Flag> {
        match s {
            "false" => Ok(Flag::False),
            "claimed" => Ok(Flag::Claimed),
            "certified" => Ok(Flag::Certified),
            other => Err(Error::Invalid(format!("unknown flag state `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BlockFlags {
    pub mds: Flag,
    pub dc_euclidean: Flag,
    pub dc_hermitian: Flag,
    pub lcd: Flag,
}

/// Which construction produced a block code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Mds,
    Dc,
    HermitianDc,
    Lcd,
}

impl BlockKind {
    pub fn label(self) -> &'static str {
        match self {
            BlockKind::Mds => "MDS",
            BlockKind::Dc => "DC",
            BlockKind::HermitianDc => "HDC",
            BlockKind::Lcd => "LCD",
        }
    }
}

impl FromStr for BlockKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<BlockKind> {
        match s {
            "MDS" => Ok(BlockKind::Mds),
            "DC" => Ok(BlockKind::Dc),
            "HDC" => Ok(BlockKind::HermitianDc),
            "LCD" => Ok(BlockKind::Lcd),
            other => Err(Error::Invalid(format!("unknown code type `{other}`"))),
        }
    }
}

/// `[n, r]` code whose generator rows are `e_i` for `i` in `selection` and
/// whose check matrix has columns `f_j` for `j` in `check_indices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCode {
    ctx: Arc<FourierContext>,
    kind: BlockKind,
    selection: Vec<usize>,
    check_indices: Vec<usize>,
    /// `(start, step)` when the selection is an arithmetic progression.
    progression: Option<(usize, usize)>,
    pub flags: BlockFlags,
}

impl BlockCode {
    /// Assembles a code from explicit row and check indices. The two index
    /// sets must partition `0..n`.
    pub fn from_indices(
        ctx: Arc<FourierContext>,
        kind: BlockKind,
        selection: Vec<usize>,
        check_indices: Vec<usize>,
        flags: BlockFlags,
    ) -> Result<BlockCode> {
        let n = ctx.n();
        let mut seen = vec![false; n];
        for &i in selection.iter().chain(&check_indices) {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!(
                    "row and check indices must partition 0..{n}"
                )));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Invalid(format!(
                "row and check indices must partition 0..{n}"
            )));
        }
        let progression = detect_progression(n, &selection);
        Ok(BlockCode {
            ctx,
            kind,
            selection,
            check_indices,
            progression,
            flags,
        })
    }

    pub fn ctx(&self) -> &FourierContext {
        &self.ctx
    }

    pub fn ctx_arc(&self) -> &Arc<FourierContext> {
        &self.ctx
    }

    pub fn field(&self) -> &Field {
        self.ctx.field()
    }

    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn r(&self) -> usize {
        self.selection.len()
    }

    /// Singleton value `n - r + 1`.
    pub fn design_distance(&self) -> usize {
        self.n() - self.r() + 1
    }

    pub fn selection(&self) -> &[usize] {
        &self.selection
    }

    pub fn check_indices(&self) -> &[usize] {
        &self.check_indices
    }

    pub fn progression(&self) -> Option<(usize, usize)> {
        self.progression
    }

    /// `r × n` generator.
    pub fn generator(&self) -> Matrix {
        self.ctx.rows_matrix(&self.selection)
    }

    /// `n × (n - r)` check matrix with `generator · check = 0`.
    pub fn check(&self) -> Matrix {
        self.ctx.cols_matrix(&self.check_indices)
    }

    /// Generator of the Euclidean dual: the transposed check columns,
    /// `f_j^T = e_(n-j)`.
    pub fn dual_generator(&self) -> Matrix {
        self.check().transpose()
    }

    /// Error-correcting capability `floor((n - r) / 2)`.
    pub fn capability(&self) -> usize {
        (self.n() - self.r()) / 2
    }

    pub fn rate(&self) -> f64 {
        self.r() as f64 / self.n() as f64
    }

    /// One-line summary `CODE n r d TYPE [certified flags] FIELD p s`.
    pub fn summary_line(&self) -> String {
        let mut out = format!(
            "CODE {} {} {} {}",
            self.n(),
            self.r(),
            self.design_distance(),
            self.kind.label()
        );
        for (name, flag) in self.flag_list() {
            if flag == Flag::Certified {
                out.push(' ');
                out.push_str(name);
            }
        }
        let f = self.field();
        out.push_str(&format!(" FIELD {} {}", f.characteristic(), f.degree()));
        out
    }

    pub fn flag_list(&self) -> [(&'static str, Flag); 4] {
        [
            ("mds", self.flags.mds),
            ("dc", self.flags.dc_euclidean),
            ("hdc", self.flags.dc_hermitian),
            ("lcd", self.flags.lcd),
        ]
    }

    pub fn set_flag(&mut self, name: &str, flag: Flag) -> Result<()> {
        let slot = match name {
            "mds" => &mut self.flags.mds,
            "dc" => &mut self.flags.dc_euclidean,
            "hdc" => &mut self.flags.dc_hermitian,
            "lcd" => &mut self.flags.lcd,
            other => return Err(Error::Invalid(format!("unknown flag `{other}`"))),
        };
        *slot = flag;
        Ok(())
    }
}

/// `(start, step)` with `selection` equal, in order, to
/// `start, start + step, …` mod `n`, and `gcd(step, n) = 1`. Falls back to
/// set equality so that pair-ordered LCD selections are recognised as a
/// shifted consecutive run.
pub fn detect_progression(n: usize, selection: &[usize]) -> Option<(usize, usize)> {
    let r = selection.len();
    if r == 0 {
        return None;
    }
    if r == 1 {
        return Some((selection[0], 1));
    }
    let mut member = vec![false; n];
    for &i in selection {
        member[i % n] = true;
    }
    let mut fallback = None;
    for step in (1..n).filter(|&k| gcd(k as u64, n as u64) == 1) {
        let mut start = selection[0];
        let mut walked = 0;
        while member[(start + n - step) % n] && walked < n {
            start = (start + n - step) % n;
            walked += 1;
        }
        if walked == n {
            // r = n: every row present.
            return Some((0, 1));
        }
        if (0..r).all(|i| member[(start + i * step) % n]) {
            if (0..r).all(|i| selection[i] == (selection[0] + i * step) % n) {
                return Some((selection[0], step));
            }
            fallback.get_or_insert((start, step));
        }
    }
    fallback
}

fn check_dimension(r: usize, n: usize) -> Result<()> {
    if r == 0 || r > n {
        return Err(Error::DimensionOutOfRange { r, n });
    }
    Ok(())
}

/// `r` rows in arithmetic progression `start, start + step, …` (mod `n`),
/// with `gcd(step, n) = 1`. The check columns continue the progression.
pub fn design_mds(ctx: &Arc<FourierContext>, start: usize, step: usize, r: usize) -> Result<BlockCode> {
    let n = ctx.n();
    check_dimension(r, n)?;
    if gcd(step as u64, n as u64) != 1 {
        return Err(Error::StepNotCoprime { step, n });
    }
    let idx = |i: usize| (start + i * step) % n;
    let selection: Vec<usize> = (0..r).map(idx).collect();
    let check: Vec<usize> = (r..n).map(idx).collect();
    let flags = BlockFlags {
        mds: Flag::Claimed,
        ..BlockFlags::default()
    };
    let mut code = BlockCode::from_indices(ctx.clone(), BlockKind::Mds, selection, check, flags)?;
    code.progression = Some((start % n, step % n));
    Ok(code)
}

/// Rows `e_0 … e_(r-1)` with `r > floor(n/2)`; the dual rows
/// `e_(n-r) … e_1` lie among them.
pub fn design_dc(ctx: &Arc<FourierContext>, r: usize) -> Result<BlockCode> {
    let n = ctx.n();
    check_dimension(r, n)?;
    if r <= n / 2 {
        return Err(Error::RateNotAboveHalf { r, n });
    }
    let mut code = design_mds(ctx, 0, 1, r)?;
    code.kind = BlockKind::Dc;
    code.flags.dc_euclidean = Flag::Claimed;
    Ok(code)
}

/// Dual-containing under the Hermitian form over GF(l^2). Requires
/// `l = 1 mod n` so that conjugation fixes every row.
pub fn design_dc_hermitian(field: Arc<Field>, n: usize, r: usize) -> Result<BlockCode> {
    let l = field.conjugation_exponent().ok_or(Error::NotQuadraticExtension {
        p: field.characteristic(),
        s: field.degree(),
    })?;
    if l % n as u64 != 1 % n as u64 {
        return Err(Error::HermitianMisaligned { l, n });
    }
    let ctx = Arc::new(FourierContext::new(field, n)?);
    let mut code = design_dc(&ctx, r)?;
    code.kind = BlockKind::HermitianDc;
    code.flags.dc_hermitian = Flag::Claimed;
    Ok(code)
}

/// Rows `e_0` then pairs `{e_i, e_(n-i)}` for `i = 1..=pairs`: an
/// `[n, 2·pairs + 1, n - 2·pairs]` code whose dual is spanned by the
/// remaining pairs (and `f_(n/2)` for even `n`).
pub fn design_lcd(ctx: &Arc<FourierContext>, pairs: usize) -> Result<BlockCode> {
    let n = ctx.n();
    if 2 * pairs + 1 > n {
        return Err(Error::PairCountTooLarge { pairs, n });
    }
    let mut selection = vec![0];
    for i in 1..=pairs {
        selection.extend([i, n - i]);
    }
    let mut check = Vec::with_capacity(n - selection.len());
    for j in pairs + 1..n.div_ceil(2) {
        check.extend([j, n - j]);
    }
    if n.is_multiple_of(2) {
        check.push(n / 2);
    }
    let flags = BlockFlags {
        mds: Flag::Claimed,
        lcd: Flag::Claimed,
        ..BlockFlags::default()
    };
    BlockCode::from_indices(ctx.clone(), BlockKind::Lcd, selection, check, flags)
}

/// A rational in `(0, 1)`, written `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rate {
    num: u64,
    den: u64,
}

impl Rate {
    pub fn new(num: u64, den: u64) -> Result<Rate> {
        if den == 0 || num == 0 || num >= den {
            return Err(Error::Invalid(format!(
                "rate {num}/{den} must lie strictly between 0 and 1"
            )));
        }
        let g = gcd(num, den);
        Ok(Rate {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// `ceil(n·R)`.
    pub fn ceil_times(self, n: u64) -> u64 {
        (n * self.num).div_ceil(self.den)
    }

    /// `floor(n·R)`.
    pub fn floor_times(self, n: u64) -> u64 {
        n * self.num / self.den
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `r / n >= R`.
    pub fn admits(self, r: u64, n: u64) -> bool {
        r * self.den >= n * self.num
    }

    pub fn above_half(self) -> bool {
        2 * self.num > self.den
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rate> {
        let bad = || Error::Invalid(format!("rate must be written p/q, got `{s}`"));
        let (a, b) = s.split_once('/').ok_or_else(bad)?;
        let num = a.trim().parse().map_err(|_| bad())?;
        let den = b.trim().parse().map_err(|_| bad())?;
        Rate::new(num, den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeType {
    Plain,
    Dc,
    Lcd,
    HermitianDc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharConstraint {
    None,
    Characteristic(u64),
    PrimeField,
}

/// How candidate lengths are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LengthPolicy {
    /// Every length coprime to the characteristic, in increasing order.
    Smallest,
    /// Only `n = 2^i - 1` (characteristic 2), with the dimension rounded up
    /// to an odd value so the pair layouts apply.
    Mersenne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DesignRequest {
    pub rate: Rate,
    pub errors: u64,
    pub code_type: CodeType,
    pub char_constraint: CharConstraint,
    pub length_policy: LengthPolicy,
}

impl DesignRequest {
    /// Request with the default length policy: Mersenne lengths under a
    /// characteristic-2 constraint, smallest lengths otherwise.
    pub fn new(
        rate: Rate,
        errors: u64,
        code_type: CodeType,
        char_constraint: CharConstraint,
    ) -> DesignRequest {
        let length_policy = if char_constraint == CharConstraint::Characteristic(2) {
            LengthPolicy::Mersenne
        } else {
            LengthPolicy::Smallest
        };
        DesignRequest {
            rate,
            errors,
            code_type,
            char_constraint,
            length_policy,
        }
    }
}

/// A chosen field `GF(p^s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldChoice {
    pub p: u64,
    pub s: u32,
}

impl FieldChoice {
    pub fn order(self) -> u64 {
        self.p.pow(self.s)
    }

    pub fn build(self) -> Result<Field> {
        Field::new(self.p, self.s)
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.s)
        }
    }
}

const ORDER_LIMIT: u64 = u32::MAX as u64;

/// Smallest field of order `< 2^32` containing an element of order `n`
/// under the constraint; `hermitian` asks for `GF(l^2)` with `l = 1 mod n`.
pub fn choose_field(n: u64, constraint: CharConstraint, hermitian: bool) -> Option<FieldChoice> {
    let square = |c: FieldChoice| FieldChoice { p: c.p, s: 2 * c.s };
    let base = match constraint {
        CharConstraint::Characteristic(p) => {
            let s = order_mod(p, n).ok()?;
            FieldChoice { p, s }
        }
        CharConstraint::PrimeField => {
            let p = (1..)
                .map(|k| k * n + 1)
                .take_while(|&p| p <= ORDER_LIMIT)
                .find(|&p| is_prime(p))?;
            FieldChoice { p, s: 1 }
        }
        CharConstraint::None => {
            let q = (1..)
                .map(|k| k * n + 1)
                .take_while(|&q| q <= ORDER_LIMIT)
                .find(|&q| prime_power(q).is_some())?;
            let (p, s) = prime_power(q)?;
            FieldChoice { p, s }
        }
    };
    let chosen = if hermitian { square(base) } else { base };
    (chosen.p.checked_pow(chosen.s).is_some_and(|q| q <= ORDER_LIMIT)).then_some(chosen)
}

/// Every field `GF(p^s)`, `p < prime_bound`, of order `< 2^32` with `n | p^s - 1`,
/// using the least such `s` for each `p`. Sorted by order.
pub fn admissible_fields(n: u64, prime_bound: u64) -> Vec<FieldChoice> {
    let mut out: Vec<FieldChoice> = (2..prime_bound)
        .filter(|&p| is_prime(p) && gcd(p, n) == 1)
        .filter_map(|p| {
            let s = order_mod(p, n).ok()?;
            p.checked_pow(s)
                .filter(|&q| q <= ORDER_LIMIT)
                .map(|_| FieldChoice { p, s })
        })
        .collect();
    out.sort_by_key(|c| (c.order(), c.s));
    out
}

/// Length, dimension and field chosen for a block request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSizing {
    pub n: u64,
    pub r: u64,
    pub field: FieldChoice,
}

fn dimension_for(req: &DesignRequest, n: u64) -> Option<u64> {
    let mut r = req.rate.ceil_times(n).max(1);
    match req.code_type {
        CodeType::Dc | CodeType::HermitianDc => r = r.max(n / 2 + 1),
        CodeType::Lcd => {
            if r.is_multiple_of(2) {
                r += 1;
            }
        }
        CodeType::Plain => {}
    }
    if req.length_policy == LengthPolicy::Mersenne && r.is_multiple_of(2) {
        r += 1;
    }
    (r <= n).then_some(r)
}

fn candidate_lengths(req: &DesignRequest, from: u64) -> Box<dyn Iterator<Item = u64>> {
    let p = match req.char_constraint {
        CharConstraint::Characteristic(p) => Some(p),
        _ => None,
    };
    match req.length_policy {
        LengthPolicy::Mersenne => Box::new((1..32u32).map(|i| (1u64 << i) - 1).filter(move |&n| n >= from)),
        LengthPolicy::Smallest => Box::new(
            (from..)
                .take_while(|&n| n <= ORDER_LIMIT)
                .filter(move |&n| p.is_none_or(|p| gcd(p, n) == 1)),
        ),
    }
}

/// Smallest admissible `n >= ceil(2t / (1 - R))` with a dimension meeting the
/// rate, the type's constraint and distance `>= 2t + 1`, over the smallest
/// field satisfying the characteristic constraint.
pub fn size_block(req: &DesignRequest) -> Result<BlockSizing> {
    let rate = req.rate;
    if matches!(req.code_type, CodeType::Dc | CodeType::HermitianDc) && !rate.above_half() {
        return Err(Error::Unsatisfiable(format!(
            "dual-containing codes need rate above one half, got {rate}"
        )));
    }
    if req.length_policy == LengthPolicy::Mersenne
        && !matches!(req.char_constraint, CharConstraint::Characteristic(2))
    {
        return Err(Error::Unsatisfiable(
            "lengths 2^i - 1 require a characteristic-2 constraint".into(),
        ));
    }
    if let CharConstraint::Characteristic(p) = req.char_constraint {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let hermitian = req.code_type == CodeType::HermitianDc;
    // n(1 - R) >= 2t  <=>  n·(den - num) >= 2t·den
    let slack = rate.den - rate.num;
    let from = (2 * req.errors * rate.den).div_ceil(slack).max(1);
    for n in candidate_lengths(req, from) {
        let Some(r) = dimension_for(req, n) else {
            continue;
        };
        if n - r + 1 < 2 * req.errors + 1 {
            continue;
        }
        if let Some(field) = choose_field(n, req.char_constraint, hermitian) {
            return Ok(BlockSizing { n, r, field });
        }
    }
    Err(Error::Unsatisfiable(format!(
        "no admissible length for rate {rate}, {} errors",
        req.errors
    )))
}

/// Sizes the request and builds the code.
pub fn design_to_spec(req: &DesignRequest) -> Result<BlockCode> {
    let sizing = size_block(req)?;
    let field = Arc::new(sizing.field.build()?);
    let (n, r) = (sizing.n as usize, sizing.r as usize);
    if req.code_type == CodeType::HermitianDc {
        return design_dc_hermitian(field, n, r);
    }
    let ctx = Arc::new(FourierContext::new(field, n)?);
    match req.code_type {
        CodeType::Plain => design_mds(&ctx, 0, 1, r),
        CodeType::Dc => design_dc(&ctx, r),
        CodeType::Lcd => design_lcd(&ctx, (r - 1) / 2),
        CodeType::HermitianDc => unreachable!("handled above"),
    }
}

/// Quantum code parameters `[[n, k, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QeccParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub hermitian: bool,
}

impl QeccParams {
    /// `[[n, 2r - n, n - r + 1]]`; `None` when `2r < n`.
    pub fn from_dimensions(n: usize, r: usize, hermitian: bool) -> Option<QeccParams> {
        (2 * r >= n).then(|| QeccParams {
            n,
            k: 2 * r - n,
            d: n - r + 1,
            hermitian,
        })
    }
}

impl fmt::Display for QeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

/// CSS parameters of a code whose dual containment has been certified.
/// Euclidean certification takes precedence.
pub fn css_from_dc(code: &BlockCode) -> Result<QeccParams> {
    let hermitian = match (code.flags.dc_euclidean, code.flags.dc_hermitian) {
        (Flag::Certified, _) => false,
        (_, Flag::Certified) => true,
        _ => return Err(Error::UncertifiedDualContainment),
    };
    QeccParams::from_dimensions(code.n(), code.r(), hermitian).ok_or(Error::UncertifiedDualContainment)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, s: u32, n: usize) -> Arc<FourierContext> {
        Arc::new(FourierContext::new(Arc::new(Field::new(p, s).unwrap()), n).unwrap())
    }

    fn annihilates(code: &BlockCode) -> bool {
        code.generator()
            .mul(code.field(), &code.check())
            .unwrap()
            .is_zero()
    }

    #[test]
    fn mds_selection_wraps_and_annihilates() {
        let c = ctx(11, 1, 10);
        let code = design_mds(&c, 3, 3, 5).unwrap();
        assert_eq!(code.selection(), &[3, 6, 9, 2, 5]);
        assert_eq!(code.design_distance(), 6);
        assert!(annihilates(&code));
        assert_eq!(design_mds(&c, 8, 1, 4).unwrap().selection(), &[8, 9, 0, 1]);
        assert_eq!(
            design_mds(&c, 0, 2, 4),
            Err(Error::StepNotCoprime { step: 2, n: 10 })
        );
    }

    #[test]
    fn full_dimension_has_empty_check() {
        let c = ctx(2, 3, 7);
        let code = design_mds(&c, 0, 1, 7).unwrap();
        assert_eq!(code.design_distance(), 1);
        assert_eq!(code.generator(), *c.matrix());
        assert!(code.check_indices().is_empty());
    }

    #[test]
    fn dc_requires_rate_above_half() {
        let c = ctx(2, 3, 7);
        assert_eq!(design_dc(&c, 3), Err(Error::RateNotAboveHalf { r: 3, n: 7 }));
        let code = design_dc(&c, 4).unwrap();
        assert_eq!(code.check_indices(), &[4, 5, 6]);
        assert!(annihilates(&code));
    }

    #[test]
    fn lcd_layouts() {
        let c = ctx(2, 3, 7);
        let code = design_lcd(&c, 2).unwrap();
        assert_eq!(code.selection(), &[0, 1, 6, 2, 5]);
        assert_eq!(code.check_indices(), &[3, 4]);
        assert_eq!((code.r(), code.design_distance()), (5, 3));
        assert!(annihilates(&code));
        assert_eq!(code.progression(), Some((5, 1)));

        let even = ctx(11, 1, 10);
        let code = design_lcd(&even, 2).unwrap();
        assert_eq!(code.check_indices(), &[3, 7, 4, 6, 5]);
        assert!(annihilates(&code));
        assert_eq!(
            design_lcd(&c, 4),
            Err(Error::PairCountTooLarge { pairs: 4, n: 7 })
        );
    }

    #[test]
    fn hermitian_alignment() {
        let f64 = Arc::new(Field::new(2, 6).unwrap());
        let code = design_dc_hermitian(f64, 7, 4).unwrap();
        assert_eq!(code.flags.dc_hermitian, Flag::Claimed);
        let f81 = Arc::new(Field::new(3, 4).unwrap());
        assert_eq!(
            design_dc_hermitian(f81, 10, 6),
            Err(Error::HermitianMisaligned { l: 9, n: 10 })
        );
        let f8 = Arc::new(Field::new(2, 3).unwrap());
        assert!(matches!(
            design_dc_hermitian(f8, 7, 4),
            Err(Error::NotQuadraticExtension { .. })
        ));
    }

    #[test]
    fn progression_detection() {
        assert_eq!(detect_progression(10, &[3, 6, 9, 2, 5]), Some((3, 3)));
        assert_eq!(detect_progression(10, &[8, 9, 0, 1]), Some((8, 1)));
        assert_eq!(detect_progression(15, &[0, 1, 14, 2, 13]), Some((13, 1)));
        assert_eq!(detect_progression(7, &[0, 1, 3]), None);
    }

    #[test]
    fn rate_parsing() {
        let r: Rate = "14/16".parse().unwrap();
        assert_eq!((r.num(), r.den()), (7, 8));
        assert!("1/1".parse::<Rate>().is_err());
        assert!("x".parse::<Rate>().is_err());
        assert_eq!(r.ceil_times(511), 448);
    }

    #[test]
    fn sizing_examples() {
        let r78: Rate = "7/8".parse().unwrap();
        let s = size_block(&DesignRequest::new(r78, 25, CodeType::Dc, CharConstraint::None)).unwrap();
        assert_eq!((s.n, s.r, s.field), (400, 350, FieldChoice { p: 401, s: 1 }));
        let s = size_block(&DesignRequest::new(
            r78,
            25,
            CodeType::Dc,
            CharConstraint::Characteristic(2),
        ))
        .unwrap();
        assert_eq!((s.n, s.r, s.field), (511, 449, FieldChoice { p: 2, s: 9 }));
        let half: Rate = "1/2".parse().unwrap();
        let s = size_block(&DesignRequest::new(
            half,
            0,
            CodeType::Plain,
            CharConstraint::None,
        ))
        .unwrap();
        assert_eq!((s.n, s.r), (1, 1));
        assert!(matches!(
            size_block(&DesignRequest::new(half, 3, CodeType::Dc, CharConstraint::None)),
            Err(Error::Unsatisfiable(_))
        ));
    }

    #[test]
    fn css_needs_certification() {
        let c = ctx(2, 3, 7);
        let mut code = design_dc(&c, 4).unwrap();
        assert_eq!(css_from_dc(&code), Err(Error::UncertifiedDualContainment));
        code.flags.dc_euclidean = Flag::Certified;
        let q = css_from_dc(&code).unwrap();
        assert_eq!(q.to_string(), "[[7,1,4]]");
        assert!(!q.hermitian);
    }
}
