//! Convolutional codes `G[z] = G_0 + G_1 z + … + G_μ z^μ` whose coefficient
//! rows are Fourier rows.
//!
//! A code is described by a [`RowPlan`]: for each of the `r` generator rows,
//! the Fourier row index used at each power of `z` (or none). Every index in
//! `0..n` is used at most once and row `k` of `G_0` is `e_(a_k)`, so
//! `K = [f_(a_0) … f_(a_(r-1))]` is a constant right inverse with `G·K = n·I`,
//! and each unused index `j` yields a control column
//! `f_j - f_(a_k) z^t` (when `j` sits in row `k` at degree `t`) or `f_j`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::block::{
    admissible_fields, choose_field, BlockCode, BlockKind, CharConstraint, FieldChoice, Flag, Rate,
};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::fourier::FourierContext;
use crate::matrix::{axpy, Matrix};

/// Generalized Singleton bound `(n - r)(floor(δ/r) + 1) + δ + 1`.
pub fn gsb(n: usize, r: usize, degree: usize) -> usize {
    assert!(r >= 1, "rank must be positive");
    (n - r) * (degree / r + 1) + degree + 1
}

/// Row-by-degree assignment of Fourier row indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowPlan(Vec<Vec<Option<usize>>>);

impl RowPlan {
    /// `rows[k][t]` is the Fourier row of `G_t` at row `k`. Trailing `None`s
    /// are dropped; every row must start with a row index.
    pub fn new(rows: Vec<Vec<Option<usize>>>) -> Result<RowPlan> {
        let mut rows = rows;
        for row in rows.iter_mut() {
            while row.len() > 1 && row.last() == Some(&None) {
                row.pop();
            }
            if row.first().copied().flatten().is_none() {
                return Err(Error::InvalidPlan(
                    "every row needs a degree-0 Fourier row".into(),
                ));
            }
        }
        if rows.is_empty() {
            return Err(Error::InvalidPlan("plan has no rows".into()));
        }
        Ok(RowPlan(rows))
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Per-row degrees.
    pub fn row_degrees(&self) -> Vec<usize> {
        self.0.iter().map(|r| r.len() - 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.row_degrees().iter().sum()
    }

    pub fn memory(&self) -> usize {
        self.row_degrees().into_iter().max().unwrap_or(0)
    }

    pub fn entry(&self, row: usize, power: usize) -> Option<usize> {
        self.0[row].get(power).copied().flatten()
    }

    /// Fourier rows of `G_0`, in row order.
    pub fn leading(&self) -> Vec<usize> {
        self.0.iter().map(|r| r[0].expect("validated")).collect()
    }

    fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for idx in self.0.iter().flatten().flatten() {
            if *idx >= n {
                return Err(Error::InvalidPlan(format!(
                    "row index {idx} out of range for n = {n}"
                )));
            }
            if std::mem::replace(&mut seen[*idx], true) {
                return Err(Error::InvalidPlan(format!("row index {idx} used twice")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for RowPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or("-".to_string(), |i| i.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for RowPlan {
    type Err = Error;

    /// Rows separated by `;`, powers by `,`, `-` for a zero row:
    /// `"0,-,5;1,3;2,4,6"`.
    fn from_str(s: &str) -> Result<RowPlan> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| match t.trim() {
                        "-" => Ok(None),
                        v => v
                            .parse::<usize>()
                            .map(Some)
                            .map_err(|_| Error::InvalidPlan(format!("bad plan entry `{v}`"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RowPlan::new(rows)
    }
}

/// Named higher-memory plans for `n = 7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `(7,3,5;2)`.
    Mem2,
    /// `(7,3,4;2)`, trading distance for the LCD property.
    Mem2Lcd,
    /// `(7,2,5;3)`.
    Mem3,
    /// `(7,1,6;6)`: `e_0 + e_1 z + … + e_6 z^6`.
    Repetition,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Mem2, Preset::Mem2Lcd, Preset::Mem3, Preset::Repetition];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Mem2 => "n7-mem2",
            Preset::Mem2Lcd => "n7-mem2-lcd",
            Preset::Mem3 => "n7-mem3",
            Preset::Repetition => "n7-repetition",
        }
    }

    pub fn length(self) -> usize {
        7
    }

    pub fn plan(self) -> RowPlan {
        let text = match self {
            Preset::Mem2 => "0,-,5;1,3;2,4,6",
            Preset::Mem2Lcd => "0;1,3,5;2,4,6",
            Preset::Mem3 => "0,2,4;1,3,5,6",
            Preset::Repetition => "0,1,2,3,4,5,6",
        };
        text.parse().expect("preset plans are well formed")
    }

    pub fn claims_lcd(self) -> bool {
        self == Preset::Mem2Lcd
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Preset> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidPlan(format!("unknown preset `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConvFlags {
    pub mds_conv: Flag,
    pub dc: Flag,
    pub lcd: Flag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConvKind {
    /// `A + Bz` over consecutive rows.
    Memory1,
    /// Same layout, claimed LCD.
    Lcd,
    /// Pair layout over characteristic 2, claimed dual-containing.
    DcChar2,
    /// Caller-supplied plan.
    Plan,
}

impl ConvKind {
    pub fn label(self) -> &'static str {
        match self {
            ConvKind::Memory1 => "MDS",
            ConvKind::Lcd => "LCD",
            ConvKind::DcChar2 => "DC",
            ConvKind::Plan => "PLAN",
        }
    }
}

impl FromStr for ConvKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConvKind> {
        match s {
            "MDS" => Ok(ConvKind::Memory1),
            "LCD" => Ok(ConvKind::Lcd),
            "DC" => Ok(ConvKind::DcChar2),
            "PLAN" => Ok(ConvKind::Plan),
            other => Err(Error::Invalid(format!("unknown convolutional type `{other}`"))),
        }
    }
}

/// `(n, r, δ; μ)` convolutional code from a [`RowPlan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvCode {
    ctx: Arc<FourierContext>,
    kind: ConvKind,
    plan: RowPlan,
    design_free_distance: Option<usize>,
    pub flags: ConvFlags,
}

impl ConvCode {
    pub fn from_plan(
        ctx: Arc<FourierContext>,
        kind: ConvKind,
        plan: RowPlan,
        design_free_distance: Option<usize>,
        flags: ConvFlags,
    ) -> Result<ConvCode> {
        plan.validate(ctx.n())?;
        Ok(ConvCode {
            ctx,
            kind,
            plan,
            design_free_distance,
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

    pub fn kind(&self) -> ConvKind {
        self.kind
    }

    pub fn plan(&self) -> &RowPlan {
        &self.plan
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn r(&self) -> usize {
        self.plan.rank()
    }

    pub fn degree(&self) -> usize {
        self.plan.degree()
    }

    pub fn memory(&self) -> usize {
        self.plan.memory()
    }

    pub fn design_free_distance(&self) -> Option<usize> {
        self.design_free_distance
    }

    pub fn gsb(&self) -> usize {
        gsb(self.n(), self.r(), self.degree())
    }

    /// `G_t` for `t = 0..=μ`.
    pub fn coefficients(&self) -> Vec<Matrix> {
        (0..=self.memory()).map(|t| self.coefficient(t)).collect()
    }

    pub fn coefficient(&self, t: usize) -> Matrix {
        let n = self.n();
        let rows = (0..self.r()).map(|k| match self.plan.entry(k, t) {
            Some(i) => self.ctx.row(i).to_vec(),
            None => vec![Gf::ZERO; n],
        });
        Matrix::from_rows(n, rows).expect("rows have length n")
    }

    /// Control columns as `(j, Some((a_k, t)))` for `f_j - f_(a_k) z^t`, or
    /// `(j, None)` for a constant `f_j`. Ordered by degree, then row, then
    /// unused indices ascending.
    fn control_columns(&self) -> Vec<(usize, Option<(usize, usize)>)> {
        let leading = self.plan.leading();
        let mut out = Vec::new();
        let mut used = vec![false; self.n()];
        for &a in &leading {
            used[a] = true;
        }
        for t in 1..=self.memory() {
            for (k, &a) in leading.iter().enumerate() {
                if let Some(j) = self.plan.entry(k, t) {
                    used[j] = true;
                    out.push((j, Some((a, t))));
                }
            }
        }
        out.extend((0..self.n()).filter(|&j| !used[j]).map(|j| (j, None)));
        out
    }

    /// Coefficients `H_t` (each `n × (n - r)`) of `Hᵀ[z]` with
    /// `G[z]·Hᵀ[z] = 0`.
    pub fn control_coefficients(&self) -> Vec<Matrix> {
        let f = self.field();
        let cols = self.control_columns();
        let n = self.n();
        let mut out = vec![Matrix::zeros(n, cols.len()); self.memory() + 1];
        for (c, &(j, tail)) in cols.iter().enumerate() {
            for (k, &x) in self.ctx.inv_col(j).iter().enumerate() {
                out[0].set(k, c, x);
            }
            if let Some((a, t)) = tail {
                for (k, &x) in self.ctx.inv_col(a).iter().enumerate() {
                    out[t].set(k, c, f.neg(x));
                }
            }
        }
        out
    }

    /// Constant right inverse `K` (`n × r`) with `G[z]·K = n·I_r`.
    pub fn right_inverse(&self) -> Matrix {
        self.ctx.cols_matrix(&self.plan.leading())
    }

    /// The scalar `c` in `G[z]·K = c·I_r`.
    pub fn right_inverse_scalar(&self) -> Gf {
        self.ctx.n_scalar()
    }

    /// Generator coefficients of the dual code, `z^m·H[z⁻¹]` where `m` is
    /// the control memory.
    pub fn dual_generator(&self) -> Vec<Matrix> {
        let mut h: Vec<Matrix> = self
            .control_coefficients()
            .iter()
            .map(Matrix::transpose)
            .collect();
        while h.len() > 1 && h.last().is_some_and(Matrix::is_zero) {
            h.pop();
        }
        h.reverse();
        h
    }

    /// `P[z]·G[z]` for a message given by its coefficient vectors.
    pub fn encode(&self, message: &[Vec<Gf>]) -> Result<Vec<Vec<Gf>>> {
        let f = self.field();
        let (n, r) = (self.n(), self.r());
        if let Some(bad) = message.iter().find(|p| p.len() != r) {
            return Err(Error::LengthMismatch {
                expected: r,
                got: bad.len(),
            });
        }
        let mut out = vec![vec![Gf::ZERO; n]; message.len() + self.memory()];
        for (d, p) in message.iter().enumerate() {
            for (k, &c) in p.iter().enumerate() {
                for t in 0..=self.memory() {
                    if let Some(i) = self.plan.entry(k, t) {
                        axpy(f, &mut out[d + t], c, self.ctx.row(i));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(n,r,δ;μ[,d])` with the design free distance when known.
    pub fn params(&self) -> String {
        match self.design_free_distance {
            Some(d) => format!(
                "({},{},{};{},{})",
                self.n(),
                self.r(),
                self.degree(),
                self.memory(),
                d
            ),
            None => format!("({},{},{};{})", self.n(), self.r(), self.degree(), self.memory()),
        }
    }

    /// One-line summary `CONV n r δ μ d TYPE [certified flags] FIELD p s`,
    /// with `?` for an unknown design distance.
    pub fn summary_line(&self) -> String {
        let d = self
            .design_free_distance
            .map_or("?".to_string(), |d| d.to_string());
        let mut out = format!(
            "CONV {} {} {} {} {} {}",
            self.n(),
            self.r(),
            self.degree(),
            self.memory(),
            d,
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

    pub fn flag_list(&self) -> [(&'static str, Flag); 3] {
        [
            ("mds", self.flags.mds_conv),
            ("dc", self.flags.dc),
            ("lcd", self.flags.lcd),
        ]
    }

    pub fn set_flag(&mut self, name: &str, flag: Flag) -> Result<()> {
        let slot = match name {
            "mds" => &mut self.flags.mds_conv,
            "dc" => &mut self.flags.dc,
            "lcd" => &mut self.flags.lcd,
            other => return Err(Error::Invalid(format!("unknown flag `{other}`"))),
        };
        *slot = flag;
        Ok(())
    }
}

fn memory1_plan(leading: &[usize], tail: &[usize]) -> RowPlan {
    let zeros = leading.len() - tail.len();
    let rows = leading
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            if k < zeros {
                vec![Some(a)]
            } else {
                vec![Some(a), Some(tail[k - zeros])]
            }
        })
        .collect();
    RowPlan::new(rows).expect("leading rows present")
}

/// `G[z] = A + Bz` with `A = e_0 … e_(r-1)` and `B` holding `2r - n` zero rows
/// followed by `e_r … e_(n-1)`: an `(n, r, n - r; 1)` code with design free
/// distance `2(n - r) + 1`.
pub fn lift_memory1(ctx: &Arc<FourierContext>, r: usize) -> Result<ConvCode> {
    let n = ctx.n();
    if r <= n / 2 || r >= n {
        return Err(if r >= n {
            Error::DimensionOutOfRange { r, n }
        } else {
            Error::RateNotAboveHalf { r, n }
        });
    }
    let leading: Vec<usize> = (0..r).collect();
    let tail: Vec<usize> = (r..n).collect();
    let flags = ConvFlags {
        mds_conv: Flag::Claimed,
        // The coefficient-wise trivial-intersection test is structurally
        // satisfied exactly when 2r = n + 1.
        lcd: if 2 * r == n + 1 {
            Flag::Claimed
        } else {
            Flag::False
        },
        ..ConvFlags::default()
    };
    ConvCode::from_plan(
        ctx.clone(),
        ConvKind::Memory1,
        memory1_plan(&leading, &tail),
        Some(2 * (n - r) + 1),
        flags,
    )
}

/// The memory-1 lifting, claimed LCD.
pub fn lift_conv_lcd(ctx: &Arc<FourierContext>, r: usize) -> Result<ConvCode> {
    let mut code = lift_memory1(ctx, r)?;
    code.kind = ConvKind::Lcd;
    code.flags.lcd = Flag::Claimed;
    Ok(code)
}

/// Characteristic-2 dual-containing lift over odd `n = 2m + 1`: `A` is `e_0`
/// and pairs `{e_i, e_(n-i)}` for `i <= pairs`, `B` has `4·pairs - 2m + 1`
/// zero rows followed by the remaining pairs. Yields
/// `(n, 2·pairs + 1, 2(m - pairs); 1)` with design free distance
/// `4(m - pairs) + 1`.
pub fn lift_dc_char2(ctx: &Arc<FourierContext>, pairs: usize) -> Result<ConvCode> {
    let p = ctx.field().characteristic();
    if p != 2 {
        return Err(Error::NotCharacteristicTwo(p));
    }
    let n = ctx.n();
    if n.is_multiple_of(2) {
        return Err(Error::Invalid(format!("pair lift needs odd length, got {n}")));
    }
    let m = (n - 1) / 2;
    if 2 * pairs < m || pairs >= m {
        return Err(Error::Invalid(format!(
            "pair count {pairs} must satisfy m/2 <= pairs < m for m = {m}"
        )));
    }
    let pair_list =
        |range: std::ops::RangeInclusive<usize>| -> Vec<usize> { range.flat_map(|i| [i, n - i]).collect() };
    let mut leading = vec![0];
    leading.extend(pair_list(1..=pairs));
    let tail = pair_list(pairs + 1..=m);
    let flags = ConvFlags {
        mds_conv: Flag::Claimed,
        dc: Flag::Claimed,
        ..ConvFlags::default()
    };
    ConvCode::from_plan(
        ctx.clone(),
        ConvKind::DcChar2,
        memory1_plan(&leading, &tail),
        Some(4 * (m - pairs) + 1),
        flags,
    )
}

/// Lifts a characteristic-2 LCD block code: its unused pairs become the
/// nonzero rows of `B`.
pub fn lift_memory1_lcd_source(source: &BlockCode) -> Result<ConvCode> {
    if source.kind() != BlockKind::Lcd {
        return Err(Error::Invalid("source must be a paired LCD design".into()));
    }
    lift_dc_char2(source.ctx_arc(), (source.r() - 1) / 2)
}

/// A caller-supplied plan with `G_0 = e_0 … e_(r-1)` that uses all `n` rows.
/// The free distance is left to the verifier.
pub fn lift_higher_memory(ctx: &Arc<FourierContext>, r: usize, plan: RowPlan) -> Result<ConvCode> {
    let n = ctx.n();
    if plan.rank() != r {
        return Err(Error::InvalidPlan(format!(
            "plan has {} rows, expected {r}",
            plan.rank()
        )));
    }
    if plan.leading() != (0..r).collect::<Vec<_>>() {
        return Err(Error::InvalidPlan("G_0 must be e_0 … e_(r-1)".into()));
    }
    plan.validate(n)?;
    let used = plan.rows().iter().flatten().flatten().count();
    if used != n {
        return Err(Error::InvalidPlan(format!("plan uses {used} of {n} rows")));
    }
    ConvCode::from_plan(ctx.clone(), ConvKind::Plan, plan, None, ConvFlags::default())
}

/// A named preset over a context of matching length.
pub fn lift_preset(ctx: &Arc<FourierContext>, preset: Preset) -> Result<ConvCode> {
    if ctx.n() != preset.length() {
        return Err(Error::InvalidPlan(format!(
            "preset {} needs n = {}, got {}",
            preset.name(),
            preset.length(),
            ctx.n()
        )));
    }
    let plan = preset.plan();
    let mut code = lift_higher_memory(ctx, plan.rank(), plan)?;
    if preset.claims_lcd() {
        code.flags.lcd = Flag::Claimed;
    }
    Ok(code)
}

/// Parameters of a memory-1 design meeting a rate and free-distance target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvSizing {
    pub n: u64,
    pub r: u64,
    /// `δ = n - r`.
    pub degree: u64,
    /// `2(n - r) + 1`.
    pub free_distance: u64,
    pub field: FieldChoice,
    /// Every field of prime characteristic below the search bound holding
    /// an element of order `n`, smallest first.
    pub admissible: Vec<FieldChoice>,
}

/// Smallest `n` with `r = max(ceil(R·n), floor(n/2) + 1)` and
/// `2(n - r) + 1 >= free_target`, under the characteristic constraint.
/// A characteristic-2 constraint restricts lengths to `2^i - 1`.
pub fn size_conv(
    rate: Rate,
    free_target: u64,
    constraint: CharConstraint,
    prime_bound: u64,
) -> Result<ConvSizing> {
    let half = free_target.saturating_sub(1).div_ceil(2).max(1);
    let from = (half * rate.den()).div_ceil(rate.den() - rate.num());
    let mersenne = constraint == CharConstraint::Characteristic(2);
    let dimension = |n: u64| rate.ceil_times(n).max(n / 2 + 1);
    let found = (from..)
        .take_while(|&n| n <= u32::MAX as u64)
        .filter(|&n| !mersenne || (n + 1).is_power_of_two())
        .find_map(|n| {
            let r = dimension(n);
            if r >= n || n - r < half {
                return None;
            }
            choose_field(n, constraint, false).map(|field| (n, r, field))
        });
    let (n, r, field) = found.ok_or_else(|| {
        Error::Unsatisfiable(format!(
            "no length reaches free distance {free_target} at rate {rate}"
        ))
    })?;
    Ok(ConvSizing {
        n,
        r,
        degree: n - r,
        free_distance: 2 * (n - r) + 1,
        field,
        admissible: admissible_fields(n, prime_bound),
    })
}

/// Dual generator coefficients; fails when the code has no control matrix.
pub fn conv_dual_generator(code: &ConvCode) -> Result<Vec<Matrix>> {
    if code.r() == code.n() {
        return Err(Error::MissingControlMatrix);
    }
    Ok(code.dual_generator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::design_lcd;

    fn ctx(p: u64, s: u32, n: usize) -> Arc<FourierContext> {
        Arc::new(FourierContext::new(Arc::new(Field::new(p, s).unwrap()), n).unwrap())
    }

    fn poly_product_is_zero(f: &Field, g: &[Matrix], h: &[Matrix]) -> bool {
        let cols = h[0].cols();
        let rows = g[0].rows();
        (0..g.len() + h.len() - 1).all(|d| {
            let mut acc = Matrix::zeros(rows, cols);
            for (i, gi) in g.iter().enumerate() {
                if d >= i && d - i < h.len() {
                    acc = acc.add(f, &gi.mul(f, &h[d - i]).unwrap()).unwrap();
                }
            }
            acc.is_zero()
        })
    }

    #[test]
    fn gsb_values() {
        assert_eq!(gsb(10, 6, 4), 9);
        assert_eq!(gsb(7, 3, 5), 14);
        assert_eq!(gsb(31, 17, 14), 29);
        assert_eq!(gsb(9, 4, 0), 6);
    }

    #[test]
    fn memory1_layout() {
        let c = ctx(2, 3, 7);
        let code = lift_memory1(&c, 4).unwrap();
        assert_eq!(code.params(), "(7,4,3;1,7)");
        assert_eq!(code.flags.lcd, Flag::Claimed);
        let b = code.coefficient(1);
        assert!(b.row(0).iter().all(|x| x.is_zero()));
        assert_eq!(b.row(1), c.row(4));
        let c10 = ctx(11, 1, 10);
        let code = lift_memory1(&c10, 6).unwrap();
        assert_eq!(code.params(), "(10,6,4;1,9)");
        assert_eq!(code.flags.lcd, Flag::False);
        assert!(matches!(
            lift_memory1(&c10, 5),
            Err(Error::RateNotAboveHalf { .. })
        ));
        assert!(matches!(
            lift_memory1(&c10, 10),
            Err(Error::DimensionOutOfRange { .. })
        ));
    }

    #[test]
    fn control_and_inverse_identities() {
        let cases: Vec<ConvCode> = vec![
            lift_memory1(&ctx(11, 1, 10), 6).unwrap(),
            lift_memory1(&ctx(2, 3, 7), 4).unwrap(),
            lift_dc_char2(&ctx(2, 5, 31), 8).unwrap(),
            lift_preset(&ctx(2, 3, 7), Preset::Mem2).unwrap(),
            lift_preset(&ctx(2, 3, 7), Preset::Mem3).unwrap(),
            lift_preset(&ctx(2, 3, 7), Preset::Repetition).unwrap(),
        ];
        for code in &cases {
            let f = code.field();
            let g = code.coefficients();
            assert!(
                poly_product_is_zero(f, &g, &code.control_coefficients()),
                "{}",
                code.params()
            );
            let k = code.right_inverse();
            let want = Matrix::identity(code.r()).scale(f, code.right_inverse_scalar());
            assert_eq!(g[0].mul(f, &k).unwrap(), want);
            for gt in &g[1..] {
                assert!(gt.mul(f, &k).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn dual_generator_of_seven_four() {
        let c = ctx(2, 3, 7);
        let code = lift_memory1(&c, 4).unwrap();
        let dual = conv_dual_generator(&code).unwrap();
        assert_eq!(dual.len(), 2);
        assert_eq!(dual[0], c.rows_matrix(&[6, 5, 4]));
        assert_eq!(dual[1], c.rows_matrix(&[3, 2, 1]));
    }

    #[test]
    fn dual_generator_of_pair_lift() {
        let c = ctx(2, 3, 7);
        let src = design_lcd(&c, 2).unwrap();
        let code = lift_memory1_lcd_source(&src).unwrap();
        assert_eq!(code.params(), "(7,5,2;1,5)");
        let dual = code.dual_generator();
        assert_eq!(dual[0], c.rows_matrix(&[5, 2]));
        assert_eq!(dual[1], c.rows_matrix(&[4, 3]));
    }

    #[test]
    fn pair_lift_parameters() {
        let c = ctx(2, 5, 31);
        assert_eq!(lift_dc_char2(&c, 8).unwrap().params(), "(31,17,14;1,29)");
        assert_eq!(lift_dc_char2(&c, 10).unwrap().params(), "(31,21,10;1,21)");
        assert_eq!(lift_dc_char2(&c, 12).unwrap().params(), "(31,25,6;1,13)");
        assert!(lift_dc_char2(&c, 7).is_err());
        assert!(matches!(
            lift_dc_char2(&ctx(3, 3, 13), 4),
            Err(Error::NotCharacteristicTwo(3))
        ));
    }

    #[test]
    fn presets() {
        let c = ctx(2, 3, 7);
        let want = [(3, 5, 2), (3, 4, 2), (2, 5, 3), (1, 6, 6)];
        for (p, (r, d, m)) in Preset::ALL.into_iter().zip(want) {
            let code = lift_preset(&c, p).unwrap();
            assert_eq!(
                (code.r(), code.degree(), code.memory()),
                (r, d, m),
                "{}",
                p.name()
            );
            assert_eq!(p.name().parse::<Preset>().unwrap(), p);
        }
        assert!(lift_preset(&ctx(11, 1, 10), Preset::Mem2).is_err());
    }

    #[test]
    fn plan_validation() {
        let c = ctx(2, 3, 7);
        assert!(lift_higher_memory(&c, 2, "0,2;1,3".parse().unwrap()).is_err());
        assert!(lift_higher_memory(&c, 2, "0,2,4;1,2,5,6".parse().unwrap()).is_err());
        assert!("0,x".parse::<RowPlan>().is_err());
        assert!("-,1".parse::<RowPlan>().is_err());
        let plan: RowPlan = "0,-,5;1,3;2,4,6".parse().unwrap();
        assert_eq!(plan.to_string(), "0,-,5;1,3;2,4,6");
    }

    #[test]
    fn encode_matches_polynomial_product() {
        let c = ctx(2, 3, 7);
        let code = lift_memory1(&c, 4).unwrap();
        // Row 0 of B is zero, row 1 of B is e_4.
        let msg = vec![
            vec![Gf::ONE, Gf::ZERO, Gf::ZERO, Gf::ZERO],
            vec![Gf::ZERO, Gf::ONE, Gf::ZERO, Gf::ZERO],
        ];
        let out = code.encode(&msg).unwrap();
        assert_eq!(out.len(), 3);
        assert_eq!(out[0], c.row(0));
        assert_eq!(out[1], c.row(1));
        assert_eq!(out[2], c.row(4));
    }

    #[test]
    fn sizing_rate_fifteen_sixteenths() {
        let rate: Rate = "15/16".parse().unwrap();
        let s = size_conv(rate, 61, CharConstraint::None, 1000).unwrap();
        assert_eq!((s.n, s.r, s.degree, s.free_distance), (480, 450, 30, 61));
        assert!(s.admissible.contains(&FieldChoice { p: 7, s: 4 }));
        assert!(s.admissible.iter().all(|f| f.p != 487));
        let s2 = size_conv(rate, 61, CharConstraint::Characteristic(2), 1000).unwrap();
        assert_eq!((s2.n, s2.r, s2.field), (511, 480, FieldChoice { p: 2, s: 9 }));
    }
}
