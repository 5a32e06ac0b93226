//! Oracles that upgrade claimed flags to certified: exact minimum distance,
//! free distance, dual containment and trivial intersection with the dual.

pub mod distance;
pub mod free;

use std::fmt;

use crate::block::{BlockCode, Flag};
use crate::conv::ConvCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub use free::{free_distance, min_weight_to_degree};

/// Default enumeration budget (codewords, search nodes or trellis edges).
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certainty {
    Exact,
    /// Minimum over all messages of degree at most `D`; the free distance is
    /// at most this value.
    ToDegree(usize),
    /// Proven lower bound valid for all messages.
    LowerBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Enumeration,
    ColumnDependence,
    Trellis,
    Structural,
    BoundedDegree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub value: usize,
    pub certainty: Certainty,
    pub method: Method,
    /// Codewords, search nodes or trellis edges examined.
    pub enumerated: u128,
}

impl DistanceReport {
    pub fn is_exact(&self) -> bool {
        self.certainty == Certainty::Exact
    }
}

impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.certainty {
            Certainty::Exact => write!(f, "DIST {} exact", self.value),
            Certainty::ToDegree(d) => write!(f, "DIST {} lb@{}", self.value, d),
            Certainty::LowerBound => write!(f, "DIST {} lb", self.value),
        }
    }
}

/// Exact minimum distance of a block code: message enumeration when
/// `q^r <= budget`, otherwise column dependence of the check matrix when its
/// search fits the budget.
pub fn min_distance(code: &BlockCode, budget: u128) -> Result<DistanceReport> {
    let f = code.field();
    let gen = code.generator();
    let needed = distance::space_size(f.order(), code.r());
    if needed <= budget {
        let (value, enumerated) = distance::enumerate_min_weight(f, &gen);
        return Ok(DistanceReport {
            value,
            certainty: Certainty::Exact,
            method: Method::Enumeration,
            enumerated,
        });
    }
    // Fourier-row codes are cyclic, so the dependence search anchors at 0.
    let singleton = code.design_distance();
    let work = distance::dependence_work(code.n(), singleton, true);
    if work > budget {
        return Err(Error::BudgetExceeded {
            needed: needed.min(work),
            budget,
        });
    }
    let check = code.dual_generator();
    let (d, nodes) = distance::smallest_dependent_set(f, &check, singleton + 1, true);
    Ok(DistanceReport {
        value: d.unwrap_or(singleton),
        certainty: Certainty::Exact,
        method: Method::ColumnDependence,
        enumerated: nodes,
    })
}

/// Budget-free distance from the spectral run bound. Exact whenever the
/// bound reaches `n - r + 1` (it can never exceed it), which holds for every
/// arithmetic-progression selection; a lower bound otherwise.
pub fn structural_distance(code: &BlockCode) -> DistanceReport {
    let singleton = code.design_distance();
    let bound = distance::bch_bound(code.n(), code.selection()).min(singleton);
    DistanceReport {
        value: bound,
        certainty: if bound == singleton {
            Certainty::Exact
        } else {
            Certainty::LowerBound
        },
        method: Method::Structural,
        enumerated: 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerProduct {
    Euclidean,
    Hermitian,
}

fn spans(f: &crate::field::Field, gen: &Matrix, rows: &Matrix) -> bool {
    let base = gen.rank(f);
    gen.stack(rows).map(|m| m.rank(f) == base).unwrap_or(false)
}

/// True iff every row of the dual generator (conjugated by `x -> x^l` for
/// the Hermitian form over GF(l^2)) lies in the row space of the generator.
pub fn certify_dc(code: &BlockCode, ip: InnerProduct) -> bool {
    let f = code.field();
    let dual = code.dual_generator();
    let dual = match ip {
        InnerProduct::Euclidean => dual,
        InnerProduct::Hermitian => match f.conjugation_exponent() {
            Some(l) => dual.map(|x| f.frobenius(x, l)),
            None => return false,
        },
    };
    spans(f, &code.generator(), &dual)
}

/// True iff the code meets its dual trivially: `[A; dual]` has rank `n`.
pub fn certify_lcd(code: &BlockCode) -> bool {
    let f = code.field();
    code.generator()
        .stack(&code.dual_generator())
        .map(|m| m.rank(f) == code.n())
        .unwrap_or(false)
}

/// Annihilation `A · check = 0`.
pub fn check_annihilation(code: &BlockCode) -> bool {
    let f = code.field();
    code.generator()
        .mul(f, &code.check())
        .map(|m| m.is_zero())
        .unwrap_or(false)
}

/// Outcome of checking one claimed flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCheck {
    pub name: &'static str,
    pub claimed: bool,
    /// `None` when the oracle could not run within budget.
    pub holds: Option<bool>,
}

impl FlagCheck {
    pub fn failed(&self) -> bool {
        self.claimed && self.holds == Some(false)
    }
}

fn settle(flag: &mut Flag, holds: Option<bool>) {
    match (holds, *flag) {
        (Some(true), Flag::Claimed) => *flag = Flag::Certified,
        (Some(false), Flag::Claimed | Flag::Certified) => *flag = Flag::False,
        _ => {}
    }
}

/// Block certification: distance (exhaustive within budget, structural
/// beyond it), dual containment under
/// both forms and LCD. Claimed flags are upgraded or cleared.
pub struct BlockVerdict {
    pub distance: Result<DistanceReport>,
    pub checks: Vec<FlagCheck>,
}

impl BlockVerdict {
    /// True when no claimed flag was refuted.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.failed())
    }
}

pub fn certify_block(code: &mut BlockCode, budget: u128) -> BlockVerdict {
    let distance = match min_distance(code, budget) {
        Err(Error::BudgetExceeded { .. }) => Ok(structural_distance(code)),
        other => other,
    };
    let mds = distance
        .as_ref()
        .ok()
        .filter(|d| d.is_exact())
        .map(|d| d.value == code.design_distance());
    let dc = certify_dc(code, InnerProduct::Euclidean);
    let hdc = certify_dc(code, InnerProduct::Hermitian);
    let lcd = certify_lcd(code);
    let flags = &mut code.flags;
    let checks = vec![
        FlagCheck {
            name: "mds",
            claimed: flags.mds.is_set(),
            holds: mds,
        },
        FlagCheck {
            name: "dc",
            claimed: flags.dc_euclidean.is_set(),
            holds: Some(dc),
        },
        FlagCheck {
            name: "hdc",
            claimed: flags.dc_hermitian.is_set(),
            holds: Some(hdc),
        },
        FlagCheck {
            name: "lcd",
            claimed: flags.lcd.is_set(),
            holds: Some(lcd),
        },
    ];
    settle(&mut flags.mds, mds);
    settle(&mut flags.dc_euclidean, Some(dc));
    settle(&mut flags.dc_hermitian, Some(hdc));
    settle(&mut flags.lcd, Some(lcd));
    BlockVerdict { distance, checks }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvType {
    Dc,
    Lcd,
}

fn nonzero_rows(m: &Matrix) -> Matrix {
    let idx: Vec<usize> = (0..m.rows())
        .filter(|&i| m.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    m.select_rows(&idx)
}

fn meets_trivially(f: &crate::field::Field, a: &Matrix, b: &Matrix) -> bool {
    let (a, b) = (nonzero_rows(a), nonzero_rows(b));
    if a.rows() == 0 || b.rows() == 0 {
        return true;
    }
    a.stack(&b)
        .map(|m| m.rank(f) == a.rank(f) + b.rank(f))
        .unwrap_or(false)
}

/// `lcd`: coefficient-wise trivial intersection of `G_t` with the dual
/// generator's `D_t` for every `t`. `dc`: a constant `K` with
/// `K·G[z] = D[z]`, i.e. every row of `[D_0 | D_1 | …]` lies in the row
/// space of `[G_0 | G_1 | …]`.
pub fn certify_conv_type(code: &ConvCode, kind: ConvType) -> bool {
    if code.r() == code.n() {
        return kind == ConvType::Dc;
    }
    let f = code.field();
    let mut g = code.coefficients();
    let mut d = code.dual_generator();
    let len = g.len().max(d.len());
    let n = code.n();
    g.resize(len, Matrix::zeros(code.r(), n));
    d.resize(len, Matrix::zeros(d[0].rows(), n));
    match kind {
        ConvType::Lcd => g.iter().zip(&d).all(|(gt, dt)| meets_trivially(f, gt, dt)),
        ConvType::Dc => {
            let hcat = |blocks: &[Matrix]| {
                blocks[1..]
                    .iter()
                    .fold(blocks[0].clone(), |acc, b| acc.hcat(b).expect("equal heights"))
            };
            spans(f, &hcat(&g), &hcat(&d))
        }
    }
}

/// `G[z]·Hᵀ[z] = 0` and `G[z]·K = c·I` coefficient-wise.
pub fn check_conv_identities(code: &ConvCode) -> bool {
    let f = code.field();
    let g = code.coefficients();
    let h = code.control_coefficients();
    let rows = code.r();
    let cols = h[0].cols();
    let control_ok = (0..g.len() + h.len() - 1).all(|deg| {
        let mut acc = Matrix::zeros(rows, cols);
        for (i, gi) in g.iter().enumerate() {
            if deg >= i && deg - i < h.len() {
                acc = acc
                    .add(f, &gi.mul(f, &h[deg - i]).expect("shapes agree"))
                    .expect("shapes agree");
            }
        }
        acc.is_zero()
    });
    let k = code.right_inverse();
    let want = Matrix::identity(rows).scale(f, code.right_inverse_scalar());
    let inverse_ok = g.iter().enumerate().all(|(t, gt)| {
        let prod = gt.mul(f, &k).expect("shapes agree");
        if t == 0 {
            prod == want
        } else {
            prod.is_zero()
        }
    });
    control_ok && inverse_ok && !code.right_inverse_scalar().is_zero()
}

pub struct ConvVerdict {
    pub distance: Result<DistanceReport>,
    pub identities: bool,
    pub checks: Vec<FlagCheck>,
}

impl ConvVerdict {
    pub fn passed(&self) -> bool {
        self.identities && self.checks.iter().all(|c| !c.failed())
    }
}

/// Convolutional certification: structural identities, free distance
/// against the GSB, and the claimed type flags.
pub fn certify_conv(code: &mut ConvCode, max_degree: usize, budget: u128) -> ConvVerdict {
    let identities = check_conv_identities(code);
    let distance = free_distance(code, max_degree, budget);
    let gsb = code.gsb();
    let mds = match &distance {
        Ok(d) if d.is_exact() => Some(d.value == gsb),
        Ok(d) if d.certainty == Certainty::LowerBound && d.value >= gsb => Some(true),
        _ => None,
    };
    let dc = certify_conv_type(code, ConvType::Dc);
    let lcd = certify_conv_type(code, ConvType::Lcd);
    let flags = &mut code.flags;
    let checks = vec![
        FlagCheck {
            name: "mds",
            claimed: flags.mds_conv.is_set(),
            holds: mds,
        },
        FlagCheck {
            name: "dc",
            claimed: flags.dc.is_set(),
            holds: Some(dc),
        },
        FlagCheck {
            name: "lcd",
            claimed: flags.lcd.is_set(),
            holds: Some(lcd),
        },
    ];
    settle(&mut flags.mds_conv, mds);
    settle(&mut flags.dc, Some(dc));
    settle(&mut flags.lcd, Some(lcd));
    ConvVerdict {
        distance,
        identities,
        checks,
    }
}
