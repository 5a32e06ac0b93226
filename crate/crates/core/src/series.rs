//! Infinite families of code parameters whose rate and relative distance
//! converge to `R` and `1 - R`.
//!
//! Only parameters are produced; [`SeriesElement::instantiate`] builds the
//! actual code when the field is small enough.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::block::{design_dc, design_dc_hermitian, design_lcd, BlockCode, FieldChoice, QeccParams, Rate};
use crate::error::{Error, Result};
use crate::field::{gcd, is_prime, order_mod};
use crate::fourier::FourierContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Lengths coprime to `p` in increasing order over `GF(p^OrderMod(p, n))`.
    /// Without `p`, each length takes the smallest prime not dividing it.
    CharP(Option<u64>),
    /// `n = p - 1` over `GF(p)` for successive primes.
    PrimeFields,
    /// `n = 2^i - 1` over `GF(2^i)`.
    Char2Mersenne,
    /// `n = 2^i - 1` over `GF(2^(2i))`, Hermitian.
    HermitianChar2,
    /// `n = p - 1` over `GF(p^2)`, Hermitian.
    HermitianPrimeSq,
}

impl Family {
    pub fn is_hermitian(self) -> bool {
        matches!(self, Family::HermitianChar2 | Family::HermitianPrimeSq)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::CharP(_) => "char-p",
            Family::PrimeFields => "prime-fields",
            Family::Char2Mersenne => "char2-mersenne",
            Family::HermitianChar2 => "hermitian-char2",
            Family::HermitianPrimeSq => "hermitian-prime-sq",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.replace('_', "-").as_str() {
            "char-p" => Ok(Family::CharP(None)),
            "prime-fields" => Ok(Family::PrimeFields),
            "char2-mersenne" => Ok(Family::Char2Mersenne),
            "hermitian-char2" => Ok(Family::HermitianChar2),
            "hermitian-prime-sq" => Ok(Family::HermitianPrimeSq),
            _ => Err(Error::Invalid(format!("unknown series family `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesType {
    Dc,
    Lcd,
    /// Dual-containing codes reported with their CSS parameters.
    Qecc,
}

impl FromStr for SeriesType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SeriesType> {
        match s {
            "dc" => Ok(SeriesType::Dc),
            "lcd" => Ok(SeriesType::Lcd),
            "qecc" => Ok(SeriesType::Qecc),
            _ => Err(Error::Invalid(format!("unknown series type `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub family: Family,
    pub rate: Rate,
    pub code_type: SeriesType,
    /// First index: the exponent `i` for the characteristic-2 families, the
    /// smallest prime for the prime families, the smallest length for
    /// `CharP`. `None` picks the family default.
    pub start: Option<u64>,
}

impl SeriesSpec {
    pub fn new(family: Family, rate: Rate, code_type: SeriesType) -> SeriesSpec {
        SeriesSpec {
            family,
            rate,
            code_type,
            start: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let dual_containing = self.code_type != SeriesType::Lcd;
        if dual_containing && 2 * self.rate.num() < self.rate.den() {
            return Err(Error::Unsatisfiable(format!(
                "dual-containing series need rate at least 1/2, got {}",
                self.rate
            )));
        }
        if self.family.is_hermitian() && !dual_containing {
            return Err(Error::Unsatisfiable(
                "Hermitian families carry dual-containing codes".into(),
            ));
        }
        if let Family::CharP(Some(p)) = self.family {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(())
    }

    /// Dimension for length `n`: `floor(R·n)`, raised to `floor(n/2) + 1`
    /// for dual containment or to the next odd value for LCD.
    pub fn dimension(&self, n: u64) -> u64 {
        let r = self.rate.floor_times(n);
        match self.code_type {
            SeriesType::Dc | SeriesType::Qecc => r.max(n / 2 + 1).min(n),
            SeriesType::Lcd => {
                let r = r.max(1);
                if r % 2 == 1 {
                    r
                } else if r < n {
                    r + 1
                } else {
                    r - 1
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesElement {
    pub field: FieldChoice,
    pub n: u64,
    pub r: u64,
    pub d: u64,
    pub code_type: SeriesType,
    pub hermitian: bool,
    pub qecc: Option<QeccParams>,
}

impl SeriesElement {
    /// Builds the block code; the field must fit the arithmetic backend.
    pub fn instantiate(&self) -> Result<BlockCode> {
        let field = Arc::new(self.field.build()?);
        let (n, r) = (self.n as usize, self.r as usize);
        if self.hermitian {
            return design_dc_hermitian(field, n, r);
        }
        let ctx = Arc::new(FourierContext::new(field, n)?);
        match self.code_type {
            SeriesType::Dc | SeriesType::Qecc => design_dc(&ctx, r),
            SeriesType::Lcd => design_lcd(&ctx, (r - 1) / 2),
        }
    }
}

impl fmt::Display for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} FIELD {} {}",
            self.n, self.r, self.d, self.field.p, self.field.s
        )?;
        if let Some(q) = self.qecc {
            write!(f, " QECC {} {} {}", q.n, q.k, q.d)?;
        }
        Ok(())
    }
}

fn smallest_prime_not_dividing(n: u64) -> u64 {
    (2..)
        .find(|&p| is_prime(p) && !n.is_multiple_of(p))
        .expect("primes are unbounded")
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&p| is_prime(p))
}

/// `(n, field)` pairs of the family, in increasing length.
fn lengths(spec: &SeriesSpec) -> Box<dyn Iterator<Item = (u64, FieldChoice)>> {
    match spec.family {
        Family::Char2Mersenne | Family::HermitianChar2 => {
            let twice = u32::from(spec.family == Family::HermitianChar2) + 1;
            let start = spec.start.unwrap_or(2).max(2) as u32;
            Box::new((start..64).map(move |i| ((1u64 << i) - 1, FieldChoice { p: 2, s: twice * i })))
        }
        Family::PrimeFields | Family::HermitianPrimeSq => {
            let s = if spec.family == Family::HermitianPrimeSq {
                2
            } else {
                1
            };
            Box::new(primes_from(spec.start.unwrap_or(3).max(3)).map(move |p| (p - 1, FieldChoice { p, s })))
        }
        Family::CharP(fixed) => Box::new((spec.start.unwrap_or(2).max(2)..).filter_map(move |n| {
            let p = fixed.unwrap_or_else(|| smallest_prime_not_dividing(n));
            if gcd(p, n) != 1 {
                return None;
            }
            let s = order_mod(p, n).ok()?;
            Some((n, FieldChoice { p, s }))
        })),
    }
}

/// First `count` elements of the family.
pub fn enumerate(spec: &SeriesSpec, count: usize) -> Result<Vec<SeriesElement>> {
    spec.validate()?;
    let hermitian = spec.family.is_hermitian();
    Ok(lengths(spec)
        .take(count)
        .map(|(n, field)| {
            let r = spec.dimension(n);
            SeriesElement {
                field,
                n,
                r,
                d: n - r + 1,
                code_type: spec.code_type,
                hermitian,
                qecc: (spec.code_type == SeriesType::Qecc)
                    .then(|| QeccParams::from_dimensions(n as usize, r as usize, hermitian))
                    .flatten(),
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitRow {
    pub n: u64,
    pub r: u64,
    pub d: u64,
    /// `|r/n - R|`.
    pub rate_gap: f64,
    /// `|d/n - (1 - R)|`.
    pub rdist_gap: f64,
}

impl fmt::Display for LimitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {:.6} {:.6}",
            self.n, self.r, self.d, self.rate_gap, self.rdist_gap
        )
    }
}

/// Distance of each element's rate and relative distance from the limits.
pub fn limit_report(rate: Rate, elements: &[SeriesElement]) -> Vec<LimitRow> {
    let target = rate.as_f64();
    elements
        .iter()
        .map(|e| {
            let n = e.n as f64;
            LimitRow {
                n: e.n,
                r: e.r,
                d: e.d,
                rate_gap: (e.r as f64 / n - target).abs(),
                rdist_gap: (e.d as f64 / n - (1.0 - target)).abs(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{certify_dc, certify_lcd, InnerProduct};

    fn rate(s: &str) -> Rate {
        s.parse().unwrap()
    }

    #[test]
    fn mersenne_half() {
        let spec = SeriesSpec::new(Family::Char2Mersenne, rate("1/2"), SeriesType::Dc);
        let got: Vec<(u32, u64, u64, u64)> = enumerate(&spec, 3)
            .unwrap()
            .iter()
            .map(|e| (e.field.s, e.n, e.r, e.d))
            .collect();
        assert_eq!(got, vec![(2, 3, 2, 2), (3, 7, 4, 4), (4, 15, 8, 8)]);
    }

    #[test]
    fn hermitian_char2_three_quarters() {
        let mut spec = SeriesSpec::new(Family::HermitianChar2, rate("3/4"), SeriesType::Qecc);
        spec.start = Some(8);
        let e = enumerate(&spec, 1).unwrap()[0];
        assert_eq!((e.n, e.r, e.d), (255, 191, 65));
        assert_eq!(e.field, FieldChoice { p: 2, s: 16 });
        assert_eq!(e.to_string(), "255 191 65 FIELD 2 16 QECC 255 127 65");
    }

    #[test]
    fn prime_fields_three_quarters() {
        let mut spec = SeriesSpec::new(Family::PrimeFields, rate("3/4"), SeriesType::Dc);
        spec.start = Some(11);
        let e = enumerate(&spec, 1).unwrap()[0];
        assert_eq!((e.field.p, e.n, e.r, e.d), (11, 10, 7, 4));
    }

    #[test]
    fn limit_gaps_are_bounded() {
        let spec = SeriesSpec::new(Family::Char2Mersenne, rate("1/2"), SeriesType::Dc);
        for row in limit_report(spec.rate, &enumerate(&spec, 9).unwrap()) {
            assert!(row.rate_gap <= 1.0 / row.n as f64 + 1e-12);
            assert!(row.rdist_gap <= 1.0 / row.n as f64 + 1e-12);
        }
        let spec = SeriesSpec::new(Family::PrimeFields, rate("7/8"), SeriesType::Dc);
        for row in limit_report(spec.rate, &enumerate(&spec, 40).unwrap()) {
            assert!(row.rate_gap <= 8.0 / row.n as f64 + 1e-12, "{row}");
        }
    }

    #[test]
    fn single_row_report() {
        let spec = SeriesSpec::new(Family::PrimeFields, rate("3/4"), SeriesType::Lcd);
        assert_eq!(limit_report(spec.rate, &enumerate(&spec, 1).unwrap()).len(), 1);
    }

    #[test]
    fn invalid_combinations() {
        let half_below = SeriesSpec::new(Family::Char2Mersenne, rate("1/3"), SeriesType::Dc);
        assert!(matches!(enumerate(&half_below, 3), Err(Error::Unsatisfiable(_))));
        let herm_lcd = SeriesSpec::new(Family::HermitianChar2, rate("3/4"), SeriesType::Lcd);
        assert!(enumerate(&herm_lcd, 3).is_err());
        assert!(enumerate(
            &SeriesSpec::new(Family::CharP(Some(4)), rate("3/4"), SeriesType::Lcd),
            3
        )
        .is_err());
    }

    #[test]
    fn char_p_skips_multiples_and_picks_primes() {
        let spec = SeriesSpec::new(Family::CharP(Some(3)), rate("3/4"), SeriesType::Dc);
        let ns: Vec<u64> = enumerate(&spec, 5).unwrap().iter().map(|e| e.n).collect();
        assert_eq!(ns, vec![2, 4, 5, 7, 8]);
        let free = SeriesSpec::new(Family::CharP(None), rate("3/4"), SeriesType::Dc);
        let ps: Vec<u64> = enumerate(&free, 4).unwrap().iter().map(|e| e.field.p).collect();
        assert_eq!(ps, vec![3, 2, 3, 2]);
    }

    #[test]
    fn small_elements_certify() {
        for (family, ty) in [
            (Family::Char2Mersenne, SeriesType::Dc),
            (Family::Char2Mersenne, SeriesType::Lcd),
            (Family::PrimeFields, SeriesType::Dc),
            (Family::PrimeFields, SeriesType::Lcd),
            (Family::HermitianChar2, SeriesType::Qecc),
            (Family::HermitianPrimeSq, SeriesType::Dc),
        ] {
            for rate in [rate("1/2"), rate("3/4")] {
                let spec = SeriesSpec::new(family, rate, ty);
                for e in enumerate(&spec, 8).unwrap().into_iter().filter(|e| e.n <= 31) {
                    let code = e.instantiate().unwrap();
                    let ok = match (ty, e.hermitian) {
                        (SeriesType::Lcd, _) => certify_lcd(&code),
                        (_, true) => certify_dc(&code, InnerProduct::Hermitian),
                        (_, false) => certify_dc(&code, InnerProduct::Euclidean),
                    };
                    assert!(ok, "{family:?} {ty:?} {e}");
                }
            }
        }
    }
}
