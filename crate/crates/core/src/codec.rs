//! Encoding and bounded-distance syndrome decoding for Fourier-row codes
//! whose rows form an arithmetic progression.
//!
//! With rows `s, s+k, …, s+(r-1)k` the unused indices continue the same
//! progression, so the syndromes `S_t = y·f_(s+(r+t)k)` for
//! `t = 0..n-r` equal `Σ_u Y_u X_u^t` with locators `X_u = ω^(-ku)` and
//! `Y_u = e_u·ω^(-(s+rk)u)`. The locator polynomial comes from
//! Berlekamp–Massey, its roots from a search over `ω^(ku)`, and the
//! magnitudes from a Vandermonde solve.

use rand::seq::index::sample;
use rand::Rng;

use crate::block::BlockCode;
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::matrix::{dot, Matrix};

/// `message · A`.
pub fn encode(code: &BlockCode, message: &[Gf]) -> Result<Vec<Gf>> {
    if message.len() != code.r() {
        return Err(Error::LengthMismatch {
            expected: code.r(),
            got: message.len(),
        });
    }
    code.generator().vec_mul(code.field(), message)
}

/// Message of a codeword: `m_i = (c·f_(sel_i))·n⁻¹`. Does not check that
/// `word` is a codeword.
pub fn extract_message(code: &BlockCode, word: &[Gf]) -> Result<Vec<Gf>> {
    check_len(code, word)?;
    let f = code.field();
    let ctx = code.ctx();
    let n_inv = f.inv(ctx.n_scalar())?;
    Ok(code
        .selection()
        .iter()
        .map(|&i| f.mul(dot(f, word, ctx.inv_col(i)), n_inv))
        .collect())
}

fn check_len(code: &BlockCode, word: &[Gf]) -> Result<()> {
    if word.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: word.len(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub message: Vec<Gf>,
    pub codeword: Vec<Gf>,
    /// Positions that were corrected, ascending.
    pub error_positions: Vec<usize>,
}

/// Syndrome decoder bound to one code.
pub struct Decoder<'a> {
    code: &'a BlockCode,
    start: usize,
    step: usize,
}

impl<'a> Decoder<'a> {
    pub fn new(code: &'a BlockCode) -> Result<Decoder<'a>> {
        let (start, step) = code
            .progression()
            .ok_or_else(|| Error::DecodingFailure("rows are not an arithmetic progression".into()))?;
        Ok(Decoder { code, start, step })
    }

    pub fn code(&self) -> &BlockCode {
        self.code
    }

    /// Errors correctable by the decoder, `floor((n - r)/2)`.
    pub fn capability(&self) -> usize {
        self.code.capability()
    }

    /// `S_t = y·f_(s+(r+t)k)` for `t = 0..n-r`; all zero exactly on codewords.
    pub fn syndromes(&self, received: &[Gf]) -> Result<Vec<Gf>> {
        check_len(self.code, received)?;
        let ctx = self.code.ctx();
        let f = ctx.field();
        let (n, r) = (self.code.n(), self.code.r());
        Ok((0..n - r)
            .map(|t| dot(f, received, ctx.inv_col(self.start + (r + t) * self.step)))
            .collect())
    }

    pub fn decode(&self, received: &[Gf]) -> Result<Decoded> {
        let code = self.code;
        let ctx = code.ctx();
        let f = ctx.field();
        let (n, r) = (code.n(), code.r());
        let syn = self.syndromes(received)?;
        let mut word = received.to_vec();
        let mut positions = Vec::new();

        if syn.iter().any(|s| !s.is_zero()) {
            let locator = berlekamp_massey(f, &syn);
            let nu = locator.len() - 1;
            if nu > self.capability() {
                return Err(Error::DecodingFailure(format!(
                    "locator degree {nu} exceeds capability {}",
                    self.capability()
                )));
            }
            positions = (0..n)
                .filter(|&u| eval(f, &locator, ctx.omega_pow(self.step * u)).is_zero())
                .collect();
            if positions.len() != nu {
                return Err(Error::DecodingFailure(format!(
                    "locator of degree {nu} has {} roots",
                    positions.len()
                )));
            }
            // Row u of the system: X_u^t for t = 0..ν.
            let system = Matrix::from_fn(nu, nu, |i, t| {
                ctx.omega_pow(n - (self.step * positions[i] * t) % n)
            });
            let y = system
                .solve_left(f, &syn[..nu])
                .ok_or_else(|| Error::DecodingFailure("singular magnitude system".into()))?;
            let twist = self.start + r * self.step;
            for (&u, &yu) in positions.iter().zip(&y) {
                let e = f.mul(yu, ctx.omega_pow(twist * u));
                word[u] = f.sub(word[u], e);
            }
            if self.syndromes(&word)?.iter().any(|s| !s.is_zero()) {
                return Err(Error::DecodingFailure("corrected word is not a codeword".into()));
            }
        }
        Ok(Decoded {
            message: extract_message(code, &word)?,
            codeword: word,
            error_positions: positions,
        })
    }
}

/// Decodes `received` to a message; see [`Decoder::decode`].
pub fn decode(code: &BlockCode, received: &[Gf]) -> Result<Vec<Gf>> {
    Ok(Decoder::new(code)?.decode(received)?.message)
}

/// Connection polynomial `Λ(x) = 1 + Λ_1 x + … + Λ_L x^L` of the shortest
/// linear recurrence generating `s`, with `Λ.len() = L + 1`.
pub fn berlekamp_massey(f: &Field, s: &[Gf]) -> Vec<Gf> {
    let mut c = vec![Gf::ONE];
    let mut b = vec![Gf::ONE];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last = Gf::ONE;
    for i in 0..s.len() {
        let d = (1..=len).fold(s[i], |acc, j| {
            f.add(acc, f.mul(c.get(j).copied().unwrap_or(Gf::ZERO), s[i - j]))
        });
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = f.mul(d, f.inv_nonzero(last));
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, Gf::ZERO);
        }
        for (j, &bj) in b.iter().enumerate() {
            c[j + shift] = f.sub(c[j + shift], f.mul(coef, bj));
        }
        if 2 * len <= i {
            len = i + 1 - len;
            b = prev;
            last = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(len + 1, Gf::ZERO);
    c
}

fn eval(f: &Field, poly: &[Gf], x: Gf) -> Gf {
    poly.iter()
        .rev()
        .fold(Gf::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Adds `count` errors with uniformly random positions and nonzero values.
pub fn inject_errors<R: Rng>(f: &Field, word: &mut [Gf], count: usize, rng: &mut R) -> Vec<usize> {
    let mut positions = sample(rng, word.len(), count).into_vec();
    positions.sort_unstable();
    for &p in &positions {
        let e = Gf(rng.gen_range(1..f.order()) as u32);
        word[p] = f.add(word[p], e);
    }
    positions
}

/// Uniformly random message of length `r`.
pub fn random_message<R: Rng>(f: &Field, r: usize, rng: &mut R) -> Vec<Gf> {
    (0..r).map(|_| Gf(rng.gen_range(0..f.order()) as u32)).collect()
}
