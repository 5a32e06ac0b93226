//! Free distance of convolutional codes.
//!
//! Three oracles, tried in order:
//! - a shortest-path search over the encoder trellis, exact over all
//!   message degrees, when `q^δ · q^r` edges fit the budget;
//! - for memory-1 plans, a certificate that splits codewords by which rows
//!   carry the top coefficient and bounds each case with exact block
//!   distances of auxiliary codes, plus an exhaustive search of the single
//!   case those bounds do not settle;
//! - enumeration of all messages of degree at most `D`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::distance::{bch_bound, binomial, enumerate_min_weight, exact_min_distance, space_size};
use super::{Certainty, DistanceReport, Method};
use crate::conv::ConvCode;
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::matrix::{axpy, weight, Matrix};

/// Largest number of trellis states whose output tables are materialised.
const MAX_TRELLIS_STATES: u128 = 1 << 22;

/// Free distance with the strongest certainty the budget allows. The
/// bounded-degree fallback enumerates messages of degree at most
/// `max_degree`.
pub fn free_distance(code: &ConvCode, max_degree: usize, budget: u128) -> Result<DistanceReport> {
    let f = code.field();
    if code.memory() == 0 {
        let gen = code.coefficient(0);
        let (value, enumerated) = exact_min_distance(f, &gen, budget).ok_or(Error::BudgetExceeded {
            needed: space_size(f.order(), code.r()),
            budget,
        })?;
        return Ok(DistanceReport {
            value,
            certainty: Certainty::Exact,
            method: Method::Enumeration,
            enumerated,
        });
    }
    if trellis_edges(code) <= budget {
        return trellis_free_distance(code);
    }

    let cert = if code.memory() == 1 {
        Some(memory1_certificate(code, budget)?)
    } else {
        None
    };
    if let Some(c) = &cert {
        if c.is_exact() {
            return Ok(DistanceReport {
                value: c.lower,
                certainty: Certainty::Exact,
                method: Method::Structural,
                enumerated: c.work,
            });
        }
    }

    let bounded = min_weight_to_degree(code, max_degree, budget);
    match (bounded, cert) {
        (Ok((value, count)), cert) => {
            let work = count + cert.as_ref().map_or(0, |c| c.work);
            let proven = cert.is_some_and(|c| c.lower >= value);
            Ok(DistanceReport {
                value,
                certainty: if proven {
                    Certainty::Exact
                } else {
                    Certainty::ToDegree(max_degree)
                },
                method: Method::BoundedDegree,
                enumerated: work,
            })
        }
        (Err(_), Some(c)) => Ok(DistanceReport {
            value: c.lower,
            certainty: Certainty::LowerBound,
            method: Method::Structural,
            enumerated: c.work,
        }),
        (Err(e), None) => Err(e),
    }
}

/// Number of trellis edges, `q^δ · q^r`, saturating.
pub fn trellis_edges(code: &ConvCode) -> u128 {
    space_size(code.field().order(), code.degree() + code.r())
}

/// Minimum weight over nonzero messages of degree at most `degree`, by
/// enumeration of the `q^(r(degree+1))` message space.
pub fn min_weight_to_degree(code: &ConvCode, degree: usize, budget: u128) -> Result<(usize, u128)> {
    let f = code.field();
    let needed = space_size(f.order(), code.r() * (degree + 1));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(enumerate_min_weight(f, &sliding_generator(code, degree)))
}

/// Minimum weight over messages of exact degree `degree` with `P_0 ≠ 0`.
pub fn min_weight_of_degree(code: &ConvCode, degree: usize, budget: u128) -> Result<usize> {
    let f = code.field();
    let q = f.order();
    let r = code.r();
    let needed = space_size(q, r * (degree + 1));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let gen = sliding_generator(code, degree);
    let len = gen.cols();
    let rows = r * (degree + 1);
    let mut digits = vec![0u64; rows];
    let mut best = usize::MAX;
    let mut word = vec![Gf::ZERO; len];
    // Odometer over all messages; the scaling symmetry is not exploited here.
    'outer: loop {
        let nonzero = |block: usize| digits[block * r..(block + 1) * r].iter().any(|&d| d != 0);
        if nonzero(0) && nonzero(degree) {
            word.iter_mut().for_each(|x| *x = Gf::ZERO);
            for (i, &d) in digits.iter().enumerate() {
                if d != 0 {
                    axpy(f, &mut word, Gf(d as u32), gen.row(i));
                }
            }
            best = best.min(weight(&word));
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                continue 'outer;
            }
            *d = 0;
        }
        break;
    }
    Ok(best)
}

/// Generator of the block code `{(c_0, …, c_(D+μ))}` of all messages of
/// degree at most `D`; rows are ordered by message degree, so `P_0` leads.
fn sliding_generator(code: &ConvCode, degree: usize) -> Matrix {
    let n = code.n();
    let r = code.r();
    let coeffs = code.coefficients();
    let len = n * (degree + coeffs.len());
    let mut gen = Matrix::zeros(r * (degree + 1), len);
    for d in 0..=degree {
        for (t, g) in coeffs.iter().enumerate() {
            for k in 0..r {
                let row = gen.row_mut(d * r + k);
                row[(d + t) * n..(d + t + 1) * n].copy_from_slice(g.row(k));
            }
        }
    }
    gen
}

/// Table of `Σ digit_i · basis_i` over every base-`q` index, built from the
/// lowest nonzero digit so each entry costs one vector addition.
fn linear_table(f: &Field, basis: &[Vec<Gf>], n: usize) -> Vec<Gf> {
    let q = f.order() as usize;
    let size = q.pow(basis.len() as u32);
    let mut table = vec![Gf::ZERO; size * n];
    for idx in 1..size {
        let (mut pos, mut rest, mut place) = (0, idx, 1);
        while rest % q == 0 {
            rest /= q;
            pos += 1;
            place *= q;
        }
        let digit = rest % q;
        let prev = idx - digit * place;
        let (head, tail) = table.split_at_mut(idx * n);
        let out = &mut tail[..n];
        out.copy_from_slice(&head[prev * n..prev * n + n]);
        axpy(f, out, Gf(digit as u32), &basis[pos]);
    }
    table
}

/// Exact free distance by Dijkstra over the minimal encoder trellis.
///
/// The state holds, for each row `k` of degree `ν_k`, the last `ν_k` input
/// symbols (most recent first). Paths leave the zero state with a nonzero
/// input and the first return to the zero state closes a codeword.
pub fn trellis_free_distance(code: &ConvCode) -> Result<DistanceReport> {
    let f = code.field();
    let q = f.order();
    let n = code.n();
    let r = code.r();
    let states = space_size(q, code.degree());
    if states > MAX_TRELLIS_STATES || space_size(q, r) > MAX_TRELLIS_STATES {
        return Err(Error::BudgetExceeded {
            needed: states.saturating_mul(space_size(q, r)),
            budget: MAX_TRELLIS_STATES,
        });
    }
    let qu = q as usize;
    let degrees = code.plan().row_degrees();
    let coeffs = code.coefficients();

    // Digit offsets per row and the output row attached to each digit.
    let mut offsets = Vec::with_capacity(r);
    let mut state_basis = Vec::new();
    for (k, &nu) in degrees.iter().enumerate() {
        offsets.push(state_basis.len());
        state_basis.extend(coeffs[1..=nu].iter().map(|c| c.row(k).to_vec()));
    }
    let input_basis: Vec<Vec<Gf>> = (0..r).map(|k| coeffs[0].row(k).to_vec()).collect();
    let from_state = linear_table(f, &state_basis, n);
    let from_input = linear_table(f, &input_basis, n);

    let place: Vec<usize> = offsets.iter().map(|&o| qu.pow(o as u32)).collect();
    let inject: Vec<usize> = (0..qu.pow(r as u32))
        .map(|u| {
            let mut rest = u;
            let mut s = 0;
            for k in 0..r {
                if degrees[k] > 0 {
                    s += (rest % qu) * place[k];
                }
                rest /= qu;
            }
            s
        })
        .collect();
    let shift = |s: usize| -> usize {
        (0..r)
            .filter(|&k| degrees[k] > 0)
            .map(|k| {
                let block = (s / place[k]) % qu.pow(degrees[k] as u32);
                qu * (block % qu.pow(degrees[k] as u32 - 1)) * place[k]
            })
            .sum()
    };
    let edge_weight = |s: usize, u: usize| -> usize {
        let a = &from_state[s * n..s * n + n];
        let b = &from_input[u * n..u * n + n];
        a.iter()
            .zip(b)
            .filter(|(x, y)| f.add(**x, **y) != Gf::ZERO)
            .count()
    };

    let mut dist = vec![usize::MAX; states as usize];
    let mut heap = BinaryHeap::new();
    let mut best = usize::MAX;
    let mut edges: u128 = 0;
    for (u, &next) in inject.iter().enumerate().skip(1) {
        edges += 1;
        let w = edge_weight(0, u);
        if next == 0 {
            best = best.min(w);
        } else if w < dist[next] {
            dist[next] = w;
            heap.push(Reverse((w, next)));
        }
    }
    while let Some(Reverse((d, s))) = heap.pop() {
        if d >= best {
            break;
        }
        if d > dist[s] {
            continue;
        }
        let base = shift(s);
        for (u, &inj) in inject.iter().enumerate() {
            edges += 1;
            let w = d + edge_weight(s, u);
            let next = base + inj;
            if next == 0 {
                best = best.min(w);
            } else if w < dist[next] && w < best {
                dist[next] = w;
                heap.push(Reverse((w, next)));
            }
        }
    }
    Ok(DistanceReport {
        value: best,
        certainty: Certainty::Exact,
        method: Method::Trellis,
        enumerated: edges,
    })
}

/// Distance bounds of an auxiliary block code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lower: usize,
    /// Weight of an explicit codeword.
    pub upper: usize,
}

impl Bounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Bounds for the code spanned by Fourier rows `rows`: the run bound and an
/// explicit low-weight word first, exhaustive search only when they differ.
fn row_code_bounds(code: &ConvCode, rows: &[usize], budget: u128, work: &mut u128) -> Bounds {
    let ctx = code.ctx();
    let f = ctx.field();
    let n = ctx.n();
    let gen = ctx.rows_matrix(rows);
    let lower = bch_bound(n, rows);
    // A nonzero word vanishing on the first k - 1 coordinates.
    let k = rows.len();
    let head: Vec<usize> = (0..k - 1).collect();
    let x = gen.select_cols(&head).transpose().null_space(f);
    let word = gen.vec_mul(f, x.row(0)).expect("shapes agree");
    let upper = weight(&word);
    if lower >= upper {
        return Bounds { lower: upper, upper };
    }
    match exact_min_distance(f, &gen, budget) {
        Some((d, nodes)) => {
            *work += nodes;
            Bounds { lower: d, upper: d }
        }
        None => Bounds { lower, upper },
    }
}

/// Certificate for a memory-1 code `G[z] = A + Bz`.
///
/// Rows split into `Z` (no `z` term) and `N` (with one). For a message with
/// `P_0 ≠ 0` and top coefficient `P_D`:
/// - `D = 0`: weight `≥ d(A_Z)` if `P_0` lives on `Z`, else `≥ d(A) + d(B_N)`;
/// - `P_D` touches `N`: the last output block is a nonzero `B_N` word, so
///   weight `≥ d(A) + d(B_N)`;
/// - `D = 1`, `P_1` on `Z`: the "coupled" case `(P_0 A, P_1 A_Z + P_0 B)`,
///   at least `min(2 d(A_Z), d(A) + d(W))` with `W = [A_Z; B_N]`, and
///   settled exactly by [`coupled_minimum`] when that is not enough;
/// - `D ≥ 2`, `P_D` on `Z`: `≥ d(A) + d(W) + 1` when the second output block
///   is nonzero, else the word splits as `P_0 A_Z` plus a shifted codeword,
///   `≥ d(A_Z) + d(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Memory1Certificate {
    pub a: Bounds,
    pub b: Bounds,
    pub z: Option<Bounds>,
    pub w: Option<Bounds>,
    /// Exact coupled minimum when the split search ran.
    pub coupled: Option<usize>,
    /// Valid for every nonzero codeword.
    pub lower: usize,
    /// Weight of an explicit codeword, when one was produced.
    pub upper: Option<usize>,
    pub work: u128,
}

impl Memory1Certificate {
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }
}

pub fn memory1_certificate(code: &ConvCode, budget: u128) -> Result<Memory1Certificate> {
    if code.memory() != 1 {
        return Err(Error::InvalidPlan("certificate needs memory 1".into()));
    }
    let plan = code.plan();
    let leading = plan.leading();
    let zero_rows: Vec<usize> = (0..code.r()).filter(|&k| plan.entry(k, 1).is_none()).collect();
    let tail_rows: Vec<usize> = (0..code.r()).filter_map(|k| plan.entry(k, 1)).collect();
    let z_rows: Vec<usize> = zero_rows.iter().map(|&k| leading[k]).collect();

    let mut work = 0;
    let a = row_code_bounds(code, &leading, budget, &mut work);
    let b = row_code_bounds(code, &tail_rows, budget, &mut work);
    let case_n = a.lower + b.lower;
    if z_rows.is_empty() {
        return Ok(Memory1Certificate {
            a,
            b,
            z: None,
            w: None,
            coupled: None,
            lower: case_n,
            upper: None,
            work,
        });
    }
    let z = row_code_bounds(code, &z_rows, budget, &mut work);
    let w_rows: Vec<usize> = z_rows.iter().chain(&tail_rows).copied().collect();
    let w = row_code_bounds(code, &w_rows, budget, &mut work);

    let goal = [z.lower, case_n, a.lower + w.lower + 1, a.lower + z.lower]
        .into_iter()
        .min()
        .expect("nonempty");
    let mut upper = z.upper;
    let mut coupled = None;
    let coupled_floor = (2 * z.lower).min(a.lower + w.lower);
    let lower = if coupled_floor >= goal {
        goal
    } else {
        match coupled_minimum(code, &zero_rows, goal, a.lower, budget) {
            Some((m, nodes)) => {
                work += nodes;
                coupled = Some(m);
                upper = upper.min(m);
                goal.min(m)
            }
            None => coupled_floor,
        }
    };
    Ok(Memory1Certificate {
        a,
        b,
        z: Some(z),
        w: Some(w),
        coupled,
        lower,
        upper: Some(upper),
        work,
    })
}

/// Exact minimum of the coupled words `(P_0 A, P_1,Z A_Z + P_0 B)` when it
/// is below `goal`; otherwise some value `≥ goal`.
///
/// A word with `P_0 ≠ 0` and weight `< goal` has left half of weight at least
/// `left_floor`, so its right half vanishes on some set `S` of
/// `n - (goal - 1 - left_floor)` coordinates. For each such `S` the words
/// vanishing there form a subcode that is enumerated in full. Words with
/// `P_0 = 0` are shifted degree-0 words and are covered elsewhere.
fn coupled_minimum(
    code: &ConvCode,
    zero_rows: &[usize],
    goal: usize,
    left_floor: usize,
    budget: u128,
) -> Option<(usize, u128)> {
    let f = code.field();
    let n = code.n();
    let g0 = code.coefficient(0);
    let g1 = code.coefficient(1);
    let rows = (0..code.r()).map(|k| [g0.row(k), g1.row(k)].concat()).chain(
        zero_rows
            .iter()
            .map(|&k| [vec![Gf::ZERO; n], g0.row(k).to_vec()].concat()),
    );
    let gen = Matrix::from_rows(2 * n, rows).expect("rows of length 2n");
    if goal <= left_floor + 1 {
        return Some((goal, 0));
    }
    let slack = goal - 1 - left_floor;
    if slack >= n {
        return None;
    }
    // Each vanishing set costs one elimination on a matrix with 2n columns.
    let sets = binomial(n, slack);
    if sets.saturating_mul(2 * n as u128) > budget {
        return None;
    }
    let mut best = usize::MAX;
    let mut work = 0u128;
    let mut out = vec![0usize; slack];
    // Enumerate the complement `T` (|T| = slack) of the vanishing set.
    let mut stack: Vec<usize> = (0..slack).collect();
    loop {
        out.copy_from_slice(&stack);
        let vanish: Vec<usize> = (0..n).filter(|j| !out.contains(j)).map(|j| n + j).collect();
        let kernel = gen.select_cols(&vanish).transpose().null_space(f);
        work += 1;
        if kernel.rows() > 0 {
            if space_size(f.order(), kernel.rows()) > budget {
                return None;
            }
            let sub = kernel.mul(f, &gen).expect("shapes agree");
            let (d, count) = enumerate_min_weight(f, &sub);
            work += count;
            best = best.min(d);
        }
        // Next combination in lexicographic order.
        let mut i = slack;
        loop {
            if i == 0 {
                return Some((best.min(goal), work));
            }
            i -= 1;
            if stack[i] < n - slack + i {
                stack[i] += 1;
                for j in i + 1..slack {
                    stack[j] = stack[j - 1] + 1;
                }
                break;
            }
        }
        if work > budget {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::design_lcd;
    use crate::conv::{lift_memory1, lift_memory1_lcd_source, lift_preset, Preset};
    use crate::field::Field;
    use crate::fourier::FourierContext;
    use std::sync::Arc;

    fn ctx(p: u64, s: u32, n: usize) -> Arc<FourierContext> {
        Arc::new(FourierContext::new(Arc::new(Field::new(p, s).unwrap()), n).unwrap())
    }

    #[test]
    fn memory1_n7_trellis() {
        let c = ctx(2, 3, 7);
        let code = lift_memory1(&c, 4).unwrap();
        let rep = free_distance(&code, 1, 100_000_000).unwrap();
        assert_eq!(
            (rep.value, rep.certainty, rep.method),
            (7, Certainty::Exact, Method::Trellis)
        );
    }

    #[test]
    fn trellis_agrees_with_certificate_and_enumeration() {
        let c = ctx(2, 3, 7);
        for code in [
            lift_memory1(&c, 4).unwrap(),
            lift_memory1_lcd_source(&design_lcd(&c, 2).unwrap()).unwrap(),
        ] {
            let t = trellis_free_distance(&code).unwrap().value;
            let cert = memory1_certificate(&code, u128::MAX).unwrap();
            assert!(cert.is_exact(), "{cert:?}");
            assert_eq!(cert.lower, t);
            let (e, _) = min_weight_to_degree(&code, 1, u128::MAX).unwrap();
            assert_eq!(e, t);
        }
    }

    // Frozen from an independent brute-force enumeration of all messages of
    // degree at most 1 (the minima are attained at degree 1 for the first two).
    #[test]
    fn presets() {
        let c = ctx(2, 3, 7);
        let d = |p| trellis_free_distance(&lift_preset(&c, p).unwrap()).unwrap().value;
        assert_eq!(d(Preset::Mem2), 13);
        assert_eq!(d(Preset::Mem3), 20);
        assert_eq!(d(Preset::Mem2Lcd), 7);
        assert_eq!(d(Preset::Repetition), 49);
    }

    #[test]
    fn degree_zero_words_do_not_reach_the_minimum_for_presets() {
        let c = ctx(2, 3, 7);
        let code = lift_preset(&c, Preset::Mem2).unwrap();
        assert_eq!(min_weight_of_degree(&code, 0, u128::MAX).unwrap(), 14);
        assert_eq!(min_weight_of_degree(&code, 1, u128::MAX).unwrap(), 13);
    }

    #[test]
    fn weight_floor_for_degree_zero_messages() {
        let c = ctx(2, 3, 7);
        for r in 4..7 {
            let code = lift_memory1(&c, r).unwrap();
            let w = min_weight_of_degree(&code, 0, u128::MAX).unwrap();
            assert!(w > 2 * (7 - r), "r = {r}: {w}");
        }
    }

    #[test]
    fn budget_refusal() {
        let c = ctx(2, 3, 7);
        let code = lift_memory1(&c, 4).unwrap();
        assert!(matches!(
            min_weight_to_degree(&code, 1, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
