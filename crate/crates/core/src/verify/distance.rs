//! Exact minimum distance of linear block codes.
//!
//! Two exhaustive strategies:
//! - message enumeration over projective representatives (first nonzero
//!   coordinate equal to one), cost `(q^k - 1)/(q - 1)` codewords;
//! - column dependence: `d` is the size of the smallest linearly dependent
//!   set of columns of a check matrix, found by depth-first search with an
//!   incremental echelon basis. For cyclic codes every orbit meets column 0,
//!   so the search may anchor there.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::field::{Field, Gf};
use crate::matrix::{axpy, weight, Matrix};

/// Number of nonzero codewords, up to scaling, for a `k`-dimensional code.
pub fn projective_count(q: u64, k: usize) -> u128 {
    (0..k).fold(0u128, |acc, _| acc.saturating_mul(q as u128).saturating_add(1))
}

/// `q^k`, saturating.
pub fn space_size(q: u64, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(q as u128))
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

/// Minimum weight over all nonzero `x·gen`, by enumeration. Returns the
/// weight and the number of codewords evaluated.
pub fn enumerate_min_weight(f: &Field, gen: &Matrix) -> (usize, u128) {
    let k = gen.rows();
    let n = gen.cols();
    if k == 0 {
        return (0, 0);
    }
    let q = f.order();
    let best = AtomicUsize::new(n + 1);
    let count = AtomicU64::new(0);

    // A shard fixes the leading coordinate and up to `head` following digits.
    let mut shards: Vec<(usize, u64, usize)> = Vec::new();
    for lead in 0..k {
        let tail = k - 1 - lead;
        let mut head = 0;
        while head < tail && space_size(q, head) < 64 {
            head += 1;
        }
        let prefixes = space_size(q, head) as u64;
        shards.extend((0..prefixes).map(|v| (lead, v, head)));
    }

    shards.par_iter().for_each(|&(lead, prefix, head)| {
        let mut word = gen.row(lead).to_vec();
        let mut v = prefix;
        for j in 0..head {
            let digit = Gf((v % q) as u32);
            v /= q;
            axpy(f, &mut word, digit, gen.row(lead + 1 + j));
        }
        let free: Vec<usize> = (lead + 1 + head..k).collect();
        let mut digits = vec![0u32; free.len()];
        let mut local_best = weight(&word);
        let mut local_count = 1u64;
        'odometer: loop {
            let mut pos = 0;
            loop {
                if pos == free.len() {
                    break 'odometer;
                }
                let row = gen.row(free[pos]);
                let old = Gf(digits[pos]);
                if (digits[pos] as u64) + 1 < q {
                    digits[pos] += 1;
                    let delta = f.sub(Gf(digits[pos]), old);
                    axpy(f, &mut word, delta, row);
                    break;
                }
                digits[pos] = 0;
                axpy(f, &mut word, f.neg(old), row);
                pos += 1;
            }
            local_count += 1;
            let w = weight(&word);
            if w < local_best {
                local_best = w;
            }
        }
        best.fetch_min(local_best, Ordering::Relaxed);
        count.fetch_add(local_count, Ordering::Relaxed);
    });
    (best.into_inner(), count.into_inner() as u128)
}

/// Upper bound on the number of search nodes of [`smallest_dependent_set`].
pub fn dependence_work(n: usize, depth: usize, anchored: bool) -> u128 {
    if anchored {
        (0..depth).map(|t| binomial(n - 1, t)).sum()
    } else {
        (1..=depth).map(|t| binomial(n, t)).sum()
    }
}

struct Echelon {
    basis: Vec<(usize, Vec<Gf>)>,
}

impl Echelon {
    /// Reduces `v` against the basis; returns `None` when `v` lies in the span.
    fn reduce(&self, f: &Field, mut v: Vec<Gf>) -> Option<(usize, Vec<Gf>)> {
        for (p, b) in &self.basis {
            let c = v[*p];
            if !c.is_zero() {
                axpy(f, &mut v, f.neg(c), b);
            }
        }
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = f.inv_nonzero(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        Some((p, v))
    }
}

/// Size of the smallest linearly dependent set of columns of `check`, when
/// below `limit`. `anchored` restricts the search to sets containing column 0,
/// which is exact for cyclic codes. Returns the size (if found) and the
/// number of search nodes visited.
pub fn smallest_dependent_set(
    f: &Field,
    check: &Matrix,
    limit: usize,
    anchored: bool,
) -> (Option<usize>, u128) {
    let n = check.cols();
    let m = check.rows();
    // Any m + 1 columns of an m-row matrix are dependent.
    let limit = limit.min(m + 2).min(n + 1);
    let cols: Vec<Vec<Gf>> = (0..n).map(|j| check.col(j)).collect();
    let best = AtomicUsize::new(limit);
    let nodes = AtomicU64::new(0);

    fn dfs(
        f: &Field,
        cols: &[Vec<Gf>],
        start: usize,
        depth: usize,
        ech: &mut Echelon,
        best: &AtomicUsize,
        nodes: &mut u64,
    ) {
        for c in start..cols.len() {
            if depth + 1 >= best.load(Ordering::Relaxed) {
                return;
            }
            *nodes += 1;
            match ech.reduce(f, cols[c].clone()) {
                None => {
                    best.fetch_min(depth + 1, Ordering::Relaxed);
                }
                Some(entry) => {
                    if depth + 2 < best.load(Ordering::Relaxed) {
                        ech.basis.push(entry);
                        dfs(f, cols, c + 1, depth + 1, ech, best, nodes);
                        ech.basis.pop();
                    }
                }
            }
        }
    }

    let firsts: Vec<usize> = if anchored { vec![0] } else { (0..n).collect() };
    let seeds: Vec<(usize, usize)> = firsts
        .iter()
        .flat_map(|&a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    seeds.par_iter().for_each(|&(a, b)| {
        let mut local = 0u64;
        let mut ech = Echelon { basis: Vec::new() };
        local += 1;
        let Some(ea) = ech.reduce(f, cols[a].clone()) else {
            best.fetch_min(1, Ordering::Relaxed);
            nodes.fetch_add(local, Ordering::Relaxed);
            return;
        };
        ech.basis.push(ea);
        if b == n {
            nodes.fetch_add(local, Ordering::Relaxed);
            return;
        }
        if 2 < best.load(Ordering::Relaxed) {
            local += 1;
            match ech.reduce(f, cols[b].clone()) {
                None => {
                    best.fetch_min(2, Ordering::Relaxed);
                }
                Some(eb) => {
                    ech.basis.push(eb);
                    dfs(f, &cols, b + 1, 2, &mut ech, &best, &mut local);
                }
            }
        }
        nodes.fetch_add(local, Ordering::Relaxed);
    });
    let b = best.into_inner();
    ((b < limit).then_some(b), nodes.into_inner() as u128)
}

/// True when the row space of `gen` is invariant under the cyclic shift of
/// coordinates.
pub fn is_cyclic(f: &Field, gen: &Matrix) -> bool {
    let n = gen.cols();
    let basis = gen.row_basis(f);
    let cyclic = basis.row_iter().all(|r| {
        let shifted: Vec<Gf> = (0..n).map(|k| r[(k + n - 1) % n]).collect();
        basis.row_space_contains(f, &shifted)
    });
    cyclic
}

/// Exact minimum distance through the check matrix, when the search fits
/// `budget` nodes. The generator must have full row rank.
pub fn dependence_min_distance(f: &Field, gen: &Matrix, budget: u128) -> Option<(usize, u128)> {
    let n = gen.cols();
    let k = gen.rows();
    let check = gen.null_space(f);
    let anchored = is_cyclic(f, gen);
    let singleton = n - k + 1;
    if dependence_work(n, singleton, anchored) > budget {
        return None;
    }
    let (d, nodes) = smallest_dependent_set(f, &check, singleton + 1, anchored);
    Some((d.unwrap_or(singleton), nodes))
}

/// Lower bound for the code spanned by the Fourier rows `rows` of length
/// `n`: one more than the longest run `b, b+s, …` (gcd(s, n) = 1) of unused
/// indices. A nonzero codeword pairs to zero with `f_j` on that run, and the
/// Vandermonde structure of those columns forbids fewer nonzeros.
pub fn bch_bound(n: usize, rows: &[usize]) -> usize {
    let mut used = vec![false; n];
    for &i in rows {
        used[i % n] = true;
    }
    if used.iter().all(|&u| !u) {
        return n + 1;
    }
    let mut best = 0;
    for s in (1..=n / 2).filter(|&s| crate::field::gcd(s as u64, n as u64) == 1) {
        // One cycle of length n; start the walk just after a used index.
        let start = (0..n).find(|&b| used[b]).expect("some row is used");
        let mut run = 0;
        for i in 1..=n {
            if used[(start + i * s) % n] {
                run = 0;
            } else {
                run += 1;
                best = best.max(run);
            }
        }
    }
    best + 1
}

/// Rank-based MDS test: every `k` columns of the generator are independent.
/// `None` when the search does not fit `budget` nodes.
pub fn is_mds(f: &Field, gen: &Matrix, budget: u128) -> Option<(bool, u128)> {
    let k = gen.rows();
    let anchored = is_cyclic(f, gen);
    if dependence_work(gen.cols(), k, anchored) > budget {
        return None;
    }
    let (dep, nodes) = smallest_dependent_set(f, gen, k + 1, anchored);
    Some((dep.is_none(), nodes))
}

/// Exact minimum distance by whichever exhaustive method fits the budget.
/// `None` when none does.
///
/// Low-rate codes whose check-matrix search is too deep are first tried with
/// the generator-side MDS test, which settles `d = n - k + 1` when it holds.
pub fn exact_min_distance(f: &Field, gen: &Matrix, budget: u128) -> Option<(usize, u128)> {
    let (n, k) = (gen.cols(), gen.rows());
    if space_size(f.order(), k) <= budget {
        return Some(enumerate_min_weight(f, gen));
    }
    let anchored = is_cyclic(f, gen);
    let check_side = dependence_work(n, n - k + 1, anchored);
    let gen_side = dependence_work(n, k, anchored);
    let mut spent = 0;
    if gen_side < check_side {
        match is_mds(f, gen, budget) {
            Some((true, nodes)) => return Some((n - k + 1, nodes)),
            Some((false, nodes)) => spent = nodes,
            None => {}
        }
    }
    dependence_min_distance(f, gen, budget).map(|(d, nodes)| (d, nodes + spent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::FourierContext;
    use std::sync::Arc;

    fn ctx(p: u64, s: u32, n: usize) -> FourierContext {
        FourierContext::new(Arc::new(Field::new(p, s).unwrap()), n).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(30, 8), 5_852_925);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn enumeration_counts_projective_points() {
        let c = ctx(2, 3, 7);
        let gen = c.rows_matrix(&[0, 1, 2, 3]);
        let (d, count) = enumerate_min_weight(c.field(), &gen);
        assert_eq!(d, 4);
        assert_eq!(count, (8u128.pow(4) - 1) / 7);
    }

    #[test]
    fn both_methods_agree_on_small_codes() {
        let c = ctx(2, 3, 7);
        let f = c.field();
        for rows in [vec![0, 1, 2, 3], vec![0, 1, 6, 2, 5], vec![0, 2, 4], vec![1, 3]] {
            let gen = c.rows_matrix(&rows);
            let (a, _) = enumerate_min_weight(f, &gen);
            let (b, _) = dependence_min_distance(f, &gen, u128::MAX).unwrap();
            assert_eq!(a, b, "rows {rows:?}");
        }
    }

    #[test]
    fn non_consecutive_rows_lose_distance() {
        // Nonzeros {0, 1, 3} over GF(8): the [7,3] code has a weight-4 word.
        let c = ctx(2, 3, 7);
        let gen = c.rows_matrix(&[0, 1, 3]);
        let (a, _) = enumerate_min_weight(c.field(), &gen);
        let (b, _) = dependence_min_distance(c.field(), &gen, u128::MAX).unwrap();
        assert_eq!(a, b);
        assert!(a < 5);
    }

    #[test]
    fn bch_bound_is_sound_and_tight_for_runs() {
        let c = ctx(2, 3, 7);
        assert_eq!(bch_bound(7, &[0, 1, 2]), 5);
        assert_eq!(bch_bound(7, &[5, 6, 0, 1]), 4);
        for rows in [vec![0, 1, 3], vec![0, 2, 4], vec![1, 3, 5, 6]] {
            let (d, _) = enumerate_min_weight(c.field(), &c.rows_matrix(&rows));
            assert!(bch_bound(7, &rows) <= d, "rows {rows:?}");
        }
    }

    #[test]
    fn mds_test_on_generator_side() {
        let c = ctx(2, 3, 7);
        assert!(
            is_mds(c.field(), &c.rows_matrix(&[2, 3, 4]), u128::MAX)
                .unwrap()
                .0
        );
        assert!(
            !is_mds(c.field(), &c.rows_matrix(&[0, 1, 3]), u128::MAX)
                .unwrap()
                .0
        );
        let c = ctx(2, 5, 31);
        let rows: Vec<usize> = (0..4).collect();
        let (d, _) = exact_min_distance(c.field(), &c.rows_matrix(&rows), 100_000).unwrap();
        assert_eq!(d, 28);
    }

    #[test]
    fn cyclic_detection() {
        let c = ctx(2, 3, 7);
        assert!(is_cyclic(c.field(), &c.rows_matrix(&[0, 3, 5])));
        let g = Matrix::from_rows(
            7,
            [vec![
                Gf::ONE,
                Gf::ZERO,
                Gf::ZERO,
                Gf::ZERO,
                Gf::ZERO,
                Gf::ZERO,
                Gf::ZERO,
            ]],
        )
        .unwrap();
        assert!(!is_cyclic(c.field(), &g));
    }
}
