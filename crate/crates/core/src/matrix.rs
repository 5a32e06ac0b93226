//! Dense row-major matrices and vectors over a [`Field`].

use crate::error::{Error, Result};
use crate::field::{Field, Gf};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

/// Hamming weight.
pub fn weight(v: &[Gf]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Bilinear form `sum a_k b_k`.
pub fn dot(f: &Field, a: &[Gf], b: &[Gf]) -> Gf {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Gf::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `acc += c * v` entrywise.
pub fn axpy(f: &Field, acc: &mut [Gf], c: Gf, v: &[Gf]) {
    if c.is_zero() {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        *a = f.add(*a, f.mul(c, x));
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Gf::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf::ONE);
        }
        m
    }

    /// Builds from rows of equal length; `cols` fixes the width of an empty matrix.
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<Gf>>) -> Result<Matrix> {
        let mut data = Vec::new();
        let mut count = 0;
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
            count += 1;
        }
        Ok(Matrix {
            rows: count,
            cols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Gf) -> Matrix {
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| entry(i, j))
            .collect();
        Matrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Gf) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Gf] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Gf] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Gf]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn col(&self, j: usize) -> Vec<Gf> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn map(&self, mut g: impl FnMut(Gf) -> Gf) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| g(x)).collect(),
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Matrix) -> Result<Matrix> {
        if self.cols != below.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, right: &Matrix) -> Result<Matrix> {
        if self.rows != right.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: right.rows,
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols + right.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                right.get(i, j - self.cols)
            }
        }))
    }

    pub fn add(&self, f: &Field, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, f: &Field, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, f: &Field, c: Gf) -> Matrix {
        self.map(|x| f.mul(c, x))
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let acc = out.row_mut(i);
            for k in 0..self.cols {
                axpy(f, acc, self.get(i, k), other.row(k));
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `x * self`.
    pub fn vec_mul(&self, f: &Field, x: &[Gf]) -> Result<Vec<Gf>> {
        if x.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: x.len(),
            });
        }
        let mut acc = vec![Gf::ZERO; self.cols];
        for (i, &c) in x.iter().enumerate() {
            axpy(f, &mut acc, c, self.row(i));
        }
        Ok(acc)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, f: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv_nonzero(m.get(r, c));
            for x in m.row_mut(r) {
                *x = f.mul(*x, inv);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if !factor.is_zero() {
                        axpy(f, m.row_mut(i), f.neg(factor), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    /// Nonzero rows of the reduced echelon form: a basis of the row space.
    pub fn row_basis(&self, f: &Field) -> Matrix {
        let (m, piv) = self.rref(f);
        m.select_rows(&(0..piv.len()).collect::<Vec<_>>())
    }

    pub fn row_space_contains(&self, f: &Field, v: &[Gf]) -> bool {
        self.solve_left(f, v).is_some()
    }

    /// Some `x` with `x * self = b`, if one exists.
    pub fn solve_left(&self, f: &Field, b: &[Gf]) -> Option<Vec<Gf>> {
        if b.len() != self.cols {
            return None;
        }
        // Reduce [selfᵀ | bᵀ] and back-substitute.
        let aug = self
            .transpose()
            .hcat(&Matrix::from_fn(self.cols, 1, |i, _| b[i]))
            .ok()?;
        let (red, piv) = aug.rref(f);
        if piv.last() == Some(&self.rows) {
            return None;
        }
        let mut x = vec![Gf::ZERO; self.rows];
        for (i, &c) in piv.iter().enumerate() {
            x[c] = red.get(i, self.rows);
        }
        Some(x)
    }

    /// Basis of the right null space `{x : self * xᵀ = 0}`, one vector per row.
    pub fn null_space(&self, f: &Field) -> Matrix {
        let (red, piv) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        let rows = free.iter().map(|&fc| {
            let mut v = vec![Gf::ZERO; self.cols];
            v[fc] = Gf::ONE;
            for (i, &pc) in piv.iter().enumerate() {
                v[pc] = f.neg(red.get(i, fc));
            }
            v
        });
        Matrix::from_rows(self.cols, rows).expect("rows built with matching width")
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Text block `MATRIX rows cols` followed by one line per row.
    pub fn to_text(&self, f: &Field) -> String {
        let mut out = format!("MATRIX {} {}\n", self.rows, self.cols);
        for r in self.row_iter() {
            let line: Vec<String> = r.iter().map(|&x| f.format_element(x)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses a block written by [`Matrix::to_text`]; `first_line` is the
    /// 1-based line number of the header in the enclosing document.
    pub fn parse_lines<'a>(f: &Field, lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Matrix> {
        let (ln, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing MATRIX header".into(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let dims = match parts.as_slice() {
            ["MATRIX", r, c] => r.parse::<usize>().ok().zip(c.parse::<usize>().ok()),
            _ => None,
        };
        let (rows, cols) = dims.ok_or(Error::Parse {
            line: ln,
            msg: format!("expected `MATRIX rows cols`, found `{header}`"),
        })?;
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            let (ln, text) = lines.next().ok_or(Error::Parse {
                line: ln + i + 1,
                msg: "matrix truncated".into(),
            })?;
            let toks: Vec<&str> = text.split_whitespace().collect();
            if toks.len() != cols {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("expected {cols} entries, found {}", toks.len()),
                });
            }
            for (j, t) in toks.iter().enumerate() {
                let x = f.parse_element(t).map_err(|e| Error::Parse {
                    line: ln,
                    msg: e.to_string(),
                })?;
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn parse(f: &Field, text: &str) -> Result<Matrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        Matrix::parse_lines(f, &mut lines)
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf7() -> Field {
        Field::new(7, 1).unwrap()
    }

    fn m(f: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&v| f.from_int(v)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_rref() {
        let f = gf7();
        let a = m(&f, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(&f), 2);
        let (r, piv) = a.rref(&f);
        assert_eq!(piv, vec![0, 1]);
        assert!(r.row(2).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_left_recovers_combination() {
        let f = gf7();
        let a = m(&f, &[&[1, 0, 2, 3], &[0, 1, 4, 5]]);
        let b = a.vec_mul(&f, &[f.from_int(3), f.from_int(6)]).unwrap();
        let x = a.solve_left(&f, &b).unwrap();
        assert_eq!(a.vec_mul(&f, &x).unwrap(), b);
        assert!(!a.row_space_contains(&f, &[Gf::ONE, Gf::ZERO, Gf::ZERO, Gf::ZERO]));
    }

    #[test]
    fn null_space_is_orthogonal() {
        let f = gf7();
        let a = m(&f, &[&[1, 2, 3, 4], &[0, 1, 5, 6]]);
        let ns = a.null_space(&f);
        assert_eq!(ns.rows(), 2);
        let prod = a.mul(&f, &ns.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn text_roundtrip_extension_field() {
        let f = Field::new(2, 3).unwrap();
        let a = Matrix::from_fn(2, 3, |i, j| Gf::ONE.max(f.pow(f.generator(), (i * 3 + j) as u64)));
        let parsed = Matrix::parse(&f, &a.to_text(&f)).unwrap();
        assert_eq!(parsed, a);
        assert!(a.to_text(&f).contains(','));
    }

    #[test]
    fn parse_rejects_short_row() {
        let f = gf7();
        let err = Matrix::parse(&f, "MATRIX 1 3\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
