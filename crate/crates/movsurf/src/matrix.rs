//! Exact dense linear algebra over the rationals.
//!
//! Determinants run fraction-free (Bareiss) over the integers after clearing
//! denominators row by row; kernels come from a reduced row echelon form so
//! the basis is deterministic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{monomial_string, Expo, VarSet};
use crate::rat::{rat_string, Rat};

/// Row or column label: a basis monomial, optionally paired with the
/// implicit-monomial block it belongs to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Label {
    Mono {
        vars: VarSet,
        mono: Expo,
    },
    Block {
        gamma: Expo,
        vars: VarSet,
        mono: Expo,
    },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Mono { vars, mono } => write!(f, "{}", monomial_string(*vars, mono)),
            Label::Block { gamma, vars, mono } => {
                let g = monomial_string(VarSet::Implicit, gamma);
                let m = monomial_string(*vars, mono);
                if m == "1" {
                    write!(f, "{}", g)
                } else {
                    write!(f, "{}*{}", g, m)
                }
            }
        }
    }
}

/// Dense matrix of rationals, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
    pub row_labels: Option<Vec<Label>>,
    pub col_labels: Option<Vec<Label>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= c;
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (j, x) in v.iter().enumerate() {
                    acc += self.get(i, j) * x;
                }
                acc
            })
            .collect()
    }

    /// Submatrix in the given row/column index order; labels are sliced along.
    pub fn minor(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<Matrix> {
        for set in [row_idx, col_idx] {
            let bound = if std::ptr::eq(set, row_idx) {
                self.rows
            } else {
                self.cols
            };
            let mut seen = vec![false; bound];
            for &i in set {
                if i >= bound {
                    return Err(Error::IndexOutOfRange(i));
                }
                if seen[i] {
                    return Err(Error::DuplicateIndex(i));
                }
                seen[i] = true;
            }
        }
        let mut out = Matrix::zeros(row_idx.len(), col_idx.len());
        for (a, &i) in row_idx.iter().enumerate() {
            for (b, &j) in col_idx.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out.row_labels = self
            .row_labels
            .as_ref()
            .map(|ls| row_idx.iter().map(|&i| ls[i].clone()).collect());
        out.col_labels = self
            .col_labels
            .as_ref()
            .map(|ls| col_idx.iter().map(|&j| ls[j].clone()).collect());
        Ok(out)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Result<Matrix> {
        let all: Vec<usize> = (0..self.cols).collect();
        self.minor(idx, &all)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Result<Matrix> {
        let all: Vec<usize> = (0..self.rows).collect();
        self.minor(&all, idx)
    }

    /// Stacks `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            // Empty product convention, needed by degenerate block factorizations.
            return Ok(Rat::one());
        }
        let mut scale = Rat::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            let row: Vec<BigInt> = (0..n)
                .map(|j| {
                    let r = self.get(i, j);
                    r.numer() * (&lcm / r.denom())
                })
                .collect();
            scale *= Rat::from_integer(lcm);
            m.push(row);
        }
        let int_det = bareiss(&mut m);
        Ok(Rat::from_integer(int_det) / scale)
    }

    /// Reduced row echelon form and the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        m.row_labels = None;
        m.col_labels = None;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel in reduced echelon normal form: each basis
    /// vector has a 1 in its free column and zeros in the other free columns.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Greedy list of linearly independent rows, scanned in row order;
    /// fraction-free with per-row content reduction.
    pub fn independent_rows(&self) -> Vec<usize> {
        let limit = self.rows.min(self.cols);
        let mut picked: Vec<(usize, Vec<BigInt>)> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        for r in 0..self.rows {
            if picked.len() == limit {
                break;
            }
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                lcm = lcm.lcm(self.get(r, j).denom());
            }
            let mut row: Vec<BigInt> = (0..self.cols)
                .map(|j| {
                    let x = self.get(r, j);
                    x.numer() * (&lcm / x.denom())
                })
                .collect();
            for ((_, prow), &pc) in picked.iter().zip(&pivot_cols) {
                if row[pc].is_zero() {
                    continue;
                }
                let (a, b) = (prow[pc].clone(), row[pc].clone());
                for j in 0..self.cols {
                    row[j] = &row[j] * &a - &prow[j] * &b;
                }
                let mut content = BigInt::zero();
                for x in &row {
                    content = content.gcd(x);
                }
                if !content.is_zero() && !content.is_one() {
                    for x in &mut row {
                        *x = &*x / &content;
                    }
                }
            }
            if let Some(c) = row.iter().position(|x| !x.is_zero()) {
                picked.push((r, row));
                pivot_cols.push(c);
            }
        }
        picked.into_iter().map(|(r, _)| r).collect()
    }

    /// Solves `self * X = b` for square nonsingular `self`; `None` when singular.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert!(self.is_square());
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let cols: Vec<usize> = (self.cols..self.cols + b.cols).collect();
        Some(r.select_cols(&cols).unwrap())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} x {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| rat_string(self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Fraction-free determinant of an integer matrix; consumes the buffer.
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: cofactor expansion along the first row.
    fn cofactor_det(m: &Matrix) -> Rat {
        let n = m.rows();
        if n == 0 {
            return Rat::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rat::zero();
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let sub = m.minor(&rows, &cols).unwrap();
            let term = m.get(0, j) * cofactor_det(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| rat(rng.gen_range(-9..=9)))
    }

    #[test]
    fn det_identity_and_repeated_rows() {
        assert_eq!(Matrix::identity(4).det().unwrap(), rat(1));
        let mut m = Matrix::identity(3);
        for j in 0..3 {
            let v = m.get(0, j).clone();
            m.set(2, j, v);
        }
        assert_eq!(m.det().unwrap(), rat(0));
        assert!(Matrix::zeros(2, 3).det().is_err());
        assert_eq!(Matrix::zeros(0, 0).det().unwrap(), rat(1));
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 5, 5);
            assert_eq!(m.det().unwrap(), cofactor_det(&m));
        }
    }

    #[test]
    fn det_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=6 {
            let a = random_matrix(&mut rng, n, n);
            let b = random_matrix(&mut rng, n, n);
            assert_eq!(
                a.matmul(&b).det().unwrap(),
                a.det().unwrap() * b.det().unwrap()
            );
        }
    }

    #[test]
    fn nullspace_trivial_cases() {
        assert!(Matrix::identity(4).nullspace().is_empty());
        let z = Matrix::zeros(3, 3);
        assert_eq!(z.nullspace().len(), 3);
    }

    #[test]
    fn nullspace_from_rank_factorization() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        // 6x8 of rank 6: random left factor with nonzero det times a full-rank
        // pattern on the right.
        loop {
            let l = random_matrix(&mut rng, 6, 6);
            if l.det().unwrap().is_zero() {
                continue;
            }
            let r = random_matrix(&mut rng, 6, 8);
            let a = l.matmul(&r);
            if a.rank() != 6 {
                continue;
            }
            let ns = a.nullspace();
            assert_eq!(ns.len(), 2);
            for v in &ns {
                assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
            }
            break;
        }
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=8);
            let a = random_matrix(&mut rng, rows, cols);
            assert_eq!(a.rank() + a.nullspace().len(), cols);
        }
    }

    #[test]
    fn minor_examples() {
        let m = Matrix::identity(3);
        let all: Vec<usize> = (0..3).collect();
        assert_eq!(m.minor(&all, &all).unwrap(), m);
        let single = m.minor(&[0], &[0]).unwrap();
        assert_eq!(single.get(0, 0), &rat(1));
        assert!(m.minor(&[0, 0], &all).is_err());
        assert!(m.minor(&[5], &all).is_err());
    }

    #[test]
    fn solve_matrix_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = loop {
            let a = random_matrix(&mut rng, 5, 5);
            if !a.det().unwrap().is_zero() {
                break a;
            }
        };
        let b = random_matrix(&mut rng, 5, 2);
        let x = a.solve_matrix(&b).unwrap();
        assert_eq!(a.matmul(&x), b);
        let singular = Matrix::zeros(3, 3);
        assert!(singular.solve_matrix(&Matrix::zeros(3, 1)).is_none());
    }
}
