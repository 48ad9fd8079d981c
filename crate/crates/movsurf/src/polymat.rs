//! Matrices with polynomial entries and their exact determinants.
//!
//! Symbolic expansion of these determinants is factorial; instead the
//! determinant is recovered by evaluating the matrix on an integer grid and
//! interpolating, one variable at a time. A held-out evaluation point guards
//! against an under-estimated degree bound.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{SparsePoly, VarSet};
use crate::rat::{rat, Rat};

/// Dense matrix whose entries are polynomials over a common variable set.
#[derive(Clone)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: VarSet,
    data: Vec<SparsePoly>,
}

impl PolyMatrix {
    pub fn zeros(vars: VarSet, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            vars,
            data: vec![SparsePoly::zero(vars); rows * cols],
        }
    }

    pub fn from_fn(
        vars: VarSet,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> SparsePoly,
    ) -> Self {
        let mut m = Self::zeros(vars, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert_eq!(p.vars(), vars);
                m.data[i * cols + j] = p;
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

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: SparsePoly) {
        assert_eq!(p.vars(), self.vars);
        self.data[i * self.cols + j] = p;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entrywise evaluation at a point.
    pub fn eval_point(&self, point: &[Rat]) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval(point))
    }

    /// Product with a rational matrix on the right.
    pub fn mul_rat(&self, m: &Matrix) -> PolyMatrix {
        assert_eq!(self.cols, m.rows());
        PolyMatrix::from_fn(self.vars, self.rows, m.cols(), |i, j| {
            let mut acc = SparsePoly::zero(self.vars);
            for k in 0..self.cols {
                let c = m.get(k, j);
                if !c.is_zero() {
                    acc = acc.add(&self.get(i, k).scale(c));
                }
            }
            acc
        })
    }

    /// Glues `other` to the right.
    pub fn hstack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.vars, other.vars);
        PolyMatrix::from_fn(self.vars, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Per-variable degree bound for the determinant: sum over rows of the
    /// largest per-variable entry degree in that row.
    fn det_var_bounds(&self) -> Vec<u32> {
        let nv = self.vars.len();
        (0..nv)
            .map(|v| {
                (0..self.rows)
                    .map(|i| {
                        (0..self.cols)
                            .map(|j| self.get(i, j).degree_in(v))
                            .max()
                            .unwrap_or(0)
                    })
                    .sum()
            })
            .collect()
    }

    /// Exact determinant polynomial by evaluation and interpolation.
    ///
    /// `degree_bound` must bound the total degree of the determinant; the
    /// result is checked on a held-out point and against the bound.
    pub fn poly_det(&self, degree_bound: u32) -> Result<SparsePoly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(SparsePoly::constant(self.vars, Rat::one()));
        }
        let bounds: Vec<u32> = self
            .det_var_bounds()
            .into_iter()
            .map(|b| b.min(degree_bound))
            .collect();
        let mut eval = |point: &[Rat]| self.eval_point(point).det();
        let p = interpolate(self.vars, &bounds, &mut eval)?;
        if p.total_degree() > degree_bound {
            return Err(Error::DegreeBoundExceeded);
        }
        // Held-out check just outside the grid.
        let held: Vec<Rat> = bounds.iter().map(|&b| rat(b as i64 + 1)).collect();
        if p.eval(&held) != self.eval_point(&held).det()? {
            return Err(Error::DegreeBoundExceeded);
        }
        Ok(p)
    }
}

/// Interpolates the polynomial of per-variable degree at most `bounds[v]`
/// whose values `eval` returns, on the integer grid {0..bounds[v]} per
/// variable, by nested univariate Lagrange interpolation.
pub fn interpolate(
    vars: VarSet,
    bounds: &[u32],
    eval: &mut dyn FnMut(&[Rat]) -> Result<Rat>,
) -> Result<SparsePoly> {
    assert_eq!(bounds.len(), vars.len());
    let mut point = vec![Rat::zero(); vars.len()];
    interp_rec(vars, bounds, eval, 0, &mut point)
}

fn interp_rec(
    vars: VarSet,
    bounds: &[u32],
    eval: &mut dyn FnMut(&[Rat]) -> Result<Rat>,
    var: usize,
    point: &mut Vec<Rat>,
) -> Result<SparsePoly> {
    if var == vars.len() {
        let v = eval(point)?;
        return Ok(SparsePoly::constant(vars, v));
    }
    let nodes = bounds[var] + 1;
    let mut slices = Vec::with_capacity(nodes as usize);
    for x in 0..nodes {
        point[var] = rat(x as i64);
        slices.push(interp_rec(vars, bounds, eval, var + 1, point)?);
    }
    point[var] = Rat::zero();
    // Combine with the Lagrange basis on nodes 0..=bounds[var].
    let x_var = SparsePoly::variable(vars, var);
    let mut acc = SparsePoly::zero(vars);
    for (x, slice) in slices.iter().enumerate() {
        if slice.is_zero() {
            continue;
        }
        let mut basis = SparsePoly::constant(vars, Rat::one());
        let mut denom = Rat::one();
        for y in 0..nodes as usize {
            if y == x {
                continue;
            }
            basis = basis.mul(&x_var.sub(&SparsePoly::constant(vars, rat(y as i64))));
            denom *= rat(x as i64) - rat(y as i64);
        }
        acc = acc.add(&basis.scale(&(Rat::one() / denom)).mul(slice));
    }
    Ok(acc)
}

/// Convenience: diagonal matrix from polynomial entries.
pub fn poly_diag(vars: VarSet, entries: &[SparsePoly]) -> PolyMatrix {
    PolyMatrix::from_fn(vars, entries.len(), entries.len(), |i, j| {
        if i == j {
            entries[i].clone()
        } else {
            SparsePoly::zero(vars)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn imp(s: &str) -> SparsePoly {
        parse_poly(s, VarSet::Implicit).unwrap()
    }

    /// Independent oracle: symbolic cofactor expansion.
    fn cofactor_poly_det(m: &PolyMatrix) -> SparsePoly {
        let n = m.rows();
        if n == 0 {
            return SparsePoly::constant(m.vars(), Rat::one());
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = SparsePoly::zero(m.vars());
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let sub = PolyMatrix::from_fn(m.vars(), n - 1, n - 1, |a, b| {
                m.get(a + 1, if b < j { b } else { b + 1 }).clone()
            });
            let term = m.get(0, j).mul(&cofactor_poly_det(&sub));
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    #[test]
    fn one_by_one() {
        let m = poly_diag(VarSet::Implicit, &[imp("X1^2")]);
        assert_eq!(m.poly_det(2).unwrap().to_string(), "X1^2");
    }

    #[test]
    fn diagonal_product() {
        let m = poly_diag(VarSet::Implicit, &[imp("X1^2"), imp("X2*X3")]);
        assert_eq!(m.poly_det(4).unwrap().to_string(), "X1^2*X2*X3");
    }

    #[test]
    fn matches_cofactor_oracle_on_quadratic_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let basis: Vec<&str> = vec![
            "X1^2", "X2^2", "X3^2", "X4^2", "X1*X2", "X1*X3", "X1*X4", "X2*X3", "X2*X4", "X3*X4",
        ];
        for _ in 0..5 {
            let m = PolyMatrix::from_fn(VarSet::Implicit, 2, 2, |_, _| {
                let mut p = SparsePoly::zero(VarSet::Implicit);
                for b in &basis {
                    p = p.add(&imp(b).scale(&rat(rng.gen_range(-5..=5))));
                }
                p
            });
            let det = m.poly_det(4).unwrap();
            assert_eq!(det, cofactor_poly_det(&m));
        }
    }

    #[test]
    fn fresh_point_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = PolyMatrix::from_fn(VarSet::Implicit, 3, 3, |_, _| {
            let mut p = SparsePoly::zero(VarSet::Implicit);
            for e in ["X1", "X2", "X3", "X4", "1"] {
                p = p.add(&imp(e).scale(&rat(rng.gen_range(-3..=3))));
            }
            p
        });
        let det = m.poly_det(3).unwrap();
        assert!(det.total_degree() <= 3);
        for _ in 0..10 {
            let pt: Vec<Rat> = (0..4).map(|_| rat(rng.gen_range(-20..=20))).collect();
            assert_eq!(det.eval(&pt), m.eval_point(&pt).det().unwrap());
        }
    }

    #[test]
    fn degree_bound_violation_detected() {
        let m = poly_diag(VarSet::Implicit, &[imp("X1^2")]);
        assert!(matches!(m.poly_det(1), Err(Error::DegreeBoundExceeded)));
    }

    #[test]
    fn non_square_rejected() {
        let m = PolyMatrix::zeros(VarSet::Implicit, 2, 3);
        assert!(m.poly_det(1).is_err());
    }
}
