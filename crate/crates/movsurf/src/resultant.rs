//! Resultants of three forms by three independent routes.
//!
//! The working definition is the determinant of the three-term Koszul
//! complex built from (f1, f2, f3^(d-1)): a signed ratio of complementary
//! maximal minors, independent of the minor choice. Dixon matrices (tensor
//! case) and Macaulay matrices (triangular case) serve as independent
//! cross-checks. The specialized resultant P(X) = Res(x1 - X1*x4,
//! x2 - X2*x4, x3 - X3*x4) is recovered by grid evaluation and
//! interpolation.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::moving::{multiplication_matrix, ColumnBlock};
use crate::poly::{bi_monomials, tri_monomials, Expo, MonomialBasis, SparsePoly, VarSet};
use crate::polymat::interpolate;
use crate::rat::{frac, rat, Rat};
use crate::surface::{ParamSurface, SurfaceKind};

/// Matrices of the two Koszul morphisms.
///
/// `d1` sends (p, q, r) to p*f1 + q*f2 + r*f3^(d-1); `d0` sends (p, q, r) to
/// (q*f3^(d-1) + r*f2, p*f3^(d-1) - r*f1, -p*f2 - q*f1). The composition
/// d1 * d0 vanishes identically.
pub struct KoszulPair {
    pub d0: Matrix,
    pub d1: Matrix,
    pub d: u32,
    pub kind: SurfaceKind,
}

fn bidegree_of(p: &SparsePoly) -> Option<(u32, u32)> {
    let mut it = p.terms();
    let first = it.next()?;
    let bd = (
        first.0.get(0) as u32 + first.0.get(1) as u32,
        first.0.get(2) as u32 + first.0.get(3) as u32,
    );
    if p.is_bihomogeneous(bd.0, bd.1) {
        Some(bd)
    } else {
        None
    }
}

fn shared_kind(f: &[&SparsePoly; 3]) -> Result<SurfaceKind> {
    match f[0].vars() {
        VarSet::Tensor => {
            let bd = bidegree_of(f[0])
                .ok_or_else(|| Error::DegreeMismatch("f1 is not bihomogeneous".into()))?;
            for (i, g) in f.iter().enumerate() {
                if bidegree_of(g) != Some(bd) {
                    return Err(Error::DegreeMismatch(format!(
                        "f{} does not share bidegree ({},{})",
                        i + 1,
                        bd.0,
                        bd.1
                    )));
                }
            }
            if bd.0 < 1 || bd.1 < 1 {
                return Err(Error::DegreeMismatch(
                    "bidegree must be at least (1,1)".into(),
                ));
            }
            Ok(SurfaceKind::Tensor { m: bd.0, n: bd.1 })
        }
        VarSet::Triangular => {
            let n = f[0].total_degree();
            for (i, g) in f.iter().enumerate() {
                if g.is_zero() || !g.is_homogeneous(n) {
                    return Err(Error::DegreeMismatch(format!(
                        "f{} is not homogeneous of degree {}",
                        i + 1,
                        n
                    )));
                }
            }
            if n < 1 {
                return Err(Error::DegreeMismatch("degree must be at least 1".into()));
            }
            Ok(SurfaceKind::Triangular { n })
        }
        _ => Err(Error::DegreeMismatch(
            "resultants take parameter-space polynomials".into(),
        )),
    }
}

fn space(kind: SurfaceKind, mult: u32) -> MonomialBasis {
    match kind {
        SurfaceKind::Tensor { m, n } => bi_monomials(mult * m - 1, mult * n - 1),
        SurfaceKind::Triangular { n } => tri_monomials(mult * n - 1),
    }
}

/// Builds the Koszul matrices for three forms of the shared (bi)degree of
/// `kind`. The forms may specialize to zero; their degrees are taken from
/// `kind`, not measured.
pub fn koszul_matrices_for(
    kind: SurfaceKind,
    f1: &SparsePoly,
    f2: &SparsePoly,
    f3: &SparsePoly,
    d: u32,
) -> Result<KoszulPair> {
    if d < 2 {
        return Err(Error::Input("the Koszul complex needs d >= 2".into()));
    }
    let f3_pow = f3.pow(d - 1);
    let a1 = space(kind, 1);
    let a3 = space(kind, d - 1);
    let b1 = space(kind, d);
    let b3 = space(kind, 2);
    let c = space(kind, d + 1);

    let gamma = Expo::zero(4);
    // d1: rows C, column blocks (p, q, r).
    let d1 = multiplication_matrix(
        &c,
        &[
            ColumnBlock {
                multiplier: f1.clone(),
                source: &b1,
                gamma,
            },
            ColumnBlock {
                multiplier: f2.clone(),
                source: &b1,
                gamma,
            },
            ColumnBlock {
                multiplier: f3_pow.clone(),
                source: &b3,
                gamma,
            },
        ],
    );

    // d0: three row blocks (the B components), three column blocks (the A
    // components), with the Koszul signs.
    type BlockRow<'a> = (
        &'a MonomialBasis,
        [(&'a SparsePoly, &'a MonomialBasis, i32); 3],
    );
    let zero = SparsePoly::zero(f1.vars());
    let row_blocks: [BlockRow; 3] = [
        (&b1, [(&zero, &a1, 0), (&f3_pow, &a1, 1), (f2, &a3, 1)]),
        (&b1, [(&f3_pow, &a1, 1), (&zero, &a1, 0), (f1, &a3, -1)]),
        (&b3, [(f2, &a1, -1), (f1, &a1, -1), (&zero, &a3, 0)]),
    ];
    let rows: usize = 2 * b1.len() + b3.len();
    let cols: usize = 2 * a1.len() + a3.len();
    let mut d0 = Matrix::zeros(rows, cols);
    let mut row_off = 0;
    for (target, mults) in row_blocks.iter() {
        let mut col_off = 0;
        for (mult, src, sign) in mults.iter() {
            if *sign != 0 && !mult.is_zero() {
                for (ci, mono) in src.iter().enumerate() {
                    for (e, coeff) in mult.terms() {
                        let te = e.add(mono);
                        let r = target
                            .index_of(&te)
                            .expect("product stays in the block space");
                        let v = if *sign > 0 {
                            coeff.clone()
                        } else {
                            -coeff.clone()
                        };
                        let cur = d0.get(row_off + r, col_off + ci) + v;
                        d0.set(row_off + r, col_off + ci, cur);
                    }
                }
            }
            col_off += src.len();
        }
        row_off += target.len();
    }
    Ok(KoszulPair { d0, d1, d, kind })
}

/// As `koszul_matrices_for`, measuring the shared (bi)degree from the forms.
pub fn koszul_matrices(
    f1: &SparsePoly,
    f2: &SparsePoly,
    f3: &SparsePoly,
    d: u32,
) -> Result<KoszulPair> {
    let kind = shared_kind(&[f1, f2, f3])?;
    koszul_matrices_for(kind, f1, f2, f3, d)
}

/// Advances an ascending index set to its colexicographic successor;
/// false when the last set has been reached.
pub fn next_colex_set(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    for t in 0..r {
        let limit = if t + 1 < r { idx[t + 1] } else { n };
        if idx[t] + 1 < limit {
            idx[t] += 1;
            for (u, slot) in idx.iter_mut().enumerate().take(t) {
                *slot = u;
            }
            return true;
        }
    }
    false
}

/// Sign of the permutation listing I first and its complement after, both
/// ascending: (-1)^(sum over k of (i_k - k)).
fn interleave_sign(idx: &[usize]) -> i32 {
    let mut s: usize = 0;
    for (k, &i) in idx.iter().enumerate() {
        s += i - k;
    }
    if s.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn complement(idx: &[usize], n: usize) -> Vec<usize> {
    let mut mask = vec![false; n];
    for &i in idx {
        mask[i] = true;
    }
    (0..n).filter(|&i| !mask[i]).collect()
}

/// Complementary minors (|D1_I|, |D0_I|, (-1)^sigma) for a column set of d1;
/// D0_I keeps the rows not indexed by I.
pub fn complex_minor_pair(k: &KoszulPair, idx: &[usize]) -> Result<(Rat, Rat, i32)> {
    let q = k.d1.cols();
    let m1 = k.d1.select_cols(idx)?.det()?;
    let m0 = k.d0.select_rows(&complement(idx, q))?.det()?;
    Ok((m1, m0, interleave_sign(idx)))
}

/// Determinant of the complex: the signed ratio (-1)^sigma * |D1_I| / |D0_I|
/// for a column set I whose complementary d0 minor is nonzero. Equals a
/// fixed sign times Res^(d-1) and does not depend on the choice of I.
pub fn complex_determinant(k: &KoszulPair) -> Result<Rat> {
    complex_determinant_hint(k, None).map(|(v, _)| v)
}

/// Variant taking a previously successful index set to try first; returns
/// the value together with the index set that produced it.
///
/// The default index set is the complement of the greedy first linearly
/// independent rows of d0: deterministic, and valid whenever any valid
/// choice exists. A colexicographic scan of column sets starts at the last
/// rows of d0, which sit in its last block row and give a structurally zero
/// column block there, so it wades through a quadratic number of singular
/// candidates first.
pub fn complex_determinant_hint(
    k: &KoszulPair,
    hint: Option<&[usize]>,
) -> Result<(Rat, Vec<usize>)> {
    let q = k.d1.cols();
    let r = k.d1.rows();
    let p = k.d0.cols();
    debug_assert_eq!(q, r + p);
    if let Some(h) = hint {
        if h.len() == r {
            if let Ok((m1, m0, sign)) = complex_minor_pair(k, h) {
                if !m0.is_zero() {
                    return Ok((signed_ratio(m1, m0, sign), h.to_vec()));
                }
            }
        }
    }
    let pivots = k.d0.independent_rows();
    if pivots.len() < p {
        return Err(Error::SingularComplex);
    }
    let idx = complement(&pivots, q);
    let m0 = k.d0.select_rows(&pivots)?.det()?;
    debug_assert!(!m0.is_zero());
    let m1 = k.d1.select_cols(&idx)?.det()?;
    let sign = interleave_sign(&idx);
    Ok((signed_ratio(m1, m0, sign), idx))
}

fn signed_ratio(m1: Rat, m0: Rat, sign: i32) -> Rat {
    let v = m1 / m0;
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// Bihomogeneous resultant of three bidegree-(m, n) forms, via the d = 2
/// complex. Zero exactly when the forms share a root on P1 x P1.
pub fn res_bihom(f1: &SparsePoly, f2: &SparsePoly, f3: &SparsePoly) -> Result<Rat> {
    let kind = shared_kind(&[f1, f2, f3])?;
    let SurfaceKind::Tensor { .. } = kind else {
        return Err(Error::DegreeMismatch("expected bihomogeneous forms".into()));
    };
    resultant_for(kind, f1, f2, f3).map(|(v, _)| v)
}

/// Multivariate resultant of three ternary degree-n forms, via the d = 2
/// complex. Zero exactly when the forms share a root on P2.
pub fn res_tri(f1: &SparsePoly, f2: &SparsePoly, f3: &SparsePoly) -> Result<Rat> {
    let kind = shared_kind(&[f1, f2, f3])?;
    let SurfaceKind::Triangular { .. } = kind else {
        return Err(Error::DegreeMismatch("expected ternary forms".into()));
    };
    resultant_for(kind, f1, f2, f3).map(|(v, _)| v)
}

/// Resultant of three forms of the declared kind; the forms may specialize
/// to zero. A degenerate complex signals a vanished resultant.
pub fn resultant_for(
    kind: SurfaceKind,
    f1: &SparsePoly,
    f2: &SparsePoly,
    f3: &SparsePoly,
) -> Result<(Rat, Vec<usize>)> {
    resultant_for_hint(kind, f1, f2, f3, None)
}

pub fn resultant_for_hint(
    kind: SurfaceKind,
    f1: &SparsePoly,
    f2: &SparsePoly,
    f3: &SparsePoly,
    hint: Option<&[usize]>,
) -> Result<(Rat, Vec<usize>)> {
    let k = koszul_matrices_for(kind, f1, f2, f3, 2)?;
    match complex_determinant_hint(&k, hint) {
        Ok(pair) => Ok(pair),
        Err(Error::SingularComplex) => Ok((Rat::zero(), Vec::new())),
        Err(e) => Err(e),
    }
}

/// Divides exactly by (v_hi - v_root); both arguments are variable indices.
fn div_linear_diff(p: &SparsePoly, var_hi: usize, var_root: usize) -> SparsePoly {
    let vars = p.vars();
    let deg = p.degree_in(var_hi) as usize;
    let mut slices = vec![SparsePoly::zero(vars); deg + 1];
    for (e, c) in p.terms() {
        let k = e.get(var_hi) as usize;
        slices[k].add_term(e.with(var_hi, 0), c.clone());
    }
    let root = SparsePoly::variable(vars, var_root);
    let mut quotient = vec![SparsePoly::zero(vars); deg.max(1)];
    let mut carry = SparsePoly::zero(vars);
    for k in (1..=deg).rev() {
        let qk = slices[k].add(&carry);
        carry = qk.mul(&root);
        quotient[k - 1] = qk;
    }
    debug_assert!(slices[0].add(&carry).is_zero(), "division is not exact");
    let mut out = SparsePoly::zero(vars);
    for (k, q) in quotient.iter().enumerate() {
        for (e, c) in q.terms() {
            out.add_term(e.with(var_hi, e.get(var_hi) + k as u16), c.clone());
        }
    }
    out
}

/// Maps a bihomogeneous polynomial into the Cayley working variables,
/// sending (s, u, t, v) to (var `sub_s`, 1, var `sub_t`, 1).
fn to_cayley(p: &SparsePoly, sub_s: usize, sub_t: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(VarSet::Cayley);
    for (e, c) in p.terms() {
        let mut expo = Expo::zero(4);
        expo = expo.with(sub_s, e.get(0));
        expo = expo.with(sub_t, expo.get(sub_t) + e.get(2));
        out.add_term(expo, c.clone());
    }
    out
}

/// Cayley-Dixon matrix of three bidegree-(m, n) forms: 2mn x 2mn, rows
/// indexed by s^i t^j (i < m, j < 2n), columns by a^k b^l (k < 2m, l < n).
/// Its determinant is, up to sign, the bihomogeneous resultant.
pub fn dixon_matrix(f1: &SparsePoly, f2: &SparsePoly, f3: &SparsePoly) -> Result<Matrix> {
    let kind = shared_kind(&[f1, f2, f3])?;
    let SurfaceKind::Tensor { m, n } = kind else {
        return Err(Error::DegreeMismatch("expected bihomogeneous forms".into()));
    };
    let fs = [f1, f2, f3];
    // Rows of the Cayley determinant: f(s,t), f(a,t), f(a,b).
    let rows: Vec<Vec<SparsePoly>> = vec![
        fs.iter().map(|f| to_cayley(f, 0, 1)).collect(),
        fs.iter().map(|f| to_cayley(f, 2, 1)).collect(),
        fs.iter().map(|f| to_cayley(f, 2, 3)).collect(),
    ];
    let mut cayley = SparsePoly::zero(VarSet::Cayley);
    let perms: [([usize; 3], i32); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ];
    for (p, sg) in perms {
        let prod = rows[0][p[0]].mul(&rows[1][p[1]]).mul(&rows[2][p[2]]);
        cayley = if sg > 0 {
            cayley.add(&prod)
        } else {
            cayley.sub(&prod)
        };
    }
    let delta = div_linear_diff(&div_linear_diff(&cayley, 0, 2), 1, 3);
    let (rn, cn) = ((m * 2 * n) as usize, (2 * m * n) as usize);
    let mut mat = Matrix::zeros(rn, cn);
    for (e, c) in delta.terms() {
        let (i, j, kk, l) = (
            e.get(0) as u32,
            e.get(1) as u32,
            e.get(2) as u32,
            e.get(3) as u32,
        );
        assert!(
            i < m && j < 2 * n && kk < 2 * m && l < n,
            "Dixon support bound"
        );
        let row = (i * 2 * n + j) as usize;
        let col = (kk * n + l) as usize;
        let v = mat.get(row, col) + c;
        mat.set(row, col, v);
    }
    Ok(mat)
}

/// Macaulay resultant of three ternary degree-n forms: det(M)/det(M') in the
/// critical degree 3n-2. A vanishing denominator retries with permuted
/// variable roles before giving up.
pub fn macaulay_res(f1: &SparsePoly, f2: &SparsePoly, f3: &SparsePoly) -> Result<Rat> {
    let kind = shared_kind(&[f1, f2, f3])?;
    let SurfaceKind::Triangular { n } = kind else {
        return Err(Error::DegreeMismatch("expected ternary forms".into()));
    };
    let fs = [f1, f2, f3];
    let crit = 3 * n - 2;
    let basis = tri_monomials(crit);
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for perm in perms {
        let mut m = Matrix::zeros(basis.len(), basis.len());
        let mut nonreduced = Vec::new();
        for (row, alpha) in basis.iter().enumerate() {
            let divisible = (0..3).filter(|&v| alpha.get(v) as u32 >= n).count();
            if divisible >= 2 {
                nonreduced.push(row);
            }
            let role = perm
                .iter()
                .copied()
                .find(|&v| alpha.get(v) as u32 >= n)
                .expect("critical-degree monomials have a variable of exponent >= n");
            let shifted = alpha.with(role, alpha.get(role) - n as u16);
            for (e, c) in fs[role].terms() {
                let te = e.add(&shifted);
                let col = basis
                    .index_of(&te)
                    .expect("products stay in the critical degree");
                let v = m.get(row, col) + c;
                m.set(row, col, v);
            }
        }
        let m_prime = m.minor(&nonreduced, &nonreduced)?;
        let dprime = m_prime.det()?;
        if dprime.is_zero() {
            continue;
        }
        return Ok(m.det()? / dprime);
    }
    Err(Error::MacaulayDegenerate)
}

/// The specialized resultant P(X1, X2, X3) = Res(x1 - X1*x4, x2 - X2*x4,
/// x3 - X3*x4), recovered on an integer grid with adaptively measured
/// per-variable degrees. P(0, 0, 0) equals Res(x1, x2, x3).
pub fn specialized_resultant(s: &ParamSurface) -> Result<SparsePoly> {
    let kind = s.kind();
    // The resultant has degree 2mn (resp. n^2) in the coefficients of each
    // argument, which bounds every degree of P.
    let cap = match kind {
        SurfaceKind::Tensor { m, n } => 2 * m * n,
        SurfaceKind::Triangular { n } => n * n,
    };
    let mut hint: Option<Vec<usize>> = None;
    let mut eval = |pt: &[Rat]| -> Result<Rat> {
        let f1 = s.x(0).sub(&s.x(3).scale(&pt[0]));
        let f2 = s.x(1).sub(&s.x(3).scale(&pt[1]));
        let f3 = s.x(2).sub(&s.x(3).scale(&pt[2]));
        let (v, used) = resultant_for_hint(kind, &f1, &f2, &f3, hint.as_deref())?;
        if !used.is_empty() {
            hint = Some(used);
        }
        Ok(v)
    };

    // Degree in each variable, measured along two probe lines.
    let mut bounds = vec![0u32; 3];
    let probes = [
        [frac(5, 7), frac(-3, 11), frac(2, 13)],
        [frac(-4, 9), frac(7, 5), frac(-1, 8)],
    ];
    for v in 0..3 {
        let mut measured = 0u32;
        for probe in &probes {
            let mut values = Vec::with_capacity(cap as usize + 1);
            for x in 0..=cap {
                let mut pt = probe.to_vec();
                pt[v] = rat(x as i64);
                values.push(eval(&pt)?);
            }
            measured = measured.max(univariate_degree(&values));
        }
        bounds[v] = measured;
    }

    let p = interpolate(VarSet::ImplicitAffine, &bounds, &mut eval)?;
    // Held-out point outside the grid guards the measured bounds.
    let held: Vec<Rat> = bounds.iter().map(|&b| rat(b as i64 + 1)).collect();
    if p.eval(&held) != eval(&held)? {
        return Err(Error::DegreeBoundExceeded);
    }
    Ok(p)
}

/// Degree of the polynomial interpolating `values` at 0, 1, ..., len-1,
/// read off the finite-difference table. The values must come from a
/// polynomial of degree < len.
fn univariate_degree(values: &[Rat]) -> u32 {
    let mut diff: Vec<Rat> = values.to_vec();
    let mut degree = 0u32;
    for level in 0..values.len() as u32 {
        if diff.iter().any(|x| !x.is_zero()) {
            degree = level;
        }
        if diff.len() <= 1 {
            break;
        }
        diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    degree
}
