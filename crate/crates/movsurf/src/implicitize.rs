//! Implicit equations from moving quadrics and from the specialized
//! resultant.
//!
//! The moving-quadric route fixes the kernel basis of MQ^2 with an identity
//! tail (tensor case) or an identity tail over a forced zero block
//! (triangular case), reads the quadratic forms off the kernel columns, and
//! takes a determinant. The direct route homogenizes the specialized
//! resultant. On parametrizations without base points both produce a power
//! of the irreducible implicit equation; the power is extracted and
//! reported.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{Label, Matrix};
use crate::moving::{build_mp, build_mp_i, build_mqd, build_msd, choose_index_set, IndexSetI};
use crate::poly::{
    bi_monomials, hom_monomials, tri_monomials, Expo, MonomialBasis, SparsePoly, VarSet,
};
use crate::polymat::PolyMatrix;
use crate::rat::{frac, Rat};
use crate::resultant::{resultant_for, specialized_resultant};
use crate::surface::{ParamSurface, SurfaceKind};

/// Quadric monomial order used for the reordered tableau and the C vector:
/// the four squares first, then the pairwise products.
fn c_order() -> [Expo; 10] {
    [
        Expo::new(&[2, 0, 0, 0]),
        Expo::new(&[0, 2, 0, 0]),
        Expo::new(&[0, 0, 2, 0]),
        Expo::new(&[0, 0, 0, 2]),
        Expo::new(&[1, 1, 0, 0]),
        Expo::new(&[1, 0, 1, 0]),
        Expo::new(&[1, 0, 0, 1]),
        Expo::new(&[0, 1, 1, 0]),
        Expo::new(&[0, 1, 0, 1]),
        Expo::new(&[0, 0, 1, 1]),
    ]
}

fn linear_order() -> [Expo; 4] {
    [
        Expo::new(&[1, 0, 0, 0]),
        Expo::new(&[0, 1, 0, 0]),
        Expo::new(&[0, 0, 1, 0]),
        Expo::new(&[0, 0, 0, 1]),
    ]
}

/// Kernel of MQ^2 in the fixed identity-tail shape, plus the moving-plane
/// kernel of MP in the triangular case.
pub struct KernelTableau {
    pub kind: SurfaceKind,
    pub index_set: Option<IndexSetI>,
    /// Rows indexed by the MQ^2 columns (gamma, monomial); columns by the
    /// free x4^2 monomials.
    pub quadrics: Matrix,
    /// Triangular only: rows indexed by the MP columns (x_k, monomial);
    /// columns by the free x4 monomials of the index set.
    pub planes: Option<Matrix>,
}

fn row_map(labels: &[Label]) -> BTreeMap<(Expo, Expo), usize> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            Label::Block { gamma, mono, .. } => ((*gamma, *mono), i),
            Label::Mono { .. } => panic!("tableau rows carry (gamma, monomial) labels"),
        })
        .collect()
}

fn param_basis(kind: SurfaceKind) -> MonomialBasis {
    match kind {
        SurfaceKind::Tensor { m, n } => bi_monomials(m - 1, n - 1),
        SurfaceKind::Triangular { n } => tri_monomials(n - 1),
    }
}

/// Builds the fixed kernel tableau. Tensor: T = [-MS2^{-1} R over the
/// identity], 10mn x mn with MQ^2 T = 0. Triangular: the same shape with a
/// forced zero block on the removed columns, (5n+5n^2) x (n^2-n)/2, plus the
/// moving-plane tableau T' with MP T' = 0.
pub fn kernel_tableau(s: &ParamSurface, index_set: Option<IndexSetI>) -> Result<KernelTableau> {
    match s.kind() {
        SurfaceKind::Tensor { .. } => {
            let mq2 = build_mqd(s, 2)?;
            let labels = mq2.col_labels.clone().unwrap();
            let x4sq = Expo::new(&[0, 0, 0, 2]);
            let kept: Vec<usize> = (0..mq2.cols())
                .filter(|&c| !matches!(&labels[c], Label::Block { gamma, .. } if *gamma == x4sq))
                .collect();
            let free: Vec<usize> = (0..mq2.cols())
                .filter(|&c| matches!(&labels[c], Label::Block { gamma, .. } if *gamma == x4sq))
                .collect();
            let ms2 = mq2.select_cols(&kept)?;
            debug_assert_eq!(ms2, build_msd(s, 2, None)?);
            let r = mq2.select_cols(&free)?;
            let solved = ms2.solve_matrix(&r).ok_or_else(|| {
                Error::SingularQuadricMatrix("the square moving-quadric matrix is singular".into())
            })?;
            let mut t = Matrix::zeros(mq2.cols(), free.len());
            for (a, &c) in kept.iter().enumerate() {
                for j in 0..free.len() {
                    t.set(c, j, -solved.get(a, j).clone());
                }
            }
            for (j, &c) in free.iter().enumerate() {
                t.set(c, j, Rat::one());
            }
            debug_assert!(mq2.matmul(&t).is_zero());
            t.row_labels = Some(labels);
            Ok(KernelTableau {
                kind: s.kind(),
                index_set: None,
                quadrics: t,
                planes: None,
            })
        }
        SurfaceKind::Triangular { n } => {
            let index_set = match index_set {
                Some(i) => i,
                None => choose_index_set(s)?,
            };
            let mq2 = build_mqd(s, 2)?;
            let labels = mq2.col_labels.clone().unwrap();
            let x4sq = Expo::new(&[0, 0, 0, 2]);
            let mut kept = Vec::new();
            let mut zeroed = Vec::new();
            let mut free = Vec::new();
            for (c, l) in labels.iter().enumerate() {
                let Label::Block { gamma, mono, .. } = l else {
                    unreachable!()
                };
                let in_i = index_set.contains_mono(mono);
                if gamma.get(3) >= 1 && in_i {
                    zeroed.push(c);
                } else if *gamma == x4sq {
                    free.push(c);
                } else {
                    kept.push(c);
                }
            }
            let ms2i = build_msd(s, 2, Some(&index_set))?;
            let kept_matrix = mq2.select_cols(&kept)?;
            debug_assert_eq!(kept_matrix, ms2i);
            let r = mq2.select_cols(&free)?;
            let solved = kept_matrix.solve_matrix(&r).ok_or_else(|| {
                Error::SingularQuadricMatrix(
                    "the restricted moving-quadric matrix is singular".into(),
                )
            })?;
            let mut t = Matrix::zeros(mq2.cols(), free.len());
            for (a, &c) in kept.iter().enumerate() {
                for j in 0..free.len() {
                    t.set(c, j, -solved.get(a, j).clone());
                }
            }
            for (j, &c) in free.iter().enumerate() {
                t.set(c, j, Rat::one());
            }
            // The forced zero block covers the four gamma4 >= 1 columns of
            // each removed monomial.
            debug_assert_eq!(zeroed.len(), 4 * n as usize);
            debug_assert!(mq2.matmul(&t).is_zero());
            t.row_labels = Some(labels);

            // Moving planes: MP = [MP_I, removed x4 columns].
            let mp = build_mp(s);
            let mp_labels = mp.col_labels.clone().unwrap();
            let e4 = Expo::new(&[0, 0, 0, 1]);
            let mut mp_kept = Vec::new();
            let mut mp_free = Vec::new();
            for (c, l) in mp_labels.iter().enumerate() {
                let Label::Block { gamma, mono, .. } = l else {
                    unreachable!()
                };
                if *gamma == e4 && index_set.contains_mono(mono) {
                    mp_free.push(c);
                } else {
                    mp_kept.push(c);
                }
            }
            let mp_i = mp.select_cols(&mp_kept)?;
            debug_assert_eq!(mp_i, build_mp_i(s, &index_set)?);
            let rp = mp.select_cols(&mp_free)?;
            let solved_p = mp_i.solve_matrix(&rp).ok_or_else(|| {
                Error::SingularQuadricMatrix(
                    "the restricted moving-plane matrix is singular".into(),
                )
            })?;
            let mut tp = Matrix::zeros(mp.cols(), mp_free.len());
            for (a, &c) in mp_kept.iter().enumerate() {
                for j in 0..mp_free.len() {
                    tp.set(c, j, -solved_p.get(a, j).clone());
                }
            }
            for (j, &c) in mp_free.iter().enumerate() {
                tp.set(c, j, Rat::one());
            }
            debug_assert!(mp.matmul(&tp).is_zero());
            tp.row_labels = Some(mp_labels);

            Ok(KernelTableau {
                kind: s.kind(),
                index_set: Some(index_set),
                quadrics: t,
                planes: Some(tp),
            })
        }
    }
}

/// The square matrix of forms read off the kernel columns: entry (mono, col)
/// collects sum over gamma of T[(gamma, mono), col] X^gamma. Triangular
/// tableaus append one linear-form column per moving plane.
pub fn build_ttilde(k: &KernelTableau) -> PolyMatrix {
    let basis = param_basis(k.kind);
    let qmap = row_map(k.quadrics.row_labels.as_ref().unwrap());
    let gammas: Vec<Expo> = hom_monomials(VarSet::Implicit, 2).iter().copied().collect();
    let qcols = k.quadrics.cols();
    let pcols = k.planes.as_ref().map(|p| p.cols()).unwrap_or(0);
    PolyMatrix::from_fn(VarSet::Implicit, basis.len(), qcols + pcols, |r, c| {
        let mono = basis.mono(r);
        let mut entry = SparsePoly::zero(VarSet::Implicit);
        if c < qcols {
            for g in &gammas {
                if let Some(&row) = qmap.get(&(*g, *mono)) {
                    entry.add_term(*g, k.quadrics.get(row, c).clone());
                }
            }
        } else {
            let planes = k.planes.as_ref().unwrap();
            let pmap = row_map(planes.row_labels.as_ref().unwrap());
            for g in linear_order() {
                if let Some(&row) = pmap.get(&(g, *mono)) {
                    entry.add_term(g, planes.get(row, c - qcols).clone());
                }
            }
        }
        entry
    })
}

/// Rows of the tableau reordered into blocks of the quadric monomial order,
/// one block per parameter monomial.
fn reordered_tableau(k: &KernelTableau) -> Matrix {
    let basis = param_basis(k.kind);
    let qmap = row_map(k.quadrics.row_labels.as_ref().unwrap());
    let order = c_order();
    Matrix::from_fn(10 * basis.len(), k.quadrics.cols(), |r, c| {
        let (block, slot) = (r / 10, r % 10);
        match qmap.get(&(order[slot], *basis.mono(block))) {
            Some(&row) => k.quadrics.get(row, c).clone(),
            None => Rat::zero(),
        }
    })
}

fn reordered_plane_tableau(k: &KernelTableau) -> Option<Matrix> {
    let planes = k.planes.as_ref()?;
    let basis = param_basis(k.kind);
    let pmap = row_map(planes.row_labels.as_ref().unwrap());
    let order = linear_order();
    Some(Matrix::from_fn(4 * basis.len(), planes.cols(), |r, c| {
        let (block, slot) = (r / 4, r % 4);
        match pmap.get(&(order[slot], *basis.mono(block))) {
            Some(&row) => planes.get(row, c).clone(),
            None => Rat::zero(),
        }
    }))
}

/// Block upper-triangular matrix with the monomial row vector `cells` in
/// every block on or above the diagonal.
fn upper_blocks(cells: &[Expo], blocks: usize) -> PolyMatrix {
    let w = cells.len();
    PolyMatrix::from_fn(VarSet::Implicit, blocks, w * blocks, |r, c| {
        let (block, slot) = (c / w, c % w);
        if block >= r {
            SparsePoly::monomial(VarSet::Implicit, cells[slot], Rat::one())
        } else {
            SparsePoly::zero(VarSet::Implicit)
        }
    })
}

/// The product of the block matrix of quadric monomial rows with the
/// reordered tableau. Tensor: M * T with |T~| = +-|M * T|. Triangular: the
/// combined [M * T, M' * T'] including the moving-plane columns.
pub fn build_mt_product(k: &KernelTableau) -> PolyMatrix {
    let basis_len = param_basis(k.kind).len();
    let m = upper_blocks(&c_order(), basis_len);
    let product = m.mul_rat(&reordered_tableau(k));
    match reordered_plane_tableau(k) {
        None => product,
        Some(tp) => {
            let mp = upper_blocks(&linear_order(), basis_len);
            product.hstack(&mp.mul_rat(&tp))
        }
    }
}

/// How an implicit equation was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    MovingQuadrics,
    DirectResultant,
}

/// An implicit equation in primitive normal form. `f` equals a constant
/// times `base^exponent`; `exponent > 1` flags a non-proper parametrization.
#[derive(Clone, Debug)]
pub struct ImplicitResult {
    pub f: SparsePoly,
    pub method: Method,
    pub base: SparsePoly,
    pub exponent: u32,
}

fn det_degree_bound(k: &KernelTableau) -> u32 {
    match k.kind {
        SurfaceKind::Tensor { m, n } => 2 * m * n,
        SurfaceKind::Triangular { n } => n * n,
    }
}

/// Implicit equation by the method of moving quadrics. Requires a nonzero
/// resultant of (x1, x2, x3) and a nonsingular square quadric matrix. The
/// tensor route also checks |T~| = +-|M*T| and Res * |M*T| = +-P^h exactly.
pub fn implicit_moving_quadrics(s: &ParamSurface) -> Result<ImplicitResult> {
    let (res, _) = resultant_for(s.kind(), s.x(0), s.x(1), s.x(2))?;
    if res.is_zero() {
        return Err(Error::SingularQuadricMatrix(
            "the resultant of (x1, x2, x3) vanishes".into(),
        ));
    }
    let k = kernel_tableau(s, None)?;
    let bound = det_degree_bound(&k);
    let ttilde = build_ttilde(&k);
    let det_t = ttilde.poly_det(bound)?;
    if det_t.is_zero() {
        return Err(Error::SingularQuadricMatrix(
            "the moving-surface determinant vanishes identically".into(),
        ));
    }
    let product = build_mt_product(&k);
    let det_p = product.poly_det(bound)?;
    if det_t != det_p && det_t != det_p.neg() {
        return Err(Error::Identity(
            "|T~| = +-|M*T| failed on this instance".into(),
        ));
    }
    if let SurfaceKind::Tensor { .. } = s.kind() {
        let p = specialized_resultant(s)?;
        let ph = p.homogenize(p.total_degree())?;
        let lhs = det_p.scale(&res);
        if lhs != ph && lhs != ph.neg() {
            return Err(Error::Identity(
                "Res * |M*T| = +-P^h failed on this instance".into(),
            ));
        }
    }
    let f = det_t.primitive_normal_form()?;
    let (base, exponent) = extract_power(&f);
    Ok(ImplicitResult {
        f,
        method: Method::MovingQuadrics,
        base,
        exponent,
    })
}

/// Implicit equation as the homogenized specialized resultant. Fails with
/// `BasePoints` when the resultant vanishes identically.
pub fn implicit_direct_resultant(s: &ParamSurface) -> Result<ImplicitResult> {
    let p = specialized_resultant(s)?;
    if p.is_zero() {
        return Err(Error::BasePoints);
    }
    let f = p.homogenize(p.total_degree())?.primitive_normal_form()?;
    let (base, exponent) = extract_power(&f);
    Ok(ImplicitResult {
        f,
        method: Method::DirectResultant,
        base,
        exponent,
    })
}

/// Largest k >= 2 with f = c * g^k for a homogeneous g, found by solving the
/// linear system g * df/dXi = k * f * dg/dXi and verifying the candidate
/// exactly. Returns (f, 1) when f is not a proper power.
pub fn extract_power(f: &SparsePoly) -> (SparsePoly, u32) {
    let d = f.total_degree();
    if d == 0 || f.is_zero() {
        return (f.clone(), 1);
    }
    let mut divisors: Vec<u32> = (2..=d).filter(|k| d.is_multiple_of(*k)).collect();
    divisors.sort_unstable_by(|a, b| b.cmp(a));
    for k in divisors {
        let e = d / k;
        let candidates = hom_monomials(VarSet::Implicit, e);
        let eq_basis = hom_monomials(VarSet::Implicit, d + e - 1);
        let mut system = Matrix::zeros(4 * eq_basis.len(), candidates.len());
        for (col, alpha) in candidates.iter().enumerate() {
            for var in 0..4 {
                let row_off = var * eq_basis.len();
                // k * f * d(X^alpha)/dX_var
                let a = alpha.get(var);
                if a > 0 {
                    let shifted = alpha.with(var, a - 1);
                    let factor = Rat::from_integer((k as i64 * a as i64).into());
                    for (be, bc) in f.terms() {
                        let te = be.add(&shifted);
                        let row = row_off + eq_basis.index_of(&te).unwrap();
                        let v = system.get(row, col) + bc * &factor;
                        system.set(row, col, v);
                    }
                }
                // - df/dX_var * X^alpha
                for (be, bc) in f.derivative(var).terms() {
                    let te = be.add(alpha);
                    let row = row_off + eq_basis.index_of(&te).unwrap();
                    let v = system.get(row, col) - bc;
                    system.set(row, col, v);
                }
            }
        }
        let kernel = system.nullspace();
        if kernel.len() != 1 {
            continue;
        }
        let mut g = SparsePoly::zero(VarSet::Implicit);
        for (i, c) in kernel[0].iter().enumerate() {
            g.add_term(*candidates.mono(i), c.clone());
        }
        let Ok(g) = g.primitive_normal_form() else {
            continue;
        };
        let gk = g.pow(k);
        let (Some((_, f_lead)), Some((_, gk_lead))) = (f.leading(), gk.leading()) else {
            continue;
        };
        let c = f_lead / gk_lead;
        if gk.scale(&c) == *f {
            return (g, k);
        }
    }
    (f.clone(), 1)
}

/// Point-sampling validation report.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub trials: u32,
    pub zeros: u32,
    pub resamples: u32,
    pub failures: Vec<(Vec<Rat>, Rat)>,
}

impl ValidationReport {
    pub fn all_zero(&self) -> bool {
        self.zeros == self.trials
    }
}

/// Evaluates `f` at the images of random rational parameter points; every
/// value must be exactly zero when `f` vanishes on the surface.
pub fn validate_on_surface(
    f: &SparsePoly,
    s: &ParamSurface,
    trials: u32,
    seed: u64,
) -> Result<ValidationReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.vars() != VarSet::Implicit || !f.is_homogeneous(f.total_degree()) {
        return Err(Error::DegreeMismatch(
            "validation expects a homogeneous polynomial in X1..X4".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nvars = s.vars().len();
    let mut zeros = 0;
    let mut resamples = 0;
    let mut failures = Vec::new();
    for _ in 0..trials {
        let image = loop {
            let pt: Vec<Rat> = (0..nvars)
                .map(|_| frac(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
                .collect();
            let degenerate = match s.kind() {
                SurfaceKind::Tensor { .. } => {
                    (pt[0].is_zero() && pt[1].is_zero()) || (pt[2].is_zero() && pt[3].is_zero())
                }
                SurfaceKind::Triangular { .. } => pt.iter().all(|x| x.is_zero()),
            };
            if degenerate {
                resamples += 1;
                continue;
            }
            let image = s.image(&pt);
            if image.iter().all(|x| x.is_zero()) {
                resamples += 1;
                continue;
            }
            break (pt, image);
        };
        let (pt, image) = image;
        let value = f.eval(&image);
        if value.is_zero() {
            zeros += 1;
        } else {
            failures.push((pt, value));
        }
    }
    Ok(ValidationReport {
        trials,
        zeros,
        resamples,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_surface;
    use crate::parse::parse_poly;
    use crate::rat::rat;
    use crate::surface::random_surface;

    fn bilinear_demo() -> ParamSurface {
        parse_surface(include_str!("../samples/tensor_bilinear.txt")).unwrap()
    }

    #[test]
    fn tensor_tableau_shape_and_kernel_property() {
        let s = bilinear_demo();
        let k = kernel_tableau(&s, None).unwrap();
        assert_eq!((k.quadrics.rows(), k.quadrics.cols()), (10, 1));
        assert_eq!(k.quadrics.get(9, 0), &rat(1));
        let mq2 = build_mqd(&s, 2).unwrap();
        assert!(mq2.matmul(&k.quadrics).is_zero());
    }

    #[test]
    fn ttilde_at_unit_point_is_identity() {
        let s = bilinear_demo();
        let k = kernel_tableau(&s, None).unwrap();
        let tt = build_ttilde(&k);
        let at_unit = tt.eval_point(&[rat(0), rat(0), rat(0), rat(1)]);
        assert_eq!(at_unit, Matrix::identity(1));

        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let s2 = random_surface(SurfaceKind::Tensor { m: 1, n: 2 }, &mut rng);
        let k2 = kernel_tableau(&s2, None).unwrap();
        let tt2 = build_ttilde(&k2);
        let at_unit2 = tt2.eval_point(&[rat(0), rat(0), rat(0), rat(1)]);
        assert_eq!(at_unit2, Matrix::identity(2));
    }

    #[test]
    fn product_rows_replay_to_ttilde_rows() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let s = random_surface(SurfaceKind::Tensor { m: 1, n: 2 }, &mut rng);
        let k = kernel_tableau(&s, None).unwrap();
        let tt = build_ttilde(&k);
        let prod = build_mt_product(&k);
        let rows = tt.rows();
        for r in 0..rows {
            for c in 0..tt.cols() {
                let replay = if r + 1 < rows {
                    prod.get(r, c).sub(prod.get(r + 1, c))
                } else {
                    prod.get(r, c).clone()
                };
                assert_eq!(&replay, tt.get(r, c));
            }
        }
    }

    #[test]
    fn moving_quadrics_on_bilinear_demo() {
        let s = bilinear_demo();
        let out = implicit_moving_quadrics(&s).unwrap();
        assert!(out.f.is_homogeneous(2));
        assert_eq!(out.exponent, 1);
        // The image of s=u=t=v=1 is (2 : 1 : 1 : 3).
        assert!(out.f.eval(&[rat(2), rat(1), rat(1), rat(3)]).is_zero());
        let report = validate_on_surface(&out.f, &s, 25, 7).unwrap();
        assert!(report.all_zero());
    }

    #[test]
    fn direct_resultant_agrees_with_moving_quadrics() {
        let s = bilinear_demo();
        let mq = implicit_moving_quadrics(&s).unwrap();
        let dr = implicit_direct_resultant(&s).unwrap();
        assert_eq!(mq.base, dr.base);
    }

    #[test]
    fn triangular_tableau_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let s = random_surface(SurfaceKind::Triangular { n: 2 }, &mut rng);
        let k = kernel_tableau(&s, None).unwrap();
        assert_eq!((k.quadrics.rows(), k.quadrics.cols()), (30, 1));
        let mq2 = build_mqd(&s, 2).unwrap();
        assert!(mq2.matmul(&k.quadrics).is_zero());
        let tp = k.planes.as_ref().unwrap();
        assert_eq!((tp.rows(), tp.cols()), (12, 2));
        assert!(build_mp(&s).matmul(tp).is_zero());
        // One quadric column plus two plane columns.
        let tt = build_ttilde(&k);
        assert_eq!((tt.rows(), tt.cols()), (3, 3));
        let unit = tt.eval_point(&[rat(0), rat(0), rat(0), rat(1)]);
        let d = unit.det().unwrap();
        assert!(d == rat(1) || d == rat(-1));
    }

    #[test]
    fn triangular_moving_quadrics_vanish_on_surface() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let s = random_surface(SurfaceKind::Triangular { n: 1 }, &mut rng);
        let out = implicit_moving_quadrics(&s).unwrap();
        assert!(out.f.is_homogeneous(1));
        let report = validate_on_surface(&out.f, &s, 10, 3).unwrap();
        assert!(report.all_zero());

        let s2 = random_surface(SurfaceKind::Triangular { n: 2 }, &mut rng);
        let out2 = implicit_moving_quadrics(&s2).unwrap();
        assert!(out2.f.is_homogeneous(4));
        let report2 = validate_on_surface(&out2.f, &s2, 10, 4).unwrap();
        assert!(report2.all_zero());
    }

    #[test]
    fn triangular_methods_share_the_irreducible_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        loop {
            let s = random_surface(SurfaceKind::Triangular { n: 2 }, &mut rng);
            let mq = match implicit_moving_quadrics(&s) {
                Ok(v) => v,
                Err(_) => continue,
            };
            let dr = implicit_direct_resultant(&s).unwrap();
            assert_eq!(mq.base, dr.base);
            break;
        }
    }

    #[test]
    fn base_points_detected() {
        let s = parse_surface(include_str!("../samples/base_points.txt")).unwrap();
        assert!(matches!(
            implicit_direct_resultant(&s),
            Err(Error::BasePoints)
        ));
    }

    #[test]
    fn power_extraction() {
        let plane = parse_poly("X1+X2+X3-X4", VarSet::Implicit).unwrap();
        let f = plane.pow(3).scale(&rat(5)).primitive_normal_form().unwrap();
        let (base, k) = extract_power(&f);
        assert_eq!(k, 3);
        assert_eq!(base, plane);

        let not_power = parse_poly("X1*X2-X3*X4", VarSet::Implicit).unwrap();
        let (base, k) = extract_power(&not_power);
        assert_eq!(k, 1);
        assert_eq!(base, not_power);
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        let s = bilinear_demo();
        let zero = SparsePoly::zero(VarSet::Implicit);
        assert!(validate_on_surface(&zero, &s, 5, 1).is_err());
        let x1 = parse_poly("X1", VarSet::Implicit).unwrap();
        let report = validate_on_surface(&x1, &s, 10, 1).unwrap();
        assert!(!report.all_zero());
        let inhom = parse_poly("X1+1", VarSet::Implicit).unwrap();
        assert!(validate_on_surface(&inhom, &s, 5, 1).is_err());
    }
}
