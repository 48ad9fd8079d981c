//! Coefficient matrices of the moving-plane and moving-d-surface maps, and
//! the solution spaces of moving surfaces that follow a parametrization.
//!
//! Naming follows the linear maps they represent:
//! * `MP`   — (p1..p4) -> sum pi*xi on coefficient polynomials one degree
//!   below the surface;
//! * `MQ^d` — (p_gamma) -> sum p_gamma x^gamma over all |gamma| = d;
//! * `MS^d` — restriction of MQ^d to gamma with gamma4 <= 1 (square);
//! * `MT^d` — the gamma1 = 0 part of MS^d together with a free multiple
//!   of x1.
//!
//! Row labels always list the monomial basis of the target space in the
//! fixed order; column labels carry (gamma, source monomial) pairs.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{Label, Matrix};
use crate::poly::{
    bi_monomials, hom_monomials, monomial_string, tri_monomials, Expo, MonomialBasis, SparsePoly,
    VarSet,
};
use crate::rat::Rat;
use crate::surface::{ParamSurface, SurfaceKind};

/// The multi-index families indexing moving-surface coefficients.
///
/// `gamma` is every multi-index of total degree d; `gamma0` keeps those with
/// gamma4 <= 1; `gamma1` further requires gamma1 = 0; `gamma4` keeps the
/// gamma0 members with gamma4 = 0. All are listed lexicographically
/// descending.
#[derive(Clone, Debug)]
pub struct GammaSet {
    pub d: u32,
    pub gamma: Vec<Expo>,
    pub gamma0: Vec<Expo>,
    pub gamma1: Vec<Expo>,
    pub gamma4: Vec<Expo>,
}

pub fn gamma_sets(d: u32) -> Result<GammaSet> {
    if d < 1 {
        return Err(Error::Input("gamma sets need d >= 1".into()));
    }
    let gamma: Vec<Expo> = hom_monomials(VarSet::Implicit, d).iter().copied().collect();
    let gamma0: Vec<Expo> = gamma.iter().copied().filter(|g| g.get(3) <= 1).collect();
    let gamma1: Vec<Expo> = gamma0.iter().copied().filter(|g| g.get(0) == 0).collect();
    let gamma4: Vec<Expo> = gamma0.iter().copied().filter(|g| g.get(3) == 0).collect();
    debug_assert_eq!(gamma0.len() as u32, (d + 1) * (d + 1));
    Ok(GammaSet {
        d,
        gamma,
        gamma0,
        gamma1,
        gamma4,
    })
}

/// n parameter-monomial exponent pairs (j, k), j + k <= n - 1, marking the
/// x4 columns removed from the triangular matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSetI {
    pairs: Vec<(u16, u16)>,
}

impl IndexSetI {
    pub fn new(n: u32, pairs: Vec<(u16, u16)>) -> Result<Self> {
        if pairs.len() as u32 != n {
            return Err(Error::MalformedIndexSet(format!(
                "expected {} pairs, got {}",
                n,
                pairs.len()
            )));
        }
        let mut sorted = pairs;
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() as u32 != n {
            return Err(Error::MalformedIndexSet("duplicate pair".into()));
        }
        for &(j, k) in &sorted {
            if (j + k) as u32 > n.saturating_sub(1) {
                return Err(Error::MalformedIndexSet(format!(
                    "pair ({}, {}) does not index a degree-{} monomial",
                    j,
                    k,
                    n - 1
                )));
            }
        }
        Ok(IndexSetI { pairs: sorted })
    }

    pub fn pairs(&self) -> &[(u16, u16)] {
        &self.pairs
    }

    /// True when the degree-(n-1) monomial s^j t^k u^(n-1-j-k) is removed.
    pub fn contains_mono(&self, mono: &Expo) -> bool {
        self.pairs
            .binary_search(&(mono.get(0), mono.get(1)))
            .is_ok()
    }
}

impl fmt::Display for IndexSetI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(j, k)| format!("({},{})", j, k))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// One column block of a multiplication-map matrix: multiply the monomials
/// of `source` by `multiplier`, tagging columns with `gamma`.
pub(crate) struct ColumnBlock<'a> {
    pub multiplier: SparsePoly,
    pub source: &'a MonomialBasis,
    pub gamma: Expo,
}

/// Matrix of a map (p_blocks) -> sum p_b * multiplier_b in the monomial
/// bases: rows are target monomials, columns run through the blocks in
/// order, inner loop over the source basis.
pub(crate) fn multiplication_matrix(target: &MonomialBasis, blocks: &[ColumnBlock]) -> Matrix {
    let cols: usize = blocks.iter().map(|b| b.source.len()).sum();
    let mut m = Matrix::zeros(target.len(), cols);
    let mut col_labels = Vec::with_capacity(cols);
    let mut col = 0;
    for block in blocks {
        for mono in block.source.iter() {
            for (e, c) in block.multiplier.terms() {
                let te = e.add(mono);
                let row = target.index_of(&te).unwrap_or_else(|| {
                    panic!(
                        "product monomial {} falls outside the target space",
                        monomial_string(target.vars(), &te)
                    )
                });
                let v = m.get(row, col) + c;
                m.set(row, col, v);
            }
            col_labels.push(Label::Block {
                gamma: block.gamma,
                vars: block.source.vars(),
                mono: *mono,
            });
            col += 1;
        }
    }
    m.row_labels = Some(
        target
            .iter()
            .map(|e| Label::Mono {
                vars: target.vars(),
                mono: *e,
            })
            .collect(),
    );
    m.col_labels = Some(col_labels);
    m
}

fn source_basis(kind: SurfaceKind) -> MonomialBasis {
    match kind {
        SurfaceKind::Tensor { m, n } => bi_monomials(m - 1, n - 1),
        SurfaceKind::Triangular { n } => tri_monomials(n - 1),
    }
}

fn target_basis(kind: SurfaceKind, d: u32) -> MonomialBasis {
    match kind {
        SurfaceKind::Tensor { m, n } => bi_monomials((d + 1) * m - 1, (d + 1) * n - 1),
        SurfaceKind::Triangular { n } => tri_monomials((d + 1) * n - 1),
    }
}

/// Source basis with the monomials indexed by I removed.
fn restricted_basis(kind: SurfaceKind, index_set: &IndexSetI) -> MonomialBasis {
    let full = source_basis(kind);
    let keep: Vec<Expo> = full
        .iter()
        .copied()
        .filter(|e| !index_set.contains_mono(e))
        .collect();
    match kind {
        SurfaceKind::Triangular { .. } => MonomialBasis::from_filtered(VarSet::Triangular, keep),
        _ => unreachable!("index sets apply to triangular surfaces only"),
    }
}

/// Matrix of (p1..p4) -> sum pi*xi. Square of size 4mn in the tensor case;
/// (2n^2+n) x (2n^2+2n) in the triangular case.
pub fn build_mp(s: &ParamSurface) -> Matrix {
    let src = source_basis(s.kind());
    let target = target_basis(s.kind(), 1);
    let blocks: Vec<ColumnBlock> = (0..4)
        .map(|i| ColumnBlock {
            multiplier: s.x(i).clone(),
            source: &src,
            gamma: Expo::unit(4, i),
        })
        .collect();
    multiplication_matrix(&target, &blocks)
}

/// Triangular MP with the x4 columns indexed by I removed; square.
pub fn build_mp_i(s: &ParamSurface, index_set: &IndexSetI) -> Result<Matrix> {
    let SurfaceKind::Triangular { n } = s.kind() else {
        return Err(Error::MalformedSurface(
            "index-set restriction applies to triangular surfaces".into(),
        ));
    };
    validate_index_set(n, index_set)?;
    let src = source_basis(s.kind());
    let x4_src = restricted_basis(s.kind(), index_set);
    let target = target_basis(s.kind(), 1);
    let mut blocks = Vec::new();
    for i in 0..3 {
        blocks.push(ColumnBlock {
            multiplier: s.x(i).clone(),
            source: &src,
            gamma: Expo::unit(4, i),
        });
    }
    blocks.push(ColumnBlock {
        multiplier: s.x(3).clone(),
        source: &x4_src,
        gamma: Expo::unit(4, 3),
    });
    Ok(multiplication_matrix(&target, &blocks))
}

fn validate_index_set(n: u32, index_set: &IndexSetI) -> Result<()> {
    if index_set.pairs().len() as u32 != n {
        return Err(Error::MalformedIndexSet(format!(
            "index set has {} pairs, surface degree needs {}",
            index_set.pairs().len(),
            n
        )));
    }
    for &(j, k) in index_set.pairs() {
        if (j + k) as u32 + 1 > n {
            return Err(Error::MalformedIndexSet(format!(
                "pair ({},{}) exceeds degree {}",
                j,
                k,
                n - 1
            )));
        }
    }
    Ok(())
}

/// Matrix of (p_gamma)_{|gamma|=d} -> sum p_gamma x^gamma.
pub fn build_mqd(s: &ParamSurface, d: u32) -> Result<Matrix> {
    let gs = gamma_sets(d)?;
    let src = source_basis(s.kind());
    let target = target_basis(s.kind(), d);
    let blocks: Vec<ColumnBlock> = gs
        .gamma
        .iter()
        .map(|g| ColumnBlock {
            multiplier: s.x_power(g),
            source: &src,
            gamma: *g,
        })
        .collect();
    Ok(multiplication_matrix(&target, &blocks))
}

/// Matrix of the gamma0 restriction of the moving-d-surface map. Square in
/// the tensor case; the triangular case removes, for every gamma with
/// gamma4 = 1, the source monomials indexed by I.
pub fn build_msd(s: &ParamSurface, d: u32, index_set: Option<&IndexSetI>) -> Result<Matrix> {
    let gs = gamma_sets(d)?;
    let src = source_basis(s.kind());
    let target = target_basis(s.kind(), d);
    match s.kind() {
        SurfaceKind::Tensor { .. } => {
            let blocks: Vec<ColumnBlock> = gs
                .gamma0
                .iter()
                .map(|g| ColumnBlock {
                    multiplier: s.x_power(g),
                    source: &src,
                    gamma: *g,
                })
                .collect();
            Ok(multiplication_matrix(&target, &blocks))
        }
        SurfaceKind::Triangular { n } => {
            let index_set = index_set.ok_or_else(|| {
                Error::MalformedIndexSet("triangular case requires an index set".into())
            })?;
            validate_index_set(n, index_set)?;
            let restricted = restricted_basis(s.kind(), index_set);
            let blocks: Vec<ColumnBlock> = gs
                .gamma0
                .iter()
                .map(|g| ColumnBlock {
                    multiplier: s.x_power(g),
                    source: if g.get(3) == 1 { &restricted } else { &src },
                    gamma: *g,
                })
                .collect();
            Ok(multiplication_matrix(&target, &blocks))
        }
    }
}

/// Matrix of ((p_gamma)_{gamma1=0}, q) -> sum p_gamma x^gamma + q*x1, with
/// the same index-set restriction as `build_msd` in the triangular case.
pub fn build_mtd(s: &ParamSurface, d: u32, index_set: Option<&IndexSetI>) -> Result<Matrix> {
    let gs = gamma_sets(d)?;
    let src = source_basis(s.kind());
    let target = target_basis(s.kind(), d);
    let q_src = match s.kind() {
        SurfaceKind::Tensor { m, n } => bi_monomials(d * m - 1, d * n - 1),
        SurfaceKind::Triangular { n } => tri_monomials(d * n - 1),
    };
    let restricted = match (s.kind(), index_set) {
        (SurfaceKind::Triangular { n }, Some(i)) => {
            validate_index_set(n, i)?;
            Some(restricted_basis(s.kind(), i))
        }
        (SurfaceKind::Triangular { .. }, None) => {
            return Err(Error::MalformedIndexSet(
                "triangular case requires an index set".into(),
            ))
        }
        _ => None,
    };
    let mut blocks: Vec<ColumnBlock> = Vec::new();
    for g in &gs.gamma1 {
        let source = match (&restricted, g.get(3)) {
            (Some(r), 1) => r,
            _ => &src,
        };
        blocks.push(ColumnBlock {
            multiplier: s.x_power(g),
            source,
            gamma: *g,
        });
    }
    blocks.push(ColumnBlock {
        multiplier: s.x(0).clone(),
        source: &q_src,
        gamma: Expo::unit(4, 0),
    });
    Ok(multiplication_matrix(&target, &blocks))
}

/// A moving d-surface: for each gamma, the parameter-polynomial coefficient
/// of X^gamma.
#[derive(Clone, Debug)]
pub struct MovingSurface {
    pub d: u32,
    pub coeffs: BTreeMap<Expo, SparsePoly>,
}

impl MovingSurface {
    /// Substitutes X^gamma -> x^gamma; the result is zero exactly when the
    /// moving surface follows the parametrization.
    pub fn follows(&self, s: &ParamSurface) -> bool {
        let mut acc = SparsePoly::zero(s.vars());
        for (g, coeff) in &self.coeffs {
            acc = acc.add(&coeff.mul(&s.x_power(g)));
        }
        acc.is_zero()
    }
}

impl fmt::Display for MovingSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, coeff) in self.coeffs.iter().rev() {
            if coeff.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", coeff, monomial_string(VarSet::Implicit, g))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Degree of the moving-surface family in the parameters.
#[derive(Clone, Copy, Debug)]
pub enum Sigma {
    Bi(u32, u32),
    Tri(u32),
}

/// Basis of the moving d-surfaces of the given parameter (bi)degree that
/// follow the surface, found as the kernel of the full coefficient matrix.
pub fn moving_space_basis(s: &ParamSurface, d: u32, sigma: Sigma) -> Result<Vec<MovingSurface>> {
    let gs = gamma_sets(d)?;
    let param_basis = match (s.kind(), sigma) {
        (SurfaceKind::Tensor { .. }, Sigma::Bi(s1, s2)) => bi_monomials(s1, s2),
        (SurfaceKind::Triangular { .. }, Sigma::Tri(sg)) => tri_monomials(sg),
        _ => {
            return Err(Error::Input(
                "sigma shape does not match the surface case".into(),
            ))
        }
    };
    let target = match (s.kind(), sigma) {
        (SurfaceKind::Tensor { m, n }, Sigma::Bi(s1, s2)) => bi_monomials(d * m + s1, d * n + s2),
        (SurfaceKind::Triangular { n }, Sigma::Tri(sg)) => tri_monomials(d * n + sg),
        _ => unreachable!(),
    };
    let blocks: Vec<ColumnBlock> = gs
        .gamma
        .iter()
        .map(|g| ColumnBlock {
            multiplier: s.x_power(g),
            source: &param_basis,
            gamma: *g,
        })
        .collect();
    let m = multiplication_matrix(&target, &blocks);
    let kernel = m.nullspace();
    let labels = m.col_labels.as_ref().unwrap();
    Ok(kernel
        .into_iter()
        .map(|v| vector_to_moving_surface(d, &v, labels, s.vars()))
        .collect())
}

pub(crate) fn vector_to_moving_surface(
    d: u32,
    v: &[Rat],
    col_labels: &[Label],
    vars: VarSet,
) -> MovingSurface {
    let mut coeffs: BTreeMap<Expo, SparsePoly> = BTreeMap::new();
    for (val, label) in v.iter().zip(col_labels) {
        let Label::Block { gamma, mono, .. } = label else {
            panic!("moving-surface columns must carry (gamma, monomial) labels")
        };
        coeffs
            .entry(*gamma)
            .or_insert_with(|| SparsePoly::zero(vars))
            .add_term(*mono, val.clone());
    }
    MovingSurface { d, coeffs }
}

/// First index set I, in lexicographic order on the pair tuples, whose
/// restricted matrix MP_I is nonsingular.
pub fn choose_index_set(s: &ParamSurface) -> Result<IndexSetI> {
    let SurfaceKind::Triangular { n } = s.kind() else {
        return Err(Error::MalformedSurface(
            "index sets apply to triangular surfaces".into(),
        ));
    };
    for candidate in index_set_candidates(n) {
        let mp_i = build_mp_i(s, &candidate)?;
        if !mp_i.det()?.is_zero() {
            return Ok(candidate);
        }
    }
    Err(Error::NoValidIndexSet(
        "every restricted matrix is singular: the surface has more moving planes than expected"
            .into(),
    ))
}

/// All candidate index sets, n-subsets of the degree-(n-1) exponent pairs in
/// lexicographic order.
pub fn index_set_candidates(n: u32) -> Vec<IndexSetI> {
    let mut pairs = Vec::new();
    for j in 0..n as u16 {
        for k in 0..(n as u16 - j) {
            pairs.push((j, k));
        }
    }
    pairs.sort_unstable();
    let mut out = Vec::new();
    let k = n as usize;
    let mut idx: Vec<usize> = (0..k).collect();
    if k > pairs.len() {
        return out;
    }
    loop {
        out.push(IndexSetI::new(n, idx.iter().map(|&i| pairs[i]).collect()).unwrap());
        // next lexicographic combination
        let mut t = k;
        while t > 0 {
            t -= 1;
            if idx[t] + (k - t) < pairs.len() {
                idx[t] += 1;
                for u in t + 1..k {
                    idx[u] = idx[u - 1] + 1;
                }
                break;
            }
            if t == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

impl MonomialBasis {
    /// Keeps an explicit monomial subset, preserving the fixed order.
    pub(crate) fn from_filtered(vars: VarSet, monos: Vec<Expo>) -> MonomialBasis {
        MonomialBasis::new_sorted(vars, monos)
    }
}
