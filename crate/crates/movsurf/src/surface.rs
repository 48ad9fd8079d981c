//! Rational surface parametrizations.

use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{Expo, SparsePoly, VarSet};
use crate::rat::rat;

/// Tensor surfaces are given by four bihomogeneous polynomials of bidegree
/// (m, n) in (s,u),(t,v); triangular surfaces by four ternary forms of
/// degree n in (s,t,u).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SurfaceKind {
    Tensor { m: u32, n: u32 },
    Triangular { n: u32 },
}

impl SurfaceKind {
    pub fn vars(&self) -> VarSet {
        match self {
            SurfaceKind::Tensor { .. } => VarSet::Tensor,
            SurfaceKind::Triangular { .. } => VarSet::Triangular,
        }
    }
}

/// A parametrization (x1 : x2 : x3 : x4) of a rational surface.
#[derive(Clone, Debug)]
pub struct ParamSurface {
    kind: SurfaceKind,
    x: [SparsePoly; 4],
}

impl ParamSurface {
    pub fn new(kind: SurfaceKind, x: [SparsePoly; 4]) -> Result<Self> {
        let degrees_ok = match kind {
            SurfaceKind::Tensor { m, n } => m >= 1 && n >= 1,
            SurfaceKind::Triangular { n } => n >= 1,
        };
        if !degrees_ok {
            return Err(Error::MalformedSurface(
                "surface degrees must be at least 1".into(),
            ));
        }
        for (i, p) in x.iter().enumerate() {
            if p.vars() != kind.vars() {
                return Err(Error::MalformedSurface(format!(
                    "x{} uses the wrong variable set",
                    i + 1
                )));
            }
            if p.is_zero() {
                return Err(Error::MalformedSurface(format!(
                    "x{} is identically zero",
                    i + 1
                )));
            }
            let ok = match kind {
                SurfaceKind::Tensor { m, n } => p.is_bihomogeneous(m, n),
                SurfaceKind::Triangular { n } => p.is_homogeneous(n),
            };
            if !ok {
                return Err(Error::MalformedSurface(format!(
                    "x{} does not have the declared degree",
                    i + 1
                )));
            }
        }
        Ok(ParamSurface { kind, x })
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn vars(&self) -> VarSet {
        self.kind.vars()
    }

    pub fn x(&self, i: usize) -> &SparsePoly {
        &self.x[i]
    }

    pub fn coords(&self) -> &[SparsePoly; 4] {
        &self.x
    }

    /// The monomial x^gamma of the coordinate polynomials.
    pub fn x_power(&self, gamma: &Expo) -> SparsePoly {
        let mut out = SparsePoly::constant(self.vars(), rat(1));
        for i in 0..4 {
            let e = gamma.get(i);
            if e > 0 {
                out = out.mul(&self.x[i].pow(e as u32));
            }
        }
        out
    }

    /// Image of a parameter point as a projective 4-tuple.
    pub fn image(&self, point: &[crate::rat::Rat]) -> [crate::rat::Rat; 4] {
        [
            self.x[0].eval(point),
            self.x[1].eval(point),
            self.x[2].eval(point),
            self.x[3].eval(point),
        ]
    }
}

/// Random surface with integer coefficients in [-9, 9]; resamples any
/// coordinate that comes out identically zero.
pub fn random_surface(kind: SurfaceKind, rng: &mut impl Rng) -> ParamSurface {
    let vars = kind.vars();
    let basis = match kind {
        SurfaceKind::Tensor { m, n } => crate::poly::bi_monomials(m, n),
        SurfaceKind::Triangular { n } => crate::poly::tri_monomials(n),
    };
    let sample = |rng: &mut dyn rand::RngCore| loop {
        let mut p = SparsePoly::zero(vars);
        for e in basis.iter() {
            p.add_term(*e, rat(rng.gen_range(-9..=9)));
        }
        if !p.is_zero() {
            return p;
        }
    };
    let x = [sample(rng), sample(rng), sample(rng), sample(rng)];
    ParamSurface::new(kind, x).expect("random coordinates are homogeneous by construction")
}
