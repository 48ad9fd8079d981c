//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial carries a variable-set tag. The term order is graded
//! lexicographic with the precedence given by the variable-set listing
//! (`s > u > t > v` for the tensor set, `s > t > u` for the triangular set,
//! `X1 > X2 > X3 > X4` for implicit coordinates). Within a degree, terms are
//! listed lexicographically descending. All matrix row/column indexing in the
//! rest of the crate inherits this order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_string, Rat};

/// Ambient variable sets. Each has a fixed name list and precedence order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VarSet {
    /// s, u, t, v — bihomogeneous parameters on P1 x P1.
    Tensor,
    /// s, t, u — homogeneous parameters on P2.
    Triangular,
    /// X1, X2, X3, X4 — implicit coordinates on P3.
    Implicit,
    /// X1, X2, X3 — dehomogenized implicit coordinates.
    ImplicitAffine,
    /// s, t, a, b — working variables of the Cayley quotient.
    Cayley,
}

impl VarSet {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            VarSet::Tensor => &["s", "u", "t", "v"],
            VarSet::Triangular => &["s", "t", "u"],
            VarSet::Implicit => &["X1", "X2", "X3", "X4"],
            VarSet::ImplicitAffine => &["X1", "X2", "X3"],
            VarSet::Cayley => &["s", "t", "a", "b"],
        }
    }

    pub fn len(self) -> usize {
        self.names().len()
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn index_of(self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| *n == name)
    }
}

/// Exponent vector over a variable set of at most four variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Expo {
    len: u8,
    e: [u16; 4],
}

impl Expo {
    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= 4, "at most four variables");
        let mut e = [0u16; 4];
        e[..exps.len()].copy_from_slice(exps);
        Expo {
            len: exps.len() as u8,
            e,
        }
    }

    pub fn zero(len: usize) -> Self {
        Expo::new(&vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut e = vec![0; len];
        e[i] = 1;
        Expo::new(&e)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn exps(&self) -> &[u16] {
        &self.e[..self.len as usize]
    }

    pub fn get(&self, i: usize) -> u16 {
        assert!(i < self.len());
        self.e[i]
    }

    pub fn total(&self) -> u32 {
        self.exps().iter().map(|&x| x as u32).sum()
    }

    pub fn add(&self, other: &Expo) -> Expo {
        assert_eq!(self.len, other.len);
        let mut e = *self;
        for i in 0..self.len() {
            e.e[i] += other.e[i];
        }
        e
    }

    pub fn with(&self, i: usize, v: u16) -> Expo {
        let mut e = *self;
        e.e[i] = v;
        e
    }
}

impl Ord for Expo {
    /// Graded lexicographic, ascending: lower total degree first, then
    /// lexicographically ascending on the exponent tuple. Descending
    /// iteration over this order gives the canonical listing.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.exps().cmp(other.exps()))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders `expo` over `vars`, e.g. `s^2*t`. The constant monomial is `1`.
pub fn monomial_string(vars: VarSet, expo: &Expo) -> String {
    let names = vars.names();
    let mut parts = Vec::new();
    for (i, &e) in expo.exps().iter().enumerate() {
        if e == 1 {
            parts.push(names[i].to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", names[i], e));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Sparse polynomial: map from exponent vector to nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    vars: VarSet,
    terms: BTreeMap<Expo, Rat>,
}

impl SparsePoly {
    pub fn zero(vars: VarSet) -> Self {
        SparsePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: VarSet, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Expo::zero(vars.len()), c);
        p
    }

    pub fn variable(vars: VarSet, i: usize) -> Self {
        Self::monomial(vars, Expo::unit(vars.len(), i), Rat::one())
    }

    pub fn monomial(vars: VarSet, expo: Expo, c: Rat) -> Self {
        assert_eq!(expo.len(), vars.len());
        let mut p = Self::zero(vars);
        p.add_term(expo, c);
        p
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Rat)> {
        self.terms.iter()
    }

    /// Terms in the canonical (descending) order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Expo, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, expo: &Expo) -> Rat {
        self.terms.get(expo).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, expo: Expo, c: Rat) {
        assert_eq!(expo.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        SparsePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }

    /// Multiplies by a single monomial (used heavily by the matrix builders).
    pub fn mul_monomial(&self, expo: &Expo, c: &Rat) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, k) in self.terms() {
            out.add_term(e.add(expo), k * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(self.vars, Rat::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact value at a rational point; `point` matches the variable set.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (e, c) in self.terms() {
            let mut term = c.clone();
            for (i, &exp) in e.exps().iter().enumerate() {
                for _ in 0..exp {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.total()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|e| e.get(var) as u32)
            .max()
            .unwrap_or(0)
    }

    /// Leading term under the fixed order.
    pub fn leading(&self) -> Option<(&Expo, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in self.terms() {
            let k = e.get(var);
            if k > 0 {
                out.add_term(e.with(var, k - 1), c * Rat::from_integer(k.into()));
            }
        }
        out
    }

    /// Substitutes `targets[i]` for variable `i`. All targets share a
    /// variable set, which becomes the result's.
    pub fn subst(&self, targets: &[SparsePoly]) -> SparsePoly {
        assert_eq!(targets.len(), self.vars.len());
        let tvars = targets[0].vars;
        assert!(targets.iter().all(|t| t.vars == tvars));
        let mut out = SparsePoly::zero(tvars);
        for (e, c) in self.terms() {
            let mut term = SparsePoly::constant(tvars, c.clone());
            for (i, &exp) in e.exps().iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&targets[i].pow(exp as u32));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Fixes one variable to a rational value, keeping the variable set.
    pub fn set_var(&self, var: usize, value: &Rat) -> SparsePoly {
        let mut out = Self::zero(self.vars);
        for (e, c) in self.terms() {
            let k = e.get(var);
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff *= value;
            }
            out.add_term(e.with(var, 0), coeff);
        }
        out
    }

    /// True when every term has bidegree exactly (m, n) in ((s,u),(t,v)).
    pub fn is_bihomogeneous(&self, m: u32, n: u32) -> bool {
        self.vars == VarSet::Tensor
            && self.terms.keys().all(|e| {
                (
                    e.get(0) as u32 + e.get(1) as u32,
                    e.get(2) as u32 + e.get(3) as u32,
                ) == (m, n)
            })
    }

    /// True when every term has total degree exactly n.
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|e| e.total() == n)
    }

    /// Homogenizes an affine implicit polynomial into X1..X4 by padding each
    /// term with a power of X4.
    pub fn homogenize(&self, target_degree: u32) -> Result<SparsePoly> {
        assert_eq!(self.vars, VarSet::ImplicitAffine);
        let deg = self.total_degree();
        if target_degree < deg {
            return Err(Error::HomogenizeTarget {
                target: target_degree,
                degree: deg,
            });
        }
        let mut out = SparsePoly::zero(VarSet::Implicit);
        for (e, c) in self.terms() {
            let pad = (target_degree - e.total()) as u16;
            let expo = Expo::new(&[e.get(0), e.get(1), e.get(2), pad]);
            out.add_term(expo, c.clone());
        }
        Ok(out)
    }

    /// Sets X4 = 1, mapping back to the affine implicit variables.
    pub fn dehomogenize(&self) -> SparsePoly {
        assert_eq!(self.vars, VarSet::Implicit);
        let mut out = SparsePoly::zero(VarSet::ImplicitAffine);
        for (e, c) in self.terms() {
            out.add_term(Expo::new(&[e.get(0), e.get(1), e.get(2)]), c.clone());
        }
        out
    }

    /// Canonical representative among scalar multiples: integer coefficients
    /// with content 1 and positive leading coefficient.
    pub fn primitive_normal_form(&self) -> Result<SparsePoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut denom_lcm = BigInt::one();
        for (_, c) in self.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let scaled: Vec<(Expo, BigInt)> = self
            .terms()
            .map(|(e, c)| (*e, c.numer() * (&denom_lcm / c.denom())))
            .collect();
        let mut content = BigInt::zero();
        for (_, z) in &scaled {
            content = content.gcd(z);
        }
        let lead_sign = scaled.last().map(|(_, z)| z.is_negative()).unwrap();
        if lead_sign {
            content = -content;
        }
        let mut out = SparsePoly::zero(self.vars);
        for (e, z) in scaled {
            out.add_term(e, Rat::from_integer(z / &content));
        }
        Ok(out)
    }
}

impl fmt::Display for SparsePoly {
    /// Canonical text form: terms in the fixed order, `^` for powers, `*`
    /// between factors, no spaces. This is the golden-file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms_desc().enumerate() {
            let mono = monomial_string(self.vars, e);
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if mono == "1" {
                write!(f, "{}", rat_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", rat_string(&abs), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Ordered monomial basis of a polynomial space, with index lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    vars: VarSet,
    monos: Vec<Expo>,
    index: BTreeMap<Expo, usize>,
}

impl MonomialBasis {
    fn from_monos(vars: VarSet, mut monos: Vec<Expo>) -> Self {
        monos.sort_by(|a, b| b.cmp(a));
        let index = monos.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        MonomialBasis { vars, monos, index }
    }

    pub(crate) fn new_sorted(vars: VarSet, monos: Vec<Expo>) -> Self {
        Self::from_monos(vars, monos)
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn mono(&self, i: usize) -> &Expo {
        &self.monos[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Expo> {
        self.monos.iter()
    }

    pub fn index_of(&self, e: &Expo) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// All monomials of bidegree (k, l) in (s,u),(t,v), canonical order.
/// Length (k+1)(l+1).
pub fn bi_monomials(k: u32, l: u32) -> MonomialBasis {
    let mut monos = Vec::with_capacity(((k + 1) * (l + 1)) as usize);
    for j in 0..=k {
        for i in 0..=l {
            monos.push(Expo::new(&[
                j as u16,
                (k - j) as u16,
                i as u16,
                (l - i) as u16,
            ]));
        }
    }
    MonomialBasis::from_monos(VarSet::Tensor, monos)
}

/// All ternary monomials of total degree l, canonical order.
/// Length (l+1)(l+2)/2.
pub fn tri_monomials(l: u32) -> MonomialBasis {
    let mut monos = Vec::new();
    for a in 0..=l {
        for b in 0..=(l - a) {
            monos.push(Expo::new(&[a as u16, b as u16, (l - a - b) as u16]));
        }
    }
    MonomialBasis::from_monos(VarSet::Triangular, monos)
}

/// All monomials of total degree d over the given variable set.
pub fn hom_monomials(vars: VarSet, d: u32) -> MonomialBasis {
    let n = vars.len();
    let mut monos = Vec::new();
    let mut cur = vec![0u16; n];
    fill(&mut monos, &mut cur, 0, d);
    fn fill(out: &mut Vec<Expo>, cur: &mut Vec<u16>, pos: usize, left: u32) {
        if pos + 1 == cur.len() {
            cur[pos] = left as u16;
            out.push(Expo::new(cur));
            return;
        }
        for e in 0..=left {
            cur[pos] = e as u16;
            fill(out, cur, pos + 1, left - e);
        }
    }
    MonomialBasis::from_monos(vars, monos)
}
