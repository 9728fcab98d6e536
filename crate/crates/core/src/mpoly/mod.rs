//! Sparse multivariate polynomials over exact coefficient rings.
//!
//! Every polynomial lives in the same eight-slot variable space: the
//! projective coordinates `x0..x3` followed by the formal parameters
//! `u, v, w, t`. A polynomial also records its projective arity, the number
//! of leading `x` variables it is declared over; bar specializations keep
//! the arity and [`MPoly::compress`] re-indexes the survivors.

mod coeff;
mod map;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use coeff::Coeff;
pub use map::{MapError, RationalMapData};
pub use parse::{parse_poly, ParseError};

pub const MAX_VARS: usize = 8;
/// Slot index of the first formal parameter.
pub const PARAM_OFFSET: usize = 4;
pub const MAX_PROJECTIVE: usize = 4;
pub const VAR_NAMES: [&str; MAX_VARS] = ["x0", "x1", "x2", "x3", "u", "v", "w", "t"];

/// Slot index of a variable name, if known.
pub fn var_index(name: &str) -> Option<usize> {
    VAR_NAMES.iter().position(|&v| v == name)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("projective arity mismatch ({0} vs {1})")]
    ArityMismatch(usize, usize),
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous in the requested variables")]
    NotHomogeneous,
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Dense exponent vector over the eight variable slots.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x0`, then `x1`, and so on through the parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    pub fn from_exps(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m
    }

    pub fn var_pow(i: usize, e: u16) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = e;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exps[i] as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a += b;
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps).all(|(a, b)| *a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for (a, b) in m.exps.iter_mut().zip(self.exps) {
            *a -= b;
        }
        m
    }

    /// Splits into (projective part, parameter part).
    pub fn split(&self) -> (Monomial, Monomial) {
        let mut proj = Monomial::ONE;
        let mut param = Monomial::ONE;
        proj.exps[..PARAM_OFFSET].copy_from_slice(&self.exps[..PARAM_OFFSET]);
        param.exps[PARAM_OFFSET..].copy_from_slice(&self.exps[PARAM_OFFSET..]);
        (proj, param)
    }

    fn with_exp(mut self, i: usize, e: u16) -> Monomial {
        self.exps[i] = e;
        self
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(VAR_NAMES[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of total degree `degree` in the first `nvars` slots, in
/// decreasing graded-lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(slot: usize, nvars: usize, left: u32, cur: Monomial, out: &mut Vec<Monomial>) {
        if slot + 1 == nvars {
            out.push(cur.with_exp(slot, left as u16));
            return;
        }
        for e in (0..=left).rev() {
            rec(slot + 1, nvars, left - e, cur.with_exp(slot, e as u16), out);
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, nvars, degree, Monomial::ONE, &mut out);
    out
}

/// Sparse polynomial: a map from monomials to nonzero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct MPoly<C> {
    arity: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(arity: usize) -> Self {
        assert!(arity <= MAX_PROJECTIVE, "projective arity {arity} exceeds {MAX_PROJECTIVE}");
        MPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(c: C, arity: usize) -> Self {
        Self::monomial(c, Monomial::ONE, arity)
    }

    pub fn monomial(c: C, m: Monomial, arity: usize) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds from (monomial, coefficient) pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(arity: usize, terms: I) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Re-declares the projective arity; fails if a higher `x` is used.
    pub fn with_arity(mut self, arity: usize) -> Result<Self, PolyError> {
        if arity > MAX_PROJECTIVE {
            return Err(PolyError::VariableOutOfRange(arity));
        }
        if self.terms.keys().any(|m| (arity..PARAM_OFFSET).any(|i| m.exp(i) > 0)) {
            return Err(PolyError::VariableOutOfRange(arity));
        }
        self.arity = arity;
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in_var(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i) as u32).max().unwrap_or(0)
    }

    /// Whether any parameter slot occurs.
    pub fn has_parameters(&self) -> bool {
        self.terms.keys().any(|m| (PARAM_OFFSET..MAX_VARS).any(|i| m.exp(i) > 0))
    }

    /// Parameter slots that occur.
    pub fn parameters(&self) -> Vec<usize> {
        (PARAM_OFFSET..MAX_VARS)
            .filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.arity != other.arity {
            return Err(PolyError::ArityMismatch(self.arity, other.arity));
        }
        if let (Some((_, a)), Some((_, b))) = (self.terms.iter().next(), other.terms.iter().next()) {
            if !a.compatible(b) {
                return Err(PolyError::RingMismatch);
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.neg());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.arity);
        }
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(*m, c.mul(s));
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul_unchecked(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        match acc {
            Some(a) => a,
            None => match self.terms.values().next() {
                Some(c) => Self::constant(c.one_like(), self.arity),
                // 0^0: no coefficient to take a unit from
                None => panic!("zero polynomial raised to the power 0"),
            },
        }
    }

    /// Formal partial derivative with respect to slot `i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                out.add_term(m.with_exp(i, e - 1), c.mul_u64(e as u64));
            }
        }
        out
    }

    /// Simultaneous substitution of variables by polynomials.
    pub fn specialize(&self, assignments: &[(usize, MPoly<C>)]) -> Self {
        let mut subst: [Option<&MPoly<C>>; MAX_VARS] = [None; MAX_VARS];
        for (v, p) in assignments {
            subst[*v] = Some(p);
        }
        let mut powers: BTreeMap<(usize, u16), MPoly<C>> = BTreeMap::new();
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let mut kept = *m;
            let mut factor: Option<MPoly<C>> = None;
            for (v, s) in subst.iter().enumerate() {
                let Some(s) = s else { continue };
                let e = m.exp(v);
                kept.exps[v] = 0;
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((v, e)).or_insert_with(|| s.pow(e as u32)).clone();
                factor = Some(match factor {
                    None => pw,
                    Some(f) => f.mul_unchecked(&pw),
                });
            }
            match factor {
                None => out.add_term(kept, c.clone()),
                Some(f) => {
                    for (fm, fc) in &f.terms {
                        out.add_term(fm.mul(&kept), fc.mul(c));
                    }
                }
            }
        }
        out
    }

    /// Sets the listed variables to zero (the bar specialization); the
    /// arity is unchanged.
    pub fn bar(&self, vars: &[usize]) -> Self {
        MPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Re-indexes projective variables: `keep[t]` becomes `x_t`. Variables
    /// not listed must be absent.
    pub fn compress(&self, keep: &[usize]) -> Result<Self, PolyError> {
        let mut out = Self::zero(keep.len());
        for (m, c) in &self.terms {
            let mut nm = Monomial::ONE;
            nm.exps[PARAM_OFFSET..].copy_from_slice(&m.exps[PARAM_OFFSET..]);
            for i in 0..PARAM_OFFSET {
                if m.exp(i) == 0 {
                    continue;
                }
                let t = keep.iter().position(|&k| k == i).ok_or(PolyError::VariableOutOfRange(i))?;
                nm.exps[t] = m.exp(i);
            }
            out.add_term(nm, c.clone());
        }
        Ok(out)
    }

    /// Common degree of all terms in the given variables, or `None` when
    /// the polynomial is not homogeneous there (or is zero).
    pub fn homogeneous_degree(&self, vars: &[usize]) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree_in(vars));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Homogeneous degree in the declared projective variables.
    pub fn projective_degree(&self) -> Option<u32> {
        let vars: Vec<usize> = (0..self.arity).collect();
        self.homogeneous_degree(&vars)
    }

    /// Groups terms by projective monomial; values are polynomials in the
    /// parameters alone.
    pub fn split_projective(&self) -> BTreeMap<Monomial, MPoly<C>> {
        let mut out: BTreeMap<Monomial, MPoly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (proj, param) = m.split();
            out.entry(proj).or_insert_with(|| MPoly::zero(0)).add_term(param, c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coeff, F: FnMut(&C) -> D>(&self, mut f: F) -> MPoly<D> {
        let mut out = MPoly::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Exact quotient by multivariate long division in graded-lex order.
    ///
    /// Never returns a truncated quotient: any nonzero remainder is
    /// reported as [`PolyError::NotDivisible`].
    pub fn exact_divide(&self, den: &Self) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        self.check_compatible(den)?;
        let (lm_d, lc_d) = den.leading_term().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((lm_r, lc_r)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            if !lm_d.divides(&lm_r) {
                return Err(PolyError::NotDivisible);
            }
            let c = lc_r.div_exact(&lc_d).ok_or(PolyError::NotDivisible)?;
            let m = lm_d.quotient_of(&lm_r);
            for (dm, dc) in &den.terms {
                rem.add_term(dm.mul(&m), dc.mul(&c).neg());
            }
            debug_assert!(rem.coeff(&lm_r).is_none());
            quot.add_term(m, c);
        }
        Ok(quot)
    }
}

impl MPoly<BigInt> {
    pub fn from_i64(c: i64, arity: usize) -> Self {
        Self::constant(BigInt::from(c), arity)
    }

    /// The variable in slot `i`.
    pub fn var(i: usize, arity: usize) -> Self {
        Self::monomial(BigInt::one(), Monomial::var(i), arity)
    }

    pub fn one(arity: usize) -> Self {
        Self::from_i64(1, arity)
    }

    /// Integer content and primitive part; the primitive part has a
    /// positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(BigInt, Self), PolyError> {
        let (_, lc) = self.leading_term().ok_or(PolyError::ZeroPolynomial)?;
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        if Signed::is_negative(lc) {
            g = -g;
        }
        let prim = MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (*m, c / &g)).collect(),
        };
        Ok((g, prim))
    }

    /// Substitutes `x_i -> sum_j phi[i][j] x_j` on the projective variables.
    pub fn linear_change(&self, phi: &[Vec<BigInt>]) -> Self {
        let n = phi.len();
        let images: Vec<(usize, MPoly<BigInt>)> = (0..n)
            .map(|i| {
                let img = MPoly::from_terms(
                    self.arity,
                    (0..n).map(|j| (Monomial::var(j), phi[i][j].clone())),
                );
                (i, img)
            })
            .collect();
        self.specialize(&images)
    }

    /// Substitutes integer values for parameters.
    pub fn eval_params(&self, values: &[(usize, BigInt)]) -> Self {
        let assignments: Vec<(usize, MPoly<BigInt>)> = values
            .iter()
            .map(|(v, x)| (*v, MPoly::constant(x.clone(), self.arity)))
            .collect();
        self.specialize(&assignments)
    }

    /// The value of a parameter-free constant polynomial.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Coeff> std::ops::$trait<&MPoly<C>> for &MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: &MPoly<C>) -> MPoly<C> {
                self.$checked(rhs).expect(concat!("incompatible operands to ", stringify!($method)))
            }
        }
        impl<C: Coeff> std::ops::$trait<MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $method(self, rhs: MPoly<C>) -> MPoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Coeff> std::ops::Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly::neg(self)
    }
}

impl<C: Coeff> std::ops::Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        MPoly::neg(&self)
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    /// Canonical form: terms in decreasing graded-lex order, `*` between
    /// factors, `^` for powers, unit coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
