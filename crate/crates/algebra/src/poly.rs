//! Sparse multivariate polynomials over a finite field.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::{Embedding, Fe, Field};
use crate::monomial::{Monomial, MonomialOrder};
use crate::upoly::UPoly;

struct RingData {
    field: Field,
    vars: Vec<String>,
}

/// Coefficient field plus an ordered list of variable names.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.field == other.0.field && self.0.vars == other.0.vars)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.0.field.spec_string(), self.0.vars.join(","))
    }
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(field: &Field, vars: &[S]) -> PolyRing {
        PolyRing(Arc::new(RingData {
            field: field.clone(),
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
        }))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, i: usize) -> MultiPoly {
        MultiPoly::monomial(self, Monomial::var(self.nvars(), i, 1), self.field().one())
    }

    pub fn var_named(&self, name: &str) -> Option<MultiPoly> {
        self.var_index(name).map(|i| self.var(i))
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self)
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Fe) -> MultiPoly {
        MultiPoly::monomial(self, Monomial::one(self.nvars()), c)
    }

    pub fn int(&self, n: i64) -> MultiPoly {
        self.constant(self.field().from_i64(n))
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: &Field) -> PolyRing {
        PolyRing::new(field, self.vars())
    }

    /// This ring with extra variables appended.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> PolyRing {
        let mut vars = self.0.vars.clone();
        vars.extend(extra.iter().map(|s| s.as_ref().to_string()));
        PolyRing::new(self.field(), &vars)
    }

    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::default_for(self.nvars())
    }
}

/// A polynomial: ring plus a map from exponent vectors to nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Fe>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl MultiPoly {
    pub fn zero(ring: &PolyRing) -> MultiPoly {
        MultiPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: Fe) -> MultiPoly {
        assert_eq!(m.arity(), ring.nvars(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { ring: ring.clone(), terms }
    }

    /// Builds a polynomial, summing repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Fe)>>(ring: &PolyRing, terms: I) -> MultiPoly {
        let mut p = MultiPoly::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Fe) {
        if c.is_zero() {
            return;
        }
        let f = self.ring.field().clone();
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Fe)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn coeff(&self, m: &Monomial) -> Fe {
        self.terms.get(m).copied().unwrap_or(Fe::ZERO)
    }

    /// Constant value, if the polynomial is constant (zero included).
    pub fn constant_value(&self) -> Option<Fe> {
        match self.terms.len() {
            0 => Some(Fe::ZERO),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then_some(*c)
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value() == Some(self.field().one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.uses_var(i)).collect()
    }

    fn check_ring(&self, other: &MultiPoly) {
        assert!(self.ring == other.ring, "ring mismatch: {:?} vs {:?}", self.ring, other.ring);
    }

    pub fn same_ring(&self, other: &MultiPoly) -> bool {
        self.ring == other.ring
    }

    pub fn scale(&self, c: Fe) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let f = self.field();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: Fe) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let f = self.field();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, &a)| (k.mul(m), f.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, Fe)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m, *c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scaled to leading coefficient 1 under `order` (zero stays zero).
    pub fn monic(&self, order: &MonomialOrder) -> MultiPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field().inv(c).unwrap()),
        }
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let f = self.field();
        let mut out = MultiPoly::zero(&self.ring);
        for (m, &c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, f.mul(c, f.from_u64(e as u64)));
        }
        out
    }

    /// Polynomial maps: substitute `images[k]` (all in `target`) for
    /// variable `k` of this ring.
    pub fn compose(&self, images: &[MultiPoly], target: &PolyRing) -> MultiPoly {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let mut cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(target);
        for (m, &c) in &self.terms {
            let mut term = target.constant(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = cache.entry((i, e)).or_insert_with(|| images[i].pow(e)).clone();
                term = &term * &pw;
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Replace variable `i` by `value` (same ring).
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> MultiPoly {
        let images: Vec<MultiPoly> = (0..self.ring.nvars())
            .map(|k| if k == i { value.clone() } else { self.ring.var(k) })
            .collect();
        self.compose(&images, &self.ring)
    }

    /// Evaluate variable `i` at a field element.
    pub fn eval_var(&self, i: usize, value: Fe) -> MultiPoly {
        let f = self.field();
        let mut out = MultiPoly::zero(&self.ring);
        for (m, &c) in &self.terms {
            let e = m.exp(i);
            out.add_term(m.without(i), f.mul(c, f.pow(value, e as u128)));
        }
        out
    }

    /// `X_i -> X_i + shift`.
    pub fn translate_var(&self, i: usize, shift: Fe) -> MultiPoly {
        if shift.is_zero() {
            return self.clone();
        }
        let v = &self.ring.var(i) + &self.ring.constant(shift);
        self.substitute(i, &v)
    }

    /// Coefficients as a polynomial in variable `i`.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, &c) in &self.terms {
            out.entry(m.exp(i))
                .or_insert_with(|| MultiPoly::zero(&self.ring))
                .add_term(m.without(i), c);
        }
        out
    }

    /// The only variable used, if there is exactly one.
    pub fn univariate_var(&self) -> Option<usize> {
        let used = self.vars_used();
        (used.len() == 1).then(|| used[0])
    }

    /// Dense form in variable `i`; fails if any other variable occurs.
    pub fn to_upoly(&self, i: usize) -> Result<UPoly> {
        let mut coeffs = vec![Fe::ZERO; self.degree_in(i) as usize + 1];
        for (m, &c) in &self.terms {
            if m.0.iter().enumerate().any(|(k, &e)| k != i && e > 0) {
                return Err(AlgebraError::NotUnivariate);
            }
            coeffs[m.exp(i) as usize] = c;
        }
        Ok(UPoly::new(self.field(), coeffs))
    }

    pub fn from_upoly(ring: &PolyRing, i: usize, u: &UPoly) -> MultiPoly {
        assert!(ring.field() == u.field(), "field mismatch");
        MultiPoly::from_terms(
            ring,
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(k, &c)| (Monomial::var(ring.nvars(), i, k as u32), c)),
        )
    }

    /// Moves the polynomial into `target`, matching variables by name and
    /// mapping coefficients through `embedding` when the fields differ.
    pub fn map_into(&self, target: &PolyRing, embedding: Option<&Embedding>) -> Result<MultiPoly> {
        if embedding.is_none() && self.field() != target.field() {
            return Err(AlgebraError::FieldMismatch(format!(
                "{:?} -> {:?} needs an embedding",
                self.ring, target
            )));
        }
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| target.var_index(v)).collect();
        let mut out = MultiPoly::zero(target);
        for (m, &c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (k, &x) in m.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = map[k].ok_or_else(|| {
                    AlgebraError::InconsistentVariableLists(format!(
                        "variable {} missing from {:?}",
                        self.ring.vars()[k],
                        target
                    ))
                })?;
                e[j] += x;
            }
            let c = embedding.map(|emb| emb.map(c)).unwrap_or(c);
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }

    /// Term-by-term top part under integer weights: returns the maximal
    /// weight and the sum of the terms attaining it.
    pub fn weighted_top(&self, weights: &[i64]) -> Option<(i64, MultiPoly)> {
        let w = |m: &Monomial| -> i64 { m.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum() };
        let top = self.terms.keys().map(w).max()?;
        let part = MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| w(m) == top).map(|(m, c)| (m.clone(), *c)).collect(),
        };
        Some((top, part))
    }

    /// Weighted degree of a single monomial.
    pub fn monomial_weight(m: &Monomial, weights: &[i64]) -> i64 {
        m.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, &c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let f = self.field().clone();
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.clone(), f.neg(c));
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(self.field().neg(self.field().one()))
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let f = self.field().clone();
        let mut out = MultiPoly::zero(&self.ring);
        for (ma, &a) in &self.terms {
            for (mb, &b) in &rhs.terms {
                out.add_term(ma.mul(mb), f.mul(a, b));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = self.ring.default_order();
        let mut terms: Vec<(&Monomial, &Fe)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let field = self.field();
        let vars = self.ring.vars();
        let mut first = true;
        for (m, &c) in terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
                .collect();
            let cs = field.format(c);
            if mono.is_empty() {
                write!(f, "{cs}")?;
            } else if c == field.one() {
                write!(f, "{}", mono.join("*"))?;
            } else if cs.contains(' ') || cs.contains('*') || cs.contains('^') {
                write!(f, "({cs})*{}", mono.join("*"))?;
            } else {
                write!(f, "{cs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let f = Field::prime(5).unwrap();
        let r = PolyRing::new(&f, &["X", "Y"]);
        let x = r.var(0);
        let y = r.var(1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq, &(&x.pow(2) + &(&x * &y).scale(f.from_u64(2))) + &y.pow(2));
        assert!((&s - &s).is_zero());
        assert_eq!(s.pow(5), &x.pow(5) + &y.pow(5));
    }

    #[test]
    fn compose_and_translate() {
        let f = Field::prime(5).unwrap();
        let r = PolyRing::new(&f, &["X"]);
        let x = r.var(0);
        let p = &x.pow(2) + &r.int(3);
        let shifted = p.translate_var(0, f.from_i64(-1));
        // (X-1)^2 + 3 = X^2 + 3X + 4
        assert_eq!(shifted, &(&x.pow(2) + &x.scale(f.from_u64(3))) + &r.int(4));
        assert_eq!(shifted.translate_var(0, f.one()), p);
    }

    #[test]
    fn display_uses_positive_residues() {
        let f = Field::prime(5).unwrap();
        let r = PolyRing::new(&f, &["X1", "Y"]);
        let x = r.var(0);
        let p = (&x - &r.one()).pow(2);
        assert_eq!(p.to_string(), "X1^2 + 3*X1 + 1");
        assert_eq!(r.zero().to_string(), "0");
    }

    #[test]
    fn extension_coefficients_are_parenthesized() {
        let f = Field::new(3, 2).unwrap();
        let r = PolyRing::new(&f, &["X"]);
        let c = f.add(f.generator(), f.one());
        assert_eq!(r.var(0).scale(c).to_string(), "(@ + 1)*X");
        assert_eq!(r.var(0).scale(f.generator()).to_string(), "@*X");
    }
}
