//! Dense univariate polynomials over a finite field. This is the fast path
//! used by squarefree decomposition, factorization and field construction.

use crate::field::{Fe, Field};

/// Coefficients low to high, trailing zeros stripped (the zero polynomial
/// has no coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl UPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Fe>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> UPoly {
        UPoly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> UPoly {
        UPoly::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: Fe) -> UPoly {
        UPoly::new(field, vec![c])
    }

    /// The polynomial `X`.
    pub fn x(field: &Field) -> UPoly {
        UPoly::new(field, vec![field.zero(), field.one()])
    }

    /// `X - c`.
    pub fn linear(field: &Field, c: Fe) -> UPoly {
        UPoly::new(field, vec![field.neg(c), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Fe {
        self.coeffs.get(k).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == self.field.one()
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading_coeff()).unwrap();
        self.scale(inv)
    }

    pub fn scale(&self, c: Fe) -> UPoly {
        let f = &self.field;
        UPoly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new(f, (0..n).map(|k| f.add(self.coeff(k), other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new(f, (0..n).map(|k| f.sub(self.coeff(k), other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(f);
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        UPoly::new(f, out)
    }

    pub fn pow(&self, mut e: u64) -> UPoly {
        let mut acc = UPoly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let f = &self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = f.inv(divisor.leading_coeff()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(f), self.clone());
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c.is_zero() {
                continue;
            }
            let qc = f.mul(c, inv);
            quot[k - dd] = qc;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(qc, dc));
            }
        }
        (UPoly::new(f, quot), UPoly::new(f, rem))
    }

    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        self.div_rem(divisor).1
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        let f = &self.field;
        UPoly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| f.mul(f.from_u64(k as u64), c))
                .collect(),
        )
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &UPoly) -> UPoly {
        let mut acc = UPoly::one(&self.field).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Map `X -> X^p` inverse: requires every exponent with a nonzero
    /// coefficient to be divisible by `p`; takes `p`-th roots of coefficients.
    pub fn pth_root(&self) -> Option<UPoly> {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let mut out = Vec::with_capacity(self.coeffs.len() / p + 1);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if k % p == 0 {
                out.push(f.pth_root(c));
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(UPoly::new(f, out))
    }

    /// Canonical sort key: degree, then coefficients from the top down.
    pub fn sort_key(&self) -> (usize, Vec<u64>) {
        (self.coeffs.len(), self.coeffs.iter().rev().map(|c| c.encoding()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &Field, c: &[i64]) -> UPoly {
        UPoly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn division_identity() {
        let f = Field::prime(7).unwrap();
        let a = poly(&f, &[3, 0, 5, 1, 6, 2]);
        let b = poly(&f, &[1, 2, 3]);
        let (q, r) = a.div_rem(&b);
        assert!(r.deg() < b.deg());
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let f = Field::prime(5).unwrap();
        let g = poly(&f, &[1, 1]);
        let a = g.mul(&poly(&f, &[2, 0, 1]));
        let b = g.mul(&poly(&f, &[3, 1]));
        assert_eq!(a.gcd(&b), g);
    }

    #[test]
    fn pth_root_of_frobenius_image() {
        let f = Field::new(3, 2).unwrap();
        let g = UPoly::new(&f, vec![f.generator(), f.one(), f.from_u64(2)]);
        let cubed = g.pow(3);
        assert_eq!(cubed.derivative(), UPoly::zero(&f));
        assert_eq!(cubed.pth_root().unwrap(), g);
    }
}
