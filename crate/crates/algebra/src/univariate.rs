//! Univariate operations on [`MultiPoly`] values that use a single variable.

use crate::error::{AlgebraError, Result};
use crate::factor;
use crate::poly::MultiPoly;

/// Monic, pairwise coprime squarefree parts `g_i` with strictly increasing
/// exponents `e_i`; their product `prod g_i^e_i` equals the input up to a
/// nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub parts: Vec<(MultiPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn product(&self, one: &MultiPoly) -> MultiPoly {
        self.parts.iter().fold(one.clone(), |acc, (g, e)| &acc * &g.pow(*e))
    }
}

/// Variable index of a univariate polynomial; constants report `None`.
fn univariate_index(u: &MultiPoly) -> Result<Option<usize>> {
    let used = u.vars_used();
    match used.len() {
        0 => Ok(None),
        1 => Ok(Some(used[0])),
        _ => Err(AlgebraError::NotUnivariate),
    }
}

pub fn squarefree_decomposition(u: &MultiPoly) -> Result<SquarefreeDecomposition> {
    if u.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let Some(i) = univariate_index(u)? else {
        return Ok(SquarefreeDecomposition { parts: Vec::new() });
    };
    let parts = factor::squarefree(&u.to_upoly(i)?)
        .into_iter()
        .map(|(g, e)| (MultiPoly::from_upoly(u.ring(), i, &g), e))
        .collect();
    Ok(SquarefreeDecomposition { parts })
}

/// Monic irreducible factors with exponents, in canonical order. The result
/// does not depend on `seed`; only the internal splitting path does.
pub fn factor_univariate(u: &MultiPoly, seed: u64) -> Result<Vec<(MultiPoly, u32)>> {
    if u.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let Some(i) = univariate_index(u)? else {
        return Ok(Vec::new());
    };
    Ok(factor::factor(&u.to_upoly(i)?, seed)
        .1
        .into_iter()
        .map(|(g, e)| (MultiPoly::from_upoly(u.ring(), i, &g), e))
        .collect())
}

/// Multiset of `(multiplicity, number of distinct roots in the algebraic
/// closure with that multiplicity)`, sorted. A squarefree part over a
/// perfect field is separable, so its root count is its degree.
pub fn root_multiplicity_profile(u: &MultiPoly) -> Result<Vec<(u32, usize)>> {
    if u.is_constant() {
        return Err(AlgebraError::ConstantPolynomial);
    }
    let i = univariate_index(u)?.expect("nonconstant");
    let mut out: Vec<(u32, usize)> =
        factor::squarefree(&u.to_upoly(i)?).into_iter().map(|(g, e)| (e, g.deg())).collect();
    out.sort();
    Ok(out)
}

/// Roots in the coefficient field, ascending by encoding.
pub fn roots_in_field(u: &MultiPoly, seed: u64) -> Result<Vec<crate::field::Fe>> {
    if u.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    match univariate_index(u)? {
        None => Ok(Vec::new()),
        Some(i) => Ok(factor::roots(&u.to_upoly(i)?, seed)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_poly_in;

    fn up(s: &str, p: u64) -> MultiPoly {
        parse_poly_in(s, &["X"], &Field::prime(p).unwrap()).unwrap()
    }

    #[test]
    fn profiles() {
        assert_eq!(root_multiplicity_profile(&up("X^2", 5)).unwrap(), vec![(2, 1)]);
        assert_eq!(root_multiplicity_profile(&up("(X^2+1)^2", 3)).unwrap(), vec![(2, 2)]);
        assert_eq!(root_multiplicity_profile(&up("(X^2-X)^2", 5)).unwrap(), vec![(2, 2)]);
        assert_eq!(root_multiplicity_profile(&up("3", 5)), Err(AlgebraError::ConstantPolynomial));
    }

    #[test]
    fn errors() {
        let f = Field::prime(5).unwrap();
        let xy = parse_poly_in("X*Y", &["X", "Y"], &f).unwrap();
        assert_eq!(squarefree_decomposition(&xy), Err(AlgebraError::NotUnivariate));
        assert_eq!(factor_univariate(&up("0", 5), 0), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn factor_examples() {
        let fs = factor_univariate(&up("X^2 - 1", 5), 0).unwrap();
        assert_eq!(fs, vec![(up("X+1", 5), 1), (up("X-1", 5), 1)]);
        assert_eq!(factor_univariate(&up("(X^2+1)^2", 3), 0).unwrap(), vec![(up("X^2+1", 3), 2)]);
    }
}
