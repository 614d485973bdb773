//! Squarefree decomposition and factorization of dense univariate
//! polynomials over `F_q`.
//!
//! Factorization runs squarefree decomposition, distinct-degree splitting and
//! then Cantor–Zassenhaus equal-degree splitting with a seeded RNG. Output is
//! sorted canonically, so the result does not depend on the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{prime_divisors, Fe, Field};
use crate::upoly::UPoly;

/// Squarefree decomposition of a nonzero polynomial: monic, pairwise coprime,
/// squarefree parts with strictly increasing exponents. The leading
/// coefficient is dropped.
pub fn squarefree(u: &UPoly) -> Vec<(UPoly, u32)> {
    assert!(!u.is_zero(), "squarefree decomposition of zero");
    let mut parts = squarefree_rec(&u.monic());
    parts.sort_by_key(|(_, e)| *e);
    // Exponents from the p-th-root recursion are multiples of p and never
    // collide with loop exponents, but merge defensively anyway.
    let mut merged: Vec<(UPoly, u32)> = Vec::with_capacity(parts.len());
    for (g, e) in parts {
        match merged.last_mut() {
            Some((h, le)) if *le == e => *h = h.mul(&g),
            _ => merged.push((g, e)),
        }
    }
    merged
}

fn squarefree_rec(f: &UPoly) -> Vec<(UPoly, u32)> {
    let field = f.field().clone();
    let p = field.characteristic() as u32;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.div_exact(&y).expect("gcd divides");
        if z.deg() > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
    }
    if c.deg() > 0 {
        let root = c.pth_root().expect("remaining cofactor is a p-th power");
        for (g, e) in squarefree_rec(&root.monic()) {
            out.push((g, e * p));
        }
    }
    out
}

/// Distinct-degree splitting of a monic squarefree polynomial: pairs
/// `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &UPoly) -> Vec<(UPoly, usize)> {
    let field = f.field().clone();
    let q = field.order() as u128;
    let x = UPoly::x(&field);
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut xq = x.clone();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        xq = xq.pow_mod(q, &rest);
        let g = xq.sub(&x).gcd(&rest);
        if g.deg() > 0 {
            rest = rest.div_exact(&g).unwrap();
            xq = xq.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let dr = rest.deg();
        out.push((rest, dr));
    }
    out
}

fn random_poly(field: &Field, deg_bound: usize, rng: &mut ChaCha8Rng) -> UPoly {
    let q = field.order();
    UPoly::new(field, (0..deg_bound).map(|_| field.element(rng.gen_range(0..q))).collect())
}

/// `a^((q^d - 1)/2) mod f` for odd `q`, computed as
/// `(a^(1 + q + ... + q^(d-1)))^((q-1)/2)`.
fn half_power(a: &UPoly, d: usize, f: &UPoly) -> UPoly {
    let q = f.field().order() as u128;
    let mut t = a.rem(f);
    let mut acc = t.clone();
    for _ in 1..d {
        t = t.pow_mod(q, f);
        acc = acc.mul(&t).rem(f);
    }
    acc.pow_mod((q - 1) / 2, f)
}

/// Absolute trace-like map `a + a^2 + ... + a^(2^(k d - 1)) mod f` for
/// `q = 2^k`.
fn trace_map(a: &UPoly, d: usize, f: &UPoly) -> UPoly {
    let k = f.field().degree() as usize;
    let mut t = a.rem(f);
    let mut acc = t.clone();
    for _ in 1..k * d {
        t = t.mul(&t).rem(f);
        acc = acc.add(&t);
    }
    acc
}

/// Equal-degree splitting of a monic squarefree `f` whose irreducible
/// factors all have degree `d`.
pub fn equal_degree(f: &UPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<UPoly> {
    let n = f.deg();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let one = UPoly::one(&field);
    loop {
        let a = random_poly(&field, n, rng);
        if a.deg() == 0 {
            continue;
        }
        let g0 = a.gcd(f);
        let g = if g0.deg() > 0 {
            g0
        } else if field.characteristic() == 2 {
            trace_map(&a, d, f).gcd(f)
        } else {
            half_power(&a, d, f).sub(&one).gcd(f)
        };
        if g.deg() > 0 && g.deg() < n {
            let h = f.div_exact(&g).unwrap();
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h.monic(), d, rng));
            return out;
        }
    }
}

/// Full factorization into monic irreducibles with multiplicities, sorted by
/// degree then coefficients. Also returns the leading coefficient.
pub fn factor(u: &UPoly, seed: u64) -> (Fe, Vec<(UPoly, u32)>) {
    assert!(!u.is_zero(), "factorization of zero");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, e) in squarefree(u) {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng) {
                out.push((g.monic(), e));
            }
        }
    }
    out.sort_by(|(a, ea), (b, eb)| a.sort_key().cmp(&b.sort_key()).then(ea.cmp(eb)));
    (u.leading_coeff(), out)
}

/// Distinct roots in the coefficient field, ascending by encoding.
pub fn roots(u: &UPoly, seed: u64) -> Vec<Fe> {
    if u.deg() == 0 {
        return Vec::new();
    }
    let f = u.field();
    let mut out: Vec<Fe> = factor(u, seed)
        .1
        .into_iter()
        .filter(|(g, _)| g.deg() == 1)
        .map(|(g, _)| f.neg(g.coeff(0)))
        .collect();
    out.sort();
    out
}

/// Rabin's irreducibility test.
pub fn is_irreducible(u: &UPoly) -> bool {
    let n = match u.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = u.monic();
    let q = f.field().order() as u128;
    let x = UPoly::x(f.field());
    let frob = |k: usize| {
        let mut t = x.clone();
        for _ in 0..k {
            t = t.pow_mod(q, &f);
        }
        t
    };
    if frob(n).sub(&x).rem(&f) != UPoly::zero(f.field()) {
        return false;
    }
    prime_divisors(n as u64)
        .into_iter()
        .all(|r| frob(n / r as usize).sub(&x).gcd(&f).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &Field, c: &[i64]) -> UPoly {
        UPoly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn squarefree_of_square() {
        let f = Field::prime(5).unwrap();
        let x2 = poly(&f, &[0, 0, 1]);
        assert_eq!(squarefree(&x2), vec![(poly(&f, &[0, 1]), 2)]);
    }

    #[test]
    fn squarefree_with_vanishing_derivative() {
        let f2 = Field::prime(2).unwrap();
        // X^4 + X^2 = (X^2 + X)^2
        assert_eq!(squarefree(&poly(&f2, &[0, 0, 1, 0, 1])), vec![(poly(&f2, &[0, 1, 1]), 2)]);
        let f5 = Field::prime(5).unwrap();
        for c in 0..5 {
            // X^5 - c = (X - c)^5
            let u = poly(&f5, &[-c, 0, 0, 0, 0, 1]);
            assert_eq!(squarefree(&u), vec![(poly(&f5, &[-c, 1]), 5)]);
        }
    }

    #[test]
    fn multiplicity_above_characteristic() {
        let f = Field::prime(3).unwrap();
        let a = poly(&f, &[1, 1]).pow(4).mul(&poly(&f, &[0, 1]).pow(3)).mul(&poly(&f, &[1, 0, 1]));
        let sq = squarefree(&a);
        assert_eq!(sq, vec![(poly(&f, &[1, 0, 1]), 1), (poly(&f, &[0, 1]), 3), (poly(&f, &[1, 1]), 4)]);
    }

    #[test]
    fn factor_small_examples() {
        let f5 = Field::prime(5).unwrap();
        let (_, fs) = factor(&poly(&f5, &[-1, 0, 1]), 0);
        assert_eq!(fs, vec![(poly(&f5, &[1, 1]), 1), (poly(&f5, &[4, 1]), 1)]);

        let f3 = Field::prime(3).unwrap();
        let x2p1 = poly(&f3, &[1, 0, 1]);
        assert_eq!(factor(&x2p1.pow(2), 0).1, vec![(x2p1, 2)]);

        let f2 = Field::prime(2).unwrap();
        assert_eq!(
            factor(&poly(&f2, &[0, 1, 1]), 0).1,
            vec![(poly(&f2, &[0, 1]), 1), (poly(&f2, &[1, 1]), 1)]
        );
    }

    #[test]
    fn factor_is_seed_independent() {
        let f = Field::new(3, 2).unwrap();
        let u = UPoly::new(&f, (0..13).map(|k| f.element((k * 7 + 3) % 9)).collect());
        let a = factor(&u, 0);
        for seed in 1..5 {
            assert_eq!(factor(&u, seed), a);
        }
    }

    #[test]
    fn x_to_the_q_minus_x_splits_completely() {
        let f = Field::new(2, 3).unwrap();
        let mut c = vec![f.zero(); 9];
        c[8] = f.one();
        c[1] = f.one();
        let r = roots(&UPoly::new(&f, c), 0);
        assert_eq!(r.len(), 8);
    }

    #[test]
    fn rabin_test() {
        let f2 = Field::prime(2).unwrap();
        assert!(is_irreducible(&poly(&f2, &[1, 1, 1])));
        assert!(!is_irreducible(&poly(&f2, &[1, 0, 1])));
        assert!(is_irreducible(&poly(&f2, &[1, 1, 0, 0, 1])));
        assert!(!is_irreducible(&poly(&f2, &[1, 1, 1]).pow(2)));
    }
}
