//! Buchberger's algorithm with cofactor tracking, ideal membership with
//! witnesses, ideal equality and a few elimination-based helpers.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};
use crate::field::{Fe, Field};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{MultiPoly, PolyRing};

/// A term together with its order key. Keys are linear in the exponent
/// vector, so the key of a product is the sum of keys.
#[derive(Clone, Debug)]
struct Term {
    key: Vec<i64>,
    mono: Monomial,
    c: Fe,
}

/// Terms in ascending order; the leading term is the last one.
type OPoly = Vec<Term>;

fn to_opoly(p: &MultiPoly, order: &MonomialOrder) -> OPoly {
    let mut v: OPoly = p.terms().map(|(m, c)| Term { key: order.key(m), mono: m.clone(), c }).collect();
    v.sort_by(|a, b| a.key.cmp(&b.key));
    v
}

fn from_opoly(ring: &PolyRing, p: &OPoly) -> MultiPoly {
    MultiPoly::from_terms(ring, p.iter().map(|t| (t.mono.clone(), t.c)))
}

fn add_keys(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_keys(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `p - c * m * g`.
fn sub_scaled(field: &Field, p: &OPoly, g: &OPoly, mkey: &[i64], m: &Monomial, c: Fe) -> OPoly {
    let negc = field.neg(c);
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |t: &Term| Term { key: add_keys(&t.key, mkey), mono: t.mono.mul(m), c: field.mul(t.c, negc) };
    while i < p.len() || j < g.len() {
        if j == g.len() {
            out.push(p[i].clone());
            i += 1;
            continue;
        }
        let gk = add_keys(&g[j].key, mkey);
        if i == p.len() {
            out.push(shifted(&g[j]));
            j += 1;
            continue;
        }
        match p[i].key.cmp(&gk) {
            Ordering::Less => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(shifted(&g[j]));
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(p[i].c, field.mul(g[j].c, negc));
                if !s.is_zero() {
                    out.push(Term { key: gk, mono: p[i].mono.clone(), c: s });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn scale_opoly(field: &Field, p: &mut OPoly, c: Fe) {
    for t in p.iter_mut() {
        t.c = field.mul(t.c, c);
    }
}

/// One quotient term: `c * m` times basis element `idx`.
type QTerm = (usize, Monomial, Fe);

/// Full reduction of `f` by `basis`. Returns the remainder; quotient terms
/// are appended to `quot` when given.
fn reduce_full(field: &Field, f: OPoly, basis: &[OPoly], mut quot: Option<&mut Vec<QTerm>>) -> OPoly {
    let mut p = f;
    let mut rem_desc: Vec<Term> = Vec::new();
    while let Some(lt) = p.last() {
        let hit = basis.iter().position(|g| g.last().is_some_and(|lg| lg.mono.divides(&lt.mono)));
        match hit {
            Some(i) => {
                let lg = basis[i].last().unwrap();
                let c = field.div(lt.c, lg.c).unwrap();
                let m = lg.mono.quotient_of(&lt.mono);
                let mkey = sub_keys(&lt.key, &lg.key);
                p = sub_scaled(field, &p, &basis[i], &mkey, &m, c);
                if let Some(q) = quot.as_deref_mut() {
                    q.push((i, m, c));
                }
            }
            None => rem_desc.push(p.pop().unwrap()),
        }
    }
    rem_desc.reverse();
    rem_desc
}

/// Rows of the transformation matrix: `rows[k][j]` is the coefficient of
/// original generator `j` in basis element `k`.
type Rows = Vec<Vec<MultiPoly>>;

fn combine_rows(rows: &Rows, base: Vec<MultiPoly>, terms: &[QTerm], field: &Field, sign: Fe) -> Vec<MultiPoly> {
    let mut out = base;
    for (idx, m, c) in terms {
        let cc = field.mul(*c, sign);
        for (j, r) in rows[*idx].iter().enumerate() {
            if !r.is_zero() {
                out[j] = &out[j] + &r.mul_monomial(m, cc);
            }
        }
    }
    out
}

struct Gb {
    basis: Vec<OPoly>,
    rows: Option<Rows>,
}

fn buchberger(ring: &PolyRing, gens: &[MultiPoly], order: &MonomialOrder, track: bool) -> Gb {
    let field = ring.field().clone();
    let n = gens.len();
    let one = field.one();
    let minus_one = field.neg(one);
    let mut basis: Vec<OPoly> = Vec::new();
    let mut rows: Rows = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<OPoly>,
                    rows: &mut Rows,
                    pairs: &mut Vec<(usize, usize)>,
                    pending: &mut HashSet<(usize, usize)>,
                    mut g: OPoly,
                    mut row: Vec<MultiPoly>| {
        let inv = field.inv(g.last().unwrap().c).unwrap();
        scale_opoly(&field, &mut g, inv);
        if track {
            for r in row.iter_mut() {
                *r = r.scale(inv);
            }
            rows.push(row);
        }
        let k = basis.len();
        basis.push(g);
        for i in 0..k {
            pairs.push((i, k));
            pending.insert((i, k));
        }
    };

    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut row = vec![ring.zero(); if track { n } else { 0 }];
        if track {
            row[j] = ring.one();
        }
        push(&mut basis, &mut rows, &mut pairs, &mut pending, to_opoly(g, order), row);
    }

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first.
        let lcm_key = |&(i, j): &(usize, usize)| {
            let l = basis[i].last().unwrap().mono.lcm(&basis[j].last().unwrap().mono);
            order.key(&l)
        };
        let (best, _) = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| lcm_key(a.1).cmp(&lcm_key(b.1)))
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        pending.remove(&(i, j));

        let li = basis[i].last().unwrap().clone();
        let lj = basis[j].last().unwrap().clone();
        if li.mono.coprime(&lj.mono) {
            continue;
        }
        let l = li.mono.lcm(&lj.mono);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].last().unwrap().mono.divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let lkey = order.key(&l);
        let mi = li.mono.quotient_of(&l);
        let mj = lj.mono.quotient_of(&l);
        let ki = sub_keys(&lkey, &li.key);
        let kj = sub_keys(&lkey, &lj.key);
        // Both are monic: s = mi*g_i - mj*g_j.
        let s = sub_scaled(&field, &sub_scaled(&field, &Vec::new(), &basis[i], &ki, &mi, minus_one), &basis[j], &kj, &mj, one);
        let mut quot = Vec::new();
        let r = reduce_full(&field, s, &basis, track.then_some(&mut quot));
        if r.is_empty() {
            continue;
        }
        let row = if track {
            let base = vec![ring.zero(); n];
            let with_i = combine_rows(&rows, base, &[(i, mi, one)], &field, one);
            let with_j = combine_rows(&rows, with_i, &[(j, mj, one)], &field, minus_one);
            combine_rows(&rows, with_j, &quot, &field, minus_one)
        } else {
            Vec::new()
        };
        push(&mut basis, &mut rows, &mut pairs, &mut pending, r, row);
    }

    // Minimize: drop elements whose leading monomial is divisible by another's
    // (keeping the earliest among equal leading monomials).
    let lms: Vec<Monomial> = basis.iter().map(|g| g.last().unwrap().mono.clone()).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&k| {
            !(0..basis.len()).any(|o| o != k && lms[o].divides(&lms[k]) && (lms[o] != lms[k] || o < k))
        })
        .collect();
    let mut min_basis: Vec<OPoly> = keep.iter().map(|&k| basis[k].clone()).collect();
    let mut min_rows: Rows = if track { keep.iter().map(|&k| rows[k].clone()).collect() } else { Vec::new() };

    // Inter-reduce.
    for k in 0..min_basis.len() {
        let others: Vec<OPoly> =
            (0..min_basis.len()).map(|o| if o == k { Vec::new() } else { min_basis[o].clone() }).collect();
        let mut quot = Vec::new();
        let r = reduce_full(&field, min_basis[k].clone(), &others, track.then_some(&mut quot));
        if track {
            let base = min_rows[k].clone();
            min_rows[k] = combine_rows(&min_rows, base, &quot, &field, minus_one);
        }
        min_basis[k] = r;
    }

    // Sort descending by leading monomial for a canonical presentation.
    let mut idx: Vec<usize> = (0..min_basis.len()).collect();
    idx.sort_by(|&a, &b| min_basis[b].last().unwrap().key.cmp(&min_basis[a].last().unwrap().key));
    Gb {
        basis: idx.iter().map(|&k| min_basis[k].clone()).collect(),
        rows: track.then(|| idx.iter().map(|&k| min_rows[k].clone()).collect()),
    }
}

/// Default ranking: `Y` first, then the `X` variables, then the rest, all in
/// one grevlex block.
pub fn default_order(ring: &PolyRing) -> MonomialOrder {
    let vars = ring.vars();
    let mut ranking: Vec<usize> = vars.iter().position(|v| v == "Y").into_iter().collect();
    ranking.extend((0..vars.len()).filter(|&i| vars[i].starts_with('X')));
    let rest: Vec<usize> = (0..vars.len()).filter(|i| !ranking.contains(i)).collect();
    ranking.extend(rest);
    MonomialOrder::grevlex(ranking)
}

/// Block order with `eliminate` in the first (most significant) block.
pub fn elimination_order(ring: &PolyRing, eliminate: &[usize]) -> MonomialOrder {
    let rest: Vec<usize> = (0..ring.nvars()).filter(|i| !eliminate.contains(i)).collect();
    MonomialOrder::block(vec![eliminate.to_vec(), rest])
}

/// An ideal given by generators and a monomial order, with lazily computed
/// and cached reduced Gröbner bases (plain and with cofactor tracking).
pub struct IdealHandle {
    ring: PolyRing,
    gens: Vec<MultiPoly>,
    order: MonomialOrder,
    plain: OnceLock<Vec<OPoly>>,
    tracked: OnceLock<(Vec<OPoly>, Rows)>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            order: self.order.clone(),
            plain: self.plain.clone(),
            tracked: self.tracked.clone(),
        }
    }
}

impl std::fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdealHandle").field("gens", &self.gens).field("order", &self.order).finish()
    }
}

impl IdealHandle {
    /// Uses [`default_order`].
    pub fn new(ring: &PolyRing, gens: Vec<MultiPoly>) -> Result<IdealHandle> {
        IdealHandle::with_order(ring, gens, default_order(ring))
    }

    pub fn with_order(ring: &PolyRing, gens: Vec<MultiPoly>, order: MonomialOrder) -> Result<IdealHandle> {
        if let Some(g) = gens.iter().find(|g| g.ring() != ring) {
            return Err(AlgebraError::InconsistentVariableLists(format!(
                "generator in {:?}, ideal in {:?}",
                g.ring(),
                ring
            )));
        }
        Ok(IdealHandle { ring: ring.clone(), gens, order, plain: OnceLock::new(), tracked: OnceLock::new() })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    fn plain_basis(&self) -> &[OPoly] {
        if let Some((b, _)) = self.tracked.get() {
            return b;
        }
        self.plain.get_or_init(|| buchberger(&self.ring, &self.gens, &self.order, false).basis)
    }

    fn tracked_basis(&self) -> &(Vec<OPoly>, Rows) {
        self.tracked.get_or_init(|| {
            let gb = buchberger(&self.ring, &self.gens, &self.order, true);
            (gb.basis, gb.rows.unwrap())
        })
    }

    /// Reduced Gröbner basis, monic, sorted by decreasing leading monomial.
    pub fn groebner_basis(&self) -> Vec<MultiPoly> {
        self.plain_basis().iter().map(|g| from_opoly(&self.ring, g)).collect()
    }

    fn check(&self, f: &MultiPoly) -> Result<()> {
        if f.ring() != &self.ring {
            return Err(AlgebraError::InconsistentVariableLists(format!(
                "polynomial in {:?}, ideal in {:?}",
                f.ring(),
                self.ring
            )));
        }
        Ok(())
    }

    /// Normal form of `f` modulo the ideal.
    pub fn reduce(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.check(f)?;
        let r = reduce_full(self.ring.field(), to_opoly(f, &self.order), self.plain_basis(), None);
        Ok(from_opoly(&self.ring, &r))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// True if the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.plain_basis().iter().any(|g| g.len() == 1 && g[0].mono.is_one())
    }

    /// `(remainder, cofactors)` with `f = sum(cofactors[j] * generators[j]) + remainder`.
    pub fn divide_with_witness(&self, f: &MultiPoly) -> Result<(MultiPoly, Vec<MultiPoly>)> {
        self.check(f)?;
        let (basis, rows) = self.tracked_basis();
        let field = self.ring.field();
        let mut quot = Vec::new();
        let r = reduce_full(field, to_opoly(f, &self.order), basis, Some(&mut quot));
        let base = vec![self.ring.zero(); self.gens.len()];
        let cof = combine_rows(rows, base, &quot, field, field.one());
        Ok((from_opoly(&self.ring, &r), cof))
    }

    /// Basis elements free of the given variables. Meaningful as the
    /// elimination ideal when those variables form the leading block of the
    /// order (see [`elimination_order`]).
    pub fn eliminate(&self, vars: &[usize]) -> Vec<MultiPoly> {
        self.groebner_basis().into_iter().filter(|g| vars.iter().all(|&v| !g.uses_var(v))).collect()
    }
}

/// Equality of ideals by comparison of reduced Gröbner bases.
pub fn ideal_equal(i: &IdealHandle, j: &IdealHandle) -> Result<bool> {
    if i.ring != j.ring {
        return Err(AlgebraError::InconsistentVariableLists(format!("{:?} vs {:?}", i.ring, j.ring)));
    }
    if i.order != j.order {
        return Err(AlgebraError::InconsistentVariableLists("ideals use different monomial orders".into()));
    }
    Ok(i.groebner_basis() == j.groebner_basis())
}

/// Exact quotient `a / b`, or `None` if `b` does not divide `a`.
pub fn div_exact(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    if b.is_zero() {
        return None;
    }
    let ring = a.ring().clone();
    let order = ring.default_order();
    let field = ring.field();
    let bo = to_opoly(b, &order);
    let mut quot = Vec::new();
    let r = reduce_full(field, to_opoly(a, &order), std::slice::from_ref(&bo), Some(&mut quot));
    if !r.is_empty() {
        return None;
    }
    Some(MultiPoly::from_terms(&ring, quot.into_iter().map(|(_, m, c)| (m, c))))
}

/// Greatest common divisor, monic in the default grevlex order. Computed as
/// `a*b / lcm(a, b)` with the lcm found by eliminating `t` from
/// `(t*a, (1-t)*b)`.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let ring = a.ring().clone();
    let order = ring.default_order();
    if a.is_zero() {
        return b.monic(&order);
    }
    if b.is_zero() {
        return a.monic(&order);
    }
    if a.is_constant() || b.is_constant() {
        return ring.one();
    }
    let ext = ring.extended(&["_gcd_t"]);
    let t = ext.var(ring.nvars());
    let ae = a.map_into(&ext, None).unwrap();
    let be = b.map_into(&ext, None).unwrap();
    let gens = vec![&t * &ae, &(&ext.one() - &t) * &be];
    let ideal = IdealHandle::with_order(&ext, gens, elimination_order(&ext, &[ring.nvars()])).unwrap();
    let lcm = ideal.eliminate(&[ring.nvars()]).into_iter().next().expect("lcm of nonzero polynomials");
    let lcm = lcm.map_into(&ring, None).unwrap();
    div_exact(&(a * b), &lcm).expect("lcm divides the product").monic(&order)
}
