use std::cmp::Ordering;

/// Exponent vector; arity equals the number of ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Monomial {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn from_exponents(e: Vec<u32>) -> Monomial {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Same monomial with variable `i` removed from the support.
    pub fn without(&self, i: usize) -> Monomial {
        let mut v = self.0.clone();
        v[i] = 0;
        Monomial(v)
    }
}

/// A block order: blocks are compared in sequence, each by graded reverse
/// lexicographic order on its own variables (listed most significant first).
/// Lex is the special case of singleton blocks; plain grevlex is one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    blocks: Vec<Vec<usize>>,
}

impl MonomialOrder {
    pub fn grevlex(ranking: Vec<usize>) -> MonomialOrder {
        MonomialOrder { blocks: vec![ranking] }
    }

    pub fn lex(ranking: Vec<usize>) -> MonomialOrder {
        MonomialOrder { blocks: ranking.into_iter().map(|v| vec![v]).collect() }
    }

    pub fn block(blocks: Vec<Vec<usize>>) -> MonomialOrder {
        MonomialOrder { blocks }
    }

    /// Grevlex with variables ranked in their natural index order.
    pub fn default_for(nvars: usize) -> MonomialOrder {
        MonomialOrder::grevlex((0..nvars).collect())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// A key whose lexicographic order agrees with this monomial order.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let mut k = Vec::with_capacity(m.arity() + self.blocks.len());
        for block in &self.blocks {
            k.push(block.iter().map(|&v| m.0[v] as i64).sum());
            for &v in block.iter().skip(1).rev() {
                k.push(-(m.0[v] as i64));
            }
        }
        k
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for block in &self.blocks {
            let da: u32 = block.iter().map(|&v| a.0[v]).sum();
            let db: u32 = block.iter().map(|&v| b.0[v]).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
            for &v in block.iter().rev() {
                match b.0[v].cmp(&a.0[v]) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_ties_broken_on_last_variable() {
        let o = MonomialOrder::default_for(3);
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 0, 3])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn lex_and_block() {
        let lex = MonomialOrder::lex(vec![0, 1]);
        assert_eq!(lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let blk = MonomialOrder::block(vec![vec![1], vec![0]]);
        assert_eq!(blk.cmp(&m(&[5, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn key_agrees_with_cmp() {
        let orders = [
            MonomialOrder::default_for(3),
            MonomialOrder::lex(vec![2, 0, 1]),
            MonomialOrder::block(vec![vec![1], vec![0, 2]]),
        ];
        let mons: Vec<Monomial> = (0..27).map(|k| m(&[k % 3, (k / 3) % 3, k / 9])).collect();
        for o in &orders {
            for a in &mons {
                for b in &mons {
                    assert_eq!(o.key(a).cmp(&o.key(b)), o.cmp(a, b));
                }
            }
        }
    }
}
