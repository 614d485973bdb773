//! Finite fields `F_p` and `F_{p^d}`.
//!
//! Elements are stored as a single `u64` holding the base-`p` digits of the
//! coefficient vector of the element in the power basis `1, g, g^2, ...` where
//! `g` is a root of the (monic, irreducible) modulus polynomial. Prime fields
//! use the plain residue. Small extension fields get exp/log tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::AlgebraError;
use crate::factor;
use crate::upoly::UPoly;

/// Largest characteristic accepted; products of two residues must fit in `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;
/// Fields with at most this many elements get exp/log multiplication tables.
const TABLE_LIMIT: u64 = 1 << 20;

/// An element of a finite field. Only meaningful together with its [`Field`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub(crate) u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);

    /// Raw base-`p` encoding.
    pub fn encoding(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct LogTables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

struct FieldData {
    p: u64,
    d: u32,
    q: u64,
    /// Monic modulus, low to high, length `d + 1`. `[0, 1]` for prime fields.
    modulus: Vec<u64>,
    tables: Option<LogTables>,
}

/// Handle to a finite field. Cheap to clone; equal fields compare equal
/// regardless of how they were obtained.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec_string())
    }
}

fn cache() -> &'static Mutex<HashMap<(u64, Vec<u64>), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, Vec<u64>), Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn default_cache() -> &'static Mutex<HashMap<(u64, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut k = 3;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if !is_prime(p) || p >= MAX_CHARACTERISTIC {
            return Err(AlgebraError::NonPrimeModulus(p));
        }
        Ok(Self::intern(p, vec![0, 1]))
    }

    /// `F_{p^d}` with the default modulus: the first monic irreducible
    /// polynomial of degree `d` when polynomials are enumerated by their
    /// base-`p` encoding (constant coefficient least significant).
    pub fn new(p: u64, d: u32) -> Result<Field, AlgebraError> {
        let base = Self::prime(p)?;
        if d == 0 {
            return Err(AlgebraError::InvalidField("extension degree must be at least 1".into()));
        }
        if d == 1 {
            return Ok(base);
        }
        checked_order(p, d)?;
        if let Some(f) = default_cache().lock().unwrap().get(&(p, d)) {
            return Ok(f.clone());
        }
        let modulus = find_irreducible(&base, d)?;
        let f = Self::intern(p, modulus);
        default_cache().lock().unwrap().insert((p, d), f.clone());
        Ok(f)
    }

    /// `F_{p^d}` defined by an explicit monic modulus (low to high coefficients).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Field, AlgebraError> {
        let base = Self::prime(p)?;
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(AlgebraError::InvalidField("modulus must be monic of degree >= 1".into()));
        }
        let d = (modulus.len() - 1) as u32;
        if d == 1 {
            return Ok(base);
        }
        checked_order(p, d)?;
        let u = UPoly::new(&base, modulus.iter().map(|&c| base.from_u64(c)).collect());
        if !factor::is_irreducible(&u) {
            return Err(AlgebraError::InvalidField("modulus polynomial is reducible".into()));
        }
        Ok(Self::intern(p, modulus))
    }

    fn intern(p: u64, modulus: Vec<u64>) -> Field {
        let key = (p, modulus.clone());
        let mut guard = cache().lock().unwrap();
        if let Some(f) = guard.get(&key) {
            return f.clone();
        }
        let d = (modulus.len() - 1) as u32;
        let q = p.pow(d);
        let mut data = FieldData { p, d, q, modulus, tables: None };
        if d > 1 && q <= TABLE_LIMIT {
            data.tables = Some(build_tables(&data));
        }
        let f = Field(Arc::new(data));
        guard.insert(key, f.clone());
        f
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.d
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients, low to high.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.d == 1
    }

    /// `p` or `p^d`.
    pub fn spec_string(&self) -> String {
        if self.0.d == 1 {
            format!("{}", self.0.p)
        } else {
            format!("{}^{}", self.0.p, self.0.d)
        }
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// Root of the modulus polynomial (the `@` literal). For prime fields
    /// this is `0`, the root of `X`.
    pub fn generator(&self) -> Fe {
        if self.0.d == 1 {
            Fe(0)
        } else {
            Fe(self.0.p)
        }
    }

    pub fn from_u64(&self, n: u64) -> Fe {
        Fe(n % self.0.p)
    }

    pub fn from_i64(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.0.p as i64) as u64)
    }

    /// Element with the given power-basis coordinates (each reduced mod `p`).
    pub fn from_digits(&self, digits: &[u64]) -> Fe {
        let mut v = 0u64;
        for &c in digits.iter().take(self.0.d as usize).rev() {
            v = v * self.0.p + c % self.0.p;
        }
        Fe(v)
    }

    /// Power-basis coordinates, length `d`.
    pub fn digits(&self, a: Fe) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.0.d as usize);
        let mut v = a.0;
        for _ in 0..self.0.d {
            out.push(v % self.0.p);
            v /= self.0.p;
        }
        out
    }

    /// Element with encoding `n` (for enumeration, `0 <= n < q`).
    pub fn element(&self, n: u64) -> Fe {
        debug_assert!(n < self.0.q);
        Fe(n)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(Fe)
    }

    /// Whether `a` lies in the prime subfield.
    pub fn is_prime_subfield_element(&self, a: Fe) -> bool {
        a.0 < self.0.p
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        if self.0.d == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= p { s - p } else { s });
        }
        if p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 || y > 0 {
            let s = (x % p + y % p) % p;
            out += s * place;
            place = place.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.0.p;
        if self.0.d == 1 {
            return Fe(if a.0 == 0 { 0 } else { p - a.0 });
        }
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 {
            let c = x % p;
            out += ((p - c) % p) * place;
            place = place.wrapping_mul(p);
            x /= p;
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        if self.0.d == 1 {
            return Fe(a.0 * b.0 % self.0.p);
        }
        if let Some(t) = &self.0.tables {
            let l = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
            return Fe(t.exp[l]);
        }
        self.mul_digits(a, b)
    }

    fn mul_digits(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        let d = self.0.d as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let m = &self.0.modulus;
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &mc) in m.iter().take(d).enumerate() {
                let sub = c * mc % p;
                prod[k - d + i] = (prod[k - d + i] + p - sub) % p;
            }
        }
        self.from_digits(&prod[..d])
    }

    pub fn pow(&self, a: Fe, mut e: u128) -> Fe {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return Fe(0);
        }
        if let Some(t) = &self.0.tables {
            let l = (t.log[a.0 as usize] as u128 * (e % (self.0.q as u128 - 1))) % (self.0.q as u128 - 1);
            return Fe(t.exp[l as usize]);
        }
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let l = t.log[a.0 as usize] as u64;
            let ql = self.0.q - 1;
            return Some(Fe(t.exp[((ql - l) % ql) as usize]));
        }
        Some(self.pow(a, self.0.q as u128 - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.0.p as u128)
    }

    /// The unique `b` with `b^p = a` (finite fields are perfect).
    pub fn pth_root(&self, a: Fe) -> Fe {
        if self.0.d == 1 {
            return a;
        }
        self.pow(a, (self.0.q / self.0.p) as u128)
    }

    /// Smallest `e >= 1` with `a` in `F_{p^e}`, i.e. the size of the
    /// Frobenius orbit of `a`.
    pub fn element_degree(&self, a: Fe) -> u32 {
        let mut b = self.frobenius(a);
        let mut e = 1;
        while b != a {
            b = self.frobenius(b);
            e += 1;
        }
        e
    }

    /// Human-readable element: an integer for the prime subfield, otherwise
    /// a polynomial in `@`.
    pub fn format(&self, a: Fe) -> String {
        if a.0 < self.0.p {
            return a.0.to_string();
        }
        let digits = self.digits(a);
        let mut parts = Vec::new();
        for (k, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "@".to_string(),
                _ => format!("@^{k}"),
            };
            parts.push(match (c, k) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        parts.join(" + ")
    }

    /// Embedding of `self` into `target` (same characteristic, degree
    /// dividing the target degree). The generator is sent to the smallest
    /// root (by encoding) of the source modulus in the target.
    pub fn embedding_into(&self, target: &Field) -> Result<Embedding, AlgebraError> {
        if self.0.p != target.0.p || target.0.d % self.0.d != 0 {
            return Err(AlgebraError::FieldMismatch(format!(
                "F_{} does not embed in F_{}",
                self.spec_string(),
                target.spec_string()
            )));
        }
        let gen_image = if self == target {
            self.generator()
        } else if self.0.d == 1 {
            Fe(0)
        } else {
            let m = UPoly::new(target, self.0.modulus.iter().map(|&c| target.from_u64(c)).collect());
            let roots = factor::roots(&m, 0);
            *roots.iter().min().ok_or_else(|| {
                AlgebraError::FieldMismatch("modulus has no root in target field".into())
            })?
        };
        Ok(Embedding { source: self.clone(), target: target.clone(), gen_image })
    }
}

fn checked_order(p: u64, d: u32) -> Result<u64, AlgebraError> {
    let mut q: u64 = 1;
    for _ in 0..d {
        q = q
            .checked_mul(p)
            .filter(|&v| v < (1u64 << 62))
            .ok_or_else(|| AlgebraError::InvalidField(format!("{p}^{d} is too large")))?;
    }
    Ok(q)
}

/// First monic irreducible of degree `d` over the prime field `base`, in
/// encoding order of the lower coefficients.
fn find_irreducible(base: &Field, d: u32) -> Result<Vec<u64>, AlgebraError> {
    let p = base.0.p;
    let q = checked_order(p, d)?;
    for code in 0..q {
        let mut coeffs = Vec::with_capacity(d as usize + 1);
        let mut c = code;
        for _ in 0..d {
            coeffs.push(c % p);
            c /= p;
        }
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let u = UPoly::new(base, coeffs.iter().map(|&x| Fe(x)).collect());
        if factor::is_irreducible(&u) {
            return Ok(coeffs);
        }
    }
    Err(AlgebraError::NoIrreduciblePolynomialFound { p, d })
}

fn build_tables(data: &FieldData) -> LogTables {
    // A temporary handle without tables for digit arithmetic.
    let tmp = Field(Arc::new(FieldData {
        p: data.p,
        d: data.d,
        q: data.q,
        modulus: data.modulus.clone(),
        tables: None,
    }));
    let q = data.q;
    let order = q - 1;
    let primes = prime_divisors(order);
    let pow = |a: Fe, mut e: u64| {
        let mut base = a;
        let mut acc = Fe(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = tmp.mul_digits(acc, base);
            }
            base = tmp.mul_digits(base, base);
            e >>= 1;
        }
        acc
    };
    let g = (2..q)
        .map(Fe)
        .find(|&g| primes.iter().all(|&r| pow(g, order / r) != Fe(1)))
        .expect("multiplicative group of a finite field is cyclic");
    let mut exp = vec![0u64; 2 * order as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur = Fe(1);
    for k in 0..order as usize {
        exp[k] = cur.0;
        log[cur.0 as usize] = k as u32;
        cur = tmp.mul_digits(cur, g);
    }
    for k in order as usize..2 * order as usize {
        exp[k] = exp[k - order as usize];
    }
    LogTables { exp, log }
}

/// A field embedding `F_{p^e} -> F_{p^d}`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    gen_image: Fe,
}

impl Embedding {
    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn map(&self, a: Fe) -> Fe {
        if self.source == self.target {
            return a;
        }
        let t = &self.target;
        let mut acc = t.zero();
        let mut power = t.one();
        for c in self.source.digits(a) {
            if c != 0 {
                acc = t.add(acc, t.mul(t.from_u64(c), power));
            }
            power = t.mul(power, self.gen_image);
        }
        acc
    }
}
