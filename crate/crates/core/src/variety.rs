//! Presentations `A = k[X1..Xm, Y, Z, T] / (alpha*Y - F)`, hypothesis
//! validation, canonical element forms, base change and coordinate shifts.

use std::fmt;

use gav_algebra::{
    factor_univariate, poly_gcd, Fe, Field, IdealHandle, MonomialOrder, MultiPoly, PolyRing,
};

use crate::error::{CoreError, Result};

/// A trusted boolean: true values must carry a literature citation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flag {
    pub value: bool,
    pub cite: Option<String>,
}

impl Flag {
    pub fn trusted(cite: &str) -> Flag {
        Flag { value: true, cite: Some(cite.to_string()) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub f_is_line: Flag,
    pub f_nontrivial_line: Flag,
    pub f_not_linear_any_coords: Flag,
}

impl Flags {
    pub const NAMES: [&'static str; 3] = ["f_is_line", "f_nontrivial_line", "f_not_linear_any_coords"];

    pub fn get(&self, name: &str) -> Option<&Flag> {
        match name {
            "f_is_line" => Some(&self.f_is_line),
            "f_nontrivial_line" => Some(&self.f_nontrivial_line),
            "f_not_linear_any_coords" => Some(&self.f_not_linear_any_coords),
            _ => None,
        }
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut Flag> {
        match name {
            "f_is_line" => Some(&mut self.f_is_line),
            "f_nontrivial_line" => Some(&mut self.f_nontrivial_line),
            "f_not_linear_any_coords" => Some(&mut self.f_not_linear_any_coords),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum AlphaSpec {
    /// `a_i(X_i)` for `i = 1..m`.
    Factored(Vec<MultiPoly>),
    Product(MultiPoly),
}

/// Raw presentation data; polynomials may live in any ring whose variable
/// names are a subset of `X1..Xm, Y, Z, T`.
#[derive(Clone, Debug)]
pub struct PresentationData {
    pub field: Field,
    pub m: usize,
    pub alpha: AlphaSpec,
    pub big_f: MultiPoly,
    pub f_part: Option<MultiPoly>,
    pub h_part: Option<MultiPoly>,
    pub flags: Flags,
}

/// Variable names of the ambient ring: `X1..Xm, Y, Z, T, U, V`. The last two
/// carry exponential-map parameters.
pub fn ambient_vars(m: usize) -> Vec<String> {
    let mut v: Vec<String> = (1..=m).map(|i| format!("X{i}")).collect();
    v.extend(["Y", "Z", "T", "U", "V"].iter().map(|s| s.to_string()));
    v
}

/// Order used for normal forms: `Y`-degree first, then grevlex on the rest.
/// The leading monomial of `alpha*Y - F` is then `Y * LM(alpha)`, and
/// polynomials free of `Y` stay free of `Y` under reduction.
pub fn normal_form_order(m: usize) -> MonomialOrder {
    let rest: Vec<usize> = (0..m).chain(m + 1..m + 5).collect();
    MonomialOrder::block(vec![vec![m], rest])
}

#[derive(Clone)]
pub struct GavPresentation {
    field: Field,
    m: usize,
    ring: PolyRing,
    alpha_factored: Option<Vec<MultiPoly>>,
    alpha: MultiPoly,
    big_f: MultiPoly,
    f_part: Option<MultiPoly>,
    h_part: Option<MultiPoly>,
    flags: Flags,
    relation: IdealHandle,
}

impl fmt::Debug for GavPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A over F_{}: ({})*Y - ({})", self.field.spec_string(), self.alpha, self.big_f)
    }
}

impl PartialEq for GavPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.m == other.m
            && self.alpha_factored == other.alpha_factored
            && self.alpha == other.alpha
            && self.big_f == other.big_f
            && self.f_part == other.f_part
            && self.h_part == other.h_part
            && self.flags == other.flags
    }
}

fn only_vars(p: &MultiPoly, allowed: &[usize], what: &str) -> Result<()> {
    if let Some(v) = p.vars_used().into_iter().find(|v| !allowed.contains(v)) {
        return Err(CoreError::InvalidPresentation(format!(
            "{what} = {p} uses variable {}",
            p.ring().vars()[v]
        )));
    }
    Ok(())
}

impl GavPresentation {
    pub fn new(data: PresentationData) -> Result<GavPresentation> {
        let m = data.m;
        if m == 0 {
            return Err(CoreError::InvalidPresentation("m must be at least 1".into()));
        }
        let ring = PolyRing::new(&data.field, &ambient_vars(m));
        let lift = |p: &MultiPoly| -> Result<MultiPoly> {
            if p.field() != &data.field {
                return Err(CoreError::InvalidPresentation(format!(
                    "polynomial {p} is over F_{}, presentation over F_{}",
                    p.field().spec_string(),
                    data.field.spec_string()
                )));
            }
            Ok(p.map_into(&ring, None)?)
        };
        let xs: Vec<usize> = (0..m).collect();
        let xzt: Vec<usize> = (0..m).chain([m + 1, m + 2]).collect();
        let (alpha_factored, alpha) = match &data.alpha {
            AlphaSpec::Factored(list) => {
                if list.len() != m {
                    return Err(CoreError::InvalidPresentation(format!(
                        "expected {m} factors a_i, got {}",
                        list.len()
                    )));
                }
                let mut lifted = Vec::with_capacity(m);
                for (i, a) in list.iter().enumerate() {
                    let a = lift(a)?;
                    only_vars(&a, &[i], &format!("a_{}", i + 1))?;
                    if a.is_zero() {
                        return Err(CoreError::InvalidPresentation(format!("a_{} is zero", i + 1)));
                    }
                    lifted.push(a);
                }
                let prod = lifted.iter().fold(ring.one(), |acc, a| &acc * a);
                (Some(lifted), prod)
            }
            AlphaSpec::Product(a) => {
                let a = lift(a)?;
                only_vars(&a, &xs, "alpha")?;
                (None, a)
            }
        };
        if alpha.is_zero() {
            return Err(CoreError::InvalidPresentation("alpha is zero".into()));
        }
        let big_f = lift(&data.big_f)?;
        only_vars(&big_f, &xzt, "F")?;
        let f_part = data.f_part.as_ref().map(lift).transpose()?;
        if let Some(f) = &f_part {
            only_vars(f, &[m + 1, m + 2], "f")?;
        }
        let h_part = data.h_part.as_ref().map(lift).transpose()?;
        if let Some(h) = &h_part {
            only_vars(h, &xzt, "h")?;
        }
        for name in Flags::NAMES {
            let flag = data.flags.get(name).unwrap();
            if flag.value && flag.cite.as_deref().map_or(true, |c| c.trim().is_empty()) {
                return Err(CoreError::InvalidPresentation(format!("flag {name} is true but has no citation")));
            }
        }
        let relation = &(&alpha * &ring.var(m)) - &big_f;
        let ideal = IdealHandle::with_order(&ring, vec![relation], normal_form_order(m))?;
        Ok(GavPresentation {
            field: data.field,
            m,
            ring,
            alpha_factored,
            alpha,
            big_f,
            f_part,
            h_part,
            flags: data.flags,
            relation: ideal,
        })
    }

    /// Parses `a_i` strings and `F` over `field`; `F` is also recorded as
    /// `f` when it only involves `Z` and `T`.
    pub fn from_factors(field: &Field, factors: &[&str], big_f: &str) -> Result<GavPresentation> {
        let m = factors.len();
        let ring = PolyRing::new(field, &ambient_vars(m));
        let a = factors.iter().map(|s| gav_algebra::parse_poly(s, &ring)).collect::<std::result::Result<_, _>>()?;
        let big_f = gav_algebra::parse_poly(big_f, &ring)?;
        let f_part = big_f.vars_used().iter().all(|&v| v == m + 1 || v == m + 2).then(|| big_f.clone());
        GavPresentation::new(PresentationData {
            field: field.clone(),
            m,
            alpha: AlphaSpec::Factored(a),
            big_f,
            f_part,
            h_part: None,
            flags: Flags::default(),
        })
    }

    /// Same presentation with different trusted flags.
    pub fn with_flags(&self, flags: Flags) -> Result<GavPresentation> {
        let mut d = self.data();
        d.flags = flags;
        GavPresentation::new(d)
    }

    pub fn data(&self) -> PresentationData {
        PresentationData {
            field: self.field.clone(),
            m: self.m,
            alpha: match &self.alpha_factored {
                Some(a) => AlphaSpec::Factored(a.clone()),
                None => AlphaSpec::Product(self.alpha.clone()),
            },
            big_f: self.big_f.clone(),
            f_part: self.f_part.clone(),
            h_part: self.h_part.clone(),
            flags: self.flags.clone(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn alpha(&self) -> &MultiPoly {
        &self.alpha
    }

    pub fn alpha_factored(&self) -> Option<&[MultiPoly]> {
        self.alpha_factored.as_deref()
    }

    pub fn big_f(&self) -> &MultiPoly {
        &self.big_f
    }

    pub fn f_part(&self) -> Option<&MultiPoly> {
        self.f_part.as_ref()
    }

    pub fn h_part(&self) -> Option<&MultiPoly> {
        self.h_part.as_ref()
    }

    pub fn flags(&self) -> &Flags {
        &self.flags
    }

    /// `alpha*Y - F`.
    pub fn relation(&self) -> &MultiPoly {
        &self.relation.generators()[0]
    }

    pub fn x(&self, i: usize) -> MultiPoly {
        self.ring.var(i)
    }

    pub fn y(&self) -> MultiPoly {
        self.ring.var(self.m)
    }

    pub fn z(&self) -> MultiPoly {
        self.ring.var(self.m + 1)
    }

    pub fn t(&self) -> MultiPoly {
        self.ring.var(self.m + 2)
    }

    pub fn u(&self) -> MultiPoly {
        self.ring.var(self.m + 3)
    }

    pub fn v(&self) -> MultiPoly {
        self.ring.var(self.m + 4)
    }

    pub fn y_index(&self) -> usize {
        self.m
    }

    pub fn z_index(&self) -> usize {
        self.m + 1
    }

    pub fn t_index(&self) -> usize {
        self.m + 2
    }

    pub fn u_index(&self) -> usize {
        self.m + 3
    }

    pub fn v_index(&self) -> usize {
        self.m + 4
    }

    /// Number of algebra generators `x1..xm, y, z, t`.
    pub fn num_generators(&self) -> usize {
        self.m + 3
    }

    /// Indices of `x1..xm, z, t`: the generators of `B = k[x, z, t]`.
    pub fn b_indices(&self) -> Vec<usize> {
        (0..self.m).chain([self.m + 1, self.m + 2]).collect()
    }

    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        Ok(gav_algebra::parse_poly(text, &self.ring)?)
    }

    /// Canonical representative modulo `alpha*Y - F` (also valid in `A[U]`
    /// and `A[U, V]`).
    pub fn normal_form(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.ring() != &self.ring {
            return Err(CoreError::PresentationMismatch);
        }
        Ok(self.relation.reduce(p)?)
    }

    pub fn element(&self, p: &MultiPoly) -> Result<AElement> {
        Ok(AElement { rep: p.clone(), nf: self.normal_form(p)? })
    }

    pub fn element_str(&self, text: &str) -> Result<AElement> {
        self.element(&self.parse(text)?)
    }

    /// Distinct monic irreducible factors of each `a_i` with multiplicities.
    pub fn alpha_factorizations(&self) -> Result<Vec<Vec<(MultiPoly, u32)>>> {
        let a = self.alpha_factored.as_ref().ok_or(CoreError::AlphaNotFactored)?;
        a.iter().map(|ai| Ok(factor_univariate(ai, 0)?)).collect()
    }

    /// Product of the distinct prime factors of `alpha`, when computable
    /// (factored alpha, or alpha in a single variable).
    pub fn alpha_radical(&self) -> Option<MultiPoly> {
        let one = self.ring.one();
        if let Ok(fs) = self.alpha_factorizations() {
            return Some(fs.iter().flatten().fold(one, |acc, (g, _)| &acc * g));
        }
        if self.alpha.vars_used().len() <= 1 {
            let fs = factor_univariate(&self.alpha, 0).ok()?;
            return Some(fs.iter().fold(one, |acc, (g, _)| &acc * g));
        }
        None
    }
}

/// An element of `A` with its canonical normal form.
#[derive(Clone, Debug)]
pub struct AElement {
    rep: MultiPoly,
    nf: MultiPoly,
}

impl AElement {
    pub fn representative(&self) -> &MultiPoly {
        &self.rep
    }

    pub fn normal_form(&self) -> &MultiPoly {
        &self.nf
    }

    pub fn is_zero(&self) -> bool {
        self.nf.is_zero()
    }
}

impl PartialEq for AElement {
    fn eq(&self, other: &Self) -> bool {
        self.nf == other.nf
    }
}

impl fmt::Display for AElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.nf)
    }
}

pub fn elem_equal(p: &AElement, q: &AElement, pres: &GavPresentation) -> Result<bool> {
    if p.nf.ring() != pres.ring() || q.nf.ring() != pres.ring() {
        return Err(CoreError::PresentationMismatch);
    }
    Ok(pres.normal_form(&(&p.rep - &q.rep))?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, prefix: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }
}

fn check(name: &str, passed: bool, detail: String, witness: Option<String>) -> CheckResult {
    CheckResult { name: name.to_string(), passed, detail, witness }
}

pub fn validate_presentation(pres: &GavPresentation) -> ValidationReport {
    let m = pres.m;
    let mut checks = Vec::new();

    let nonconst = !pres.alpha.is_constant();
    checks.push(check(
        "(a) alpha not constant",
        nonconst,
        format!("alpha = {}", pres.alpha),
        (!nonconst).then(|| pres.alpha.to_string()),
    ));

    let dz = pres.big_f.degree_in(m + 1);
    let dt = pres.big_f.degree_in(m + 2);
    checks.push(check(
        "(b) deg_Z F >= 1 or deg_T F >= 1",
        dz >= 1 || dt >= 1,
        format!("deg_Z F = {dz}, deg_T F = {dt}"),
        None,
    ));

    let domain = match pres.alpha_factorizations() {
        Ok(fs) => {
            let bad = fs
                .iter()
                .flatten()
                .find(|(g, _)| gav_algebra::div_exact(&pres.big_f, g).is_some())
                .map(|(g, _)| g.clone());
            match bad {
                None => check("(c) gcd(alpha, F) = 1", true, "no prime factor of alpha divides F".into(), None),
                Some(g) => check(
                    "(c) gcd(alpha, F) = 1",
                    false,
                    format!("prime factor {g} of alpha divides F"),
                    Some(g.to_string()),
                ),
            }
        }
        Err(_) => {
            let g = poly_gcd(&pres.alpha, &pres.big_f);
            let ok = g.is_constant();
            check(
                "(c) gcd(alpha, F) = 1",
                ok,
                format!("gcd(alpha, F) = {g}"),
                (!ok).then(|| g.to_string()),
            )
        }
    };
    checks.push(domain);

    if let Some(f) = &pres.f_part {
        let h = pres.h_part.clone().unwrap_or_else(|| pres.ring.zero());
        let res = match pres.alpha_radical() {
            Some(rad) => {
                let diff = &pres.big_f - &(f + &(&rad * &h));
                let ok = diff.is_zero();
                check(
                    "(d) F = f + rad(alpha)*h",
                    ok,
                    format!("rad(alpha) = {rad}"),
                    (!ok).then(|| diff.to_string()),
                )
            }
            None => check(
                "(d) F = f + rad(alpha)*h",
                false,
                "rad(alpha) is not computable without a factored alpha".into(),
                None,
            ),
        };
        checks.push(res);
    }
    ValidationReport { checks }
}

/// Re-reads the presentation over the degree-`d` extension of its field.
pub fn base_change(pres: &GavPresentation, d: u32) -> Result<GavPresentation> {
    if d == 0 {
        return Err(CoreError::Precondition("extension degree must be at least 1".into()));
    }
    if d == 1 {
        return Ok(pres.clone());
    }
    let f = &pres.field;
    let target = Field::new(f.characteristic(), f.degree() * d)?;
    let emb = f.embedding_into(&target)?;
    let ring = PolyRing::new(&target, &ambient_vars(pres.m));
    let lift = |p: &MultiPoly| p.map_into(&ring, Some(&emb));
    let mut data = pres.data();
    data.field = target;
    data.alpha = match data.alpha {
        AlphaSpec::Factored(a) => AlphaSpec::Factored(a.iter().map(lift).collect::<std::result::Result<_, _>>()?),
        AlphaSpec::Product(a) => AlphaSpec::Product(lift(&a)?),
    };
    data.big_f = lift(&data.big_f)?;
    data.f_part = data.f_part.as_ref().map(lift).transpose()?;
    data.h_part = data.h_part.as_ref().map(lift).transpose()?;
    GavPresentation::new(data)
}

/// Substitutes `X_i -> X_i + lambda` everywhere.
pub fn translate(pres: &GavPresentation, i: usize, lambda: Fe) -> Result<GavPresentation> {
    if i >= pres.m {
        return Err(CoreError::Precondition(format!("no variable X{}", i + 1)));
    }
    let tr = |p: &MultiPoly| p.translate_var(i, lambda);
    let mut data = pres.data();
    data.alpha = match data.alpha {
        AlphaSpec::Factored(a) => AlphaSpec::Factored(a.iter().map(tr).collect()),
        AlphaSpec::Product(a) => AlphaSpec::Product(tr(&a)),
    };
    data.big_f = tr(&data.big_f);
    data.h_part = data.h_part.as_ref().map(tr);
    GavPresentation::new(data)
}

/// Output of [`shift_coordinate`]: the presentation rewritten in
/// `X_i' = X_i - lambda` (the variable keeps its name), with
/// `alpha = X_i'^r * alpha_prime` and `alpha_prime(X_i' = 0) != 0`.
#[derive(Clone, Debug)]
pub struct Shifted {
    pub pres: GavPresentation,
    pub var: usize,
    pub lambda: Fe,
    pub r: u32,
    pub alpha_prime: MultiPoly,
}

pub fn shift_coordinate(pres: &GavPresentation, i: usize, lambda: Fe) -> Result<Shifted> {
    let a = pres.alpha_factored.as_ref().ok_or(CoreError::AlphaNotFactored)?;
    if i >= pres.m {
        return Err(CoreError::Precondition(format!("no variable X{}", i + 1)));
    }
    let not_root = || CoreError::NotARoot { var: i + 1, lambda: pres.field.format(lambda) };
    let ai = a[i].translate_var(i, lambda);
    let xi = pres.ring.var(i);
    let mut r = 0;
    let mut rest = ai;
    while let Some(q) = gav_algebra::div_exact(&rest, &xi) {
        r += 1;
        rest = q;
    }
    if r == 0 {
        return Err(not_root());
    }
    let shifted = translate(pres, i, lambda)?;
    let alpha_prime = gav_algebra::div_exact(shifted.alpha(), &xi.pow(r))
        .ok_or_else(|| CoreError::ExactDivisionFailure("alpha / X_i^r".into()))?;
    Ok(Shifted { pres: shifted, var: i, lambda, r, alpha_prime })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn validation_examples() {
        let ok = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2 + T^3").unwrap();
        assert!(validate_presentation(&ok).passed());

        let bad = GavPresentation::from_factors(&f5(), &["X1"], "X1*Z").unwrap();
        let rep = validate_presentation(&bad);
        let c = rep.check("(c)").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some("X1"));

        let constant = GavPresentation::from_factors(&f5(), &["3"], "Z").unwrap();
        assert!(!validate_presentation(&constant).check("(a)").unwrap().passed);
    }

    #[test]
    fn element_equality_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let e = |s: &str| pres.element_str(s).unwrap();
        assert!(elem_equal(&e("X1^2*Y"), &e("Z^2"), &pres).unwrap());
        assert!(!elem_equal(&e("Y"), &e("Z^2"), &pres).unwrap());
        assert!(elem_equal(&e("Z*T + 1 + (X1^2*Y - Z^2)*T"), &e("Z*T + 1"), &pres).unwrap());
        assert!(pres.normal_form(pres.relation()).unwrap().is_zero());
    }

    #[test]
    fn shift_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2*(X1-1)^2"], "Z^2 + T^3").unwrap();
        let s = shift_coordinate(&pres, 0, f5().one()).unwrap();
        assert_eq!(s.r, 2);
        assert_eq!(s.alpha_prime, pres.parse("(X1+1)^2").unwrap());

        let sq = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let s0 = shift_coordinate(&sq, 0, Fe::ZERO).unwrap();
        assert_eq!((s0.r, s0.alpha_prime.is_one()), (2, true));
        assert!(matches!(shift_coordinate(&sq, 0, f5().one()), Err(CoreError::NotARoot { .. })));

        let back = translate(&s.pres, 0, f5().from_i64(-1)).unwrap();
        assert_eq!(back, pres);
    }

    #[test]
    fn base_change_examples() {
        let f3 = Field::prime(3).unwrap();
        let pres = GavPresentation::from_factors(&f3, &["(X1^2+1)^2"], "Z^2 + T").unwrap();
        assert_eq!(base_change(&pres, 1).unwrap(), pres);
        let ext = base_change(&pres, 2).unwrap();
        let fs = ext.alpha_factorizations().unwrap();
        assert_eq!(fs[0].len(), 2);
        assert!(fs[0].iter().all(|(g, e)| g.total_degree() == Some(1) && *e == 2));

        let sq = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let ext = base_change(&sq, 3).unwrap();
        assert_eq!(ext.alpha_factorizations().unwrap()[0], vec![(ext.x(0), 2)]);
    }

    #[test]
    fn flags_need_citations() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let mut flags = Flags::default();
        flags.f_nontrivial_line.value = true;
        assert!(matches!(pres.with_flags(flags), Err(CoreError::InvalidPresentation(_))));
    }
}
