//! Exponential maps `A -> A[U]`: the standard pair `phi1`, `phi2`, exact
//! verification of the axioms, invariance tests, localization, base change
//! and the DK/ML certificate.

use gav_algebra::MultiPoly;

use crate::error::{CoreError, Result};
use crate::variety::{self, validate_presentation, AElement, GavPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapStatus {
    Unverified,
    Verified,
    Failed(String),
}

/// A k-algebra map given by the images of `x1..xm, y, z, t` in `A[U]`.
#[derive(Clone, Debug)]
pub struct ExpMap {
    pres: GavPresentation,
    images: Vec<MultiPoly>,
    status: MapStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub passed: bool,
    pub detail: String,
    pub witness: Option<MultiPoly>,
}

impl AxiomCheck {
    fn pass(detail: impl Into<String>) -> AxiomCheck {
        AxiomCheck { passed: true, detail: detail.into(), witness: None }
    }

    fn fail(detail: impl Into<String>, witness: MultiPoly) -> AxiomCheck {
        AxiomCheck { passed: false, detail: detail.into(), witness: Some(witness) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// `phi(alpha)*phi(y) - F(phi(x), phi(z), phi(t)) = 0` in `A[U]`.
    pub well_defined: AxiomCheck,
    /// `U = 0` gives the identity.
    pub counit: AxiomCheck,
    /// `phi_V . phi_U = phi_{U+V}` on generators, in `A[U, V]`.
    pub comultiplication: AxiomCheck,
    pub nontrivial: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.well_defined.passed && self.counit.passed && self.comultiplication.passed
    }

    pub fn axioms(&self) -> [(&'static str, &AxiomCheck); 3] {
        [
            ("well-definedness", &self.well_defined),
            ("counit", &self.counit),
            ("comultiplication", &self.comultiplication),
        ]
    }
}

impl ExpMap {
    /// Images for `x1..xm, y, z, t` (in that order), polynomials in the
    /// presentation ring using at most `U` besides the generators.
    pub fn new(pres: &GavPresentation, images: Vec<MultiPoly>) -> Result<ExpMap> {
        if images.len() != pres.num_generators() {
            return Err(CoreError::InvalidMap(format!(
                "expected {} generator images, got {}",
                pres.num_generators(),
                images.len()
            )));
        }
        let mut nf = Vec::with_capacity(images.len());
        for img in &images {
            if img.ring() != pres.ring() {
                return Err(CoreError::PresentationMismatch);
            }
            if img.uses_var(pres.v_index()) {
                return Err(CoreError::InvalidMap(format!("image {img} uses V")));
            }
            nf.push(pres.normal_form(img)?);
        }
        Ok(ExpMap { pres: pres.clone(), images: nf, status: MapStatus::Unverified })
    }

    pub fn identity(pres: &GavPresentation) -> ExpMap {
        let images = (0..pres.num_generators()).map(|k| pres.ring().var(k)).collect();
        ExpMap { pres: pres.clone(), images, status: MapStatus::Unverified }
    }

    /// Images for some generators; the rest are fixed.
    pub fn from_partial(pres: &GavPresentation, images: &[(usize, MultiPoly)]) -> Result<ExpMap> {
        let mut all: Vec<MultiPoly> = (0..pres.num_generators()).map(|k| pres.ring().var(k)).collect();
        for (k, img) in images {
            if *k >= all.len() {
                return Err(CoreError::InvalidMap(format!("no generator with index {k}")));
            }
            all[*k] = img.clone();
        }
        ExpMap::new(pres, all)
    }

    pub fn presentation(&self) -> &GavPresentation {
        &self.pres
    }

    pub fn images(&self) -> &[MultiPoly] {
        &self.images
    }

    pub fn image(&self, k: usize) -> &MultiPoly {
        &self.images[k]
    }

    pub fn status(&self) -> &MapStatus {
        &self.status
    }

    pub fn is_verified(&self) -> bool {
        self.status == MapStatus::Verified
    }

    /// Some generator image depends on `U`.
    pub fn is_nontrivial(&self) -> bool {
        let u = self.pres.u_index();
        self.images.iter().any(|g| g.uses_var(u))
    }

    fn full_images(&self, images: &[MultiPoly]) -> Vec<MultiPoly> {
        let mut v = images.to_vec();
        v.push(self.pres.u());
        v.push(self.pres.v());
        v
    }

    /// `phi(p)` in `A[U]` (normal form). `U` and `V` in `p` are left alone.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let img = p.compose(&self.full_images(&self.images), self.pres.ring());
        self.pres.normal_form(&img)
    }

    /// The same map with parameter `V` instead of `U`.
    pub fn apply_v(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let (u, v) = (self.pres.u_index(), self.pres.v());
        let images_v: Vec<MultiPoly> = self.images.iter().map(|g| g.substitute(u, &v)).collect();
        let img = p.compose(&self.full_images(&images_v), self.pres.ring());
        self.pres.normal_form(&img)
    }

    /// Runs [`verify_expmap`] and records the outcome.
    pub fn verified(mut self) -> (ExpMap, VerificationReport) {
        let rep = verify_expmap(&self);
        self.status = if rep.passed() {
            MapStatus::Verified
        } else {
            let failed: Vec<&str> = rep.axioms().iter().filter(|(_, a)| !a.passed).map(|(n, _)| *n).collect();
            MapStatus::Failed(failed.join(", "))
        };
        (self, rep)
    }
}

pub fn verify_expmap(phi: &ExpMap) -> VerificationReport {
    let pres = &phi.pres;
    let ring = pres.ring();
    let u = pres.u_index();
    let gens = pres.num_generators();

    let well_defined = match phi.apply(pres.relation()) {
        Ok(w) if w.is_zero() => AxiomCheck::pass("relation maps to 0 in A[U]"),
        Ok(w) => AxiomCheck::fail("image of alpha*Y - F is nonzero in A[U]", w),
        Err(e) => AxiomCheck { passed: false, detail: e.to_string(), witness: None },
    };

    let mut counit = AxiomCheck::pass("U = 0 returns every generator");
    for k in 0..gens {
        let at0 = phi.images[k].eval_var(u, gav_algebra::Fe::ZERO);
        let diff = pres.normal_form(&(&at0 - &ring.var(k))).expect("same ring");
        if !diff.is_zero() {
            counit = AxiomCheck::fail(format!("phi({})|U=0 differs from {}", ring.vars()[k], ring.vars()[k]), diff);
            break;
        }
    }

    let mut comult = AxiomCheck::pass("phi_V(phi_U(g)) = phi_{U+V}(g) for every generator g");
    let u_plus_v = &pres.u() + &pres.v();
    for k in 0..gens {
        let lhs = phi.apply_v(&phi.images[k]).expect("same ring");
        let rhs = phi.images[k].substitute(u, &u_plus_v);
        let diff = pres.normal_form(&(&lhs - &rhs)).expect("same ring");
        if !diff.is_zero() {
            comult = AxiomCheck::fail(format!("comultiplication fails on {}", ring.vars()[k]), diff);
            break;
        }
    }

    VerificationReport { well_defined, counit, comultiplication: comult, nontrivial: phi.is_nontrivial() }
}

/// `phi(a) = a` in `A[U]`.
pub fn is_invariant(phi: &ExpMap, a: &AElement) -> Result<bool> {
    if !phi.is_verified() {
        return Err(CoreError::UnverifiedMap);
    }
    let img = phi.apply(a.representative())?;
    Ok(phi.pres.normal_form(&(&img - a.normal_form()))?.is_zero())
}

fn shift_map(pres: &GavPresentation, var: usize) -> Result<(MultiPoly, MultiPoly)> {
    let big_f = pres.big_f();
    let au = pres.alpha() * &pres.u();
    let moved = big_f.substitute(var, &(&pres.ring().var(var) + &au));
    let quotient = gav_algebra::div_exact(&(&moved - big_f), &au).ok_or_else(|| {
        CoreError::ExactDivisionFailure(format!("(F(.., {0} + alpha*U, ..) - F) / (alpha*U)", pres.ring().vars()[var]))
    })?;
    Ok((&pres.ring().var(var) + &au, &pres.y() + &(&pres.u() * &quotient)))
}

/// `z -> z + alpha*U`, `y -> y + U*v` with `v = (F(x, z + alpha*U, t) - F) / (alpha*U)`.
pub fn make_phi1(pres: &GavPresentation) -> Result<ExpMap> {
    let (z_img, y_img) = shift_map(pres, pres.z_index())?;
    ExpMap::from_partial(pres, &[(pres.z_index(), z_img), (pres.y_index(), y_img)])
}

/// `t -> t + alpha*U`, `y -> y + U*w` with `w = (F(x, z, t + alpha*U) - F) / (alpha*U)`.
pub fn make_phi2(pres: &GavPresentation) -> Result<ExpMap> {
    let (t_img, y_img) = shift_map(pres, pres.t_index())?;
    ExpMap::from_partial(pres, &[(pres.t_index(), t_img), (pres.y_index(), y_img)])
}

/// Element `num / s^pow` of `A[1/s]` (or of `A[1/s][U]`).
#[derive(Clone, Debug)]
pub struct Fraction {
    pub num: MultiPoly,
    pub pow: u32,
}

/// `phi` extended to `A[1/s]` by `phi(a / s^n) = phi(a) / s^n`, valid since
/// `s` is invariant.
#[derive(Clone, Debug)]
pub struct LocalizedExpMap {
    base: ExpMap,
    s: AElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedReport {
    pub base: VerificationReport,
    pub denominator_invariant: AxiomCheck,
    /// Counit and comultiplication on the fractions `g / s`.
    pub fractions: AxiomCheck,
}

impl LocalizedReport {
    pub fn passed(&self) -> bool {
        self.base.passed() && self.denominator_invariant.passed && self.fractions.passed
    }
}

pub fn extend_to_localization(phi: &ExpMap, s: &AElement) -> Result<LocalizedExpMap> {
    if s.is_zero() {
        return Err(CoreError::Precondition("cannot invert 0".into()));
    }
    if !is_invariant(phi, s)? {
        return Err(CoreError::NonInvariantDenominator(s.to_string()));
    }
    Ok(LocalizedExpMap { base: phi.clone(), s: s.clone() })
}

impl LocalizedExpMap {
    pub fn base(&self) -> &ExpMap {
        &self.base
    }

    pub fn denominator(&self) -> &AElement {
        &self.s
    }

    pub fn apply(&self, a: &Fraction) -> Result<Fraction> {
        Ok(Fraction { num: self.base.apply(&a.num)?, pow: a.pow })
    }

    /// `a/s^n = b/s^k` iff `a*s^k = b*s^n` (A is a domain).
    pub fn fraction_eq(&self, a: &Fraction, b: &Fraction) -> Result<bool> {
        let s = self.s.normal_form();
        let lhs = &a.num * &s.pow(b.pow);
        let rhs = &b.num * &s.pow(a.pow);
        Ok(self.base.pres.normal_form(&(&lhs - &rhs))?.is_zero())
    }

    pub fn verify(&self) -> Result<LocalizedReport> {
        let pres = &self.base.pres;
        let base = verify_expmap(&self.base);
        let s_img = self.base.apply(self.s.representative())?;
        let ds = pres.normal_form(&(&s_img - self.s.normal_form()))?;
        let denominator_invariant = if ds.is_zero() {
            AxiomCheck::pass("phi(s) = s")
        } else {
            AxiomCheck::fail("phi(s) differs from s", ds)
        };
        let u = pres.u_index();
        let u_plus_v = &pres.u() + &pres.v();
        let mut fractions = AxiomCheck::pass("counit and comultiplication hold on g/s for every generator g");
        for k in 0..=pres.num_generators() {
            // k = num_generators stands for 1/s itself.
            let num = if k < pres.num_generators() { pres.ring().var(k) } else { pres.ring().one() };
            let a = Fraction { num, pow: 1 };
            let img = self.apply(&a)?;
            let at0 = Fraction { num: img.num.eval_var(u, gav_algebra::Fe::ZERO), pow: img.pow };
            if !self.fraction_eq(&at0, &a)? {
                fractions = AxiomCheck::fail("counit fails on a fraction", at0.num);
                break;
            }
            let lhs = Fraction { num: self.base.apply_v(&img.num)?, pow: img.pow };
            let rhs = Fraction { num: img.num.substitute(u, &u_plus_v), pow: img.pow };
            if !self.fraction_eq(&lhs, &rhs)? {
                fractions = AxiomCheck::fail("comultiplication fails on a fraction", &lhs.num - &rhs.num);
                break;
            }
        }
        Ok(LocalizedReport { base, denominator_invariant, fractions })
    }
}

/// `phi (x) id` on the base change of degree `d`.
pub fn base_change_map(phi: &ExpMap, d: u32) -> Result<ExpMap> {
    let target = variety::base_change(&phi.pres, d)?;
    if d == 1 {
        return Ok(phi.clone());
    }
    let emb = phi.pres.field().embedding_into(target.field())?;
    let images = phi
        .images
        .iter()
        .map(|g| g.map_into(target.ring(), Some(&emb)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    ExpMap::new(&target, images)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Computed,
    TrustedFlag,
    /// Follows from earlier entries by a cited result.
    Derived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::TrustedFlag => "trusted-flag",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisEntry {
    pub condition: String,
    pub holds: bool,
    pub provenance: Provenance,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// The listed generators generate the invariant exactly.
    Equal,
    /// The invariant contains the subalgebra generated by the list.
    LowerBound,
}

#[derive(Clone, Debug)]
pub struct InvariantCertificate {
    pub dk_kind: BoundKind,
    pub dk_generators: Vec<AElement>,
    /// Present only when certified.
    pub ml_generators: Option<Vec<AElement>>,
    pub hypothesis_log: Vec<HypothesisEntry>,
    /// `(map name, verification)` for the witnesses of the lower bound.
    pub witnesses: Vec<(String, VerificationReport)>,
    /// `(statement, holds)` such as `x1 is phi1-invariant`.
    pub invariance_checks: Vec<(String, bool)>,
}

impl InvariantCertificate {
    pub fn certified(&self) -> bool {
        self.dk_kind == BoundKind::Equal
    }
}

pub fn certify_dk_ml(pres: &GavPresentation) -> Result<InvariantCertificate> {
    let factorizations = pres.alpha_factorizations()?;
    let m = pres.m();
    let vars = pres.ring().vars().to_vec();
    let mut log = Vec::new();

    let validation = validate_presentation(pres);
    let failed: Vec<String> = validation.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    log.push(HypothesisEntry {
        condition: "presentation satisfies the standing hypotheses".into(),
        holds: failed.is_empty(),
        provenance: Provenance::Computed,
        detail: if failed.is_empty() { "all checks pass".into() } else { format!("failed: {}", failed.join("; ")) },
    });

    let f_only = pres.big_f().vars_used().iter().all(|&v| v == m + 1 || v == m + 2);
    let shape_ok = f_only || (pres.f_part().is_some() && validation.check("(d)").is_some_and(|c| c.passed));
    log.push(HypothesisEntry {
        condition: "F = f(Z,T) + rad(alpha)*h".into(),
        holds: shape_ok,
        provenance: Provenance::Computed,
        detail: if f_only {
            "F involves only Z and T".into()
        } else if shape_ok {
            "shape witnessed by the given f and h".into()
        } else {
            "no valid f, h decomposition given".into()
        },
    });

    let simple: Vec<String> = factorizations
        .iter()
        .enumerate()
        .filter(|(_, fs)| fs.iter().any(|(_, e)| *e == 1))
        .map(|(i, _)| format!("a_{}", i + 1))
        .collect();
    log.push(HypothesisEntry {
        condition: "H1: every a_i has only multiple roots in the algebraic closure".into(),
        holds: simple.is_empty(),
        provenance: Provenance::Computed,
        detail: if simple.is_empty() {
            "no squarefree part with exponent 1".into()
        } else {
            format!("simple roots in {}", simple.join(", "))
        },
    });

    let flags = pres.flags();
    let (h2, h2_detail) = if flags.f_not_linear_any_coords.value {
        (true, format!("flag f_not_linear_any_coords [{}]", flags.f_not_linear_any_coords.cite.clone().unwrap_or_default()))
    } else if flags.f_nontrivial_line.value {
        (
            true,
            format!(
                "inferred from flag f_nontrivial_line [{}]: a non-trivial line is not linear in any coordinates",
                flags.f_nontrivial_line.cite.clone().unwrap_or_default()
            ),
        )
    } else {
        (false, "no trusted flag asserts that f is not linear in any coordinates".into())
    };
    log.push(HypothesisEntry {
        condition: "H2: f is not linear with respect to any coordinate system".into(),
        holds: h2,
        provenance: Provenance::TrustedFlag,
        detail: h2_detail,
    });

    let (phi1, rep1) = make_phi1(pres)?.verified();
    let (phi2, rep2) = make_phi2(pres)?.verified();
    let mut checks = Vec::new();
    let mut lower_ok = rep1.passed() && rep2.passed();
    if lower_ok {
        for (name, phi, fixed) in [("phi1", &phi1, pres.t_index()), ("phi2", &phi2, pres.z_index())] {
            for k in (0..m).chain([fixed]) {
                let holds = is_invariant(phi, &pres.element(&pres.ring().var(k))?)?;
                lower_ok &= holds;
                checks.push((format!("{} is {name}-invariant", vars[k].to_lowercase()), holds));
            }
        }
    }
    if !lower_ok {
        return Err(CoreError::Precondition("the maps phi1, phi2 failed verification".into()));
    }

    let dk_generators: Vec<AElement> =
        pres.b_indices().iter().map(|&k| pres.element(&pres.ring().var(k))).collect::<Result<_>>()?;
    let certified = log.iter().all(|h| h.holds);
    let ml_generators = if certified {
        Some((0..m).map(|k| pres.element(&pres.ring().var(k))).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    Ok(InvariantCertificate {
        dk_kind: if certified { BoundKind::Equal } else { BoundKind::LowerBound },
        dk_generators,
        ml_generators,
        hypothesis_log: log,
        witnesses: vec![("phi1".into(), rep1), ("phi2".into(), rep2)],
        invariance_checks: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gav_algebra::Field;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn phi1_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let phi = make_phi1(&pres).unwrap();
        assert_eq!(phi.image(1), &pres.parse("Y + U*(2*Z + X1^2*U)").unwrap());
        let lin = GavPresentation::from_factors(&f5(), &["X1"], "Z").unwrap();
        assert_eq!(make_phi1(&lin).unwrap().image(1), &lin.parse("Y + U").unwrap());
        let tz = GavPresentation::from_factors(&f5(), &["X1^2"], "T^3").unwrap();
        let phi = make_phi1(&tz).unwrap();
        assert_eq!(phi.image(1), &tz.y());
        assert_eq!(phi.image(2), &tz.parse("Z + X1^2*U").unwrap());
    }

    #[test]
    fn phi2_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2 + T^3").unwrap();
        let phi = make_phi2(&pres).unwrap();
        assert_eq!(phi.image(1), &pres.parse("Y + U*(3*T^2 + 3*T*X1^2*U + X1^4*U^2)").unwrap());
        let lin = GavPresentation::from_factors(&f5(), &["X1"], "Z").unwrap();
        let phi = make_phi2(&lin).unwrap();
        assert_eq!(phi.image(1), &lin.y());
        assert_eq!(phi.image(2), &lin.z());
    }

    #[test]
    fn verification_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let (_, rep) = make_phi1(&pres).unwrap().verified();
        assert!(rep.passed() && rep.nontrivial);

        let bad = ExpMap::from_partial(&pres, &[(2, pres.parse("Z + U").unwrap())]).unwrap();
        let rep = verify_expmap(&bad);
        assert!(!rep.well_defined.passed);
        assert_eq!(rep.well_defined.witness, Some(pres.parse("-2*Z*U - U^2").unwrap()));

        let (id, rep) = ExpMap::identity(&pres).verified();
        assert!(rep.passed() && !rep.nontrivial && id.is_verified());
    }

    #[test]
    fn invariance_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2 + T^3").unwrap();
        let phi = make_phi1(&pres).unwrap();
        let t = pres.element_str("T").unwrap();
        assert_eq!(is_invariant(&phi, &t), Err(CoreError::UnverifiedMap));
        let (phi, _) = phi.verified();
        assert!(is_invariant(&phi, &t).unwrap());
        assert!(!is_invariant(&phi, &pres.element_str("Z").unwrap()).unwrap());
        assert!(is_invariant(&phi, &pres.element_str("X1*T + 7").unwrap()).unwrap());
    }

    #[test]
    fn localization_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2 + T^3").unwrap();
        let (phi, _) = make_phi1(&pres).unwrap().verified();
        let loc = extend_to_localization(&phi, &pres.element_str("X1").unwrap()).unwrap();
        assert!(loc.verify().unwrap().passed());
        assert!(matches!(
            extend_to_localization(&phi, &pres.element_str("Z").unwrap()),
            Err(CoreError::NonInvariantDenominator(_))
        ));
        let (id, _) = ExpMap::identity(&pres).verified();
        let loc = extend_to_localization(&id, &pres.element_str("Z").unwrap()).unwrap();
        let rep = loc.verify().unwrap();
        assert!(rep.passed() && !rep.base.nontrivial);
    }

    #[test]
    fn dk_ml_certificates() {
        let line = crate::variety::Flag::trusted("test citation");
        let mut flags = crate::variety::Flags::default();
        flags.f_nontrivial_line = line;
        let good = GavPresentation::from_factors(&f5(), &["(X1^2-X1)^2"], "Z^25 + T + T^10")
            .unwrap()
            .with_flags(flags.clone())
            .unwrap();
        let cert = certify_dk_ml(&good).unwrap();
        assert!(cert.certified());
        assert_eq!(cert.ml_generators.as_ref().unwrap().len(), 1);

        let simple = GavPresentation::from_factors(&f5(), &["X1"], "Z^25 + T + T^10").unwrap().with_flags(flags).unwrap();
        let cert = certify_dk_ml(&simple).unwrap();
        assert_eq!(cert.dk_kind, BoundKind::LowerBound);
        assert!(cert.ml_generators.is_none());

        let linear = GavPresentation::from_factors(&f5(), &["X1^2"], "Z").unwrap();
        assert_eq!(certify_dk_ml(&linear).unwrap().dk_kind, BoundKind::LowerBound);
    }
}
