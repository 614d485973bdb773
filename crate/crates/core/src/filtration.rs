//! Degree functions at a root of some `a_i`, filtration degrees, the top
//! component map `rho`, the associated graded presentation and
//! homogenization of exponential maps.
//!
//! All computations happen in the shifted presentation, where the variable
//! `X_i` stands for `x_i - lambda`. Polynomials written in the original
//! coordinates are moved there with [`FiltrationContext::to_working`].

use std::cmp::Ordering;

use gav_algebra::{div_exact, factor_univariate, Fe, MultiPoly};
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};
use crate::expmap::{is_invariant, verify_expmap, ExpMap, VerificationReport};
use crate::sampling::{random_poly, sample_check, PropertyReport};
use crate::variety::{shift_coordinate, AElement, AlphaSpec, GavPresentation, PresentationData, Shifted};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift {
    pub var: usize,
    pub lambda: Fe,
    pub r: u32,
}

/// Integer weights on the ring variables `X1..Xm, Y, Z, T, U, V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeFunction {
    weights: Vec<i64>,
    shift: Option<Shift>,
}

impl DegreeFunction {
    /// `w(x_i - lambda) = -1`, `w(y) = r`, all other generators weight 0.
    pub fn at_root(m: usize, var: usize, lambda: Fe, r: u32) -> DegreeFunction {
        let mut weights = vec![0i64; m + 5];
        weights[var] = -1;
        weights[m] = r as i64;
        DegreeFunction { weights, shift: Some(Shift { var, lambda, r }) }
    }

    /// Arbitrary weights; admissibility is not checked.
    pub fn unchecked(weights: Vec<i64>) -> DegreeFunction {
        DegreeFunction { weights, shift: None }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn shift(&self) -> Option<&Shift> {
        self.shift.as_ref()
    }
}

/// `alpha_gr * Y - F_gr` with `alpha_gr = alpha'(X_i = 0) * X_i^r` and
/// `F_gr = F(X_i = 0)`, homogeneous under `weights`.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub pres: GavPresentation,
    pub weights: Vec<i64>,
}

impl GradedPresentation {
    pub fn relation(&self) -> &MultiPoly {
        self.pres.relation()
    }

    pub fn is_homogeneous(&self) -> bool {
        let w = &self.weights;
        let mut ws = self.relation().terms().map(|(m, _)| MultiPoly::monomial_weight(m, w));
        match ws.next() {
            None => true,
            Some(first) => ws.all(|x| x == first),
        }
    }
}

/// Builds the associated graded presentation, checking that `F(X_i = 0)` is
/// nonzero and coprime to `alpha'(X_i = 0)` over `k[other X][Z, T]`.
pub fn gr_presentation(shifted: &Shifted) -> Result<GradedPresentation> {
    let pres = &shifted.pres;
    let i = shifted.var;
    let m = pres.m();
    let a = pres.alpha_factored().ok_or(CoreError::AlphaNotFactored)?;
    let f0 = pres.big_f().eval_var(i, Fe::ZERO);
    if f0.is_zero() {
        return Err(CoreError::GcdConditionFails { witness: format!("F(X{} = 0) = 0", i + 1) });
    }
    for (j, aj) in a.iter().enumerate() {
        if j == i {
            continue;
        }
        for (g, _) in factor_univariate(aj, 0)? {
            if div_exact(&f0, &g).is_some() {
                return Err(CoreError::GcdConditionFails { witness: g.to_string() });
            }
        }
    }
    let xi = pres.ring().var(i);
    let ai_rest = div_exact(&a[i], &xi.pow(shifted.r))
        .ok_or_else(|| CoreError::ExactDivisionFailure("a_i / X_i^r".into()))?;
    let c = ai_rest.eval_var(i, Fe::ZERO);
    let mut factors = a.to_vec();
    factors[i] = &c * &xi.pow(shifted.r);
    let zt_only = f0.vars_used().iter().all(|&v| v == m + 1 || v == m + 2);
    let gr = GavPresentation::new(PresentationData {
        field: pres.field().clone(),
        m,
        alpha: AlphaSpec::Factored(factors),
        big_f: f0.clone(),
        f_part: zt_only.then_some(f0),
        h_part: None,
        flags: pres.flags().clone(),
    })?;
    let omega = DegreeFunction::at_root(m, i, shifted.lambda, shifted.r);
    Ok(GradedPresentation { pres: gr, weights: omega.weights })
}

/// Everything needed to evaluate the filtration of one degree function.
#[derive(Clone, Debug)]
pub struct FiltrationContext {
    original: GavPresentation,
    working: GavPresentation,
    omega: DegreeFunction,
    graded: Option<GradedPresentation>,
}

/// Filtration data of one element: its degree, a representative whose terms
/// all have weight at most the degree, and the top part of that
/// representative.
#[derive(Clone, Debug)]
pub struct TopForm {
    pub degree: i64,
    pub representative: MultiPoly,
    pub top: MultiPoly,
}

const MAX_TOP_REDUCTIONS: usize = 10_000;

impl FiltrationContext {
    /// Degree function at the root `lambda` of `a_i` (0-based `i`).
    pub fn at_root(pres: &GavPresentation, i: usize, lambda: Fe) -> Result<FiltrationContext> {
        let shifted = shift_coordinate(pres, i, lambda)?;
        let graded = gr_presentation(&shifted)?;
        let omega = DegreeFunction::at_root(pres.m(), i, lambda, shifted.r);
        Ok(FiltrationContext { original: pres.clone(), working: shifted.pres, omega, graded: Some(graded) })
    }

    /// Arbitrary weights on the unshifted presentation. Degrees are the
    /// weighted degree of the normal form; there is no graded presentation.
    pub fn with_unchecked_weights(pres: &GavPresentation, weights: Vec<i64>) -> Result<FiltrationContext> {
        let mut w = weights;
        if w.len() != pres.num_generators() && w.len() != pres.ring().nvars() {
            return Err(CoreError::Precondition(format!(
                "expected {} weights, got {}",
                pres.num_generators(),
                w.len()
            )));
        }
        w.resize(pres.ring().nvars(), 0);
        Ok(FiltrationContext {
            original: pres.clone(),
            working: pres.clone(),
            omega: DegreeFunction::unchecked(w),
            graded: None,
        })
    }

    pub fn original(&self) -> &GavPresentation {
        &self.original
    }

    /// The presentation in shifted coordinates.
    pub fn working(&self) -> &GavPresentation {
        &self.working
    }

    pub fn omega(&self) -> &DegreeFunction {
        &self.omega
    }

    pub fn graded(&self) -> Result<&GradedPresentation> {
        self.graded.as_ref().ok_or(CoreError::NotShifted)
    }

    /// Rewrites a polynomial in the original coordinates in terms of the
    /// shifted generator.
    pub fn to_working(&self, p: &MultiPoly) -> MultiPoly {
        match &self.omega.shift {
            Some(s) => p.translate_var(s.var, s.lambda),
            None => p.clone(),
        }
    }

    /// Element of the working presentation (argument in shifted coordinates).
    pub fn element(&self, p: &MultiPoly) -> Result<AElement> {
        self.working.element(p)
    }

    pub fn weights(&self) -> &[i64] {
        &self.omega.weights
    }

    /// Reduces the top part modulo the graded relation until it survives.
    pub fn top_form(&self, a: &AElement) -> Result<TopForm> {
        if a.is_zero() {
            return Err(CoreError::ZeroElement);
        }
        let w = self.weights();
        let mut p = a.normal_form().clone();
        let Some(gr) = &self.graded else {
            let (degree, top) = p.weighted_top(w).unwrap();
            return Ok(TopForm { degree, representative: p, top });
        };
        let g = self.working.relation();
        let g0 = gr.relation();
        for _ in 0..MAX_TOP_REDUCTIONS {
            let (degree, top) = p.weighted_top(w).ok_or(CoreError::ZeroElement)?;
            match div_exact(&top, g0) {
                Some(q) => p = &p - &(&q * g),
                None => return Ok(TopForm { degree, representative: p, top }),
            }
        }
        Err(CoreError::Precondition("top-part reduction did not terminate".into()))
    }

    pub fn omega_value(&self, a: &AElement) -> Result<i64> {
        Ok(self.top_form(a)?.degree)
    }

    /// Top component in the graded presentation (normal form there).
    pub fn rho(&self, a: &AElement) -> Result<MultiPoly> {
        let top = self.top_form(a)?.top;
        match &self.graded {
            Some(gr) => gr.pres.normal_form(&top),
            None => Ok(top),
        }
    }

    /// Expresses `a` (with `omega(a) <= 0`) as a polynomial in
    /// `x_1, .., x_m, (x_i - lambda)^r * y, z, t`, the last-but-two written
    /// as a new variable `W`. Returns `None` if some term cannot be matched.
    pub fn subring_rewrite(&self, a: &AElement) -> Result<Option<MultiPoly>> {
        let shift = self.omega.shift.as_ref().ok_or(CoreError::NotShifted)?;
        let tf = self.top_form(a)?;
        let ring = self.working.ring();
        let wring = ring.extended(&["W"]);
        let y = self.working.y_index();
        let mut terms = Vec::new();
        for (mono, c) in tf.representative.terms() {
            let b = mono.exp(y);
            let need = b * shift.r;
            if mono.exp(shift.var) < need {
                return Ok(None);
            }
            let mut e: Vec<u32> = mono.exponents().to_vec();
            e[shift.var] -= need;
            e[y] = 0;
            e.push(b);
            terms.push((gav_algebra::Monomial::from_exponents(e), c));
        }
        Ok(Some(MultiPoly::from_terms(&wring, terms)))
    }

    /// Substitutes `W = X_i^r * Y` back into a rewritten polynomial.
    pub fn expand_subring(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let shift = self.omega.shift.as_ref().ok_or(CoreError::NotShifted)?;
        let ring = self.working.ring();
        let mut images: Vec<MultiPoly> = (0..ring.nvars()).map(|k| ring.var(k)).collect();
        images.push(&ring.var(shift.var).pow(shift.r) * &self.working.y());
        Ok(p.compose(&images, ring))
    }

    /// Random nonzero element of the working presentation.
    pub fn random_element(&self, rng: &mut ChaCha8Rng, max_terms: usize, max_deg: u32) -> Result<AElement> {
        let vars: Vec<usize> = (0..self.working.num_generators()).collect();
        loop {
            let p = random_poly(self.working.ring(), &vars, max_terms, max_deg, rng);
            let e = self.element(&p)?;
            if !e.is_zero() {
                return Ok(e);
            }
        }
    }
}

/// `omega(ab) = omega(a) + omega(b)` on random pairs.
pub fn check_proper_filtration(ctx: &FiltrationContext, samples: usize, seed: u64) -> PropertyReport {
    sample_check("omega(ab) = omega(a) + omega(b)", samples, seed, |rng| {
        let a = ctx.random_element(rng, 4, 3)?;
        let b = ctx.random_element(rng, 4, 3)?;
        let ab = ctx.element(&(a.normal_form() * b.normal_form()))?;
        let (wa, wb, wab) = (ctx.omega_value(&a)?, ctx.omega_value(&b)?, ctx.omega_value(&ab)?);
        Ok((wa + wb != wab).then(|| format!("a = {a}, b = {b}: {wa} + {wb} != {wab}")))
    })
}

/// `rho(a) * rho(b) = rho(ab)` in the graded presentation.
pub fn check_rho_multiplicative(ctx: &FiltrationContext, samples: usize, seed: u64) -> Result<PropertyReport> {
    let gr = ctx.graded()?;
    Ok(sample_check("rho(a) rho(b) = rho(ab)", samples, seed, |rng| {
        let a = ctx.random_element(rng, 4, 3)?;
        let b = ctx.random_element(rng, 4, 3)?;
        let ab = ctx.element(&(a.normal_form() * b.normal_form()))?;
        let diff = gr.pres.normal_form(&(&(&ctx.rho(&a)? * &ctx.rho(&b)?) - &ctx.rho(&ab)?))?;
        Ok((!diff.is_zero()).then(|| format!("a = {a}, b = {b}: discrepancy {diff}")))
    }))
}

/// Elements of degree at most 0 lie in `k[x, (x_i - lambda)^r y, z, t]`.
/// Samples are drawn until one of degree at most 0 appears.
pub fn check_nonpositive_subring(ctx: &FiltrationContext, samples: usize, seed: u64) -> Result<PropertyReport> {
    ctx.graded()?;
    Ok(sample_check("omega(b) <= 0 implies b in k[x, (x_i - lambda)^r y, z, t]", samples, seed, |rng| {
        let b = loop {
            let b = ctx.random_element(rng, 4, 3)?;
            if ctx.omega_value(&b)? <= 0 {
                break b;
            }
        };
        match ctx.subring_rewrite(&b)? {
            None => Ok(Some(format!("b = {b}: representative has a term outside the subring"))),
            Some(w) => {
                let back = ctx.element(&ctx.expand_subring(&w)?)?;
                Ok((back != b).then(|| format!("b = {b}: rewrite {w} does not expand back")))
            }
        }
    }))
}

/// Elements of positive degree have top component divisible by `y`.
pub fn check_positive_divisible_by_y(ctx: &FiltrationContext, samples: usize, seed: u64) -> Result<PropertyReport> {
    ctx.graded()?;
    let y = ctx.working().y();
    Ok(sample_check("omega(b) > 0 implies y | rho(b)", samples, seed, |rng| {
        let b = loop {
            let mut b = ctx.random_element(rng, 4, 3)?;
            if ctx.omega_value(&b)? <= 0 {
                // Multiply by y to push the degree up.
                b = ctx.element(&(b.normal_form() * &y))?;
            }
            if ctx.omega_value(&b)? > 0 {
                break b;
            }
        };
        let rho = ctx.rho(&b)?;
        Ok(div_exact(&rho, &y).is_none().then(|| format!("b = {b}: rho(b) = {rho} not divisible by Y")))
    }))
}

/// Exact rational `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Ratio {
        assert!(den != 0);
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num.unsigned_abs(), den as u64).max(1) as i64;
        Ratio { num: num / g, den: den / g }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug)]
pub struct InducedReport {
    /// Weight of `U` in units of the original weights.
    pub w_u: Ratio,
    /// Integer weights on `X1..Xm, Y, Z, T, U, V` after scaling by `w_u.den`.
    pub scaled_weights: Vec<i64>,
    pub homogeneous: bool,
    pub verification: VerificationReport,
    pub invariant_samples: PropertyReport,
}

/// The map in shifted coordinates: `x_i - lambda` plays the role of `X_i`.
pub fn working_map(phi: &ExpMap, ctx: &FiltrationContext) -> Result<ExpMap> {
    if phi.presentation() != ctx.original() {
        return Err(CoreError::PresentationMismatch);
    }
    let mut images: Vec<MultiPoly> = phi.images().iter().map(|g| ctx.to_working(g)).collect();
    if let Some(s) = &ctx.omega.shift {
        let lam = ctx.working.ring().constant(s.lambda);
        images[s.var] = &images[s.var] - &lam;
    }
    let (w, _) = ExpMap::new(&ctx.working, images)?.verified();
    Ok(w)
}

/// Homogenizes a verified non-trivial exponential map: `U` gets the largest
/// weight keeping every image of degree at most that of its generator, and
/// each generator's top component maps to the part of its image attaining
/// that bound.
pub fn induce_graded_expmap(
    phi: &ExpMap,
    ctx: &FiltrationContext,
    samples: usize,
    seed: u64,
) -> Result<(ExpMap, InducedReport)> {
    if !phi.is_verified() {
        return Err(CoreError::UnverifiedMap);
    }
    if !phi.is_nontrivial() {
        return Err(CoreError::Precondition("the exponential map is trivial".into()));
    }
    let gr = ctx.graded()?;
    let psi = working_map(phi, ctx)?;
    if !psi.is_verified() {
        return Err(CoreError::Precondition("the map fails verification in shifted coordinates".into()));
    }
    let pres = ctx.working();
    let u = pres.u_index();
    let weights = ctx.weights();

    // coefficient data per generator: (j, omega(c_j), c_j)
    let mut coeffs: Vec<Vec<(u32, i64, MultiPoly)>> = Vec::new();
    let mut w_u: Option<Ratio> = None;
    for k in 0..pres.num_generators() {
        let wg = weights[k];
        let mut list = Vec::new();
        for (j, c) in psi.image(k).coefficients_in(u) {
            let e = ctx.element(&c)?;
            if e.is_zero() {
                continue;
            }
            let wc = ctx.omega_value(&e)?;
            if j >= 1 {
                let cand = Ratio::new(wg - wc, j as i64);
                w_u = Some(w_u.map_or(cand, |cur| cur.min(cand)));
            }
            list.push((j, wc, e.normal_form().clone()));
        }
        coeffs.push(list);
    }
    let w_u = w_u.ok_or_else(|| CoreError::Precondition("no image depends on U".into()))?;

    let mut scaled: Vec<i64> = weights.iter().map(|w| w * w_u.den).collect();
    scaled[u] = w_u.num;
    let mut images = Vec::new();
    for (k, list) in coeffs.iter().enumerate() {
        let target = weights[k] * w_u.den;
        let mut img = gr.pres.ring().zero();
        for (j, wc, c) in list {
            if wc * w_u.den + *j as i64 * w_u.num == target {
                let rho_c = ctx.rho(&ctx.element(c)?)?;
                img = &img + &(&rho_c * &pres.u().pow(*j));
            }
        }
        images.push(img);
    }
    let homogeneous = images.iter().enumerate().all(|(k, img)| {
        img.terms().all(|(mono, _)| MultiPoly::monomial_weight(mono, &scaled) == weights[k] * w_u.den)
    });
    let bar = ExpMap::new(&gr.pres, images)?;
    let verification = verify_expmap(&bar);
    for (name, ax) in verification.axioms() {
        if !ax.passed {
            return Err(CoreError::HomogenizationFailed {
                axiom: name.to_string(),
                witness: ax.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
            });
        }
    }
    if !verification.nontrivial {
        return Err(CoreError::HomogenizationFailed { axiom: "non-triviality".into(), witness: String::new() });
    }
    let (bar, _) = bar.verified();

    // rho maps invariants to invariants. Invariants are sampled as random
    // polynomials in the generators fixed by the map.
    let fixed: Vec<usize> = (0..pres.num_generators()).filter(|&k| psi.image(k) == &pres.ring().var(k)).collect();
    let invariant_samples = sample_check("rho(invariant) is invariant under the induced map", samples, seed, |rng| {
        if fixed.is_empty() {
            return Ok(Some("no fixed generators to build invariants from".into()));
        }
        let a = loop {
            let p = random_poly(pres.ring(), &fixed, 4, 3, rng);
            let a = ctx.element(&p)?;
            if !a.is_zero() {
                break a;
            }
        };
        if !is_invariant(&psi, &a)? {
            return Ok(Some(format!("{a} is not invariant")));
        }
        let r = ctx.rho(&a)?;
        let moved = gr.pres.normal_form(&(&bar.apply(&r)? - &r))?;
        Ok((!moved.is_zero()).then(|| format!("rho({a}) = {r} moves by {moved}")))
    });

    Ok((
        bar,
        InducedReport { w_u, scaled_weights: scaled, homogeneous, verification, invariant_samples },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expmap::{make_phi1, make_phi2};
    use gav_algebra::Field;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn omega_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let ctx = FiltrationContext::at_root(&pres, 0, Fe::ZERO).unwrap();
        let e = |s: &str| ctx.element(&pres.parse(s).unwrap()).unwrap();
        assert_eq!(ctx.omega_value(&e("Y")).unwrap(), 2);
        assert_eq!(ctx.omega_value(&e("X1^2*Y")).unwrap(), 0);
        assert_eq!(ctx.omega_value(&e("X1^3")).unwrap(), -3);
        assert_eq!(ctx.omega_value(&e("0")), Err(CoreError::ZeroElement));
    }

    #[test]
    fn omega_with_nonmonic_cofactor() {
        // alpha = X1^2 (X1 + 1): the normal form alone would give weight 1
        // for X1^2*(X1+1)*Y - X1^3*Y, but the element equals Z^2 + T^3 minus
        // X1^3*Y, whose degree is 0.
        let pres = GavPresentation::from_factors(&f5(), &["X1^2*(X1+1)"], "Z^2 + T^3").unwrap();
        let ctx = FiltrationContext::at_root(&pres, 0, Fe::ZERO).unwrap();
        let a = ctx.element(&pres.parse("X1^2*Y").unwrap()).unwrap();
        assert_eq!(ctx.omega_value(&a).unwrap(), 0);
        assert_eq!(ctx.rho(&a).unwrap(), pres.parse("Z^2 + T^3").unwrap());
    }

    #[test]
    fn rho_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let ctx = FiltrationContext::at_root(&pres, 0, Fe::ZERO).unwrap();
        let e = |s: &str| ctx.element(&pres.parse(s).unwrap()).unwrap();
        assert_eq!(ctx.rho(&e("Y + X1")).unwrap(), pres.y());
        assert_eq!(ctx.rho(&e("Z + T")).unwrap(), pres.parse("Z + T").unwrap());

        let p2 = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2 + X1*T").unwrap();
        let ctx2 = FiltrationContext::at_root(&p2, 0, Fe::ZERO).unwrap();
        let a = ctx2.element(&p2.parse("X1^2*Y + T").unwrap()).unwrap();
        assert_eq!(ctx2.rho(&a).unwrap(), p2.parse("Z^2 + T").unwrap());
    }

    #[test]
    fn gr_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2*(X1+1)"], "Z^2 + T^3").unwrap();
        let gr = gr_presentation(&shift_coordinate(&pres, 0, Fe::ZERO).unwrap()).unwrap();
        assert_eq!(gr.relation(), &pres.parse("X1^2*Y - Z^2 - T^3").unwrap());
        assert!(gr.is_homogeneous());

        let p2 = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2 + X1*T").unwrap();
        let gr = gr_presentation(&shift_coordinate(&p2, 0, Fe::ZERO).unwrap()).unwrap();
        assert_eq!(gr.relation(), &p2.parse("X1^2*Y - Z^2").unwrap());

        let p3 = GavPresentation::from_factors(&f5(), &["X1^2"], "X1*Z").unwrap();
        assert!(matches!(
            gr_presentation(&shift_coordinate(&p3, 0, Fe::ZERO).unwrap()),
            Err(CoreError::GcdConditionFails { .. })
        ));
    }

    #[test]
    fn proper_filtration_small() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let ctx = FiltrationContext::at_root(&pres, 0, Fe::ZERO).unwrap();
        assert!(check_proper_filtration(&ctx, 100, 0).passed());
        let e = |s: &str| ctx.element(&pres.parse(s).unwrap()).unwrap();
        assert_eq!(ctx.omega_value(&e("X1^2")).unwrap() + ctx.omega_value(&e("Y")).unwrap(), 0);
    }

    #[test]
    fn dhm_examples() {
        let pres = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2").unwrap();
        let ctx = FiltrationContext::at_root(&pres, 0, Fe::ZERO).unwrap();
        let (phi, _) = make_phi1(&pres).unwrap().verified();
        let (bar, rep) = induce_graded_expmap(&phi, &ctx, 20, 0).unwrap();
        assert_eq!(rep.w_u, Ratio::new(2, 1));
        assert_eq!(bar.image(2), &pres.parse("Z + X1^2*U").unwrap());
        assert!(rep.invariant_samples.passed() && rep.homogeneous);

        let (id, _) = ExpMap::identity(&pres).verified();
        assert!(matches!(induce_graded_expmap(&id, &ctx, 1, 0), Err(CoreError::Precondition(_))));

        let p2 = GavPresentation::from_factors(&f5(), &["X1^2"], "Z^2 + T^3").unwrap();
        let ctx2 = FiltrationContext::at_root(&p2, 0, Fe::ZERO).unwrap();
        let (phi2, _) = make_phi2(&p2).unwrap().verified();
        let (_, rep) = induce_graded_expmap(&phi2, &ctx2, 20, 0).unwrap();
        assert!(rep.verification.passed());
    }
}
