//! Isomorphism discriminants, non-isomorphism certificates, the
//! non-rectangularity chain, the family of cancellation counterexamples and
//! completion of automorphisms.

use gav_algebra::{
    elimination_order, factor_univariate, ideal_equal, squarefree_decomposition, Fe, Field, IdealHandle, Monomial,
    MultiPoly, PolyRing,
};
use rayon::prelude::*;

use crate::citations::{self, Citation};
use crate::error::{CoreError, Result};
use crate::expmap::Provenance;
use crate::lines::{verify_line_witness, LineEntry};
use crate::variety::{ambient_vars, validate_presentation, AlphaSpec, Flag, Flags, GavPresentation, PresentationData};

/// Sorted `(multiplicity, number of roots in the algebraic closure)` pairs.
pub type Profile = Vec<(u32, usize)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoDiscriminant {
    pub field: String,
    pub m: usize,
    /// Profile of `a_i`, indexed by `i`.
    pub profiles: Vec<Profile>,
    /// Every root of every `a_i` is multiple (computed).
    pub all_multiple: bool,
    /// `f` is not linear in any coordinates (trusted flag, possibly
    /// inferred from the non-trivial-line flag).
    pub f_not_linear: bool,
    /// `F = f(Z,T) + rad(alpha) h` (computed).
    pub h_divisible: bool,
}

impl IsoDiscriminant {
    /// Profiles as a sorted multiset.
    pub fn multiset(&self) -> Vec<Profile> {
        let mut v = self.profiles.clone();
        v.sort();
        v
    }

    pub fn total_roots(&self) -> usize {
        self.profiles.iter().flatten().map(|(_, n)| n).sum()
    }

    pub fn hypotheses_met(&self) -> bool {
        self.all_multiple && self.f_not_linear && self.h_divisible
    }

    pub fn unmet_hypotheses(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.all_multiple {
            out.push("some a_i has a simple root");
        }
        if !self.f_not_linear {
            out.push("f is not known to be non-linear in every coordinate system");
        }
        if !self.h_divisible {
            out.push("F is not of the form f(Z,T) + rad(alpha)*h");
        }
        out
    }
}

fn f_not_linear_flag(flags: &Flags) -> bool {
    flags.f_not_linear_any_coords.value || flags.f_nontrivial_line.value
}

pub fn iso_discriminant(pres: &GavPresentation) -> Result<IsoDiscriminant> {
    let a = pres.alpha_factored().ok_or(CoreError::AlphaNotFactored)?;
    let profiles = a.iter().map(|ai| Ok(gav_algebra::root_multiplicity_profile(ai)?)).collect::<Result<Vec<_>>>()?;
    let all_multiple = profiles.iter().flatten().all(|(e, _)| *e >= 2);
    let m = pres.m();
    let f_only = pres.big_f().vars_used().iter().all(|&v| v == m + 1 || v == m + 2);
    let h_divisible = f_only || validate_presentation(pres).check("(d)").is_some_and(|c| c.passed);
    Ok(IsoDiscriminant {
        field: pres.field().spec_string(),
        m,
        profiles,
        all_multiple,
        f_not_linear: f_not_linear_flag(pres.flags()),
        h_divisible,
    })
}

/// Over a finite field every root of a squarefree part is separable, so a
/// separable multiple root exists iff the squarefree decomposition has a
/// part of exponent at least 2.
pub fn check_separable_multiple_root(a: &MultiPoly) -> Result<bool> {
    if a.is_constant() {
        return Err(gav_algebra::AlgebraError::ConstantPolynomial.into());
    }
    Ok(squarefree_decomposition(a)?.parts.iter().any(|(_, e)| *e >= 2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonIsoCertificate {
    pub reason: String,
    pub cited: Vec<Citation>,
    /// Profiles of the first presentation with no partner in the second.
    pub unmatched_a: Vec<Profile>,
    pub unmatched_b: Vec<Profile>,
    pub root_counts: (usize, usize),
}

impl NonIsoCertificate {
    pub fn mirrored(&self) -> NonIsoCertificate {
        NonIsoCertificate {
            reason: self.reason.clone(),
            cited: self.cited.clone(),
            unmatched_a: self.unmatched_b.clone(),
            unmatched_b: self.unmatched_a.clone(),
            root_counts: (self.root_counts.1, self.root_counts.0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Generator images of an explicit isomorphism `A -> B`, as
    /// `(generator of A, image in B)`.
    Isomorphic { witness: Vec<(String, String)> },
    NonIsomorphic(NonIsoCertificate),
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Isomorphic { .. } => "Isomorphic",
            Verdict::NonIsomorphic(_) => "NonIsomorphic",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }
}

/// `p = c * q` for a nonzero constant `c`.
fn scalar_ratio(p: &MultiPoly, q: &MultiPoly) -> Option<Fe> {
    if p.is_zero() || q.is_zero() {
        return None;
    }
    let f = p.field();
    let (mono, cq) = q.terms().next()?;
    let c = f.div(p.coeff(mono), cq)?;
    (!c.is_zero() && p == &q.scale(c)).then_some(c)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

const MAX_PERMUTATION_SEARCH: usize = 6;

/// Searches for `sigma` and units with `b_{sigma(i)} = c_i a_i(X_sigma(i))`
/// and `F_B = mu F_A(X_sigma)`.
fn renaming_isomorphism(a: &GavPresentation, b: &GavPresentation) -> Option<Vec<(String, String)>> {
    let m = a.m();
    if m != b.m() || m > MAX_PERMUTATION_SEARCH || a.ring() != b.ring() {
        return None;
    }
    let (fa, fb) = (a.alpha_factored()?, b.alpha_factored()?);
    let ring = a.ring();
    let field = a.field();
    for sigma in permutations(m) {
        let mut images: Vec<MultiPoly> = (0..ring.nvars()).map(|k| ring.var(k)).collect();
        for (i, &s) in sigma.iter().enumerate() {
            images[i] = ring.var(s);
        }
        let mut lambda = field.one();
        let mut ok = true;
        for (i, ai) in fa.iter().enumerate() {
            match scalar_ratio(&fb[sigma[i]], &ai.compose(&images, ring)) {
                Some(c) => lambda = field.mul(lambda, c),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let Some(mu) = scalar_ratio(b.big_f(), &a.big_f().compose(&images, ring)) else { continue };
        let ratio = field.div(lambda, mu).expect("mu is nonzero");
        let vars = ring.vars();
        let mut witness: Vec<(String, String)> =
            (0..m).map(|i| (vars[i].to_lowercase(), vars[sigma[i]].to_lowercase())).collect();
        let y = ring.var(m).scale(ratio);
        witness.push(("y".into(), y.to_string().to_lowercase()));
        witness.push(("z".into(), "z".into()));
        witness.push(("t".into(), "t".into()));
        return Some(witness);
    }
    None
}

/// Multiset difference `a - b`.
fn multiset_minus(a: &[Profile], b: &[Profile]) -> Vec<Profile> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for p in a {
        match rest.iter().position(|q| q == p) {
            Some(k) => {
                rest.remove(k);
            }
            None => out.push(p.clone()),
        }
    }
    out
}

pub fn compare(a: &GavPresentation, b: &GavPresentation) -> Result<Verdict> {
    if a.field() != b.field() {
        return Err(CoreError::FieldMismatch(a.field().spec_string(), b.field().spec_string()));
    }
    if a.m() != b.m() {
        return Ok(Verdict::NonIsomorphic(NonIsoCertificate {
            reason: "dimensions differ".into(),
            cited: Vec::new(),
            unmatched_a: Vec::new(),
            unmatched_b: Vec::new(),
            root_counts: (0, 0),
        }));
    }
    if let Some(witness) = renaming_isomorphism(a, b) {
        return Ok(Verdict::Isomorphic { witness });
    }
    let (da, db) = (iso_discriminant(a)?, iso_discriminant(b)?);
    if !da.hypotheses_met() || !db.hypotheses_met() {
        let mut unmet: Vec<String> = da.unmet_hypotheses().iter().map(|s| format!("first: {s}")).collect();
        unmet.extend(db.unmet_hypotheses().iter().map(|s| format!("second: {s}")));
        return Ok(Verdict::Inconclusive { reason: format!("HypothesesUnmet: {}", unmet.join("; ")) });
    }
    let (ma, mb) = (da.multiset(), db.multiset());
    if ma != mb {
        let (ra, rb) = (da.total_roots(), db.total_roots());
        let reason = if ra != rb {
            "total numbers of roots differ".to_string()
        } else {
            "no matching of the factors a_i with equal root data".to_string()
        };
        return Ok(Verdict::NonIsomorphic(NonIsoCertificate {
            reason,
            cited: vec![citations::DK_EQUALS_B, citations::ROOT_DATA],
            unmatched_a: multiset_minus(&ma, &mb),
            unmatched_b: multiset_minus(&mb, &ma),
            root_counts: (ra, rb),
        }));
    }
    Ok(Verdict::Inconclusive {
        reason: "root data match; matching root data is necessary but not known to be sufficient".into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub claim: String,
    pub holds: bool,
    pub provenance: Provenance,
    pub cite: Option<Citation>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainConclusion {
    /// `A` is not a polynomial ring but `A^[1]` is.
    CancellationCounterexample,
    Blocked { at: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateChain {
    pub steps: Vec<ChainStep>,
    pub conclusion: ChainConclusion,
}

/// For `alpha = a_1(X1)...a_m(Xm)` and `F = f(Z, T)`.
pub fn non_rectangularity_report(pres: &GavPresentation) -> Result<CertificateChain> {
    let m = pres.m();
    let a = pres
        .alpha_factored()
        .ok_or_else(|| CoreError::ShapeMismatch("alpha must be given as a_1(X1)...a_m(Xm)".into()))?;
    if !pres.big_f().vars_used().iter().all(|&v| v == m + 1 || v == m + 2) {
        return Err(CoreError::ShapeMismatch(format!("F = {} must involve only Z and T", pres.big_f())));
    }
    let mut steps = Vec::new();
    let mut roots_ok = true;
    for (i, ai) in a.iter().enumerate() {
        let holds = check_separable_multiple_root(ai)?;
        roots_ok &= holds;
        steps.push(ChainStep {
            claim: format!("a_{} has a separable multiple root in the algebraic closure", i + 1),
            holds,
            provenance: Provenance::Computed,
            cite: None,
            detail: format!("a_{} = {ai}, profile {:?}", i + 1, gav_algebra::root_multiplicity_profile(ai)?),
        });
    }
    let flag = &pres.flags().f_nontrivial_line;
    steps.push(ChainStep {
        claim: "f is a non-trivial line".into(),
        holds: flag.value,
        provenance: Provenance::TrustedFlag,
        cite: None,
        detail: flag.cite.clone().unwrap_or_else(|| "flag not set".into()),
    });
    if !roots_ok {
        return Ok(CertificateChain {
            steps,
            conclusion: ChainConclusion::Blocked { at: "some a_i has no separable multiple root".into() },
        });
    }
    if !flag.value {
        return Ok(CertificateChain {
            steps,
            conclusion: ChainConclusion::Blocked {
                at: "f is not certified non-trivial; if k[Z,T] = k[f]^[1] then A = k^[m+2]".into(),
            },
        });
    }
    steps.push(ChainStep {
        claim: format!("A is not k^[{}]", m + 2),
        holds: true,
        provenance: Provenance::Derived,
        cite: Some(citations::SEPARABLE_MULTIPLE_ROOT),
        detail: "k[Z,T] != k[f]^[1] since f is a non-trivial line".into(),
    });
    steps.push(ChainStep {
        claim: format!("A^[1] = k^[{}]", m + 3),
        holds: true,
        provenance: Provenance::TrustedFlag,
        cite: Some(citations::STABLE_ISOMORPHISM),
        detail: "R = k[X], pi = rad(alpha), G = f; f a line gives R[Z,T]/(pi, f) = (R/pi)^[1]; not machine-verified"
            .into(),
    });
    Ok(CertificateChain { steps, conclusion: ChainConclusion::CancellationCounterexample })
}

/// Monic irreducibles of degree at most `max_deg` over a prime field,
/// ordered by degree, then by the base-`p` encoding of the lower
/// coefficients.
pub fn monic_irreducibles(field: &Field, var: usize, ring: &PolyRing, max_deg: u32) -> Result<Vec<MultiPoly>> {
    let q = field.order();
    let mut out = Vec::new();
    for d in 1..=max_deg {
        let count = q.checked_pow(d).ok_or_else(|| CoreError::Precondition("degree too large".into()))?;
        for code in 0..count {
            let mut terms = vec![(Monomial::var(ring.nvars(), var, d), field.one())];
            let mut c = code;
            for k in 0..d {
                let e = field.element(c % q);
                c /= q;
                if !e.is_zero() {
                    terms.push((Monomial::var(ring.nvars(), var, k), e));
                }
            }
            let g = MultiPoly::from_terms(ring, terms);
            let fs = factor_univariate(&g, 0)?;
            if fs.len() == 1 && fs[0].1 == 1 {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// First product of distinct irreducibles (taken in the order above,
/// including each as early as possible) of total degree exactly `j`.
pub fn squarefree_of_degree(field: &Field, var: usize, ring: &PolyRing, j: u32) -> Result<MultiPoly> {
    let irr = monic_irreducibles(field, var, ring, j)?;
    fn dfs(irr: &[MultiPoly], start: usize, need: u32, acc: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        for k in start..irr.len() {
            let d = irr[k].total_degree().unwrap_or(0);
            if d > need {
                break;
            }
            acc.push(k);
            if dfs(irr, k + 1, need - d, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if !dfs(&irr, 0, j, &mut chosen) {
        return Err(CoreError::Precondition(format!("no squarefree polynomial of degree {j}")));
    }
    Ok(chosen.iter().fold(ring.one(), |acc, &k| &acc * &irr[k]))
}

#[derive(Clone, Debug)]
pub struct Family {
    pub members: Vec<GavPresentation>,
    /// `(i, j, verdict of compare(members[i], members[j]))` for `i < j`.
    pub certificates: Vec<(usize, usize, Verdict)>,
}

fn member_flags(line: &LineEntry) -> Result<Flags> {
    let is_line = match &line.witness {
        Some(_) if verify_line_witness(line)?.passed() => Flag::trusted("verified parametrization witness"),
        _ => line.nontrivial.clone(),
    };
    let nl_cite = format!(
        "{} ({}), applied to: {}",
        citations::NONTRIVIAL_LINE_NOT_LINEAR.label,
        citations::NONTRIVIAL_LINE_NOT_LINEAR.quote,
        line.nontrivial.cite.clone().unwrap_or_default()
    );
    Ok(Flags { f_is_line: is_line, f_nontrivial_line: line.nontrivial.clone(), f_not_linear_any_coords: Flag::trusted(&nl_cite) })
}

/// Members `a_1 = g_j(X1)^2, a_i = X_i^2 (i > 1), F = f` for `j = 1..N`,
/// `g_j` squarefree of degree `j`, with all pairwise comparisons.
pub fn generate_zcp_family(m: usize, n: usize, line: &LineEntry) -> Result<Family> {
    if n < 2 {
        return Err(CoreError::Precondition("a family needs at least two members".into()));
    }
    if m == 0 {
        return Err(CoreError::Precondition("m must be at least 1".into()));
    }
    if !line.nontrivial.value {
        return Err(CoreError::LineNotTrusted);
    }
    let field = &line.field;
    let ring = PolyRing::new(field, &ambient_vars(m));
    let f = line.f.map_into(&ring, None)?;
    let flags = member_flags(line)?;
    let members = (1..=n as u32)
        .map(|j| {
            let g = squarefree_of_degree(field, 0, &ring, j)?;
            let mut factors = vec![g.pow(2)];
            factors.extend((1..m).map(|i| ring.var(i).pow(2)));
            GavPresentation::new(PresentationData {
                field: field.clone(),
                m,
                alpha: AlphaSpec::Factored(factors),
                big_f: f.clone(),
                f_part: Some(f.clone()),
                h_part: None,
                flags: flags.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let certificates = pairs
        .par_iter()
        .map(|&(i, j)| Ok((i, j, compare(&members[i], &members[j])?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Family { members, certificates })
}

/// Data produced by [`complete_automorphism`]: `phi(alpha) = gamma alpha`,
/// `F = alpha u + phi(F) v`, `phi(u_tilde) = u`, `phi(v_tilde) = v`, and
/// `phi(u_tilde + gamma y v_tilde) = y`.
#[derive(Clone, Debug, PartialEq)]
pub struct AutoCompletion {
    pub gamma: Fe,
    pub u: MultiPoly,
    pub v: MultiPoly,
    pub u_tilde: MultiPoly,
    pub v_tilde: MultiPoly,
    /// Image of `y` forced by the images of `x, z, t`.
    pub phi_y: MultiPoly,
    pub preimage: MultiPoly,
    /// Inverse of the map on `B`, images of `x1..xm, z, t`.
    pub inverse: Vec<MultiPoly>,
}

/// `images` are the images of `x1..xm, z, t` (in that order) as
/// polynomials in `X, Z, T`.
pub fn complete_automorphism(
    pres: &GavPresentation,
    images: &[MultiPoly],
    gamma_candidate: Option<Fe>,
) -> Result<AutoCompletion> {
    let m = pres.m();
    let ring = pres.ring();
    let field = pres.field();
    let b_idx = pres.b_indices();
    if images.len() != b_idx.len() {
        return Err(CoreError::InvalidMap(format!("expected {} images, got {}", b_idx.len(), images.len())));
    }
    for (k, img) in images.iter().enumerate() {
        if img.ring() != ring {
            return Err(CoreError::PresentationMismatch);
        }
        let allowed: &[usize] = if k < m { &b_idx[..m] } else { &b_idx };
        if let Some(v) = img.vars_used().into_iter().find(|v| !allowed.contains(v)) {
            return Err(CoreError::ConditionIFails(format!(
                "image of {} uses {}",
                ring.vars()[b_idx[k]].to_lowercase(),
                ring.vars()[v]
            )));
        }
    }
    let mut full: Vec<MultiPoly> = (0..ring.nvars()).map(|k| ring.var(k)).collect();
    for (k, img) in images.iter().enumerate() {
        full[b_idx[k]] = img.clone();
    }
    let phi_b = |p: &MultiPoly| p.compose(&full, ring);

    // (i): invert on B through the graph ideal (W_k - phi(g_k)).
    let wnames: Vec<String> = (1..=b_idx.len()).map(|k| format!("W{k}")).collect();
    let wring = ring.extended(&wnames);
    let n0 = ring.nvars();
    let lift = |p: &MultiPoly| p.map_into(&wring, None);
    let graph_gens = images
        .iter()
        .enumerate()
        .map(|(k, img)| Ok(&wring.var(n0 + k) - &lift(img)?))
        .collect::<Result<Vec<_>>>()?;
    let graph = IdealHandle::with_order(&wring, graph_gens, elimination_order(&wring, &(0..n0).collect::<Vec<_>>()))?;
    let mut back: Vec<MultiPoly> = vec![wring.zero(); wring.nvars()];
    for (k, &g) in b_idx.iter().enumerate() {
        back[n0 + k] = lift(&ring.var(g))?;
    }
    for k in 0..n0 {
        back[k] = wring.var(k);
    }
    let mut inverse = Vec::new();
    for (k, &g) in b_idx.iter().enumerate() {
        let nf = graph.reduce(&lift(&ring.var(g))?)?;
        if nf.vars_used().iter().any(|&v| v < n0) {
            return Err(CoreError::ConditionIFails(format!(
                "{} is not in the image of B",
                ring.vars()[g].to_lowercase()
            )));
        }
        if k < m && nf.vars_used().iter().any(|&v| v >= n0 + m) {
            return Err(CoreError::ConditionIFails(format!(
                "{} is not in the image of E",
                ring.vars()[g].to_lowercase()
            )));
        }
        let inv = nf.compose(&back, &wring);
        inverse.push(inv.map_into(ring, None)?);
    }
    let mut inv_full: Vec<MultiPoly> = (0..ring.nvars()).map(|k| ring.var(k)).collect();
    for (k, inv) in inverse.iter().enumerate() {
        inv_full[b_idx[k]] = inv.clone();
    }
    let psi = |p: &MultiPoly| p.compose(&inv_full, ring);

    // (iii): (alpha, F)B = (phi(alpha), phi(F))B.
    let alpha = pres.alpha().clone();
    let big_f = pres.big_f().clone();
    let (pa, pf) = (phi_b(&alpha), phi_b(&big_f));
    let i_ideal = IdealHandle::new(ring, vec![alpha.clone(), big_f.clone()])?;
    let j_ideal = IdealHandle::new(ring, vec![pa.clone(), pf.clone()])?;
    if !ideal_equal(&i_ideal, &j_ideal)? {
        let witness = [(&alpha, &j_ideal, "(phi(alpha), phi(F))"), (&big_f, &j_ideal, "(phi(alpha), phi(F))")]
            .into_iter()
            .chain([(&pa, &i_ideal, "(alpha, F)"), (&pf, &i_ideal, "(alpha, F)")])
            .find_map(|(g, id, name)| match id.contains(g) {
                Ok(false) => Some(format!("{g} not in {name}")),
                _ => None,
            })
            .unwrap_or_default();
        return Err(CoreError::ConditionIIIFails { witness });
    }

    let gamma = gav_algebra::div_exact(&pa, &alpha)
        .and_then(|q| q.constant_value())
        .filter(|g| !g.is_zero())
        .ok_or_else(|| CoreError::GammaNotConstant(format!("phi(alpha) = {pa}")))?;
    if let Some(c) = gamma_candidate {
        if c != gamma {
            return Err(CoreError::GammaNotConstant(format!(
                "candidate {} but phi(alpha) = {} alpha",
                field.format(c),
                field.format(gamma)
            )));
        }
    }

    let (rem, cof) = IdealHandle::new(ring, vec![alpha.clone(), pf.clone()])?.divide_with_witness(&big_f)?;
    if !rem.is_zero() {
        return Err(CoreError::ConditionIIIFails { witness: format!("F leaves remainder {rem}") });
    }
    let (u, v) = (cof[0].clone(), cof[1].clone());
    let (rem2, cof2) = IdealHandle::new(ring, vec![alpha.clone(), big_f.clone()])?.divide_with_witness(&pf)?;
    if !rem2.is_zero() {
        return Err(CoreError::ConditionIIIFails { witness: format!("phi(F) leaves remainder {rem2}") });
    }
    let inv_gamma = field.inv(gamma).expect("gamma is nonzero");
    let phi_y = (&cof2[0] + &(&pres.y() * &cof2[1])).scale(inv_gamma);

    let (u_tilde, v_tilde) = (psi(&u), psi(&v));
    let preimage = &u_tilde + &(&pres.y() * &v_tilde).scale(gamma);
    let mut endo = full.clone();
    endo[pres.y_index()] = phi_y.clone();
    let image = pres.normal_form(&preimage.compose(&endo, ring))?;
    if image != pres.y() {
        return Err(CoreError::Precondition(format!("phi(preimage) = {image}, expected y")));
    }
    Ok(AutoCompletion { gamma, u, v, u_tilde, v_tilde, phi_y, preimage, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines::catalog_line;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn with_line_flags(pres: GavPresentation) -> GavPresentation {
        let mut flags = Flags::default();
        flags.f_nontrivial_line = Flag::trusted("test line");
        flags.f_is_line = Flag::trusted("test line");
        pres.with_flags(flags).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        let p = GavPresentation::from_factors(&f(5), &["X1^2"], "Z^2 + T^3").unwrap();
        assert_eq!(iso_discriminant(&p).unwrap().profiles, vec![vec![(2, 1)]]);
        let p = GavPresentation::from_factors(&f(5), &["(X1^2 - X1)^2"], "Z^2 + T^3").unwrap();
        assert_eq!(iso_discriminant(&p).unwrap().profiles, vec![vec![(2, 2)]]);
        let p = GavPresentation::from_factors(&f(3), &["X1^2", "(X2^2+1)^2"], "Z^2 + T^3").unwrap();
        assert_eq!(iso_discriminant(&p).unwrap().multiset(), vec![vec![(2, 1)], vec![(2, 2)]]);
    }

    #[test]
    fn separable_multiple_root_examples() {
        let r = PolyRing::new(&f(2), &["X1"]);
        let parse = |s: &str| gav_algebra::parse_poly(s, &r).unwrap();
        assert!(check_separable_multiple_root(&parse("X1^2")).unwrap());
        assert!(!check_separable_multiple_root(&parse("X1^2 - X1")).unwrap());
        assert!(check_separable_multiple_root(&parse("X1^4 + X1^2")).unwrap());
        assert!(check_separable_multiple_root(&parse("1")).is_err());
    }

    #[test]
    fn compare_examples() {
        let line = catalog_line(5).unwrap();
        let fs = line.f.to_string();
        let a = with_line_flags(GavPresentation::from_factors(&f(5), &["X1^2"], &fs).unwrap());
        let b = with_line_flags(GavPresentation::from_factors(&f(5), &["(X1^2 - X1)^2"], &fs).unwrap());
        let c = with_line_flags(GavPresentation::from_factors(&f(5), &["(X1 - 1)^2"], &fs).unwrap());
        match compare(&a, &b).unwrap() {
            Verdict::NonIsomorphic(cert) => {
                assert_eq!(cert.root_counts, (1, 2));
                assert!(cert.cited.contains(&citations::ROOT_DATA));
                assert_eq!(compare(&b, &a).unwrap(), Verdict::NonIsomorphic(cert.mirrored()));
            }
            v => panic!("{v:?}"),
        }
        assert!(matches!(compare(&a, &a).unwrap(), Verdict::Isomorphic { .. }));
        assert!(matches!(compare(&a, &c).unwrap(), Verdict::Inconclusive { .. }));
        let other = GavPresentation::from_factors(&f(3), &["X1^2"], "Z").unwrap();
        assert!(matches!(compare(&a, &other), Err(CoreError::FieldMismatch(..))));
    }

    #[test]
    fn scaled_presentation_is_isomorphic() {
        let a = GavPresentation::from_factors(&f(5), &["X1^2", "X2^3"], "Z^2 + T^3").unwrap();
        let b = GavPresentation::from_factors(&f(5), &["2*X1^3", "X2^2"], "3*Z^2 + 3*T^3").unwrap();
        let Verdict::Isomorphic { witness } = compare(&a, &b).unwrap() else { panic!() };
        assert_eq!(witness[0], ("x1".into(), "x2".into()));
        // lambda = 2, mu = 3, y -> (2/3) y = 4y
        assert_eq!(witness[2], ("y".into(), "4*y".into()));
    }

    #[test]
    fn family_over_f2() {
        let ring = PolyRing::new(&f(2), &["X1"]);
        let expected = ["X1", "X1^2 + X1", "X1^3 + X1^2 + X1", "X1^4 + X1", "X1^5 + X1^4 + X1^3 + X1"];
        for (j, e) in expected.iter().enumerate() {
            let g = squarefree_of_degree(&f(2), 0, &ring, j as u32 + 1).unwrap();
            assert_eq!(g, gav_algebra::parse_poly(e, &ring).unwrap(), "j = {}", j + 1);
        }
        let fam = generate_zcp_family(1, 3, &catalog_line(2).unwrap()).unwrap();
        assert_eq!(fam.certificates.len(), 3);
        assert!(fam.certificates.iter().all(|(_, _, v)| matches!(v, Verdict::NonIsomorphic(_))));
        assert!(generate_zcp_family(1, 1, &catalog_line(2).unwrap()).is_err());
    }

    #[test]
    fn chain_examples() {
        let line = catalog_line(2).unwrap();
        let fam = generate_zcp_family(1, 2, &line).unwrap();
        let chain = non_rectangularity_report(&fam.members[0]).unwrap();
        assert_eq!(chain.conclusion, ChainConclusion::CancellationCounterexample);
        let sq = with_line_flags(GavPresentation::from_factors(&f(2), &["X1"], &line.f.to_string()).unwrap());
        assert!(matches!(non_rectangularity_report(&sq).unwrap().conclusion, ChainConclusion::Blocked { .. }));
        let trivial = GavPresentation::from_factors(&f(2), &["X1^2"], &line.f.to_string()).unwrap();
        assert!(matches!(non_rectangularity_report(&trivial).unwrap().conclusion, ChainConclusion::Blocked { .. }));
        let shaped = GavPresentation::from_factors(&f(2), &["X1^2"], "Z + X1*T").unwrap();
        assert!(matches!(non_rectangularity_report(&shaped), Err(CoreError::ShapeMismatch(_))));
    }

    #[test]
    fn automorphism_examples() {
        let pres = GavPresentation::from_factors(&f(5), &["X1^2"], "Z^2 + T^3").unwrap();
        let p = |s: &str| pres.parse(s).unwrap();
        let c = complete_automorphism(&pres, &[p("X1"), p("Z"), p("T + X1^2")], Some(f(5).one())).unwrap();
        assert_eq!(c.gamma, f(5).one());
        let id = complete_automorphism(&pres, &[p("X1"), p("Z"), p("T")], None).unwrap();
        assert_eq!(id.preimage, pres.y());
        assert!(matches!(
            complete_automorphism(&pres, &[p("X1"), p("Z + 1"), p("T")], None),
            Err(CoreError::ConditionIIIFails { .. })
        ));
        assert!(matches!(
            complete_automorphism(&pres, &[p("X1"), p("Z^2"), p("T")], None),
            Err(CoreError::ConditionIFails(_))
        ));
        assert!(matches!(
            complete_automorphism(&pres, &[p("X1 + Z"), p("Z"), p("T")], None),
            Err(CoreError::ConditionIFails(_))
        ));
        let scaled = complete_automorphism(&pres, &[p("2*X1"), p("Z"), p("T")], None).unwrap();
        assert_eq!(scaled.gamma, f(5).element(4));
    }
}
