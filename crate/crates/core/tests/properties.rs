use gav_algebra::{roots_in_field, Fe, Field, MultiPoly};
use gav_core::classify::{compare, complete_automorphism, generate_zcp_family, iso_discriminant, non_rectangularity_report, ChainConclusion, Verdict};
use gav_core::expmap::{base_change_map, is_invariant, make_phi1, make_phi2};
use gav_core::filtration::{
    check_nonpositive_subring, check_positive_divisible_by_y, check_proper_filtration, check_rho_multiplicative,
    FiltrationContext,
};
use gav_core::lines::catalog_line;
use gav_core::sampling::{random_poly, random_presentation, sample_rng};
use gav_core::variety::{
    base_change, elem_equal, shift_coordinate, translate, validate_presentation, AlphaSpec, Flag, Flags,
    GavPresentation,
};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn setup(seed: u64, with_h: bool) -> (GavPresentation, ChaCha8Rng) {
    let mut rng = sample_rng(seed, 0);
    let p = [2u64, 3, 5][rng.gen_range(0..3)];
    let m = rng.gen_range(1..=2);
    let pres = random_presentation(&Field::prime(p).unwrap(), m, 4, with_h, &mut rng).unwrap();
    (pres, rng)
}

fn gens(pres: &GavPresentation) -> Vec<usize> {
    (0..pres.num_generators()).collect()
}

fn line_flags(pres: &GavPresentation) -> GavPresentation {
    let mut flags = Flags::default();
    flags.f_nontrivial_line = Flag::trusted("assumed for the test");
    flags.f_is_line = Flag::trusted("assumed for the test");
    pres.with_flags(flags).unwrap()
}

/// Equality through `A -> k[X,Z,T][1/alpha]`, `Y -> F/alpha`, after clearing
/// the denominator `alpha^d`.
fn iota_equal(pres: &GavPresentation, p: &MultiPoly, q: &MultiPoly) -> bool {
    let diff = p - q;
    let y = pres.y_index();
    let d = diff.degree_in(y);
    let cleared = diff
        .coefficients_in(y)
        .into_iter()
        .fold(pres.ring().zero(), |acc, (k, c)| &acc + &(&(&c * &pres.big_f().pow(k)) * &pres.alpha().pow(d - k)));
    cleared.is_zero()
}

fn first_root(pres: &GavPresentation, i: usize) -> Fe {
    roots_in_field(&pres.alpha_factored().unwrap()[i], 0).unwrap()[0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn element_equality_matches_embedding(seed in any::<u64>()) {
        let (pres, mut rng) = setup(seed, true);
        let vars = gens(&pres);
        let p = random_poly(pres.ring(), &vars, 5, 4, &mut rng);
        let q = random_poly(pres.ring(), &vars, 5, 4, &mut rng);
        let r = random_poly(pres.ring(), &vars, 3, 2, &mut rng);
        let p2 = &p + &(&r * pres.relation());
        let p3 = &p2 + &(&q * pres.relation());
        let e = |x: &MultiPoly| pres.element(x).unwrap();
        for (a, b) in [(&p, &q), (&p, &p2), (&p2, &p3), (&q, &p3)] {
            prop_assert_eq!(elem_equal(&e(a), &e(b), &pres).unwrap(), iota_equal(&pres, a, b));
        }
        prop_assert!(elem_equal(&e(&p), &e(&p), &pres).unwrap());
        prop_assert!(elem_equal(&e(&p2), &e(&p), &pres).unwrap());
        prop_assert!(elem_equal(&e(&p), &e(&p3), &pres).unwrap());
        prop_assert!(pres.normal_form(pres.relation()).unwrap().is_zero());
    }

    #[test]
    fn base_change_keeps_equalities(seed in any::<u64>(), d in 2u32..=3) {
        let (pres, mut rng) = setup(seed, false);
        let ext = base_change(&pres, d).unwrap();
        let emb = pres.field().embedding_into(ext.field()).unwrap();
        let vars = gens(&pres);
        let p = random_poly(pres.ring(), &vars, 4, 3, &mut rng);
        let r = random_poly(pres.ring(), &vars, 2, 2, &mut rng);
        let p2 = &p + &(&r * pres.relation());
        let lift = |x: &MultiPoly| ext.element(&x.map_into(ext.ring(), Some(&emb)).unwrap()).unwrap();
        prop_assert!(elem_equal(&lift(&p), &lift(&p2), &ext).unwrap());
        let p1 = &p + &pres.ring().one();
        prop_assert!(!elem_equal(&lift(&p), &lift(&p1), &ext).unwrap());
    }

    #[test]
    fn shift_then_unshift_is_identity(seed in any::<u64>()) {
        let (pres, _) = setup(seed, true);
        let lambda = first_root(&pres, 0);
        let sh = shift_coordinate(&pres, 0, lambda).unwrap();
        let a1 = &pres.alpha_factored().unwrap()[0];
        let lin = &pres.x(0) - &pres.ring().constant(lambda);
        prop_assert!(gav_algebra::div_exact(a1, &lin.pow(sh.r)).is_some());
        prop_assert!(gav_algebra::div_exact(a1, &lin.pow(sh.r + 1)).is_none());
        let back = translate(&sh.pres, 0, pres.field().neg(lambda)).unwrap();
        prop_assert_eq!(back, pres);
    }

    #[test]
    fn phi_maps_are_exponential(seed in any::<u64>()) {
        let (pres, _) = setup(seed, true);
        let (_, r1) = make_phi1(&pres).unwrap().verified();
        let (_, r2) = make_phi2(&pres).unwrap().verified();
        prop_assert!(r1.passed() && r1.nontrivial);
        prop_assert!(r2.passed() && r2.nontrivial);
    }

    #[test]
    fn invariants_form_a_factorially_closed_subalgebra(seed in any::<u64>()) {
        let (pres, mut rng) = setup(seed, true);
        let (phi, _) = make_phi1(&pres).unwrap().verified();
        let m = pres.m();
        let inv_vars: Vec<usize> = (0..m).chain([pres.t_index()]).collect();
        let e = |x: &MultiPoly| pres.element(x).unwrap();
        let a = random_poly(pres.ring(), &inv_vars, 4, 3, &mut rng);
        let b = random_poly(pres.ring(), &inv_vars, 4, 3, &mut rng);
        prop_assert!(is_invariant(&phi, &e(&(&a + &b))).unwrap());
        prop_assert!(is_invariant(&phi, &e(&(&a * &b))).unwrap());
        let mut coeff = random_poly(pres.ring(), &inv_vars, 3, 2, &mut rng);
        if coeff.is_zero() {
            coeff = pres.ring().one();
        }
        let moving = &coeff * &pres.z();
        let moving = &moving + &a;
        prop_assert!(!is_invariant(&phi, &e(&moving)).unwrap());
        if !b.is_zero() {
            prop_assert!(!is_invariant(&phi, &e(&(&moving * &b))).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn base_changed_phi_verifies(seed in any::<u64>(), d in 2u32..=3) {
        let (pres, _) = setup(seed, false);
        let (phi, _) = make_phi2(&pres).unwrap().verified();
        let (_, rep) = base_change_map(&phi, d).unwrap().verified();
        prop_assert!(rep.passed());
    }

    #[test]
    fn filtration_facts(seed in any::<u64>()) {
        let (pres, _) = setup(seed, true);
        let ctx = FiltrationContext::at_root(&pres, 0, first_root(&pres, 0)).unwrap();
        prop_assert!(ctx.graded().unwrap().is_homogeneous());
        prop_assert!(check_proper_filtration(&ctx, 20, seed).passed());
        prop_assert!(check_rho_multiplicative(&ctx, 20, seed).unwrap().passed());
        prop_assert!(check_nonpositive_subring(&ctx, 10, seed).unwrap().passed());
        prop_assert!(check_positive_divisible_by_y(&ctx, 10, seed).unwrap().passed());
    }
}

/// The presentation obtained by substituting `X_i = nu_i X_sigma(i) + mu_i`
/// and `Z = Z + c rad(alpha)`; it is isomorphic to the input.
fn transport(pres: &GavPresentation, rng: &mut ChaCha8Rng) -> GavPresentation {
    let ring = pres.ring();
    let field = pres.field();
    let m = pres.m();
    let q = field.order();
    let mut sigma: Vec<usize> = (0..m).collect();
    if m == 2 && rng.gen_bool(0.5) {
        sigma.swap(0, 1);
    }
    let mut images: Vec<MultiPoly> = (0..ring.nvars()).map(|k| ring.var(k)).collect();
    for i in 0..m {
        let nu = field.element(rng.gen_range(1..q));
        let mu = field.element(rng.gen_range(0..q));
        images[i] = &ring.var(sigma[i]).scale(nu) + &ring.constant(mu);
    }
    let factors: Vec<MultiPoly> = {
        let a = pres.alpha_factored().unwrap();
        let mut out = vec![ring.zero(); m];
        for i in 0..m {
            out[sigma[i]] = a[i].compose(&images, ring);
        }
        out
    };
    let mut data = pres.data();
    data.alpha = AlphaSpec::Factored(factors);
    let moved = GavPresentation::new(data.clone()).unwrap();
    let rad = moved.alpha_radical().unwrap();
    let c = field.element(rng.gen_range(0..q));
    let mut z_images = images.clone();
    z_images[pres.z_index()] = &pres.z() + &rad.scale(c);
    let f = pres.f_part().unwrap();
    let new_f = pres.big_f().compose(&z_images, ring);
    data.big_f = new_f.clone();
    data.f_part = Some(f.clone());
    data.h_part = Some(gav_algebra::div_exact(&(&new_f - f), &rad).unwrap());
    GavPresentation::new(data).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn discriminant_invariant_under_isomorphism(seed in any::<u64>()) {
        let (pres, mut rng) = setup(seed, true);
        let pres = line_flags(&pres);
        let other = transport(&pres, &mut rng);
        prop_assert!(validate_presentation(&other).passed());
        let (da, db) = (iso_discriminant(&pres).unwrap(), iso_discriminant(&other).unwrap());
        prop_assert_eq!(da.multiset(), db.multiset());
        prop_assert_eq!(da.hypotheses_met(), db.hypotheses_met());
        prop_assert!(!matches!(compare(&pres, &other).unwrap(), Verdict::NonIsomorphic(_)));
    }

    #[test]
    fn discriminant_invariant_under_base_change(seed in any::<u64>(), d in 2u32..=4) {
        let (pres, _) = setup(seed, true);
        let ext = base_change(&pres, d).unwrap();
        prop_assert_eq!(iso_discriminant(&pres).unwrap().multiset(), iso_discriminant(&ext).unwrap().multiset());
    }

    #[test]
    fn compare_is_symmetric(seed in any::<u64>()) {
        let (a, _) = setup(seed, true);
        let (b, _) = setup(seed.wrapping_add(1), true);
        let (a, b) = (line_flags(&a), line_flags(&b));
        let ab = compare(&a, &b);
        let ba = compare(&b, &a);
        match (ab, ba) {
            (Ok(Verdict::NonIsomorphic(c)), Ok(Verdict::NonIsomorphic(d))) => prop_assert_eq!(c.mirrored(), d),
            (Ok(x), Ok(y)) => prop_assert_eq!(x.name(), y.name()),
            (Err(x), Err(y)) => prop_assert_eq!(std::mem::discriminant(&x), std::mem::discriminant(&y)),
            (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn completed_automorphisms_hit_y(seed in any::<u64>()) {
        let (pres, mut rng) = setup(seed, true);
        let field = pres.field();
        let q = field.order();
        let c = field.element(rng.gen_range(0..q));
        let d = field.element(rng.gen_range(0..q));
        let mut images: Vec<MultiPoly> = pres.b_indices().iter().map(|&k| pres.ring().var(k)).collect();
        let m = pres.m();
        images[m] = &pres.z() + &pres.alpha().scale(d);
        images[m + 1] = &pres.t() + &pres.alpha().scale(c);
        let done = complete_automorphism(&pres, &images, None).unwrap();
        prop_assert_eq!(done.gamma, field.one());
        let mut full: Vec<MultiPoly> = (0..pres.ring().nvars()).map(|k| pres.ring().var(k)).collect();
        for (k, &g) in pres.b_indices().iter().enumerate() {
            full[g] = images[k].clone();
        }
        full[pres.y_index()] = done.phi_y.clone();
        let image = pres.normal_form(&done.preimage.compose(&full, pres.ring())).unwrap();
        prop_assert_eq!(image, pres.y());
        let rel_image = pres.normal_form(&pres.relation().compose(&full, pres.ring())).unwrap();
        prop_assert!(rel_image.is_zero());
    }
}

#[test]
fn families_are_pairwise_non_isomorphic() {
    for p in [2u64, 3, 5] {
        let line = catalog_line(p).unwrap();
        for m in [1usize, 2] {
            let fam = generate_zcp_family(m, 4, &line).unwrap();
            assert_eq!(fam.certificates.len(), 6);
            for (_, _, v) in &fam.certificates {
                assert!(matches!(v, Verdict::NonIsomorphic(_)), "p = {p}: {v:?}");
            }
            for pres in &fam.members {
                assert!(validate_presentation(pres).passed());
                let chain = non_rectangularity_report(pres).unwrap();
                assert_eq!(chain.conclusion, ChainConclusion::CancellationCounterexample);
            }
        }
    }
}
