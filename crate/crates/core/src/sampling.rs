//! Seeded random elements and parallel sample-based property checks.

use gav_algebra::{Field, Monomial, MultiPoly, PolyRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::variety::{ambient_vars, validate_presentation, AlphaSpec, Flags, GavPresentation, PresentationData};

/// Random polynomial with up to `max_terms` terms of total degree at most
/// `max_deg` in the variables `vars`.
pub fn random_poly(ring: &PolyRing, vars: &[usize], max_terms: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> MultiPoly {
    let f = ring.field();
    let n = ring.nvars();
    let terms: Vec<(Monomial, gav_algebra::Fe)> = (0..rng.gen_range(1..=max_terms))
        .map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..rng.gen_range(0..=max_deg) {
                e[vars[rng.gen_range(0..vars.len())]] += 1;
            }
            (Monomial::from_exponents(e), f.element(rng.gen_range(1..f.order())))
        })
        .collect();
    MultiPoly::from_terms(ring, terms)
}

/// Independent stream for sample `index` under `seed`.
pub fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Outcome of a sample-based check. At most [`PropertyReport::MAX_WITNESSES`]
/// failures are kept, lowest sample index first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub samples: usize,
    pub failure_count: usize,
    pub failures: Vec<(usize, String)>,
}

impl PropertyReport {
    pub const MAX_WITNESSES: usize = 10;

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

/// Runs `check` on `samples` indices in parallel. `check` returns `None` on
/// success and a witness description on failure; errors count as failures.
pub fn sample_check<F>(name: &str, samples: usize, seed: u64, check: F) -> PropertyReport
where
    F: Fn(&mut ChaCha8Rng) -> Result<Option<String>> + Sync,
{
    let outcomes: Vec<Option<String>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(seed, i);
            match check(&mut rng) {
                Ok(r) => r,
                Err(e) => Some(format!("error: {e}")),
            }
        })
        .collect();
    let failures: Vec<(usize, String)> =
        outcomes.into_iter().enumerate().filter_map(|(i, o)| o.map(|w| (i, w))).collect();
    PropertyReport {
        name: name.to_string(),
        samples,
        failure_count: failures.len(),
        failures: failures.into_iter().take(PropertyReport::MAX_WITNESSES).collect(),
    }
}

/// Random presentation over `F_p` with `m` variables passing
/// [`validate_presentation`]: each `a_i` is a product of powers of linear
/// factors `X_i - lambda`, `F = f(Z, T) + rad(alpha) h` with
/// `deg f <= max_deg_f` and `h` present only when `with_h`.
pub fn random_presentation(
    field: &Field,
    m: usize,
    max_deg_f: u32,
    with_h: bool,
    rng: &mut ChaCha8Rng,
) -> Result<GavPresentation> {
    let ring = PolyRing::new(field, &ambient_vars(m));
    let q = field.order();
    loop {
        let factors: Vec<MultiPoly> = (0..m)
            .map(|i| {
                let n_roots = rng.gen_range(1..=2.min(q as usize));
                let mut roots: Vec<u64> = Vec::new();
                while roots.len() < n_roots {
                    let r = rng.gen_range(0..q);
                    if !roots.contains(&r) {
                        roots.push(r);
                    }
                }
                roots.iter().fold(ring.one(), |acc, &r| {
                    let lin = &ring.var(i) - &ring.constant(field.element(r));
                    &acc * &lin.pow(rng.gen_range(1..=3))
                })
            })
            .collect();
        let (z, t) = (m + 1, m + 2);
        let f = random_poly(&ring, &[z, t], 4, max_deg_f, rng);
        let h = if with_h && rng.gen_bool(0.5) {
            let vars: Vec<usize> = (0..m).chain([z, t]).collect();
            random_poly(&ring, &vars, 2, 2, rng)
        } else {
            ring.zero()
        };
        let data = PresentationData {
            field: field.clone(),
            m,
            alpha: AlphaSpec::Factored(factors),
            big_f: f.clone(),
            f_part: Some(f),
            h_part: Some(h),
            flags: Flags::default(),
        };
        let Ok(mut pres) = GavPresentation::new(data.clone()) else { continue };
        if let Some(rad) = pres.alpha_radical() {
            let mut d = data;
            d.big_f = &d.big_f + &(&rad * d.h_part.as_ref().unwrap());
            pres = GavPresentation::new(d)?;
        }
        if validate_presentation(&pres).passed() {
            return Ok(pres);
        }
    }
}
