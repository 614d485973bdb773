//! One function per verb, each building a [`Report`].

use std::path::Path;

use gav_algebra::Fe;
use gav_core::citations;
use gav_core::classify::{
    compare, complete_automorphism, generate_zcp_family, iso_discriminant, non_rectangularity_report,
    ChainConclusion, Verdict,
};
use gav_core::expmap::{certify_dk_ml, make_phi1, make_phi2, verify_expmap, BoundKind, ExpMap, VerificationReport};
use gav_core::filtration::{
    check_nonpositive_subring, check_positive_divisible_by_y, check_proper_filtration, check_rho_multiplicative,
    induce_graded_expmap, FiltrationContext,
};
use gav_core::io::{parse_line, parse_map, write_gav, write_map};
use gav_core::lines::{catalog_line, verify_line_witness};
use gav_core::sampling::PropertyReport;
use gav_core::variety::{validate_presentation, GavPresentation};
use gav_core::CoreError;

use crate::report::{Report, Section, Status};
use crate::{
    data_err, load_map_presentation, load_presentation, parse_field_opt, read_file, CliError, CliResult, Command,
    GlobalOpts, Which,
};

const DEFAULT_FILTRATION_SAMPLES: usize = 200;
const DEFAULT_INVARIANT_SAMPLES: usize = 100;

pub fn dispatch(cmd: &Command, g: &GlobalOpts) -> CliResult<Report> {
    match cmd {
        Command::Validate { file } => validate(file, g),
        Command::ExpmapConstruct { file, which } => expmap_construct(file, *which, g),
        Command::ExpmapVerify { map, presentation } => expmap_verify(map, presentation.as_deref(), g),
        Command::Invariants { file } => invariants(file, g),
        Command::Gr { file, var, root, phi } => gr(file, *var, root, *phi, g),
        Command::FiltrationCheck { file, var, root, unsafe_weights } => {
            filtration_check(file, *var, root.as_deref(), unsafe_weights.as_deref(), g)
        }
        Command::ClassifyDiscriminant { file } => classify_discriminant(file, g),
        Command::ClassifyCompare { a, b } => classify_compare(a, b, g),
        Command::Family { m, count, line } => family(*m, *count, line.as_deref(), g),
        Command::LineVerify { file } => line_verify(file, g),
        Command::AutoComplete { map, presentation, gamma } => {
            auto_complete(map, presentation.as_deref(), gamma.as_deref(), g)
        }
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn presentation_section(pres: &GavPresentation) -> Section {
    let mut s = Section::new("presentation");
    for l in write_gav(pres).lines() {
        s.line(l);
    }
    s
}

fn chosen_maps(which: Which) -> Vec<&'static str> {
    match which {
        Which::Phi1 => vec!["phi1"],
        Which::Phi2 => vec!["phi2"],
        Which::Both => vec!["phi1", "phi2"],
    }
}

fn build_map(pres: &GavPresentation, name: &str) -> gav_core::Result<ExpMap> {
    if name == "phi1" {
        make_phi1(pres)
    } else {
        make_phi2(pres)
    }
}

fn verification_section(title: &str, phi: &ExpMap, rep: &VerificationReport) -> Section {
    let mut s = Section::new(title);
    for l in write_map(phi).lines() {
        s.line(l);
    }
    for (name, check) in rep.axioms() {
        s.line(format!("{} {name}: {}", mark(check.passed), check.detail));
        if let Some(w) = &check.witness {
            s.witness(name, w);
        }
    }
    s.line(format!("non-trivial: {}", rep.nontrivial));
    s
}

fn property_section(rep: &PropertyReport) -> Section {
    let mut s = Section::new(rep.name.clone());
    s.line(format!("{} {}/{} samples hold", mark(rep.passed()), rep.samples - rep.failure_count, rep.samples));
    for (i, w) in &rep.failures {
        s.witness(format!("sample {i}"), w);
    }
    s
}

fn parse_element(pres: &GavPresentation, text: &str, what: &str) -> CliResult<Fe> {
    pres.parse(text)
        .ok()
        .and_then(|p| p.constant_value())
        .ok_or_else(|| CliError::Usage(format!("{what} `{text}` is not an element of F_{}", pres.field().spec_string())))
}

fn var_index(pres: &GavPresentation, var: usize) -> CliResult<usize> {
    if var == 0 || var > pres.m() {
        return Err(CliError::Usage(format!("--var must be between 1 and {}", pres.m())));
    }
    Ok(var - 1)
}

fn validate(file: &Path, g: &GlobalOpts) -> CliResult<Report> {
    let pres = load_presentation(file, g)?;
    let v = validate_presentation(&pres);
    let mut r = Report::new("validate");
    r.push(presentation_section(&pres));
    let mut s = Section::new("checks");
    for c in &v.checks {
        s.line(format!("{} {}: {}", mark(c.passed), c.name, c.detail));
        if let Some(w) = &c.witness {
            s.witness(c.name.clone(), w);
        }
    }
    r.push(s);
    r.status = Status::from_bool(v.passed());
    Ok(r)
}

fn expmap_construct(file: &Path, which: Which, g: &GlobalOpts) -> CliResult<Report> {
    let pres = load_presentation(file, g)?;
    let mut r = Report::new("expmap-construct");
    r.push(presentation_section(&pres));
    let mut ok = true;
    for name in chosen_maps(which) {
        let (phi, rep) = build_map(&pres, name).map_err(|e| data_err(file, e))?.verified();
        ok &= rep.passed();
        r.push(verification_section(name, &phi, &rep));
    }
    r.status = Status::from_bool(ok);
    r.cite(citations::PHI_CONSTRUCTION);
    r.cite(citations::EXPMAP_AXIOMS);
    Ok(r)
}

fn expmap_verify(map: &Path, presentation: Option<&Path>, g: &GlobalOpts) -> CliResult<Report> {
    let src = read_file(map)?;
    let pres = load_map_presentation(map, &src, presentation, g)?;
    let phi = parse_map(&src, &pres).map_err(|e| data_err(map, e))?;
    let rep = verify_expmap(&phi);
    let mut r = Report::new("expmap-verify");
    r.push(presentation_section(&pres));
    r.push(verification_section("map", &phi, &rep));
    r.status = Status::from_bool(rep.passed());
    r.cite(citations::EXPMAP_AXIOMS);
    Ok(r)
}

fn invariants(file: &Path, g: &GlobalOpts) -> CliResult<Report> {
    let pres = load_presentation(file, g)?;
    let cert = certify_dk_ml(&pres).map_err(|e| data_err(file, e))?;
    let mut r = Report::new("invariants");
    r.push(presentation_section(&pres));
    let mut h = Section::new("hypotheses");
    for e in &cert.hypothesis_log {
        h.line(format!("{} {} [{}]: {}", mark(e.holds), e.condition, e.provenance.as_str(), e.detail));
    }
    r.push(h);
    let mut w = Section::new("witness maps");
    for (name, rep) in &cert.witnesses {
        w.line(format!("{} {name} verifies (non-trivial: {})", mark(rep.passed()), rep.nontrivial));
    }
    for (claim, holds) in &cert.invariance_checks {
        w.line(format!("{} {claim}", mark(*holds)));
    }
    r.push(w);
    let gens: Vec<String> = cert.dk_generators.iter().map(|a| a.to_string()).collect();
    let mut d = Section::new("Derksen invariant");
    match cert.dk_kind {
        BoundKind::Equal => d.line(format!("DK(A) = k[{}]", gens.join(", "))),
        BoundKind::LowerBound => d.line(format!("DK(A) contains k[{}]", gens.join(", "))),
    };
    r.push(d);
    let mut ml = Section::new("Makar-Limanov invariant");
    match &cert.ml_generators {
        Some(ml_gens) => {
            let v: Vec<String> = ml_gens.iter().map(|a| a.to_string()).collect();
            ml.line(format!("ML(A) = k[{}]", v.join(", ")));
        }
        None => {
            ml.line("not determined: hypotheses unmet");
        }
    }
    r.push(ml);
    r.status = if cert.certified() { Status::Pass } else { Status::Inconclusive };
    r.cite(citations::PHI_CONSTRUCTION);
    r.cite(citations::DK_EQUALS_B);
    r.cite(citations::ML_FROM_DK);
    Ok(r)
}

/// Mathematical failures of a computation become failing reports.
fn as_failure(e: &CoreError) -> Option<(String, String)> {
    match e {
        CoreError::GcdConditionFails { witness } => Some(("common factor".into(), witness.clone())),
        CoreError::HomogenizationFailed { axiom, witness } => Some((axiom.clone(), witness.clone())),
        CoreError::ConditionIIIFails { witness } => Some(("ideal membership".into(), witness.clone())),
        CoreError::ConditionIFails(w) => Some(("condition (i)".into(), w.clone())),
        CoreError::GammaNotConstant(w) => Some(("phi(alpha)/alpha".into(), w.clone())),
        CoreError::ExactDivisionFailure(w) => Some(("division".into(), w.clone())),
        _ => None,
    }
}

fn failure_report(mut r: Report, title: &str, e: &CoreError, witness: (String, String)) -> Report {
    let mut s = Section::new(title);
    s.line(format!("FAIL {e}"));
    s.witness(witness.0, witness.1);
    r.push(s);
    r.status = Status::Fail;
    r
}

fn gr(file: &Path, var: usize, root: &str, phi: Option<Which>, g: &GlobalOpts) -> CliResult<Report> {
    let pres = load_presentation(file, g)?;
    let i = var_index(&pres, var)?;
    let lambda = parse_element(&pres, root, "--root")?;
    let mut r = Report::new("gr");
    r.push(presentation_section(&pres));
    r.cite(citations::GR_PRESENTATION);
    let ctx = match FiltrationContext::at_root(&pres, i, lambda) {
        Ok(c) => c,
        Err(e) => {
            return match as_failure(&e) {
                Some(w) => Ok(failure_report(r, "graded presentation", &e, w)),
                None => Err(data_err(file, e)),
            }
        }
    };
    let gr = ctx.graded().map_err(|e| data_err(file, e))?;
    let names = pres.ring().vars();
    let mut s = Section::new("graded presentation");
    s.line(format!("shift: X{} -> X{} + {}", var, var, pres.field().format(lambda)));
    let w: Vec<String> = (0..pres.num_generators()).map(|k| format!("{}:{}", names[k], gr.weights[k])).collect();
    s.line(format!("weights: {}", w.join(" ")));
    s.line(format!("relation: {}", gr.relation()));
    s.line(format!("homogeneous: {}", gr.is_homogeneous()));
    s.witness("relation", gr.relation());
    r.push(s);
    let mut ok = gr.is_homogeneous();
    if let Some(which) = phi {
        r.cite(citations::DHM);
        let samples = g.samples.unwrap_or(DEFAULT_INVARIANT_SAMPLES);
        for name in chosen_maps(which) {
            let (map, _) = build_map(&pres, name).map_err(|e| data_err(file, e))?.verified();
            let title = format!("homogenized {name}");
            match induce_graded_expmap(&map, &ctx, samples, g.seed) {
                Ok((hmap, rep)) => {
                    let mut s = verification_section(&title, &hmap, &rep.verification);
                    s.line(format!("weight of U: {}/{}", rep.w_u.num, rep.w_u.den));
                    s.line(format!("scaled weights: {:?}", rep.scaled_weights));
                    s.line(format!("homogeneous: {}", rep.homogeneous));
                    let inv = &rep.invariant_samples;
                    s.line(format!(
                        "{} rho of invariants stays invariant: {}/{} samples",
                        mark(inv.passed()),
                        inv.samples - inv.failure_count,
                        inv.samples
                    ));
                    for (k, wtn) in &inv.failures {
                        s.witness(format!("invariant sample {k}"), wtn);
                    }
                    ok &= rep.verification.passed() && rep.homogeneous && inv.passed();
                    r.push(s);
                }
                Err(CoreError::Precondition(why)) => {
                    let mut s = Section::new(title);
                    s.line(format!("skipped: {why}"));
                    r.push(s);
                }
                Err(e) => match as_failure(&e) {
                    Some(w) => {
                        let mut s = Section::new(title);
                        s.line(format!("FAIL {e}"));
                        s.witness(w.0, w.1);
                        r.push(s);
                        ok = false;
                    }
                    None => return Err(data_err(file, e)),
                },
            }
        }
    }
    r.status = Status::from_bool(ok);
    Ok(r)
}

fn parse_weights(text: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|w| w.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("--unsafe-weights: bad weight `{w}`"))))
        .collect()
}

fn filtration_check(
    file: &Path,
    var: Option<usize>,
    root: Option<&str>,
    unsafe_weights: Option<&str>,
    g: &GlobalOpts,
) -> CliResult<Report> {
    let pres = load_presentation(file, g)?;
    let ctx = match (var, root, unsafe_weights) {
        (Some(v), Some(root), None) => {
            let i = var_index(&pres, v)?;
            let lambda = parse_element(&pres, root, "--root")?;
            FiltrationContext::at_root(&pres, i, lambda).map_err(|e| data_err(file, e))?
        }
        (None, None, Some(w)) => FiltrationContext::with_unchecked_weights(&pres, parse_weights(w)?)
            .map_err(|e| CliError::Usage(format!("--unsafe-weights: {e}")))?,
        _ => return Err(CliError::Usage("give --var and --root, or --unsafe-weights".into())),
    };
    let samples = g.samples.unwrap_or(DEFAULT_FILTRATION_SAMPLES);
    let mut r = Report::new("filtration-check");
    r.push(presentation_section(&pres));
    let names = pres.ring().vars();
    let mut wsec = Section::new("degree function");
    let w: Vec<String> = (0..pres.num_generators()).map(|k| format!("{}:{}", names[k], ctx.weights()[k])).collect();
    wsec.line(format!("weights: {}", w.join(" ")));
    if unsafe_weights.is_some() {
        wsec.line("weights supplied by the user; admissibility not checked");
    }
    r.push(wsec);
    let mut ok = true;
    let proper = check_proper_filtration(&ctx, samples, g.seed);
    ok &= proper.passed();
    r.push(property_section(&proper));
    let checks: [fn(&FiltrationContext, usize, u64) -> gav_core::Result<PropertyReport>; 3] =
        [check_rho_multiplicative, check_nonpositive_subring, check_positive_divisible_by_y];
    for check in checks {
        match check(&ctx, samples, g.seed) {
            Ok(rep) => {
                ok &= rep.passed();
                r.push(property_section(&rep));
            }
            Err(CoreError::NotShifted) => {}
            Err(e) => return Err(data_err(file, e)),
        }
    }
    if unsafe_weights.is_none() {
        r.cite(citations::FILTRATION_FACTS);
        r.cite(citations::GR_PRESENTATION);
    }
    r.status = Status::from_bool(ok);
    Ok(r)
}

fn profile_text(p: &[(u32, usize)]) -> String {
    let parts: Vec<String> = p.iter().map(|(e, n)| format!("{n} root(s) of multiplicity {e}")).collect();
    if parts.is_empty() {
        "no roots".into()
    } else {
        parts.join(", ")
    }
}

fn classify_discriminant(file: &Path, g: &GlobalOpts) -> CliResult<Report> {
    let pres = load_presentation(file, g)?;
    let d = iso_discriminant(&pres).map_err(|e| data_err(file, e))?;
    let mut r = Report::new("classify-discriminant");
    r.push(presentation_section(&pres));
    let mut s = Section::new("discriminant");
    for (i, p) in d.profiles.iter().enumerate() {
        s.line(format!("a_{}: {}", i + 1, profile_text(p)));
        s.witness(format!("profile a_{}", i + 1), format!("{p:?}"));
    }
    s.line(format!("total roots: {}", d.total_roots()));
    r.push(s);
    let mut h = Section::new("hypotheses");
    h.line(format!("{} every root of every a_i is multiple", mark(d.all_multiple)));
    h.line(format!("{} f is not linear in any coordinates (trusted flag)", mark(d.f_not_linear)));
    h.line(format!("{} F = f(Z,T) + rad(alpha)*h", mark(d.h_divisible)));
    r.push(h);
    r.cite(citations::ROOT_DATA);
    r.cite(citations::DK_EQUALS_B);
    let mut c = Section::new("non-rectangularity chain");
    match non_rectangularity_report(&pres) {
        Ok(chain) => {
            for st in &chain.steps {
                let cite = st.cite.map(|c| format!(" ({})", c.label)).unwrap_or_default();
                c.line(format!("{} {} [{}]{cite}: {}", mark(st.holds), st.claim, st.provenance.as_str(), st.detail));
                if let Some(ci) = st.cite {
                    r.cite(ci);
                }
            }
            match chain.conclusion {
                ChainConclusion::CancellationCounterexample => {
                    c.line("conclusion: A is a counterexample to cancellation");
                }
                ChainConclusion::Blocked { at } => {
                    c.line(format!("conclusion: blocked: {at}"));
                }
            }
        }
        Err(CoreError::ShapeMismatch(why)) => {
            c.line(format!("not applicable: {why}"));
        }
        Err(e) => return Err(data_err(file, e)),
    }
    r.push(c);
    Ok(r)
}

fn verdict_section(v: &Verdict, r: &mut Report) -> Section {
    let mut s = Section::new("verdict");
    s.line(v.name());
    match v {
        Verdict::Isomorphic { witness } => {
            s.line("explicit isomorphism on generators");
            for (gen, img) in witness {
                s.witness(format!("{gen} ->"), img);
            }
        }
        Verdict::NonIsomorphic(cert) => {
            s.line(format!("reason: {}", cert.reason));
            s.line(format!("total roots: {} vs {}", cert.root_counts.0, cert.root_counts.1));
            s.witness("unmatched profiles of A", format!("{:?}", cert.unmatched_a));
            s.witness("unmatched profiles of B", format!("{:?}", cert.unmatched_b));
            for c in &cert.cited {
                r.cite(*c);
            }
        }
        Verdict::Inconclusive { reason } => {
            s.line(format!("reason: {reason}"));
        }
    }
    s
}

fn classify_compare(a: &Path, b: &Path, g: &GlobalOpts) -> CliResult<Report> {
    let pa = load_presentation(a, g)?;
    let pb = load_presentation(b, g)?;
    let v = compare(&pa, &pb).map_err(|e| CliError::Data(e.to_string()))?;
    let mut r = Report::new("classify-compare");
    let mut sa = presentation_section(&pa);
    sa.title = "presentation A".into();
    let mut sb = presentation_section(&pb);
    sb.title = "presentation B".into();
    r.push(sa);
    r.push(sb);
    let s = verdict_section(&v, &mut r);
    r.push(s);
    r.verdict = Some(v.name().into());
    r.status = match v {
        Verdict::Inconclusive { .. } => Status::Inconclusive,
        _ => Status::Pass,
    };
    Ok(r)
}

fn family(m: usize, count: usize, line: Option<&Path>, g: &GlobalOpts) -> CliResult<Report> {
    let field = parse_field_opt(g)?;
    let entry = match line {
        Some(p) => parse_line(&read_file(p)?, field.as_ref()).map_err(|e| data_err(p, e))?,
        None => {
            let f = field.unwrap_or_else(|| gav_algebra::Field::prime(2).expect("2 is prime"));
            if !f.is_prime_field() {
                return Err(CliError::Usage("the built-in lines are over prime fields".into()));
            }
            catalog_line(f.characteristic()).ok_or_else(|| {
                CliError::Usage(format!("no built-in line over F_{}; pass --line", f.characteristic()))
            })?
        }
    };
    let fam = generate_zcp_family(m, count, &entry).map_err(|e| match e {
        CoreError::Precondition(_) => CliError::Usage(e.to_string()),
        e => CliError::Data(e.to_string()),
    })?;
    let mut r = Report::new("family");
    let mut ls = Section::new("line");
    ls.line(format!("{}: f = {} over F_{}", entry.name, entry.f, entry.field.spec_string()));
    ls.line(format!("non-trivial (trusted): {}", entry.nontrivial.cite.clone().unwrap_or_default()));
    r.push(ls);
    for (k, pres) in fam.members.iter().enumerate() {
        let mut s = presentation_section(pres);
        s.title = format!("member {}", k + 1);
        r.push(s);
    }
    let mut all = true;
    let mut ps = Section::new("pairwise verdicts");
    for (i, j, v) in &fam.certificates {
        let detail = match v {
            Verdict::NonIsomorphic(c) => format!("{} ({} vs {} roots)", c.reason, c.root_counts.0, c.root_counts.1),
            Verdict::Inconclusive { reason } => reason.clone(),
            Verdict::Isomorphic { .. } => "explicit isomorphism".into(),
        };
        ps.line(format!("{} vs {}: {}: {detail}", i + 1, j + 1, v.name()));
        if let Verdict::NonIsomorphic(c) = v {
            for ci in &c.cited {
                r.cite(*ci);
            }
        } else {
            all = false;
        }
    }
    ps.line(format!(
        "{}/{} pairs NonIsomorphic",
        fam.certificates.iter().filter(|(_, _, v)| matches!(v, Verdict::NonIsomorphic(_))).count(),
        fam.certificates.len()
    ));
    r.push(ps);
    r.cite(citations::FAMILY);
    r.status = if all { Status::Pass } else { Status::Inconclusive };
    Ok(r)
}

fn line_verify(file: &Path, g: &GlobalOpts) -> CliResult<Report> {
    let field = parse_field_opt(g)?;
    let entry = parse_line(&read_file(file)?, field.as_ref()).map_err(|e| data_err(file, e))?;
    let mut r = Report::new("line-verify");
    let mut s = Section::new("line");
    s.line(format!("{}: f = {} over F_{}", entry.name, entry.f, entry.field.spec_string()));
    s.line(match &entry.nontrivial.cite {
        Some(c) if entry.nontrivial.value => format!("non-trivial (trusted): {c}"),
        _ => "non-trivial: not flagged".into(),
    });
    r.push(s);
    let mut w = Section::new("parametrization witness");
    match verify_line_witness(&entry) {
        Ok(rep) => {
            if let Some(wt) = &entry.witness {
                w.line(format!("Z = {}, T = {}, s = {}", wt.z_of_s, wt.t_of_s, wt.s_of_zt));
            }
            w.line(format!("{} f(Z(s), T(s)) = 0", mark(rep.f_vanishes)));
            w.line(format!("{} S(Z(s), T(s)) = s", mark(rep.inverse_recovers_s)));
            w.line(format!("{} kernel of the parametrization is (f)", mark(rep.kernel_is_f)));
            for (k, d) in rep.detail.iter().enumerate() {
                w.witness(format!("discrepancy {}", k + 1), d);
            }
            r.status = Status::from_bool(rep.passed());
        }
        Err(CoreError::MissingWitness) => {
            w.line("FAIL no witness given");
            r.status = Status::Fail;
        }
        Err(e) => return Err(data_err(file, e)),
    }
    r.push(w);
    Ok(r)
}

fn auto_complete(map: &Path, presentation: Option<&Path>, gamma: Option<&str>, g: &GlobalOpts) -> CliResult<Report> {
    let src = read_file(map)?;
    let pres = load_map_presentation(map, &src, presentation, g)?;
    let endo = parse_map(&src, &pres).map_err(|e| data_err(map, e))?;
    if endo.image(pres.y_index()) != &pres.y() {
        return Err(data_err(map, "phi(y) is determined by the other images and must not be given"));
    }
    let images: Vec<_> = pres.b_indices().iter().map(|&k| endo.image(k).clone()).collect();
    let gamma = gamma.map(|t| parse_element(&pres, t, "--gamma")).transpose()?;
    let mut r = Report::new("auto-complete");
    r.push(presentation_section(&pres));
    let mut es = Section::new("endomorphism of B");
    for l in write_map(&endo).lines() {
        es.line(l);
    }
    r.push(es);
    r.cite(citations::AUTOMORPHISM_CRITERION);
    let done = match complete_automorphism(&pres, &images, gamma) {
        Ok(d) => d,
        Err(e) => {
            return match as_failure(&e) {
                Some(w) => Ok(failure_report(r, "completion", &e, w)),
                None => Err(data_err(map, e)),
            }
        }
    };
    let vars = pres.ring().vars();
    let mut s = Section::new("completion");
    s.line(format!("gamma = phi(alpha)/alpha = {}", pres.field().format(done.gamma)));
    s.line(format!("F = alpha*({}) + phi(F)*({})", done.u, done.v));
    s.line(format!("phi(y) = {}", done.phi_y));
    s.line(format!("phi({}) = y", done.preimage));
    s.line("PASS phi(preimage) = y");
    s.witness("phi(y)", &done.phi_y);
    s.witness("preimage of y", &done.preimage);
    s.witness("u_tilde", &done.u_tilde);
    s.witness("v_tilde", &done.v_tilde);
    for (k, inv) in pres.b_indices().iter().zip(&done.inverse) {
        s.witness(format!("inverse({})", vars[*k].to_lowercase()), inv);
    }
    r.push(s);
    r.status = Status::Pass;
    Ok(r)
}
