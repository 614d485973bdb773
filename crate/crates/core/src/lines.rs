//! Lines `f(Z, T)` with `k[Z,T]/(f) = k[s]`, certified by an explicit
//! parametrization, and the built-in catalog of non-trivial lines.

use gav_algebra::{elimination_order, ideal_equal, Field, IdealHandle, MultiPoly, PolyRing};

use crate::error::{CoreError, Result};
use crate::variety::Flag;

/// Literature reference attached to the catalog's non-triviality flags.
pub const NONTRIVIAL_LINE_CITE: &str =
    "Segre, Nagata: Z^(p^e) + T + T^(sp) with p^e, sp mutually non-dividing is a non-trivial line in characteristic p (Abhyankar-Moh, Suzuki: no such lines in characteristic 0)";

pub fn line_ring(field: &Field) -> PolyRing {
    PolyRing::new(field, &["Z", "T"])
}

pub fn param_ring(field: &Field) -> PolyRing {
    PolyRing::new(field, &["s"])
}

/// `Z = z_of_s(s)`, `T = t_of_s(s)` and the inverse `s = s_of_zt(Z, T)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LineWitness {
    pub z_of_s: MultiPoly,
    pub t_of_s: MultiPoly,
    pub s_of_zt: MultiPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LineEntry {
    pub name: String,
    pub field: Field,
    /// In [`line_ring`].
    pub f: MultiPoly,
    pub nontrivial: Flag,
    pub witness: Option<LineWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineWitnessReport {
    /// `f(Z(s), T(s)) = 0`.
    pub f_vanishes: bool,
    /// `S(Z(s), T(s)) = s`.
    pub inverse_recovers_s: bool,
    /// The kernel of `Z, T -> Z(s), T(s)` is `(f)`.
    pub kernel_is_f: bool,
    pub detail: Vec<String>,
}

impl LineWitnessReport {
    pub fn passed(&self) -> bool {
        self.f_vanishes && self.inverse_recovers_s && self.kernel_is_f
    }
}

/// Checks the parametrization identities exactly, then that the kernel of
/// the parametrization (computed by elimination) is generated by `f`.
/// Together these show `k[Z,T]/(f) = k[s]`; non-triviality is not checked.
pub fn verify_line_witness(entry: &LineEntry) -> Result<LineWitnessReport> {
    let w = entry.witness.as_ref().ok_or(CoreError::MissingWitness)?;
    let field = &entry.field;
    let lr = line_ring(field);
    let pr = param_ring(field);
    let f = entry.f.map_into(&lr, None)?;
    let zs = w.z_of_s.map_into(&pr, None)?;
    let ts = w.t_of_s.map_into(&pr, None)?;
    let s_zt = w.s_of_zt.map_into(&lr, None)?;
    let mut detail = Vec::new();

    let f_at = f.compose(&[zs.clone(), ts.clone()], &pr);
    let f_vanishes = f_at.is_zero();
    if !f_vanishes {
        detail.push(format!("f(Z(s), T(s)) = {f_at}"));
    }
    let s_at = s_zt.compose(&[zs.clone(), ts.clone()], &pr);
    let inverse_recovers_s = s_at == pr.var(0);
    if !inverse_recovers_s {
        detail.push(format!("S(Z(s), T(s)) = {s_at}"));
    }

    let er = PolyRing::new(field, &["s", "Z", "T"]);
    let lift_s = |p: &MultiPoly| p.map_into(&er, None);
    let graph = IdealHandle::with_order(
        &er,
        vec![&er.var(1) - &lift_s(&zs)?, &er.var(2) - &lift_s(&ts)?],
        elimination_order(&er, &[0]),
    )?;
    let kernel: Vec<MultiPoly> = graph.eliminate(&[0]);
    let f_e = f.map_into(&er, None)?;
    let order = gav_algebra::default_order(&er);
    let kernel_is_f = !f.is_zero()
        && ideal_equal(
            &IdealHandle::with_order(&er, kernel.clone(), order.clone())?,
            &IdealHandle::with_order(&er, vec![f_e], order)?,
        )?;
    if !kernel_is_f {
        let ks: Vec<String> = kernel.iter().map(|k| k.to_string()).collect();
        detail.push(format!("kernel of the parametrization is ({})", ks.join(", ")));
    }
    Ok(LineWitnessReport { f_vanishes, inverse_recovers_s, kernel_is_f, detail })
}

struct CatalogRow {
    p: u64,
    f: &'static str,
    z: &'static str,
    t: &'static str,
    s: &'static str,
}

// T = s^(p^e), Z = -(s + s^(sp)); the inverse comes from elimination.
const CATALOG: [CatalogRow; 3] = [
    CatalogRow { p: 2, f: "Z^4 + T + T^6", z: "s + s^6", t: "s^4", s: "Z + T*Z^2 + T^4" },
    CatalogRow { p: 3, f: "Z^9 + T + T^6", z: "-s - s^6", t: "s^9", s: "-(Z^6 + 2*Z^3*T^2 + T^4 + Z)" },
    CatalogRow { p: 5, f: "Z^25 + T + T^10", z: "-s - s^10", t: "s^25", s: "-(Z^10 + 2*Z^5*T^2 + T^4 + Z)" },
];

/// Built-in non-trivial lines `Z^(p^e) + T + T^(sp)` for `p` in {2, 3, 5}.
pub fn catalog() -> Vec<LineEntry> {
    CATALOG
        .iter()
        .map(|row| {
            let field = Field::prime(row.p).expect("catalog characteristic is prime");
            let lr = line_ring(&field);
            let pr = param_ring(&field);
            let parse = |s: &str, r: &PolyRing| gav_algebra::parse_poly(s, r).expect("catalog polynomial parses");
            LineEntry {
                name: format!("line-p{}", row.p),
                f: parse(row.f, &lr),
                nontrivial: Flag::trusted(NONTRIVIAL_LINE_CITE),
                witness: Some(LineWitness { z_of_s: parse(row.z, &pr), t_of_s: parse(row.t, &pr), s_of_zt: parse(row.s, &lr) }),
                field,
            }
        })
        .collect()
}

/// Catalog entry over `F_p`.
pub fn catalog_line(p: u64) -> Option<LineEntry> {
    catalog().into_iter().find(|e| e.field.characteristic() == p)
}
