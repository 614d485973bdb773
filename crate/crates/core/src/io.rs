//! Line-oriented text formats.
//!
//! `.gav` (presentation):
//! ```text
//! field 5
//! m 1
//! a1 = X1^2            # or: alpha = ...
//! F = Z^2 + T^3
//! f = Z^2 + T^3        # optional decomposition F = f + rad(alpha)*h
//! h = 0
//! flag f_nontrivial_line = true cite="..."
//! ```
//! `.map` (exponential map; unlisted generators are fixed):
//! ```text
//! presentation "a1sq.gav"
//! phi(z) = Z + X1^2*U
//! ```
//! `.line` (catalog entry):
//! ```text
//! field 2
//! f = Z^4 + T + T^6
//! nontrivial = true cite="..."
//! witness_z = s + s^6
//! witness_t = s^4
//! witness_s = Z + T*Z^2 + T^4
//! ```
//! Blank lines and text after `#` are ignored.

use gav_algebra::{parse_field, parse_poly, AlgebraError, Field, MultiPoly, PolyRing};

use crate::error::{CoreError, Result};
use crate::expmap::ExpMap;
use crate::lines::{line_ring, param_ring, LineEntry, LineWitness};
use crate::variety::{ambient_vars, AlphaSpec, Flag, Flags, GavPresentation, PresentationData};

struct Line<'a> {
    number: usize,
    /// Byte offset of `text` within the original line.
    offset: usize,
    text: &'a str,
}

fn lines(src: &str) -> impl Iterator<Item = Line<'_>> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let body = match raw.find('#') {
            Some(k) if !in_quotes(raw, k) => &raw[..k],
            _ => raw,
        };
        let trimmed = body.trim_start();
        let offset = body.len() - trimmed.len();
        let text = trimmed.trim_end();
        (!text.is_empty()).then_some(Line { number: i + 1, offset, text })
    })
}

fn in_quotes(s: &str, k: usize) -> bool {
    s[..k].matches('"').count() % 2 == 1
}

fn err(line: &Line, column: usize, message: impl Into<String>) -> CoreError {
    CoreError::Parse { line: line.number, column: line.offset + column + 1, message: message.into() }
}

/// Splits `key = value`, returning the value's column.
fn key_value<'a>(line: &Line<'a>) -> Option<(&'a str, &'a str, usize)> {
    let eq = line.text.find('=')?;
    let key = line.text[..eq].trim();
    let rest = &line.text[eq + 1..];
    let value = rest.trim_start();
    Some((key, value.trim_end(), eq + 1 + (rest.len() - value.len())))
}

fn poly_at(line: &Line, text: &str, column: usize, ring: &PolyRing) -> Result<MultiPoly> {
    parse_poly(text, ring).map_err(|e| match e {
        AlgebraError::SyntaxError { position, message } => err(line, column + position, message),
        AlgebraError::UnknownVariable { name, position } => {
            err(line, column + position, format!("unknown variable `{name}`"))
        }
        other => err(line, column, other.to_string()),
    })
}

fn field_at(line: &Line, text: &str, column: usize) -> Result<Field> {
    parse_field(text).map_err(|e| err(line, column, e.to_string()))
}

/// `true|false` optionally followed by `cite="..."`.
fn flag_value(line: &Line, text: &str, column: usize) -> Result<Flag> {
    let (word, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let value = match word {
        "true" => true,
        "false" => false,
        _ => return Err(err(line, column, format!("expected true or false, found `{word}`"))),
    };
    let rest = rest.trim();
    let cite = if rest.is_empty() {
        None
    } else {
        let c = rest
            .strip_prefix("cite")
            .map(str::trim_start)
            .and_then(|r| r.strip_prefix('='))
            .map(str::trim)
            .and_then(|r| r.strip_prefix('"'))
            .and_then(|r| r.strip_suffix('"'))
            .ok_or_else(|| err(line, column + word.len() + 1, "expected cite=\"...\""))?;
        Some(c.to_string())
    };
    Ok(Flag { value, cite })
}

/// Field given in the file, else `default_field`.
pub fn parse_gav(src: &str, default_field: Option<&Field>) -> Result<GavPresentation> {
    let all: Vec<Line> = lines(src).collect();
    let mut field = default_field.cloned();
    let mut m: Option<usize> = None;
    for line in &all {
        if let Some(rest) = line.text.strip_prefix("field") {
            if rest.starts_with(char::is_whitespace) {
                let v = rest.trim_start();
                field = Some(field_at(line, v, line.text.len() - v.len())?);
            }
        } else if let Some(rest) = line.text.strip_prefix('m') {
            if rest.starts_with(char::is_whitespace) || rest.trim_start().starts_with('=') {
                let v = rest.trim_start().trim_start_matches('=').trim();
                let col = line.text.len() - v.len();
                m = Some(v.parse().map_err(|_| err(line, col, format!("bad value of m: `{v}`")))?);
            }
        }
    }
    let field = field.ok_or(CoreError::Parse { line: 1, column: 1, message: "no `field` line".into() })?;
    let max_a = all
        .iter()
        .filter_map(|l| key_value(l).and_then(|(k, _, _)| a_index(k)))
        .max()
        .unwrap_or(0);
    let m = match m {
        Some(m) => m,
        None if max_a > 0 => max_a,
        None => return Err(CoreError::Parse { line: 1, column: 1, message: "no `m` line and no a_i".into() }),
    };
    let ring = PolyRing::new(&field, &ambient_vars(m));
    let mut factors: Vec<Option<MultiPoly>> = vec![None; m];
    let mut alpha = None;
    let (mut big_f, mut f_part, mut h_part) = (None, None, None);
    let mut flags = Flags::default();
    for line in &all {
        let t = line.text;
        if t.starts_with("field") || (t.starts_with('m') && key_value(line).map_or(true, |(k, _, _)| k == "m")) {
            continue;
        }
        if let Some(rest) = t.strip_prefix("flag") {
            let body = rest.trim_start();
            let col = t.len() - body.len();
            let l2 = Line { number: line.number, offset: line.offset + col, text: body };
            let (name, value, vcol) = key_value(&l2).ok_or_else(|| err(line, col, "expected flag NAME = VALUE"))?;
            let flag = flag_value(line, value, col + vcol)?;
            *flags.get_mut(name).ok_or_else(|| err(line, col, format!("unknown flag `{name}`")))? = flag;
            continue;
        }
        let (key, value, col) = key_value(line).ok_or_else(|| err(line, 0, "expected KEY = VALUE"))?;
        if let Some(i) = a_index(key) {
            if i == 0 || i > m {
                return Err(err(line, 0, format!("a_{i} out of range for m = {m}")));
            }
            factors[i - 1] = Some(poly_at(line, value, col, &ring)?);
            continue;
        }
        let p = poly_at(line, value, col, &ring)?;
        match key {
            "alpha" => alpha = Some(p),
            "F" => big_f = Some(p),
            "f" => f_part = Some(p),
            "h" => h_part = Some(p),
            _ => return Err(err(line, 0, format!("unknown key `{key}`"))),
        }
    }
    let alpha = match (alpha, factors.iter().any(Option::is_some)) {
        (Some(_), true) => {
            return Err(CoreError::Parse { line: 1, column: 1, message: "give either alpha or a_i, not both".into() })
        }
        (Some(a), false) => AlphaSpec::Product(a),
        (None, true) => AlphaSpec::Factored(
            factors.into_iter().map(|a| a.unwrap_or_else(|| ring.one())).collect(),
        ),
        (None, false) => return Err(CoreError::Parse { line: 1, column: 1, message: "missing alpha".into() }),
    };
    let big_f = match (big_f, &f_part) {
        (Some(b), _) => b,
        (None, Some(f)) => f + &h_part.clone().unwrap_or_else(|| ring.zero()),
        (None, None) => return Err(CoreError::Parse { line: 1, column: 1, message: "missing F".into() }),
    };
    GavPresentation::new(PresentationData { field, m, alpha, big_f, f_part, h_part, flags })
}

fn a_index(key: &str) -> Option<usize> {
    key.strip_prefix("a_").or_else(|| key.strip_prefix('a')).and_then(|d| d.parse().ok())
}

/// Canonical `.gav` text; [`parse_gav`] reads it back to an equal
/// presentation.
pub fn write_gav(pres: &GavPresentation) -> String {
    let mut out = format!("field {}\nm {}\n", pres.field().spec_string(), pres.m());
    match pres.alpha_factored() {
        Some(a) => {
            for (i, ai) in a.iter().enumerate() {
                out.push_str(&format!("a{} = {ai}\n", i + 1));
            }
        }
        None => out.push_str(&format!("alpha = {}\n", pres.alpha())),
    }
    out.push_str(&format!("F = {}\n", pres.big_f()));
    if let Some(f) = pres.f_part() {
        out.push_str(&format!("f = {f}\n"));
    }
    if let Some(h) = pres.h_part() {
        out.push_str(&format!("h = {h}\n"));
    }
    for name in Flags::NAMES {
        let fl = pres.flags().get(name).unwrap();
        if fl.value || fl.cite.is_some() {
            out.push_str(&format!("flag {name} = {}", fl.value));
            if let Some(c) = &fl.cite {
                out.push_str(&format!(" cite=\"{}\"", c.replace('"', "'")));
            }
            out.push('\n');
        }
    }
    out
}

/// Path named by a `presentation "..."` line, if any.
pub fn map_presentation_path(src: &str) -> Result<Option<String>> {
    for line in lines(src) {
        if let Some(rest) = line.text.strip_prefix("presentation") {
            let v = rest.trim();
            let path = v
                .strip_prefix('"')
                .and_then(|r| r.strip_suffix('"'))
                .ok_or_else(|| err(&line, line.text.len() - v.len(), "expected a quoted path"))?;
            return Ok(Some(path.to_string()));
        }
    }
    Ok(None)
}

/// Reads `phi(g) = image` lines; the map is left unverified.
pub fn parse_map(src: &str, pres: &GavPresentation) -> Result<ExpMap> {
    let ring = pres.ring();
    let mut images = Vec::new();
    for line in lines(src) {
        if line.text.starts_with("presentation") {
            continue;
        }
        let (key, value, col) = key_value(&line).ok_or_else(|| err(&line, 0, "expected phi(g) = image"))?;
        let name = key
            .strip_prefix("phi(")
            .and_then(|r| r.strip_suffix(')'))
            .map(str::trim)
            .ok_or_else(|| err(&line, 0, format!("expected phi(g), found `{key}`")))?;
        let k = ring
            .var_index(&name.to_uppercase())
            .filter(|&k| k < pres.num_generators())
            .ok_or_else(|| err(&line, 4, format!("unknown generator `{name}`")))?;
        if images.iter().any(|(j, _)| *j == k) {
            return Err(err(&line, 0, format!("phi({name}) given twice")));
        }
        images.push((k, poly_at(&line, value, col, ring)?));
    }
    ExpMap::from_partial(pres, &images)
}

pub fn write_map(phi: &ExpMap) -> String {
    let pres = phi.presentation();
    let vars = pres.ring().vars();
    let mut out = String::new();
    for k in 0..pres.num_generators() {
        if phi.image(k) != &pres.ring().var(k) {
            out.push_str(&format!("phi({}) = {}\n", vars[k].to_lowercase(), phi.image(k)));
        }
    }
    out
}

pub fn parse_line(src: &str, default_field: Option<&Field>) -> Result<LineEntry> {
    let all: Vec<Line> = lines(src).collect();
    let mut field = default_field.cloned();
    for line in &all {
        if let Some(rest) = line.text.strip_prefix("field ") {
            let v = rest.trim();
            field = Some(field_at(line, v, line.text.len() - v.len())?);
        }
    }
    let field = field.ok_or(CoreError::Parse { line: 1, column: 1, message: "no `field` line".into() })?;
    let (lr, pr) = (line_ring(&field), param_ring(&field));
    let mut name = String::from("line");
    let (mut f, mut nontrivial, mut wz, mut wt, mut ws) = (None, Flag::default(), None, None, None);
    for line in &all {
        if line.text.starts_with("field ") {
            continue;
        }
        let (key, value, col) = key_value(line).ok_or_else(|| err(line, 0, "expected KEY = VALUE"))?;
        match key {
            "name" => name = value.to_string(),
            "f" => f = Some(poly_at(line, value, col, &lr)?),
            "nontrivial" => nontrivial = flag_value(line, value, col)?,
            "witness_z" => wz = Some(poly_at(line, value, col, &pr)?),
            "witness_t" => wt = Some(poly_at(line, value, col, &pr)?),
            "witness_s" => ws = Some(poly_at(line, value, col, &lr)?),
            _ => return Err(err(line, 0, format!("unknown key `{key}`"))),
        }
    }
    if nontrivial.value && nontrivial.cite.as_deref().map_or(true, |c| c.trim().is_empty()) {
        return Err(CoreError::InvalidPresentation("nontrivial = true needs a citation".into()));
    }
    let f = f.ok_or(CoreError::Parse { line: 1, column: 1, message: "missing f".into() })?;
    let witness = match (wz, wt, ws) {
        (None, None, None) => None,
        (Some(z_of_s), Some(t_of_s), Some(s_of_zt)) => Some(LineWitness { z_of_s, t_of_s, s_of_zt }),
        _ => {
            return Err(CoreError::Parse {
                line: 1,
                column: 1,
                message: "a witness needs witness_z, witness_t and witness_s".into(),
            })
        }
    };
    Ok(LineEntry { name, field, f, nontrivial, witness })
}

pub fn write_line(entry: &LineEntry) -> String {
    let mut out = format!("field {}\nname = {}\nf = {}\n", entry.field.spec_string(), entry.name, entry.f);
    out.push_str(&format!("nontrivial = {}", entry.nontrivial.value));
    if let Some(c) = &entry.nontrivial.cite {
        out.push_str(&format!(" cite=\"{}\"", c.replace('"', "'")));
    }
    out.push('\n');
    if let Some(w) = &entry.witness {
        out.push_str(&format!("witness_z = {}\nwitness_t = {}\nwitness_s = {}\n", w.z_of_s, w.t_of_s, w.s_of_zt));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines::catalog;

    const A1SQ: &str = "# alpha = X1^2\nfield 5\nm 1\na1 = X1^2\nF = Z^2 + T^3   # cusp\n";

    #[test]
    fn gav_round_trip() {
        let p = parse_gav(A1SQ, None).unwrap();
        assert_eq!(p.alpha(), &p.parse("X1^2").unwrap());
        assert_eq!(parse_gav(&write_gav(&p), None).unwrap(), p);
        let flagged = "field 2\na1 = X1^2\nF = Z^4 + T + T^6\nflag f_nontrivial_line = true cite=\"Nagata\"\n";
        let q = parse_gav(flagged, None).unwrap();
        assert_eq!(q.m(), 1);
        assert_eq!(q.flags().f_nontrivial_line.cite.as_deref(), Some("Nagata"));
        assert_eq!(parse_gav(&write_gav(&q), None).unwrap(), q);
    }

    #[test]
    fn gav_errors_have_positions() {
        let e = parse_gav("field 5\nm 1\na1 = X1^2\nF = Z^2 + W\n", None).unwrap_err();
        assert_eq!(e, CoreError::Parse { line: 4, column: 11, message: "unknown variable `W`".into() });
        let e = parse_gav("field 5\nm 1\na1 = X1^2\nG = Z\n", None).unwrap_err();
        assert!(matches!(e, CoreError::Parse { line: 4, .. }));
        assert!(parse_gav("field 5\nm 1\na1 = X1^2\nF = Z\nflag f_is_line = true\n", None).is_err());
        assert!(matches!(parse_gav("field 6\na1 = X1\nF = Z\n", None), Err(CoreError::Parse { line: 1, column: 7, .. })));
    }

    #[test]
    fn map_round_trip() {
        let p = parse_gav(A1SQ, None).unwrap();
        let src = "presentation \"a1sq.gav\"\nphi(z) = Z + X1^2*U\n";
        assert_eq!(map_presentation_path(src).unwrap().as_deref(), Some("a1sq.gav"));
        let phi = parse_map(src, &p).unwrap();
        assert_eq!(phi.image(2), &p.parse("Z + X1^2*U").unwrap());
        assert_eq!(phi.image(3), &p.t());
        let again = parse_map(&write_map(&phi), &p).unwrap();
        assert_eq!(again.images(), phi.images());
        assert!(parse_map("phi(w) = Z\n", &p).is_err());
    }

    #[test]
    fn line_round_trip() {
        for e in catalog() {
            let back = parse_line(&write_line(&e), None).unwrap();
            assert_eq!(back, LineEntry { name: e.name.clone(), ..e });
        }
    }
}
