//! Parsing of surfaces, blow-up centers, class expressions and curve files.

use logfano_core::constraints::{BoxBound, LabeledCurve};
use logfano_core::lattice::{CenterSpec, DivisorClass, SurfaceModel};
use logfano_core::rational::{int, parse_rational, Rational};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("unknown base surface {0:?} (expected F<n> or P2)")]
    Base(String),
    #[error("bad class expression {expr:?}: {reason}")]
    Class { expr: String, reason: String },
    #[error("bad blow-up center {0:?}")]
    Center(String),
    #[error("bad box bound {0:?} (expected a positive rational or \"orthant\")")]
    Box(String),
    #[error("bad curve line {line}: {text:?}")]
    CurveLine { line: usize, text: String },
    #[error("{0}")]
    Invalid(String),
}

/// `F<n>`, `F_<n>` or `P2`.
pub fn parse_base(text: &str) -> Result<SurfaceModel, InputError> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("P2") {
        return Ok(SurfaceModel::projective_plane());
    }
    let digits = t
        .strip_prefix(['F', 'f'])
        .map(|d| d.trim_start_matches('_'))
        .ok_or_else(|| InputError::Base(text.into()))?;
    let n: u32 = digits.parse().map_err(|_| InputError::Base(text.into()))?;
    if n > 64 {
        return Err(InputError::Base(text.into()));
    }
    Ok(SurfaceModel::hirzebruch(n))
}

/// A center written as tracked curve labels joined by `*`, each optionally
/// with a multiplicity: `H`, `Z*F`, `C:2`.
pub fn parse_center(surface: &SurfaceModel, text: &str) -> Result<CenterSpec, InputError> {
    let mut on = Vec::new();
    for part in text.split('*') {
        let (label, mult) = match part.split_once(':') {
            Some((l, m)) => (l.trim(), m.trim().parse::<u32>().map_err(|_| InputError::Center(text.into()))?),
            None => (part.trim(), 1),
        };
        let id = surface.curve_by_label(label).map_err(|_| InputError::Center(text.into()))?;
        on.push((id, mult));
    }
    Ok(CenterSpec { on })
}

/// Applies the blow-ups in order.
pub fn build_surface(base: &str, blowups: &[String]) -> Result<SurfaceModel, InputError> {
    let mut s = parse_base(base)?;
    for b in blowups {
        let center = parse_center(&s, b)?;
        s = s.blow_up(center).map_err(|e| InputError::Invalid(format!("blow-up at {b}: {e}")))?;
    }
    Ok(s)
}

/// A sum of rational multiples of basis names or tracked curve labels,
/// e.g. `2Z + 3F - E1`, `1/2*H`, `-K`. Basis names take precedence.
pub fn parse_class(surface: &SurfaceModel, expr: &str) -> Result<DivisorClass, InputError> {
    let fail = |reason: &str| InputError::Class { expr: expr.into(), reason: reason.into() };
    let names = surface.basis_names();
    let mut total = DivisorClass::zero(surface.tag());
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(fail("empty"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > start {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    for term in terms {
        let (sign, body) = match term.as_bytes().first() {
            Some(b'-') => (int(-1), &term[1..]),
            Some(b'+') => (int(1), &term[1..]),
            _ => (int(1), term),
        };
        let split = body.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(|| fail("term without a class name"))?;
        let (coeff, name) = body.split_at(split);
        let coeff = coeff.trim_end_matches('*');
        let coeff: Rational = if coeff.is_empty() {
            int(1)
        } else {
            parse_rational(coeff).map_err(|_| fail("bad coefficient"))?
        };
        let class = if name == "K" {
            surface.canonical_class()
        } else if let Some(i) = names.iter().position(|n| n == name) {
            surface.basis(i)
        } else if let Ok(id) = surface.curve_by_label(name) {
            surface.curves()[id.0].class.clone()
        } else {
            return Err(fail(&format!("unknown name {name}")));
        };
        total = &total + &(&(sign * coeff) * &class);
    }
    Ok(total)
}

/// `LABEL = CLASS` per line; blank lines and `#` comments are skipped.
pub fn parse_curves(surface: &SurfaceModel, text: &str) -> Result<Vec<LabeledCurve>, InputError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (label, expr) = line
            .split_once('=')
            .ok_or_else(|| InputError::CurveLine { line: i + 1, text: raw.into() })?;
        let label = label.trim();
        if label.is_empty() {
            return Err(InputError::CurveLine { line: i + 1, text: raw.into() });
        }
        out.push(LabeledCurve::new(label, parse_class(surface, expr)?));
    }
    Ok(out)
}

/// Chain labels joined by `+`.
pub fn parse_chain(text: &str) -> Vec<String> {
    text.split('+').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

pub fn parse_box(text: &str) -> Result<BoxBound, InputError> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("orthant") || t.eq_ignore_ascii_case("none") {
        return Ok(BoxBound::Orthant);
    }
    let b = parse_rational(t).map_err(|_| InputError::Box(text.into()))?;
    if b <= int(0) {
        return Err(InputError::Box(text.into()));
    }
    Ok(if b == int(1) { BoxBound::Unit } else { BoxBound::Bound(b) })
}

/// `a..b` (inclusive) or a single value.
pub fn parse_range(text: &str) -> Result<(u32, u32), InputError> {
    let bad = || InputError::Invalid(format!("bad range {text:?} (expected a..b)"));
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.trim_start_matches('=');
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        }
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use logfano_core::rational::ratio;

    #[test]
    fn bases() {
        assert_eq!(parse_base("F3").unwrap().rank(), 2);
        assert_eq!(parse_base("F_0").unwrap().rank(), 2);
        assert_eq!(parse_base("p2").unwrap().rank(), 1);
        assert!(parse_base("G2").is_err());
        assert!(parse_base("F").is_err());
    }

    #[test]
    fn class_expressions() {
        let s = parse_base("F2").unwrap();
        let c = parse_class(&s, "2Z + 4F").unwrap();
        assert_eq!(c.coords(), &[int(2), int(4)]);
        assert_eq!(parse_class(&s, "-K").unwrap(), c);
        let half = parse_class(&s, "1/2*Z - F").unwrap();
        assert_eq!(half.coords(), &[ratio(1, 2), int(-1)]);
        assert!(parse_class(&s, "2X").is_err());
        assert!(parse_class(&s, "").is_err());
        assert!(parse_class(&s, "3").is_err());
    }

    #[test]
    fn blow_ups_and_exceptional_names() {
        let s = build_surface("P2", &["H".into()]).unwrap();
        assert_eq!(s.basis_names(), ["H", "E1"]);
        assert_eq!(parse_class(&s, "H - E1").unwrap().coords(), &[int(1), int(-1)]);
        assert!(build_surface("P2", &["Q".into()]).is_err());
        let t = build_surface("F1", &["Z*F".into()]).unwrap();
        assert_eq!(t.rank(), 3);
    }

    #[test]
    fn curve_file() {
        let s = parse_base("F1").unwrap();
        let curves = parse_curves(&s, "# extra\nS = Z + F\n\nG=F # fiber\n").unwrap();
        assert_eq!(curves.len(), 2);
        assert_eq!(curves[0].label, "S");
        assert!(parse_curves(&s, "no equals sign").is_err());
    }

    #[test]
    fn boxes_and_ranges() {
        assert_eq!(parse_box("1").unwrap(), BoxBound::Unit);
        assert_eq!(parse_box("orthant").unwrap(), BoxBound::Orthant);
        assert_eq!(parse_box("3/2").unwrap(), BoxBound::Bound(ratio(3, 2)));
        assert!(parse_box("-1").is_err());
        assert_eq!(parse_range("0..3").unwrap(), (0, 3));
        assert_eq!(parse_range("2").unwrap(), (2, 2));
        assert!(parse_range("a..b").is_err());
        assert_eq!(parse_chain("Z + F"), ["Z", "F"]);
    }
}
