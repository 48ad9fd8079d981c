//! Line-oriented key=value input files describing surfaces and triples.
//!
//! ```text
//! case=tensor
//! m=1
//! n=1
//! x1=s*t+u*v
//! x2=s*v
//! x3=u*t
//! x4=s*v+u*t+u*v
//! ```
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::poly::SparsePoly;
use crate::surface::{ParamSurface, SurfaceKind};

fn parse_pairs(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(Error::Input(format!(
                "line {}: expected key=value, got `{}`",
                lineno + 1,
                line
            )));
        };
        let key = k.trim().to_string();
        if map.insert(key.clone(), v.trim().to_string()).is_some() {
            return Err(Error::Input(format!("duplicate key `{}`", key)));
        }
    }
    Ok(map)
}

fn take<'a>(map: &'a BTreeMap<String, String>, key: &str) -> Result<&'a str> {
    map.get(key)
        .map(|s| s.as_str())
        .ok_or_else(|| Error::Input(format!("missing key `{}`", key)))
}

fn parse_u32(map: &BTreeMap<String, String>, key: &str) -> Result<u32> {
    take(map, key)?
        .parse()
        .map_err(|_| Error::Input(format!("key `{}` is not a non-negative integer", key)))
}

pub fn parse_kind(map: &BTreeMap<String, String>) -> Result<SurfaceKind> {
    match take(map, "case")? {
        "tensor" => Ok(SurfaceKind::Tensor {
            m: parse_u32(map, "m")?,
            n: parse_u32(map, "n")?,
        }),
        "triangular" => Ok(SurfaceKind::Triangular {
            n: parse_u32(map, "n")?,
        }),
        other => Err(Error::Input(format!(
            "case must be `tensor` or `triangular`, got `{}`",
            other
        ))),
    }
}

/// Parses a full surface description (case, degrees, x1..x4).
pub fn parse_surface(text: &str) -> Result<ParamSurface> {
    let map = parse_pairs(text)?;
    let kind = parse_kind(&map)?;
    let vars = kind.vars();
    let mut coords = Vec::with_capacity(4);
    for key in ["x1", "x2", "x3", "x4"] {
        coords.push(parse_poly(take(&map, key)?, vars)?);
    }
    let x: [SparsePoly; 4] = coords.try_into().unwrap();
    ParamSurface::new(kind, x)
}

/// Parses a resultant input: case, degrees and x1..x3 (x4 is ignored when
/// present).
pub fn parse_triple(text: &str) -> Result<(SurfaceKind, [SparsePoly; 3])> {
    let map = parse_pairs(text)?;
    let kind = parse_kind(&map)?;
    let vars = kind.vars();
    let mut fs = Vec::with_capacity(3);
    for key in ["x1", "x2", "x3"] {
        let p = parse_poly(take(&map, key)?, vars)?;
        let ok = match kind {
            SurfaceKind::Tensor { m, n } => p.is_bihomogeneous(m, n),
            SurfaceKind::Triangular { n } => p.is_homogeneous(n) && !p.is_zero(),
        };
        if !ok {
            return Err(Error::Input(format!(
                "{} does not have the declared degree",
                key
            )));
        }
        fs.push(p);
    }
    Ok((kind, fs.try_into().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfaceKind;

    pub const BILINEAR_DEMO: &str =
        "case=tensor\nm=1\nn=1\nx1=s*t+u*v\nx2=s*v\nx3=u*t\nx4=s*v+u*t+u*v\n";
    pub const PLANAR_CUBIC: &str = "case=triangular\nn=3\nx1=s^3\nx2=t^3\nx3=u^3\nx4=s^3+t^3+u^3\n";

    #[test]
    fn parses_tensor_surface() {
        let s = parse_surface(BILINEAR_DEMO).unwrap();
        assert_eq!(s.kind(), SurfaceKind::Tensor { m: 1, n: 1 });
    }

    #[test]
    fn parses_triangular_surface() {
        let s = parse_surface(PLANAR_CUBIC).unwrap();
        assert_eq!(s.kind(), SurfaceKind::Triangular { n: 3 });
    }

    #[test]
    fn rejects_missing_key() {
        assert!(parse_surface("case=tensor\nm=1\nn=1\nx1=s*t\n").is_err());
    }

    #[test]
    fn rejects_bad_degree_declaration() {
        let text = "case=tensor\nm=2\nn=1\nx1=s*t+u*v\nx2=s*v\nx3=u*t\nx4=u*v\n";
        assert!(parse_surface(text).is_err());
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text = format!("# demo\n\n{}", BILINEAR_DEMO);
        assert!(parse_surface(&text).is_ok());
    }
}
